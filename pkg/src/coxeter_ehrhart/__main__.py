"""Allow ``python -m coxeter_ehrhart``."""

from .cli import entry

if __name__ == "__main__":
    entry()
