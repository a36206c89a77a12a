"""Positive roots and standard shifts of the classical reflection families.

Everything here is indexed by the number of ambient coordinates ``n``.
Family ``A`` on ``n`` coordinates is the rank ``n - 1`` system (its
permutahedron lives in a hyperplane), while families B, C and D on ``n``
coordinates have rank ``n``.  Reference tables that label type-A rows by
coordinate count follow the same convention; sources that index type A by
rank are off by one from ours.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from . import linalg
from .linalg import IntVector, RatVector

FAMILIES = ("A", "B", "C", "D")


def _check(family: str, n: int) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"coordinate count must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class PositiveRootSet:
    """Positive roots of one classical family on ``n`` coordinates.

    ``shift`` places the standard (origin-centered) permutahedron relative
    to the integral one: up to an integer translation, the standard
    permutahedron is ``shift`` plus the Minkowski sum of ``[0, root]``
    segments over ``roots``.
    """

    family: str
    n: int
    roots: Tuple[IntVector, ...]
    shift: RatVector

    @property
    def rank(self) -> int:
        return linalg.rank(self.roots, dim=self.n)


def standard_shift(family: str, n: int) -> RatVector:
    """Translation part of the standard permutahedron, reduced mod Z^n.

    Always either the zero vector or the all-halves vector: the halves show
    up exactly for family B and for family A on an even number of
    coordinates.
    """
    _check(family, n)
    if is_integral(family, n):
        return tuple(Fraction(0) for _ in range(n))
    return tuple(Fraction(1, 2) for _ in range(n))


def is_integral(family: str, n: int) -> bool:
    """Whether the standard permutahedron has integer vertices.

    True for C and D always, and for A exactly on an odd number of
    coordinates; false for B and for A on an even number of coordinates.
    """
    _check(family, n)
    if family == "A":
        return n % 2 == 1
    return family in ("C", "D")


def positive_roots(family: str, n: int) -> PositiveRootSet:
    """Positive roots, ordered by kind (differences, sums, singles/doubles)
    and within each kind lexicographically by the index pair (i, j)."""
    _check(family, n)

    def unit(i, scale=1):
        return tuple(scale if k == i else 0 for k in range(n))

    diffs = []
    sums = []
    for i in range(n):
        for j in range(i + 1, n):
            diffs.append(tuple(1 if k == i else (-1 if k == j else 0) for k in range(n)))
            sums.append(tuple(1 if k in (i, j) else 0 for k in range(n)))

    if family == "A":
        roots = diffs
    elif family == "B":
        roots = diffs + sums + [unit(i) for i in range(n)]
    elif family == "C":
        roots = diffs + sums + [unit(i, 2) for i in range(n)]
    else:
        roots = diffs + sums
    return PositiveRootSet(family, n, tuple(roots), standard_shift(family, n))


def table_label(family: str, n: int) -> str:
    """Row label used by the reference tables (coordinate-count indexed)."""
    _check(family, n)
    return f"{family}_{n}"


def rank_label(family: str, n: int) -> str:
    """Conventional rank-indexed name of the root system."""
    _check(family, n)
    if family == "A":
        return f"A_{n - 1}"
    return f"{family}_{n}"
