"""Exponential generating functions for the labeled structures behind the
permutahedron Ehrhart formulas, and the value-by-dimension assemblies.

The connected building blocks, with x marking labeled vertices:

    tree                   t_n = n^(n-2)
    pseudotree             connected, one cycle of length >= 3
    signed tree            st_n = 2^(n-1) n^(n-2)
    signed pseudotree      connected signed graph, one unbalanced cycle
    signed halfedge-tree   sh_n = (2n)^(n-1); also counts loop-trees

All formulas are algebraic expressions in the Lambert W series, evaluated
with exact rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List

from .series import RatSeries, lambert_w

SEQUENCE_KINDS = (
    "tree",
    "pseudotree",
    "signed_tree",
    "signed_pseudotree",
    "signed_halfedge_tree",
    "signed_loop_tree",
)

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class ComponentEgfs:
    """The five distinct component series (loop-trees share the halfedge
    series, since a loop-tree is a halfedge-tree with the halfedge doubled)."""

    tree: RatSeries
    pseudotree: RatSeries
    signed_tree: RatSeries
    signed_pseudotree: RatSeries
    signed_halfedge_tree: RatSeries

    def for_kind(self, kind: str) -> RatSeries:
        if kind not in SEQUENCE_KINDS:
            raise ValueError(f"unknown structure kind {kind!r}")
        if kind == "signed_loop_tree":
            return self.signed_halfedge_tree
        return getattr(self, kind)


@lru_cache(maxsize=None)
def component_egfs(order: int) -> ComponentEgfs:
    """All component series truncated at the given order."""
    if order < 1:
        raise ValueError("order must be at least 1")
    w = lambert_w(order)
    wm = w.scale_arg(-1)  # W(-x), with -W(-x) the rooted tree series
    w2 = w.scale_arg(-2)  # W(-2x)
    tree = -wm - _HALF * (wm * wm)
    pseudotree = _HALF * wm - _QUARTER * (wm * wm) - _HALF * wm.log1p()
    signed_tree = -_HALF * w2 - _QUARTER * (w2 * w2)
    signed_pseudotree = _QUARTER * (w2 - w2.log1p())
    signed_halfedge_tree = -_HALF * w2
    return ComponentEgfs(tree, pseudotree, signed_tree, signed_pseudotree, signed_halfedge_tree)


def _as_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer value, got {value}")
    return int(value)


def structure_counts(kind: str, nmax: int) -> List[int]:
    """Counts of connected structures on 1..nmax labeled vertices."""
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    series = component_egfs(nmax).for_kind(kind)
    return [_as_int(series.egf_value(n)) for n in range(1, nmax + 1)]


def _check_family_t(family: str, t: int) -> None:
    if family not in ("A", "B", "C", "D"):
        raise ValueError(f"unknown family {family!r}")
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"dilation factor must be a positive integer, got {t!r}")


def egf_ehrhart_values(family: str, t: int, nmax: int) -> List[int]:
    """Lattice point counts of the dilated integral permutahedra.

    Entry n (for n = 0..nmax) is the count for the family's integral
    permutahedron on n coordinates, dilated by t.  The whole list comes
    from one exponential of weighted component series: trees weigh 1/t per
    component (after substituting x -> t x), unbalanced pseudotrees weigh
    2, halfedge-trees weigh 1 (family B), loop-trees weigh 2 (family C).
    """
    _check_family_t(family, t)
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    comps = component_egfs(nmax)
    ts = Fraction(t)
    inv = 1 / ts
    if family == "A":
        exponent = inv * comps.tree.scale_arg(ts)
    else:
        exponent = 2 * comps.signed_pseudotree.scale_arg(ts) + inv * comps.signed_tree.scale_arg(ts)
        if family == "B":
            exponent = exponent + comps.signed_halfedge_tree.scale_arg(ts)
        elif family == "C":
            exponent = exponent + 2 * comps.signed_halfedge_tree.scale_arg(ts)
    series = exponent.exp()
    return [_as_int(series.egf_value(n)) for n in range(nmax + 1)]


def egf_ehrhart_standard_odd(family: str, t: int, nmax: int) -> List[int]:
    """Lattice point counts of odd dilates of the standard permutahedra in
    the half-integral cases (family B, and family A on even coordinate
    counts).

    Entry n is the count for n coordinates.  Restricting the tree series to
    even vertex counts implements the parity obstruction: a tree component
    with an odd vertex count pushes the half-integral shift off the lattice.
    For family A every structure is a forest of trees, so odd entries of
    the returned list are zero; only the even entries are meaningful.
    """
    _check_family_t(family, t)
    if t % 2 == 0:
        raise ValueError("this route only covers odd dilation factors")
    if family not in ("A", "B"):
        raise ValueError("families C and D are integral; the single constituent covers all t")
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    comps = component_egfs(nmax)
    ts = Fraction(t)
    inv = 1 / ts
    if family == "A":
        exponent = inv * comps.tree.even_part().scale_arg(ts)
    else:
        exponent = (
            2 * comps.signed_pseudotree.scale_arg(ts)
            + inv * comps.signed_tree.even_part().scale_arg(ts)
            + comps.signed_halfedge_tree.scale_arg(ts)
        )
    series = exponent.exp()
    return [_as_int(series.egf_value(n)) for n in range(nmax + 1)]
