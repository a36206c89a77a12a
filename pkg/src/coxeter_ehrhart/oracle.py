"""Brute-force ground truth, kept independent of the formula routes.

Membership in a dilated zonotope is decided from first principles (affine
hull plus facet inequalities), lattice points are counted by scanning a
bounding box, and small labeled structures are counted by direct
enumeration.  These are the oracles the closed-form routes are tested
against; none of them consult the Ehrhart formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import ceil, floor, lcm
from typing import Optional, Tuple

from .ehrhart import EnumerationLimitError, ZonotopeSpec
from .linalg import dot, int_vector, integer_kernel_basis, rank
from .signed_graphs import (
    SignedGraph,
    classify,
    halfedge,
    negative_edge,
    negative_loop,
    positive_edge,
)

DEFAULT_MAX_BOX = 10_000_000


class BoxLimitError(RuntimeError):
    """Raised when a bounding-box scan would visit too many points."""


@dataclass(frozen=True)
class MembershipCertificate:
    """Outcome of a point membership test.

    A negative verdict always carries a witness: the violated affine-hull
    functional, segment range, or facet inequality, together with the two
    sides of the failed comparison.
    """

    verdict: bool
    witness: Optional[Tuple] = None

    def __bool__(self) -> bool:
        return self.verdict


@lru_cache(maxsize=None)
def _geometry(zonotope: ZonotopeSpec):
    """Shift-independent facial data of the generator configuration.

    Returns ``(kernel, mode, data)`` where kernel is a saturated basis of
    the integer vectors orthogonal to all generators; mode is "point",
    "segment" (data: primitive direction and the integer multiples giving
    each generator), or "full" (data: deduplicated facet normals, each with
    its positive generator sum).
    """
    gens = zonotope.generators
    d = zonotope.dim
    kernel = tuple(integer_kernel_basis(gens, dim=d))
    r = rank(gens, dim=d)
    if r == 0:
        return kernel, "point", None
    if r == 1:
        direction = _primitive(gens[0])
        pivot = next(i for i, e in enumerate(direction) if e)
        multiples = tuple(g[pivot] // direction[pivot] for g in gens)
        return kernel, "segment", (direction, multiples)
    normals = {}
    for picked in combinations(range(len(gens)), r - 1):
        subset = [gens[i] for i in picked]
        if rank(subset, dim=d) != r - 1:
            continue
        line = integer_kernel_basis(list(subset) + list(kernel), dim=d)
        if len(line) != 1:
            raise AssertionError("hyperplane normal is not one-dimensional")
        normals[line[0]] = None
    oriented = []
    for h in normals:
        for sign in (1, -1):
            vec = tuple(sign * e for e in h)
            oriented.append((vec, sum(max(dot(vec, g), 0) for g in gens)))
    return kernel, "full", tuple(oriented)


def _primitive(vector):
    from math import gcd

    g = 0
    for e in vector:
        g = gcd(g, e)
    vec = [e // g for e in vector]
    lead = next(e for e in vec if e)
    if lead < 0:
        vec = [-e for e in vec]
    return tuple(vec)


def zonotope_contains(zonotope: ZonotopeSpec, t: int, point) -> MembershipCertificate:
    """Whether an integer point lies in the t-th dilate of the zonotope.

    The test is geometric: the point must lie on the affine hull (checked
    against the integer kernel of the generators) and satisfy every facet
    inequality ``<h, p - t*shift> <= t * sum_g max(<h, g>, 0)`` for the
    primitive normals h of hyperplanes spanned by (rank-1)-subsets of the
    generators, in both orientations.  Rank 0 and 1 degenerate to a point
    comparison and an interval check.
    """
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"dilation factor must be a positive integer, got {t!r}")
    p = int_vector(point)
    if len(p) != zonotope.dim:
        raise ValueError(f"point has dimension {len(p)}, expected {zonotope.dim}")
    kernel, mode, data = _geometry(zonotope)
    target = tuple(Fraction(a) - t * b for a, b in zip(p, zonotope.shift))
    for f in kernel:
        value = dot(f, target)
        if value != 0:
            return MembershipCertificate(False, ("affine-hull", f, value))
    if mode == "point":
        return MembershipCertificate(True)
    if mode == "segment":
        direction, multiples = data
        pivot = next(i for i, e in enumerate(direction) if e)
        coordinate = target[pivot] / direction[pivot]
        low = t * sum(min(m, 0) for m in multiples)
        high = t * sum(max(m, 0) for m in multiples)
        if not low <= coordinate <= high:
            return MembershipCertificate(False, ("segment-range", coordinate, low, high))
        return MembershipCertificate(True)
    for h, positive_sum in data:
        lhs = dot(h, target)
        rhs = t * positive_sum
        if lhs > rhs:
            return MembershipCertificate(False, ("facet", h, lhs, rhs))
    return MembershipCertificate(True)


def count_points(zonotope: ZonotopeSpec, t: int, max_box: int = DEFAULT_MAX_BOX) -> int:
    """Number of lattice points in the t-th dilate, by exhaustive scan.

    Every point of the dilate satisfies, coordinate by coordinate,
    ``t*shift_i + t*sum_g min(g_i, 0) <= x_i <= t*shift_i + t*sum_g
    max(g_i, 0)``, so scanning that box is exhaustive.  Aborts with
    :class:`BoxLimitError` when the box holds more than ``max_box`` points.
    """
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"dilation factor must be a positive integer, got {t!r}")
    ranges = []
    volume = 1
    for i in range(zonotope.dim):
        base = t * zonotope.shift[i]
        low = ceil(base + t * sum(min(g[i], 0) for g in zonotope.generators))
        high = floor(base + t * sum(max(g[i], 0) for g in zonotope.generators))
        if low > high:
            return 0
        ranges.append(range(low, high + 1))
        volume *= high - low + 1
        if volume > max_box:
            raise BoxLimitError(
                f"bounding box holds {volume}+ points, above the limit of {max_box}"
            )
    kernel, mode, data = _geometry(zonotope)
    # Integer-only fast path: scale the affine data by the denominator of
    # t*shift so the scan avoids Fraction arithmetic per point.
    den = lcm(*((t * s).denominator for s in zonotope.shift))
    shifted = tuple(int(den * t * s) for s in zonotope.shift)
    kernel_rhs = [(f, dot(f, shifted)) for f in kernel]
    count = 0
    if mode == "full":
        facet_rows = [(h, dot(h, shifted) + den * t * s) for h, s in data]
        for p in product(*ranges):
            ok = True
            for f, rhs in kernel_rhs:
                if den * dot(f, p) != rhs:
                    ok = False
                    break
            if ok:
                for h, bound in facet_rows:
                    if den * dot(h, p) > bound:
                        ok = False
                        break
            if ok:
                count += 1
        return count
    for p in product(*ranges):
        if zonotope_contains(zonotope, t, p):
            count += 1
    return count


UNSIGNED_STRUCTURE_MAX = 5
SIGNED_STRUCTURE_MAX = 4

STRUCTURE_KINDS = (
    "tree",
    "pseudotree",
    "signed_tree",
    "signed_pseudotree",
    "signed_halfedge_tree",
    "signed_loop_tree",
)


def brute_force_structures(kind: str, n: int) -> int:
    """Count connected structures on n labeled vertices by enumeration.

    Unsigned kinds ("tree": acyclic connected; "pseudotree": connected with
    exactly one cycle, necessarily of length >= 3 in a simple graph) range
    over plain graphs.  Signed kinds range over edge sets with both signs
    available (plus halfedges or negative loops where the kind calls for
    them) and go through the signed-graph classifier; a signed pseudotree
    requires its unique cycle to be unbalanced.  Only edge sets of the one
    feasible size are enumerated: n-1 items for trees, n items for the
    one-extra-feature kinds.
    """
    if kind not in STRUCTURE_KINDS:
        raise ValueError(f"unknown structure kind {kind!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    signed = kind.startswith("signed_")
    limit = SIGNED_STRUCTURE_MAX if signed else UNSIGNED_STRUCTURE_MAX
    if n > limit:
        raise EnumerationLimitError(
            f"brute-force enumeration of {kind} is limited to n <= {limit}"
        )
    pairs = list(combinations(range(1, n + 1), 2))
    if not signed:
        size = n - 1 if kind == "tree" else n
        count = 0
        for chosen in combinations(pairs, size):
            if _connected_and_unicyclic_ok(n, chosen, want_cycle=(kind == "pseudotree")):
                count += 1
        return count
    items = [positive_edge(i, j) for i, j in pairs] + [negative_edge(i, j) for i, j in pairs]
    if kind == "signed_halfedge_tree":
        items += [halfedge(v) for v in range(1, n + 1)]
    elif kind == "signed_loop_tree":
        items += [negative_loop(v) for v in range(1, n + 1)]
    size = n - 1 if kind == "signed_tree" else n
    wanted = {
        "signed_tree": lambda s: s.tc == 1 and s.hc == s.lc == s.pc == 0,
        "signed_halfedge_tree": lambda s: s.hc == 1 and s.tc == s.lc == s.pc == 0,
        "signed_loop_tree": lambda s: s.lc == 1 and s.tc == s.hc == s.pc == 0,
        "signed_pseudotree": lambda s: s.pc == 1 and s.tc == s.hc == s.lc == 0,
    }[kind]
    count = 0
    for chosen in combinations(items, size):
        stats = classify(SignedGraph(n, frozenset(chosen)))
        if stats is not None and wanted(stats):
            count += 1
    return count


def _connected_and_unicyclic_ok(n: int, edges, want_cycle: bool) -> bool:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cycles = 0
    components = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            cycles += 1
        else:
            parent[ru] = rv
            components -= 1
    if components != 1:
        return False
    return cycles == (1 if want_cycle else 0)
