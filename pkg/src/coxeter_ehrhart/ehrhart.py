"""Ehrhart quasipolynomials of integer zonotopes with rational shifts.

Two formula routes live here.  The generic route works for any
almost-integral zonotope: sum, over linearly independent subsets W of the
generators, of ``vol(W) * t^|W|`` gated by whether the shifted span of W
meets the lattice at dilation t.  The census route is specific to the
classical permutahedra: it tabulates the signed-graph forest census of the
positive roots and reads the coefficients off the component counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .linalg import (
    IntegerEchelon,
    IntVector,
    RatVector,
    common_dim,
    dot,
    int_vector,
    integer_kernel_basis,
    rat_vector,
    relative_volume,
)
from .roots import is_integral, positive_roots
from .signed_graphs import classify, graph_from_roots


class EnumerationLimitError(RuntimeError):
    """Raised when an exhaustive enumeration would be infeasibly large."""


# Hard ceilings for the subset-enumeration routes.  The EGF route covers
# larger instances; these only gate the exhaustive ones.
CENSUS_LIMITS = {"A": 8, "B": 7, "C": 7, "D": 7}
GENERIC_GENERATOR_LIMIT = 28


@dataclass(frozen=True)
class ZonotopeSpec:
    """An integer zonotope translated by a rational shift.

    The body is ``shift + sum of [0, g] over generators``.  Generators form
    a multiset: a repeated generator lengthens the corresponding segment and
    is counted separately by the subset enumeration.
    """

    generators: Tuple[IntVector, ...]
    shift: RatVector
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(int_vector(g) for g in self.generators))
        object.__setattr__(self, "shift", rat_vector(self.shift))
        if self.dim < 1:
            raise ValueError("ambient dimension must be positive")
        if len(self.shift) != self.dim:
            raise ValueError(f"shift has dimension {len(self.shift)}, expected {self.dim}")
        for g in self.generators:
            if len(g) != self.dim:
                raise ValueError(f"generator {g} has dimension {len(g)}, expected {self.dim}")
            if not any(g):
                raise ValueError("zero generators are not allowed")

    @staticmethod
    def make(generators: Sequence[Sequence[int]], shift=None, dim: Optional[int] = None) -> "ZonotopeSpec":
        gens = tuple(int_vector(g) for g in generators)
        if dim is None:
            if gens:
                dim = len(gens[0])
            elif shift is not None:
                dim = len(tuple(shift))
            else:
                raise ValueError("dimension is required when generators and shift are both absent")
        if shift is None:
            shift = (Fraction(0),) * dim
        return ZonotopeSpec(gens, rat_vector(shift), dim)

    @property
    def shift_denominator(self) -> int:
        return lcm(*(f.denominator for f in self.shift)) if self.shift else 1


@dataclass(frozen=True)
class QuasiPolynomial:
    """A quasipolynomial with minimal integer period.

    ``constituents[r]`` is the coefficient tuple (ascending powers) that
    applies to arguments ``t ≡ r (mod period)``; the representative of the
    residue class 0 is t = period, so every constituent describes positive
    dilations.  All constituents are padded to a common length.
    """

    period: int
    constituents: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.period < 1 or len(self.constituents) != self.period:
            raise ValueError("constituent count must equal the period")

    @staticmethod
    def from_residue_polys(polys: Sequence[Sequence[int]]) -> "QuasiPolynomial":
        """Build from one coefficient list per residue class, minimizing the
        period by folding equal constituents."""
        length = max(1, max(_trimmed_len(p) for p in polys))
        padded = [tuple(p) + (0,) * (length - len(p)) if len(p) < length else tuple(p[:length]) for p in polys]
        c = len(padded)
        for p in sorted(_divisors(c)):
            if all(padded[r] == padded[r % p] for r in range(c)):
                return QuasiPolynomial(p, tuple(padded[:p]))
        raise AssertionError("unreachable: the full period always folds")

    @property
    def degree(self) -> int:
        return len(self.constituents[0]) - 1

    def constituent_for(self, t: int) -> Tuple[int, ...]:
        if not isinstance(t, int) or t < 1:
            raise ValueError(f"dilation factor must be a positive integer, got {t!r}")
        return self.constituents[t % self.period]

    def evaluate(self, t: int) -> int:
        coeffs = self.constituent_for(t)
        value = 0
        power = 1
        for c in coeffs:
            value += c * power
            power *= t
        return value


def _trimmed_len(coeffs: Sequence[int]) -> int:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return n


def _divisors(n: int) -> List[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def independent_subsets(generators: Sequence[Sequence[int]], dim: Optional[int] = None) -> Iterator[Tuple[IntVector, ...]]:
    """All linearly independent subsets of a generator multiset, the empty
    set included, in depth-first order of ascending generator index.

    Repeated generators are treated as distinct members, so each copy shows
    up in its own singleton (two parallel copies never appear together,
    being dependent).
    """
    gens = [int_vector(g) for g in generators]
    if not gens:
        yield ()
        return
    d = common_dim(gens, dim)

    def walk(start: int, chosen: List[IntVector], echelon: IntegerEchelon):
        yield tuple(chosen)
        for i in range(start, len(gens)):
            extended = echelon.try_add(gens[i])
            if extended is not None:
                chosen.append(gens[i])
                yield from walk(i + 1, chosen, extended)
                chosen.pop()

    yield from walk(0, [], IntegerEchelon(d))


def ehrhart_almost_integral(zonotope: ZonotopeSpec) -> QuasiPolynomial:
    """Ehrhart quasipolynomial of a shifted integer zonotope.

    Each independent generator subset W contributes ``vol(W) * t^|W|`` to
    the constituents of exactly those residue classes where the dilated
    shift keeps the affine span of W on the lattice.  The lattice test uses
    the saturated integer kernel of W: the flat ``t*shift + span(W)`` meets
    Z^d exactly when every kernel basis vector pairs integrally with
    ``t*shift``, and the pairing only matters mod 1.
    """
    if len(zonotope.generators) > GENERIC_GENERATOR_LIMIT:
        raise EnumerationLimitError(
            f"{len(zonotope.generators)} generators exceed the subset-enumeration "
            f"limit of {GENERIC_GENERATOR_LIMIT}"
        )
    d = zonotope.dim
    c = zonotope.shift_denominator
    reps = [c if r == 0 else r for r in range(c)]
    coeffs = [[0] * (d + 1) for _ in range(c)]
    flag_cache: Dict[Tuple[Fraction, ...], Tuple[int, ...]] = {}
    for subset in independent_subsets(zonotope.generators, dim=d):
        size = len(subset)
        volume = relative_volume(subset) if subset else 1
        if c == 1:
            coeffs[0][size] += volume
            continue
        kernel = integer_kernel_basis(subset, dim=d)
        pairings = tuple(dot(f, zonotope.shift) % 1 for f in kernel)
        flags = flag_cache.get(pairings)
        if flags is None:
            flags = tuple(
                1 if all((t * p).denominator == 1 for p in pairings) else 0 for t in reps
            )
            flag_cache[pairings] = flags
        for r, flag in enumerate(flags):
            if flag:
                coeffs[r][size] += volume
    return QuasiPolynomial.from_residue_polys(coeffs)


@dataclass(frozen=True)
class ForestCensus:
    """Counts of forest shapes among independent subsets of positive roots.

    Keys are ``(edge_count, tc, hc, lc, pc, all_trees_even)`` tuples as
    produced by the signed-graph classifier.
    """

    family: str
    n: int
    counts: Mapping[Tuple[int, int, int, int, int, bool], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@lru_cache(maxsize=None)
def forest_census(family: str, n: int) -> ForestCensus:
    """Classify every independent subset of the family's positive roots."""
    limit = CENSUS_LIMITS.get(family, 0)
    rs = positive_roots(family, n)
    if n > limit:
        raise EnumerationLimitError(
            f"family {family} on {n} coordinates exceeds the enumeration limit ({limit})"
        )
    counts: Dict[Tuple[int, int, int, int, int, bool], int] = {}
    for subset in independent_subsets(rs.roots, dim=n):
        stats = classify(graph_from_roots(subset, n))
        if stats is None:
            raise RuntimeError("independent root subset did not encode a pseudoforest")
        key = (stats.edge_count, stats.tc, stats.hc, stats.lc, stats.pc, stats.all_trees_even)
        counts[key] = counts.get(key, 0) + 1
    return ForestCensus(family, n, counts)


def ehrhart_integral_coxeter(family: str, n: int) -> QuasiPolynomial:
    """Ehrhart polynomial of the integral permutahedron on n coordinates.

    Every forest contributes ``2^(pseudotree+looptree components)`` at
    ``t^(n - tree components)``.
    """
    census = forest_census(family, n)
    coeffs = [0] * (n + 1)
    for (_, tc, _, lc, pc, _), count in census.counts.items():
        coeffs[n - tc] += count * 2 ** (pc + lc)
    return QuasiPolynomial.from_residue_polys([coeffs])


def ehrhart_standard_coxeter(family: str, n: int) -> QuasiPolynomial:
    """Ehrhart quasipolynomial of the standard permutahedron on n
    coordinates.

    Integral cases coincide with the integral permutahedron.  In the
    half-integral cases (family B, family A on even n) the period is 2:
    even dilations see every forest with weight ``2^pc``, odd dilations
    only the forests all of whose tree components have an even vertex
    count.
    """
    if is_integral(family, n):
        return ehrhart_integral_coxeter(family, n)
    census = forest_census(family, n)
    even = [0] * (n + 1)
    odd = [0] * (n + 1)
    for (_, tc, _, _, pc, trees_even), count in census.counts.items():
        weight = count * 2**pc
        even[n - tc] += weight
        if trees_even:
            odd[n - tc] += weight
    return QuasiPolynomial.from_residue_polys([even, odd])


def coxeter_zonotope(family: str, n: int, variant: str = "standard") -> ZonotopeSpec:
    """The permutahedron as a shifted zonotope (up to a lattice translation)."""
    rs = positive_roots(family, n)
    if variant == "standard":
        shift = rs.shift
    elif variant == "integral":
        shift = (Fraction(0),) * n
    else:
        raise ValueError(f"unknown variant {variant!r}; expected 'standard' or 'integral'")
    return ZonotopeSpec(rs.roots, shift, n)


class ZonotopeFormatError(ValueError):
    """Raised for malformed zonotope input documents."""


def parse_zonotope_document(text: str) -> ZonotopeSpec:
    """Parse a zonotope description.

    The document is JSON with a required ``generators`` field (list of
    integer vectors) and an optional ``shift`` field (list of rationals
    written as strings like ``"1/2"``, or integers); a missing shift means
    the origin.  Rationals are reduced on read, so ``"2/4"`` is accepted.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ZonotopeFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ZonotopeFormatError("top level must be an object")
    unknown = set(doc) - {"generators", "shift"}
    if unknown:
        raise ZonotopeFormatError(f"unknown fields: {', '.join(sorted(unknown))}")
    if "generators" not in doc:
        raise ZonotopeFormatError("missing required field 'generators'")
    raw_gens = doc["generators"]
    if not isinstance(raw_gens, list):
        raise ZonotopeFormatError("'generators' must be a list of integer vectors")
    generators = []
    for idx, raw in enumerate(raw_gens):
        if not isinstance(raw, list) or not raw:
            raise ZonotopeFormatError(f"generators[{idx}]: expected a non-empty list")
        if generators and len(raw) != len(generators[0]):
            raise ZonotopeFormatError(
                f"generators[{idx}]: expected {len(generators[0])} entries, got {len(raw)}"
            )
        try:
            vec = int_vector(raw)
        except (ValueError, TypeError) as exc:
            raise ZonotopeFormatError(f"generators[{idx}]: {exc}") from exc
        if not any(vec):
            raise ZonotopeFormatError(f"generators[{idx}]: the zero vector is not a generator")
        generators.append(vec)
    shift = None
    if "shift" in doc:
        raw_shift = doc["shift"]
        if not isinstance(raw_shift, list):
            raise ZonotopeFormatError("'shift' must be a list of rationals")
        shift = []
        for idx, raw in enumerate(raw_shift):
            if isinstance(raw, bool) or not isinstance(raw, (str, int)):
                raise ZonotopeFormatError(f"shift[{idx}]: expected an integer or a 'p/q' string")
            try:
                shift.append(Fraction(raw))
            except (ValueError, ZeroDivisionError) as exc:
                raise ZonotopeFormatError(f"shift[{idx}]: {exc}") from exc
    try:
        return ZonotopeSpec.make(generators, shift)
    except ValueError as exc:
        raise ZonotopeFormatError(str(exc)) from exc


def load_zonotope_file(path) -> ZonotopeSpec:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_zonotope_document(handle.read())
