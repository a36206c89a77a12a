"""Tests for quasipolynomials, subset enumeration, and the census routes."""

from fractions import Fraction

import pytest

from coxeter_ehrhart.ehrhart import (
    CENSUS_LIMITS,
    EnumerationLimitError,
    QuasiPolynomial,
    ZonotopeFormatError,
    ZonotopeSpec,
    coxeter_zonotope,
    ehrhart_almost_integral,
    ehrhart_integral_coxeter,
    ehrhart_standard_coxeter,
    forest_census,
    independent_subsets,
    parse_zonotope_document,
    load_zonotope_file,
)
from coxeter_ehrhart.roots import positive_roots


def test_independent_subsets_distinguishes_repeated_generators():
    subsets = list(independent_subsets([(1, 0), (1, 0)]))
    assert len(subsets) == 3  # empty set plus each copy alone
    assert subsets[0] == ()


def test_independent_subsets_of_rank_two_configuration():
    roots = positive_roots("B", 2).roots
    subsets = list(independent_subsets(roots))
    sizes = sorted(len(s) for s in subsets)
    # every pair of the four roots is independent, no triple can be
    assert sizes == [0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2]


def test_independent_subsets_empty_input():
    assert list(independent_subsets([], dim=2)) == [()]


def test_quasipolynomial_folding():
    qp = QuasiPolynomial.from_residue_polys([(1, 2), (1, 2, 0)])
    assert qp.period == 1
    assert qp.constituents == ((1, 2),)
    qp = QuasiPolynomial.from_residue_polys([(1,), (0, 1)])
    assert qp.period == 2
    qp = QuasiPolynomial.from_residue_polys([(1, 2), (0, 2), (0, 2), (1, 2), (0, 2), (0, 2)])
    assert qp.period == 3


def test_quasipolynomial_evaluation():
    qp = QuasiPolynomial.from_residue_polys([(1, 4, 7), (0, 2, 7)])
    assert qp.degree == 2
    assert qp.evaluate(1) == 9
    assert qp.evaluate(2) == 37
    assert qp.constituent_for(4) == (1, 4, 7)
    assert qp.constituent_for(7) == (0, 2, 7)
    with pytest.raises(ValueError):
        qp.evaluate(0)


def test_zonotope_spec_validation():
    with pytest.raises(ValueError):
        ZonotopeSpec.make([(0, 0)])
    with pytest.raises(ValueError):
        ZonotopeSpec.make([(1, 0), (1,)])
    with pytest.raises(ValueError):
        ZonotopeSpec.make([], dim=None)
    with pytest.raises(ValueError):
        ZonotopeSpec.make([(1, 0)], shift=(Fraction(1, 2),))
    spec = ZonotopeSpec.make([], dim=2)
    assert spec.dim == 2 and spec.shift == (0, 0)
    assert ZonotopeSpec.make([(1, 2)]).shift_denominator == 1
    assert ZonotopeSpec.make([(1, 2)], shift=("1/2", "2/3")).shift_denominator == 6


def test_segment_quasipolynomial():
    # one generator of length two, shifted by a third of a unit
    qp = ehrhart_almost_integral(ZonotopeSpec.make([(2,)], shift=("1/3",)))
    assert qp.period == 3
    assert qp.constituents == ((1, 2), (0, 2), (0, 2))
    assert [qp.evaluate(t) for t in (1, 2, 3, 4, 5, 6)] == [2, 4, 7, 8, 10, 13]


def test_integer_shift_behaves_like_no_shift():
    plain = ehrhart_almost_integral(ZonotopeSpec.make([(1, 0), (1, 2)]))
    moved = ehrhart_almost_integral(ZonotopeSpec.make([(1, 0), (1, 2)], shift=(5, -3)))
    assert plain == moved
    assert plain.period == 1
    assert plain.constituents == ((1, 2, 2),)


def test_lower_dimensional_zonotope():
    qp = ehrhart_almost_integral(ZonotopeSpec.make([(1, 1, 0), (0, 0, 2)]))
    assert qp.period == 1
    # the plane spanned by the generators carries a segment lattice count
    assert qp.constituents == ((1, 3, 2),)


def test_shifted_plane_zonotope():
    # the half-shift is along the span, so odd dilates lose the offset points
    qp = ehrhart_almost_integral(
        ZonotopeSpec.make([(1, 0), (0, 1), (1, 1)], shift=("1/2", 0))
    )
    assert qp.period == 2
    assert qp.constituents == ((1, 3, 3), (0, 1, 3))


def test_forest_census_totals():
    census = forest_census("A", 4)
    assert census.total == 38  # one point per forest at dilation one
    assert sum(v for k, v in census.counts.items() if k[0] == 3) == 16  # spanning trees
    census = forest_census("B", 2)
    assert census.total == 11


def test_forest_census_is_cached():
    assert forest_census("C", 3) is forest_census("C", 3)


def test_census_limit_guard():
    with pytest.raises(EnumerationLimitError):
        forest_census("B", CENSUS_LIMITS["B"] + 1)
    with pytest.raises(EnumerationLimitError):
        ehrhart_integral_coxeter("A", CENSUS_LIMITS["A"] + 1)


def test_integral_census_matches_reference_rows():
    expected = {
        ("A", 1): (1,),
        ("A", 2): (1, 1),
        ("A", 3): (1, 3, 3),
        ("A", 4): (1, 6, 15, 16),
        ("B", 1): (1, 1),
        ("B", 2): (1, 4, 7),
        ("B", 3): (1, 9, 39, 87),
        ("B", 4): (1, 16, 126, 608, 1553),
        ("C", 1): (1, 2),
        ("C", 2): (1, 6, 14),
        ("C", 3): (1, 12, 66, 172),
        ("C", 4): (1, 20, 192, 1080, 3036),
        ("D", 2): (1, 2, 2),
        ("D", 3): (1, 6, 18, 32),
        ("D", 4): (1, 12, 72, 280, 636),
    }
    for (family, n), coeffs in expected.items():
        qp = ehrhart_integral_coxeter(family, n)
        assert qp.period == 1
        assert qp.constituents == (coeffs,)


def test_standard_census_matches_reference_rows():
    expected = {
        ("A", 2): ((1, 1), (0, 1)),
        ("A", 4): ((1, 6, 15, 16), (0, 0, 3, 16)),
        ("B", 1): ((1, 1), (0, 1)),
        ("B", 2): ((1, 4, 7), (0, 2, 7)),
        ("B", 3): ((1, 9, 39, 87), (0, 0, 6, 87)),
        ("B", 4): ((1, 16, 126, 608, 1553), (0, 0, 12, 212, 1553)),
    }
    for (family, n), (even, odd) in expected.items():
        qp = ehrhart_standard_coxeter(family, n)
        assert qp.period == 2
        assert qp.constituents == (even, odd)


def test_standard_census_of_integral_families_has_period_one():
    for family, n in [("A", 3), ("C", 3), ("D", 3)]:
        qp = ehrhart_standard_coxeter(family, n)
        assert qp.period == 1
        assert qp == ehrhart_integral_coxeter(family, n)


def test_coxeter_zonotope_variants():
    std = coxeter_zonotope("B", 2, "standard")
    assert std.shift == (Fraction(1, 2), Fraction(1, 2))
    integral = coxeter_zonotope("B", 2, "integral")
    assert integral.shift == (0, 0)
    assert std.generators == integral.generators
    with pytest.raises(ValueError):
        coxeter_zonotope("B", 2, "centered")


def test_generic_route_agrees_with_census():
    for family in "ABCD":
        for n in range(1, 5):
            for variant in ("standard", "integral"):
                census = (
                    ehrhart_standard_coxeter(family, n)
                    if variant == "standard"
                    else ehrhart_integral_coxeter(family, n)
                )
                generic = ehrhart_almost_integral(coxeter_zonotope(family, n, variant))
                assert census == generic, (family, n, variant)


def test_period_matches_integrality():
    from coxeter_ehrhart.roots import is_integral

    for family in "ABCD":
        for n in range(1, 5):
            qp = ehrhart_standard_coxeter(family, n)
            assert qp.period == (1 if is_integral(family, n) else 2), (family, n)


def test_evaluations_are_monotone_nonnegative_integers():
    # both polytope variants contain the origin, so dilates nest
    for family in "ABCD":
        for n in range(1, 5):
            for qp in (ehrhart_standard_coxeter(family, n), ehrhart_integral_coxeter(family, n)):
                values = [qp.evaluate(t) for t in range(1, 8)]
                assert all(isinstance(v, int) and v >= 0 for v in values)
                assert all(a <= b for a, b in zip(values, values[1:])), (family, n)


def test_constituent_constant_terms():
    # the even class contains the empty subset, the odd class never does:
    # an isolated vertex is an odd tree component
    for family in "ABCD":
        for n in range(1, 5):
            qp = ehrhart_standard_coxeter(family, n)
            assert qp.constituents[0][0] == 1
            if qp.period == 2:
                assert qp.constituents[1][0] == 0


def test_parse_zonotope_document():
    spec = parse_zonotope_document('{"generators": [[1, 0], [0, 2]], "shift": ["1/2", 1]}')
    assert spec.generators == ((1, 0), (0, 2))
    assert spec.shift == (Fraction(1, 2), Fraction(1))
    spec = parse_zonotope_document('{"generators": [[3]]}')
    assert spec.shift == (0,)


def test_parse_zonotope_document_errors():
    cases = {
        "not json": "line 1",
        "[1, 2]": "object",
        '{"shift": [1]}': "generators",
        '{"generators": [[1, 0]], "extra": 1}': "extra",
        '{"generators": [[1, "x"]]}': "generators[0]",
        '{"generators": [[1, 0], [1]]}': "generators[1]",
        '{"generators": [[0, 0]]}': "generators[0]",
        '{"generators": [[1, 0]], "shift": [true, 0]}': "shift[0]",
        '{"generators": [[1, 0]], "shift": ["1/2"]}': "shift",
        '{"generators": [[1, 0]], "shift": ["x", 0]}': "shift[0]",
        '{"generators": []}': "generators",
    }
    for text, needle in cases.items():
        with pytest.raises(ZonotopeFormatError) as err:
            parse_zonotope_document(text)
        assert needle in str(err.value), text


def test_load_zonotope_file(tmp_path):
    path = tmp_path / "zono.json"
    path.write_text('{"generators": [[1, -1], [1, 1]], "shift": ["1/2", "1/2"]}')
    spec = load_zonotope_file(str(path))
    qp = ehrhart_almost_integral(spec)
    # both generators pair integrally with the half-half shift, the empty
    # subset does not, so only the constant term is parity-sensitive
    assert qp.period == 2
    assert qp.constituents == ((1, 2, 2), (0, 2, 2))


def test_generator_count_guard():
    generators = [(1, 0)] * 29
    with pytest.raises(EnumerationLimitError):
        ehrhart_almost_integral(ZonotopeSpec.make(generators))
