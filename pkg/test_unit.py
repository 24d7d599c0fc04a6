"""
unit tests for the oracle, closed_forms, flag_cohomology and helper_functions
modules
"""
import ast
from fractions import Fraction
import pytest
import congruent_partitions.oracle as orc
import congruent_partitions.closed_forms as cf
import congruent_partitions.flag_cohomology as fc
import congruent_partitions.helper_functions as hf


def test_check_parts():
    """
    check_parts returns a tuple and rejects empty, zero, negative and
    non-integer parts
    """
    assert hf.check_parts([1, 3]) == (1, 3)
    with pytest.raises(ValueError):
        hf.check_parts([])
    with pytest.raises(ValueError):
        hf.check_parts([1, 0])
    with pytest.raises(ValueError):
        hf.check_parts([1, -2])
    with pytest.raises(ValueError):
        hf.check_parts([1, 2.5])
    with pytest.raises(ValueError):
        hf.check_parts([True, 2])


def test_check_modulus_and_prime():
    """
    moduli must be integers >= 2 and characteristics prime
    """
    assert hf.check_modulus(2) == 2
    with pytest.raises(ValueError):
        hf.check_modulus(1)
    assert hf.check_prime(5) == 5
    with pytest.raises(ValueError):
        hf.check_prime(4)
    with pytest.raises(ValueError):
        hf.check_prime(1)


def test_check_increasing():
    """
    the weighted closed forms need strictly increasing parts
    """
    assert hf.check_increasing((1, 3, 9)) == (1, 3, 9)
    with pytest.raises(ValueError):
        hf.check_increasing((3, 1))
    with pytest.raises(ValueError):
        hf.check_increasing((1, 1))


def test_log_floor():
    """
    integer floor of log_p n, 0 for n = 0
    """
    assert hf.log_floor(2, 0) == 0
    assert hf.log_floor(2, 1) == 0
    assert hf.log_floor(2, 6) == 2
    assert hf.log_floor(2, 8) == 3
    assert hf.log_floor(3, 9) == 2
    assert hf.log_floor(3, 26) == 2
    assert hf.log_floor(3, 27) == 3


def test_format_exact():
    assert hf.format_exact(3) == "3"
    assert hf.format_exact(Fraction(168, 81)) == "56/27"
    assert hf.format_exact(Fraction(6, 1)) == "6"
    assert hf.format_exact(Fraction(-3, 4)) == "-3/4"


def test_dary_parts():
    assert hf.dary_parts(3, 2) == (1, 3, 9)
    assert hf.dary_parts(2, 0) == (1,)


def test_weight():
    """
    weight of one coordinate is x - (d-2) floor(x/d)
    """
    assert orc.weight(0, 3) == 0
    assert orc.weight(1, 3) == 1
    assert orc.weight(3, 3) == 2
    assert orc.weight(9, 3) == 6
    assert orc.weight(6, 2) == 6


def test_allowed_multiplicities():
    assert orc.allowed_multiplicities(3, 10) == [0, 1, 3, 4, 6, 7, 9, 10]
    assert orc.allowed_multiplicities(2, 3) == [0, 1, 2, 3]
    assert orc.allowed_multiplicities(5, 0) == [0]


def test_denumerant():
    """
    unrestricted counts from the DP
    """
    assert orc.denumerant((1, 2), 4) == 3
    assert orc.denumerant((1, 2, 3), 6) == 7
    assert orc.denumerant((2, 3), 1) == 0
    assert orc.denumerant((1, 2), 0) == 1
    assert orc.denumerant((1, 2), -1) == 0


def test_congruent_count():
    """
    p_{a,d}(n) for the worked example and a few trivial values
    """
    assert orc.congruent_count((1, 3), 3, 10) == 3
    assert orc.congruent_count((3, 1), 3, 10) == 3
    assert orc.congruent_count((1, 3), 3, 0) == 1
    assert orc.congruent_count((1, 2), 2, 4) == 3
    assert orc.congruent_count((1, 3), 3, -2) == 0
    with pytest.raises(ValueError):
        orc.congruent_count((1, 3), 1, 5)


def test_enumerate_solutions():
    """
    every solution, lexicographic, and consistent with the count
    """
    assert orc.enumerate_solutions((1, 3), 3, 10) == [(1, 3), (7, 1), (10, 0)]
    assert orc.enumerate_solutions((1, 3), 3, 0) == [(0, 0)]
    assert orc.enumerate_solutions((2,), 3, 5) == []
    for n in range(0, 30):
        assert len(orc.enumerate_solutions((1, 2, 4), 3, n)) == orc.congruent_count(
            (1, 2, 4), 3, n
        )
    with pytest.raises(ValueError):
        orc.enumerate_solutions((1, 3), 3, -1)


def test_series_coeffs():
    """
    coefficients of the rational generating function
    """
    assert orc.series_coeffs((1, 2), 2, 4) == [1, 1, 2, 2, 3]
    assert orc.series_coeffs((1, 3), 3, 10)[-1] == 3
    assert orc.series_coeffs((5, 7), 4, 0) == [1]
    with pytest.raises(ValueError):
        orc.series_coeffs((1, 2), 2, -1)


def test_weighted_profile():
    """
    splitting the count by weight
    """
    assert orc.weighted_profile((1, 3, 9), 3, 9) == {1: 1, 2: 1, 5: 1, 6: 1}
    assert orc.weighted_profile((1, 2, 4), 2, 6) == {2: 1, 3: 2, 4: 1, 5: 1, 6: 1}
    assert orc.weighted_profile((1, 2), 3, 0) == {0: 1}
    assert orc.weighted_profile((1, 2), 3, -1) == {}


def test_relaxed_counts():
    """
    relaxed counts let the first coordinate go negative
    """
    assert orc.relaxed_count((1, 2), 4, 1) == 1
    assert orc.relaxed_count((1, 2, 4), 6, 3) == 2
    assert orc.relaxed_weighted_count((1, 3, 9), 3, 9, 0) == 1
    assert orc.relaxed_weighted_count((1, 3, 9), 3, 9, 1) == 2
    assert orc.relaxed_weighted_count((1, 2), 3, 0, 0) == 2
    with pytest.raises(ValueError):
        orc.relaxed_count((2, 1), 4, 1)


def test_popoviciu_general():
    """
    denumerant closed form, including the window of negative n
    """
    assert cf.popoviciu_general((1, 2, 3), 6) == 7
    assert cf.popoviciu_general((1, 2), 4) == 3
    assert cf.popoviciu_general((2, 3), 1) == 0
    assert cf.popoviciu_general((1, 2), -1) == 0
    with pytest.raises(ValueError):
        cf.popoviciu_general((1, 2), -3)
    with pytest.raises(ValueError):
        cf.popoviciu_general((4,), 8)


def test_polynomial_part():
    """
    polynomial part of the denumerant of (1, 2) is n/2 + 3/4
    """
    assert cf.polynomial_part((1, 2), 4) == Fraction(11, 4)
    assert cf.polynomial_part((1, 2), 0) == Fraction(3, 4)
    assert cf.polynomial_part((1, 1), 5) == 6


def test_congruent_closed_forms():
    """
    closed form, decomposition and polynomial part on the worked example
    """
    assert cf.congruent_closed((1, 3), 3, 10) == 3
    assert cf.congruent_by_decomposition((1, 3), 3, 10) == 3
    assert cf.congruent_poly_part((1, 3), 3, 10) == Fraction(56, 27)
    assert cf.congruent_poly_part_unreduced((1, 3), 3, 10) == (168, 81)
    assert cf.congruent_poly_part((1, 1), 2, 5) == 6
    assert cf.congruent_closed((1, 3), 3, 0) == 1
    with pytest.raises(ValueError):
        cf.congruent_closed((1, 3), 3, -1)


def test_lcm_helpers():
    assert cf.lcm_parts((2, 3)) == 6
    assert cf.lcm_scaled((1, 3), 3) == 9
    assert cf.lcm_shifted((1, 3, 9)) == 8
    assert cf.lcm_shifted((1, 3, 9), 3) == 24


def test_residue_class_sum():
    """
    the bucket of n's own residue is the count, and all buckets together
    are D(d) times the polynomial part
    """
    assert cf.residue_class_sum((1, 3), 3, 10, 10) == 3
    total = sum(cf.residue_class_sum((1, 3), 3, 10, c) for c in range(9))
    assert total == 9 * Fraction(56, 27)


def test_quasi_polynomial():
    """
    floor(n/2) + 1 has constituents n/2 + 1 and n/2 + 1/2
    """
    constituents = cf.quasi_polynomial((1, 2), 2)
    assert len(constituents) == 4
    assert constituents[0] == [Fraction(1), Fraction(1, 2)]
    assert constituents[1] == [Fraction(1, 2), Fraction(1, 2)]
    assert cf.constituent_average((1, 2), 2, 4) == Fraction(11, 4)


def test_dary_closed():
    """
    d-ary closed form against known counts
    """
    assert cf.dary_closed(3, 2, 9) == 4
    assert cf.dary_closed(2, 2, 6) == 6
    assert cf.dary_poly_part(2, 1, 4) == Fraction(11, 4)
    assert cf.dary_poly_part(3, 2, 9) == cf.congruent_poly_part((1, 3, 9), 3, 9)
    with pytest.raises(ValueError):
        cf.dary_closed(3, 0, 9)


def test_counted_closed():
    """
    weighted count by number of parts; exact when x_1 stays nonnegative and
    an overcount when it does not
    """
    result = cf.counted_closed((1, 2, 4), 6, 3)
    assert result.value == 2
    assert result.exactness == hf.AS_PRINTED
    assert result.note == hf.COUNTED_NOTE
    assert cf.counted_closed((1, 2), 4, 1).value == 1
    assert cf.counted_closed((1, 2, 4), 6, 0).value == 3
    with pytest.raises(ValueError):
        cf.counted_closed((2, 1), 4, 1)


def test_counted_congruent_closed():
    """
    the weighted congruent closed form overcounts exactly at j = 0 and j = 1
    for the (1, 3, 9) example
    """
    values = {
        j: cf.counted_congruent_closed((1, 3, 9), 3, 9, j).value for j in range(0, 10)
    }
    assert {j: v for j, v in values.items() if v} == {0: 1, 1: 2, 2: 1, 5: 1, 6: 1}
    assert cf.counted_congruent_closed((1, 2), 3, 0, 0).value == 2
    assert cf.counted_congruent_closed((1, 2), 2, 0, 0).value == 1


def test_dary_counted_closed():
    """
    the d-ary weighted form matches the general weighted form
    """
    for j in range(0, 10):
        assert (
            cf.dary_counted_closed(3, 2, 9, j).value
            == cf.counted_congruent_closed((1, 3, 9), 3, 9, j).value
        )
    assert cf.dary_counted_closed(3, 1, 4, 2).value == cf.counted_congruent_closed(
        (1, 3), 3, 4, 2
    ).value


def test_ap_set_and_phi():
    """
    A_{3,9} and its degrees
    """
    assert fc.ap_set(3, 9) == [(0, 0, 1), (0, 3, 0), (6, 1, 0), (9, 0, 0)]
    assert sorted(fc.phi(3, a) for a in fc.ap_set(3, 9)) == [1, 2, 5, 6]
    assert fc.ap_set(2, 0) == [(0,)]


def test_stable_profile():
    """
    enumeration profiles and the closed-form profile for p = 2, n = 6
    """
    assert fc.stable_profile(3, 9).h == {1: 1, 2: 1, 5: 1, 6: 1}
    assert fc.stable_profile(2, 6).h == {2: 1, 3: 2, 4: 1, 5: 1, 6: 1}
    assert fc.stable_profile(2, 0).h == {0: 1}

    closed = fc.stable_profile(2, 6, "closed-form")
    assert closed.h == {1: 2, 2: 2, 3: 2, 4: 1, 5: 1, 6: 1}
    assert closed.as_printed
    assert closed.notes

    assert fc.stable_profile(5, 1, "closed-form").h == {1: 1}
    assert fc.stable_profile(5, 3, "closed-form").h == {}
    with pytest.raises(ValueError):
        fc.stable_profile(4, 6)
    with pytest.raises(ValueError):
        fc.stable_profile(2, 6, "guess")


def test_h_total():
    """
    totals agree between enumeration and closed form
    """
    assert fc.h_total(3, 9) == 4
    assert fc.h_total(3, 9, "closed-form") == 4
    assert fc.h_total(2, 6) == 6
    assert fc.h_total(2, 6, "closed-form") == 6
    assert fc.h_total(5, 3, "closed-form") == 0
    assert fc.h_total(5, 1, "closed-form") == 1


def test_binary_total_closed():
    assert fc.binary_total_closed(0) == 1
    assert fc.binary_total_closed(1) == 1
    assert fc.binary_total_closed(2) == 2
    assert fc.binary_total_closed(6) == 6
    assert fc.binary_total_closed(10) == 14


def test_poincare():
    """
    rendering of Poincare polynomials
    """
    assert fc.poincare_polynomial(3, 9) == [0, 1, 1, 0, 0, 1, 1]
    assert fc.format_poincare(fc.poincare_polynomial(3, 9)) == "t + t^2 + t^5 + t^6"
    assert fc.format_poincare(fc.poincare_polynomial(2, 0)) == "1"
    assert fc.format_poincare([0, 0, 0, 2]) == "2t^3"
    assert fc.format_poincare([0]) == "0"


def _imported_modules(path):
    with open(path, "r") as source:
        tree = ast.parse(source.read())
    modules = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.Import):
            modules.update(alias.name for alias in node.names)
        elif isinstance(node, ast.ImportFrom) and node.module:
            modules.add(node.module)
    return modules


def test_oracle_and_closed_forms_independent():
    """
    the oracle and the closed forms never import each other
    """
    assert "congruent_partitions.closed_forms" not in _imported_modules(
        "congruent_partitions/oracle.py"
    )
    assert "congruent_partitions.oracle" not in _imported_modules(
        "congruent_partitions/closed_forms.py"
    )


def test_resolve_identity():
    """
    short ids map onto the registered identities, unknown names raise
    """
    assert hf.resolve_identity("congruent-closed") == "congruent-closed"
    assert hf.resolve_identity("prop2.2") == "congruent-decomposition"
    assert hf.resolve_identity("prop2.1-series") == "series"
    assert hf.resolve_identity("thm3.3") == "cohomology-closed"
    assert set(hf.IDENTITY_ALIASES.values()) <= set(hf.IDENTITY_DICT)
    with pytest.raises(KeyError):
        hf.resolve_identity("thm9.9")


def test_row_block():
    assert hf.row_block(0) == 64
    assert hf.row_block(64) == 64
    assert hf.row_block(65) == 128
    assert hf.row_block(5000) == 5056


def test_weighted_table_width():
    """
    the weight axis stops at the largest weight a row can carry, and long
    profiles still sum to the congruent count
    """
    assert orc._max_weight((1, 3), 2, 64) == 64
    assert orc._max_weight((1, 3), 3, 64) == 2 * 64 // 3 + 2
    assert orc._max_weight((2, 3), 4, 64) == 2 * 64 // 8 + 2
    profile = orc.weighted_profile((1, 3), 3, 1000)
    assert sum(profile.values()) == orc.congruent_count((1, 3), 3, 1000)
    assert max(profile) <= orc._max_weight((1, 3), 3, 1000)
    assert orc.weighted_profile((1, 2), 2, 300) == {
        j: 1 for j in range(150, 301)
    }


def test_phi_is_summed_weight():
    for a in fc.ap_set(3, 30):
        assert fc.phi(3, a) == sum(orc.weight(a_i, 3) for a_i in a)
