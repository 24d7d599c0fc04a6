"""
Integration tests that run the worked examples through every module that
can compute them and check the modules agree with each other
"""
from fractions import Fraction
import congruent_partitions.oracle as orc
import congruent_partitions.closed_forms as cf
import congruent_partitions.flag_cohomology as fc
import congruent_partitions.verifier as vf


def test_two_part_congruent_example():
    """
    a = (1, 3), d = 3, n = 10 by every route
    """
    assert orc.congruent_count((1, 3), 3, 10) == 3
    assert orc.series_coeffs((1, 3), 3, 10)[10] == 3
    assert sum(orc.weighted_profile((1, 3), 3, 10).values()) == 3
    assert cf.congruent_closed((1, 3), 3, 10) == 3
    assert cf.congruent_by_decomposition((1, 3), 3, 10) == 3
    assert cf.congruent_poly_part((1, 3), 3, 10) == Fraction(56, 27)
    assert cf.polynomial_part_by_decomposition((1, 3), 3, 10) == Fraction(56, 27)
    assert cf.constituent_average((1, 3), 3, 10) == Fraction(56, 27)
    assert orc.enumerate_solutions((1, 3), 3, 10) == [(1, 3), (7, 1), (10, 0)]


def test_ternary_cohomology_example():
    """
    p = 3, n = 9: totals agree, and the weighted closed form agrees with the
    oracle at every degree that carries cohomology
    """
    assert fc.h_total(3, 9, "enumeration") == 4
    assert fc.h_total(3, 9, "closed-form") == 4
    assert cf.dary_closed(3, 2, 9) == 4
    profile = fc.stable_profile(3, 9, "enumeration")
    assert profile.h == {1: 1, 2: 1, 5: 1, 6: 1}
    assert fc.format_poincare(fc.profile_coefficients(profile)) == "t + t^2 + t^5 + t^6"
    for j in (2, 5, 6):
        assert cf.counted_congruent_closed((1, 3, 9), 3, 9, j).value == profile.h[j]
    for j in (3, 4, 7, 8, 9):
        assert cf.counted_congruent_closed((1, 3, 9), 3, 9, j).value == 0


def test_binary_cohomology_example():
    """
    p = 2, n = 6: six binary partitions, counted three ways
    """
    assert fc.h_total(2, 6) == 6
    assert fc.binary_total_closed(6) == 6
    assert cf.dary_closed(2, 2, 6) == 6
    assert orc.denumerant((1, 2, 4), 6) == 6
    assert orc.congruent_count((1, 2, 4), 2, 6) == 6
    assert fc.stable_profile(2, 6).h == {2: 1, 3: 2, 4: 1, 5: 1, 6: 1}
    assert cf.counted_closed((1, 2, 4), 6, 3).value == 2


def test_binary_overcount_is_relaxed_count():
    """
    every overcount of the weighted closed form for (1, 2, 4) is exactly the
    relaxed count
    """
    for n in range(0, 20):
        profile = orc.weighted_profile((1, 2, 4), 2, n)
        for j in range(0, n + 1):
            formula = cf.counted_closed((1, 2, 4), n, j).value
            assert formula >= profile.get(j, 0)
            assert formula == orc.relaxed_count((1, 2, 4), n, j)


def test_d2_reduction():
    """
    with d = 2 every multiplicity is allowed
    """
    for parts in [(1, 2), (2, 3), (1, 2, 3)]:
        for n in range(0, 30):
            assert orc.congruent_count(parts, 2, n) == orc.denumerant(parts, n)
            assert cf.congruent_closed(parts, 2, n) == cf.popoviciu_general(parts, n)


def test_known_discrepancies_reproduce():
    """
    every pre-registered divergence still shows up, with the recorded class
    """
    cases = [
        ("counted-closed", {"parts": (1, 2), "n": 4, "j": 1}, 1, 0),
        ("counted-congruent-closed", {"parts": (1, 2), "d": 2, "n": 4, "j": 1}, 1, 0),
        ("counted-congruent-closed", {"parts": (1, 2, 4), "d": 2, "n": 6, "j": 2}, 2, 1),
        ("cohomology-closed", {"p": 2, "n": 6, "j": 2}, 2, 1),
    ]
    for name, params, formula, oracle in cases:
        record = vf.check_identity(name, params)
        assert record is not None
        assert (record.formula, record.oracle) == (formula, oracle)
        assert record.classification == vf.KNOWN


def test_large_n_exact():
    """
    counts stay exact integers far past float precision
    """
    n = 10 ** 6
    assert cf.popoviciu_general((1, 2), n) == n // 2 + 1
    value = cf.congruent_closed((1, 2, 3), 3, n)
    assert isinstance(value, int)
    assert value == cf.congruent_by_decomposition((1, 2, 3), 3, n)


COUNT_IDENTITIES = (
    "denumerant-closed",
    "congruent-closed",
    "congruent-decomposition",
    "series",
    "sum-over-j",
    "d2-reduction",
    "divisor-monotonicity",
    "quasi-period",
    "polynomial-part-average",
)


def test_count_identities_full_grid():
    """
    r in {2, 3}, distinct parts up to 6, d in {2, 3, 4}, n up to 120: no
    count-certified identity disagrees anywhere
    """
    config = vf.SweepConfig(
        r_min=2, r_max=3, max_part=6, d_values=(2, 3, 4), n_max=120,
        identities=COUNT_IDENTITIES,
    )
    report = vf.sweep(config)
    assert report.cases > 0
    assert report.records == ()
    assert report.status == "ok"


def test_dary_closed_full_grid():
    config = vf.SweepConfig(
        dary_d_values=(2, 3), k_values=(1, 2, 3), dary_n_max=200, identities=("dary-closed",)
    )
    report = vf.sweep(config)
    assert report.cases == 2 * 3 * 201
    assert report.records == ()


def test_weighted_forms_full_grid():
    """
    strictly increasing parts up to 6, d in {2, 3}, n up to 60, every j: the
    weighted closed forms never undercount, every overcount is explained, and
    both pre-registered overcounts show up
    """
    config = vf.SweepConfig(
        r_min=2, r_max=3, max_part=6, faithful_d_values=(2, 3), faithful_n_max=60,
        identities=("counted-closed", "counted-congruent-closed", "dary-counted-closed"),
    )
    report = vf.sweep(config)
    assert report.certified_failures == 0
    assert report.novel == 0
    assert all(record.gap > 0 for record in report.records)
    found = {(record.identity, record.params) for record in report.records}
    assert ("counted-congruent-closed", (("parts", (1, 2)), ("d", 2), ("n", 4), ("j", 1))) in found
    assert (
        "counted-congruent-closed", (("parts", (1, 2, 4)), ("d", 2), ("n", 6), ("j", 2))
    ) in found
    assert ("counted-closed", (("parts", (1, 2)), ("n", 4), ("j", 1))) in found
