"""Sidon sequences, exhaustive search, decoupling certification.

The frozen N(k) row below was verified by hand for small k (e.g. no
4-element set fits in {1..6} because 6 distinct differences need span 6,
and {1,2,5,7} works at k = 7) and the k = 12 entry matches the witness
(1,2,5,10,12). The decoupling tests exercise the genuinely independent
route: interval arithmetic on Minkowski sums versus integer sum
collisions.
"""

import pytest
from hypothesis import given, settings, strategies as st

from fiberband.bands import OverlappingIntervals, make_bandset
from fiberband.planner import (
    BRUTE_FORCE_BUDGET,
    BudgetExceeded,
    NotIncreasing,
    SidonSequence,
    bose_sequence,
    brute_force_max_sidon,
    check_erdos_bound,
    decoupling_witness_bands,
    densest_sidon,
    erdos_bound,
    is_energy_decoupled,
    is_r_sidon,
    is_sidon,
    max_sidon_table,
    next_prime_power,
    plan_channels,
    sidon_for_channels,
    spectral_filling_efficiency,
)

BOSE_11 = (1, 6, 22, 62, 68, 69, 71, 88, 99, 103, 113)


def test_is_sidon_by_hand():
    assert is_sidon((1, 2, 5, 10, 12))
    assert not is_sidon((1, 2, 3))  # 1 + 3 = 2 + 2
    assert is_sidon((1, 2))
    assert is_sidon((3,))
    with pytest.raises(NotIncreasing):
        is_sidon((2, 1))
    with pytest.raises(ValueError):
        is_sidon((0.5, 1.5))


def test_is_r_sidon_gap():
    # sums of (1,2,5): 2,3,4,6,7,10 -> smallest gap is 1
    assert is_r_sidon((1.0, 2.0, 5.0), min_gap=1.0)
    assert not is_r_sidon((1.0, 2.0, 5.0), min_gap=1.5)
    assert is_r_sidon((0.5, 1.7, 4.9), min_gap=0.2)


@settings(max_examples=60)
@given(st.lists(st.integers(1, 60), min_size=1, max_size=6, unique=True))
def test_integer_sidon_iff_unit_gap_r_sidon(vals):
    vals = tuple(sorted(vals))
    assert is_sidon(vals) == is_r_sidon(vals, min_gap=1.0)


def test_sequence_validation():
    with pytest.raises(NotIncreasing):
        SidonSequence((1, 1, 2))
    with pytest.raises(NotIncreasing):
        SidonSequence(())
    with pytest.raises(NotIncreasing):
        SidonSequence((0, 1))
    assert len(SidonSequence((1, 4))) == 2


def test_bose_reference_sequence():
    assert bose_sequence(11).values == BOSE_11
    assert bose_sequence(2).values == (1, 2)
    # explicit tower arguments reproduce the default
    assert bose_sequence(11, modulus=(7, 1), theta=(0, 1)).values == BOSE_11


def test_bose_small_prime_powers():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 31):
        seq = bose_sequence(q)
        assert is_sidon(seq)
        assert len(seq) == q
        assert max(seq.values) <= q * q - 1


def test_next_prime_power_and_truncation():
    assert next_prime_power(5) == 5
    assert next_prime_power(6) == 7
    assert next_prime_power(32) == 32
    assert next_prime_power(60) == 61
    five = sidon_for_channels(5)
    assert is_sidon(five) and len(five) == 5
    six = sidon_for_channels(6)  # Bose(7) truncated; prefixes stay Sidon
    assert is_sidon(six) and len(six) == 6
    assert sidon_for_channels(1).values == (1,)


def test_brute_force_small_table():
    expected = (1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 5)
    table = max_sidon_table(12)
    assert tuple(n for n, _ in table) == expected
    for k, (n, witness) in enumerate(table, start=1):
        assert len(witness) == n
        assert witness[0] == 1 and witness[-1] <= k
        assert is_sidon(witness)
    assert brute_force_max_sidon(12) == (5, (1, 2, 5, 10, 12))
    with pytest.raises(ValueError):
        brute_force_max_sidon(0)
    with pytest.raises(BudgetExceeded):
        max_sidon_table(BRUTE_FORCE_BUDGET + 1)


def test_densest_sidon():
    assert densest_sidon(4).values == (1, 2, 5, 7)
    assert densest_sidon(5).values == (1, 2, 5, 10, 12)
    assert densest_sidon(1).values == (1,)


def test_erdos_bound_frozen_values():
    # k = 12: a = 7 (7^4 = 2401 >= 1728 > 6^4), c = 19/7, and the
    # bound evaluates to 1.357143 + sqrt(1.841837 + 20.938776)
    assert erdos_bound(12) == pytest.approx(6.130047, abs=1e-5)
    assert erdos_bound(1) == pytest.approx(2.0, abs=1e-12)
    assert check_erdos_bound(12, 5)
    assert not check_erdos_bound(12, 7)


def test_erdos_bound_holds_on_small_range():
    table = max_sidon_table(25)
    for k, (n, _) in enumerate(table, start=1):
        assert check_erdos_bound(k, n), k


def test_decoupling_sidon_plan():
    plan = plan_channels((1, 2, 5, 10, 12), width=1.0)
    ok, witness = is_energy_decoupled(plan.intervals())
    assert ok and witness is None


def test_decoupling_uniform_collision():
    ok, witness = is_energy_decoupled([(0.0, 1.0), (2.0, 3.0), (4.0, 5.0)])
    assert not ok
    # channels 1+3 and 2+2 sum onto the same band [4, 6]
    assert witness == ((1, 3), (2, 2))
    a, b = decoupling_witness_bands([(0.0, 1.0), (2.0, 3.0), (4.0, 5.0)], witness)
    assert a.intervals == ((4.0, 6.0),)
    assert b.intervals == ((4.0, 6.0),)


def test_decoupling_keeps_caller_order():
    # indices refer to the order given, not to sorted frequency order
    ok, witness = is_energy_decoupled([(4.0, 5.0), (0.0, 1.0), (2.0, 3.0)])
    assert not ok
    assert witness == ((1, 2), (3, 3))


def test_decoupling_edge_cases():
    # touching channel endpoints are legal input but still couple
    ok, witness = is_energy_decoupled([(0.0, 1.0), (1.0, 2.0)])
    assert not ok and witness == ((1, 1), (1, 2))
    with pytest.raises(OverlappingIntervals):
        is_energy_decoupled([(0.0, 2.0), (1.0, 3.0)])
    ok, _ = is_energy_decoupled(make_bandset([(0.0, 1.0), (3.0, 4.0)]))
    assert ok


@settings(max_examples=80)
@given(st.lists(st.integers(1, 30), min_size=2, max_size=5, unique=True))
def test_decoupled_iff_sidon(vals):
    # the interval route and the integer route must agree for any
    # strictly increasing slot choice, Sidon or not
    seq = tuple(sorted(vals))
    intervals = [((2 * m - 2) * 2.5, (2 * m - 1) * 2.5) for m in seq]
    assert is_energy_decoupled(intervals)[0] == is_sidon(seq)


def test_filling_efficiency():
    plan = plan_channels((1, 2, 5, 10, 12), width=2.0)
    assert spectral_filling_efficiency(plan) == pytest.approx(5 / 23)
    assert spectral_filling_efficiency(plan, slot_budget=12) == pytest.approx(5 / 23)
    assert spectral_filling_efficiency(plan, slot_budget=20) == pytest.approx(5 / 39)
    with pytest.raises(ValueError):
        spectral_filling_efficiency(plan, slot_budget=11)
    bs = make_bandset([(0.0, 1.0), (3.0, 4.0)])
    assert spectral_filling_efficiency(bs) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        spectral_filling_efficiency(bs, slot_budget=10)


def test_plan_geometry():
    plan = plan_channels((1, 3), width=2.0)
    assert plan.intervals() == [(0.0, 2.0), (8.0, 10.0)]
    assert plan.centers() == [1.0, 9.0]
    assert plan.bandset().measure == 4.0
    with pytest.raises(ValueError):
        plan_channels((1, 3), width=0.0)
