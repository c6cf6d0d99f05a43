"""Tests for monomial enumeration, ranking, and monomial-ideal sieves."""

import itertools

import pytest
from hypothesis import given, strategies as st

from genforms.monomials import (
    IndexOutOfRange,
    MonomialIdeal,
    MonomialOrderTable,
    contains_power_of_maximal_ideal,
    divides,
    enumerate_monomials,
    ideal_from_text,
    ideal_to_text,
    maximal_ideal_power,
    monomial_count,
    monomial_to_str,
    parse_monomial,
    quotient_hilbert_function,
    rank,
    unrank,
)

SQUARES_XY_GENS = [(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2), (1, 1, 0, 0)]


def brute_force_survivors(gens, n, e):
    """Oracle: enumerate exponent vectors directly via itertools."""
    count = 0
    for exps in itertools.product(range(e + 1), repeat=n):
        if sum(exps) != e:
            continue
        if not any(all(g <= x for g, x in zip(gen, exps)) for gen in gens):
            count += 1
    return count


def test_monomial_count_three_vars_degree15():
    assert monomial_count(3, 15) == 136


def test_monomial_count_small():
    assert monomial_count(4, 2) == 10
    assert monomial_count(4, 2) == len(enumerate_monomials(4, 2))
    assert monomial_count(7, 0) == 1


def test_enumerate_order():
    assert enumerate_monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert rank((2, 0)) == 0
    assert unrank(2, 2, 2) == (0, 2)


def test_unrank_out_of_range():
    with pytest.raises(IndexOutOfRange):
        unrank(2, 2, 3)
    table = MonomialOrderTable(3, 2)
    with pytest.raises(IndexOutOfRange):
        table.rank((1, 1, 1))  # degree 3, not 2


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("d", range(0, 11))
def test_rank_unrank_bijective(n, d):
    table = MonomialOrderTable(n, d)
    assert len(table) == len(table.monomials)
    for i, m in enumerate(table.monomials):
        assert table.rank(m) == i
        assert table.unrank(i) == m


def test_quotient_hilbert_function_squares_xy_ideal():
    ideal = MonomialIdeal.from_generators(4, SQUARES_XY_GENS)
    series = quotient_hilbert_function(ideal, 3)
    # the t^3 coefficient is positive: x*z*w (and y*z*w) survive the sieve
    expected3 = brute_force_survivors(SQUARES_XY_GENS, 4, 3)
    assert expected3 == 2
    assert series.coeffs == (1, 4, 5, expected3)
    assert not ideal.contains((1, 0, 1, 1))  # xzw not in I


def test_quotient_by_square_of_maximal_ideal():
    series = quotient_hilbert_function(maximal_ideal_power(4, 2), 3)
    assert series.coeffs == (1, 4, 0, 0)
    assert series.terminated


def test_quotient_by_zero_ideal():
    zero = MonomialIdeal.from_generators(3, [])
    series = quotient_hilbert_function(zero, 2)
    assert series.coeffs == (1, 3, 6)
    assert not series.terminated


def test_contains_power_examples():
    assert contains_power_of_maximal_ideal(maximal_ideal_power(3, 2), 3)
    ideal = MonomialIdeal.from_generators(4, SQUARES_XY_GENS)
    assert not contains_power_of_maximal_ideal(ideal, 3)


@given(
    n=st.integers(1, 3),
    data=st.data(),
)
def test_sieve_invariants(n, data):
    degree_pool = enumerate_monomials(n, 2) + enumerate_monomials(n, 3)
    gens = data.draw(st.lists(st.sampled_from(degree_pool), max_size=4))
    ideal = MonomialIdeal.from_generators(n, gens)
    series = quotient_hilbert_function(ideal, 6)
    for e in range(7):
        vanished = contains_power_of_maximal_ideal(ideal, e)
        assert (series.coeffs[e] == 0) == vanished
        if vanished:
            # stability: higher powers stay inside
            assert contains_power_of_maximal_ideal(ideal, e + 1)
            assert contains_power_of_maximal_ideal(ideal, e + 2)


def test_minimalization():
    ideal = MonomialIdeal.from_generators(2, [(1, 0), (2, 0), (1, 1)])
    assert ideal.generators == ((1, 0),)
    assert divides((1, 0), (2, 0))


def test_render_and_parse():
    assert monomial_to_str((2, 0, 1)) == "x1^2*x3"
    assert parse_monomial("x1^2*x3", 3) == (2, 0, 1)
    assert monomial_to_str((0, 0)) == "1"
    assert parse_monomial("1", 2) == (0, 0)


def test_ideal_text_round_trip():
    ideal = MonomialIdeal.from_generators(4, SQUARES_XY_GENS)
    again = ideal_from_text(ideal_to_text(ideal), 4)
    assert again == ideal
