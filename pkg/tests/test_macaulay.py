"""Tests for prime-field forms, Macaulay matrices, and quotient series."""

import random

import numpy as np
import pytest

from genforms.macaulay import (
    FormFamily,
    ModPPoly,
    ResourceLimit,
    family_from_text,
    family_to_text,
    first_order_lower_bound,
    hilbert_series_of_quotient,
    ideal_dimension_at_degree,
    macaulay_shape,
    multiply,
    power,
    quotient_series_with_stats,
    random_form,
)
from genforms.modp import DEFAULT_PRIME
from genforms.monomials import monomial_count, rank as mono_rank
from genforms.series import binomial

P = DEFAULT_PRIME


def form(n, terms, prime=P):
    degree = sum(next(iter(terms)))
    return ModPPoly.from_monomial_dict(n, degree, terms, prime)


def pure_power_family(n, d, prime=P):
    forms = []
    for i in range(n):
        mono = tuple(d if j == i else 0 for j in range(n))
        forms.append(form(n, {mono: 1}, prime))
    return FormFamily(n, tuple(forms), prime)


def test_random_form_deterministic():
    a = random_form(2, 1, np.random.default_rng(42))
    b = random_form(2, 1, np.random.default_rng(42))
    assert a == b
    assert len(a.coeffs) == 2


def test_random_form_coefficient_count():
    f = random_form(3, 2, np.random.default_rng(0))
    assert len(f.coeffs) == monomial_count(3, 2) == 6


def test_two_draws_differ():
    rng = np.random.default_rng(7)
    assert random_form(3, 2, rng) != random_form(3, 2, rng)


def test_multiply_difference_of_squares():
    f = form(2, {(1, 0): 1, (0, 1): 1})
    g = form(2, {(1, 0): 1, (0, 1): P - 1})
    fg = multiply(f, g)
    assert fg == form(2, {(2, 0): 1, (0, 2): P - 1})


def test_multiply_by_monomial_permutes_coefficients():
    rng = np.random.default_rng(3)
    f = random_form(2, 2, rng)
    x = form(2, {(1, 0): 1})
    shifted = multiply(f, x)
    assert shifted.degree == 3
    for i, c in enumerate(f.coeffs):
        src = (2, 0) if i == 0 else (1, 1) if i == 1 else (0, 2)
        target = (src[0] + 1, src[1])
        assert shifted.coeffs[mono_rank(target)] == c


def test_square_of_binomial():
    f = form(2, {(1, 0): 1, (0, 1): 1})
    sq = multiply(f, f)
    assert sq == form(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert power(f, 2) == sq


def test_power_identity_and_multinomial():
    f = form(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert power(f, 1) == f
    sq = power(f, 2)
    assert sq.coeffs[mono_rank((1, 1, 0))] == 2


@pytest.mark.parametrize("m", [2, 3, 4])
def test_power_multiply_consistency(m):
    f = random_form(2, 2, np.random.default_rng(m))
    assert power(f, m) == multiply(power(f, m - 1), f)


def test_ideal_dimension_squares():
    fam = pure_power_family(2, 2)
    assert ideal_dimension_at_degree(fam, 2) == 2
    # oracle: x^3, x^2 y, x y^2, y^3 all lie in (x^2, y^2)
    assert ideal_dimension_at_degree(fam, 3) == 4


def test_ideal_dimension_below_generators_is_zero():
    fam = pure_power_family(2, 2)
    assert ideal_dimension_at_degree(fam, 1) == 0
    assert ideal_dimension_at_degree(fam, 0) == 0


def test_macaulay_shape():
    fam = FormFamily.random(3, 14, 45, seed=1)
    assert macaulay_shape(fam, 15) == (135, 136)


def test_quotient_complete_intersection_of_squares():
    series = hilbert_series_of_quotient(pure_power_family(2, 2), 3)
    assert series.coeffs == (1, 2, 1, 0)
    assert series.terminated


def test_quotient_four_random_quadrics():
    fam = FormFamily.random(3, 2, 4, seed=5)
    series = hilbert_series_of_quotient(fam, 3)
    assert series.coeffs == (1, 3, 2, 0)


def test_quotient_empty_family():
    fam = FormFamily(3, ())
    assert hilbert_series_of_quotient(fam, 2).coeffs == (1, 3, 6)


def test_specialization_and_first_order_bounds():
    rnd = random.Random(99)
    for _ in range(30):
        n = rnd.randint(1, 3)
        k = rnd.randint(0, 4)
        degrees = [rnd.randint(1, 4) for _ in range(k)]
        seed = rnd.randrange(10**6)
        rng = np.random.default_rng(seed)
        fam = FormFamily(n, tuple(random_form(n, d, rng) for d in degrees), seed=seed)
        max_deg = rnd.randint(0, 8)
        series, stats = quotient_series_with_stats(fam, max_deg)
        for st in stats:
            assert st.rank <= min(st.rows, st.cols)
            assert series.coeffs[st.e] >= first_order_lower_bound(fam, st.e)
            assert series.coeffs[st.e] <= binomial(n + st.e - 1, st.e)


def test_adding_a_form_never_raises_coefficients():
    base = FormFamily.random(3, 2, 3, seed=8)
    bigger = FormFamily.random(3, 2, 4, seed=8)
    a = hilbert_series_of_quotient(base, 5)
    b = hilbert_series_of_quotient(bigger, 5)
    assert all(x >= y for x, y in zip(a.coeffs, b.coeffs))


def test_replay_determinism():
    a = hilbert_series_of_quotient(FormFamily.random(3, 3, 4, seed=21), 6)
    b = hilbert_series_of_quotient(FormFamily.random(3, 3, 4, seed=21), 6)
    assert a == b


def test_resource_limit():
    fam = FormFamily.random(3, 2, 4, seed=0)
    with pytest.raises(ResourceLimit):
        quotient_series_with_stats(fam, 3, budget=10)


def test_family_text_round_trip():
    fam = FormFamily.random(2, 3, 2, seed=4)
    text = family_to_text(fam)
    lines = text.splitlines()
    assert len(lines) == 2 and lines[0].startswith("3:")
    again = family_from_text(text, 2, seed=4)
    assert again.forms == fam.forms
