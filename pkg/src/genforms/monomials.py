"""Monomials of a fixed degree, their ordering, and monomial ideals.

A monomial is an exponent tuple of length n. Within a fixed degree we
order monomials lexicographically on the exponent vector, largest first,
so x1^d has rank 0. Quotient Hilbert functions of monomial ideals are
computed by a divisibility sieve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .series import TruncatedSeries

Monomial = tuple[int, ...]


class IndexOutOfRange(IndexError):
    pass


def monomial_count(n: int, d: int) -> int:
    """Number of degree-d monomials in n variables: C(n+d-1, d)."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1, d >= 0")
    return math.comb(n + d - 1, d)


@lru_cache(maxsize=None)
def enumerate_monomials(n: int, d: int) -> tuple[Monomial, ...]:
    """All degree-d monomials in n variables, lex order, x1^d first."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1, d >= 0")
    if n == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        for rest in enumerate_monomials(n - 1, d - e):
            out.append((e,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _rank_table(n: int, d: int) -> dict:
    return {m: i for i, m in enumerate(enumerate_monomials(n, d))}


def rank(m: Monomial) -> int:
    """Position of a monomial in the fixed-degree enumeration."""
    return _rank_table(len(m), sum(m))[m]


def unrank(n: int, d: int, index: int) -> Monomial:
    monos = enumerate_monomials(n, d)
    if not 0 <= index < len(monos):
        raise IndexOutOfRange(f"index {index} not in [0, {len(monos)})")
    return monos[index]


@dataclass(frozen=True)
class MonomialOrderTable:
    """Bijection between [0, C(n+d-1,d)) and degree-d monomials."""

    n: int
    d: int

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return enumerate_monomials(self.n, self.d)

    def rank(self, m: Monomial) -> int:
        table = _rank_table(self.n, self.d)
        if m not in table:
            raise IndexOutOfRange(f"{m} is not a degree-{self.d} monomial in {self.n} variables")
        return table[m]

    def unrank(self, index: int) -> Monomial:
        return unrank(self.n, self.d, index)

    def __len__(self) -> int:
        return monomial_count(self.n, self.d)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens) -> tuple[Monomial, ...]:
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for m in gens:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by a minimalized generator set.

    The empty generator set is the zero ideal.
    """

    n: int
    generators: tuple[Monomial, ...]

    @classmethod
    def from_generators(cls, n: int, gens) -> "MonomialIdeal":
        gens = tuple(tuple(g) for g in gens)
        for g in gens:
            if len(g) != n or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for n={n}")
        return cls(n, _minimalize(gens))

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)


def maximal_ideal_power(n: int, e: int) -> MonomialIdeal:
    """m^e where m = (x1, ..., xn)."""
    return MonomialIdeal.from_generators(n, enumerate_monomials(n, e))


def quotient_hilbert_function(ideal: MonomialIdeal, max_deg: int) -> TruncatedSeries:
    """Dimensions of the graded quotient: degree-e monomials outside the ideal.

    Once a coefficient hits zero the quotient is zero in all later degrees,
    so the tail is filled without sieving.
    """
    coeffs = []
    for e in range(max_deg + 1):
        count = sum(1 for m in enumerate_monomials(ideal.n, e) if not ideal.contains(m))
        coeffs.append(count)
        if count == 0:
            coeffs.extend([0] * (max_deg - e))
            break
    terminated = coeffs[-1] == 0
    return TruncatedSeries(tuple(coeffs), terminated=terminated)


def contains_power_of_maximal_ideal(ideal: MonomialIdeal, e: int) -> bool:
    """True iff every degree-e monomial is divisible by some generator."""
    return all(ideal.contains(m) for m in enumerate_monomials(ideal.n, e))


def monomial_to_str(m: Monomial) -> str:
    """Render like "x1^2*x3"; the empty monomial renders as "1"."""
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, n: int) -> Monomial:
    """Inverse of monomial_to_str."""
    exps = [0] * n
    text = text.strip()
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        factor = factor.strip()
        if "^" in factor:
            var, power = factor.split("^")
            power = int(power)
        else:
            var, power = factor, 1
        if not var.startswith("x"):
            raise ValueError(f"cannot parse factor {factor!r}")
        idx = int(var[1:]) - 1
        if not 0 <= idx < n:
            raise ValueError(f"variable {var} out of range for n={n}")
        exps[idx] += power
    return tuple(exps)


def ideal_to_text(ideal: MonomialIdeal) -> str:
    """One generator per line, for CLI round-tripping."""
    return "\n".join(monomial_to_str(g) for g in ideal.generators)


def ideal_from_text(text: str, n: int) -> MonomialIdeal:
    gens = [parse_monomial(line, n) for line in text.splitlines() if line.strip()]
    return MonomialIdeal.from_generators(n, gens)
