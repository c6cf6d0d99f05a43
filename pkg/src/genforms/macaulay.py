"""Random homogeneous forms over a prime field and their quotient series.

A form of degree d is a coefficient vector indexed by the fixed-degree
monomial order. The degree-e graded piece of the ideal generated by a
family of forms is spanned by monomial multiples of the generators; its
dimension is the rank of the Macaulay matrix whose rows are those
multiples, computed over Z/p.

Why a random prime-field point says anything about generic forms: the
rank of the Macaulay matrix at any specialization is at most the generic
rank (lower semicontinuity), and rank mod p of an integer specialization
is at most the rank in characteristic 0. So the quotient series computed
here is coefficientwise >= the generic characteristic-0 series, which in
turn is lexicographically >= the conjectured ceiling series. If the
computed series equals the conjectured one, the generic series is pinned
between them and the case is certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import modp
from .monomials import enumerate_monomials, monomial_count, _rank_table
from .series import TruncatedSeries, binomial


class ResourceLimit(RuntimeError):
    """A Macaulay matrix would exceed the configured entry budget."""


@dataclass(frozen=True)
class ModPPoly:
    """Homogeneous polynomial over Z/p as a dense coefficient vector."""

    n: int
    degree: int
    coeffs: tuple[int, ...]
    prime: int = modp.DEFAULT_PRIME

    def __post_init__(self):
        expected = monomial_count(self.n, self.degree)
        if len(self.coeffs) != expected:
            raise ValueError(
                f"degree-{self.degree} form in {self.n} variables needs "
                f"{expected} coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(
            self, "coeffs", tuple(int(c) % self.prime for c in self.coeffs)
        )

    @classmethod
    def from_monomial_dict(cls, n, degree, terms, prime=modp.DEFAULT_PRIME):
        """Build from {exponent tuple: coefficient}."""
        table = _rank_table(n, degree)
        coeffs = [0] * monomial_count(n, degree)
        for mono, c in terms.items():
            coeffs[table[tuple(mono)]] = c % prime
        return cls(n, degree, tuple(coeffs), prime)


@dataclass(frozen=True)
class FormFamily:
    """An immutable family of forms sharing n and prime.

    seed is metadata: together with the prime and the draw order (forms
    in index order, coefficients in monomial-rank order) it makes every
    run replayable bit-exactly.
    """

    n: int
    forms: tuple[ModPPoly, ...]
    prime: int = modp.DEFAULT_PRIME
    seed: int | None = None

    def __post_init__(self):
        for f in self.forms:
            if f.n != self.n or f.prime != self.prime:
                raise ValueError("all forms must share n and prime")

    @property
    def k(self) -> int:
        return len(self.forms)

    @classmethod
    def random(cls, n, d, k, seed, prime=modp.DEFAULT_PRIME):
        """k independent uniform random forms of degree d."""
        rng = np.random.default_rng(seed)
        forms = tuple(random_form(n, d, rng, prime) for _ in range(k))
        return cls(n, forms, prime, seed)


def random_form(n, d, rng, prime=modp.DEFAULT_PRIME) -> ModPPoly:
    """Every coefficient drawn independently and uniformly from [0, p)."""
    if d < 1:
        raise ValueError("form degree must be >= 1")
    count = monomial_count(n, d)
    coeffs = rng.integers(0, prime, size=count, dtype=np.int64)
    return ModPPoly(n, d, tuple(int(c) for c in coeffs), prime)


def multiply(f: ModPPoly, g: ModPPoly) -> ModPPoly:
    """Exact product, convolution over exponent-vector addition."""
    if f.n != g.n or f.prime != g.prime:
        raise ValueError("operands must share n and prime")
    n, p = f.n, f.prime
    degree = f.degree + g.degree
    table = _rank_table(n, degree)
    fmonos = enumerate_monomials(n, f.degree)
    gmonos = enumerate_monomials(n, g.degree)
    coeffs = [0] * monomial_count(n, degree)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        mi = fmonos[i]
        for j, b in enumerate(g.coeffs):
            if b == 0:
                continue
            target = table[tuple(x + y for x, y in zip(mi, gmonos[j]))]
            coeffs[target] = (coeffs[target] + a * b) % p
    return ModPPoly(n, degree, tuple(coeffs), p)


def power(f: ModPPoly, m: int) -> ModPPoly:
    """f^m by repeated squaring."""
    if m < 1:
        raise ValueError("exponent must be >= 1")
    result = None
    base = f
    while m:
        if m & 1:
            result = base if result is None else multiply(result, base)
        m >>= 1
        if m:
            base = multiply(base, base)
    return result


@lru_cache(maxsize=None)
def _scatter_table(n: int, dg: int, e: int) -> np.ndarray:
    """Index matrix T with T[i, j] = rank(multiplier_i * monomial_j) in
    degree e, for multipliers of degree e - dg and source monomials of
    degree dg."""
    table = _rank_table(n, e)
    mult = enumerate_monomials(n, e - dg)
    src = enumerate_monomials(n, dg)
    t = np.empty((len(mult), len(src)), dtype=np.intp)
    for i, u in enumerate(mult):
        for j, v in enumerate(src):
            t[i, j] = table[tuple(x + y for x, y in zip(u, v))]
    return t


def macaulay_rows(form: ModPPoly, e: int) -> np.ndarray:
    """Rows of the degree-e Macaulay matrix contributed by one form:
    all monomial multiples of degree e - deg(form)."""
    n = form.n
    if e < form.degree:
        return np.zeros((0, monomial_count(n, e)), dtype=np.int64)
    t = _scatter_table(n, form.degree, e)
    block = np.zeros((t.shape[0], monomial_count(n, e)), dtype=np.int64)
    coeffs = np.array(form.coeffs, dtype=np.int64)
    block[np.arange(t.shape[0])[:, None], t] = coeffs[None, :]
    return block


def macaulay_shape(family: FormFamily, e: int) -> tuple[int, int]:
    """(rows, cols) of the degree-e Macaulay matrix, without building it."""
    rows = sum(
        monomial_count(family.n, e - f.degree)
        for f in family.forms
        if f.degree <= e
    )
    return rows, monomial_count(family.n, e)


def ideal_dimension_at_degree(family: FormFamily, e: int) -> int:
    """dim of the degree-e graded piece of the ideal generated by the family.

    Feeds per-generator row blocks to an incremental reducer, exiting
    early once the ideal fills the whole degree.
    """
    if e < 0:
        return 0
    cols = monomial_count(family.n, e)
    rows_total, _ = macaulay_shape(family, e)
    if rows_total == 0:
        return 0
    reducer = modp.RowReducer(cols, family.prime)
    for form in family.forms:
        if form.degree > e:
            continue
        reducer.add_rows(macaulay_rows(form, e))
        if reducer.full_column_rank:
            break
    dim = reducer.rank
    assert dim <= rows_total and dim <= cols
    return dim


@dataclass(frozen=True)
class DegreeStat:
    """Matrix size and rank at one degree (rank None when short-circuited)."""

    e: int
    rows: int
    cols: int
    rank: int | None


def quotient_series_with_stats(family, max_deg, budget=None):
    """Hilbert series of R/(family) up to max_deg plus per-degree stats.

    Coefficient e = C(n+e-1, e) - dim I_e, each degree independent. Once
    a coefficient is zero the ideal contains that power of the maximal
    ideal, so the tail is zero without further elimination. budget caps
    the entry count of any single Macaulay matrix.
    """
    coeffs = []
    stats = []
    for e in range(max_deg + 1):
        rows, cols = macaulay_shape(family, e)
        if budget is not None and rows * cols > budget:
            raise ResourceLimit(
                f"degree-{e} Macaulay matrix has {rows}x{cols} = {rows * cols} "
                f"entries, over budget {budget}"
            )
        dim = ideal_dimension_at_degree(family, e)
        coeff = cols - dim
        # first-order lower bound holds at every specialization
        assert coeff >= cols - rows
        coeffs.append(coeff)
        stats.append(DegreeStat(e, rows, cols, dim))
        if coeff == 0:
            coeffs.extend([0] * (max_deg - e))
            break
    terminated = coeffs[-1] == 0
    return TruncatedSeries(tuple(coeffs), terminated=terminated), stats


def hilbert_series_of_quotient(family: FormFamily, max_deg: int) -> TruncatedSeries:
    series, _ = quotient_series_with_stats(family, max_deg)
    return series


def first_order_lower_bound(family: FormFamily, e: int) -> int:
    """C(n+e-1,e) - sum_g C(n+e-deg g-1, e-deg g); valid over any field."""
    n = family.n
    total = binomial(n + e - 1, e)
    for f in family.forms:
        if f.degree <= e:
            total -= binomial(n + e - f.degree - 1, e - f.degree)
    return total


def family_to_text(family: FormFamily) -> str:
    """One line per form: "d: c0 c1 c2 ..." in monomial-rank order."""
    return "\n".join(
        f"{f.degree}: " + " ".join(str(c) for c in f.coeffs) for f in family.forms
    )


def family_from_text(text, n, prime=modp.DEFAULT_PRIME, seed=None) -> FormFamily:
    forms = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        head, _, tail = line.partition(":")
        degree = int(head)
        coeffs = tuple(int(c) for c in tail.split())
        forms.append(ModPPoly(n, degree, coeffs, prime))
    return FormFamily(n, tuple(forms), prime, seed)
