"""Truncated integer power series.

Everything here is exact big-integer arithmetic: Taylor expansion of
prod(1 - t^d_i) / (1 - t)^n, the ceiling operator that cuts a series at
its first nonpositive coefficient, and lexicographic comparison of series.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

DEFAULT_CAP = 64


class IncomparableTruncation(ValueError):
    """Two series over different ranges with no zero-extension available."""


class CapExceeded(RuntimeError):
    """The series did not terminate below the truncation cap."""


@dataclass(frozen=True)
class DegreeList:
    """Generator degrees d_1..d_k in a polynomial ring with n variables."""

    n: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable")
        if any(d < 1 for d in self.degrees):
            raise ValueError("generator degrees must be positive")
        object.__setattr__(self, "degrees", tuple(self.degrees))

    @property
    def k(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class SignedSeries:
    """Raw expansion coefficients; entries may be negative."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class TruncatedSeries:
    """Nonnegative coefficients up to an inclusive truncation degree.

    `terminated` means every coefficient beyond the stored range is zero,
    i.e. the series is actually a polynomial.
    """

    coeffs: tuple[int, ...]
    terminated: bool = False

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if any(c < 0 for c in coeffs):
            raise ValueError("TruncatedSeries coefficients must be nonnegative")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, e: int) -> int:
        if e <= self.trunc:
            return self.coeffs[e]
        if self.terminated:
            return 0
        raise IncomparableTruncation(
            f"coefficient {e} beyond truncation {self.trunc} of open series"
        )


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _inverse_power_coeffs(n: int, trunc: int) -> list[int]:
    """Coefficients of 1/(1-t)^n, i.e. C(n+e-1, e), by the multiplicative
    recurrence c_{e+1} = c_e * (n+e) // (e+1)."""
    coeffs = [1]
    for e in range(trunc):
        coeffs.append(coeffs[-1] * (n + e) // (e + 1))
    return coeffs


def expand_rational(spec: DegreeList, trunc: int) -> SignedSeries:
    """Taylor coefficients of prod(1 - t^d_i) / (1 - t)^n up to trunc."""
    if trunc < 0:
        raise ValueError("trunc must be >= 0")
    coeffs = _inverse_power_coeffs(spec.n, trunc)
    for d in spec.degrees:
        # multiply in place by (1 - t^d)
        for e in range(trunc, d - 1, -1):
            coeffs[e] -= coeffs[e - d]
    return SignedSeries(tuple(coeffs))


def ceiling(series: SignedSeries) -> TruncatedSeries:
    """Keep coefficients while every earlier one is strictly positive.

    The first nonpositive coefficient and everything after it become zero;
    a coefficient that is exactly zero also terminates the series.
    """
    out = []
    alive = True
    for a in series.coeffs:
        if alive and a > 0:
            out.append(a)
        else:
            alive = False
            out.append(0)
    return TruncatedSeries(tuple(out), terminated=not alive)


def conjectured_series(spec: DegreeList, trunc: int) -> TruncatedSeries:
    """ceiling(prod(1 - t^d_i) / (1 - t)^n): the conjectured Hilbert series
    of a quotient by generic forms with the given degrees."""
    return ceiling(expand_rational(spec, trunc))


def lex_compare(f: TruncatedSeries, g: TruncatedSeries) -> Ordering:
    """Compare by the first differing coefficient.

    Shorter series are zero-extended only when terminated; otherwise the
    ranges are incomparable.
    """
    hi = max(f.trunc, g.trunc)
    for e in range(hi + 1):
        a = f.coefficient(e)
        b = g.coefficient(e)
        if a != b:
            return Ordering.GREATER if a > b else Ordering.LESS
    return Ordering.EQUAL


def default_truncation(spec: DegreeList, cap: int = DEFAULT_CAP) -> int:
    """Truncation degree that safely covers the conjectured series.

    For k > n the conjectured series terminates; return one past the first
    zero ceiling coefficient (bounded by cap). For k <= n (complete
    intersection) return cap.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if spec.k <= spec.n:
        return cap
    raw = expand_rational(spec, cap)
    for e, a in enumerate(raw.coeffs):
        if a <= 0:
            return min(e + 1, cap)
    raise CapExceeded(
        f"conjectured series for n={spec.n}, degrees={spec.degrees} "
        f"still positive at degree {cap}"
    )


def format_series(series: TruncatedSeries) -> str:
    """ASCII rendering, e.g. "1 + 4t + 5t^2". Zero coefficients are skipped
    (a zero series renders as "0")."""
    terms = []
    for e, c in enumerate(series.coeffs):
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        elif e == 1:
            terms.append(f"{c}t" if c != 1 else "t")
        else:
            terms.append(f"{c}t^{e}" if c != 1 else f"t^{e}")
    return " + ".join(terms) if terms else "0"


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient (zero when out of range)."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)
