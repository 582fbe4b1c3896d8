"""Eta-quotients over GF(2) and the parity series for a(n).

An eta-quotient is a product of factors f_r = prod_{i>=1} (1 - q^{r*i})
with signed integer exponents. Modulo 2 each f_r is the pentagonal-number
series dilated by r (Euler), and f_1^3 is the triangular-number series
(Jacobi), so every factor has a square-root-sized support and evaluation
costs O(N * sqrt(N)) bit operations at truncation N.

The parity of a(n), the number of partitions of n whose parts all appear
with odd multiplicity, is the coefficient series of f_3 / f_1^3. Its 2-,
4- and 8-dissections are also available in closed form, and every closed
form is cross-checkable against coefficient extraction from the parity
series itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2series import Gf2Series

__all__ = [
    "EtaQuotient",
    "pentagonal_exponents",
    "triangular_exponents",
    "a_parity_series",
    "dissection_series",
    "dissection_by_extraction",
    "identity_suite",
    "DISSECTION_CLASSES",
]


def pentagonal_exponents(trunc_len: int, scale: int = 1) -> list[int]:
    """Generalized pentagonal numbers k(3k-1)/2 (k in Z), dilated by scale."""
    if scale < 1:
        raise ValueError("scale must be positive")
    out = [0]
    k = 1
    while True:
        e = scale * (k * (3 * k - 1) // 2)
        if e >= trunc_len:
            break
        out.append(e)
        e = scale * (k * (3 * k + 1) // 2)
        if e < trunc_len:
            out.append(e)
        k += 1
    return sorted(out)


def triangular_exponents(trunc_len: int, scale: int = 1) -> list[int]:
    """Triangular numbers k(k+1)/2 (k >= 0), dilated by scale."""
    if scale < 1:
        raise ValueError("scale must be positive")
    out = []
    k = 0
    while scale * (k * (k + 1) // 2) < trunc_len:
        out.append(scale * (k * (k + 1) // 2))
        k += 1
    return out


def _eta_factor(scale: int, trunc_len: int) -> Gf2Series:
    # f_scale mod 2: dilated pentagonal support, never a term-by-term product.
    return Gf2Series.from_support(pentagonal_exponents(trunc_len, scale), trunc_len)


@dataclass(frozen=True)
class EtaQuotient:
    """Symbolic product of eta factors: ((scale, exponent), ...).

    Scales are positive, exponents are nonzero signed integers, factors are
    sorted by scale with duplicate scales merged.
    """

    factors: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, factors: dict[int, int] | list[tuple[int, int]]) -> EtaQuotient:
        pairs = factors.items() if isinstance(factors, dict) else factors
        merged: dict[int, int] = {}
        for scale, exponent in pairs:
            if scale < 1:
                raise ValueError(f"eta factor scale must be positive, got {scale}")
            merged[scale] = merged.get(scale, 0) + exponent
        return cls(tuple(sorted((r, e) for r, e in merged.items() if e != 0)))

    def __mul__(self, other: EtaQuotient) -> EtaQuotient:
        return EtaQuotient.of(list(self.factors) + list(other.factors))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        num = [f"f{r}" + (f"^{e}" if e > 1 else "") for r, e in self.factors if e > 0]
        den = [f"f{r}" + (f"^{-e}" if e < -1 else "") for r, e in self.factors if e < 0]
        text = " ".join(num) if num else "1"
        if den:
            text += " / " + " ".join(den)
        return text

    def eval(self, trunc_len: int) -> Gf2Series:
        """Evaluate to a truncated GF(2) series.

        Positive powers go by repeated squaring on the binary expansion of
        the exponent; a negative total gets one inverse at the end. Every
        f_r has constant term 1, so the denominator is always invertible.
        """
        if trunc_len < 1:
            raise ValueError("trunc_len must be >= 1")
        numerator = Gf2Series.one(trunc_len)
        denominator = Gf2Series.one(trunc_len)
        for scale, exponent in self.factors:
            power = _eta_factor(scale, trunc_len).pow(abs(exponent))
            if exponent > 0:
                numerator = numerator * power
            else:
                denominator = denominator * power
        if denominator == Gf2Series.one(trunc_len):
            return numerator
        return numerator * denominator.inverse()


# The parity generating function: sum a(n) q^n = f_3 / f_1^3 (mod 2).
A_PARITY_QUOTIENT = EtaQuotient.of({3: 1, 1: -3})

# For each residue class, the series whose coefficient m is a(<class at m>)
# mod 2, keyed by tag; values are (step, offset, closed-form quotient).
DISSECTION_CLASSES: dict[str, tuple[int, int, EtaQuotient]] = {
    "2m": (2, 0, EtaQuotient.of({1: 3, 3: -1})),
    "2m+1": (2, 1, EtaQuotient.of({3: 5, 1: -3})),
    "4m+1": (4, 1, EtaQuotient.of({1: 3, 3: 1})),
    "4m+3": (4, 3, EtaQuotient.of({3: 7, 1: -3})),
    "8m+3": (8, 3, EtaQuotient.of({1: 3, 3: 2})),
    "8m+7": (8, 7, EtaQuotient.of({3: 8, 1: -3})),
}


@lru_cache(maxsize=4)
def a_parity_series(trunc_len: int) -> Gf2Series:
    """Coefficient n is a(n) mod 2, for n < trunc_len."""
    return A_PARITY_QUOTIENT.eval(trunc_len)


def _dissection_entry(class_tag: str) -> tuple[int, int, EtaQuotient]:
    try:
        return DISSECTION_CLASSES[class_tag]
    except KeyError:
        valid = ", ".join(sorted(DISSECTION_CLASSES))
        raise ValueError(f"unknown dissection class {class_tag!r}; expected one of {valid}") from None


def dissection_series(class_tag: str, trunc_len: int) -> Gf2Series:
    """Closed-form series: coefficient m is a(step*m + offset) mod 2."""
    _, _, quotient = _dissection_entry(class_tag)
    return quotient.eval(trunc_len)


def dissection_by_extraction(class_tag: str, trunc_len: int) -> Gf2Series:
    """Same series obtained by decimating the full parity series.

    Independent of the closed form, this is the regression net for the
    kernel: the two routes must agree coefficient for coefficient.
    """
    step, offset, _ = _dissection_entry(class_tag)
    return a_parity_series(step * trunc_len).extract(step, offset)


def identity_suite(trunc_len: int) -> list[tuple[str, Gf2Series, Gf2Series]]:
    """The reduction-chain identities as (name, lhs, rhs), each exact mod 2.

    Covers the three base congruences (pentagonal/Jacobi consequences and
    the f_1^3 f_3^3 split), the three dissection steps that peel f_3/f_1^3
    down to the 8m+7 remainder, and the two product forms used by the
    alternative square-detection arguments.
    """

    def ev(factors: dict[int, int]) -> Gf2Series:
        return EtaQuotient.of(factors).eval(trunc_len)

    # exponents k(3k-2) for k in Z, the support of f_3^3 / f_1
    eq33_support = [0]
    k = 1
    while k * (3 * k - 2) < trunc_len:
        eq33_support.append(k * (3 * k - 2))
        if k * (3 * k + 2) < trunc_len:
            eq33_support.append(k * (3 * k + 2))
        k += 1

    f3 = ev({3: 1})
    f3_2 = ev({3: 2})
    f9_3 = ev({9: 3})
    return [
        ("f1^3 = f3 + q f9^3", ev({1: 3}), f3 + f9_3.shift(1)),
        ("f1^3 f3^3 = f1^12 + q f3^12", ev({1: 3, 3: 3}), ev({1: 12}) + ev({3: 12}).shift(1)),
        (
            "f3^3/f1 = sum_k q^(k(3k-2))",
            ev({3: 3, 1: -1}),
            Gf2Series.from_support(eq33_support, trunc_len),
        ),
        (
            "f3/f1^3 = f1^6/f3^2 + q f3^10/f1^6",
            ev({3: 1, 1: -3}),
            ev({1: 6, 3: -2}) + ev({3: 10, 1: -6}).shift(1),
        ),
        (
            "f3^5/f1^3 = f1^6 f3^2 + q f3^14/f1^6",
            ev({3: 5, 1: -3}),
            ev({1: 6, 3: 2}) + ev({3: 14, 1: -6}).shift(1),
        ),
        (
            "f3^7/f1^3 = f1^6 f3^4 + q f3^16/f1^6",
            ev({3: 7, 1: -3}),
            ev({1: 6, 3: 4}) + ev({3: 16, 1: -6}).shift(1),
        ),
        ("f1^3 f3 = f3^2 + q f3 f9^3", ev({1: 3, 3: 1}), f3_2 + (f3 * f9_3).shift(1)),
        ("f1^3 f3^2 = f3^3 + q f3^2 f9^3", ev({1: 3, 3: 2}), ev({3: 3}) + (f3_2 * f9_3).shift(1)),
    ]
