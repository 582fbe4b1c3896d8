"""Congruence families a(An+B) == 0 (mod 2) and their empirical verification.

Three fixed families fall straight out of the parity characterizations;
two generator schemes produce infinitely many more, one per (prime p,
residue r) pair whose progression avoids squares because 12r+1 (resp.
8r+1) is a quadratic nonresidue mod p. Verification checks the GF(2)
parity series directly, which is itself validated against the exact
integer oracle elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .etaq import a_parity_series
from .gf2series import Gf2Series
from .numtheory import is_prime, legendre_symbol

__all__ = [
    "CongruenceFamily",
    "FamilyVerification",
    "fixed_families",
    "generate_12p_family",
    "generate_24p_family",
    "all_families",
    "verify_family",
]


@dataclass(frozen=True)
class CongruenceFamily:
    """Asserts a(modulus * n + residue) is even for all n >= 0."""

    modulus: int
    residue: int
    source: str
    p: int | None = None
    r: int | None = None

    def __post_init__(self):
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} outside 0..{self.modulus - 1}")

    @property
    def label(self) -> str:
        return f"a({self.modulus}n+{self.residue})"


@dataclass(frozen=True)
class FamilyVerification:
    family: CongruenceFamily
    bound: int
    checked: int
    counterexample: int | None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def fixed_families() -> tuple[CongruenceFamily, ...]:
    """The three stand-alone families."""
    return (
        CongruenceFamily(12, 9, "12n+9 = 4(3n+2)+1: m == 2 (mod 3)"),
        CongruenceFamily(24, 13, "24n+13 = 4(6n+3)+1: 24n+13 == 5 (mod 8) is never a square"),
        CongruenceFamily(24, 19, "24n+19 = 8(3n+2)+3: m == 2 (mod 3)"),
    )


def generate_12p_family(p: int) -> list[CongruenceFamily]:
    """Families a(12pn + 12r+1) even, one per r with 12r+1 a nonresidue mod p.

    Requires p prime and >= 5. The zero class (p | 12r+1) is skipped: it is
    neither residue nor nonresidue, and its progression meets multiples of
    p^2, where squares do occur.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")
    families = []
    for r in range(1, p):
        if legendre_symbol(12 * r + 1, p) == -1:
            families.append(
                CongruenceFamily(
                    12 * p, 12 * r + 1, f"nonresidue progression in 4m+1 (p={p}, r={r})", p, r
                )
            )
    return families


def generate_24p_family(p: int) -> list[CongruenceFamily]:
    """Families a(24pn + 24r+3) even, one per r with 8r+1 a nonresidue mod p.

    Requires p an odd prime (p >= 3).
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    families = []
    for r in range(1, p):
        if legendre_symbol(8 * r + 1, p) == -1:
            families.append(
                CongruenceFamily(
                    24 * p, 24 * r + 3, f"nonresidue progression in 8m+3 (p={p}, r={r})", p, r
                )
            )
    return families


def all_families(
    ps_12: tuple[int, ...] = (5, 7, 11), ps_24: tuple[int, ...] = (3, 5, 7, 11)
) -> list[CongruenceFamily]:
    """Fixed families plus both generated schemes for the given primes."""
    out = list(fixed_families())
    for p in ps_12:
        out.extend(generate_12p_family(p))
    for p in ps_24:
        out.extend(generate_24p_family(p))
    return out


def verify_family(
    family: CongruenceFamily, bound: int, parity: Gf2Series | None = None
) -> FamilyVerification:
    """Check a(An+B) even for every An+B < bound against the parity series.

    A counterexample is reported, not raised; pass a precomputed series
    (trunc_len >= bound) to amortize it over many families.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if parity is None:
        parity = a_parity_series(bound)
    elif parity.trunc_len < bound:
        raise ValueError("parity series shorter than requested bound")
    checked = 0
    for n in range(family.residue, bound, family.modulus):
        if parity[n]:
            return FamilyVerification(family, bound, checked, n)
        checked += 1
    return FamilyVerification(family, bound, checked, None)
