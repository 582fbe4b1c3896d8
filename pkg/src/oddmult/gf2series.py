"""Truncated formal power series over GF(2), bit-packed into Python ints.

A series is stored as a single arbitrary-precision integer whose bit k is
the coefficient of q^k, together with an explicit truncation length: the
series is known for degrees 0 .. trunc_len-1 and every higher bit is zero.
Python ints give us word-packed coefficients for free, so addition is a
single XOR, multiplication is shift-XOR over the support of the sparser
operand, and squaring uses the GF(2) Frobenius map (bit spreading) in one
vectorized pass.

Series objects are immutable; every operation returns a fresh value, so
instances can be shared freely across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

__all__ = ["Gf2Series", "sparse_support"]

# Maps a byte to the 16-bit word with the same bits spread to even positions,
# i.e. the Frobenius square of the byte viewed as a GF(2) polynomial.
_SPREAD = np.zeros(256, dtype="<u2")
for _b in range(256):
    _w = 0
    for _i in range(8):
        if _b >> _i & 1:
            _w |= 1 << (2 * _i)
    _SPREAD[_b] = _w
del _b, _w, _i

# Below this size plain int bit-twiddling beats the numpy round-trip.
_NUMPY_CUTOFF = 4096


def sparse_support(exponents: Iterable[int]) -> tuple[int, ...]:
    """Validate and normalize a sparse support: distinct degrees, ascending."""
    support = tuple(sorted(exponents))
    if support and support[0] < 0:
        raise ValueError("support exponents must be non-negative")
    for a, b in zip(support, support[1:]):
        if a == b:
            raise ValueError(f"duplicate exponent {a} in support")
    return support


def _support_of(bits: int, trunc_len: int) -> list[int]:
    """Positions of set bits, ascending."""
    if trunc_len < _NUMPY_CUTOFF:
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out
    nbytes = (trunc_len + 7) // 8
    buf = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.nonzero(np.unpackbits(buf, bitorder="little"))[0].tolist()


def _spread_bits(bits: int, bit_len: int) -> int:
    """Frobenius square on the raw bitset: bit k moves to bit 2k."""
    if bit_len < _NUMPY_CUTOFF:
        out = 0
        pos = 0
        while bits:
            low = bits & -bits
            out |= 1 << (2 * (low.bit_length() - 1))
            bits ^= low
        return out
    nbytes = (bit_len + 7) // 8
    buf = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return int.from_bytes(_SPREAD[buf].tobytes(), "little")


def _mul_bits(a: int, b: int, trunc_len: int) -> int:
    """Truncated carryless product via shift-XOR over the sparser operand."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    for e in _support_of(a, trunc_len):
        acc ^= b << e
    return acc & ((1 << trunc_len) - 1)


class Gf2Series:
    """A power series over GF(2) truncated to ``trunc_len`` coefficients."""

    __slots__ = ("trunc_len", "_bits")

    def __init__(self, trunc_len: int, bits: int = 0):
        if trunc_len < 1:
            raise ValueError("trunc_len must be >= 1")
        self.trunc_len = trunc_len
        self._bits = bits & ((1 << trunc_len) - 1)

    @classmethod
    def zero(cls, trunc_len: int) -> Gf2Series:
        return cls(trunc_len, 0)

    @classmethod
    def one(cls, trunc_len: int) -> Gf2Series:
        return cls(trunc_len, 1)

    @classmethod
    def from_support(cls, exponents: Iterable[int], trunc_len: int) -> Gf2Series:
        """Series with coefficient 1 at each listed degree.

        Exponents at or beyond the truncation are dropped silently: supports
        such as the pentagonal numbers are naturally infinite.
        """
        bits = 0
        for e in sparse_support(exponents):
            if e < trunc_len:
                bits |= 1 << e
        return cls(trunc_len, bits)

    # -- queries ---------------------------------------------------------

    def __getitem__(self, degree: int) -> int:
        if not 0 <= degree < self.trunc_len:
            raise IndexError(f"degree {degree} outside 0..{self.trunc_len - 1}")
        return self._bits >> degree & 1

    def support(self) -> list[int]:
        return _support_of(self._bits, self.trunc_len)

    def is_zero(self) -> bool:
        return self._bits == 0

    def odd_count(self, upto: int | None = None) -> int:
        """Number of nonzero coefficients among degrees < upto (default: all)."""
        if upto is None or upto >= self.trunc_len:
            return self._bits.bit_count()
        return (self._bits & ((1 << upto) - 1)).bit_count()

    def to_bit_array(self) -> np.ndarray:
        """Coefficients as a uint8 0/1 array of length trunc_len."""
        nbytes = (self.trunc_len + 7) // 8
        buf = np.frombuffer(self._bits.to_bytes(nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(buf, bitorder="little", count=self.trunc_len)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Series):
            return NotImplemented
        return self.trunc_len == other.trunc_len and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.trunc_len, self._bits))

    def __repr__(self) -> str:
        head = self.support()[:8]
        tail = ", ..." if len(self.support()) > 8 else ""
        return f"Gf2Series(trunc_len={self.trunc_len}, support=[{', '.join(map(str, head))}{tail}])"

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        for _ in range(self.trunc_len):
            yield bits & 1
            bits >>= 1

    def _check_len(self, other: Gf2Series) -> None:
        if self.trunc_len != other.trunc_len:
            raise ValueError(
                f"truncation length mismatch: {self.trunc_len} != {other.trunc_len}"
            )

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: Gf2Series) -> Gf2Series:
        self._check_len(other)
        return Gf2Series(self.trunc_len, self._bits ^ other._bits)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: Gf2Series) -> Gf2Series:
        self._check_len(other)
        return Gf2Series(self.trunc_len, _mul_bits(self._bits, other._bits, self.trunc_len))

    def square(self) -> Gf2Series:
        """Frobenius square: coefficient of q^(2k) is this series' q^k one."""
        n = self.trunc_len
        keep = (n + 1) // 2  # only degrees < ceil(n/2) survive doubling
        return Gf2Series(n, _spread_bits(self._bits & ((1 << keep) - 1), keep))

    def pow(self, exponent: int) -> Gf2Series:
        """Non-negative power by squaring; squarings are linear-time here."""
        if exponent < 0:
            raise ValueError("negative exponent; use inverse() explicitly")
        result = Gf2Series.one(self.trunc_len)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    def inverse(self) -> Gf2Series:
        """Multiplicative inverse of a series with constant term 1.

        Newton lifting: if b inverts a to k coefficients then a*b^2 inverts
        it to 2k. Each step is one Frobenius square plus one multiplication,
        so for an operand with sparse support of size s the total cost stays
        O(trunc_len * s) bit operations.
        """
        if not self._bits & 1:
            raise ValueError("constant term is 0: series is not invertible")
        n = self.trunc_len
        b = 1
        prec = 1
        while prec < n:
            new_prec = min(2 * prec, n)
            mask = (1 << new_prec) - 1
            b_sq = _spread_bits(b, prec) & mask
            b = _mul_bits(self._bits & mask, b_sq, new_prec)
            prec = new_prec
        return Gf2Series(n, b)

    def shift(self, k: int) -> Gf2Series:
        """Multiply by the monomial q^k (k >= 0), truncating as usual."""
        if k < 0:
            raise ValueError("shift distance must be non-negative")
        return Gf2Series(self.trunc_len, self._bits << k)

    def truncate(self, new_len: int) -> Gf2Series:
        if new_len > self.trunc_len:
            raise ValueError("cannot extend a truncated series")
        return Gf2Series(new_len, self._bits)

    def extract(self, step: int, offset: int) -> Gf2Series:
        """Decimate: coefficient m of the result is coefficient step*m+offset.

        The result keeps every source degree below trunc_len, so its length
        is ceil((trunc_len - offset) / step).
        """
        if step < 1:
            raise ValueError("step must be >= 1")
        if not 0 <= offset < self.trunc_len:
            raise ValueError(f"offset {offset} outside 0..{self.trunc_len - 1}")
        if step == 1:
            return Gf2Series(self.trunc_len - offset, self._bits >> offset)
        out_len = (self.trunc_len - offset + step - 1) // step
        sliced = self.to_bit_array()[offset::step]
        packed = np.packbits(sliced, bitorder="little")
        return Gf2Series(out_len, int.from_bytes(packed.tobytes(), "little"))
