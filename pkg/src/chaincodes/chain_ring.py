"""Finite chain rings Z_{p^m} and F_q[u]/(u^m) with exact table arithmetic.

Elements are identified with their canonical index ``sum(a_i * q**i)`` where
``a_0, ..., a_{m-1}`` are the theta-adic digits (field indices).  For Z_{p^m}
the index is the residue itself and the digits are its base-p digits.  For
F_q[u]/(u^m) the index orders elements lexicographically on
``(a_{m-1}, ..., a_0)``, so F_2 + uF_2 enumerates as 0, 1, u, u+1.

Bulk operations work on integer numpy arrays of indices through the ring's
lookup tables; :class:`RingElement` is a thin scalar wrapper for interactive use.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import (
    DepthTooSmall,
    EnumerationTooLarge,
    IndexOutOfRange,
    NonPrime,
    ReduciblePolynomial,
    RingMismatch,
    ValidationError,
)

MAX_RING_SIZE = 4096


class Family(str, Enum):
    ZPM = "zpm"
    FQUM = "fqum"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``mod``; coefficient lists are constant term first."""
    a = list(a)
    d = len(mod) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * mod[j]) % p
    return [x % p for x in a[:d]] + [0] * max(0, d - len(a))


def is_irreducible(coeffs_high_first: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2 over F_p."""
    poly = [c % p for c in reversed(coeffs_high_first)]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    deg = len(poly) - 1
    if deg < 1:
        return False
    inv = pow(poly[-1], -1, p)
    poly = [c * inv % p for c in poly]
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_mod(poly, list(low) + [1], p)):
                return False
    return True


@dataclass(frozen=True)
class GaloisField:
    """GF(p^e) as F_p[x]/(f); element index ``v`` encodes coefficients as base-p digits."""

    p: int
    e: int = 1
    modulus: tuple[int, ...] = (1, 0)  # c_e, ..., c_0

    @property
    def q(self) -> int:
        return self.p**self.e

    def _coeffs(self, v: int) -> list[int]:
        return [(v // self.p**i) % self.p for i in range(self.e)]

    def _index(self, coeffs: list[int]) -> int:
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        q = self.q
        t = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            ca = self._coeffs(a)
            for b in range(q):
                cb = self._coeffs(b)
                t[a, b] = self._index([(x + y) % self.p for x, y in zip(ca, cb)])
        return t

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        q, p = self.q, self.p
        mod = [c % p for c in reversed(self.modulus)]
        inv = pow(mod[-1], -1, p)
        mod = [c * inv % p for c in mod]
        t = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            ca = self._coeffs(a)
            for b in range(q):
                cb = self._coeffs(b)
                prod = [0] * (2 * self.e - 1)
                for i, x in enumerate(ca):
                    for j, y in enumerate(cb):
                        prod[i + j] += x * y
                t[a, b] = self._index(_poly_mod(prod, mod, p) if self.e > 1 else [prod[0] % p])
        return t

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        return np.argmin(self.add_table, axis=1)

    @functools.cached_property
    def inv_table(self) -> np.ndarray:
        inv = np.zeros(self.q, dtype=np.int64)
        for a in range(1, self.q):
            inv[a] = int(np.flatnonzero(self.mul_table[a] == 1)[0])
        return inv


@dataclass(frozen=True)
class ChainRing:
    """A validated finite chain ring; build with :func:`make_ring`."""

    family: Family
    p: int
    e: int
    m: int
    modulus_poly: tuple[int, ...] = field(default=(1, 0))

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def size(self) -> int:
        return self.q**self.m

    @property
    def num_units(self) -> int:
        return self.q**self.m - self.q ** (self.m - 1)

    @property
    def theta(self) -> int:
        # p for Z_{p^m}, u for F_q[u]/(u^m): both have index q
        return self.q

    @property
    def gamma(self) -> int:
        """The generic nonzero homogeneous weight (q-1) q^(m-2)."""
        return (self.q - 1) * self.q ** (self.m - 2)

    @functools.cached_property
    def field(self) -> GaloisField:
        return GaloisField(self.p, self.e, self.modulus_poly)

    @functools.cached_property
    def digit_table(self) -> np.ndarray:
        idx = np.arange(self.size)
        return np.stack([(idx // self.q**i) % self.q for i in range(self.m)], axis=1)

    @functools.cached_property
    def valuation_table(self) -> np.ndarray:
        nz = self.digit_table != 0
        return np.where(nz.any(axis=1), nz.argmax(axis=1), self.m)

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        n = self.size
        a = np.arange(n)
        if self.family is Family.ZPM:
            return (a[:, None] + a[None, :]) % n
        d = self.digit_table
        fa = self.field.add_table
        out = np.zeros((n, n), dtype=np.int64)
        for i in range(self.m):
            out += fa[d[:, None, i], d[None, :, i]] * self.q**i
        return out

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        n = self.size
        a = np.arange(n)
        if self.family is Family.ZPM:
            return (a[:, None] * a[None, :]) % n
        d = self.digit_table
        fa, fm = self.field.add_table, self.field.mul_table
        out = np.zeros((n, n), dtype=np.int64)
        for k in range(self.m):
            acc = np.zeros((n, n), dtype=np.int64)
            for i in range(k + 1):
                acc = fa[acc, fm[d[:, None, i], d[None, :, k - i]]]
            out += acc * self.q**k
        return out

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        return np.argmin(self.add_table, axis=1)

    @functools.cached_property
    def sub_table(self) -> np.ndarray:
        return self.add_table[:, self.neg_table]

    @functools.cached_property
    def weight_table(self) -> np.ndarray:
        v = self.valuation_table
        return np.where(v == self.m, 0, np.where(v == self.m - 1, self.q ** (self.m - 1), self.gamma))

    @functools.cached_property
    def unit_mask(self) -> np.ndarray:
        return self.digit_table[:, 0] != 0

    def element(self, value: int | str) -> RingElement:
        if isinstance(value, str):
            value = parse_token(self, value)
        if not 0 <= value < self.size:
            raise IndexOutOfRange(f"{value} is not an element index of a ring of size {self.size}")
        return RingElement(self, int(value))

    def __str__(self) -> str:
        if self.family is Family.ZPM:
            return f"Z_{self.p}^{self.m}"
        return f"F_{self.q}[u]/(u^{self.m})"


def make_ring(
    family: Family | str,
    p: int,
    e: int = 1,
    m: int = 2,
    modulus_poly: list[int] | tuple[int, ...] | None = None,
) -> ChainRing:
    family = Family(family.lower() if isinstance(family, str) else family)
    if not is_prime(p):
        raise NonPrime(f"p={p} is not prime")
    if e < 1:
        raise ValidationError("extension degree must be >= 1")
    if family is Family.ZPM and e != 1:
        raise ValidationError("Z_{p^m} has residue field F_p; e must be 1")
    if m < 2:
        raise DepthTooSmall(f"depth m={m}; only m >= 2 is supported")
    if modulus_poly is None:
        if e > 1:
            raise ValidationError("an irreducible modulus polynomial is required when e > 1")
        modulus_poly = (1, 0)
    modulus_poly = tuple(int(c) for c in modulus_poly)
    if len(modulus_poly) != e + 1 or modulus_poly[0] % p == 0:
        raise ValidationError(f"modulus polynomial must have exactly degree e={e}")
    if not is_irreducible(list(modulus_poly), p):
        raise ReduciblePolynomial(f"{modulus_poly} is reducible over F_{p}")
    if (p**e) ** m > MAX_RING_SIZE:
        raise EnumerationTooLarge(f"ring of size {(p**e)**m} exceeds table limit {MAX_RING_SIZE}")
    return ChainRing(family, p, e, m, modulus_poly)


@dataclass(frozen=True)
class RingElement:
    ring: ChainRing
    value: int

    def _check(self, other: RingElement) -> None:
        if not isinstance(other, RingElement) or other.ring != self.ring:
            raise RingMismatch("operands belong to different rings")

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.ring, int(self.ring.add_table[self.value, other.value]))

    def __sub__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.ring, int(self.ring.sub_table[self.value, other.value]))

    def __mul__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.ring, int(self.ring.mul_table[self.value, other.value]))

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, int(self.ring.neg_table[self.value]))

    @property
    def digits(self) -> tuple[int, ...]:
        """Theta-adic digits a_0, ..., a_{m-1} as residue-field indices."""
        return tuple(int(d) for d in self.ring.digit_table[self.value])

    @classmethod
    def from_digits(cls, ring: ChainRing, digits) -> RingElement:
        if len(digits) != ring.m or any(not 0 <= d < ring.q for d in digits):
            raise ValidationError(f"need {ring.m} digits in 0..{ring.q - 1}")
        return cls(ring, sum(int(d) * ring.q**i for i, d in enumerate(digits)))

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return format_token(self.ring, self.value)


def add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def neg(a: RingElement) -> RingElement:
    return -a


def is_unit(a: RingElement) -> bool:
    return bool(a.ring.unit_mask[a.value])


def hom_weight(a: RingElement) -> int:
    return int(a.ring.weight_table[a.value])


def enumerate_ring(ring: ChainRing) -> list[RingElement]:
    return [RingElement(ring, i) for i in range(ring.size)]


def units(ring: ChainRing) -> list[RingElement]:
    return [RingElement(ring, int(i)) for i in np.flatnonzero(ring.unit_mask)]


def ideal_indices(ring: ChainRing, j: int) -> np.ndarray:
    """Indices of <theta^j> in canonical order (the multiples of q^j)."""
    if not 0 <= j <= ring.m:
        raise IndexOutOfRange(f"j={j} outside 0..{ring.m}")
    return np.arange(0, ring.size, ring.q**j) if j < ring.m else np.zeros(1, dtype=np.int64)


def ideal_elements(ring: ChainRing, j: int) -> list[RingElement]:
    return [RingElement(ring, int(i)) for i in ideal_indices(ring, j)]


_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def format_token(ring: ChainRing, value: int) -> str:
    if ring.family is Family.ZPM:
        return str(int(value))
    d = ring.digit_table[int(value)]
    return "".join(_DIGITS[int(x)] for x in reversed(d))


def parse_token(ring: ChainRing, token: str) -> int:
    token = token.strip()
    if ring.family is Family.ZPM:
        value = int(token)
        if not 0 <= value < ring.size:
            raise ValidationError(f"element {token!r} out of range for {ring}")
        return value
    if len(token) != ring.m:
        raise ValidationError(f"element token {token!r} must have {ring.m} digits")
    digits = [_DIGITS.index(c) if c in _DIGITS else ring.q for c in reversed(token.lower())]
    if any(d >= ring.q for d in digits):
        raise ValidationError(f"element token {token!r} has a digit >= q={ring.q}")
    return sum(d * ring.q**i for i, d in enumerate(digits))
