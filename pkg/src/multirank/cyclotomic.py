"""Exact arithmetic in Z[zeta_t] for an odd prime t.

Elements are stored in the power basis 1, zeta, ..., zeta^(t-2).  Products are
formed as cyclic convolutions of length t and then reduced with
``zeta^(t-1) = -(1 + zeta + ... + zeta^(t-2))``, so two elements are equal
exactly when their coordinate tuples are.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from multirank.errors import DomainError, UsageError
from multirank.series import Monomial, TruncatedSeries, ZZ, multiply_pochhammer


def is_odd_prime(t: int) -> bool:
    if not isinstance(t, int) or t < 3 or t % 2 == 0:
        return False
    d = 3
    while d * d <= t:
        if t % d == 0:
            return False
        d += 2
    return True


def _require_odd_prime(t: int) -> None:
    if not is_odd_prime(t):
        raise UsageError(f"{t} is not an odd prime")


class CyclotomicInt:
    """``sum(coords[k] * zeta_t**k for k in range(t - 1))``."""

    __slots__ = ("t", "coords")

    def __init__(self, t: int, coords: Sequence[int]):
        _require_odd_prime(t)
        if len(coords) != t - 1:
            raise UsageError(f"Z[zeta_{t}] elements need {t - 1} coordinates, got {len(coords)}")
        self.t = t
        self.coords = tuple(int(c) for c in coords)

    @classmethod
    def _from_full(cls, t: int, full: Sequence[int]) -> "CyclotomicInt":
        # full has length t; fold the zeta^(t-1) coordinate back into the basis
        last = full[t - 1]
        obj = cls.__new__(cls)
        obj.t = t
        obj.coords = tuple(full[k] - last for k in range(t - 1)) if last else tuple(full[: t - 1])
        return obj

    @property
    def ring(self) -> "CyclotomicRing":
        return cyclotomic_ring(self.t)

    def _coerce(self, other) -> Optional["CyclotomicInt"]:
        if isinstance(other, CyclotomicInt):
            if other.t != self.t:
                raise UsageError(f"cannot mix Z[zeta_{self.t}] and Z[zeta_{other.t}]")
            return other
        if isinstance(other, int):
            return CyclotomicInt._from_full(self.t, (other,) + (0,) * (self.t - 1))
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclotomicInt):
            return self.t == other.t and self.coords == other.coords
        if isinstance(other, int):
            return self.coords[0] == other and not any(self.coords[1:])
        return NotImplemented

    def __hash__(self) -> int:
        r = as_rational_integer(self)
        return hash(r) if r is not None else hash((self.t, self.coords))

    def __bool__(self) -> bool:
        return any(self.coords)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coords):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*z{self.t}^{k}")
        return " + ".join(terms) if terms else "0"

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        obj = CyclotomicInt.__new__(CyclotomicInt)
        obj.t = self.t
        obj.coords = tuple(x + y for x, y in zip(self.coords, o.coords))
        return obj

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicInt":
        obj = CyclotomicInt.__new__(CyclotomicInt)
        obj.t = self.t
        obj.coords = tuple(-x for x in self.coords)
        return obj

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        obj = CyclotomicInt.__new__(CyclotomicInt)
        obj.t = self.t
        obj.coords = tuple(x - y for x, y in zip(self.coords, o.coords))
        return obj

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            obj = CyclotomicInt.__new__(CyclotomicInt)
            obj.t = self.t
            obj.coords = tuple(x * other for x in self.coords)
            return obj
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = self.t
        a, b = self.coords, o.coords
        # outer loop over the sparser operand
        if sum(1 for x in a if x) > sum(1 for y in b if y):
            a, b = b, a
        full = [0] * t
        nz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in nz:
                k = i + j
                if k >= t:
                    k -= t
                full[k] += x * y
        return CyclotomicInt._from_full(t, full)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CyclotomicInt":
        if k < 0:
            return self.inverse() ** (-k)
        sz = _signed_zeta_power(self)
        if sz is not None:
            sign, j = sz
            return zeta_power(self.t, j * k) * (sign**k)
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def full(self) -> tuple[int, ...]:
        """Coordinates on 1, zeta, ..., zeta^(t-1) with the last entry 0."""
        return self.coords + (0,)

    def conjugate(self, j: int) -> "CyclotomicInt":
        """Galois automorphism zeta -> zeta^j (j coprime to t)."""
        t = self.t
        if j % t == 0:
            raise UsageError("Galois conjugation needs j coprime to t")
        full = [0] * t
        for k, c in enumerate(self.coords):
            full[(j * k) % t] += c
        return CyclotomicInt._from_full(t, full)

    def norm(self) -> int:
        """Field norm, the product of all t - 1 Galois conjugates."""
        prod = self
        for j in range(2, self.t):
            prod = prod * self.conjugate(j)
        value = as_rational_integer(prod)
        if value is None:
            raise RuntimeError("norm did not land in Z")  # pragma: no cover
        return value

    def inverse(self) -> "CyclotomicInt":
        sz = _signed_zeta_power(self)
        if sz is not None:
            sign, j = sz
            return zeta_power(self.t, -j) * sign
        n = self.norm()
        if n not in (1, -1):
            raise DomainError(f"{self!r} has norm {n}; not a unit of Z[zeta_{self.t}]")
        cofactor = self.ring.one
        for j in range(2, self.t):
            cofactor = cofactor * self.conjugate(j)
        return cofactor * n


def _signed_zeta_power(a: CyclotomicInt) -> Optional[tuple[int, int]]:
    """Return (sign, j) when a == sign * zeta^j, else None."""
    nz = [(k, c) for k, c in enumerate(a.coords) if c]
    if len(nz) == 1 and nz[0][1] in (1, -1):
        return nz[0][1], nz[0][0]
    if len(nz) == a.t - 1:
        first = a.coords[0]
        if first in (1, -1) and all(c == first for c in a.coords):
            return -first, a.t - 1
    return None


@dataclass(frozen=True)
class CyclotomicRing:
    """Ring descriptor for Z[zeta_t], used as the coefficient ring of a series."""

    t: int

    @property
    def zero(self) -> CyclotomicInt:
        return CyclotomicInt._from_full(self.t, (0,) * self.t)

    @property
    def one(self) -> CyclotomicInt:
        return zeta_power(self.t, 0)

    def embed(self, n: int) -> CyclotomicInt:
        return CyclotomicInt._from_full(self.t, (int(n),) + (0,) * (self.t - 1))

    def inverse(self, x) -> CyclotomicInt:
        if isinstance(x, int):
            x = self.embed(x)
        return x.inverse()

    def zeta(self, k: int = 1) -> CyclotomicInt:
        return zeta_power(self.t, k)

    def __repr__(self) -> str:
        return f"Z[zeta_{self.t}]"


@lru_cache(maxsize=None)
def cyclotomic_ring(t: int) -> CyclotomicRing:
    _require_odd_prime(t)
    return CyclotomicRing(t)


@lru_cache(maxsize=4096)
def zeta_power(t: int, k: int) -> CyclotomicInt:
    """Canonical form of zeta_t^(k mod t)."""
    _require_odd_prime(t)
    full = [0] * t
    full[k % t] = 1
    return CyclotomicInt._from_full(t, full)


def as_rational_integer(a: CyclotomicInt) -> Optional[int]:
    if any(a.coords[1:]):
        return None
    return a.coords[0]


def class_sum(counts: Sequence[int], t: int) -> CyclotomicInt:
    """``sum(counts[i] * zeta_t**i)``; zero exactly when all counts agree."""
    if len(counts) != t:
        raise UsageError(f"need {t} class counts, got {len(counts)}")
    _require_odd_prime(t)
    return CyclotomicInt._from_full(t, [int(c) for c in counts])


def cyclotomic_factorization_check(t: int, truncation: int) -> bool:
    """Check ``prod_j (zeta^j q; q)_inf == (q^t; q^t)_inf`` through q^truncation."""
    ring = cyclotomic_ring(t)
    lhs = TruncatedSeries.one(truncation, ring)
    for j in range(t):
        lhs = multiply_pochhammer(lhs, Monomial(zeta_power(t, j), 1), 1)
    rhs = multiply_pochhammer(TruncatedSeries.one(truncation, ZZ), Monomial(1, t), t)
    return lhs == rhs.embed(ring)
