"""Truncated formal power series in q over an exact coefficient ring.

A :class:`TruncatedSeries` stores every coefficient from q^0 through
q^truncation.  The coefficient ring is either the integers (:data:`ZZ`) or a
cyclotomic ring from :mod:`multirank.cyclotomic`; the code here only relies on
``+``, ``-``, ``*``, ``**`` and the ring object's ``zero``/``one``/``embed``/
``inverse``.

Theta functions are available both as bilateral sums (:func:`theta_sum`) and
as Jacobi triple products (:func:`jtp_product`), so the two can be compared
coefficient by coefficient.
"""

from __future__ import annotations

from typing import Any, Iterable, NamedTuple, Sequence

from multirank.errors import DomainError, UsageError


class IntegerRing:
    """The rational integers, using Python ints as elements."""

    zero = 0
    one = 1

    def embed(self, n: int) -> int:
        return int(n)

    def inverse(self, x: int) -> int:
        if x in (1, -1):
            return x
        raise DomainError(f"{x} is not a unit in Z")

    def __repr__(self) -> str:
        return "ZZ"


ZZ = IntegerRing()


def ring_of(x: Any):
    """Return the ring an element lives in (ints belong to :data:`ZZ`)."""
    return getattr(x, "ring", ZZ)


class Monomial(NamedTuple):
    """``coeff * q**exponent``; used for Pochhammer and theta arguments."""

    coeff: Any
    exponent: int

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(self.coeff * other.coeff, self.exponent + other.exponent)

    def __neg__(self) -> "Monomial":
        return Monomial(-self.coeff, self.exponent)


class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a power series, exact through q^N."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable[Any], truncation: int, ring=ZZ):
        if truncation < 0:
            raise UsageError("truncation must be non-negative")
        coeffs = list(coeffs)
        if len(coeffs) > truncation + 1:
            raise UsageError(
                f"{len(coeffs)} coefficients do not fit truncation {truncation}"
            )
        coeffs.extend([ring.zero] * (truncation + 1 - len(coeffs)))
        self.coeffs = tuple(coeffs)
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs: list, ring) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.ring = ring
        return obj

    @classmethod
    def zero(cls, truncation: int, ring=ZZ) -> "TruncatedSeries":
        return cls([], truncation, ring)

    @classmethod
    def one(cls, truncation: int, ring=ZZ) -> "TruncatedSeries":
        return cls([ring.one], truncation, ring)

    @classmethod
    def monomial(cls, coeff: Any, exponent: int, truncation: int, ring=ZZ) -> "TruncatedSeries":
        coeffs = [ring.zero] * (truncation + 1)
        if 0 <= exponent <= truncation:
            coeffs[exponent] = coeff
        return cls._raw(coeffs, ring)

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Any:
        if not 0 <= n <= self.truncation:
            raise IndexError(f"q^{n} is outside truncation {self.truncation}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.truncation == other.truncation and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*q^{i}" for i, c in enumerate(self.coeffs[:8]) if c != 0]
        more = " + ..." if self.truncation >= 8 else ""
        return f"TruncatedSeries({' + '.join(terms) or '0'}{more}; N={self.truncation})"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_compatible(self, other)
        return TruncatedSeries._raw([a - b for a, b in zip(self.coeffs, other.coeffs)], self.ring)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._raw([-a for a in self.coeffs], self.ring)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries._raw([a * other for a in self.coeffs], self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return series_invert(self) ** (-k)
        result = TruncatedSeries.one(self.truncation, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def map(self, fn, ring) -> "TruncatedSeries":
        """Apply ``fn`` to every coefficient, landing in ``ring``."""
        return TruncatedSeries._raw([fn(c) for c in self.coeffs], ring)

    def embed(self, ring) -> "TruncatedSeries":
        """View an integer series as a series over ``ring``."""
        return self.map(ring.embed, ring)

    def truncate(self, n: int) -> "TruncatedSeries":
        if n > self.truncation:
            raise UsageError(f"cannot extend truncation {self.truncation} to {n}")
        return TruncatedSeries._raw(list(self.coeffs[: n + 1]), self.ring)


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.truncation != b.truncation:
        raise UsageError(f"truncation mismatch: {a.truncation} vs {b.truncation}")
    if a.ring != b.ring:
        raise UsageError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(a, b)
    return TruncatedSeries._raw([x + y for x, y in zip(a.coeffs, b.coeffs)], a.ring)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, exact through q^N."""
    _check_compatible(a, b)
    n = a.truncation
    out = [a.ring.zero] * (n + 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(n + 1 - i):
            y = bc[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return TruncatedSeries._raw(out, a.ring)


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be a unit."""
    ring = a.ring
    inv0 = ring.inverse(a.coeffs[0])
    n = a.truncation
    ac = a.coeffs
    out = [ring.zero] * (n + 1)
    out[0] = inv0
    for m in range(1, n + 1):
        acc = ring.zero
        for k in range(1, m + 1):
            x = ac[k]
            if x:
                acc = acc + x * out[m - k]
        out[m] = -(inv0 * acc)
    return TruncatedSeries._raw(out, ring)


def series_dilate(a: TruncatedSeries, k: int, truncation: int) -> TruncatedSeries:
    """Substitute q -> q^k, producing a series exact through q^truncation."""
    if k < 1:
        raise UsageError("dilation factor must be positive")
    if a.truncation < truncation // k:
        raise UsageError(
            f"dilating by {k} to q^{truncation} needs truncation >= {truncation // k}"
        )
    out = [a.ring.zero] * (truncation + 1)
    for i in range(truncation // k + 1):
        out[i * k] = a.coeffs[i]
    return TruncatedSeries._raw(out, a.ring)


def _factor_exponents(m: Monomial, step: int, n: int):
    if step <= 0:
        raise UsageError("Pochhammer step must be positive")
    if m.exponent < 0:
        raise DomainError("Pochhammer base exponent must be non-negative")
    return range(m.exponent, n + 1, step)


def multiply_pochhammer(s: TruncatedSeries, m: Monomial, step: int, ratio=1) -> TruncatedSeries:
    """``s * prod_{k>=0} (1 - m.coeff ratio^k q^(m.exponent + k*step))``.

    ``ratio`` is the coefficient of the Pochhammer base ``ratio * q^step``.
    """
    ring = s.ring
    out = list(s.coeffs)
    n = len(out) - 1
    c = m.coeff
    for k, e in enumerate(_factor_exponents(m, step, n)):
        if k:
            c = c * ratio
        if e == 0:
            f = ring.one - c
            out = [f * x for x in out]
            continue
        for i in range(n, e - 1, -1):
            x = out[i - e]
            if x:
                out[i] = out[i] - c * x
    return TruncatedSeries._raw(out, ring)


def divide_pochhammer(s: TruncatedSeries, m: Monomial, step: int, ratio=1) -> TruncatedSeries:
    """``s / prod_{k>=0} (1 - m.coeff ratio^k q^(m.exponent + k*step))``.

    Each factor is a geometric series, so division costs O(N) per factor
    instead of a full series inversion.
    """
    ring = s.ring
    out = list(s.coeffs)
    n = len(out) - 1
    c = m.coeff
    for k, e in enumerate(_factor_exponents(m, step, n)):
        if k:
            c = c * ratio
        if e == 0:
            f = ring.inverse(ring.one - c)
            out = [f * x for x in out]
            continue
        for i in range(e, n + 1):
            x = out[i - e]
            if x:
                out[i] = out[i] + c * x
    return TruncatedSeries._raw(out, ring)


def pochhammer_expand(m: Monomial, step: int, truncation: int, ring=None, ratio=1) -> TruncatedSeries:
    """``(m; ratio q^step)_inf`` truncated at q^truncation.

    Factors whose leading exponent exceeds the truncation are skipped.
    """
    ring = ring or ring_of(m.coeff)
    return multiply_pochhammer(TruncatedSeries.one(truncation, ring), m, step, ratio)


def _check_theta_args(a: Monomial, b: Monomial) -> None:
    if a.exponent + b.exponent <= 0:
        raise DomainError("divergent theta argument: need a.exponent + b.exponent >= 1")
    if a.exponent < 0 or b.exponent < 0:
        raise DomainError("theta arguments with negative q-exponent are not power series")


def theta_sum(a: Monomial, b: Monomial, truncation: int, ring=None) -> TruncatedSeries:
    """Ramanujan's f(a, b) as the bilateral sum of a^(n(n+1)/2) b^(n(n-1)/2)."""
    _check_theta_args(a, b)
    ring = ring or ring_of(a.coeff)
    out = [ring.zero] * (truncation + 1)
    misses = 0
    n = 0
    while misses < 2:
        hit = False
        signed = (n,) if n == 0 else (n, -n)
        for k in signed:
            pa = k * (k + 1) // 2
            pb = k * (k - 1) // 2
            e = a.exponent * pa + b.exponent * pb
            if e <= truncation:
                out[e] = out[e] + a.coeff**pa * b.coeff**pb
                hit = True
        misses = 0 if hit else misses + 1
        n += 1
    return TruncatedSeries._raw(out, ring)


def jtp_product(a: Monomial, b: Monomial, truncation: int, ring=None) -> TruncatedSeries:
    """The product side ``(-a, -b, ab; ab)_inf`` of the Jacobi triple product."""
    _check_theta_args(a, b)
    ring = ring or ring_of(a.coeff)
    ab = a * b
    s = TruncatedSeries.one(truncation, ring)
    for m in (-a, -b, ab):
        s = multiply_pochhammer(s, m, ab.exponent, ab.coeff)
    return s


def jtp_modified_sum(z: Any, truncation: int, ring=None) -> TruncatedSeries:
    """``sum_{n>=0} (-1)^n q^(n(n+1)/2) z^(-n) (1 - z^(2n+1)) / (1 - z)``.

    The quotient is expanded as ``z^-n + ... + z^n``, which also covers
    ``z = 1`` (giving ``2n + 1``) without a special case.
    """
    ring = ring or ring_of(z)
    zinv = ring.inverse(z)
    out = [ring.zero] * (truncation + 1)
    window = ring.one
    up = down = ring.one
    n = 0
    while n * (n + 1) // 2 <= truncation:
        if n:
            up = up * z
            down = down * zinv
            window = window + up + down
        e = n * (n + 1) // 2
        out[e] = window if n % 2 == 0 else -window
        n += 1
    return TruncatedSeries._raw(out, ring)


def from_coefficients(values: Sequence[int]) -> TruncatedSeries:
    """Integer series from an explicit coefficient list (truncation = len - 1)."""
    return TruncatedSeries(values, len(values) - 1)
