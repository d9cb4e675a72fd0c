"""Generating functions for partition counts and rank-refined counts.

Three routes live here:

* :func:`counting_series` - the integer generating function of a family;
* :func:`rank_gf_at_root` - the two-variable rank generating function with
  z specialised to a power of zeta_t, built factor by factor from the parts
  each component may use;
* :func:`closed_form_rhs` - the reduced theta/eta quotient that the
  specialised generating function collapses to.

:func:`class_counts_dft` inverts the root-of-unity evaluations to recover the
residue-class counts without enumerating anything.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from multirank.cyclotomic import (
    CyclotomicInt,
    as_rational_integer,
    cyclotomic_ring,
    is_odd_prime,
    zeta_power,
)
from multirank.errors import ConsistencyError, UsageError
from multirank.families import (
    OVER,
    PLAIN,
    POD,
    R4,
    RBAR,
    RETI,
    RSTAR,
    ClassCountTable,
    FamilySpec,
    colored,
    fourcolor,
)
from multirank.series import (
    Monomial,
    TruncatedSeries,
    divide_pochhammer,
    jtp_modified_sum,
    multiply_pochhammer,
    series_dilate,
    theta_sum,
)


def _component_gf(base: str, d: int, s: TruncatedSeries, z=1) -> TruncatedSeries:
    """Multiply s by the generating function of one component.

    ``z`` marks every part (it is the weight carried by the component's
    length); parts are multiples of d.
    """
    if base == PLAIN:
        return divide_pochhammer(s, Monomial(z, d), d)
    if base == OVER:
        s = multiply_pochhammer(s, Monomial(-z, d), d)
        return divide_pochhammer(s, Monomial(z, d), d)
    if base == POD:
        # odd multiples of d appear at most once, even ones freely
        if d % 2:
            s = multiply_pochhammer(s, Monomial(-z, d), 2 * d)
            return divide_pochhammer(s, Monomial(z, 2 * d), 2 * d)
        return divide_pochhammer(s, Monomial(z, d), d)
    raise UsageError(f"unknown base family {base!r}")


@lru_cache(maxsize=256)
def counting_series(spec: FamilySpec, truncation: int) -> TruncatedSeries:
    """Number of weight-n objects of the family, n = 0..truncation."""
    if truncation < 0:
        raise UsageError("truncation must be non-negative")
    s = TruncatedSeries.one(truncation)
    for d in spec.divisors:
        s = _component_gf(spec.base, d, s)
    return s


def component_weights(spec: FamilySpec, statistic: str) -> tuple[int, ...]:
    """Per-component multiplier of the length, for length-linear statistics."""
    s = spec.components
    if statistic == RBAR:
        if s % 2:
            raise UsageError(f"r-bar needs an even number of components, got {s}")
        return tuple(i + 1 if i < s // 2 else -(s - i) for i in range(s))
    if statistic == RSTAR:
        if s % 2 == 0:
            raise UsageError(f"r* needs an odd number of components, got {s}")
        half = (s - 1) // 2
        return tuple(i + 1 if i < half else (0 if i == s - 1 else -(s - 1 - i)) for i in range(s))
    if statistic == R4:
        if spec.kind != "fourcolor":
            raise UsageError("r4 is defined on 4-colored partitions of type (c, d)")
        return (1, -1, 1, -1)
    raise UsageError(f"{statistic} is not a weighted length sum")


def _rank_gf(spec: FamilySpec, statistic: str, t: int, truncation: int, power: int) -> TruncatedSeries:
    ring = cyclotomic_ring(t)
    s = TruncatedSeries.one(truncation, ring)
    if statistic == RETI:
        if spec.kind not in ("cubic", "overcubic"):
            raise UsageError("Reti's crank is defined on cubic and overcubic partitions")
        z, zinv = zeta_power(t, power), zeta_power(t, -power)
        one = ring.one
        # red: odd parts unmarked, even parts carry z; blue: even parts carry 1/z
        if spec.base == OVER:
            s = multiply_pochhammer(s, Monomial(-one, 1), 2)
            s = multiply_pochhammer(s, Monomial(-z, 2), 2)
            s = multiply_pochhammer(s, Monomial(-zinv, 2), 2)
        s = divide_pochhammer(s, Monomial(one, 1), 2)
        s = divide_pochhammer(s, Monomial(z, 2), 2)
        return divide_pochhammer(s, Monomial(zinv, 2), 2)
    weights = component_weights(spec, statistic)
    for d, w in zip(spec.divisors, weights):
        s = _component_gf(spec.base, d, s, zeta_power(t, w * power))
    return s


# --- closed forms ----------------------------------------------------------


def _over_multi_rhs(t: int, n: int) -> TruncatedSeries:
    # (-q^t;q^t) phi(-q) / (q^t;q^t)
    s = theta_sum(Monomial(-1, 1), Monomial(-1, 1), n)
    s = multiply_pochhammer(s, Monomial(-1, t), t)
    return divide_pochhammer(s, Monomial(1, t), t)


def _pod_multi_rhs(t: int, n: int) -> TruncatedSeries:
    # (-q^t;q^2t) psi(-q) / (q^2t;q^2t)
    s = theta_sum(Monomial(-1, 1), Monomial(-1, 3), n)
    s = multiply_pochhammer(s, Monomial(-1, t), 2 * t)
    return divide_pochhammer(s, Monomial(1, 2 * t), 2 * t)


def _plain_multi_rhs(t: int, n: int) -> TruncatedSeries:
    # f(-q) / (q^t;q^t)
    s = theta_sum(Monomial(-1, 1), Monomial(-1, 2), n)
    return divide_pochhammer(s, Monomial(1, t), t)


def _plain_t_minus_3_rhs(t: int, n: int) -> TruncatedSeries:
    # (q, zeta^h q, zeta^-h q; q)_inf / (q^t;q^t), numerator by the modified triple product
    h = (t - 1) // 2
    s = jtp_modified_sum(zeta_power(t, h), n)
    return divide_pochhammer(s, Monomial(1, t), t)


def _rstar_rhs(base: str, t: int, n: int) -> TruncatedSeries:
    s = TruncatedSeries.one(n)
    if base == PLAIN:
        return divide_pochhammer(s, Monomial(1, t), t)
    if base == OVER:
        s = multiply_pochhammer(s, Monomial(-1, t), t)
        return divide_pochhammer(s, Monomial(1, t), t)
    s = multiply_pochhammer(s, Monomial(-1, t), 2 * t)
    return divide_pochhammer(s, Monomial(1, 2 * t), 2 * t)


def _cubic_rhs(n: int) -> TruncatedSeries:
    # psi(q) / (q^6;q^6), psi(q) = f(q, q^3)
    s = theta_sum(Monomial(1, 1), Monomial(1, 3), n)
    return divide_pochhammer(s, Monomial(1, 6), 6)


def _overcubic_rhs(n: int) -> TruncatedSeries:
    # (-q^6;q^6) / (q^6;q^6) * phi(q)
    s = theta_sum(Monomial(1, 1), Monomial(1, 1), n)
    s = multiply_pochhammer(s, Monomial(-1, 6), 6)
    return divide_pochhammer(s, Monomial(1, 6), 6)


def _fourcolor_rhs(c: int, d: int, n: int) -> TruncatedSeries:
    # (q, z^2 q, z^-2 q; q)(q^c) * (same)(q^d) / ((q^5c;q^5c)(q^5d;q^5d)) at z = zeta_5
    z2 = zeta_power(5, 2)
    s = series_dilate(jtp_modified_sum(z2, n // c), c, n)
    s = s * series_dilate(jtp_modified_sum(z2, n // d), d, n)
    s = divide_pochhammer(s, Monomial(1, 5 * c), 5 * c)
    return divide_pochhammer(s, Monomial(1, 5 * d), 5 * d)


def _closed_form_builder(spec: FamilySpec, statistic: str, t: int) -> Callable[[int], TruncatedSeries]:
    """Registry of the (family, statistic, t) combinations with a known reduction."""
    if not is_odd_prime(t):
        raise UsageError(f"{t} is not an odd prime")
    kind = spec.kind
    if kind.startswith("colored-"):
        s = spec.params[0]
        base = spec.base
        if statistic == RBAR:
            if base == OVER and s == t - 1:
                return lambda n: _over_multi_rhs(t, n)
            if base == POD and s == t - 1:
                return lambda n: _pod_multi_rhs(t, n)
            if base == PLAIN and s == t - 1:
                return lambda n: _plain_multi_rhs(t, n)
            if base == PLAIN and s == t - 3 and t >= 5:
                return lambda n: _plain_t_minus_3_rhs(t, n)
        if statistic == RSTAR and s == t:
            return lambda n: _rstar_rhs(base, t, n)
    if statistic == RETI and t == 3:
        if kind == "cubic":
            return _cubic_rhs
        if kind == "overcubic":
            return _overcubic_rhs
    if statistic == R4 and kind == "fourcolor" and t == 5:
        c, d = spec.params
        return lambda n: _fourcolor_rhs(c, d, n)
    raise UsageError(f"no registered rank generating function for {spec} with {statistic} at t={t}")


def is_supported(spec: FamilySpec, statistic: str, t: int) -> bool:
    try:
        _closed_form_builder(spec, statistic, t)
    except UsageError:
        return False
    return True


FOURCOLOR_REPRESENTATIVES = (
    (5, 5), (1, 5), (2, 5), (3, 5), (4, 5),
    (1, 1), (1, 2), (1, 3), (1, 4),
    (2, 2), (2, 3), (2, 4),
    (3, 3), (3, 4),
    (4, 4),
)  # fmt: skip


def supported_entries(t: int) -> list[tuple[FamilySpec, str]]:
    """Every registry entry for modulus t (four-colored types use minimal (c, d))."""
    out = [
        (colored(OVER, t - 1), RBAR),
        (colored(POD, t - 1), RBAR),
        (colored(PLAIN, t - 1), RBAR),
    ]
    if t >= 5:
        out.append((colored(PLAIN, t - 3), RBAR))
    out += [(colored(b, t), RSTAR) for b in (PLAIN, OVER, POD)]
    if t == 3:
        out += [(FamilySpec("cubic"), RETI), (FamilySpec("overcubic"), RETI)]
    if t == 5:
        out += [(fourcolor(c, d), R4) for c, d in FOURCOLOR_REPRESENTATIVES]
    return out


def rank_gf_at_root(
    spec: FamilySpec, statistic: str, t: int, truncation: int, power: int = 1
) -> TruncatedSeries:
    """Rank generating function with z = zeta_t^power, over Z[zeta_t]."""
    _closed_form_builder(spec, statistic, t)
    return _rank_gf(spec, statistic, t, truncation, power)


def closed_form_rhs(spec: FamilySpec, statistic: str, t: int, truncation: int) -> TruncatedSeries:
    """Reduced theta/eta quotient equal to the rank generating function at z = zeta_t."""
    build = _closed_form_builder(spec, statistic, t)
    s = build(truncation)
    ring = cyclotomic_ring(t)
    return s if s.ring == ring else s.embed(ring)


def class_count_tables_dft(
    spec: FamilySpec, statistic: str, t: int, truncation: int
) -> list[ClassCountTable]:
    """Residue-class counts for n = 0..truncation by inverting zeta-evaluations."""
    _closed_form_builder(spec, statistic, t)
    ring = cyclotomic_ring(t)
    evaluations = [counting_series(spec, truncation).embed(ring)]
    evaluations += [_rank_gf(spec, statistic, t, truncation, j) for j in range(1, t)]
    tables = []
    for n in range(truncation + 1):
        values = [ev[n] for ev in evaluations]
        counts = []
        for i in range(t):
            acc: CyclotomicInt = ring.zero
            for j, v in enumerate(values):
                acc = acc + v * zeta_power(t, -i * j)
            r = as_rational_integer(acc)
            if r is None or r % t:
                raise ConsistencyError(f"DFT inversion at n={n}, class {i} gave {acc!r}")
            counts.append(r // t)
        tables.append(ClassCountTable(t, n, tuple(counts)))
    return tables


def class_counts_dft(spec: FamilySpec, statistic: str, t: int, n: int) -> ClassCountTable:
    return class_count_tables_dft(spec, statistic, t, n)[n]


VECTOR_CRANK_PROGRESSIONS = {5: 4, 7: 5, 11: 6}


def vector_crank_series(t: int, truncation: int) -> TruncatedSeries:
    """``(q;q) / ((zeta q;q)(zeta^-1 q;q))`` over Z[zeta_t]."""
    ring = cyclotomic_ring(t)
    s = multiply_pochhammer(TruncatedSeries.one(truncation, ring), Monomial(ring.one, 1), 1)
    s = divide_pochhammer(s, Monomial(zeta_power(t, 1), 1), 1)
    return divide_pochhammer(s, Monomial(zeta_power(t, -1), 1), 1)


def vector_crank_vanishing(t: int, truncation: int) -> tuple[list[int], list[int]]:
    """Return (vanishing, non-vanishing) indices n <= truncation in the progression.

    Verification passes iff the second list is empty.
    """
    if t not in VECTOR_CRANK_PROGRESSIONS:
        raise UsageError("the vector crank progressions exist for t in {5, 7, 11}")
    s = vector_crank_series(t, truncation)
    residue = VECTOR_CRANK_PROGRESSIONS[t]
    ok, bad = [], []
    for n in range(residue, truncation + 1, t):
        (bad if s[n] else ok).append(n)
    return ok, bad


def generalized_series(c: int, l: int, d: int, m: int, truncation: int) -> TruncatedSeries:
    """``1 / ((q^c;q^c)^l (q^d;q^d)^m)``."""
    return counting_series(FamilySpec("generalized", (c, l, d, m)), truncation)


__all__ = [
    "counting_series",
    "rank_gf_at_root",
    "closed_form_rhs",
    "class_counts_dft",
    "class_count_tables_dft",
    "vector_crank_series",
    "vector_crank_vanishing",
    "supported_entries",
    "is_supported",
    "generalized_series",
    "component_weights",
    "FOURCOLOR_REPRESENTATIVES",
]
