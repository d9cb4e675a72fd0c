"""Theorem drivers: each congruence becomes a report over a range of weights.

Every applicable weight n is checked up to three ways:

* ``divisible`` - the integer counting series coefficient is divisible by the
  stated modulus (cheap, run for every n up to ``n_max``);
* ``vanishing`` / ``dft_*`` - the zeta-specialised generating function has a
  zero coefficient and the DFT-recovered classes are equal (n <= cyclo_max);
* ``brute_*`` - enumeration of every object confirms the classes, and the
  two class-count routes agree (n <= brute_max).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional

from multirank import __version__
from multirank.counting import (
    FOURCOLOR_REPRESENTATIVES,
    class_count_tables_dft,
    counting_series,
    generalized_series,
    rank_gf_at_root,
    vector_crank_vanishing,
)
from multirank.cyclotomic import class_sum, is_odd_prime
from multirank.errors import UsageError
from multirank.families import (
    CUBIC,
    OVER,
    OVERCUBIC,
    PLAIN,
    POD,
    R4,
    RBAR,
    RETI,
    RSTAR,
    FamilySpec,
    colored,
    fourcolor,
)
from multirank.partitions import (
    MultiPartition,
    class_counts_bruteforce,
    enumerate_tuples,
    format_partition,
    multirank_rbar,
    reti_crank,
)
from multirank.series import (
    Monomial,
    TruncatedSeries,
    divide_pochhammer,
    jtp_product,
    multiply_pochhammer,
    pochhammer_expand,
    theta_sum,
)

DEFAULT_CYCLO_MAX = 60

# enumeration is exponential in the weight; the series checks cover the rest
_BRUTE_CEILINGS = {
    (PLAIN, 1): 40, (PLAIN, 2): 25, (PLAIN, 3): 18, (PLAIN, 4): 14, (PLAIN, 5): 12, (PLAIN, 6): 10,
    (OVER, 1): 24, (OVER, 2): 16, (OVER, 3): 12, (OVER, 4): 10,
    (POD, 1): 40, (POD, 2): 25, (POD, 3): 20, (POD, 4): 16, (POD, 5): 14, (POD, 6): 12,
}  # fmt: skip


def default_brute_ceiling(spec: FamilySpec) -> int:
    return _BRUTE_CEILINGS.get((spec.base, spec.components), 8)


def is_qnr(n: int, t: int) -> bool:
    """Quadratic nonresidue mod t; 0 is neither residue nor nonresidue."""
    if not is_odd_prime(t):
        raise UsageError(f"{t} is not an odd prime")
    r = n % t
    return r != 0 and r not in {k * k % t for k in range(1, t)}


@dataclass
class Verdict:
    key: Any
    applicable: bool
    checks: dict[str, bool] = field(default_factory=dict)
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.applicable or all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "applicable": self.applicable,
            "passed": self.passed,
            "checks": dict(self.checks),
            "data": dict(self.data),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        return cls(d["key"], d["applicable"], dict(d["checks"]), dict(d["data"]))


@dataclass
class TheoremReport:
    theorem: str
    params: dict[str, Any]
    verdicts: list[Verdict] = field(default_factory=list)
    config: dict[str, Any] = field(default_factory=dict)
    version: str = __version__

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def applicable(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.applicable]

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def to_dict(self) -> dict:
        return {
            "tool": "multirank",
            "version": self.version,
            "theorem": self.theorem,
            "params": self.params,
            "config": self.config,
            "passed": self.passed,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "TheoremReport":
        return cls(
            d["theorem"],
            d["params"],
            [Verdict.from_dict(v) for v in d["verdicts"]],
            d.get("config", {}),
            d.get("version", __version__),
        )

    def summary(self) -> str:
        app = self.applicable
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.theorem} {self.params}: {status} ({len(app)} applicable of {len(self.verdicts)} checked)"]
        for v in app:
            flags = " ".join(f"{k}={'ok' if ok else 'FAIL'}" for k, ok in v.checks.items())
            classes = v.data.get("brute_classes") or v.data.get("dft_classes")
            extra = f" classes={','.join(classes)}" if classes else ""
            lines.append(f"  {v.key}: {flags}{extra}")
        return "\n".join(lines)


def _strs(xs: Iterable[int]) -> list[str]:
    return [str(x) for x in xs]


def _congruence_report(
    theorem: str,
    params: dict,
    spec: FamilySpec,
    statistic: str,
    t: int,
    weights: Iterable[int],
    applicable: Callable[[int], bool],
    modulus: int,
    even: bool,
    n_max: int,
    brute_max: Optional[int],
    cyclo_max: Optional[int],
) -> TheoremReport:
    brute_max = default_brute_ceiling(spec) if brute_max is None else brute_max
    cyclo_top = min(DEFAULT_CYCLO_MAX if cyclo_max is None else cyclo_max, n_max)
    params = dict(params, n_max=n_max, brute_max=brute_max, cyclo_max=cyclo_top)
    series = counting_series(spec, n_max)
    dft = gf = None
    if cyclo_top >= 0:
        dft = class_count_tables_dft(spec, statistic, t, cyclo_top)
        gf = rank_gf_at_root(spec, statistic, t, cyclo_top)
    report = TheoremReport(theorem, params)
    for n in weights:
        v = Verdict(n, applicable(n))
        report.verdicts.append(v)
        if not v.applicable:
            continue
        v.checks["divisible"] = series[n] % modulus == 0
        v.data["total"] = str(series[n])
        table = None
        if dft is not None and n <= cyclo_top:
            table = dft[n]
            v.checks["vanishing"] = not gf[n]
            v.checks["dft_equal"] = table.equal
            if even:
                v.checks["dft_even"] = table.even
            v.data["dft_classes"] = _strs(table.counts)
        if n <= brute_max:
            brute = class_counts_bruteforce(spec, statistic, t, n)
            v.checks["brute_equal"] = brute.equal
            if even:
                v.checks["brute_even"] = brute.even
            v.checks["class_sum_zero"] = not class_sum(brute.counts, t)
            if table is not None:
                v.checks["routes_agree"] = brute.counts == table.counts
            v.data["brute_classes"] = _strs(brute.counts)
    return report


def verify_multi_over(t: int, n_max: int, brute_max=None, cyclo_max=None) -> TheoremReport:
    """Multi-overpartitions with t-1 colors: equal, even r-bar classes at QNR weights."""
    return _congruence_report(
        "multi-over", {"t": t}, colored(OVER, t - 1), RBAR, t,
        range(1, n_max + 1), lambda n: is_qnr(n, t), 2 * t, True,
        n_max, brute_max, cyclo_max,
    )  # fmt: skip


def verify_multi_pod(t: int, n_max: int, brute_max=None, cyclo_max=None) -> TheoremReport:
    return _congruence_report(
        "multi-pod", {"t": t}, colored(POD, t - 1), RBAR, t,
        range(0, n_max + 1), lambda n: is_qnr(8 * n + 1, t), t, False,
        n_max, brute_max, cyclo_max,
    )  # fmt: skip


def verify_newmulti(t: int, base: str, n_max: int, brute_max=None, cyclo_max=None) -> TheoremReport:
    """t-colored partitions/overpartitions/pods under r*: equal classes for n not divisible by t."""
    if base not in (PLAIN, OVER, POD):
        raise UsageError(f"unknown base family {base!r}")
    over = base == OVER
    return _congruence_report(
        "newmulti", {"t": t, "family": base}, colored(base, t), RSTAR, t,
        range(1, n_max + 1), lambda n: n % t != 0, 2 * t if over else t, over,
        n_max, brute_max, cyclo_max,
    )  # fmt: skip


def verify_garvan_multipartitions(t: int, variant: int, n_max: int, brute_max=None, cyclo_max=None) -> TheoremReport:
    """``variant`` 1: t-1 colors, 24n+1 a QNR; ``variant`` 2: t-3 colors, 8n+1 a QNR."""
    if not is_odd_prime(t) or t <= 3:
        raise UsageError("Garvan's multipartition congruences need a prime t > 3")
    if variant == 1:
        spec, cond = colored(PLAIN, t - 1), (lambda n: is_qnr(24 * n + 1, t))
    elif variant == 2:
        spec, cond = colored(PLAIN, t - 3), (lambda n: is_qnr(8 * n + 1, t))
    else:
        raise UsageError("variant must be 1 (t-1 colors) or 2 (t-3 colors)")
    return _congruence_report(
        f"garvan-{variant}", {"t": t}, spec, RBAR, t,
        range(0, n_max + 1), cond, t, False, n_max, brute_max, cyclo_max,
    )  # fmt: skip


def verify_reti_cubic(n_max: int, brute_max=None, cyclo_max=None) -> TheoremReport:
    report = _congruence_report(
        "reti-cubic", {}, CUBIC, RETI, 3,
        range(0, n_max + 1), lambda n: n % 3 == 2, 3, False,
        n_max, brute_max, cyclo_max,
    )  # fmt: skip
    _, ok = check_table2()
    report.verdicts.append(Verdict("table-2", True, {"reti_column": ok}))
    return report


def verify_overcubic(n_max: int, brute_max=None, cyclo_max=None) -> TheoremReport:
    return _congruence_report(
        "overcubic", {}, OVERCUBIC, RETI, 3,
        range(0, n_max + 1), lambda n: n % 3 == 2, 6, True,
        n_max, brute_max, cyclo_max,
    )  # fmt: skip


# residues a with p_[c^2 d^2](5n + a) = 0 mod 5, keyed by (c mod 5, d mod 5) sorted
TABLE3: dict[tuple[int, int], tuple[int, ...]] = {
    (0, 0): (1, 2, 3, 4),
    (0, 1): (2, 3, 4),
    (0, 2): (1, 3, 4),
    (0, 3): (1, 2, 4),
    (0, 4): (1, 2, 3),
    (1, 1): (3, 4),
    (1, 2): (4,),
    (1, 3): (2,),
    (1, 4): (2, 3),
    (2, 2): (1, 3),
    (2, 3): (1, 4),
    (2, 4): (3,),
    (3, 3): (2, 4),
    (3, 4): (1,),
    (4, 4): (1, 2),
}


def residue_type(c: int, d: int) -> tuple[int, int]:
    i, j = sorted((c % 5, d % 5))
    return i, j


def table3_residues(c: int, d: int) -> tuple[int, ...]:
    return TABLE3[residue_type(c, d)]


MINIMAL_REPRESENTATIVE = {residue_type(c, d): (c, d) for c, d in FOURCOLOR_REPRESENTATIVES}


def verify_4c(c: int, d: int, n_max: int, brute_max=None, cyclo_max=None) -> TheoremReport:
    """Four-colored rank r4 splits p_[c^2 d^2](5n + a) into five equal classes.

    By default the brute-force route covers the two smallest weights of each
    listed residue.
    """
    spec = fourcolor(c, d)
    c, d = spec.params
    residues = table3_residues(c, d)
    if brute_max is None:
        brute_max = max(residues) + 5
    return _congruence_report(
        "fourcolor", {"c": c, "d": d, "type": list(residue_type(c, d)), "residues": list(residues)},
        spec, R4, 5, range(0, n_max + 1), lambda n: n % 5 in residues, 5, False,
        n_max, brute_max, cyclo_max,
    )  # fmt: skip


def verify_vector_crank(t: int, n_max: int) -> TheoremReport:
    """Zero coefficients of (q;q)/((zeta q;q)(zeta^-1 q;q)) along the Ramanujan progression."""
    ok, bad = vector_crank_vanishing(t, n_max)
    p = counting_series(colored(PLAIN, 1), n_max)
    report = TheoremReport("vector-crank", {"t": t, "n_max": n_max})
    for n in sorted(ok + bad):
        report.verdicts.append(Verdict(n, True, {"vanishing": n in ok, "divisible": p[n] % t == 0}, {"total": str(p[n])}))
    return report


def _monomial_label(m: Monomial) -> str:
    sign = "-" if m.coeff == -1 else ("+" if m.coeff == 1 else str(m.coeff))
    return f"{sign}q^{m.exponent}"


def jtp_pairs(max_exponent: int = 3) -> list[tuple[Monomial, Monomial]]:
    """Monomial pairs (+-q^i, +-q^j) with i, j <= max_exponent and i + j >= 1."""
    pairs = []
    for ea in range(max_exponent + 1):
        for eb in range(max_exponent + 1):
            if ea + eb == 0:
                continue
            for ca in (1, -1):
                for cb in (1, -1):
                    pairs.append((Monomial(ca, ea), Monomial(cb, eb)))
    return pairs


def theta_closed_forms(n: int) -> dict[str, tuple[TruncatedSeries, TruncatedSeries]]:
    """Sum side and product side of f(-q), phi(-q), psi(-q)."""
    one = TruncatedSeries.one(n)
    euler = pochhammer_expand(Monomial(1, 1), 1, n)
    return {
        "f(-q)": (theta_sum(Monomial(-1, 1), Monomial(-1, 2), n), euler),
        "phi(-q)": (
            theta_sum(Monomial(-1, 1), Monomial(-1, 1), n),
            divide_pochhammer(euler, Monomial(-1, 1), 1),
        ),
        "psi(-q)": (
            theta_sum(Monomial(-1, 1), Monomial(-1, 3), n),
            divide_pochhammer(multiply_pochhammer(one, Monomial(1, 2), 2), Monomial(-1, 1), 2),
        ),
    }


def verify_jtp(n_max: int, max_exponent: int = 3) -> TheoremReport:
    report = TheoremReport("jtp", {"n_max": n_max, "max_exponent": max_exponent})
    for a, b in jtp_pairs(max_exponent):
        same = theta_sum(a, b, n_max) == jtp_product(a, b, n_max)
        report.verdicts.append(Verdict(f"f({_monomial_label(a)},{_monomial_label(b)})", True, {"sum_equals_product": same}))
    for name, (lhs, rhs) in theta_closed_forms(n_max).items():
        report.verdicts.append(Verdict(name, True, {"sum_equals_product": lhs == rhs}))
    return report


# --- empirical residue searches --------------------------------------------


@dataclass(frozen=True)
class EmpiricalResidues:
    """Residues surviving every computed coefficient; a candidate, not a theorem."""

    modulus: int
    c: int
    d: int
    exponent: int
    n_max: int
    residues: tuple[int, ...]
    status: str = "empirical"

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.residues)) + "} (" + self.status + ")"


def _surviving_residues(series: TruncatedSeries, m: int) -> tuple[int, ...]:
    return tuple(
        a for a in range(m)
        if all(series[k] % m == 0 for k in range(a, series.truncation + 1, m))
    )  # fmt: skip


def search_aij(c: int, d: int, m: int, n_max: int) -> EmpiricalResidues:
    """Residues a with p_[c^2 d^2](m n + a) = 0 mod m for every coefficient <= n_max."""
    if not is_odd_prime(m):
        raise UsageError(f"modulus {m} is not an odd prime")
    if c < 1 or d < 1:
        raise UsageError("c and d must be positive")
    s = generalized_series(c, 2, d, 2, n_max)
    return EmpiricalResidues(m, c, d, 2, n_max, _surviving_residues(s, m))


def search_general(t: int, c: int, d: int, n_max: int) -> EmpiricalResidues:
    """Same search for p_[c^(t-3) d^(t-3)] modulo a prime t >= 7."""
    if not is_odd_prime(t):
        raise UsageError(f"modulus {t} is not an odd prime")
    if t < 7:
        raise UsageError("use search_aij for t = 5; the general search needs t >= 7")
    s = generalized_series(c, t - 3, d, t - 3, n_max)
    return EmpiricalResidues(t, c, d, t - 3, n_max, _surviving_residues(s, t))


# --- tables ----------------------------------------------------------------

# pod pairs of 5 and their multirank r-bar
TABLE1_GOLDEN = (
    ((5,), (), 1),
    ((4, 1), (), 2),
    ((3, 2), (), 2),
    ((2, 2, 1), (), 3),
    ((4,), (1,), 0),
    ((3, 1), (1,), 1),
    ((2, 2), (1,), 1),
    ((3,), (2,), 0),
    ((2, 1), (2,), 1),
    ((2,), (2, 1), -1),
    ((2,), (3,), 0),
    ((1,), (2, 2), -1),
    ((1,), (3, 1), -1),
    ((1,), (4,), 0),
    ((), (2, 2, 1), -3),
    ((), (3, 2), -2),
    ((), (4, 1), -2),
    ((), (5,), -1),
)

# cubic partitions of 5 (red, blue) and Reti's crank
TABLE2_GOLDEN = (
    ((5,), (), 0),
    ((4, 1), (), 1),
    ((3, 2), (), 1),
    ((3, 1, 1), (), 0),
    ((2, 2, 1), (), 2),
    ((2, 1, 1, 1), (), 1),
    ((1, 1, 1, 1, 1), (), 0),
    ((3,), (2,), -1),
    ((2, 1), (2,), 0),
    ((1, 1, 1), (2,), -1),
    ((1,), (4,), -1),
    ((1,), (2, 2), -2),
)


def _compare(rows: list[tuple], golden: tuple) -> bool:
    return sorted(rows) == sorted(golden) and len(rows) == len(golden)


def regenerate_table1() -> list[tuple]:
    return [(m.components[0], m.components[1], multirank_rbar(m)) for m in enumerate_tuples(POD, (1, 1), 5)]


def regenerate_table2() -> list[tuple]:
    return [(m.components[0], m.components[1], reti_crank(m)) for m in enumerate_tuples(PLAIN, (1, 2), 5)]


def check_table1() -> tuple[list[tuple], bool]:
    rows = regenerate_table1()
    return rows, _compare(rows, TABLE1_GOLDEN)


def check_table2() -> tuple[list[tuple], bool]:
    rows = regenerate_table2()
    return rows, _compare(rows, TABLE2_GOLDEN)


def regenerate_table3(n_max: int = 200) -> list[tuple[tuple[int, int], tuple[int, int], tuple[int, ...]]]:
    """(type (i, j), minimal (c, d), searched residues) for the fifteen types."""
    out = []
    for ij in TABLE3:
        c, d = MINIMAL_REPRESENTATIVE[ij]
        out.append((ij, (c, d), search_aij(c, d, 5, n_max).residues))
    return out


def check_table3(n_max: int = 200) -> tuple[list[tuple], bool]:
    rows = regenerate_table3(n_max)
    return rows, all(TABLE3[ij] == found for ij, _, found in rows)


def format_pair(m: MultiPartition | tuple, colors: tuple[str, str] = ("", "")) -> str:
    comps = m.components if isinstance(m, MultiPartition) else m
    return "(" + ", ".join(format_partition(p, col) for p, col in zip(comps, colors)) + ")"
