"""Partition family descriptors shared by the enumeration and series routes.

Every family handled here is a tuple of base partitions (plain, overpartition
or pod) where component ``i`` only uses parts divisible by ``divisors[i]``:

=====================  ==========  ===========================
kind                   base        divisors
=====================  ==========  ===========================
colored-plain:s        plain       (1,) * s
colored-over:s         over        (1,) * s
colored-pod:s          pod         (1,) * s
cubic                  plain       (1, 2)
overcubic              over        (1, 2)
generalized:c,l,d,m    plain       (c,) * l + (d,) * m
fourcolor:c,d          plain       (c, c, d, d)
=====================  ==========  ===========================
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field

from multirank.errors import UsageError

PLAIN, OVER, POD = "plain", "over", "pod"
BASES = (PLAIN, OVER, POD)

# statistic identifiers
RBAR, RSTAR, RETI, R4 = "rbar", "rstar", "reti", "r4"
STATISTICS = (RBAR, RSTAR, RETI, R4)

_ARITY = {
    "colored-plain": 1,
    "colored-over": 1,
    "colored-pod": 1,
    "cubic": 0,
    "overcubic": 0,
    "generalized": 4,
    "fourcolor": 2,
}
KINDS = tuple(_ARITY)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise UsageError(_unknown_kind_message(self.kind))
        if len(self.params) != _ARITY[self.kind]:
            raise UsageError(f"{self.kind} takes {_ARITY[self.kind]} parameter(s), got {len(self.params)}")
        if any(p < 1 for p in self.params):
            raise UsageError(f"{self.kind} parameters must be positive: {self.params}")
        if self.kind == "fourcolor" and self.params[0] > self.params[1]:
            # r4 is preserved by (r, b, y, o) -> (y, o, r, b), so type (c, d) ~ (d, c)
            object.__setattr__(self, "params", (self.params[1], self.params[0]))

    @property
    def base(self) -> str:
        if self.kind in ("colored-over", "overcubic"):
            return OVER
        if self.kind == "colored-pod":
            return POD
        return PLAIN

    @property
    def divisors(self) -> tuple[int, ...]:
        k, p = self.kind, self.params
        if k.startswith("colored-"):
            return (1,) * p[0]
        if k in ("cubic", "overcubic"):
            return (1, 2)
        if k == "generalized":
            c, l, d, m = p
            return (c,) * l + (d,) * m
        c, d = p
        return (c, c, d, d)

    @property
    def components(self) -> int:
        return len(self.divisors)

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(map(str, self.params))}"


def colored(base: str, s: int) -> FamilySpec:
    return FamilySpec(f"colored-{base}", (s,))


CUBIC = FamilySpec("cubic")
OVERCUBIC = FamilySpec("overcubic")


def fourcolor(c: int, d: int) -> FamilySpec:
    return FamilySpec("fourcolor", (c, d))


def generalized(c: int, l: int, d: int, m: int) -> FamilySpec:
    return FamilySpec("generalized", (c, l, d, m))


def _unknown_kind_message(kind: str) -> str:
    close = difflib.get_close_matches(kind, KINDS, n=3)
    hint = f"; did you mean {', '.join(close)}?" if close else ""
    return f"unknown family kind {kind!r}{hint} (known: {', '.join(KINDS)})"


def parse_family(text: str) -> FamilySpec:
    """Parse the ``kind:p1,p2,...`` flag grammar, e.g. ``generalized:1,2,2,2``."""
    kind, _, rest = text.strip().partition(":")
    if kind not in _ARITY:
        raise UsageError(_unknown_kind_message(kind))
    try:
        params = tuple(int(x) for x in rest.split(",")) if rest else ()
    except ValueError:
        raise UsageError(f"family parameters must be integers: {text!r}") from None
    return FamilySpec(kind, params)


@dataclass(frozen=True)
class ClassCountTable:
    """Counts N(i, t, n) of weight-n objects whose statistic is i mod t."""

    t: int
    n: int
    counts: tuple[int, ...]
    total: int = field(default=-1)

    def __post_init__(self):
        if len(self.counts) != self.t:
            raise UsageError(f"expected {self.t} class counts, got {len(self.counts)}")
        if self.total == -1:
            object.__setattr__(self, "total", sum(self.counts))
        elif sum(self.counts) != self.total:
            raise UsageError("class counts do not add up to the total")

    @property
    def equal(self) -> bool:
        return len(set(self.counts)) == 1

    @property
    def even(self) -> bool:
        return all(c % 2 == 0 for c in self.counts)
