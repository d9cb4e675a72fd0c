"""Exhaustive enumeration of partition families and their rank statistics.

Representations are plain tuples so that millions of objects can be visited:

* a partition or pod is a weakly decreasing tuple of ints;
* an overpartition is a tuple of ``(size, overlined)`` pairs, sorted by size
  descending with the overlined copy of a size first;
* a multipartition is a :class:`MultiPartition` holding one such tuple per
  component.

Nothing in this module touches generating functions; it is the brute-force
side of every cross-check.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from multirank.errors import DomainError, UsageError
from multirank.families import (
    BASES,
    OVER,
    POD,
    R4,
    RBAR,
    RETI,
    RSTAR,
    ClassCountTable,
    FamilySpec,
)

Partition = tuple  # tuple[int, ...] or tuple[tuple[int, bool], ...]


class MultiPartition(NamedTuple):
    family: str
    components: tuple

    @property
    def weight(self) -> int:
        return sum(part_size(p) for c in self.components for p in c)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)


def part_size(part) -> int:
    return part if isinstance(part, int) else part[0]


def _plain(n: int, largest: int, distinct_odd: bool) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        cap = first - 1 if distinct_odd and first % 2 else first
        for rest in _plain(n - first, cap, distinct_odd):
            yield (first,) + rest


def _overline_variants(p: tuple[int, ...]) -> Iterator[tuple[tuple[int, bool], ...]]:
    sizes = sorted(set(p), reverse=True)
    for flags in itertools.product((True, False), repeat=len(sizes)):
        marked = dict(zip(sizes, flags))
        out = []
        prev = None
        for s in p:
            out.append((s, marked[s] and s != prev))
            prev = s
        yield tuple(out)


@lru_cache(maxsize=None)
def enumerate_partitions(family: str, n: int, divisor: int = 1) -> tuple[Partition, ...]:
    """All objects of one base family with weight ``n`` and parts divisible by ``divisor``.

    Order: underlying partitions in reverse lexicographic order (largest part
    first); for overpartitions, overlined variants before plain ones.
    """
    if family not in BASES:
        raise UsageError(f"unknown base family {family!r}")
    if n < 0:
        raise UsageError("weight must be non-negative")
    if n % divisor:
        return ()
    if family == POD:
        # oddness refers to the actual part size, so scale before filtering
        raw = (tuple(divisor * x for x in p) for p in _plain(n // divisor, n // divisor, False))
        return tuple(p for p in raw if _odd_distinct(p))
    base = [tuple(divisor * x for x in p) for p in _plain(n // divisor, n // divisor, False)]
    if family == OVER:
        return tuple(v for p in base for v in _overline_variants(p))
    return tuple(base)


def _odd_distinct(p: Sequence[int]) -> bool:
    odd = [x for x in p if x % 2]
    return len(odd) == len(set(odd))


def is_overpartition(p) -> bool:
    sizes = [s for s, _ in p]
    if sizes != sorted(sizes, reverse=True):
        return False
    seen = set()
    for i, (s, bar) in enumerate(p):
        if bar and (s in seen or (i and p[i - 1][0] == s)):
            return False
        seen.add(s)
    return True


def is_pod(p: Sequence[int]) -> bool:
    return list(p) == sorted(p, reverse=True) and _odd_distinct(p)


def compositions(n: int, s: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into s parts, lexicographically descending."""
    if s == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, s - 1):
            yield (first,) + rest


def iter_tuples(family: str, divisors: Sequence[int], n: int) -> Iterator[MultiPartition]:
    """Lazily yield every tuple of weight n; component i uses parts divisible by divisors[i]."""
    if not divisors:
        raise UsageError("need at least one component")
    for comp in compositions(n, len(divisors)):
        lists = [enumerate_partitions(family, w, d) for w, d in zip(comp, divisors)]
        if not all(lists):
            continue
        for combo in itertools.product(*lists):
            yield MultiPartition(family, combo)


def enumerate_tuples(family: str, divisors: Sequence[int], n: int) -> list[MultiPartition]:
    return list(iter_tuples(family, divisors, n))


def enumerate_family(spec: FamilySpec, n: int) -> list[MultiPartition]:
    return enumerate_tuples(spec.base, spec.divisors, n)


def _components(m) -> tuple:
    return m.components if isinstance(m, MultiPartition) else tuple(m)


def dyson_rank(p: Sequence[int]) -> int:
    if not p:
        raise DomainError("the rank of the empty partition is undefined")
    return max(part_size(x) for x in p) - len(p)


def multirank_rbar(m) -> int:
    """Sum of k * (l(pi_k) - l(pi_{s+1-k})) over k = 1..s/2, s even."""
    comps = _components(m)
    s = len(comps)
    if s % 2:
        raise UsageError(f"r-bar needs an even number of components, got {s}")
    return sum(k * (len(comps[k - 1]) - len(comps[s - k])) for k in range(1, s // 2 + 1))


def multirank_rstar(m) -> int:
    """Sum of k * (l(pi_k) - l(pi_{t-k})) over k = 1..(t-1)/2, t odd; pi_t is unweighted."""
    comps = _components(m)
    t = len(comps)
    if t % 2 == 0:
        raise UsageError(f"r* needs an odd number of components, got {t}")
    return sum(k * (len(comps[k - 1]) - len(comps[t - k - 1])) for k in range(1, (t - 1) // 2 + 1))


def reti_crank(m) -> int:
    """Even red parts minus blue parts; overlined parts count like any other."""
    red, blue = _components(m)
    return sum(1 for p in red if part_size(p) % 2 == 0) - len(blue)


def rank_4c(m) -> int:
    r, b, y, o = _components(m)
    return len(r) - len(b) + len(y) - len(o)


STATISTIC_FUNCTIONS = {
    RBAR: multirank_rbar,
    RSTAR: multirank_rstar,
    RETI: reti_crank,
    R4: rank_4c,
}


def toggle_largest(m: MultiPartition) -> MultiPartition:
    """Flip the overline on the largest part.

    Ties between components go to the lowest component index; inside a
    component the first copy of the largest size is the one that may carry
    the bar.
    """
    if m.family != OVER:
        raise UsageError("toggling only applies to multi-overpartitions")
    comps = m.components
    largest = max((c[0][0] for c in comps if c), default=None)
    if largest is None:
        raise DomainError("cannot toggle the empty multi-overpartition")
    idx = next(i for i, c in enumerate(comps) if c and c[0][0] == largest)
    comp = comps[idx]
    size, bar = comp[0]
    flipped = ((size, not bar),) + comp[1:]
    return MultiPartition(m.family, comps[:idx] + (flipped,) + comps[idx + 1 :])


def class_counts_bruteforce(spec: FamilySpec, statistic: str, t: int, n: int) -> ClassCountTable:
    """Visit every object of weight n and bin its statistic mod t."""
    if t < 2:
        raise UsageError("modulus must be at least 2")
    stat = STATISTIC_FUNCTIONS[statistic]
    counts = [0] * t
    for m in iter_tuples(spec.base, spec.divisors, n):
        counts[stat(m) % t] += 1
    return ClassCountTable(t, n, tuple(counts))


def statistic_histogram(spec: FamilySpec, statistic: str, n: int) -> dict[int, int]:
    """Exact distribution of the statistic over weight-n objects."""
    stat = STATISTIC_FUNCTIONS[statistic]
    hist: dict[int, int] = {}
    for m in iter_tuples(spec.base, spec.divisors, n):
        v = stat(m)
        hist[v] = hist.get(v, 0) + 1
    return hist


def format_partition(p, color: str = "") -> str:
    """Compact display: ``4 1``, ``2bar 1``, or ``4_r 1_r`` with a color tag."""
    if not p:
        return "0"
    out = []
    for x in p:
        if isinstance(x, int):
            out.append(f"{x}{'_' + color if color else ''}")
        else:
            s, bar = x
            out.append(f"{s}{'bar' if bar else ''}{'_' + color if color else ''}")
    return " ".join(out)
