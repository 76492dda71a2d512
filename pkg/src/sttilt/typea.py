"""Interval model for support tau-tilting pairs over a linearly oriented A_n core.

Indecomposable tau-rigid modules are the intervals X(i, j) with support
[i, j]; X(i, n) is the projective P_i.  A configuration is a set of pairwise
compatible intervals together with the shifted projectives outside their
joint support.  Vertices are 1..n, arrows i -> i+1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .poset import FinitePoset


@dataclass(frozen=True, order=True)
class Interval:
    i: int
    j: int
    n: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j <= self.n:
            raise ValueError(f"invalid interval [{self.i}, {self.j}] for n = {self.n}")

    @property
    def support(self) -> range:
        return range(self.i, self.j + 1)

    def g_vector(self) -> tuple[int, ...]:
        g = [0] * self.n
        g[self.i - 1] += 1
        if self.j < self.n:
            g[self.j] -= 1
        return tuple(g)

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(int(self.i <= v <= self.j) for v in range(1, self.n + 1))

    def __repr__(self):
        return f"X({self.i},{self.j})"


def hom_tau_vanishes(x: Interval, y: Interval) -> bool:
    """Whether Hom(x, tau y) = 0, via the bracket condition on [i-1, j] and [p-1, q]."""
    if x.n != y.n:
        raise ValueError("intervals of different rank")
    a0, a1 = x.i - 1, x.j
    b0, b1 = y.i - 1, y.j
    if a1 < b0 or b1 < a0:
        return True
    if (a0 <= b0 and b1 <= a1) or (b0 <= a0 and a1 <= b1):
        return True
    return a0 < b0 <= a1 < b1


def compatible(x: Interval, y: Interval) -> bool:
    return hom_tau_vanishes(x, y) and hom_tau_vanishes(y, x)


@dataclass(frozen=True)
class IntervalConfig:
    n: int
    intervals: frozenset[Interval]

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(v for x in self.intervals for v in x.support)

    @property
    def shifted(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if v not in self.support)

    def sorted_intervals(self) -> list[Interval]:
        return sorted(self.intervals)

    def dim_vector(self) -> tuple[int, ...]:
        dims = [0] * self.n
        for x in self.intervals:
            for v in x.support:
                dims[v - 1] += 1
        return tuple(dims)

    def __repr__(self):
        return f"IntervalConfig({self.sorted_intervals()}, shifted={list(self.shifted)})"


def all_intervals(n: int) -> list[Interval]:
    return [Interval(i, j, n) for i in range(1, n + 1) for j in range(i, n + 1)]


def enumerate_interval_model(n: int) -> list[IntervalConfig]:
    """All configurations, sorted by fingerprint for a stable order."""
    if n < 1:
        raise ValueError("n must be positive")
    items = all_intervals(n)
    ok = {(x, y): compatible(x, y) for x in items for y in items}
    out = []

    def grow(start, chosen):
        supp = {v for x in chosen for v in x.support}
        if len(chosen) == len(supp):
            out.append(IntervalConfig(n, frozenset(chosen)))
        if len(chosen) >= n:
            return
        for k in range(start, len(items)):
            x = items[k]
            if all(ok[(x, y)] for y in chosen):
                grow(k + 1, chosen + [x])

    grow(0, [])
    out.sort(key=to_gmatrix)
    return out


def interval_order_geq(a: IntervalConfig, b: IntervalConfig) -> bool:
    if a.n != b.n:
        raise ValueError("configurations of different rank")
    if not a.support >= b.support:
        return False
    return all(hom_tau_vanishes(y, x) for y in b.intervals for x in a.intervals)


def to_gmatrix(c: IntervalConfig) -> tuple[tuple[int, ...], ...]:
    gs = [x.g_vector() for x in c.intervals]
    for v in c.shifted:
        gs.append(tuple(-int(w == v) for w in range(1, c.n + 1)))
    return tuple(sorted(gs))


def interval_poset(n: int) -> FinitePoset:
    configs = enumerate_interval_model(n)
    geq = [[interval_order_geq(a, b) for b in configs] for a in configs]
    return FinitePoset(configs, geq)
