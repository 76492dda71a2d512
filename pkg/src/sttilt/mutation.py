"""Left mutation of two-term silting complexes and enumeration of the poset."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .algebra import BoundQuiverAlgebra
from .complexes import (
    ModuleData,
    TwoTermComplex,
    algebra_complex,
    decompose,
    direct_sum,
    hom_k0_basis,
    hom_k1_dimension,
    minimize_chain,
    module_data,
    zero_matrix,
)
from .errors import IncompletePoset, NotSilting, NotTwoTerm
from .poset import transitive_reduction

DEFAULT_CAP = 10000


class HomCache:
    """Memoized Hom computations between indecomposable complexes.

    Indecomposable presilting complexes are identified by their g-vectors, so
    the cache keys on g-vector pairs.  Cached chain maps are only meaningful
    for one fixed presentation, hence :meth:`canonical`.
    """

    def __init__(self):
        self._k1: dict = {}
        self._k0: dict = {}
        self._rep: dict = {}

    def canonical(self, x: TwoTermComplex) -> TwoTermComplex:
        """The registered presentation of the indecomposable with x's g-vector."""
        return self._rep.setdefault(x.g_vector(), x)

    def k1(self, x: TwoTermComplex, y: TwoTermComplex) -> int:
        key = (x.g_vector(), y.g_vector())
        val = self._k1.get(key)
        if val is None:
            val = self._k1[key] = hom_k1_dimension(x, y)
        return val

    def k0_basis(self, x: TwoTermComplex, y: TwoTermComplex):
        key = (x.g_vector(), y.g_vector())
        val = self._k0.get(key)
        if val is None:
            val = self._k0[key] = hom_k0_basis(x, y)
        return val

    def k1_sum(self, xs, ys) -> int:
        return sum(self.k1(x, y) for x in xs for y in ys)


@dataclass(eq=False)
class SiltingNode:
    """A basic two-term silting complex, kept as its sorted indecomposable summands."""

    summands: tuple[TwoTermComplex, ...]

    def __post_init__(self):
        self.summands = tuple(sorted(self.summands, key=lambda s: s.g_vector()))

    @classmethod
    def from_complex(cls, t: TwoTermComplex) -> "SiltingNode":
        return cls(tuple(decompose(t)))

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        return self.summands[0].algebra

    @cached_property
    def complex(self) -> TwoTermComplex:
        return direct_sum(self.summands, self.algebra)

    @property
    def fingerprint(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s.g_vector() for s in self.summands)

    @cached_property
    def module_data(self) -> ModuleData:
        return module_data(self.complex)

    def __repr__(self):
        return f"SiltingNode({list(self.fingerprint)})"


@dataclass
class SiltingPoset:
    algebra: BoundQuiverAlgebra
    nodes: list[SiltingNode]
    hasse: list[tuple[int, int]]
    complete: bool
    cap_hit: bool
    cache: HomCache = field(default_factory=HomCache, repr=False)

    def index_of(self, fingerprint) -> int:
        fingerprint = tuple(sorted(tuple(g) for g in fingerprint))
        for i, n in enumerate(self.nodes):
            if n.fingerprint == fingerprint:
                return i
        raise KeyError(fingerprint)

    def geq(self, i: int, j: int) -> bool:
        return self.cache.k1_sum(self.nodes[i].summands, self.nodes[j].summands) == 0


def _stack(blocks, rows_per_block, cols):
    out = []
    for m, n in zip(blocks, rows_per_block):
        out.extend([list(r) for r in m] if m else [[{} for _ in range(cols)] for _ in range(n)])
    return out


def mutation_cone(x: TwoTermComplex, others, cache: HomCache | None = None) -> TwoTermComplex:
    """Minimized cone of X -> E, where E collects a basis of Hom_K(X, U) for U in others."""
    cache = cache or HomCache()
    alg = x.algebra
    targets = []
    for u in others:
        for f1, f0 in cache.k0_basis(x, u):
            targets.append((u, f1, f0))
    e1 = [v for u, _, _ in targets for v in u.p1]
    e0 = [v for u, _, _ in targets for v in u.p0]
    # degree -2: X1, degree -1: X0 + E1, degree 0: E0
    top = [[{k: -c for k, c in a.items()} for a in row] for row in x.d]
    lower = _stack([f1 for _, f1, _ in targets], [len(u.p1) for u, _, _ in targets], len(x.p1))
    d2 = top + lower
    d1 = zero_matrix(len(e0), len(x.p0) + len(e1))
    r0 = c0 = 0
    for u, _, f0 in targets:
        for r in range(len(u.p0)):
            for c in range(len(x.p0)):
                d1[r0 + r][c] = dict(f0[r][c])
            for c in range(len(u.p1)):
                d1[r0 + r][len(x.p0) + c0 + c] = dict(u.d[r][c])
        r0 += len(u.p0)
        c0 += len(u.p1)
    objs, diffs = minimize_chain(alg, [list(x.p1), list(x.p0) + e1, e0], [d2, d1])
    if objs[0]:
        raise NotTwoTerm("mutation cone has a nonzero term in degree -2")
    d = diffs[1] if objs[2] else ()
    return TwoTermComplex(alg, objs[1], objs[2], d)


def left_mutate(node: SiltingNode, index: int, cache: HomCache | None = None,
                verify: bool = True) -> SiltingNode:
    """Replace summand ``index`` by the other completion lying below ``node``."""
    cache = cache or HomCache()
    summands = tuple(cache.canonical(s) for s in node.summands)
    x = summands[index]
    others = summands[:index] + summands[index + 1:]
    cone = mutation_cone(x, others, cache)
    kept = {u.g_vector() for u in others}
    fresh = [y for y in decompose(cone, known=others) if y.g_vector() not in kept]
    if len({y.g_vector() for y in fresh}) != 1:
        raise NotSilting(f"mutation cone has {len(fresh)} new summands")
    result = SiltingNode(others + (cache.canonical(fresh[0]),))
    if verify:
        if cache.k1_sum(result.summands, result.summands):
            raise NotSilting("mutation result is not presilting")
        if cache.k1_sum(node.summands, result.summands):
            raise NotSilting("mutation result does not lie below the input")
        if result.fingerprint == node.fingerprint:
            raise NotSilting("mutation did not change the complex")
    return result


def enumerate_sttilt(a: BoundQuiverAlgebra, cap: int = DEFAULT_CAP, verify: bool = True) -> SiltingPoset:
    """Breadth-first search from the algebra itself along left mutations."""
    if cap < 1:
        raise ValueError("cap must be positive")
    cache = HomCache()
    start = SiltingNode(tuple(cache.canonical(s) for s in decompose(algebra_complex(a))))
    nodes = [start]
    seen = {start.fingerprint: 0}
    hasse = []
    cap_hit = False
    queue = deque([0])
    while queue:
        i = queue.popleft()
        node = nodes[i]
        for s in range(len(node.summands)):
            try:
                new = left_mutate(node, s, cache, verify)
            except NotTwoTerm:
                continue
            j = seen.get(new.fingerprint)
            if j is None:
                if len(nodes) >= cap:
                    cap_hit = True
                    continue
                j = seen[new.fingerprint] = len(nodes)
                nodes.append(new)
                queue.append(j)
            hasse.append((i, j))
    return SiltingPoset(a, nodes, hasse, complete=not cap_hit, cap_hit=cap_hit, cache=cache)


def order_pairs(p: SiltingPoset) -> list[list[bool]]:
    """The full >= relation, checked against the Hasse arrows."""
    if not p.complete:
        raise IncompletePoset("order relation needs a complete poset")
    n = len(p.nodes)
    rel = [[p.geq(i, j) for j in range(n)] for i in range(n)]
    if set(transitive_reduction(rel)) != set(p.hasse):
        raise NotSilting("Hasse arrows disagree with the silting order")
    return rel
