"""Finite quivers, their loop-free core and path enumeration on trees."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import LoopPresent, NotTree


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    """A finite quiver with integer vertex labels.

    Vertices keep their original labels so that idempotent quotients and
    subquivers can be compared label by label.
    """

    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...] = ()
    _by_name: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arrows", arrows)
        if len(set(vertices)) != len(vertices):
            raise ValueError("vertex ids must be unique")
        if any(v <= 0 for v in vertices):
            raise ValueError("vertex ids must be positive integers")
        by_name = {}
        vset = set(vertices)
        for a in arrows:
            if a.name in by_name:
                raise ValueError(f"duplicate arrow name {a.name!r}")
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow {a.name!r} uses an undeclared vertex")
            by_name[a.name] = a
        object.__setattr__(self, "_by_name", by_name)

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[str, int, int]]):
        return cls(tuple(vertices), tuple(Arrow(*e) for e in edges))

    def arrow(self, name: str) -> Arrow:
        return self._by_name[name]

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    @property
    def loops(self) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.is_loop)

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def restrict(self, vertices: Iterable[int]) -> "Quiver":
        """Full subquiver on the given vertices (order of ``self`` is kept)."""
        keep = set(vertices)
        vs = tuple(v for v in self.vertices if v in keep)
        arrows = tuple(a for a in self.arrows if a.source in keep and a.target in keep)
        return Quiver(vs, arrows)

    def is_composable(self, names) -> bool:
        for a, b in zip(names, names[1:]):
            if self.arrow(a).target != self.arrow(b).source:
                return False
        return True


def core(q: Quiver) -> Quiver:
    """Remove all loops."""
    return Quiver(q.vertices, tuple(a for a in q.arrows if not a.is_loop))


def _undirected_adjacency(q: Quiver) -> dict[int, set[int]]:
    adj = {v: set() for v in q.vertices}
    for a in q.arrows:
        if not a.is_loop:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
    return adj


def is_tree_quiver(q: Quiver) -> bool:
    """True iff the underlying graph of a loop-free quiver is a tree.

    Parallel or antiparallel arrows between one pair of vertices disqualify
    the quiver even when the edge count would otherwise fit.
    """
    if q.loops:
        raise LoopPresent("is_tree_quiver expects a loop-free quiver; call core() first")
    n = len(q.vertices)
    if n == 0:
        return False
    pairs = set()
    for a in q.arrows:
        key = frozenset((a.source, a.target))
        if key in pairs:
            return False
        pairs.add(key)
    if len(q.arrows) != n - 1:
        return False
    adj = _undirected_adjacency(q)
    seen = {q.vertices[0]}
    todo = [q.vertices[0]]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == n


def has_higher_cycles(q: Quiver) -> bool:
    """True iff there is an oriented cycle of length > 1 (loops ignored)."""
    succ = {v: [] for v in q.vertices}
    for a in q.arrows:
        if not a.is_loop:
            succ[a.source].append(a.target)
    indeg = {v: 0 for v in q.vertices}
    for v in q.vertices:
        for w in succ[v]:
            indeg[w] += 1
    queue = deque(v for v in q.vertices if indeg[v] == 0)
    removed = 0
    while queue:
        v = queue.popleft()
        removed += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return removed < len(q.vertices)


@dataclass(frozen=True)
class CorePath:
    arrows: tuple[str, ...]
    source: int
    target: int

    def __len__(self):
        return len(self.arrows)


def core_paths(q: Quiver) -> list[CorePath]:
    """All directed paths of length >= 1 in the loop-free core of a tree quiver."""
    c = core(q)
    if not is_tree_quiver(c):
        raise NotTree("core quiver is not a tree")
    out = []

    def extend(path, v, start):
        for a in c.arrows_from(v):
            p = path + (a.name,)
            out.append(CorePath(p, start, a.target))
            extend(p, a.target, start)

    for v in c.vertices:
        extend((), v, v)
    out.sort(key=lambda p: (len(p), p.arrows))
    return out


def tree_walk(q: Quiver, root: int) -> list[tuple[int, int, Arrow]]:
    """Breadth-first tree edges ``(parent, child, arrow)`` of a tree core."""
    c = core(q)
    if not is_tree_quiver(c):
        raise NotTree("core quiver is not a tree")
    seen = {root}
    order = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for a in c.arrows:
            if a.source == v and a.target not in seen:
                w = a.target
            elif a.target == v and a.source not in seen:
                w = a.source
            else:
                continue
            seen.add(w)
            order.append((v, w, a))
            queue.append(w)
    return order
