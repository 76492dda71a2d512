"""Finite posets: Hasse quivers, isomorphism, lattice operations, intervals.

Relations are ``>=`` matrices: ``geq[i][j]`` is True when element ``i`` lies
above (or equals) element ``j``.  Hasse arrows point from larger to smaller.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .errors import IncompletePoset, NotComparable, ShapeViolation


def transitive_reduction(geq: Sequence[Sequence[bool]]) -> list[tuple[int, int]]:
    n = len(geq)
    down = [_mask(geq[i]) & ~(1 << i) for i in range(n)]  # strictly below i
    arrows = []
    for i in range(n):
        below = down[i]
        covered = 0
        for k in _bits(below):
            covered |= down[k]
        for j in _bits(below & ~covered):
            arrows.append((i, j))
    return arrows


def _mask(row) -> int:
    m = 0
    for j, x in enumerate(row):
        if x:
            m |= 1 << j
    return m


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


class FinitePoset:
    def __init__(self, elements: Sequence[Hashable], geq: Sequence[Sequence[bool]]):
        self.elements = list(elements)
        n = len(self.elements)
        if len(geq) != n or any(len(r) != n for r in geq):
            raise ValueError("relation matrix does not match the element list")
        self.geq = [[bool(x) for x in row] for row in geq]
        for i in range(n):
            if not self.geq[i][i]:
                raise ValueError("relation is not reflexive")
            for j in range(n):
                if i != j and self.geq[i][j] and self.geq[j][i]:
                    raise ValueError("relation is not antisymmetric")
        # below[i]: mask of j <= i; above[i]: mask of j >= i
        self.below = [_mask(r) for r in self.geq]
        self.above = [_mask(self.geq[j][i] for j in range(n)) for i in range(n)]
        for i in range(n):
            for j in _bits(self.below[i]):
                if self.below[j] & ~self.below[i]:
                    raise ValueError("relation is not transitive")
        self.hasse = transitive_reduction(self.geq)
        self.index = {e: i for i, e in enumerate(self.elements)}

    @classmethod
    def from_hasse(cls, elements: Sequence[Hashable], arrows: Sequence[tuple[int, int]]) -> "FinitePoset":
        """Reflexive-transitive closure of arrows ``(larger, smaller)``."""
        n = len(elements)
        succ = [[] for _ in range(n)]
        for i, j in arrows:
            succ[i].append(j)
        below = [None] * n

        def close(i, stack=()):
            if below[i] is None:
                if i in stack:
                    raise ValueError("arrows contain a cycle")
                m = 1 << i
                for j in succ[i]:
                    m |= close(j, stack + (i,))
                below[i] = m
            return below[i]

        for i in range(n):
            close(i)
        return cls(elements, [[bool(below[i] >> j & 1) for j in range(n)] for i in range(n)])

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FinitePoset({len(self)} elements, {len(self.hasse)} covers)"

    def up_covers(self, i: int) -> list[int]:
        return [a for a, b in self.hasse if b == i]

    def down_covers(self, i: int) -> list[int]:
        return [b for a, b in self.hasse if a == i]

    def maxima(self) -> list[int]:
        return [i for i in range(len(self)) if self.above[i] == 1 << i]

    def minima(self) -> list[int]:
        return [i for i in range(len(self)) if self.below[i] == 1 << i]

    def heights(self) -> list[int]:
        """Length of the longest chain down to a minimal element."""
        h = {}
        order = sorted(range(len(self)), key=lambda i: bin(self.below[i]).count("1"))
        for i in order:
            h[i] = max((h[j] + 1 for j in self.down_covers(i)), default=0)
        return [h[i] for i in range(len(self))]


def hasse_paths(p: FinitePoset, start: int, end: int, length: int | None = None) -> list[list[int]]:
    """Directed Hasse paths from ``start`` down to ``end``, optionally of a fixed length."""
    succ = [[] for _ in range(len(p))]
    for a, b in p.hasse:
        succ[a].append(b)
    out = []

    def walk(path):
        v = path[-1]
        if v == end:
            if length is None or len(path) - 1 == length:
                out.append(list(path))
            return
        if length is not None and len(path) - 1 >= length:
            return
        for w in sorted(succ[v]):
            if p.geq[w][end]:
                path.append(w)
                walk(path)
                path.pop()

    walk([start])
    return out


def chain(n: int) -> FinitePoset:
    return FinitePoset(list(range(n)), [[i >= j for j in range(n)] for i in range(n)])


def bowtie() -> FinitePoset:
    """Top, bottom and two middle layers of two elements joined crosswise."""
    names = ["top", "a", "b", "c", "d", "bottom"]
    arrows = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    return FinitePoset.from_hasse(names, arrows)


def _invariants(p: FinitePoset) -> list[tuple]:
    h = p.heights()
    depth = [0] * len(p)
    for i in sorted(range(len(p)), key=lambda i: bin(p.above[i]).count("1")):
        depth[i] = max((depth[j] + 1 for j in p.up_covers(i)), default=0)
    return [(len(p.up_covers(i)), len(p.down_covers(i)), h[i], depth[i],
             bin(p.above[i]).count("1"), bin(p.below[i]).count("1")) for i in range(len(p))]


def is_isomorphic(p: FinitePoset, q: FinitePoset) -> dict[int, int] | None:
    """A relation-preserving bijection ``p -> q`` (by index), or None."""
    n = len(p)
    if n != len(q) or len(p.hasse) != len(q.hasse):
        return None
    ip, iq = _invariants(p), _invariants(q)
    if sorted(ip) != sorted(iq):
        return None
    candidates = {i: [j for j in range(n) if iq[j] == ip[i]] for i in range(n)}
    order = sorted(range(n), key=lambda i: (len(candidates[i]), ip[i][2]))
    assign: dict[int, int] = {}
    used = set()

    def ok(i, j):
        for a, b in assign.items():
            if p.geq[i][a] != q.geq[j][b] or p.geq[a][i] != q.geq[b][j]:
                return False
        return True

    def search(k):
        if k == n:
            return True
        i = order[k]
        for j in candidates[i]:
            if j not in used and ok(i, j):
                assign[i] = j
                used.add(j)
                if search(k + 1):
                    return True
                del assign[i]
                used.discard(j)
        return False

    return dict(assign) if search(0) else None


def join(p: FinitePoset, a: int, b: int) -> int | None:
    ub = p.above[a] & p.above[b]
    for c in _bits(ub):
        if p.above[c] == ub:
            return c
    return None


def meet(p: FinitePoset, a: int, b: int) -> int | None:
    lb = p.below[a] & p.below[b]
    for c in _bits(lb):
        if p.below[c] == lb:
            return c
    return None


def join_all(p: FinitePoset, items: Sequence[int]) -> int | None:
    items = list(items)
    if not items:
        mins = p.minima()
        return mins[0] if len(mins) == 1 else None
    cur = items[0]
    for x in items[1:]:
        cur = join(p, cur, x)
        if cur is None:
            return None
    return cur


def meet_all(p: FinitePoset, items: Sequence[int]) -> int | None:
    items = list(items)
    if not items:
        maxs = p.maxima()
        return maxs[0] if len(maxs) == 1 else None
    cur = items[0]
    for x in items[1:]:
        cur = meet(p, cur, x)
        if cur is None:
            return None
    return cur


def is_lattice(p: FinitePoset) -> bool:
    n = len(p)
    for a in range(n):
        for b in range(a + 1, n):
            if join(p, a, b) is None or meet(p, a, b) is None:
                return False
    return True


def interval(p: FinitePoset, a: int, b: int) -> FinitePoset:
    """Induced subposet on ``{x : a <= x <= b}``; the result's elements are indices of ``p``."""
    if not p.geq[b][a]:
        raise NotComparable(f"element {a} is not below element {b}")
    members = list(_bits(p.above[a] & p.below[b]))
    return FinitePoset(members, [[p.geq[i][j] for j in members] for i in members])


def subposet(p: FinitePoset, members: Sequence[int]) -> FinitePoset:
    members = list(members)
    return FinitePoset(members, [[p.geq[i][j] for j in members] for i in members])


# -- probes on support tau-tilting posets ------------------------------------


def sttilt_poset(sp) -> FinitePoset:
    """Poset of an enumerated silting poset, nodes labelled by index."""
    return FinitePoset.from_hasse(list(range(len(sp.nodes))), sp.hasse)


def regularity_check(sp) -> bool | None:
    """Every node has exactly rank-many Hasse neighbours; None when incomplete."""
    if not sp.complete:
        return None
    rank = sp.algebra.rank
    deg = [0] * len(sp.nodes)
    for i, j in sp.hasse:
        deg[i] += 1
        deg[j] += 1
    return all(d == rank for d in deg)


SQUARE = "i"
LONG_AT_FIRST = "ii"
LONG_AT_SECOND = "iii"


@dataclass
class SimplesReport:
    simples: dict[int, int]  # vertex -> node index of the simple-supported node
    mij: dict[tuple[int, int], int]  # (i, j) with i before j -> node index
    shapes: dict[tuple[int, int], str]

    @property
    def arrows(self) -> set[tuple[int, int]]:
        """Quiver arrows read off from the interval shapes."""
        out = set()
        for (i, j), shape in self.shapes.items():
            if shape == LONG_AT_FIRST:
                out.add((i, j))
            elif shape == LONG_AT_SECOND:
                out.add((j, i))
        return out


def _classify(p: FinitePoset, bottom: int, top: int, xi: int, xj: int) -> str:
    iv = interval(p, bottom, top)
    local = {e: k for k, e in enumerate(iv.elements)}
    deg = [0] * len(iv)
    for a, b in iv.hasse:
        deg[a] += 1
        deg[b] += 1
    if any(d != 2 for d in deg):
        raise ShapeViolation(f"interval [0, M] with {len(iv)} elements is not 2-regular")
    if len(iv) == 4:
        return SQUARE
    if len(iv) == 5:
        # the pentagon: one chain of length 2 and one of length 3 from M to 0
        short = [x for x in (xi, xj) if local[top] in iv.up_covers(local[x])]
        if len(short) != 1:
            raise ShapeViolation("pentagon interval without a unique short side")
        return LONG_AT_SECOND if short[0] == xi else LONG_AT_FIRST
    raise ShapeViolation(f"interval [0, M] has {len(iv)} elements")


def locate_simples_and_Mij(sp) -> SimplesReport:
    if not sp.complete:
        raise IncompletePoset("simple location needs a complete poset")
    p = sttilt_poset(sp)
    mins = p.minima()
    if len(mins) != 1:
        raise ShapeViolation("poset has no unique minimum")
    bottom = mins[0]
    simples = {}
    for x in p.up_covers(bottom):
        support = sp.nodes[x].module_data.support
        if len(support) != 1:
            raise ShapeViolation(f"direct predecessor of 0 has support {support}")
        simples[support[0]] = x
    vertices = sp.algebra.vertices
    if set(simples) != set(vertices):
        raise ShapeViolation("not every vertex has a simple-supported node")
    mij, shapes = {}, {}
    for a, i in enumerate(vertices):
        for j in vertices[a + 1:]:
            xi, xj = simples[i], simples[j]
            cands = {m for m in p.up_covers(xi) + p.up_covers(xj)
                     if p.geq[m][xi] and p.geq[m][xj]}
            if len(cands) != 1:
                raise ShapeViolation(f"{len(cands)} candidates for M({i},{j})")
            m = cands.pop()
            mij[(i, j)] = m
            shapes[(i, j)] = _classify(p, bottom, m, xi, xj)
    return SimplesReport(simples, mij, shapes)
