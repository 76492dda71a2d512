"""Two-term complexes of projectives and their homotopy-category invariants.

A complex ``P1 --d--> P0`` is stored as two vertex lists (``P_v = e_v A``) and
a matrix ``d`` with ``len(p0)`` rows and ``len(p1)`` columns, entry ``(r, c)``
an element of ``e_{p0[r]} A e_{p1[c]}`` acting by left multiplication.
Matrices over the algebra are lists of rows of sparse element dicts.

Only Hom(X, Y[1]) is ever computed.  For two-term complexes every chain map
X -> Y[i] with i >= 2 vanishes for degree reasons, so presilting reduces to
``hom_k1_dimension(T, T) == 0``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import sympy

from .algebra import BoundQuiverAlgebra, _add
from .errors import AlgebraMismatch, NotMinimized, NotSilting, SplitFailure
from .exactlinalg import Echelon, sparse_kernel

ONE = Fraction(1)


# ---------------------------------------------------------------------------
# matrices over the algebra


def zero_matrix(rows: int, cols: int) -> list[list[dict]]:
    return [[{} for _ in range(cols)] for _ in range(rows)]


def mat_mul(alg: BoundQuiverAlgebra, x, y, inner: int | None = None):
    if inner is None:
        inner = len(y)
    rows = len(x)
    cols = len(y[0]) if y else 0
    out = zero_matrix(rows, cols)
    for i in range(rows):
        xi = x[i]
        for k in range(inner):
            a = xi[k]
            if not a:
                continue
            yk = y[k]
            for j in range(cols):
                b = yk[j]
                if b:
                    p = alg.mul(a, b)
                    if p:
                        out[i][j] = _add(out[i][j], p)
    return out


def mat_add(x, y, s=1):
    return [[_add(a, b, s) for a, b in zip(rx, ry)] for rx, ry in zip(x, y)]


def mat_scale(x, c):
    return [[{k: c * v for k, v in a.items()} for a in row] for row in x]


def identity_matrix(alg: BoundQuiverAlgebra, objs: Sequence[int]):
    out = zero_matrix(len(objs), len(objs))
    for i, v in enumerate(objs):
        out[i][i] = alg.e(v)
    return out


def mat_is_zero(x) -> bool:
    return all(not a for row in x for a in row)


def invert_local(alg: BoundQuiverAlgebra, u: dict, v: int) -> dict:
    """Inverse of a unit u of e_v A e_v."""
    lam = u.get(alg.idempotent_index[v], 0)
    if not lam:
        raise ValueError("element is not a unit of the local corner")
    n = {k: -c / lam for k, c in u.items() if k != alg.idempotent_index[v]}
    total = alg.e(v)
    term = alg.e(v)
    while True:
        term = alg.mul(term, n)
        if not term:
            break
        total = _add(total, term)
    return {k: c / lam for k, c in total.items()}


def invert_unipotent(alg: BoundQuiverAlgebra, m, objs):
    """Inverse of a square matrix congruent to the identity modulo the radical."""
    ident = identity_matrix(alg, objs)
    nil = mat_add(m, ident, -1)
    total = ident
    term = ident
    for _ in range(len(objs) * alg.nilbound + 2):
        term = mat_mul(alg, term, mat_scale(nil, -1))
        if mat_is_zero(term):
            return total
        total = mat_add(total, term)
    raise ValueError("matrix is not unipotent")


# ---------------------------------------------------------------------------
# Hom spaces between direct sums of indecomposable projectives


class HomCoords:
    """Coordinates on Hom(⊕ P_src, ⊕ P_tgt), i.e. matrices with corner entries."""

    def __init__(self, alg: BoundQuiverAlgebra, src: Sequence[int], tgt: Sequence[int]):
        self.alg = alg
        self.src, self.tgt = tuple(src), tuple(tgt)
        self.slots = []  # (row, col, basis index)
        self.pos = {}
        for r, v in enumerate(tgt):
            for c, u in enumerate(src):
                for k in alg.corner_indices(v, u):
                    self.pos[(r, c, k)] = len(self.slots)
                    self.slots.append((r, c, k))

    def __len__(self):
        return len(self.slots)

    def vector(self, m) -> dict:
        out = {}
        pos = self.pos
        for r, row in enumerate(m):
            for c, a in enumerate(row):
                for k, x in a.items():
                    out[pos[(r, c, k)]] = x
        return out

    def matrix(self, vec: dict):
        m = zero_matrix(len(self.tgt), len(self.src))
        for i, x in vec.items():
            r, c, k = self.slots[i]
            m[r][c][k] = x
        return m

    def unit(self, i: int):
        r, c, k = self.slots[i]
        return r, c, {k: ONE}


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True, eq=False)
class TwoTermComplex:
    algebra: BoundQuiverAlgebra
    p1: tuple[int, ...]
    p0: tuple[int, ...]
    d: tuple

    def __post_init__(self):
        object.__setattr__(self, "p1", tuple(self.p1))
        object.__setattr__(self, "p0", tuple(self.p0))
        rows = [list(r) for r in self.d] if self.d else [[] for _ in self.p0]
        if len(rows) != len(self.p0) or any(len(r) != len(self.p1) for r in rows):
            raise ValueError("differential shape does not match p0 x p1")
        alg = self.algebra
        for r, row in enumerate(rows):
            for c, a in enumerate(row):
                a = {k: x for k, x in a.items() if x}
                row[c] = a
                ok = set(alg.corner_indices(self.p0[r], self.p1[c]))
                if any(k not in ok for k in a):
                    raise ValueError(f"entry ({r},{c}) is not in e_{self.p0[r]} A e_{self.p1[c]}")
        object.__setattr__(self, "d", tuple(tuple(r) for r in rows))

    def __repr__(self):
        return f"TwoTermComplex(p1={list(self.p1)}, p0={list(self.p0)}, g={self.g_vector()})"

    @property
    def is_zero(self) -> bool:
        return not self.p1 and not self.p0

    def dmat(self):
        return [list(r) for r in self.d]

    def g_vector(self) -> tuple[int, ...]:
        alg = self.algebra
        g = [0] * alg.rank
        for v in self.p0:
            g[alg.vertex_position(v)] += 1
        for v in self.p1:
            g[alg.vertex_position(v)] -= 1
        return tuple(g)

    def is_minimal(self) -> bool:
        idx = self.algebra.idempotent_index
        for r, v in enumerate(self.p0):
            for c, u in enumerate(self.p1):
                if u == v and self.d[r][c].get(idx[v]):
                    return False
        return True

    @cached_property
    def summands(self) -> tuple["TwoTermComplex", ...]:
        return tuple(decompose(self))


def projective_complex(alg: BoundQuiverAlgebra, i: int, shifted: bool = False) -> TwoTermComplex:
    if shifted:
        return TwoTermComplex(alg, (i,), (), ())
    return TwoTermComplex(alg, (), (i,), ((),))


def algebra_complex(alg: BoundQuiverAlgebra) -> TwoTermComplex:
    return direct_sum([projective_complex(alg, v) for v in alg.vertices], alg)


def zero_object(alg: BoundQuiverAlgebra) -> TwoTermComplex:
    """The shifted algebra, minimum of the two-term silting poset."""
    return direct_sum([projective_complex(alg, v, shifted=True) for v in alg.vertices], alg)


def direct_sum(parts: Iterable[TwoTermComplex], alg: BoundQuiverAlgebra | None = None) -> TwoTermComplex:
    parts = list(parts)
    if alg is None:
        alg = parts[0].algebra
    p1, p0 = [], []
    for x in parts:
        if x.algebra is not alg:
            raise AlgebraMismatch("summands over different algebras")
        p1.extend(x.p1)
        p0.extend(x.p0)
    d = zero_matrix(len(p0), len(p1))
    r0 = c0 = 0
    for x in parts:
        for r, row in enumerate(x.d):
            for c, a in enumerate(row):
                d[r0 + r][c0 + c] = dict(a)
        r0 += len(x.p0)
        c0 += len(x.p1)
    return TwoTermComplex(alg, p1, p0, d)


def g_vector(t: TwoTermComplex) -> tuple[int, ...]:
    return t.g_vector()


# ---------------------------------------------------------------------------
# Hom(X, Y[1])


def _homotopy_images(x: TwoTermComplex, y: TwoTermComplex, coords: HomCoords) -> Iterable[dict]:
    """Vectors s*d_X and d_Y*t spanning the null-homotopic maps X1 -> Y0."""
    alg = x.algebra
    dx, dy = x.d, y.d
    for r, v in enumerate(y.p0):
        for c0, u in enumerate(x.p0):
            for k in alg.corner_indices(v, u):
                b = {k: ONE}
                vec = {}
                for c, w in enumerate(x.p1):
                    a = dx[c0][c]
                    if a:
                        p = alg.mul(b, a)
                        for kk, val in p.items():
                            vec[coords.pos[(r, c, kk)]] = val
                if vec:
                    yield vec
    for r1, v in enumerate(y.p1):
        for c, u in enumerate(x.p1):
            for k in alg.corner_indices(v, u):
                b = {k: ONE}
                vec = {}
                for r, w in enumerate(y.p0):
                    a = dy[r][r1]
                    if a:
                        p = alg.mul(a, b)
                        for kk, val in p.items():
                            vec[coords.pos[(r, c, kk)]] = val
                if vec:
                    yield vec


def hom_k1_dimension(x: TwoTermComplex, y: TwoTermComplex) -> int:
    """dim Hom_K(X, Y[1]) = dim Hom(X1, Y0) modulo s d_X + d_Y t."""
    if x.algebra is not y.algebra:
        raise AlgebraMismatch("complexes over different algebras")
    if not x.p1 or not y.p0:
        return 0
    coords = HomCoords(x.algebra, x.p1, y.p0)
    total = len(coords)
    if total == 0:
        return 0
    ech = Echelon()
    for vec in _homotopy_images(x, y, coords):
        ech.add(vec)
        if len(ech) == total:
            return 0
    return total - len(ech)


def is_presilting(t: TwoTermComplex) -> bool:
    if not t.is_minimal():
        raise NotMinimized("minimize the complex first")
    return hom_k1_dimension(t, t) == 0


def is_silting(t: TwoTermComplex) -> bool:
    if not is_presilting(t):
        return False
    return len({s.g_vector() for s in t.summands}) == t.algebra.rank


def g_matrix(t: TwoTermComplex) -> tuple[tuple[int, ...], ...]:
    """Sorted g-vectors of the indecomposable summands (canonical fingerprint)."""
    return tuple(sorted(s.g_vector() for s in t.summands))


def order_geq(t: TwoTermComplex, u: TwoTermComplex, check: bool = True) -> bool:
    if check and not (is_silting(t) and is_silting(u)):
        raise NotSilting("order_geq compares silting complexes")
    return hom_k1_dimension(t, u) == 0


# ---------------------------------------------------------------------------
# minimization (Gaussian elimination of invertible entries)


def minimize_chain(alg: BoundQuiverAlgebra, objs: list[list[int]], diffs: list):
    """Remove contractible summands from a bounded complex of projectives.

    ``objs[i]`` lists the summands in consecutive degrees; ``diffs[i]`` maps
    ``objs[i]`` to ``objs[i+1]`` (rows indexed by ``objs[i+1]``).  Modifies
    copies and returns ``(objs, diffs)``.
    """
    objs = [list(o) for o in objs]
    diffs = [[list(r) for r in m] for m in diffs]
    idx = alg.idempotent_index
    while True:
        found = None
        for i, m in enumerate(diffs):
            src, tgt = objs[i], objs[i + 1]
            for r, v in enumerate(tgt):
                for c, u in enumerate(src):
                    if u == v and m[r][c].get(idx[v]):
                        found = (i, r, c)
                        break
                if found:
                    break
            if found:
                break
        if found is None:
            return objs, diffs
        i, r, c = found
        m = diffs[i]
        v = objs[i][c]
        uinv = invert_local(alg, m[r][c], v)
        col = [m[rr][c] for rr in range(len(objs[i + 1]))]
        row_r = m[r]
        left = [alg.mul(col[rr], uinv) if col[rr] else {} for rr in range(len(col))]
        new = []
        for rr in range(len(objs[i + 1])):
            if rr == r:
                continue
            row = []
            for cc in range(len(objs[i])):
                if cc == c:
                    continue
                a = m[rr][cc]
                if left[rr] and row_r[cc]:
                    a = _add(a, alg.mul(left[rr], row_r[cc]), -1)
                row.append(a)
            new.append(row)
        diffs[i] = new
        if i > 0:
            diffs[i - 1] = [row for rr, row in enumerate(diffs[i - 1]) if rr != c]
        if i + 1 < len(diffs):
            diffs[i + 1] = [[a for cc, a in enumerate(row) if cc != r] for row in diffs[i + 1]]
        del objs[i][c]
        del objs[i + 1][r]


def minimize(t: TwoTermComplex) -> TwoTermComplex:
    objs, diffs = minimize_chain(t.algebra, [list(t.p1), list(t.p0)], [t.dmat()])
    d = diffs[0] if objs[1] else ()
    return TwoTermComplex(t.algebra, objs[0], objs[1], d)


# ---------------------------------------------------------------------------
# decomposition into indecomposables


def _components(t: TwoTermComplex) -> list[tuple[list[int], list[int]]]:
    n1, n0 = len(t.p1), len(t.p0)
    parent = list(range(n1 + n0))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for r in range(n0):
        for c in range(n1):
            if t.d[r][c]:
                a, b = find(c), find(n1 + r)
                if a != b:
                    parent[a] = b
    groups: dict[int, tuple[list, list]] = {}
    for c in range(n1):
        groups.setdefault(find(c), ([], []))[0].append(c)
    for r in range(n0):
        groups.setdefault(find(n1 + r), ([], []))[1].append(r)
    return list(groups.values())


def _sub(t: TwoTermComplex, cols: list[int], rows: list[int]) -> TwoTermComplex:
    d = [[t.d[r][c] for c in cols] for r in rows]
    return TwoTermComplex(t.algebra, [t.p1[c] for c in cols], [t.p0[r] for r in rows], d)


def _chain_map_vectors(x: TwoTermComplex, y: TwoTermComplex):
    """Chain maps X -> Y as coordinate vectors, plus the coordinate systems.

    A vector concatenates the coordinates of f1: X1 -> Y1 and f0: X0 -> Y0.
    """
    alg = x.algebra
    c1 = HomCoords(alg, x.p1, y.p1)
    c0 = HomCoords(alg, x.p0, y.p0)
    eq = HomCoords(alg, x.p1, y.p0)
    n1 = len(c1)
    columns = []
    for i in range(n1):
        rr, cc, b = c1.unit(i)
        vec = {}
        for r in range(len(y.p0)):
            a = y.d[r][rr]
            if a:
                for k, val in alg.mul(a, b).items():
                    vec[eq.pos[(r, cc, k)]] = -val
        columns.append(vec)
    for i in range(len(c0)):
        rr, cc, b = c0.unit(i)
        vec = {}
        for c in range(len(x.p1)):
            a = x.d[cc][c]
            if a:
                for k, val in alg.mul(b, a).items():
                    vec[eq.pos[(rr, c, k)]] = val
        columns.append(vec)
    rows: dict[int, dict] = {}
    for j, vec in enumerate(columns):
        for i, val in vec.items():
            rows.setdefault(i, {})[j] = val
    return sparse_kernel(rows.values(), len(columns)), c1, c0


def _unpack(vec, c1, c0):
    n1 = len(c1)
    v1 = {k: val for k, val in vec.items() if k < n1}
    v0 = {k - n1: val for k, val in vec.items() if k >= n1}
    return c1.matrix(v1), c0.matrix(v0)


def chain_maps(x: TwoTermComplex, y: TwoTermComplex) -> list[tuple[list, list]]:
    """Basis of chain maps (f1, f0): X -> Y, i.e. f0 d_X = d_Y f1."""
    kernel, c1, c0 = _chain_map_vectors(x, y)
    return [_unpack(v, c1, c0) for v in kernel]


def chain_endomorphisms(t: TwoTermComplex) -> list[tuple[list, list]]:
    return chain_maps(t, t)


def hom_k0_basis(x: TwoTermComplex, y: TwoTermComplex) -> list[tuple[list, list]]:
    """Chain maps X -> Y representing a basis of Hom_K(X, Y)."""
    if x.algebra is not y.algebra:
        raise AlgebraMismatch("complexes over different algebras")
    alg = x.algebra
    kernel, c1, c0 = _chain_map_vectors(x, y)
    if not kernel:
        return []
    n1 = len(c1)
    ech = Echelon()
    # null-homotopic maps (h d_X, d_Y h) for h: X0 -> Y1
    for r, v in enumerate(y.p1):
        for c, u in enumerate(x.p0):
            for k in alg.corner_indices(v, u):
                b = {k: ONE}
                vec = {}
                for cc in range(len(x.p1)):
                    a = x.d[c][cc]
                    if a:
                        for kk, val in alg.mul(b, a).items():
                            vec[c1.pos[(r, cc, kk)]] = val
                for rr in range(len(y.p0)):
                    a = y.d[rr][r]
                    if a:
                        for kk, val in alg.mul(a, b).items():
                            vec[n1 + c0.pos[(rr, c, kk)]] = val
                if vec:
                    ech.add(vec)
    return [_unpack(v, c1, c0) for v in kernel if ech.add(v)]


def _top(alg, m, objs) -> list[list[Fraction]]:
    """Reduction of a matrix of endomorphisms modulo the radical."""
    n = len(objs)
    idx = alg.idempotent_index
    out = [[Fraction(0)] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            if objs[r] == objs[c]:
                out[r][c] = m[r][c].get(idx[objs[r]], Fraction(0))
    return out


def _smul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for l in range(k):
            x = a[i][l]
            if x:
                bl = b[l]
                for j in range(m):
                    if bl[j]:
                        out[i][j] += x * bl[j]
    return out


def _flat(m) -> dict:
    n = len(m)
    return {i * n + j: x for i, row in enumerate(m) for j, x in enumerate(row) if x}


def _unflat(v: dict, n: int):
    out = [[Fraction(0)] * n for _ in range(n)]
    for k, x in v.items():
        out[k // n][k % n] = x
    return out


def _min_poly(a) -> list[Fraction]:
    """Monic minimal polynomial of a square rational matrix, low degree first."""
    n = len(a)
    ech = Echelon(track=True)
    power = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    powers = []
    while True:
        vec = _flat(power)
        combo = ech.express(vec) if powers else (None if vec else {})
        if combo is not None:
            coeffs = [Fraction(0)] * (len(powers) + 1)
            for k, c in combo.items():
                coeffs[k] = -c
            coeffs[-1] = Fraction(1)
            return coeffs
        ech.add(vec)
        powers.append(power)
        power = _smul(power, a)


def _poly_at(coeffs, a):
    n = len(a)
    out = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(coeffs):
        out = _smul(out, a)
        if c:
            for i in range(n):
                out[i][i] += c
    return out


def _split_idempotent(a):
    """A nontrivial polynomial idempotent in a, or None when a has one primary part."""
    x = sympy.Symbol("x")
    coeffs = _min_poly(a)
    poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs])),
                      x, domain="QQ")
    _, factors = poly.factor_list()
    if len(factors) < 2:
        return None
    f, mult = factors[0]
    p1 = f ** mult
    rest = sympy.quo(poly, p1)
    s, t, h = sympy.gcdex(p1, rest)
    proj = sympy.Poly(t * rest, x, domain="QQ")
    proj = sympy.rem(proj, poly)
    cs = [Fraction(int(c.p), int(c.q)) for c in reversed(sympy.Poly(proj, x).all_coeffs())]
    return _poly_at(cs, a)


def _semisimple_idempotent(images: list, size: int, rng: random.Random):
    """Find a nontrivial idempotent of the matrix algebra spanned by ``images``.

    Returns ``None`` if the algebra modulo its radical is one-dimensional.
    """
    ech = Echelon()
    basis = []
    for im in images:
        v = _flat(im)
        if v and ech.add(v):
            basis.append(im)
    # trace-form radical (characteristic zero)
    gram_rows = []
    for x in basis:
        row = {}
        for j, y in enumerate(basis):
            tr = sum((x[i][k] * y[k][i] for i in range(size) for k in range(size) if x[i][k] and y[k][i]),
                     Fraction(0))
            if tr:
                row[j] = tr
        gram_rows.append(row)
    rad_dim = len(sparse_kernel(gram_rows, len(basis)))
    if len(basis) - rad_dim <= 1:
        return None
    for attempt in range(40):
        if attempt < len(basis):
            a = basis[attempt]
        else:
            a = [[Fraction(0)] * size for _ in range(size)]
            for b in basis:
                c = rng.randint(-7, 7)
                if c:
                    for i in range(size):
                        for j in range(size):
                            if b[i][j]:
                                a[i][j] += c * b[i][j]
        e = _split_idempotent(a)
        if e is not None:
            return e
    raise SplitFailure("no rational idempotent found in the endomorphism algebra")


def _split_degree(alg, f, objs):
    """Inclusion and projection for the image of an idempotent matrix f."""
    top = _top(alg, f, objs)
    n = len(objs)
    ech = Echelon()
    chosen = []
    for c in range(n):
        col = {r: top[r][c] for r in range(n) if top[r][c]}
        if col and ech.add(col):
            chosen.append(c)
    image_objs = [objs[c] for c in chosen]
    k = len(chosen)
    if k == 0:
        return [], [], []
    s = [[top[r][c] for c in chosen] for r in range(n)]
    # t = (s^T s)^{-1} s^T, block diagonal by vertex
    st = [[s[r][j] for r in range(n)] for j in range(k)]
    sts = _smul(st, s)
    t = _smul(_sinv(sts), st)
    to_alg = lambda m, rows, cols: [
        [({alg.idempotent_index[rows[i]]: m[i][j]} if m[i][j] and rows[i] == cols[j] else {})
         for j in range(len(cols))] for i in range(len(rows))]
    S = to_alg(s, objs, image_objs)
    T = to_alg(t, image_objs, objs)
    incl = mat_mul(alg, f, S)
    M = mat_mul(alg, T, incl)
    proj = mat_mul(alg, invert_unipotent(alg, M, image_objs), mat_mul(alg, T, f))
    return image_objs, incl, proj


def _sinv(m):
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _split(t: TwoTermComplex, rng: random.Random):
    """Split off one summand along a chain idempotent; None if indecomposable."""
    alg = t.algebra
    if len(t.p1) + len(t.p0) <= 1:
        return None
    endos = chain_endomorphisms(t)
    objs = list(t.p1) + list(t.p0)
    n1 = len(t.p1)

    def reduced(f1, f0):
        a, b = _top(alg, f1, t.p1), _top(alg, f0, t.p0)
        size = len(objs)
        out = [[Fraction(0)] * size for _ in range(size)]
        for i in range(n1):
            for j in range(n1):
                out[i][j] = a[i][j]
        for i in range(len(t.p0)):
            for j in range(len(t.p0)):
                out[n1 + i][n1 + j] = b[i][j]
        return out

    images = [reduced(f1, f0) for f1, f0 in endos]
    e = _semisimple_idempotent(images, len(objs), rng)
    if e is None:
        return None
    ech = Echelon(track=True)
    for im in images:
        ech.add(_flat(im))
    combo = ech.express(_flat(e))
    f1 = zero_matrix(len(t.p1), len(t.p1))
    f0 = zero_matrix(len(t.p0), len(t.p0))
    for k, c in combo.items():
        f1 = mat_add(f1, mat_scale(endos[k][0], c))
        f0 = mat_add(f0, mat_scale(endos[k][1], c))
    # Newton lift e <- 3e^2 - 2e^3 until idempotent
    for _ in range(4 * alg.nilbound + 4):
        sq1, sq0 = mat_mul(alg, f1, f1), mat_mul(alg, f0, f0)
        if _mat_eq(sq1, f1) and _mat_eq(sq0, f0):
            break
        cu1, cu0 = mat_mul(alg, sq1, f1), mat_mul(alg, sq0, f0)
        f1 = mat_add(mat_scale(sq1, 3), cu1, -2)
        f0 = mat_add(mat_scale(sq0, 3), cu0, -2)
    else:
        raise SplitFailure("idempotent lifting did not converge")
    parts = []
    for g1, g0 in ((f1, f0), (mat_add(identity_matrix(alg, t.p1), f1, -1),
                              mat_add(identity_matrix(alg, t.p0), f0, -1))):
        o1, i1, _ = _split_degree(alg, g1, list(t.p1)) if t.p1 else ([], [], [])
        o0, _, pr0 = _split_degree(alg, g0, list(t.p0)) if t.p0 else ([], [], [])
        if o1 and o0:
            d = mat_mul(alg, pr0, mat_mul(alg, t.dmat(), i1))
        else:
            d = [[] for _ in o0] if o0 else ()
        parts.append(TwoTermComplex(alg, o1, o0, d))
    return parts


def _mat_eq(x, y) -> bool:
    return all(a == b for rx, ry in zip(x, y) for a, b in zip(rx, ry))


def invert_matrix(alg: BoundQuiverAlgebra, m, objs):
    """Inverse of a square matrix whose reduction modulo the radical is invertible."""
    n = len(objs)
    try:
        tinv = _sinv(_top(alg, m, objs))
    except StopIteration:
        raise ValueError("matrix is not invertible") from None
    idx = alg.idempotent_index
    t = [[({idx[objs[i]]: tinv[i][j]} if tinv[i][j] and objs[i] == objs[j] else {}) for j in range(n)]
         for i in range(n)]
    return mat_mul(alg, invert_unipotent(alg, mat_mul(alg, t, m), objs), t)


def _mm(alg, x, y, rows: int, cols: int):
    """Product with explicit shape, so empty inner dimensions are harmless."""
    if not rows or not cols or not y:
        return zero_matrix(rows, cols)
    return mat_mul(alg, x, y)


def _residue(alg, h1, h0, u: TwoTermComplex) -> Fraction:
    """Image of a chain endomorphism of an indecomposable u in its residue field."""
    tr = sum((_top(alg, h1, u.p1)[i][i] for i in range(len(u.p1))), Fraction(0))
    tr += sum((_top(alg, h0, u.p0)[i][i] for i in range(len(u.p0))), Fraction(0))
    return tr / (len(u.p1) + len(u.p0))


def split_known(t: TwoTermComplex, known: Sequence[TwoTermComplex]):
    """Split every copy of the indecomposables in ``known`` off a minimal complex.

    For each candidate U, maps f: U -> T and g: T -> U with g f invertible
    are read off a maximal invertible minor of the residue pairing; the
    idempotent F (G F)^-1 G then cuts out all copies at once.  Returns the
    list of split copies and the minimized remainder.
    """
    alg = t.algebra
    n1, n0 = len(t.p1), len(t.p0)
    fs, gs, copies = [], [], []
    for u in known:
        into, back = hom_k0_basis(u, t), hom_k0_basis(t, u)
        if not into or not back:
            continue
        u1, u0 = len(u.p1), len(u.p0)
        pairing = [[_residue(alg, _mm(alg, g1, f1, u1, u1), _mm(alg, g0, f0, u0, u0), u) for g1, g0 in back]
                   for f1, f0 in into]
        rows_ech = Echelon()
        chosen_r = [i for i, row in enumerate(pairing)
                    if any(row) and rows_ech.add({j: x for j, x in enumerate(row) if x})]
        cols_ech = Echelon()
        chosen_c = []
        for j in range(len(back)):
            col = {k: pairing[i][j] for k, i in enumerate(chosen_r) if pairing[i][j]}
            if col and cols_ech.add(col):
                chosen_c.append(j)
        copies += [u] * len(chosen_r)
        fs += [into[i] for i in chosen_r]
        gs += [back[j] for j in chosen_c]
    if not copies:
        return [], t
    s = direct_sum(copies, alg)
    big_f1 = [[a for f1, _ in fs for a in f1[r]] for r in range(n1)]
    big_f0 = [[a for _, f0 in fs for a in f0[r]] for r in range(n0)]
    big_g1 = [row for g1, _ in gs for row in g1]
    big_g0 = [row for _, g0 in gs for row in g0]
    parts = []
    for big_f, big_g, objs, sobjs in ((big_f1, big_g1, t.p1, s.p1), (big_f0, big_g0, t.p0, s.p0)):
        n, k = len(objs), len(sobjs)
        if not k:
            parts.append(identity_matrix(alg, objs))
            continue
        inv = invert_matrix(alg, _mm(alg, big_g, big_f, k, k), list(sobjs))
        e = _mm(alg, big_f, _mm(alg, inv, big_g, k, n), n, n)
        parts.append(mat_add(identity_matrix(alg, objs), e, -1))
    o1, i1, _ = _split_degree(alg, parts[0], list(t.p1)) if n1 else ([], [], [])
    o0, _, pr0 = _split_degree(alg, parts[1], list(t.p0)) if n0 else ([], [], [])
    if o1 and o0:
        d = mat_mul(alg, pr0, mat_mul(alg, t.dmat(), i1))
    else:
        d = [[] for _ in o0] if o0 else ()
    rest = minimize(TwoTermComplex(alg, o1, o0, d))
    expected = tuple(a - sum(c.g_vector()[v] for c in copies) for v, a in enumerate(t.g_vector()))
    if rest.g_vector() != expected:
        raise SplitFailure("splitting off known summands broke the g-vector balance")
    return copies, rest


def decompose(t: TwoTermComplex, seed: int = 0, known: Sequence[TwoTermComplex] = ()) -> list[TwoTermComplex]:
    """Indecomposable summands of a minimal complex, in a deterministic order.

    When no rational idempotent turns up (typically a summand occurring with
    high multiplicity), summands isomorphic to a member of ``known`` are split
    off directly and reported as that very object.
    """
    if not t.is_minimal():
        raise NotMinimized("minimize the complex first")
    rng = random.Random(seed)
    out = []
    todo = [_sub(t, cols, rows) for cols, rows in _components(t)]
    while todo:
        x = todo.pop(0)
        try:
            parts = _split(x, rng)
        except SplitFailure:
            copies, rest = split_known(x, known)
            if not copies:
                raise
            out += copies
            parts = [rest] if not rest.is_zero else []
        if parts is None:
            out.append(x)
            continue
        for p in parts:
            p = minimize(p)
            for cols, rows in _components(p):
                todo.append(_sub(p, cols, rows))
    out.sort(key=lambda s: (s.g_vector(), s.p1, s.p0))
    return out


# ---------------------------------------------------------------------------
# the module H^0 and support data


@dataclass(frozen=True)
class ModuleData:
    dim_vector: tuple[int, ...]
    support: tuple[int, ...]
    shifted: tuple[int, ...]


def cokernel_dimension_vector(t: TwoTermComplex) -> tuple[int, ...]:
    alg = t.algebra
    dims = []
    for w in alg.vertices:
        tgt = []
        pos = {}
        for r, v in enumerate(t.p0):
            for k in alg.corner_indices(v, w):
                pos[(r, k)] = len(tgt)
                tgt.append((r, k))
        ech = Echelon()
        for c, u in enumerate(t.p1):
            for k in alg.corner_indices(u, w):
                b = {k: ONE}
                vec = {}
                for r in range(len(t.p0)):
                    a = t.d[r][c]
                    if a:
                        for kk, x in alg.mul(a, b).items():
                            vec[pos[(r, kk)]] = x
                if vec:
                    ech.add(vec)
        dims.append(len(tgt) - len(ech))
    return tuple(dims)


def module_data(t: TwoTermComplex) -> ModuleData:
    if not t.is_minimal():
        raise NotMinimized("minimize the complex first")
    alg = t.algebra
    dims = cokernel_dimension_vector(t)
    support = tuple(v for v, n in zip(alg.vertices, dims) if n)
    shifted = tuple(sorted((s.p1[0] for s in t.summands if not s.p0),
                           key=alg.vertex_position))
    return ModuleData(dims, support, shifted)
