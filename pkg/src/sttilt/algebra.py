"""Bound quiver algebras kQ/I with an explicit normal-form basis.

Conventions: paths compose left to right (``ab`` is ``a`` followed by ``b``),
modules are right modules, ``P_v = e_v A`` and ``Hom(P_u, P_v) = e_v A e_u``
acting by left multiplication.

Construction: every path of length < N+1 spans the ambient space; the
relation subspace is spanned by ``u*g*v`` for relation generators ``g`` (terms
of length >= N+1 dropped).  Rows are reduced per (source, target) block, with
longer paths preferred as pivots, so the non-pivot paths form the basis.
Every path of length exactly N must be a pivot whose row is itself; that is
the check that Rad^N lies in the ideal.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    IdealNotInRadical,
    InvalidCartan,
    InvalidOrientation,
    IsLoop,
    NotAdmissible,
    NotTree,
    PropagationFailed,
    RelationTooShort,
)
from .exactlinalg import Echelon, to_q
from .quiver import Arrow, Quiver, core, core_paths, has_higher_cycles, is_tree_quiver, tree_walk


@dataclass(frozen=True, order=True)
class Path:
    source: int
    target: int
    arrows: tuple[str, ...] = ()

    def __len__(self):
        return len(self.arrows)

    def label(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"[{self.source}]"


@dataclass(frozen=True)
class RelationSpec:
    """A linear combination of paths, each given by its arrow names."""

    terms: tuple[tuple[Fraction, tuple[str, ...]], ...]

    def __post_init__(self):
        terms = tuple((to_q(c), tuple(p)) for c, p in self.terms)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, *terms):
        """``RelationSpec.of((1, "e1 a"), (-1, "a e2"))`` or ``of("e1 e1")``."""
        out = []
        for t in terms:
            if isinstance(t, str):
                t = (1, t)
            c, p = t
            out.append((c, tuple(p.split()) if isinstance(p, str) else tuple(p)))
        return cls(tuple(out))


def _validate_relation(q: Quiver, rel: RelationSpec) -> tuple[int, int]:
    ends = set()
    for c, p in rel.terms:
        if len(p) < 2:
            raise RelationTooShort(f"term {'*'.join(p) or '1'} has length < 2")
        for name in p:
            if not q.has_arrow(name):
                raise ValueError(f"unknown arrow {name!r}")
        if not q.is_composable(p):
            raise ValueError(f"path {'*'.join(p)} is not composable")
        ends.add((q.arrow(p[0]).source, q.arrow(p[-1]).target))
    if len(ends) > 1:
        raise ValueError("relation terms do not share source and target")
    if not ends:
        raise ValueError("empty relation")
    return ends.pop()


class AlgebraElement:
    """An element of a bound quiver algebra as sparse coordinates."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "BoundQuiverAlgebra", terms: dict):
        self.algebra = algebra
        self.terms = {k: v for k, v in terms.items() if v}

    @property
    def vector(self) -> list[Fraction]:
        out = [Fraction(0)] * self.algebra.dim
        for k, v in self.terms.items():
            out[k] = v
        return out

    def __add__(self, other):
        return AlgebraElement(self.algebra, _add(self.terms, other.terms))

    def __sub__(self, other):
        return AlgebraElement(self.algebra, _add(self.terms, other.terms, -1))

    def __neg__(self):
        return AlgebraElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return AlgebraElement(self.algebra, self.algebra.mul(self.terms, other.terms))
        c = to_q(other)
        return AlgebraElement(self.algebra, {k: c * v for k, v in self.terms.items()})

    __rmul__ = lambda self, c: self.__mul__(c)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            lab = self.algebra.basis[k].label()
            parts.append(lab if c == 1 else f"{c}*{lab}")
        return " + ".join(parts)


def _add(x: dict, y: dict, s=1) -> dict:
    out = dict(x)
    for k, v in y.items():
        nv = out.get(k, 0) + s * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


class BoundQuiverAlgebra:
    """Finite-dimensional algebra with a basis of paths and structure constants.

    Elements used internally are plain ``dict`` objects mapping basis index to
    coefficient; :class:`AlgebraElement` wraps them for the public API.
    """

    def __init__(self, quiver: Quiver, nilbound: int, basis: list[Path], table, arrow_elements,
                 relations=()):
        self.quiver = quiver
        self.nilbound = nilbound
        self.basis = basis
        self.table = table  # i -> {j: {k: c}}
        self.arrow_elements = arrow_elements  # arrow name -> sparse element
        self.relations = tuple(relations)
        self.index = {p: i for i, p in enumerate(basis)}
        self.idempotent_index = {v: self.index[Path(v, v)] for v in quiver.vertices}
        self._corner = defaultdict(list)
        for i, p in enumerate(basis):
            self._corner[(p.source, p.target)].append(i)
        self._vertex_pos = {v: k for k, v in enumerate(quiver.vertices)}

    def __repr__(self):
        return f"<BoundQuiverAlgebra vertices={list(self.quiver.vertices)} dim={self.dim}>"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.quiver.vertices

    @property
    def rank(self) -> int:
        """Number of vertices, i.e. of indecomposable projectives."""
        return len(self.quiver.vertices)

    def vertex_position(self, v: int) -> int:
        return self._vertex_pos[v]

    def corner_indices(self, i: int, j: int) -> list[int]:
        return self._corner.get((i, j), [])

    # arithmetic on sparse dicts
    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        table = self.table
        for i, a in x.items():
            row = table[i]
            for j, b in y.items():
                prod = row.get(j)
                if prod is None:
                    continue
                ab = a * b
                for k, c in prod.items():
                    nv = out.get(k, 0) + ab * c
                    if nv:
                        out[k] = nv
                    else:
                        del out[k]
        return out

    def e(self, v: int) -> dict:
        return {self.idempotent_index[v]: Fraction(1)}

    def element(self, terms) -> AlgebraElement:
        if isinstance(terms, dict):
            return AlgebraElement(self, terms)
        return AlgebraElement(self, {k: to_q(x) for k, x in enumerate(terms) if x})

    def basis_element(self, k: int) -> AlgebraElement:
        return AlgebraElement(self, {k: Fraction(1)})

    def idempotent(self, v: int) -> AlgebraElement:
        return AlgebraElement(self, self.e(v))

    def path_terms(self, names: Sequence[str], source: int | None = None) -> dict:
        if not names:
            if source is None:
                raise ValueError("trivial path needs a vertex")
            return self.e(source)
        out = None
        for n in names:
            a = self.arrow_elements.get(n)
            if a is None:
                a = self._dropped_arrow(n)
            out = dict(a) if out is None else self.mul(out, a)
            if not out:
                return {}
        return out

    def _dropped_arrow(self, name):
        raise KeyError(f"unknown arrow {name!r}")

    def path(self, names: Sequence[str] | str, source: int | None = None) -> AlgebraElement:
        if isinstance(names, str):
            names = names.replace("*", " ").split()
        return AlgebraElement(self, self.path_terms(tuple(names), source))

    def is_radical(self, x: dict) -> bool:
        return not any(k in x for k in self.idempotent_index.values())

    def corner_part(self, x: dict, i: int, j: int) -> dict:
        idx = set(self.corner_indices(i, j))
        return {k: v for k, v in x.items() if k in idx}

    def radical_power_basis(self, m: int) -> list[dict]:
        """Basis of Rad^m (m >= 0)."""
        if m == 0:
            return [{k: Fraction(1)} for k in range(self.dim)]
        rad = [{k: Fraction(1)} for k in range(self.dim) if k not in set(self.idempotent_index.values())]
        cur = rad
        for _ in range(m - 1):
            ech = Echelon()
            for x in cur:
                for r in rad:
                    p = self.mul(x, r)
                    if p:
                        ech.add(p)
            cur = ech.basis()
            if not cur:
                break
        return cur


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.algebra is not b.algebra:
        raise ValueError("elements of different algebras")
    return a * b


def _path_key(arrow_pos: dict, p: Path):
    return (len(p.arrows), tuple(arrow_pos[a] for a in reversed(p.arrows)))


def _paths_up_to(q: Quiver, bound: int) -> list[Path]:
    """All paths of length < bound, including trivial ones."""
    out = [Path(v, v) for v in q.vertices]
    frontier = list(out)
    for _ in range(1, bound):
        nxt = []
        for p in frontier:
            for a in q.arrows_from(p.target):
                nxt.append(Path(p.source, a.target, p.arrows + (a.name,)))
        out.extend(nxt)
        frontier = nxt
        if not frontier:
            break
    return out


def build(q: Quiver, rels: Iterable[RelationSpec], nilbound: int) -> BoundQuiverAlgebra:
    """Construct kQ/I with a normal-form basis; verifies Rad^N is in I."""
    rels = list(rels)
    if nilbound < 2:
        raise ValueError("nilbound must be at least 2")
    ends = [_validate_relation(q, r) for r in rels]
    bound = nilbound + 1
    arrow_pos = {a.name: k for k, a in enumerate(q.arrows)}
    paths = _paths_up_to(q, bound)
    blocks = defaultdict(list)
    for p in paths:
        blocks[(p.source, p.target)].append(p)
    col = {}
    for key, ps in blocks.items():
        ps.sort(key=lambda p: _path_key(arrow_pos, p), reverse=True)
        for k, p in enumerate(ps):
            col[p] = k
    ending_at = defaultdict(list)
    starting_at = defaultdict(list)
    for p in paths:
        ending_at[p.target].append(p)
        starting_at[p.source].append(p)

    echelons = defaultdict(Echelon)
    for rel, (s, t) in zip(rels, ends):
        shortest = min(len(p) for _, p in rel.terms)
        for u in ending_at[s]:
            if len(u) + shortest >= bound:
                continue
            for v in starting_at[t]:
                if len(u) + shortest + len(v) >= bound:
                    continue
                vec = {}
                for c, p in rel.terms:
                    total = len(u) + len(p) + len(v)
                    if total >= bound:
                        continue
                    path = Path(u.source, v.target, u.arrows + p + v.arrows)
                    k = col[path]
                    nv = vec.get(k, 0) + c
                    if nv:
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
                if vec:
                    echelons[(u.source, v.target)].add(vec)

    for p in paths:
        if len(p) == nilbound:
            ech = echelons.get((p.source, p.target))
            row = ech.rows.get(col[p]) if ech is not None else None
            if row is None or len(row) != 1:
                raise NotAdmissible(nilbound)

    basis = []
    for key, ps in blocks.items():
        ech = echelons.get(key)
        for p in ps:
            if len(p) < nilbound and (ech is None or col[p] not in ech.rows):
                basis.append(p)
    basis.sort(key=lambda p: _path_key(arrow_pos, p) + (q.vertices.index(p.source),))
    index = {p: i for i, p in enumerate(basis)}

    def normal_form(p: Path) -> dict:
        if len(p) >= nilbound:
            return {}
        if p in index:
            return {index[p]: Fraction(1)}
        ps = blocks[(p.source, p.target)]
        row = echelons[(p.source, p.target)].rows[col[p]]
        return {index[ps[k]]: -c for k, c in row.items() if k != col[p]}

    table = {}
    for i, a in enumerate(basis):
        row = {}
        for j, b in enumerate(basis):
            if a.target != b.source:
                continue
            nf = normal_form(Path(a.source, b.target, a.arrows + b.arrows))
            if nf:
                row[j] = nf
        table[i] = row
    arrow_elements = {a.name: normal_form(Path(a.source, a.target, (a.name,))) for a in q.arrows}
    return BoundQuiverAlgebra(q, nilbound, basis, table, arrow_elements, rels)


def corner(a: BoundQuiverAlgebra, i: int, j: int) -> list[AlgebraElement]:
    """Basis of e_i A e_j."""
    return [a.basis_element(k) for k in a.corner_indices(i, j)]


def _span_echelon(vectors) -> Echelon:
    ech = Echelon()
    for v in vectors:
        if v:
            ech.add(v)
    return ech


def check_arrow_condition(a: BoundQuiverAlgebra, arrow: Arrow | str) -> bool:
    """Whether e_i A alpha equals alpha A e_j for a non-loop arrow alpha: i -> j.

    Since alpha = e_i alpha e_j, e_i A alpha = (e_i A e_i) alpha and
    alpha A e_j = alpha (e_j A e_j).
    """
    if isinstance(arrow, str):
        arrow = a.quiver.arrow(arrow)
    if arrow.is_loop:
        raise IsLoop(f"arrow {arrow.name} is a loop")
    alpha = a.arrow_elements[arrow.name]
    left = _span_echelon(a.mul({k: Fraction(1)}, alpha) for k in a.corner_indices(arrow.source, arrow.source))
    right = _span_echelon(a.mul(alpha, {k: Fraction(1)}) for k in a.corner_indices(arrow.target, arrow.target))
    return left.rows == right.rows


def check_core_paths_nonzero(a: BoundQuiverAlgebra) -> bool:
    return all(a.path_terms(p.arrows) for p in core_paths(a.quiver))


@dataclass(frozen=True)
class TreeReport:
    tree: bool
    arrows: bool | None
    paths: bool | None

    @property
    def ok(self) -> bool:
        return bool(self.tree and self.arrows and self.paths)

    def failing(self) -> list[str]:
        out = []
        if not self.tree:
            out.append("a")
        if self.arrows is False:
            out.append("b")
        if self.paths is False:
            out.append("c")
        return out


def check_tree_characterization(a: BoundQuiverAlgebra) -> TreeReport:
    if not is_tree_quiver(core(a.quiver)):
        return TreeReport(False, None, None)
    arrows_ok = all(check_arrow_condition(a, x) for x in a.quiver.arrows if not x.is_loop)
    return TreeReport(True, arrows_ok, check_core_paths_nonzero(a))


class QuotientAlgebra(BoundQuiverAlgebra):
    """Quotient of a bound quiver algebra by a two-sided ideal.

    Arrows whose image falls into the square of the radical are dropped from
    the presented quiver; their images stay available through ``path``.
    """

    def __init__(self, parent, quiver, basis, table, arrow_elements, dropped):
        super().__init__(quiver, parent.nilbound, basis, table, arrow_elements)
        self.parent = parent
        self._dropped = dropped

    def _dropped_arrow(self, name):
        if name in self._dropped:
            return self._dropped[name]
        raise KeyError(f"unknown arrow {name!r}")


def _ideal_closure(a: BoundQuiverAlgebra, gens: Iterable[dict]) -> Echelon:
    # column numbering reversed so that the largest basis paths become pivots
    n = a.dim
    flip = lambda v: {n - 1 - k: c for k, c in v.items()}
    ech = Echelon()
    queue = [g for g in gens if g]
    units = [{k: Fraction(1)} for k in range(n)]
    while queue:
        x = queue.pop()
        if not ech.add(flip(x)):
            continue
        for u in units:
            for y in (a.mul(u, x), a.mul(x, u)):
                if y and ech.reduce(flip(y)):
                    queue.append(y)
    return ech


def quotient_by_elements(a: BoundQuiverAlgebra, gens: Iterable) -> BoundQuiverAlgebra:
    """A / (gens).  Vertex idempotents in the ideal delete their vertex."""
    gens = [g.terms if isinstance(g, AlgebraElement) else g for g in gens]
    n = a.dim
    ech = _ideal_closure(a, gens)
    if not ech.rows:
        return a
    pivots = {n - 1 - p for p in ech.rows}
    keep_vertices = [v for v in a.vertices if a.idempotent_index[v] not in pivots]
    if not keep_vertices:
        raise IdealNotInRadical("the ideal contains the identity")
    old = [k for k in range(n) if k not in pivots]
    new_index = {k: i for i, k in enumerate(old)}

    def reduce(x: dict) -> dict:
        r = ech.reduce({n - 1 - k: c for k, c in x.items()})
        return {new_index[n - 1 - k]: c for k, c in r.items()}

    basis = [a.basis[k] for k in old]
    table = {}
    for i, k in enumerate(old):
        row = {}
        for j, l in enumerate(old):
            prod = a.table[k].get(l)
            if prod:
                r = reduce(prod)
                if r:
                    row[j] = r
        table[i] = row
    qv = a.quiver.restrict(keep_vertices)
    tmp = BoundQuiverAlgebra(qv, a.nilbound, basis, table, {})
    idem = set(tmp.idempotent_index.values())
    rad = [{k: Fraction(1)} for k in range(len(basis)) if k not in idem]
    rad2 = Echelon()
    for x in rad:
        for y in rad:
            p = tmp.mul(x, y)
            if p:
                rad2.add(p)
    kept, dropped, arrow_elements = [], {}, {}
    for arr in qv.arrows:
        elt = reduce(a.arrow_elements.get(arr.name) or a.path_terms((arr.name,)))
        if elt and rad2.add(elt):
            kept.append(arr)
            arrow_elements[arr.name] = elt
        else:
            dropped[arr.name] = elt
    for arr in a.quiver.arrows:
        if arr.name not in arrow_elements and arr.name not in dropped:
            dropped[arr.name] = {}  # touches a deleted vertex
    quiver = Quiver(qv.vertices, tuple(kept))
    return QuotientAlgebra(a, quiver, basis, table, arrow_elements, dropped)


def idempotent_quotient(a: BoundQuiverAlgebra, vertices: Iterable[int]) -> BoundQuiverAlgebra:
    """A/(e) for e the sum of the vertex idempotents listed."""
    return quotient_by_elements(a, [a.e(v) for v in vertices])


def center_contains(a: BoundQuiverAlgebra, z: dict) -> bool:
    for k in range(a.dim):
        u = {k: Fraction(1)}
        if a.mul(z, u) != a.mul(u, z):
            return False
    return True


def _corner_span(a: BoundQuiverAlgebra, vectors: list[dict], i: int) -> list[dict]:
    ech = _span_echelon(a.corner_part(v, i, i) for v in vectors)
    return ech.basis()


def _solve_in(a: BoundQuiverAlgebra, candidates: list[dict], f, target: dict):
    """Find a combination x of candidates with f(x) == target (f linear)."""
    ech = Echelon(track=True)
    images = [f(c) for c in candidates]
    for im in images:
        ech.add(im)
    combo = ech.express(target)
    if combo is None:
        return None
    out: dict = {}
    for k, c in combo.items():
        out = _add(out, {i: c * x for i, x in candidates[k].items()})
    return out


def central_element(a: BoundQuiverAlgebra):
    """A central radical element built by propagation along the tree core.

    Returns ``(z, {vertex: l_v})`` or ``None`` when no vertex has a nonzero
    radical corner e_v Rad e_v.
    """
    m = {v: 0 for v in a.vertices}
    powers = [None]
    for level in range(1, a.nilbound):
        basis = a.radical_power_basis(level)
        if not basis:
            break
        powers.append(basis)
        for v in a.vertices:
            if _corner_span(a, basis, v):
                m[v] = level
    top = max(m.values())
    if top == 0:
        return None
    root = next(v for v in a.vertices if m[v] == top)
    l = {root: _corner_span(a, powers[top], root)[0]}
    for parent, child, arrow in tree_walk(a.quiver, root):
        alpha = a.arrow_elements[arrow.name]
        if arrow.source == parent:
            # l_parent * alpha == alpha * l_child
            target = a.mul(l[parent], alpha)
            f = lambda x: a.mul(alpha, x)
        else:
            # l_child * alpha == alpha * l_parent
            target = a.mul(alpha, l[parent])
            f = lambda x: a.mul(x, alpha)
        sol = None
        for pool in (_corner_span(a, powers[top], child),
                     _corner_span(a, powers[1], child)):
            sol = _solve_in(a, pool, f, target)
            if sol is not None:
                break
        if sol is None:
            raise PropagationFailed(f"no l_{child} along arrow {arrow.name}")
        l[child] = sol
    z: dict = {}
    for v in a.vertices:
        z = _add(z, l.get(v, {}))
    if not a.is_radical(z) or not center_contains(a, z):
        raise PropagationFailed("propagated element is not central and radical")
    return AlgebraElement(a, z), {v: AlgebraElement(a, l[v]) for v in a.vertices}


def reduce_to_core(a: BoundQuiverAlgebra, max_steps: int = 64):
    """Iterate quotienting by central elements until none is left.

    Returns the list of algebras visited, starting with ``a``.
    """
    chain = [a]
    for _ in range(max_steps):
        found = central_element(chain[-1])
        if found is None:
            return chain
        chain.append(quotient_by_elements(chain[-1], [found[0]]))
    raise RuntimeError("central element reduction did not terminate")


@dataclass(frozen=True)
class CartanData:
    """Symmetrizable generalized Cartan matrix with symmetrizer and orientation.

    Vertices are numbered 1..n; ``omega`` holds 1-based ordered pairs.
    """

    C: tuple[tuple[int, ...], ...]
    D: tuple[int, ...]
    omega: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "C", tuple(tuple(int(x) for x in r) for r in self.C))
        object.__setattr__(self, "D", tuple(int(x) for x in self.D))
        object.__setattr__(self, "omega", tuple(sorted((int(i), int(j)) for i, j in self.omega)))

    @property
    def n(self) -> int:
        return len(self.C)

    def validate(self):
        C, D, n = self.C, self.D, self.n
        if any(len(r) != n for r in C) or len(D) != n:
            raise InvalidCartan("C must be square and D of matching size")
        for i in range(n):
            if C[i][i] != 2:
                raise InvalidCartan(f"c_{i+1}{i+1} != 2")
            if D[i] < 1:
                raise InvalidCartan("symmetrizer entries must be positive")
            for j in range(n):
                if i == j:
                    continue
                if C[i][j] > 0:
                    raise InvalidCartan(f"c_{i+1}{j+1} > 0")
                if (C[i][j] != 0) != (C[j][i] != 0):
                    raise InvalidCartan(f"c_{i+1}{j+1} and c_{j+1}{i+1} disagree on vanishing")
                if D[i] * C[i][j] != D[j] * C[j][i]:
                    raise InvalidCartan("DC is not symmetric")
        pairs = set(self.omega)
        for i, j in pairs:
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise InvalidOrientation(f"bad orientation pair {(i, j)}")
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                hit = (i, j) in pairs or (j, i) in pairs
                if hit != (C[i - 1][j - 1] < 0):
                    raise InvalidOrientation(f"orientation does not match c_{i}{j}")
        q = Quiver(tuple(range(1, n + 1)), tuple(Arrow(f"x{i}_{j}", i, j) for i, j in pairs))
        if has_higher_cycles(q) or any((j, i) in pairs for i, j in pairs):
            raise InvalidOrientation("orientation contains an oriented cycle")


def gls_build(c: CartanData) -> tuple[Quiver, list[RelationSpec], int]:
    """Presentation of H(C, D, Omega).

    A symmetrizer entry c_i = 1 makes the loop at i vanish; the loop is left
    out of the quiver and every relation term through it is dropped, which
    keeps the presentation admissible.
    """
    c.validate()
    n, C, D = c.n, c.C, c.D
    wide = n >= 10
    arrows, rels = [], []
    for i, j in c.omega:
        g = gcd(C[i - 1][j - 1], C[j - 1][i - 1])
        for k in range(1, g + 1):
            name = f"a{i}_{j}" if wide else f"a{i}{j}"
            if g > 1:
                name += f"_{k}"
            arrows.append(Arrow(name, i, j))
    loops = {i: f"e{i}" for i in range(1, n + 1) if D[i - 1] >= 2}
    arrows.extend(Arrow(loops[i], i, i) for i in sorted(loops))
    for i in sorted(loops):
        rels.append(RelationSpec(((Fraction(1), (loops[i],) * D[i - 1]),)))
    for arr in arrows:
        if arr.is_loop:
            continue
        i, j = arr.source, arr.target
        g = gcd(C[i - 1][j - 1], C[j - 1][i - 1])
        fij = abs(C[i - 1][j - 1]) // g
        fji = abs(C[j - 1][i - 1]) // g
        terms = []
        if i in loops:
            terms.append((Fraction(1), (loops[i],) * fij + (arr.name,)))
        if j in loops:
            terms.append((Fraction(-1), (arr.name,) + (loops[j],) * fji))
        if terms:
            rels.append(RelationSpec(tuple(terms)))
    quiver = Quiver(tuple(range(1, n + 1)), tuple(arrows))
    nilbound = max(D) * (n + 1)
    return quiver, rels, nilbound


def check_condition_S(c: CartanData) -> bool:
    n = c.n
    for i in range(n):
        for j in range(n):
            if c.C[i][j] != c.C[j][i]:
                return False
            if i != j and c.C[i][j] not in (0, -1):
                return False
    return True
