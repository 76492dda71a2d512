"""Exact linear algebra over the rationals.

The public surface (:class:`ExactMatrix`, :func:`rref`, :func:`kernel_basis`,
:func:`subspace_equal`, :func:`solve`) is dense and small.  The engine modules
mostly go through :class:`Echelon`, an incrementally maintained reduced row
echelon basis of sparse vectors (``dict`` column -> coefficient), because the
linear systems arising from path algebras are extremely sparse.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch

QQ = Fraction


def to_q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class ExactMatrix:
    """Dense rational matrix, entries always canonical :class:`Fraction`."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        self.entries = [[to_q(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        for row in self.entries:
            if len(row) != cols:
                raise DimensionMismatch("ragged matrix")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, idx):
        r, c = idx
        return self.entries[r][c]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"ExactMatrix([{body}])"

    def apply(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        v = [to_q(x) for x in v]
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries]

    def sparse_rows(self) -> list[dict[int, Fraction]]:
        return [{c: x for c, x in enumerate(row) if x} for row in self.entries]


class Echelon:
    """Reduced row echelon basis of a growing span of sparse vectors.

    Columns are integers; the pivot of a row is its smallest column, so the
    caller controls pivot preference by numbering columns.  With ``track``
    each basis row remembers which combination of inserted vectors it is.
    """

    def __init__(self, track: bool = False):
        self.rows: dict[int, dict[int, Fraction]] = {}  # pivot -> row, row[pivot] == 1
        self.track = track
        self.combos: dict[int, dict[int, Fraction]] = {}
        self._count = 0

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduce(self, vec: dict, combo: dict | None = None):
        """Residual of ``vec`` after eliminating every pivot column."""
        v = dict(vec)
        hits = [p for p in v if p in self.rows]
        for p in hits:
            c = v.get(p)
            if not c:
                continue
            for k, x in self.rows[p].items():
                nv = v.get(k, 0) - c * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
            if combo is not None:
                for k, x in self.combos[p].items():
                    nv = combo.get(k, 0) - c * x
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)
        return v

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def add(self, vec: dict) -> bool:
        """Insert a vector; returns True iff it enlarged the span."""
        idx = self._count
        self._count += 1
        combo = {idx: Fraction(1)} if self.track else None
        v = self.reduce(vec, combo)
        if not v:
            return False
        p = min(v)
        inv = Fraction(1) / v[p]
        v = {k: x * inv for k, x in v.items()}
        if combo is not None:
            combo = {k: x * inv for k, x in combo.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for k, x in v.items():
                    nv = row.get(k, 0) - c * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                if combo is not None:
                    cq = self.combos[q]
                    for k, x in combo.items():
                        nv = cq.get(k, 0) - c * x
                        if nv:
                            cq[k] = nv
                        else:
                            cq.pop(k, None)
        self.rows[p] = v
        if combo is not None:
            self.combos[p] = combo
        return True

    def express(self, vec: dict):
        """Coefficients over the inserted vectors reproducing ``vec``, or None."""
        if not self.track:
            raise ValueError("express() needs a tracking Echelon")
        combo: dict[int, Fraction] = {}
        v = dict(vec)
        for p in [p for p in v if p in self.rows]:
            c = v.get(p)
            if not c:
                continue
            for k, x in self.rows[p].items():
                nv = v.get(k, 0) - c * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
            for k, x in self.combos[p].items():
                combo[k] = combo.get(k, 0) + c * x
        if v:
            return None
        return {k: x for k, x in combo.items() if x}

    def basis(self) -> list[dict[int, Fraction]]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]


def sparse_kernel(rows: Iterable[dict], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of ``{x : row . x = 0 for all rows}`` as sparse vectors."""
    ech = Echelon()
    for r in rows:
        if r:
            ech.add(r)
    out = []
    pivots = ech.rows
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: Fraction(1)}
        for p, row in pivots.items():
            c = row.get(f)
            if c:
                v[p] = -c
        out.append(v)
    return out


def sparse_rank(vectors: Iterable[dict]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def _dense(v: dict, n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for k, x in v.items():
        out[k] = x
    return out


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    ech = Echelon()
    for r in m.sparse_rows():
        ech.add(r)
    pivots = ech.pivots
    rows = [_dense(ech.rows[p], m.cols) for p in pivots]
    rows += [[Fraction(0)] * m.cols for _ in range(m.rows - len(rows))]
    return ExactMatrix(rows, m.cols), pivots


def rank(m: ExactMatrix) -> int:
    return sparse_rank(m.sparse_rows())


def kernel_basis(m: ExactMatrix) -> list[list[Fraction]]:
    return [_dense(v, m.cols) for v in sparse_kernel(m.sparse_rows(), m.cols)]


def subspace_equal(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """Compare spans through their reduced echelon forms."""
    dims = {len(v) for v in a} | {len(v) for v in b}
    if len(dims) > 1:
        raise DimensionMismatch("vectors of different ambient dimension")
    ea, eb = Echelon(), Echelon()
    for v in a:
        ea.add({i: to_q(x) for i, x in enumerate(v) if x})
    for v in b:
        eb.add({i: to_q(x) for i, x in enumerate(v) if x})
    return ea.rows == eb.rows


def solve(m: ExactMatrix, rhs: Sequence) -> list[Fraction] | None:
    """A solution of ``m x = rhs`` with every free variable set to zero."""
    if len(rhs) != m.rows:
        raise DimensionMismatch(f"rhs of length {len(rhs)} for {m.rows} rows")
    n = m.cols
    ech = Echelon()
    for row, b in zip(m.sparse_rows(), rhs):
        r = dict(row)
        b = to_q(b)
        if b:
            r[n] = b
        ech.add(r)
    if n in ech.rows:
        return None
    x = [Fraction(0)] * n
    for p, row in ech.rows.items():
        x[p] = row.get(n, Fraction(0))
    return x
