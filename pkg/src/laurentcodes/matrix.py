"""Matrices with Laurent polynomial entries."""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable, Sequence

from .field import GF2, Field
from .laurent import LaurentPoly, parse_poly


class PolyMatrix:
    __slots__ = ("rows", "cols", "nvars", "field", "_e")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]], nvars: int | None = None,
                 field: Field | None = None, cols: int | None = None) -> None:
        entries = [list(r) for r in entries]
        self.rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        self.cols = cols
        for r in entries:
            if len(r) != cols:
                raise ValueError("ragged matrix")
        if nvars is None or field is None:
            probe = next((x for r in entries for x in r), None)
            if probe is None:
                raise ValueError("empty matrix needs explicit nvars and field")
            nvars = probe.nvars if nvars is None else nvars
            field = probe.field if field is None else field
        for r in entries:
            for x in r:
                if x.nvars != nvars or (x.field is not field and x.field != field):
                    raise ValueError("matrix entries live in different rings")
        self.nvars = nvars
        self.field = field
        self._e = entries

    # constructors

    @classmethod
    def zeros(cls, rows: int, cols: int, nvars: int = 1, field: Field = GF2) -> "PolyMatrix":
        z = LaurentPoly.zero(nvars, field)
        return cls([[z] * cols for _ in range(rows)], nvars, field, cols)

    @classmethod
    def identity(cls, n: int, nvars: int = 1, field: Field = GF2) -> "PolyMatrix":
        z = LaurentPoly.zero(nvars, field)
        o = LaurentPoly.one(nvars, field)
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], nvars, field, n)

    @classmethod
    def lam(cls, q: int, nvars: int = 1, field: Field = GF2) -> "PolyMatrix":
        """The symplectic form [[0, I], [-I, 0]] of size 2q."""
        z = LaurentPoly.zero(nvars, field)
        o = LaurentPoly.one(nvars, field)
        m = -o
        ent = [[z] * (2 * q) for _ in range(2 * q)]
        for i in range(q):
            ent[i][i + q] = o
            ent[i + q][i] = m
        return cls(ent, nvars, field, 2 * q)

    @classmethod
    def parse(cls, rows: Sequence[Sequence[str]], nvars: int, field: Field = GF2) -> "PolyMatrix":
        return cls([[parse_poly(s, nvars, field) for s in r] for r in rows], nvars, field,
                   len(rows[0]) if rows else 0)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[LaurentPoly]], nrows: int, nvars: int,
                     field: Field) -> "PolyMatrix":
        ent = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        return cls(ent, nvars, field, len(columns))

    # access

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> list[LaurentPoly]:
        return list(self._e[i])

    def column(self, j: int) -> list[LaurentPoly]:
        return [r[j] for r in self._e]

    def columns(self) -> list[list[LaurentPoly]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[LaurentPoly]]:
        return [list(r) for r in self._e]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def _zero(self) -> LaurentPoly:
        return LaurentPoly.zero(self.nvars, self.field)

    # algebra

    def map(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "PolyMatrix":
        return PolyMatrix([[fn(x) for x in r] for r in self._e], self.nvars, self.field, self.cols)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[self._e[i][j] for i in range(self.rows)] for j in range(self.cols)],
                          self.nvars, self.field, self.rows)

    def antipode(self) -> "PolyMatrix":
        return self.map(LaurentPoly.antipode)

    def dagger(self) -> "PolyMatrix":
        return PolyMatrix([[self._e[i][j].antipode() for i in range(self.rows)]
                           for j in range(self.cols)], self.nvars, self.field, self.rows)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = self._zero()
        # sparse rows: elementary moves and lambda are mostly zero
        other_nz = [[(j, b) for j, b in enumerate(r) if b] for r in other._e]
        out = []
        for ri in self._e:
            row = [z] * other.cols
            for k, a in enumerate(ri):
                if a:
                    for j, b in other_nz[k]:
                        row[j] = row[j] + a * b
            out.append(row)
        return PolyMatrix(out, self.nvars, self.field, other.cols)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._e, other._e)],
                          self.nvars, self.field, self.cols)

    def __neg__(self) -> "PolyMatrix":
        return self.map(lambda a: -a)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def scale(self, c: LaurentPoly) -> "PolyMatrix":
        return self.map(lambda a: a * c)

    def is_zero(self) -> bool:
        return all(not x for r in self._e for x in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.shape == other.shape and self.nvars == other.nvars
                and self.field == other.field and self._e == other._e)

    def __hash__(self) -> int:
        return hash((self.shape, tuple(tuple(r) for r in self._e)))

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "PolyMatrix":
        rows, cols = list(rows), list(cols)
        return PolyMatrix([[self._e[i][j] for j in cols] for i in rows], self.nvars, self.field,
                          len(cols))

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix([r1 + r2 for r1, r2 in zip(self._e, other._e)], self.nvars, self.field,
                          self.cols + other.cols)

    def vstack(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(self._e + other._e, self.nvars, self.field, self.cols)

    @staticmethod
    def block_diag(a: "PolyMatrix", b: "PolyMatrix") -> "PolyMatrix":
        za = PolyMatrix.zeros(a.rows, b.cols, a.nvars, a.field)
        zb = PolyMatrix.zeros(b.rows, a.cols, a.nvars, a.field)
        return a.hstack(za).vstack(zb.hstack(b))

    # determinants

    def minors(self, k: int) -> list[LaurentPoly]:
        """All k x k minors, row subsets outer and column subsets inner (lex order)."""
        if k > min(self.rows, self.cols):
            raise ValueError(f"k={k} exceeds matrix shape {self.shape}")
        if k == 0:
            return [LaurentPoly.one(self.nvars, self.field)]
        det = _MinorCache(self)
        return [det(rs, cs) for rs in combinations(range(self.rows), k)
                for cs in combinations(range(self.cols), k)]

    def det(self) -> LaurentPoly:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _MinorCache(self)(tuple(range(self.rows)), tuple(range(self.cols)))

    def format(self) -> list[list[str]]:
        return [[x.format() for x in r] for r in self._e]

    def __repr__(self) -> str:
        body = "; ".join(", ".join(r) for r in self.format())
        return f"PolyMatrix([{body}])"


class _MinorCache:
    """Cofactor expansion along the first row, memoized on (rows, cols)."""

    def __init__(self, m: PolyMatrix) -> None:
        self.m = m
        self.memo: dict[tuple[tuple[int, ...], tuple[int, ...]], LaurentPoly] = {}
        self.zero = m._zero()
        # rows with no nonzero entry in a column set make the minor vanish
        self.support = [frozenset(j for j in range(m.cols) if m[i, j]) for i in range(m.rows)]

    def __call__(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> LaurentPoly:
        key = (rows, cols)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        cset = set(cols)
        if any(not (self.support[r] & cset) for r in rows):
            val = self.zero
        elif len(rows) == 1:
            val = self.m[rows[0], cols[0]]
        else:
            r0, rest = rows[0], rows[1:]
            acc = self.zero
            for pos, c in enumerate(cols):
                a = self.m[r0, c]
                if not a:
                    continue
                sub = self(rest, cols[:pos] + cols[pos + 1:])
                if not sub:
                    continue
                term = a * sub
                acc = acc - term if pos % 2 else acc + term
            val = acc
        self.memo[key] = val
        return val
