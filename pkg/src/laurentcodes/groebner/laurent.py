"""Laurent-ring questions answered through the polynomial engine.

Columns are cleared of negative exponents by a monomial per column, and
wherever the Laurent answer differs from the polynomial one the submodule is
saturated by x_1 ... x_D (one variable at a time).  Monomials are units in
the Laurent ring, so the saturated polynomial module is exactly the
intersection of the Laurent module with S^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..field import Field
from ..laurent import LaurentPoly
from .engine import (GroebnerBasis, ModuleBasis, buchberger, contains, divide, krull_dimension_of,
                     module_quotient, saturate, syzygies)

Column = tuple[LaurentPoly, ...]
Exps = tuple[int, ...]


@dataclass(frozen=True)
class Normalization:
    basis: ModuleBasis
    multipliers: tuple[Exps, ...]  # column j was multiplied by x^multipliers[j]

    def undo(self, j: int, col: Sequence[LaurentPoly]) -> Column:
        inv = tuple(-a for a in self.multipliers[j])
        return tuple(a.shift(inv) for a in col)


def column_shift(col: Sequence[LaurentPoly]) -> Exps:
    nz = [a for a in col if a]
    if not nz:
        return (0,) * col[0].nvars
    D = nz[0].nvars
    lo = [min(a.min_exps()[i] for a in nz) for i in range(D)]
    return tuple(-x for x in lo)


def normalize_column(col: Sequence[LaurentPoly]) -> tuple[Column, Exps]:
    s = column_shift(col)
    return tuple(a.shift(s) for a in col), s


def laurent_normalize(cols: Sequence[Sequence[LaurentPoly]], rank: int | None = None,
                      nvars: int | None = None, field: Field | None = None) -> Normalization:
    """Multiply each column by the smallest monomial clearing negative exponents."""
    out, mults = [], []
    for c in cols:
        nc, s = normalize_column(c)
        out.append(nc)
        mults.append(s)
    if cols:
        rank = len(cols[0])
        probe = cols[0][0]
        nvars, field = probe.nvars, probe.field
    return Normalization(ModuleBasis(rank, tuple(out), nvars, field), tuple(mults))


def _variables(nvars: int, field: Field) -> list[LaurentPoly]:
    return [LaurentPoly.var(i, nvars, field) for i in range(nvars)]


def unit_saturate(G: GroebnerBasis | ModuleBasis) -> GroebnerBasis:
    """Saturate by every variable in turn."""
    cur = G if isinstance(G, GroebnerBasis) else buchberger(G)
    for x in _variables(cur.nvars, cur.field):
        cur = saturate(cur, x).basis
    return cur


@dataclass(frozen=True, eq=False)
class LaurentModule:
    """A submodule of R^n given by Laurent columns, with its saturated Gröbner basis."""

    columns: tuple[Column, ...]
    rank: int
    nvars: int
    field: Field
    closure: GroebnerBasis

    def contains(self, v: Sequence[LaurentPoly]) -> bool:
        if not any(v):
            return True
        nv, _ = normalize_column(v)
        return not any(divide(nv, self.closure)[0])

    def contains_module(self, other: "LaurentModule") -> bool:
        return contains(self.closure, other.closure)

    def equals(self, other: "LaurentModule") -> bool:
        return self.contains_module(other) and other.contains_module(self)

    def is_whole(self) -> bool:
        return self.closure.is_whole_module()


def laurent_module(cols: Sequence[Sequence[LaurentPoly]], rank: int, nvars: int,
                   field: Field) -> LaurentModule:
    cols = tuple(tuple(c) for c in cols if any(c))
    N = laurent_normalize(cols, rank, nvars, field) if cols else Normalization(
        ModuleBasis(rank, (), nvars, field), ())
    closure = unit_saturate(N.basis)
    return LaurentModule(cols, rank, nvars, field, closure)


def from_closure(G: GroebnerBasis) -> LaurentModule:
    return LaurentModule(G.gens, G.rank, G.nvars, G.field, G)


def laurent_syzygies(cols: Sequence[Sequence[LaurentPoly]], rank: int, nvars: int,
                     field: Field) -> list[Column]:
    """Generators of {c in R^m : sum c_j col_j = 0}."""
    m = len(cols)
    if m == 0:
        return []
    N = laurent_normalize(cols, rank, nvars, field)
    S = syzygies(N.basis)
    out = []
    for s in S.gens:
        # col'_j = x^{m_j} col_j, so c_j = x^{m_j} s_j
        out.append(tuple(a.shift(N.multipliers[j]) for j, a in enumerate(s)))
    return out


def laurent_lift(v: Sequence[LaurentPoly], cols: Sequence[Sequence[LaurentPoly]],
                 max_power: int = 64) -> Column | None:
    """Coefficients c with sum c_j col_j = v over the Laurent ring, or None."""
    if not cols:
        return None if any(v) else ()
    probe = next(a for a in v)
    nvars, field = probe.nvars, probe.field
    rank = len(v)
    N = laurent_normalize(cols, rank, nvars, field)
    G = buchberger(N.basis, track=True)
    nv, s = normalize_column(v)
    step = (1,) * nvars
    for k in range(max_power + 1):
        w = tuple(a.shift(tuple(k * b for b in step)) for a in nv)
        rem, qs = divide(w, G)
        if any(rem):
            continue
        m = len(cols)
        coeffs = [LaurentPoly.zero(nvars, field) for _ in range(m)]
        for q, rep in zip(qs, G.reps):
            if not q:
                continue
            for (j, e), c in rep.items():
                coeffs[j] = coeffs[j] + q * LaurentPoly._raw({e: c}, nvars, field)
        # w = x^{ks} x^{s} v = sum coeffs_j x^{m_j} col_j
        back = tuple(-(k + 0) * b - sb for b, sb in zip(step, s))
        return tuple(c.shift(N.multipliers[j]).shift(back) for j, c in enumerate(coeffs))
    return None


def laurent_quotient(M: LaurentModule, f: LaurentPoly) -> LaurentModule:
    """(M : f) over the Laurent ring."""
    fn, _ = f.normalized()
    return from_closure(module_quotient(M.closure, fn))


def laurent_saturate(M: LaurentModule, f: LaurentPoly) -> tuple[LaurentModule, int]:
    fn, _ = f.normalized()
    sat = saturate(M.closure, fn)
    return from_closure(sat.basis), sat.exponent


def laurent_krull_dimension(polys: Sequence[LaurentPoly], nvars: int, field: Field) -> int:
    """dim R/I for an ideal of the Laurent ring; -1 for the unit ideal."""
    gens = [f.normalized()[0] for f in polys if f]
    if not gens:
        return nvars
    G = unit_saturate(buchberger(ModuleBasis.ideal(gens, nvars, field)))
    return krull_dimension_of(G)


def laurent_ideal(polys: Sequence[LaurentPoly], nvars: int, field: Field) -> LaurentModule:
    return laurent_module([(f,) for f in polys if f], 1, nvars, field)


__all__ = [
    "Normalization", "laurent_normalize", "normalize_column", "column_shift", "unit_saturate",
    "LaurentModule", "laurent_module", "from_closure", "laurent_syzygies", "laurent_lift",
    "laurent_quotient", "laurent_saturate", "laurent_krull_dimension", "laurent_ideal",
]
