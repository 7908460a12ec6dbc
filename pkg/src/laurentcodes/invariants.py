"""Structural invariants of code Hamiltonians.

Exactness (ker eps = im sigma), the associated ideal and characteristic
dimension, rank over the Laurent ring, the torsion submodule of coker eps,
fractal generators, and the period of zero-dimensional ideals.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Any, Sequence

from .codes import CodeDef, excitation_map
from .field import Field
from .groebner import (GroebnerBasis, LaurentModule, ModuleBasis, buchberger, divide,
                       from_closure, laurent_krull_dimension, laurent_lift, laurent_module,
                       laurent_quotient, laurent_saturate, laurent_syzygies, normalize_column,
                       unit_saturate)
from .laurent import LaurentPoly
from .matrix import PolyMatrix

Column = tuple[LaurentPoly, ...]


class InvariantError(ValueError):
    """Input outside the supported range (e.g. a rank-degenerate map)."""


def _fmt_col(col: Sequence[LaurentPoly]) -> list[str]:
    return [a.format() for a in col]


def _col_scale(col: Sequence[LaurentPoly], f: LaurentPoly) -> Column:
    return tuple(a * f for a in col)


def mat_vec(A: PolyMatrix, v: Sequence[LaurentPoly]) -> Column:
    out = []
    for i in range(A.rows):
        acc = LaurentPoly.zero(A.nvars, A.field)
        for j in range(A.cols):
            if A[i, j] and v[j]:
                acc = acc + A[i, j] * v[j]
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# exactness


@dataclass
class ExactnessReport:
    exact: bool
    witness: Column | None
    kernel_generators: list[Column]
    sigma_in_kernel: bool = True
    sigma_kernel: list[Column] = dc_field(default_factory=list)  # relations among the terms

    def to_dict(self) -> dict[str, Any]:
        return {
            "exact": self.exact,
            "witness": _fmt_col(self.witness) if self.witness is not None else None,
            "kernel_generators": [_fmt_col(c) for c in self.kernel_generators],
            "sigma_kernel": [_fmt_col(c) for c in self.sigma_kernel],
        }


def image_module(A: PolyMatrix) -> LaurentModule:
    return laurent_module(A.columns(), A.rows, A.nvars, A.field)


def kernel(A: PolyMatrix) -> list[Column]:
    return laurent_syzygies(A.columns(), A.rows, A.nvars, A.field)


def exactness_of(A: PolyMatrix, B: PolyMatrix) -> ExactnessReport:
    """Is  . --A--> . --B--> .  exact in the middle (ker B = im A)?"""
    if B.cols != A.rows:
        raise InvariantError("maps are not composable")
    ker = kernel(B)
    comp_zero = (B @ A).is_zero()
    im = image_module(A)
    witness = None
    for k in ker:
        if not im.contains(k):
            witness = k
            break
    return ExactnessReport(witness is None and comp_zero, witness, ker, comp_zero)


def exactness_check(code: CodeDef) -> ExactnessReport:
    rep = exactness_of(code.sigma, excitation_map(code))
    rep.sigma_kernel = kernel(code.sigma)
    return rep


# ---------------------------------------------------------------------------
# associated ideal, rank, characteristic dimension


def _dedupe_units(polys: Sequence[LaurentPoly]) -> list[LaurentPoly]:
    seen = {}
    for f in polys:
        if not f:
            continue
        g = f.normalized()[0].monic()
        seen.setdefault(g, None)
    return list(seen)


def associated_ideal(code: CodeDef) -> list[LaurentPoly]:
    """Nonzero q x q minors of sigma, each cleared of negative exponents, deduplicated."""
    return _dedupe_units(code.sigma.minors(code.q))


def exact_quotient(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """a / b when b divides a in the Laurent ring; raises otherwise."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return a
    an, sa = a.normalized()
    bn, sb = b.normalized()
    G = buchberger(ModuleBasis.ideal([bn], a.nvars, a.field))
    rem, qs = divide((an,), G)
    if any(rem):
        raise InvariantError(f"{b.format()} does not divide {a.format()}")
    # G holds bn scaled to be monic
    lc = G.gens[0][0]
    scale = None
    for e, c in bn.items():
        scale = a.field.mul(lc.coeff(e), a.field.inv(c))
        break
    q = qs[0].scale(scale)
    return q.shift(tuple(x - y for x, y in zip(sb, sa)))


@dataclass
class EliminationResult:
    rank: int
    pivot_rows: list[int]
    pivot_cols: list[int]


def fraction_free_rank(A: PolyMatrix) -> EliminationResult:
    """Rank over the fraction field by Bareiss elimination with exact divisions."""
    M = A.tolist()
    rows, cols = A.rows, A.cols
    order = list(range(rows))
    prev = LaurentPoly.one(A.nvars, A.field)
    r = 0
    prow, pcol = [], []
    for c in range(cols):
        if r == rows:
            break
        piv = None
        best = None
        for i in range(r, rows):
            if M[i][c]:
                size = len(M[i][c])
                if best is None or size < best:
                    piv, best = i, size
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        order[r], order[piv] = order[piv], order[r]
        pv = M[r][c]
        for i in range(r + 1, rows):
            a = M[i][c]
            for j in range(c + 1, cols):
                val = pv * M[i][j]
                if a and M[r][j]:
                    val = val - a * M[r][j]
                M[i][j] = exact_quotient(val, prev) if val else val
            M[i][c] = LaurentPoly.zero(A.nvars, A.field)
        prev = pv
        prow.append(order[r])
        pcol.append(c)
        r += 1
    return EliminationResult(r, prow, pcol)


def rank_over_R(A: PolyMatrix) -> int:
    """Largest k with a nonzero k x k minor."""
    return fraction_free_rank(A).rank


def characteristic_dimension(code: CodeDef) -> int:
    gens = associated_ideal(code)
    return laurent_krull_dimension(gens, code.D, code.field)


def is_degenerate(code: CodeDef) -> bool:
    """True when the associated ideal is proper (so some finite lattice has k > 0)."""
    return characteristic_dimension(code) >= 0


# ---------------------------------------------------------------------------
# torsion and fractal generators


@dataclass
class TorsionReport:
    torsion_free: bool
    generators: list[Column]
    g: LaurentPoly
    exponent: int
    certificates: list[int] = dc_field(default_factory=list)  # n with g^n v in im

    def to_dict(self) -> dict[str, Any]:
        return {
            "torsion_free": self.torsion_free,
            "torsion_generators": [_fmt_col(v) for v in self.generators],
            "saturating_element": self.g.format(),
            "exponent": self.exponent,
        }


def fitting_element(A: PolyMatrix) -> tuple[LaurentPoly, int]:
    """A nonzero r x r minor of A, r = rank; generates part of the first nonzero Fitting ideal."""
    el = fraction_free_rank(A)
    if el.rank == 0:
        raise InvariantError("the map is zero; its cokernel is free and the Fitting ideal trivial")
    g = A.submatrix(sorted(el.pivot_rows), el.pivot_cols).det()
    if not g:
        raise InvariantError("pivot minor vanished (internal error)")
    return g.normalized()[0], el.rank


def cokernel_torsion(A: PolyMatrix) -> TorsionReport:
    """Torsion submodule of coker A, as (im A : g^inf) / im A."""
    g, _ = fitting_element(A)
    M = image_module(A)
    sat, k = laurent_saturate(M, g)
    gens: list[Column] = []
    certs: list[int] = []
    for v in sat.closure.gens:
        if M.contains(v):
            continue
        n = _annihilating_power(M, v, g, k + 1)
        gens.append(tuple(v))
        certs.append(n)
    return TorsionReport(not gens, gens, g, k, certs)


def _annihilating_power(M: LaurentModule, v: Sequence[LaurentPoly], g: LaurentPoly,
                        limit: int) -> int:
    w = tuple(v)
    for n in range(limit + 1):
        if M.contains(w):
            return n
        w = _col_scale(w, g)
    raise InvariantError("torsion certificate failed: no power of g kills the class")


def torsion_submodule(code: CodeDef) -> TorsionReport:
    return cokernel_torsion(excitation_map(code))


@dataclass
class FractalWitness:
    f: LaurentPoly
    v: Column
    p: Column

    def to_dict(self) -> dict[str, Any]:
        return {"f": self.f.format(), "v": _fmt_col(self.v), "p": _fmt_col(self.p)}


def certify_fractal(code: CodeDef, w: FractalWitness, eps: PolyMatrix | None = None,
                    im: LaurentModule | None = None) -> bool:
    """Independent re-check: eps(p) = f v exactly and v not in im eps."""
    eps = eps if eps is not None else excitation_map(code)
    im = im if im is not None else image_module(eps)
    if mat_vec(eps, w.p) != _col_scale(w.v, w.f):
        return False
    return not im.contains(w.v)


def _poly_key(f: LaurentPoly) -> tuple:
    from .laurent import abs_deg
    neg = sum(1 for e in f.terms for a in e if a < 0)
    return (len(f), sum(abs_deg(e) for e in f.terms), neg,
            sorted(f.terms))


def _smallest_representative(v: Column, M: LaurentModule) -> Column:
    """Pick a short representative of the class of v modulo M."""
    nv, _ = normalize_column(v)
    rem, _ = divide(nv, M.closure)
    cands = [tuple(v), tuple(rem)] if any(rem) else [tuple(v)]
    return min(cands, key=lambda c: (sum(len(a) for a in c), [_poly_key(a) for a in c if a]))


def fractal_witness(code: CodeDef, f: LaurentPoly, eps: PolyMatrix | None = None,
                    im: LaurentModule | None = None) -> FractalWitness | None:
    """If f is a zero divisor on coker eps, return (f, v, p) with eps(p) = f v, v not in im eps."""
    eps = eps if eps is not None else excitation_map(code)
    im = im if im is not None else image_module(eps)
    quo = laurent_quotient(im, f)
    cands = [v for v in quo.closure.gens if not im.contains(v)]
    if not cands:
        return None
    cands = [_smallest_representative(v, im) for v in cands]
    cands.sort(key=lambda c: (sum(len(a) for a in c), [_poly_key(a) for a in c if a]))
    v = _centre_column(cands[0])
    target = _col_scale(v, f)
    p = laurent_lift(target, eps.columns())
    if p is None:
        raise InvariantError("lifting f v through eps failed (internal error)")
    w = FractalWitness(f, v, p)
    if not certify_fractal(code, w, eps, im):
        raise InvariantError("fractal witness failed its certificate (internal error)")
    return w


def _centre_column(v: Column) -> Column:
    """Shift a column by a monomial so its support is as centred as possible."""
    nz = [a for a in v if a]
    if not nz:
        return v
    D = nz[0].nvars
    lo = [min(a.min_exps()[i] for a in nz) for i in range(D)]
    hi = [max(a.max_exps()[i] for a in nz) for i in range(D)]
    s = tuple(-((l + h) // 2) for l, h in zip(lo, hi))
    return tuple(a.shift(s) for a in v)


def _binomial_candidates(D: int, field: Field) -> list[LaurentPoly]:
    out = []
    for a in product((-1, 0, 1), repeat=D):
        nz = [x for x in a if x]
        if not nz or nz[0] < 0:
            continue
        out.append(a)
    out.sort(key=lambda a: (sum(map(abs, a)), a))
    one = LaurentPoly.one(D, field)
    return [one - LaurentPoly.monomial(a, 1, field) for a in out]


def annihilator(code_or_eps: CodeDef | PolyMatrix, v: Sequence[LaurentPoly]) -> list[LaurentPoly]:
    """Generators of {r : r v in im eps} (saturated, cleared of negative exponents)."""
    eps = excitation_map(code_or_eps) if isinstance(code_or_eps, CodeDef) else code_or_eps
    cols = [tuple(v)] + [tuple(c) for c in eps.columns()]
    syz = laurent_syzygies(cols, eps.rows, eps.nvars, eps.field)
    gens = [s[0] for s in syz if s[0]]
    if not gens:
        return []
    G = unit_saturate(buchberger(ModuleBasis.ideal([g.normalized()[0] for g in gens],
                                                   eps.nvars, eps.field)))
    return [g[0] for g in G.gens]


def find_fractal_generator(code: CodeDef, torsion: TorsionReport | None = None
                           ) -> FractalWitness | None:
    """A zero divisor f on coker eps with a certified witness, preferring small f.

    Two-term candidates 1 - x^a (|a_i| <= 1) are tried first, since they give
    string operators; otherwise the shortest element of a reduced Gröbner
    basis of some torsion generator's annihilator is used.
    """
    eps = excitation_map(code)
    torsion = torsion if torsion is not None else cokernel_torsion(eps)
    if torsion.torsion_free:
        return None
    im = image_module(eps)
    for f in _binomial_candidates(code.D, code.field):
        w = fractal_witness(code, f, eps, im)
        if w is not None:
            return w
    pool: list[LaurentPoly] = []
    for v in torsion.generators:
        pool.extend(annihilator(eps, v))
    pool = [f.centered() for f in pool if f and not f.is_unit()]
    pool.sort(key=_poly_key)
    for f in pool:
        w = fractal_witness(code, f, eps, im)
        if w is not None:
            return w
    g = torsion.g
    w = fractal_witness(code, g, eps, im)
    if w is None:
        raise InvariantError("torsion found but no zero divisor located (internal error)")
    return w


# ---------------------------------------------------------------------------
# period of a zero-dimensional ideal


class PeriodCapExceeded(InvariantError):
    pass


def _standard_monomials(G: GroebnerBasis) -> list[tuple[int, ...]]:
    lts = [e for _, e in G.leading_terms()]
    n = G.nvars
    out: list[tuple[int, ...]] = []
    frontier = [(0,) * n]
    seen = set(frontier)
    while frontier:
        e = frontier.pop()
        if any(all(a <= b for a, b in zip(lt, e)) for lt in lts):
            continue
        out.append(e)
        for i in range(n):
            e2 = tuple(b + (1 if j == i else 0) for j, b in enumerate(e))
            if e2 not in seen:
                seen.add(e2)
                frontier.append(e2)
        if len(out) > 100_000:
            raise InvariantError("quotient ring is not finite dimensional")
    return sorted(out)


def find_period(J: Sequence[LaurentPoly], nvars: int, field: Field, cap: int = 1_000_000) -> int:
    """Smallest L with x_i^L - 1 in J for all i (J zero-dimensional, Laurent)."""
    gens = [f.normalized()[0] for f in J if f]
    if not gens:
        raise InvariantError("the zero ideal is not zero-dimensional")
    G = unit_saturate(buchberger(ModuleBasis.ideal(gens, nvars, field)))
    if G.is_unit_ideal():
        return 1
    from .groebner import krull_dimension_of
    if krull_dimension_of(G) != 0:
        raise InvariantError("ideal is not zero-dimensional")
    basis = _standard_monomials(G)
    index = {e: k for k, e in enumerate(basis)}
    n = len(basis)
    p = field.p

    def mult_matrix(i: int) -> list[list[int]]:
        cols = []
        for e in basis:
            e2 = tuple(b + (1 if j == i else 0) for j, b in enumerate(e))
            rem, _ = divide((LaurentPoly.monomial(e2, 1, field),), G)
            col = [0] * n
            for t, c in rem[0].items():
                col[index[t]] = c
            cols.append(col)
        return [[cols[j][r] for j in range(n)] for r in range(n)]

    def matmul(A, B):
        return [[sum(A[r][k] * B[k][c] for k in range(n)) % p for c in range(n)] for r in range(n)]

    ident = [[int(r == c) for c in range(n)] for r in range(n)]
    L = 1
    from math import lcm
    for i in range(nvars):
        X = mult_matrix(i)
        P = X
        order = 1
        while P != ident:
            P = matmul(P, X)
            order += 1
            if order > cap:
                raise PeriodCapExceeded(f"period search exceeded cap {cap}")
        L = lcm(L, order)
    return L


__all__ = [
    "InvariantError", "ExactnessReport", "exactness_check", "exactness_of", "kernel",
    "image_module", "associated_ideal", "rank_over_R", "fraction_free_rank", "exact_quotient",
    "characteristic_dimension", "is_degenerate", "TorsionReport", "cokernel_torsion",
    "torsion_submodule", "fitting_element", "FractalWitness", "certify_fractal",
    "fractal_witness", "find_fractal_generator", "annihilator", "find_period",
    "PeriodCapExceeded", "mat_vec",
]
