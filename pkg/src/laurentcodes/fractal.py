"""The fractal local process: recipes, energy traces and the barrier bound.

Everything here works over F_2.  A recipe step is a single-qubit Pauli
increment (component c in 1..2q, monomial exponent); the operator built so
far is the running F_2 sum of the steps, and the energy at an instant is the
number of terms of eps applied to it.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field as dc_field
from typing import Any, Iterator, Sequence

from .codes import CodeDef, excitation_map
from .laurent import LaurentPoly
from .matrix import PolyMatrix

Exps = tuple[int, ...]
Step = tuple[int, Exps]


class ProcessError(ValueError):
    pass


def _add(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def _require_gf2(F) -> None:
    if F.p != 2 or not F.is_prime_field:
        raise ProcessError("the fractal process is implemented over F_2 only")


def _term_order(e: Exps) -> tuple:
    return (sum(abs(a) for a in e), e)


@dataclass
class Recipe:
    """Lazily enumerated steps of s_r (with the leading empty step of s_0 implicit)."""

    f: LaurentPoly
    p: tuple[LaurentPoly, ...]
    r: int
    v: tuple[LaurentPoly, ...] | None = None
    base: list[Step] = dc_field(default_factory=list)
    f_terms: list[Exps] = dc_field(default_factory=list)

    @property
    def l(self) -> int:
        return len(self.f_terms)

    def __len__(self) -> int:
        return len(self.base) * self.l ** self.r

    def steps(self) -> Iterator[Step]:
        yield from self._steps(self.r, (0,) * self.f.nvars)

    def _steps(self, r: int, shift: Exps) -> Iterator[Step]:
        if r == 0:
            for c, e in self.base:
                yield c, _add(e, shift)
            return
        scale = 1 << (r - 1)
        for ft in self.f_terms:
            sub = _add(shift, tuple(scale * a for a in ft))
            yield from self._steps(r - 1, sub)

    def accumulated(self) -> tuple[LaurentPoly, ...]:
        """The operator built by the whole recipe, by replaying the steps."""
        D, F = self.f.nvars, self.f.field
        comps: list[dict[Exps, int]] = [dict() for _ in self.p]
        for c, e in self.steps():
            d = comps[c - 1]
            if e in d:
                del d[e]
            else:
                d[e] = 1
        return tuple(LaurentPoly(d, D, F) for d in comps)

    def metadata(self) -> dict[str, Any]:
        return {"f": self.f.format(), "p": [a.format() for a in self.p], "r": self.r,
                "v": [a.format() for a in self.v] if self.v is not None else None,
                "steps": len(self)}


def build_recipe(f: LaurentPoly, p: Sequence[LaurentPoly], r: int,
                 code: CodeDef | None = None) -> Recipe:
    """s_0 lists the monomials of p; s_{i+1} concatenates f_j^{2^i} . s_i over the terms of f.

    With a code, eps(p) must be divisible by f; the quotient is stored as v.
    """
    _require_gf2(f.field)
    if r < 0:
        raise ProcessError("r must be >= 0")
    if len(f) < 2:
        raise ProcessError("f needs at least two terms")
    p = tuple(p)
    v = None
    if code is not None:
        v = _divide_syndrome(code, f, p)
    base = []
    for c, comp in enumerate(p, start=1):
        for e in sorted(comp.terms, key=_term_order):
            base.append((c, e))
    fts = sorted(f.terms, key=_term_order)
    return Recipe(f, p, r, v, base, fts)


def _apply_eps(eps: PolyMatrix, p: Sequence[LaurentPoly]) -> tuple[LaurentPoly, ...]:
    out = []
    for i in range(eps.rows):
        acc = LaurentPoly.zero(eps.nvars, eps.field)
        for j in range(eps.cols):
            if eps[i, j] and p[j]:
                acc = acc + eps[i, j] * p[j]
        out.append(acc)
    return tuple(out)


def _divide_syndrome(code: CodeDef, f: LaurentPoly, p: Sequence[LaurentPoly]
                     ) -> tuple[LaurentPoly, ...]:
    from .invariants import exact_quotient
    eps = excitation_map(code)
    if len(p) != eps.cols:
        raise ProcessError(f"p has {len(p)} components, expected {eps.cols}")
    target = _apply_eps(eps, p)
    try:
        return tuple(exact_quotient(a, f) if a else a for a in target)
    except ValueError:
        raise ProcessError(f"eps(p) is not divisible by {f.format()}") from None


# ---------------------------------------------------------------------------
# energy


def _eps_columns(code: CodeDef) -> list[list[tuple[int, Exps]]]:
    """For each Pauli component c, the (row, exponent) terms of eps(e_c)."""
    eps = excitation_map(code)
    _require_gf2(eps.field)
    cols = []
    for c in range(eps.cols):
        terms = []
        for i in range(eps.rows):
            for e in eps[i, c].terms:
                terms.append((i, e))
        cols.append(terms)
    return cols


def energy_of(syndrome: Sequence[LaurentPoly]) -> int:
    return sum(len(a) for a in syndrome)


def simulate_energy(recipe: Recipe, code: CodeDef, sample_every: int = 0
                    ) -> list[int]:
    """Energy after each prefix of the recipe, starting with 0 for the empty operator.

    With sample_every > 0, every that-many steps the syndrome is recomputed
    from the accumulated operator and compared with the incremental one.
    """
    cols = _eps_columns(code)
    eps = excitation_map(code) if sample_every else None
    syn: set[tuple[int, Exps]] = set()
    op: list[dict[Exps, int]] = [dict() for _ in range(len(cols))]
    trace = [0]
    D, F = recipe.f.nvars, recipe.f.field
    for n, (c, e) in enumerate(recipe.steps(), start=1):
        for i, te in cols[c - 1]:
            key = (i, _add(te, e))
            if key in syn:
                syn.remove(key)
            else:
                syn.add(key)
        trace.append(len(syn))
        if sample_every:
            d = op[c - 1]
            if e in d:
                del d[e]
            else:
                d[e] = 1
            if n % sample_every == 0:
                o = tuple(LaurentPoly(x, D, F) for x in op)
                full = _apply_eps(eps, o)
                if energy_of(full) != len(syn):
                    raise ProcessError(f"incremental energy differs from recomputation at step {n}")
    return trace


def trace_csv(trace: Sequence[int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["step", "energy"])
    for i, E in enumerate(trace):
        w.writerow([i, E])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# separation of the final copies


def size_of(v: Sequence[LaurentPoly]) -> int:
    """Max over axes and rows of (max exponent - min exponent)."""
    nz = [a for a in v if a]
    if not nz:
        return 0
    D = nz[0].nvars
    return max(max(a.max_exps()[i] for a in nz) - min(a.min_exps()[i] for a in nz)
               for i in range(D))


def _support(v: Sequence[LaurentPoly]) -> set[tuple[int, Exps]]:
    return {(i, e) for i, a in enumerate(v) for e in a.terms}


def separation(f: LaurentPoly, v: Sequence[LaurentPoly], r: int) -> int | None:
    """Min Chebyshev distance between the l translated copies of v in f^{2^r} v.

    None when f^{2^r} v is not exactly the disjoint union of the copies.
    """
    s = 1 << r
    supp = _support(v)
    copies = []
    for ft in sorted(f.terms, key=_term_order):
        sh = tuple(s * a for a in ft)
        copies.append({(i, _add(e, sh)) for i, e in supp})
    union: set = set()
    for cp in copies:
        if union & cp:
            return None
        union |= cp
    fv = tuple(f.frobenius(r) * a for a in v)
    if _support(fv) != union:
        return None
    if len(copies) < 2:
        return None
    best = None
    for a in range(len(copies)):
        for b in range(a + 1, len(copies)):
            for _, x in copies[a]:
                for _, y in copies[b]:
                    d = max(abs(p - q) for p, q in zip(x, y))
                    if best is None or d < best:
                        best = d
    return best


# ---------------------------------------------------------------------------
# barrier verification


@dataclass
class BarrierRow:
    r: int
    max_energy: int
    final_energy: int
    separation: int | None
    bound: int
    ok: bool
    violation_step: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"r": self.r, "max_energy": self.max_energy, "final_energy": self.final_energy,
                "separation": self.separation, "bound": self.bound, "ok": self.ok,
                "violation_step": self.violation_step}


@dataclass
class BarrierReport:
    e: int
    l: int
    c: int
    rows: list[BarrierRow]
    accumulated_ok: bool

    @property
    def ok(self) -> bool:
        return self.accumulated_ok and all(r.ok for r in self.rows)

    def to_dict(self) -> dict[str, Any]:
        return {"e": self.e, "l": self.l, "c": self.c, "ok": self.ok,
                "accumulated_ok": self.accumulated_ok, "rows": [r.to_dict() for r in self.rows]}


def verify_barrier(code: CodeDef, f: LaurentPoly, p: Sequence[LaurentPoly],
                   v: Sequence[LaurentPoly] | None = None, r_max: int = 4) -> BarrierReport:
    """Check max energy along s_r against c (r+1) for r = 0..r_max.

    e is the largest energy of f^{2^r} v over the tested r, l the number of
    terms of f, and c = max(energy peak of s_0, e l); the induction
    Delta(r+1) <= Delta(r) + e l then gives Delta(r) <= c (r+1).
    """
    p = tuple(p)
    rec0 = build_recipe(f, p, 0, code)
    if v is not None and tuple(v) != rec0.v:
        raise ProcessError("given v does not satisfy eps(p) = f v")
    v = rec0.v
    l = len(f)
    es = [energy_of([f.frobenius(r) * a for a in v]) for r in range(r_max + 1)]
    e = max(es)
    delta0 = max(simulate_energy(rec0, code))
    c = max(delta0, e * l)
    rows = []
    acc_ok = True
    for r in range(r_max + 1):
        rec = build_recipe(f, p, r)
        tr = simulate_energy(rec, code)
        bound = c * (r + 1)
        peak = max(tr)
        viol = next((i for i, E in enumerate(tr) if E > bound), None)
        rows.append(BarrierRow(r, peak, tr[-1], separation(f, v, r), bound, viol is None, viol))
        expect = tuple((f ** ((1 << r) - 1)) * a for a in p)
        if rec.accumulated() != expect:
            acc_ok = False
    return BarrierReport(e, l, c, rows, acc_ok)


# ---------------------------------------------------------------------------
# the infinite-support charge-creation operator, truncated to a box


def lex_least_term(f: LaurentPoly) -> Exps:
    return min(f.terms)


def positivizing_map(f: LaurentPoly) -> list[list[int]]:
    """A lower unitriangular integer matrix Z with Z e >= 0 for every exponent e of f.

    f must have 1 as its lexicographically least term.  Built as a product of
    single-column shears, handling terms by their first nonzero coordinate from
    the last axis to the first.
    """
    D = f.nvars
    if lex_least_term(f) != (0,) * D:
        raise ProcessError("f must have 1 as its lex-least term")
    Z = [[int(i == j) for j in range(D)] for i in range(D)]

    def apply(Z, e):
        return tuple(sum(Z[i][j] * e[j] for j in range(D)) for i in range(D))

    for i in reversed(range(D - 1)):
        m = 0
        for e in f.terms:
            e2 = apply(Z, e)
            first = next((k for k, a in enumerate(e2) if a), None)
            if first != i:
                continue
            for j in range(i + 1, D):
                if e2[j] < 0:
                    m = max(m, -(-(-e2[j]) // e2[i]))
        if m:
            shear = [[int(a == b) for b in range(D)] for a in range(D)]
            for j in range(i + 1, D):
                shear[j][i] = m
            Z = [[sum(shear[a][k] * Z[k][b] for k in range(D)) for b in range(D)]
                 for a in range(D)]
    for e in f.terms:
        if any(a < 0 for a in apply(Z, e)):
            raise ProcessError("positivizing map construction failed")
    return Z


@dataclass
class TruncatedOperator:
    n: int
    unit_shift: Exps  # f was divided by x^unit_shift before expanding
    components: tuple[LaurentPoly, ...]


def truncated_charge_operator(f: LaurentPoly, p: Sequence[LaurentPoly],
                              lo: Sequence[int], hi: Sequence[int]) -> TruncatedOperator:
    """f^{2^n - 1} p restricted to the box lo <= a <= hi, with n large enough
    that every later partial product agrees on the box.

    f is first divided by its lex-least monomial so that the products converge.
    """
    _require_gf2(f.field)
    D = f.nvars
    s = lex_least_term(f)
    g = f.shift(tuple(-a for a in s))
    Z = positivizing_map(g)
    w = [sum(Z[i][j] for i in range(D)) for j in range(D)]  # total degree after Z

    def deg(e):
        return sum(wj * a for wj, a in zip(w, e))

    box_max = sum(wj * (h if wj >= 0 else l) for wj, l, h in zip(w, lo, hi))
    terms = [e for a in p for e in a.terms]
    if not terms:
        return TruncatedOperator(0, s, tuple(p))
    pmin = min(deg(e) for e in terms)
    n = 0
    while (1 << n) + pmin <= box_max:
        n += 1
    full = g ** ((1 << n) - 1)
    out = []
    for a in p:
        prod = full * a
        kept = {e: c for e, c in prod.items()
                if all(l <= x <= h for x, l, h in zip(e, lo, hi))}
        out.append(LaurentPoly(kept, D, f.field))
    return TruncatedOperator(n, s, tuple(out))


def pgm_bitmap(a: LaurentPoly, lo: Sequence[int], hi: Sequence[int]) -> bytes:
    """Plain PGM (P2) of the support of a 2D polynomial; y grows upward."""
    if a.nvars != 2:
        raise ProcessError("bitmaps are for D = 2")
    (x0, y0), (x1, y1) = lo, hi
    wd, ht = x1 - x0 + 1, y1 - y0 + 1
    lines = ["P2", f"{wd} {ht}", "1"]
    for y in range(y1, y0 - 1, -1):
        lines.append(" ".join("1" if a.coeff((x, y)) else "0" for x in range(x0, x1 + 1)))
    return ("\n".join(lines) + "\n").encode()


__all__ = [
    "ProcessError", "Recipe", "build_recipe", "simulate_energy", "trace_csv", "energy_of",
    "size_of", "separation", "BarrierRow", "BarrierReport", "verify_barrier",
    "positivizing_map", "truncated_charge_operator", "TruncatedOperator", "pgm_bitmap",
    "lex_least_term",
]
