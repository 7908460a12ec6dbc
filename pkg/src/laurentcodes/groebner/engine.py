"""Gröbner bases for submodules of free modules over F_p[x_1, ..., x_n].

Internally a module element is a dict mapping an order key K to a nonzero
coefficient.  K is a tuple that is linear in the exponent vector, so tuple
comparison *is* the term order and multiplying by a monomial is tuple
addition.  Only prime fields are supported here.
"""

from __future__ import annotations

import heapq
import random
from contextlib import contextmanager
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator, Sequence

from ..field import GF2, Field
from ..laurent import LaurentPoly

Exps = tuple[int, ...]
Key = tuple[int, ...]
Vec = dict  # Key -> int


class GroebnerError(ValueError):
    pass


class GroebnerCapExceeded(GroebnerError):
    """A configured size cap was hit; the computation was abandoned."""


DEFAULT_PAIR_CAP = 10_000
DEFAULT_BASIS_CAP = 5_000
CAPS = {"pairs": DEFAULT_PAIR_CAP, "basis": DEFAULT_BASIS_CAP}


def set_caps(pairs: int | None = None, basis: int | None = None) -> None:
    """Change the process-wide defaults used when buchberger gets no explicit cap."""
    for key, val in (("pairs", pairs), ("basis", basis)):
        if val is not None:
            if val < 1:
                raise ValueError("caps must be positive")
            CAPS[key] = val


@dataclass(frozen=True)
class TermOrder:
    """Monomial order plus the rule for extending it to module terms.

    Basis vector e_0 ranks above e_1 above e_2 ...; within a monomial order
    variable 0 ranks highest.
    """

    monomial: str = "degrevlex"
    module: str = "pot"

    def __post_init__(self) -> None:
        if self.monomial not in ("degrevlex", "lex", "grlex"):
            raise GroebnerError(f"unknown monomial order {self.monomial!r}")
        if self.module not in ("pot", "top"):
            raise GroebnerError(f"unknown module rule {self.module!r}")

    def mono_key(self, e: Exps) -> tuple[int, ...]:
        if self.monomial == "degrevlex":
            return (sum(e),) + tuple(-a for a in reversed(e))
        if self.monomial == "lex":
            return tuple(e)
        return (sum(e),) + tuple(e)

    def mono_decode(self, k: Sequence[int]) -> Exps:
        if self.monomial == "degrevlex":
            return tuple(-a for a in reversed(k[1:]))
        if self.monomial == "lex":
            return tuple(k)
        return tuple(k[1:])

    def key(self, pos: int, e: Exps) -> Key:
        if self.module == "pot":
            return (-pos,) + self.mono_key(e)
        return self.mono_key(e) + (-pos,)

    def decode(self, K: Key) -> tuple[int, Exps]:
        if self.module == "pot":
            return -K[0], self.mono_decode(K[1:])
        return -K[-1], self.mono_decode(K[:-1])

    def shift(self, e: Exps) -> Key:
        """Key increment for multiplication by x^e (position untouched)."""
        if self.module == "pot":
            return (0,) + self.mono_key(e)
        return self.mono_key(e) + (0,)


def _add_keys(a: Key, b: Key) -> Key:
    return tuple(x + y for x, y in zip(a, b))


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub_exps(a: Exps, b: Exps) -> Exps:
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# public value types


@dataclass(frozen=True)
class ModuleBasis:
    """Generators of a submodule of S^n, S = F_p[x_1..x_nvars], as columns."""

    rank: int
    gens: tuple[tuple[LaurentPoly, ...], ...]
    nvars: int
    field: Field = GF2

    def __post_init__(self) -> None:
        if not self.field.is_prime_field:
            raise GroebnerError("the Gröbner engine supports prime fields only")
        for g in self.gens:
            if len(g) != self.rank:
                raise GroebnerError("generator length does not match the ambient rank")
            for a in g:
                if not a.is_polynomial():
                    raise GroebnerError("generators must have nonnegative exponents")

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence[LaurentPoly]], rank: int, nvars: int,
                     field: Field = GF2) -> "ModuleBasis":
        return cls(rank, tuple(tuple(c) for c in cols), nvars, field)

    @classmethod
    def ideal(cls, polys: Iterable[LaurentPoly], nvars: int, field: Field = GF2) -> "ModuleBasis":
        return cls(1, tuple((f,) for f in polys), nvars, field)

    def __len__(self) -> int:
        return len(self.gens)

    def nonzero(self) -> "ModuleBasis":
        return ModuleBasis(self.rank, tuple(g for g in self.gens if any(g)), self.nvars, self.field)


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    basis: ModuleBasis
    order: TermOrder
    certified: bool
    vecs: tuple  # internal dict vectors, aligned with basis.gens
    reps: tuple | None = None  # representation of each element in the input generators
    ninput: int = 0
    stats: dict = dc_field(default_factory=dict)

    @property
    def gens(self) -> tuple[tuple[LaurentPoly, ...], ...]:
        return self.basis.gens

    @property
    def rank(self) -> int:
        return self.basis.rank

    @property
    def nvars(self) -> int:
        return self.basis.nvars

    @property
    def field(self) -> Field:
        return self.basis.field

    def __len__(self) -> int:
        return len(self.basis.gens)

    def is_unit_ideal(self) -> bool:
        return self.rank == 1 and any(
            all(a == 0 for a in self.order.decode(max(v))[1]) for v in self.vecs)

    def is_whole_module(self) -> bool:
        ctx = _Ctx(self.order, self.nvars, self.field.p)
        lead = {ctx.lt(v) for v in self.vecs}
        zero = (0,) * self.nvars
        return all((i, zero) in lead for i in range(self.rank))

    def leading_terms(self) -> list[tuple[int, Exps]]:
        return [self.order.decode(max(v)) for v in self.vecs]


# ---------------------------------------------------------------------------
# conversion and core arithmetic


class _Ctx:
    """Order-bound helpers shared by one computation."""

    def __init__(self, order: TermOrder, nvars: int, p: int) -> None:
        self.order = order
        self.nvars = nvars
        self.p = p
        self._shift: dict[Exps, Key] = {}
        self._dec: dict[Key, tuple[int, Exps]] = {}

    def shift(self, e: Exps) -> Key:
        s = self._shift.get(e)
        if s is None:
            s = self._shift[e] = self.order.shift(e)
        return s

    def decode(self, K: Key) -> tuple[int, Exps]:
        d = self._dec.get(K)
        if d is None:
            d = self._dec[K] = self.order.decode(K)
        return d

    def lt(self, v: Vec) -> tuple[int, Exps]:
        return self.decode(max(v))

    def to_vec(self, col: Sequence[LaurentPoly]) -> Vec:
        out: Vec = {}
        key = self.order.key
        for pos, f in enumerate(col):
            for e, c in f.items():
                out[key(pos, e)] = c
        return out

    def from_vec(self, v: Vec, rank: int, field: Field) -> tuple[LaurentPoly, ...]:
        parts: list[dict] = [{} for _ in range(rank)]
        for K, c in v.items():
            pos, e = self.decode(K)
            parts[pos][e] = c
        return tuple(LaurentPoly._raw(d, self.nvars, field) for d in parts)

    def monic(self, v: Vec) -> tuple[Vec, int]:
        c = v[max(v)]
        if c == 1:
            return v, 1
        inv = pow(c, self.p - 2, self.p)
        p = self.p
        return {K: (a * inv) % p for K, a in v.items()}, inv

    def axpy(self, target: Vec, c: int, e: Exps, src: Vec) -> None:
        """target -= c * x^e * src, in place."""
        p = self.p
        s = self.shift(e)
        if any(s):
            for K, a in src.items():
                K2 = tuple(x + y for x, y in zip(K, s))
                v = (target.get(K2, 0) - c * a) % p
                if v:
                    target[K2] = v
                else:
                    del target[K2]
        else:
            for K, a in src.items():
                v = (target.get(K, 0) - c * a) % p
                if v:
                    target[K] = v
                else:
                    del target[K]


def _rep_axpy(target: dict, c: int, e: Exps, src: dict, p: int) -> None:
    """Same as _Ctx.axpy for representation vectors keyed by (index, exps)."""
    for (j, f), a in src.items():
        K = (j, tuple(x + y for x, y in zip(f, e)))
        v = (target.get(K, 0) - c * a) % p
        if v:
            target[K] = v
        else:
            del target[K]


def _reduce(ctx: _Ctx, v: Vec, vecs: Sequence[Vec], lts: Sequence[tuple[int, Exps]],
            full: bool = True, quot: dict | None = None, rep: dict | None = None,
            reps: Sequence[dict] | None = None, rng: random.Random | None = None) -> Vec:
    """Divide v by vecs (monic, with leading terms lts).

    Returns the remainder.  If ``quot`` is given, quotients are accumulated in
    it as {index: {exps: coeff}} (so v = sum quot_i * g_i + remainder).  If
    ``rep`` and ``reps`` are given, rep is updated alongside v.
    """
    p = ctx.p
    v = dict(v)
    rem: Vec = {}
    by_pos: dict[int, list[int]] = {}
    for i, (pos, _) in enumerate(lts):
        by_pos.setdefault(pos, []).append(i)
    while v:
        K = max(v)
        pos, e = ctx.decode(K)
        cands = by_pos.get(pos, ())
        hit = -1
        if rng is None:
            for i in cands:
                if _divides(lts[i][1], e):
                    hit = i
                    break
        else:
            ok = [i for i in cands if _divides(lts[i][1], e)]
            if ok:
                hit = rng.choice(ok)
        if hit < 0:
            if not full:
                rem.update(v)
                return rem
            rem[K] = v.pop(K)
            continue
        c = v[K]
        m = _sub_exps(e, lts[hit][1])
        ctx.axpy(v, c, m, vecs[hit])
        if quot is not None:
            qd = quot.setdefault(hit, {})
            qd[m] = (qd.get(m, 0) + c) % p
        if rep is not None:
            _rep_axpy(rep, c, m, reps[hit], p)
    return rem


def _spoly(ctx: _Ctx, f: Vec, g: Vec, lf: tuple[int, Exps], lg: tuple[int, Exps]
           ) -> tuple[Vec, Exps, Exps]:
    L = _lcm(lf[1], lg[1])
    mf = _sub_exps(L, lf[1])
    mg = _sub_exps(L, lg[1])
    s: Vec = {}
    ctx.axpy(s, ctx.p - 1, mf, f)  # s = +x^mf f
    ctx.axpy(s, 1, mg, g)  # s -= x^mg g
    return s, mf, mg


# ---------------------------------------------------------------------------
# Buchberger


def buchberger(B: ModuleBasis, order: TermOrder | None = None, track: bool = False,
               pair_cap: int | None = None, basis_cap: int | None = None,
               reduced: bool = True) -> GroebnerBasis:
    """Reduced Gröbner basis of the submodule spanned by B.

    With ``track`` each output element carries its expression in B's
    generators (used for lifting and syzygies of non-Gröbner inputs).
    """
    order = order or TermOrder()
    pair_cap = CAPS["pairs"] if pair_cap is None else pair_cap
    basis_cap = CAPS["basis"] if basis_cap is None else basis_cap
    p = B.field.p
    ctx = _Ctx(order, B.nvars, p)
    G: list[Vec] = []
    L: list[tuple[int, Exps]] = []
    R: list[dict] = []
    pairs: list = []
    alive: list[bool] = []
    stats = {"pairs": 0, "zero_reductions": 0, "product_skips": 0, "chain_skips": 0}
    done: set[tuple[int, int]] = set()
    zero = (0,) * B.nvars

    def add(v: Vec, rep: dict) -> None:
        v, inv = ctx.monic(v)
        if track and inv != 1:
            rep = {k: (a * inv) % p for k, a in rep.items()}
        lt = ctx.lt(v)
        n = len(G)
        for i in range(n):
            if not alive[i] or L[i][0] != lt[0]:
                continue
            lc = _lcm(L[i][1], lt[1])
            if B.rank == 1 and all(a == 0 or b == 0 for a, b in zip(L[i][1], lt[1])):
                stats["product_skips"] += 1
                continue
            heapq.heappush(pairs, (order.key(lt[0], lc), i, n))
        G.append(v)
        L.append(lt)
        R.append(rep)
        alive.append(True)
        if len(G) > basis_cap:
            raise GroebnerCapExceeded(f"Gröbner basis exceeded {basis_cap} elements")

    inputs = []
    for j, g in enumerate(B.gens):
        v = ctx.to_vec(g)
        if v:
            inputs.append((max(v), j, v))
    inputs.sort()
    for _, j, v in inputs:
        rep = {(j, zero): 1} if track else {}
        r_rep = dict(rep) if track else None
        lts = [L[i] for i in range(len(G))]
        v = _reduce(ctx, v, G, lts, full=False, rep=r_rep, reps=R if track else None)
        if v:
            add(v, r_rep if track else {})

    processed = 0
    while pairs:
        K, i, j = heapq.heappop(pairs)
        processed += 1
        if processed > pair_cap:
            raise GroebnerCapExceeded(f"Buchberger exceeded {pair_cap} S-pairs")
        # chain criterion: some k with LT_k | lcm and pairs (i,k), (j,k) already handled
        lc = _lcm(L[i][1], L[j][1])
        skip = False
        for k in range(len(G)):
            if k in (i, j) or L[k][0] != L[i][0] or not _divides(L[k][1], lc):
                continue
            if (_lcm(L[i][1], L[k][1]) != lc and _lcm(L[j][1], L[k][1]) != lc
                    and k < max(i, j) and _pair_done(i, k, done) and _pair_done(j, k, done)):
                skip = True
                break
        done.add((i, j))
        if skip:
            stats["chain_skips"] += 1
            continue
        stats["pairs"] += 1
        s, mi, mj = _spoly(ctx, G[i], G[j], L[i], L[j])
        rep = None
        if track:
            rep = {}
            _rep_axpy(rep, p - 1, mi, R[i], p)
            _rep_axpy(rep, 1, mj, R[j], p)
        s = _reduce(ctx, s, G, L, full=False, rep=rep, reps=R if track else None)
        if not s:
            stats["zero_reductions"] += 1
            continue
        add(s, rep if track else {})

    # minimalize then tail-reduce
    keep = []
    for i in range(len(G)):
        if any(j != i and L[j][0] == L[i][0] and _divides(L[j][1], L[i][1])
               and (L[j][1] != L[i][1] or j < i) for j in range(len(G))):
            continue
        keep.append(i)
    G2 = [G[i] for i in keep]
    L2 = [L[i] for i in keep]
    R2 = [R[i] for i in keep]
    if reduced:
        for n in range(len(G2)):
            others = [k for k in range(len(G2)) if k != n]
            head = max(G2[n])
            tail = {K: c for K, c in G2[n].items() if K != head}
            rep = dict(R2[n]) if track else None
            rem = _reduce(ctx, tail, [G2[k] for k in others], [L2[k] for k in others],
                          full=True, rep=rep, reps=[R2[k] for k in others] if track else None)
            rem[head] = G2[n][head]
            G2[n] = rem
            if track:
                R2[n] = rep
    order_idx = sorted(range(len(G2)), key=lambda k: max(G2[k]), reverse=True)
    G2 = [G2[k] for k in order_idx]
    R2 = [R2[k] for k in order_idx]
    gens = tuple(ctx.from_vec(v, B.rank, B.field) for v in G2)
    stats["basis_size"] = len(G2)
    out = GroebnerBasis(ModuleBasis(B.rank, gens, B.nvars, B.field), order, True,
                        tuple(G2), tuple(R2) if track else None, len(B.gens), stats)
    for log in _RECORDERS:
        log.append(out)
    return out


_RECORDERS: list[list[GroebnerBasis]] = []


@contextmanager
def recording() -> Iterator[list[GroebnerBasis]]:
    """Collect every basis computed inside the block (for audits such as certify)."""
    log: list[GroebnerBasis] = []
    _RECORDERS.append(log)
    try:
        yield log
    finally:
        _RECORDERS.remove(log)


def _pair_done(i: int, k: int, done: set) -> bool:
    return (min(i, k), max(i, k)) in done


def certify(G: GroebnerBasis) -> bool:
    """Re-check Buchberger's criterion: every S-pair reduces to zero."""
    ctx = _Ctx(G.order, G.nvars, G.field.p)
    vecs = list(G.vecs)
    L = [ctx.lt(v) for v in vecs]
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if L[i][0] != L[j][0]:
                continue
            s, _, _ = _spoly(ctx, vecs[i], vecs[j], L[i], L[j])
            if _reduce(ctx, s, vecs, L, full=False):
                return False
    return True


# ---------------------------------------------------------------------------
# division, membership, syzygies


Column = tuple[LaurentPoly, ...]


def groebner(B: ModuleBasis, order: TermOrder | None = None, **kw) -> GroebnerBasis:
    return buchberger(B, order, **kw)


def divide(v: Sequence[LaurentPoly], G: GroebnerBasis, rng: random.Random | None = None
           ) -> tuple[Column, list[LaurentPoly]]:
    """Full division of v by G: v = sum q_i g_i + r.

    Returns (r, [q_i]).  With ``rng`` the reducer is picked at random among
    eligible basis elements (the remainder must not depend on the choice).
    """
    ctx = _Ctx(G.order, G.nvars, G.field.p)
    vec = ctx.to_vec(v)
    quot: dict = {}
    L = [ctx.lt(g) for g in G.vecs]
    rem = _reduce(ctx, vec, G.vecs, L, full=True, quot=quot, rng=rng)
    qs = [LaurentPoly._raw(dict(quot.get(i, {})), G.nvars, G.field) for i in range(len(G.vecs))]
    qs = [LaurentPoly({e: c for e, c in q.items()}, G.nvars, G.field) for q in qs]
    return ctx.from_vec(rem, G.rank, G.field), qs


def reduce_vec(v: Sequence[LaurentPoly], G: GroebnerBasis) -> Column:
    return divide(v, G)[0]


def is_member(v: Sequence[LaurentPoly], N: ModuleBasis | GroebnerBasis) -> bool:
    G = N if isinstance(N, GroebnerBasis) else buchberger(N)
    return not any(divide(v, G)[0])


def contains(big: GroebnerBasis, small: ModuleBasis | GroebnerBasis) -> bool:
    gens = small.gens
    return all(not any(divide(g, big)[0]) for g in gens)


def same_module(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    return contains(a, b) and contains(b, a)


def _rep_to_column(rep: dict, m: int, nvars: int, field: Field) -> Column:
    parts: list[dict] = [{} for _ in range(m)]
    for (j, e), c in rep.items():
        parts[j][e] = c
    return tuple(LaurentPoly._raw(d, nvars, field) for d in parts)


def syzygy_basis(G: GroebnerBasis) -> ModuleBasis:
    """Syzygies of a Gröbner basis from its S-pair reductions (Schreyer).

    For each pair with equal leading position, x^a g_i - x^b g_j reduces to
    zero with quotients q; x^a e_i - x^b e_j - sum q_k e_k is a syzygy, and
    these generate all of them.
    """
    ctx = _Ctx(G.order, G.nvars, G.field.p)
    p = G.field.p
    vecs = list(G.vecs)
    L = [ctx.lt(v) for v in vecs]
    m = len(vecs)
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            if L[i][0] != L[j][0]:
                continue
            s, mi, mj = _spoly(ctx, vecs[i], vecs[j], L[i], L[j])
            quot: dict = {}
            rem = _reduce(ctx, s, vecs, L, full=True, quot=quot)
            if rem:
                raise GroebnerError("input is not a Gröbner basis (S-pair did not reduce)")
            syz: dict = {}
            syz[(i, mi)] = 1
            syz[(j, mj)] = (syz.get((j, mj), 0) - 1) % p
            for k, qd in quot.items():
                for e, c in qd.items():
                    v = (syz.get((k, e), 0) - c) % p
                    if v:
                        syz[(k, e)] = v
                    else:
                        syz.pop((k, e), None)
            syz = {k: c for k, c in syz.items() if c}
            if syz:
                out.append(_rep_to_column(syz, m, G.nvars, G.field))
    return ModuleBasis(m, tuple(out), G.nvars, G.field)


def _col_mul(col: Column, f: LaurentPoly) -> Column:
    return tuple(a * f for a in col)


def _col_add(a: Column, b: Column) -> Column:
    return tuple(x + y for x, y in zip(a, b))


def _apply_rep(reps: Sequence[dict], tau: Column, m: int, nvars: int, field: Field) -> Column:
    """sum_k tau_k * reps_k as a column of length m."""
    acc = [LaurentPoly.zero(nvars, field) for _ in range(m)]
    for k, t in enumerate(tau):
        if not t:
            continue
        col = _rep_to_column(reps[k], m, nvars, field)
        for r in range(m):
            if col[r]:
                acc[r] = acc[r] + t * col[r]
    return tuple(acc)


def syzygies(F: ModuleBasis, minimize: bool = True, **kw) -> ModuleBasis:
    """Generators of the kernel of the matrix whose columns are F's generators."""
    m = len(F.gens)
    nv, fld = F.nvars, F.field
    if m == 0:
        return ModuleBasis(0, (), nv, fld)
    G = buchberger(F, track=True, **kw)
    out: list[Column] = []
    for tau in syzygy_basis(G).gens:
        col = _apply_rep(G.reps, tau, m, nv, fld)
        if any(col):
            out.append(col)
    # e_j - T U_j, where U_j expresses generator j in the Gröbner basis
    for j, g in enumerate(F.gens):
        rem, qs = divide(g, G)
        if any(rem):
            raise GroebnerError("generator failed to reduce against its own Gröbner basis")
        col = list(_apply_rep(G.reps, tuple(qs), m, nv, fld))
        col[j] = col[j] - LaurentPoly.one(nv, fld)
        col = tuple(-a for a in col)
        if any(col):
            out.append(col)
    S = ModuleBasis(m, tuple(out), nv, fld)
    if minimize and out:
        return buchberger(S, **kw).basis
    return S


def module_quotient(N: ModuleBasis | GroebnerBasis, f: LaurentPoly, **kw) -> GroebnerBasis:
    """(N : f) = {v : f v in N} for a nonzero polynomial f."""
    if f.is_zero():
        raise GroebnerError("module quotient by zero")
    if not f.is_polynomial():
        raise GroebnerError("module_quotient works in the polynomial ring; normalize f first")
    B = N.basis if isinstance(N, GroebnerBasis) else N
    n = B.rank
    z = LaurentPoly.zero(B.nvars, B.field)
    cols: list[Column] = []
    for i in range(n):
        col = [z] * n
        col[i] = f
        cols.append(tuple(col))
    cols.extend(B.gens)
    S = syzygies(ModuleBasis(n, tuple(cols), B.nvars, B.field), minimize=False, **kw)
    proj = [tuple(s[:n]) for s in S.gens]
    proj = [c for c in proj if any(c)]
    return buchberger(ModuleBasis(n, tuple(proj) + B.gens, B.nvars, B.field), **kw)


@dataclass(frozen=True, eq=False)
class Saturation:
    basis: GroebnerBasis
    exponent: int  # smallest k with (N : f^k) = (N : f^{k+1})


def saturate(N: ModuleBasis | GroebnerBasis, f: LaurentPoly, **kw) -> Saturation:
    """(N : f^inf) by iterating module quotients until the chain stabilizes."""
    if f.is_zero():
        raise GroebnerError("saturation by zero")
    cur = N if isinstance(N, GroebnerBasis) else buchberger(N, **kw)
    if f.is_monomial() and all(a == 0 for a in next(iter(f.items()))[0]):
        return Saturation(cur, 0)
    k = 0
    while True:
        nxt = module_quotient(cur, f, **kw)
        if contains(cur, nxt):
            return Saturation(cur, k)
        cur = nxt
        k += 1


def krull_dimension_of(G: GroebnerBasis) -> int:
    """dim S/I from the leading-term ideal of a Gröbner basis of an ideal I."""
    if G.rank != 1:
        raise GroebnerError("Krull dimension is computed for ideals")
    n = G.nvars
    if G.is_unit_ideal():
        return -1
    supports = [frozenset(i for i, a in enumerate(e) if a) for _, e in G.leading_terms()]
    best = 0
    for mask in range(1 << n):
        U = frozenset(i for i in range(n) if mask >> i & 1)
        if len(U) <= best:
            continue
        if all(not s <= U for s in supports):
            best = len(U)
    return best


__all__ = [
    "GroebnerError", "GroebnerCapExceeded", "TermOrder", "ModuleBasis", "GroebnerBasis",
    "buchberger", "groebner", "certify", "recording", "divide", "reduce_vec", "is_member",
    "contains",
    "same_module", "syzygy_basis", "syzygies", "module_quotient", "saturate", "Saturation",
    "krull_dimension_of", "set_caps", "CAPS",
]
