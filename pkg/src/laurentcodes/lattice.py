"""Codes on periodic lattices as matrices over F_p, and the parameter k.

Flat indexing: site a = (a_1, ..., a_D) with 0 <= a_i < L_i has index
sum a_i * stride_i, axis 0 varying fastest.  Row r of the Pauli module at
site s is r * S + s; generator j translated to site u is column j * S + u.
At p = 2 vectors are Python ints used as bitsets.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .codes import CodeDef, excitation_map
from .field import GF4, Field
from .laurent import LaurentPoly
from .matrix import PolyMatrix
from .univariate import poly_gcd, upoly_degree

DEFAULT_CELL_LIMIT = 200_000  # rows 2q*S of sigma_L
BRUTE_FORCE_BOUND = 20


class LatticeError(ValueError):
    pass


class LatticeLimitExceeded(LatticeError):
    """Instance larger than the configured limit."""


class CrossCheckError(AssertionError):
    """The independent k formulas disagree (a construction bug, never expected)."""


def _strides(sizes: Sequence[int]) -> list[int]:
    out, acc = [], 1
    for L in sizes:
        out.append(acc)
        acc *= L
    return out


def site_count(sizes: Sequence[int]) -> int:
    return math.prod(sizes)


def _sites(sizes: Sequence[int]) -> Iterable[tuple[int, ...]]:
    S = site_count(sizes)
    for s in range(S):
        a = []
        for L in sizes:
            a.append(s % L)
            s //= L
        yield tuple(a)


@dataclass
class LatticeInstance:
    """sigma_L and epsilon_L stored column by column.

    At p = 2 a column is an int bitset; otherwise a dict {row: coefficient}.
    """

    sizes: tuple[int, ...]
    q: int
    t: int
    p: int
    sigma_cols: list
    epsilon_cols: list

    @property
    def S(self) -> int:
        return site_count(self.sizes)

    def sigma_shape(self) -> tuple[int, int]:
        return 2 * self.q * self.S, self.t * self.S

    def epsilon_shape(self) -> tuple[int, int]:
        return self.t * self.S, 2 * self.q * self.S

    def dense(self, which: str = "sigma") -> list[list[int]]:
        cols = self.sigma_cols if which == "sigma" else self.epsilon_cols
        nrows = (self.sigma_shape() if which == "sigma" else self.epsilon_shape())[0]
        M = [[0] * len(cols) for _ in range(nrows)]
        for j, c in enumerate(cols):
            for r, v in _col_items(c, self.p):
                M[r][j] = v
        return M


def _col_items(c, p: int):
    if p == 2:
        r = 0
        while c:
            if c & 1:
                yield r, 1
            c >>= 1
            r += 1
    else:
        yield from c.items()


def _build_cols(A: PolyMatrix, sizes: Sequence[int], p: int) -> list:
    S = site_count(sizes)
    strides = _strides(sizes)
    cols = []
    sites = list(_sites(sizes))
    for j in range(A.cols):
        entries = [(r, list(A[r, j].items())) for r in range(A.rows) if A[r, j]]
        for u in sites:
            if p == 2:
                bits = 0
                for r, terms in entries:
                    base = r * S
                    for e, _ in terms:
                        idx = sum(((ui + ei) % L) * st
                                  for ui, ei, L, st in zip(u, e, sizes, strides))
                        bits ^= 1 << (base + idx)
                cols.append(bits)
            else:
                col: dict[int, int] = {}
                for r, terms in entries:
                    base = r * S
                    for e, c in terms:
                        idx = sum(((ui + ei) % L) * st
                                  for ui, ei, L, st in zip(u, e, sizes, strides))
                        k = base + idx
                        col[k] = (col.get(k, 0) + c) % p
                cols.append({k: v for k, v in col.items() if v})
    return cols


def instantiate(code: CodeDef, sizes: Sequence[int] | int,
                cell_limit: int = DEFAULT_CELL_LIMIT) -> LatticeInstance:
    sizes = _sizes(code, sizes)
    if not code.field.is_prime_field:
        raise LatticeError("lattice instantiation needs a prime field")
    S = site_count(sizes)
    if 2 * code.q * S > cell_limit:
        raise LatticeLimitExceeded(f"instance with {2 * code.q * S} rows exceeds "
                                   f"the limit {cell_limit}")
    p = code.p
    sig = _build_cols(code.sigma, sizes, p)
    eps = _build_cols(excitation_map(code), sizes, p)
    return LatticeInstance(tuple(sizes), code.q, code.t, p, sig, eps)


def _sizes(code: CodeDef, sizes: Sequence[int] | int) -> tuple[int, ...]:
    if isinstance(sizes, int):
        sizes = (sizes,) * code.D
    sizes = tuple(int(L) for L in sizes)
    if len(sizes) != code.D:
        raise LatticeError(f"expected {code.D} sizes, got {len(sizes)}")
    if any(L < 1 for L in sizes):
        raise LatticeError("lattice sizes must be >= 1")
    return sizes


# ---------------------------------------------------------------------------
# ranks


def rank_gf2(cols: Iterable[int]) -> int:
    """Rank of a set of bitset vectors by forward elimination on the top bit."""
    piv: dict[int, int] = {}
    for v in cols:
        while v:
            h = v.bit_length() - 1
            w = piv.get(h)
            if w is None:
                piv[h] = v
                break
            v ^= w
    return len(piv)


def rank_mod_p(cols: Iterable[dict[int, int]], p: int) -> int:
    """Rank over F_p of sparse column vectors (dense-path correctness code)."""
    piv: dict[int, dict[int, int]] = {}  # pivot row -> vector scaled to 1 there
    for col in cols:
        v = dict(col)
        while v:
            h = max(v)
            w = piv.get(h)
            if w is None:
                inv = pow(v[h], p - 2, p)
                piv[h] = {k: c * inv % p for k, c in v.items()}
                break
            c = v[h]
            for k, wk in w.items():
                nv = (v.get(k, 0) - c * wk) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return len(piv)


def _rank(cols: list, p: int) -> int:
    return rank_gf2(cols) if p == 2 else rank_mod_p(cols, p)


@dataclass
class DegeneracyResult:
    code: str
    sizes: tuple[int, ...]
    k: int
    method: str
    elapsed_ms: float

    @property
    def dimK(self) -> int:
        return 2 * self.k

    def to_dict(self) -> dict[str, Any]:
        return {"code": self.code, "sizes": list(self.sizes), "k": self.k, "dimK": self.dimK,
                "method": self.method, "elapsed_ms": round(self.elapsed_ms, 3)}


def degeneracy(code: CodeDef, sizes: Sequence[int] | int,
               cell_limit: int = DEFAULT_CELL_LIMIT) -> DegeneracyResult:
    t0 = time.perf_counter()
    inst = instantiate(code, sizes, cell_limit)
    qS = code.q * inst.S
    r_sigma = _rank(inst.sigma_cols, inst.p)
    r_eps = _rank(inst.epsilon_cols, inst.p)
    k = qS - r_sigma
    k_eps = (2 * qS - r_eps) - qS
    if k != k_eps:
        raise CrossCheckError(f"k from sigma_L is {k} but nullity of epsilon_L gives {k_eps}")
    if code.t == code.q:
        coker = code.t * inst.S - r_eps
        if coker != k:
            raise CrossCheckError(f"dim coker epsilon_L = {coker} differs from k = {k}")
    if k < 0:
        raise CrossCheckError(f"negative k = {k}")
    return DegeneracyResult(code.name, inst.sizes, k, "rank",
                            (time.perf_counter() - t0) * 1000)


def degeneracy_k(code: CodeDef, sizes: Sequence[int] | int,
                 cell_limit: int = DEFAULT_CELL_LIMIT) -> int:
    return degeneracy(code, sizes, cell_limit).k


def check_complex(inst: LatticeInstance) -> bool:
    """epsilon_L * sigma_L = 0 over F_p."""
    p = inst.p
    n = inst.sigma_shape()[0]
    eps_rows = [dict() for _ in range(inst.epsilon_shape()[0])]
    for c, col in enumerate(inst.epsilon_cols):
        for r, v in _col_items(col, p):
            eps_rows[r][c] = v
    for col in inst.sigma_cols:
        entries = dict(_col_items(col, p))
        for row in eps_rows:
            s = sum(v * entries.get(c, 0) for c, v in row.items()) % p
            if s:
                return False
    del n
    return True


def brute_force_group_order(code: CodeDef, sizes: Sequence[int] | int,
                            bound: int = BRUTE_FORCE_BOUND) -> int:
    """k = qS - log_p |G| where G is enumerated as a set, with no elimination."""
    sizes = _sizes(code, sizes)
    S = site_count(sizes)
    if code.t * S > bound:
        raise LatticeLimitExceeded(f"t*S = {code.t * S} exceeds the enumeration bound {bound}")
    inst = instantiate(code, sizes)
    p = inst.p
    if p == 2:
        group = {0}
        for g in inst.sigma_cols:
            if g in group:
                continue
            group |= {h ^ g for h in group}
    else:
        n = inst.sigma_shape()[0]
        group_t = {(0,) * n}
        for col in inst.sigma_cols:
            g = [0] * n
            for r, v in col.items():
                g[r] = v
            new = set(group_t)
            for h in group_t:
                for c in range(1, p):
                    new.add(tuple((a + c * b) % p for a, b in zip(h, g)))
            group_t = new
        group = group_t
    size = len(group)
    s = round(math.log(size, p))
    if p ** s != size:
        raise CrossCheckError(f"group order {size} is not a power of {p}")
    return code.q * S - s


# ---------------------------------------------------------------------------
# cubic code closed form over GF(4)


def _binom_power_plus_one(c: int, L: int, F: Field) -> LaurentPoly:
    """(1 + c x)^L + 1 over F, by repeated squaring."""
    base = LaurentPoly({(0,): 1, (1,): c}, 1, F)
    return base ** L + LaurentPoly.one(1, F)


def cubic_closed_form(L: int) -> int:
    if L < 1:
        raise LatticeError("L must be >= 1")
    F = GF4
    w = 2  # the class of the generator, w^2 + w + 1 = 0
    w2 = F.mul(w, w)
    polys = [_binom_power_plus_one(c, L, F) for c in (1, w, w2)]
    g = poly_gcd(poly_gcd(polys[0], polys[1]), polys[2])
    return 4 * upoly_degree(g) - 2


__all__ = [
    "LatticeError", "LatticeLimitExceeded", "CrossCheckError", "LatticeInstance", "instantiate",
    "rank_gf2", "rank_mod_p", "DegeneracyResult", "degeneracy", "degeneracy_k", "check_complex",
    "brute_force_group_order", "cubic_closed_form", "site_count", "DEFAULT_CELL_LIMIT",
    "BRUTE_FORCE_BOUND",
]
