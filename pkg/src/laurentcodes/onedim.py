"""Classification of one-dimensional codes into Ising chains and free qubits.

The symplectic Smith loop brings sigma to a form where every nonzero column
has a single entry, on distinct qubits.  Each diagonal polynomial f is then
coarse-grained by the smallest n with f | x^n - 1, after which its regular
representation diagonalizes to entries 1 and x' - 1 (one per degree of f).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import lcm
from typing import Any, Sequence

from .codes import (CNOT, CNOTHadamard, CPhase, CoarseGrain, CodeDef, CodeError, ColumnOp,
                    ColumnScale, ColumnSwap, Hadamard, Move, SwapQubits, SymplecticTransform,
                    apply_elementary, apply_moves, move_to_dict, regular_representation,
                    Sublattice, check_commuting)
from .field import Field
from .laurent import LaurentPoly
from .matrix import PolyMatrix
from .univariate import poly_divmod


class ClassifyError(ValueError):
    pass


def ldeg(f: LaurentPoly) -> int:
    """Max exponent minus min exponent; -1 for zero so it sorts first."""
    return f.span() if f else -1


def laurent_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """a = Q b + r with ldeg r < ldeg b (r may be zero)."""
    if not b:
        raise ZeroDivisionError("division by zero")
    if not a:
        return a, a
    an, sa = a.normalized()
    bn, sb = b.normalized()
    Q, r = poly_divmod(an, bn)
    shift = tuple(-x for x in sa)
    return Q.shift(tuple(y - x for x, y in zip(sa, sb))), r.shift(shift)


def unit_normal(f: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """(g, u) with g = u f having nonnegative exponents, g(0) != 0, top coefficient 1."""
    g, s = f.normalized()
    top = g.coeff(g.max_exps())
    c = f.field.inv(top)
    u = LaurentPoly.monomial(s, c, f.field)
    return g.scale(c), u


# ---------------------------------------------------------------------------
# Euclid on a row vector by column operations


def euclid_gcd(f: LaurentPoly, g: LaurentPoly
               ) -> tuple[LaurentPoly, list[ColumnOp | ColumnScale | ColumnSwap]]:
    """gcd of f, g with a column-op transcript sending (f, g) to (gcd, 0)."""
    if f.nvars != 1:
        raise ClassifyError("euclid_gcd needs D = 1")
    ops: list = []
    a, b = f, g
    while b:
        if ldeg(a) < ldeg(b):
            ops.append(ColumnSwap(1, 2))
            a, b = b, a
            continue
        Q, r = laurent_divmod(a, b)
        ops.append(ColumnOp(1, 2, -Q))
        a = r
        ops.append(ColumnSwap(1, 2))
        a, b = b, a
    if a:
        na, u = unit_normal(a)
        if u != LaurentPoly.one(1, a.field):
            ops.append(ColumnScale(1, u))
        a = na
    return a, ops


def replay_row(ops: Sequence[Move], f: LaurentPoly, g: LaurentPoly
               ) -> tuple[LaurentPoly, LaurentPoly]:
    v = [f, g]
    for m in ops:
        if isinstance(m, ColumnOp):
            v[m.j - 1] = v[m.j - 1] + m.a * v[m.k - 1]
        elif isinstance(m, ColumnScale):
            v[m.j - 1] = v[m.j - 1] * m.u
        elif isinstance(m, ColumnSwap):
            v[m.j - 1], v[m.k - 1] = v[m.k - 1], v[m.j - 1]
    return v[0], v[1]


# ---------------------------------------------------------------------------
# symplectic Smith form


class _Work:
    """sigma under a growing list of moves, re-applied through the codes layer."""

    def __init__(self, code: CodeDef):
        self.code = code
        self.q = code.q
        self.moves: list[Move] = []
        self.M = code.sigma.tolist()
        self.T = SymplecticTransform.identity(code.q, code.D, code.field)

    def apply(self, m: Move) -> None:
        self.code = apply_elementary(self.code, m)
        self.M = self.code.sigma.tolist()
        self.moves.append(m)
        if not isinstance(m, (ColumnOp, ColumnScale, ColumnSwap, CoarseGrain)):
            self.T = self.T.then(m)

    def e(self, r: int, c: int) -> LaurentPoly:
        return self.M[r][c]


def is_diagonal_form(sigma: PolyMatrix, q: int) -> bool:
    """Each nonzero column has one nonzero entry, and no qubit carries two."""
    used = set()
    for j in range(sigma.cols):
        nz = [r for r in range(sigma.rows) if sigma[r, j]]
        if not nz:
            continue
        if len(nz) != 1:
            return False
        qb = nz[0] % q
        if qb in used:
            return False
        used.add(qb)
    return True


def symplectic_smith(code: CodeDef, max_iter: int = 100_000) -> tuple[CodeDef, list[Move]]:
    if code.D != 1:
        raise ClassifyError("symplectic_smith needs D = 1")
    res = check_commuting(code.sigma, code.q)
    if not res:
        raise ClassifyError(f"non-commuting input: {res}")
    if is_diagonal_form(code.sigma, code.q):
        return code, []
    W = _Work(code)
    q, t = code.q, code.t
    F = code.field
    one = LaurentPoly.one(1, F)
    budget = [max_iter]

    def tick() -> None:
        budget[0] -= 1
        if budget[0] < 0:
            raise ClassifyError("Smith loop exceeded its iteration budget")

    for k in range(min(q, t)):
        while True:
            tick()
            # smallest nonzero entry of the active upper block
            best = None
            for i in range(k, q):
                for j in range(k, t):
                    a = W.e(i, j)
                    if a and (best is None or ldeg(a) < best[0]):
                        best = (ldeg(a), i, j)
            if best is None:
                low = [(i, j) for i in range(k, q) for j in range(k, t) if W.e(q + i, j)]
                if not low:
                    break
                W.apply(Hadamard(low[0][0] + 1))
                continue
            _, i0, j0 = best
            if i0 != k:
                W.apply(SwapQubits(k + 1, i0 + 1))
            if j0 != k:
                W.apply(ColumnSwap(k + 1, j0 + 1))
            f = W.e(k, k)
            dirty = False
            for i in range(k + 1, q):
                a = W.e(i, k)
                if a:
                    Q, r = laurent_divmod(a, f)
                    W.apply(CNOT(i + 1, k + 1, -Q))
                    dirty = dirty or bool(r)
            if dirty:
                continue
            for j in range(k + 1, t):
                a = W.e(k, j)
                if a:
                    Q, r = laurent_divmod(a, f)
                    W.apply(ColumnOp(j + 1, k + 1, -Q))
                    dirty = dirty or bool(r)
            if dirty:
                continue
            # Z-part of column k on other qubits
            for i in range(k + 1, q):
                a = W.e(q + i, k)
                if not a:
                    continue
                Q, r = laurent_divmod(a, f)
                if r:
                    W.apply(Hadamard(i + 1))
                    dirty = True
                    break
                W.apply(CNOTHadamard(i + 1, k + 1, -Q))
            if dirty:
                continue
            # Z-part on the pivot qubit: reduce by controlled-phase, swap by Hadamard
            g = W.e(q + k, k)
            while g and ldeg(g) >= ldeg(f):
                tick()
                fa, fb = f.min_exps()[0], f.max_exps()[0]
                gc, gd = g.min_exps()[0], g.max_exps()[0]
                beta, delta = f.coeff((fb,)), g.coeff((gd,))
                ratio = F.mul(delta, F.inv(beta))
                if gd - fb == 0 and gc - fa == 0:
                    h = LaurentPoly.constant(F.neg(ratio), 1, F)
                else:
                    h = (LaurentPoly.monomial((gd - fb,), 1, F)
                         + LaurentPoly.monomial((gc - fa,), 1, F)).scale(F.neg(ratio))
                W.apply(CPhase(k + 1, h))
                g2 = W.e(q + k, k)
                if g2 and ldeg(g2) >= ldeg(g):
                    raise ClassifyError("controlled-phase step failed to lower the degree")
                g = g2
            if g:
                W.apply(Hadamard(k + 1))
                continue
            break
        # commutation forces the rest of the pivot qubit's Z row to vanish
        for j in range(k + 1, t):
            if W.e(q + k, j):
                raise ClassifyError("Z row of a finished pivot is nonzero (input not commuting?)")
    # normalize diagonal entries to polynomials with f(0) != 0 and leading coefficient 1
    for j in range(t):
        nz = [r for r in range(2 * q) if W.e(r, j)]
        if len(nz) == 1:
            _, u = unit_normal(W.e(nz[0], j))
            if u != one:
                W.apply(ColumnScale(j + 1, u))
    if not is_diagonal_form(W.code.sigma, q):
        raise ClassifyError("Smith loop ended without a diagonal form")
    return W.code, W.moves


def diagonal_entries(sigma: PolyMatrix, q: int) -> list[tuple[int, int, LaurentPoly]]:
    """(row, column, entry) for the nonzero entries of a diagonal-form sigma."""
    out = []
    for j in range(sigma.cols):
        for r in range(sigma.rows):
            if sigma[r, j]:
                out.append((r, j, sigma[r, j]))
    return out


# ---------------------------------------------------------------------------
# single polynomial: period and regular-representation Smith


def period_of(f: LaurentPoly, cap: int | None = None) -> int:
    """Smallest n >= 1 with f | x^n - 1 (f normalized, f(0) != 0)."""
    F = f.field
    d = f.max_exps()[0]
    if d == 0:
        return 1
    if cap is None:
        size = F.order ** d
        cap = size * (size - 1)
    one = LaurentPoly.one(1, F)
    x = LaurentPoly.var(0, 1, F)
    cur = x
    for n in range(1, cap + 1):
        _, cur = poly_divmod(cur, f)
        if cur == one:
            return n
        cur = cur * x
    raise ClassifyError(f"no n <= {cap} with f | x^n - 1")


@dataclass
class SmithOp:
    kind: str  # "row_add" (i += a*j), "col_add" (j += a*k), "row_swap", "col_swap"
    i: int
    j: int
    a: LaurentPoly | None = None

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"op": self.kind, "i": self.i, "j": self.j}
        if self.a is not None:
            d["a"] = self.a.format()
        return d


def smith_diagonalize(A: list[list[LaurentPoly]]) -> tuple[list[list[LaurentPoly]], list[SmithOp]]:
    """Diagonalize a square matrix over F[x^{+-1}] by row/column additions and swaps."""
    M = [list(r) for r in A]
    n = len(M)
    ops: list[SmithOp] = []

    def row_add(i, j, a):
        for c in range(n):
            if M[j][c]:
                M[i][c] = M[i][c] + a * M[j][c]
        ops.append(SmithOp("row_add", i, j, a))

    def col_add(j, k, a):
        for r in range(n):
            if M[r][k]:
                M[r][j] = M[r][j] + a * M[r][k]
        ops.append(SmithOp("col_add", j, k, a))

    for k in range(n):
        while True:
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    if M[i][j] and (best is None or ldeg(M[i][j]) < best[0]):
                        best = (ldeg(M[i][j]), i, j)
            if best is None:
                break
            _, i0, j0 = best
            if i0 != k:
                M[k], M[i0] = M[i0], M[k]
                ops.append(SmithOp("row_swap", k, i0))
            if j0 != k:
                for r in M:
                    r[k], r[j0] = r[j0], r[k]
                ops.append(SmithOp("col_swap", k, j0))
            f = M[k][k]
            dirty = False
            for i in range(k + 1, n):
                if M[i][k]:
                    Q, r = laurent_divmod(M[i][k], f)
                    row_add(i, k, -Q)
                    dirty = dirty or bool(r)
            for j in range(k + 1, n):
                if M[k][j]:
                    Q, r = laurent_divmod(M[k][j], f)
                    col_add(j, k, -Q)
                    dirty = dirty or bool(r)
            if not dirty:
                break
    return M, ops


@dataclass
class IsingDecomposition:
    n: int
    ising_count: int
    diagonal: list[LaurentPoly]
    transcript: list[SmithOp]


def _is_ising_entry(d: LaurentPoly) -> bool:
    if not d:
        return False
    g, _ = unit_normal(d)
    one = LaurentPoly.one(1, d.field)
    x = LaurentPoly.var(0, 1, d.field)
    return g == x - one or g == one - x or g.monic() == (x - one).monic()


def ising_decompose(f: LaurentPoly) -> IsingDecomposition:
    if f.nvars != 1:
        raise ClassifyError("ising_decompose needs D = 1")
    if not f:
        raise ClassifyError("ising_decompose needs f != 0")
    g, _ = unit_normal(f)
    if g.max_exps()[0] == 0:
        return IsingDecomposition(1, 0, [LaurentPoly.one(1, f.field)], [])
    n = period_of(g)
    A = regular_representation(g, Sublattice.diagonal([n]))
    Dm, ops = smith_diagonalize(A)
    diag = [Dm[i][i] for i in range(n)]
    count = 0
    for i, d in enumerate(diag):
        if not d:
            raise ClassifyError("singular regular representation")
        if d.is_unit():
            continue
        if not _is_ising_entry(d):
            raise ClassifyError(f"diagonal entry {d.format()} is neither a unit nor x'-1")
        count += 1
    for i in range(n):
        for j in range(n):
            if i != j and Dm[i][j]:
                raise ClassifyError("Smith steps left an off-diagonal entry")
    if count != g.max_exps()[0]:
        raise ClassifyError(f"{count} Ising entries but deg f = {g.max_exps()[0]}")
    return IsingDecomposition(n, count, diag, ops)


# ---------------------------------------------------------------------------
# the full pipeline


@dataclass
class Classification1D:
    ising_copies: int
    free_qubits: int
    coarse_factor: int
    transcript: list[Move] = dc_field(default_factory=list)
    unconstrained_qubits: int = 0  # qubits per coarse site touched by no term (f = 0)
    final: CodeDef | None = None

    def to_dict(self, with_transcript: bool = False) -> dict[str, Any]:
        d: dict[str, Any] = {
            "ising_copies": self.ising_copies,
            "free_qubits": self.free_qubits,
            "coarse_factor": self.coarse_factor,
            "transcript_length": len(self.transcript),
            "unconstrained_qubits": self.unconstrained_qubits,
        }
        if with_transcript:
            d["transcript"] = [move_to_dict(m) for m in self.transcript]
        return d


def _block_moves(op: SmithOp, rows: list[int], cols: list[int], q: int, zpart: bool) -> Move:
    """Translate a Smith op on one n x n block into a move on the coarse code.

    rows are 0-based qubit indices of the block; cols 0-based columns.
    """
    if op.kind == "row_swap":
        return SwapQubits(rows[op.i] + 1, rows[op.j] + 1)
    if op.kind == "col_swap":
        return ColumnSwap(cols[op.i] + 1, cols[op.j] + 1)
    if op.kind == "col_add":
        return ColumnOp(cols[op.i] + 1, cols[op.j] + 1, op.a)
    # row i += a * row j
    qi, qj = rows[op.i] + 1, rows[op.j] + 1
    if not zpart:
        return CNOT(qi, qj, op.a)
    # CNOT(s, r, b) adds -conj(b) * Z_s to Z_r, so choose b = -conj(a)
    return CNOT(qj, qi, -op.a.antipode())


def classify_1d(code: CodeDef, verify: bool = True) -> Classification1D:
    if code.D != 1:
        raise ClassifyError("classify_1d needs D = 1")
    diag_code, moves = symplectic_smith(code)
    q = code.q
    ents = diagonal_entries(diag_code.sigma, q)
    degs = []
    periods = []
    for _, _, f in ents:
        g, _ = unit_normal(f)
        degs.append(g.max_exps()[0])
        periods.append(period_of(g) if g.max_exps()[0] else 1)
    n = lcm(*periods) if periods else 1
    touched = {r % q for r, _, _ in ents}
    transcript: list[Move] = list(moves)
    cur = diag_code
    if n > 1:
        cg = CoarseGrain(((n,),))
        cur = apply_elementary(cur, cg)
        transcript.append(cg)
    q2 = cur.q
    for r, j, f in ents:
        zpart = r >= q
        qubit = r % q
        rows = [qubit * n + k for k in range(n)]
        cols = [j * n + k for k in range(n)]
        base = (q2 if zpart else 0)
        block = [[cur.sigma[base + rr, cc] for cc in cols] for rr in rows]
        _, ops = smith_diagonalize(block)
        for op in ops:
            m = _block_moves(op, rows, cols, q2, zpart)
            cur = apply_elementary(cur, m)
            transcript.append(m)
    ising = sum(degs)
    res = Classification1D(ising, q * n - ising, n, transcript,
                           (q - len(touched)) * n, cur)
    if verify:
        verify_classification(code, res)
    return res


def verify_classification(code: CodeDef, res: Classification1D) -> None:
    """Replay the transcript and check the diagonal shape and Ising count."""
    final = apply_moves(code, res.transcript)
    if final.sigma != res.final.sigma:
        raise ClassifyError("transcript replay does not reproduce the final matrix")
    if not is_diagonal_form(final.sigma, final.q):
        raise ClassifyError("final matrix is not diagonal")
    count = 0
    for _, _, d in diagonal_entries(final.sigma, final.q):
        if d.is_unit():
            continue
        if not _is_ising_entry(d):
            raise ClassifyError(f"final entry {d.format()} is neither a unit nor x'-1")
        count += 1
    if count != res.ising_copies:
        raise ClassifyError(f"found {count} Ising entries, expected {res.ising_copies}")


def composite_transform(code: CodeDef, moves: Sequence[Move]) -> PolyMatrix:
    """Product of the row moves in order (column moves and coarse steps are skipped)."""
    T = SymplecticTransform.identity(code.q, code.D, code.field)
    for m in moves:
        if isinstance(m, CoarseGrain):
            break
        if isinstance(m, (ColumnOp, ColumnScale, ColumnSwap)):
            continue
        T = T.then(m)
    return T.matrix


__all__ = [
    "ClassifyError", "ldeg", "laurent_divmod", "unit_normal", "euclid_gcd", "replay_row",
    "is_diagonal_form", "symplectic_smith", "diagonal_entries", "period_of", "SmithOp",
    "smith_diagonalize", "IsingDecomposition", "ising_decompose", "Classification1D",
    "classify_1d", "verify_classification", "composite_transform",
]
