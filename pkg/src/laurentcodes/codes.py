"""Translation-invariant Pauli code Hamiltonians and their symplectic moves.

A code is a 2q x t matrix sigma over R = F_p[x_1^{+-1}, ..., x_D^{+-1}].  Rows
0..q-1 hold the X part and rows q..2q-1 the Z part; each column is one
interaction term.  Move descriptors use 1-based qubit/row/column indices,
matching the usual E_{i,j}(a) notation.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence, Union

from .field import GF2, Field
from .laurent import LaurentPoly, parse_poly
from .matrix import PolyMatrix


class CodeError(ValueError):
    """Invalid code definition or move."""


# ---------------------------------------------------------------------------
# commutation and excitations


@dataclass(frozen=True)
class CommutationResult:
    commuting: bool
    witness: tuple[int, int] | None = None
    value: LaurentPoly | None = None

    def __bool__(self) -> bool:
        return self.commuting


def check_commuting(sigma: PolyMatrix, q: int) -> CommutationResult:
    if sigma.rows != 2 * q:
        raise CodeError(f"sigma has {sigma.rows} rows, expected {2 * q}")
    lam = PolyMatrix.lam(q, sigma.nvars, sigma.field)
    comm = sigma.dagger() @ lam @ sigma
    for i in range(comm.rows):
        for j in range(comm.cols):
            if comm[i, j]:
                return CommutationResult(False, (i, j), comm[i, j])
    return CommutationResult(True)


@dataclass(frozen=True, eq=False)
class CodeDef:
    name: str
    D: int
    q: int
    sigma: PolyMatrix
    note: str = ""

    def __post_init__(self) -> None:
        if self.sigma.rows != 2 * self.q:
            raise CodeError(f"{self.name}: sigma must have 2q = {2 * self.q} rows, "
                            f"got {self.sigma.rows}")
        if self.sigma.nvars != self.D:
            raise CodeError(f"{self.name}: sigma entries have D={self.sigma.nvars}, "
                            f"expected {self.D}")
        res = check_commuting(self.sigma, self.q)
        if not res:
            i, j = res.witness
            raise CodeError(f"{self.name}: generators {i} and {j} do not commute "
                            f"(commutator {res.value.format()})")

    @property
    def t(self) -> int:
        return self.sigma.cols

    @property
    def field(self) -> Field:
        return self.sigma.field

    @property
    def p(self) -> int:
        return self.sigma.field.p

    def with_sigma(self, sigma: PolyMatrix, name: str | None = None,
                   q: int | None = None) -> "CodeDef":
        return CodeDef(name or self.name, self.D, self.q if q is None else q, sigma, self.note)

    def epsilon(self) -> PolyMatrix:
        return excitation_map(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CodeDef):
            return NotImplemented
        return (self.D, self.q, self.sigma) == (other.D, other.q, other.sigma)

    def __hash__(self) -> int:
        return hash((self.D, self.q, self.sigma))

    # JSON

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "dimension": self.D,
            "qubits_per_site": self.q,
            "field": self.p,
            "generators": [[x.format() for x in col] for col in self.sigma.columns()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CodeDef":
        name, D, q, sigma = parse_code_dict(data)
        return cls(name, D, q, sigma)

    @classmethod
    def from_json(cls, text: str) -> "CodeDef":
        return cls.from_dict(json.loads(text))


def parse_code_dict(data: dict[str, Any]) -> tuple[str, int, int, PolyMatrix]:
    """Validate the JSON shape and parse sigma, without the commutation check."""
    if not isinstance(data, dict):
        raise CodeError("code definition must be a JSON object")
    known = {"name", "dimension", "qubits_per_site", "field", "generators"}
    extra = set(data) - known
    if extra:
        raise CodeError(f"unknown keys in code definition: {sorted(extra)}")
    missing = known - set(data) - {"name", "field"}
    if missing:
        raise CodeError(f"missing keys in code definition: {sorted(missing)}")
    D, q, p = data["dimension"], data["qubits_per_site"], data.get("field", 2)
    for key, val in (("dimension", D), ("qubits_per_site", q), ("field", p)):
        if not isinstance(val, int) or isinstance(val, bool):
            raise CodeError(f"{key} must be an integer, got {val!r}")
    if D < 1 or q < 1:
        raise CodeError("dimension and qubits_per_site must be positive")
    try:
        F = Field(p)
    except ValueError as exc:
        raise CodeError(f"field: {exc}") from None
    gens = data["generators"]
    if not isinstance(gens, list) or not gens:
        raise CodeError("code needs a nonempty list of generators")
    cols = []
    for n, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != 2 * q:
            raise CodeError(f"generator {n} must list 2q = {2 * q} entries")
        cols.append([parse_poly(str(s), D, F) for s in g])
    sigma = PolyMatrix.from_columns(cols, 2 * q, D, F)
    return str(data.get("name", "code")), D, q, sigma


def excitation_map(code: CodeDef) -> PolyMatrix:
    """epsilon = sigma^dagger lambda_q, a t x 2q matrix with epsilon sigma = 0."""
    lam = PolyMatrix.lam(code.q, code.D, code.field)
    eps = code.sigma.dagger() @ lam
    assert (eps @ code.sigma).is_zero()
    return eps


# ---------------------------------------------------------------------------
# elementary moves


@dataclass(frozen=True)
class Hadamard:
    i: int


@dataclass(frozen=True)
class CPhase:
    i: int
    f: LaurentPoly


@dataclass(frozen=True)
class XPhase:
    """E_{i,i+q}(f): the Hadamard conjugate of a controlled phase."""
    i: int
    f: LaurentPoly


@dataclass(frozen=True)
class CNOT:
    i: int
    j: int
    a: LaurentPoly


@dataclass(frozen=True)
class CNOTHadamard:
    i: int
    j: int
    a: LaurentPoly


@dataclass(frozen=True)
class SwapQubits:
    i: int
    j: int


@dataclass(frozen=True)
class RowOp:
    """A raw E_{i,j}(a) on the 2q rows; accepted only if it is symplectic on its own."""
    i: int
    j: int
    a: LaurentPoly


@dataclass(frozen=True)
class ColumnOp:
    """Column j += a * column k."""
    j: int
    k: int
    a: LaurentPoly


@dataclass(frozen=True)
class ColumnScale:
    j: int
    u: LaurentPoly


@dataclass(frozen=True)
class ColumnSwap:
    j: int
    k: int


@dataclass(frozen=True)
class CoarseGrain:
    basis: tuple[tuple[int, ...], ...]


RowMove = Union[Hadamard, CPhase, XPhase, CNOT, CNOTHadamard, SwapQubits, RowOp]
ColumnMove = Union[ColumnOp, ColumnScale, ColumnSwap]
Move = Union[RowMove, ColumnMove, CoarseGrain]


def move_to_dict(m: Move) -> dict[str, Any]:
    out: dict[str, Any] = {"move": type(m).__name__}
    for k, v in m.__dict__.items():
        if isinstance(v, LaurentPoly):
            v = v.format()
        elif isinstance(v, tuple):
            v = [list(r) for r in v]
        out[k] = v
    return out


def _elem(n: int, i: int, j: int, a: LaurentPoly) -> PolyMatrix:
    """Identity plus a at 1-based position (i, j)."""
    ent = PolyMatrix.identity(n, a.nvars, a.field).tolist()
    ent[i - 1][j - 1] = ent[i - 1][j - 1] + a
    return PolyMatrix(ent, a.nvars, a.field, n)


def is_symplectic(T: PolyMatrix, q: int) -> bool:
    lam = PolyMatrix.lam(q, T.nvars, T.field)
    return T.dagger() @ lam @ T == lam


def move_matrix(m: RowMove, q: int, nvars: int, field: Field) -> PolyMatrix:
    n = 2 * q
    one = LaurentPoly.one(nvars, field)

    def qubit(i: int) -> None:
        if not 1 <= i <= q:
            raise CodeError(f"qubit index {i} out of range 1..{q}")

    if isinstance(m, Hadamard):
        qubit(m.i)
        i = m.i
        return _elem(n, i, i + q, -one) @ _elem(n, i + q, i, one) @ _elem(n, i, i + q, -one)
    if isinstance(m, (CPhase, XPhase)):
        qubit(m.i)
        if m.f != m.f.antipode():
            raise CodeError(f"phase argument {m.f.format()} is not self-conjugate")
        if isinstance(m, CPhase):
            return _elem(n, m.i + q, m.i, m.f)
        return _elem(n, m.i, m.i + q, m.f)
    if isinstance(m, CNOT):
        qubit(m.i)
        qubit(m.j)
        if m.i == m.j:
            raise CodeError("CNOT needs distinct qubits")
        return _elem(n, m.i, m.j, m.a) @ _elem(n, m.j + q, m.i + q, -m.a.antipode())
    if isinstance(m, CNOTHadamard):
        qubit(m.i)
        qubit(m.j)
        if m.i == m.j:
            raise CodeError("CNOT-Hadamard needs distinct qubits")
        return _elem(n, m.i + q, m.j, m.a) @ _elem(n, m.j + q, m.i, m.a.antipode())
    if isinstance(m, SwapQubits):
        qubit(m.i)
        qubit(m.j)
        perm = list(range(n))
        a, b = m.i - 1, m.j - 1
        perm[a], perm[b] = perm[b], perm[a]
        perm[a + q], perm[b + q] = perm[b + q], perm[a + q]
        z = LaurentPoly.zero(nvars, field)
        return PolyMatrix([[one if perm[r] == c else z for c in range(n)] for r in range(n)],
                          nvars, field, n)
    if isinstance(m, RowOp):
        if not (1 <= m.i <= n and 1 <= m.j <= n) or m.i == m.j:
            raise CodeError(f"row indices ({m.i}, {m.j}) invalid for 2q = {n}")
        T = _elem(n, m.i, m.j, m.a)
        if not is_symplectic(T, q):
            raise CodeError(f"E_{{{m.i},{m.j}}}({m.a.format()}) is not symplectic")
        return T
    raise CodeError(f"not a row move: {m!r}")


@dataclass
class SymplecticTransform:
    matrix: PolyMatrix
    provenance: list[RowMove] = dc_field(default_factory=list)

    @classmethod
    def identity(cls, q: int, nvars: int, field: Field = GF2) -> "SymplecticTransform":
        return cls(PolyMatrix.identity(2 * q, nvars, field), [])

    @classmethod
    def from_move(cls, m: RowMove, q: int, nvars: int, field: Field = GF2) -> "SymplecticTransform":
        T = move_matrix(m, q, nvars, field)
        if not is_symplectic(T, q):
            raise CodeError(f"move {m!r} failed the symplectic check")
        return cls(T, [m])

    def then(self, m: RowMove) -> "SymplecticTransform":
        """Apply move m after this transform."""
        q = self.matrix.rows // 2
        T = move_matrix(m, q, self.matrix.nvars, self.matrix.field) @ self.matrix
        if not is_symplectic(T, q):
            raise CodeError("composition lost the symplectic property")
        return SymplecticTransform(T, self.provenance + [m])


def _apply_column_move(sigma: PolyMatrix, m: ColumnMove) -> PolyMatrix:
    ent = sigma.tolist()
    t = sigma.cols
    if isinstance(m, ColumnOp):
        if not (1 <= m.j <= t and 1 <= m.k <= t) or m.j == m.k:
            raise CodeError(f"column indices ({m.j}, {m.k}) invalid")
        for r in ent:
            r[m.j - 1] = r[m.j - 1] + m.a * r[m.k - 1]
    elif isinstance(m, ColumnScale):
        if not m.u.is_unit():
            raise CodeError(f"column scale {m.u.format()} is not a unit")
        for r in ent:
            r[m.j - 1] = r[m.j - 1] * m.u
    elif isinstance(m, ColumnSwap):
        for r in ent:
            r[m.j - 1], r[m.k - 1] = r[m.k - 1], r[m.j - 1]
    else:
        raise CodeError(f"not a column move: {m!r}")
    return PolyMatrix(ent, sigma.nvars, sigma.field, t)


def apply_to_sigma(sigma: PolyMatrix, q: int, m: Move) -> PolyMatrix:
    if isinstance(m, (ColumnOp, ColumnScale, ColumnSwap)):
        return _apply_column_move(sigma, m)
    T = move_matrix(m, q, sigma.nvars, sigma.field)
    if not is_symplectic(T, q):
        raise CodeError(f"move {m!r} failed the symplectic check")
    return T @ sigma


def apply_elementary(code: CodeDef, m: Move) -> CodeDef:
    if isinstance(m, CoarseGrain):
        return coarse_grain(code, [list(r) for r in m.basis])
    return code.with_sigma(apply_to_sigma(code.sigma, code.q, m))


def apply_moves(code: CodeDef, moves: Sequence[Move]) -> CodeDef:
    for m in moves:
        code = apply_elementary(code, m)
    return code


def random_move(q: int, nvars: int, rng: random.Random, field: Field = GF2,
                max_exp: int = 1) -> RowMove:
    """Sample an elementary move with small random polynomial arguments."""

    def rand_poly(nterms: int) -> LaurentPoly:
        terms: dict = {}
        for _ in range(nterms):
            e = tuple(rng.randint(-max_exp, max_exp) for _ in range(nvars))
            terms[e] = rng.randrange(1, field.p)
        return LaurentPoly(terms, nvars, field)

    kinds = ["H", "P", "X"] + (["C", "CH"] if q > 1 else [])
    k = rng.choice(kinds)
    i = rng.randint(1, q)
    if k == "H":
        return Hadamard(i)
    if k in ("P", "X"):
        g = rand_poly(rng.randint(1, 2))
        f = g + g.antipode()
        if rng.random() < 0.5:
            f = f + LaurentPoly.one(nvars, field)
        return CPhase(i, f) if k == "P" else XPhase(i, f)
    j = rng.choice([x for x in range(1, q + 1) if x != i])
    a = rand_poly(rng.randint(1, 2))
    return CNOT(i, j, a) if k == "C" else CNOTHadamard(i, j, a)


# ---------------------------------------------------------------------------
# coarse-graining


def _hnf_lower(M: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Column-style lower-triangular Hermite form: H = M U with U unimodular."""
    D = len(M)
    H = [row[:] for row in M]
    U = [[int(i == j) for j in range(D)] for i in range(D)]

    def colop(dst: int, src: int, k: int) -> None:
        for r in range(D):
            H[r][dst] -= k * H[r][src]
            U[r][dst] -= k * U[r][src]

    def swap(a: int, b: int) -> None:
        for r in range(D):
            H[r][a], H[r][b] = H[r][b], H[r][a]
            U[r][a], U[r][b] = U[r][b], U[r][a]

    for i in range(D):
        while True:
            nz = [j for j in range(i, D) if H[i][j] != 0]
            if not nz:
                raise CodeError("sublattice matrix is singular")
            piv = min(nz, key=lambda j: abs(H[i][j]))
            if piv != i:
                swap(i, piv)
            done = True
            for j in range(i + 1, D):
                if H[i][j]:
                    colop(j, i, H[i][j] // H[i][i])
                    if H[i][j]:
                        done = False
            if done:
                break
        if H[i][i] < 0:
            for r in range(D):
                H[r][i] = -H[r][i]
                U[r][i] = -U[r][i]
    return H, U


@dataclass(frozen=True)
class Sublattice:
    """Sublattice spanned by the columns of an integer matrix (old coordinates)."""

    basis: tuple[tuple[int, ...], ...]  # basis[i][j]: component i of new generator j
    hnf: tuple[tuple[int, ...], ...]
    unimodular: tuple[tuple[int, ...], ...]

    @classmethod
    def from_matrix(cls, M: Sequence[Sequence[int]]) -> "Sublattice":
        M = [list(map(int, r)) for r in M]
        D = len(M)
        if any(len(r) != D for r in M):
            raise CodeError("sublattice matrix must be square")
        H, U = _hnf_lower(M)
        return cls(tuple(map(tuple, M)), tuple(map(tuple, H)), tuple(map(tuple, U)))

    @classmethod
    def diagonal(cls, factors: Sequence[int]) -> "Sublattice":
        if any(int(c) < 1 for c in factors):
            raise CodeError("coarse-graining factors must be >= 1")
        D = len(factors)
        return cls.from_matrix([[int(factors[i]) if i == j else 0 for j in range(D)]
                                for i in range(D)])

    @property
    def index(self) -> int:
        n = 1
        for i in range(len(self.hnf)):
            n *= self.hnf[i][i]
        return n

    def representatives(self) -> list[tuple[int, ...]]:
        """Coset representatives in the box prod [0, h_ii), lexicographic order."""
        D = len(self.hnf)
        reps = [()]
        for i in range(D):
            reps = [r + (a,) for r in reps for a in range(self.hnf[i][i])]
        return reps

    def reduce(self, v: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Split v = rep + basis @ c; returns (rep, c)."""
        D = len(self.hnf)
        v = list(v)
        d = [0] * D
        for i in range(D):
            k = v[i] // self.hnf[i][i]
            d[i] = k
            if k:
                for r in range(D):
                    v[r] -= k * self.hnf[r][i]
        c = tuple(sum(self.unimodular[r][j] * d[j] for j in range(D)) for r in range(D))
        return tuple(v), c


def regular_representation(f: LaurentPoly, lat: Sublattice) -> list[list[LaurentPoly]]:
    """Matrix of multiplication by f on R as a free module over the sublattice ring.

    Column j holds the coordinates of f * x^{rep_j}.
    """
    reps = lat.representatives()
    where = {r: k for k, r in enumerate(reps)}
    n = len(reps)
    D = f.nvars
    F = f.field
    acc: list[list[dict]] = [[{} for _ in range(n)] for _ in range(n)]
    for e, c in f.items():
        for j, r in enumerate(reps):
            rep, cc = lat.reduce(tuple(a + b for a, b in zip(e, r)))
            cell = acc[where[rep]][j]
            cell[cc] = F.add(cell.get(cc, 0), c)
    return [[LaurentPoly({e: c for e, c in acc[k][j].items() if c}, D, F) for j in range(n)]
            for k in range(n)]


def coarse_grain(code: CodeDef, factors: Sequence[int] | Sequence[Sequence[int]]) -> CodeDef:
    """Restrict scalars to a sublattice given by diagonal factors or an integer matrix."""
    if factors and isinstance(factors[0], (list, tuple)):
        lat = Sublattice.from_matrix(factors)  # type: ignore[arg-type]
    else:
        if len(factors) != code.D:
            raise CodeError(f"need {code.D} factors, got {len(factors)}")
        lat = Sublattice.diagonal(factors)  # type: ignore[arg-type]
    if len(lat.basis) != code.D:
        raise CodeError("sublattice dimension does not match the code")
    n = lat.index
    if n == 1 and all(lat.basis[i][j] == int(i == j) for i in range(code.D) for j in range(code.D)):
        return code
    q, t = code.q, code.t
    z = LaurentPoly.zero(code.D, code.field)
    ent = [[z] * (t * n) for _ in range(2 * q * n)]
    for r in range(2 * q):
        block = r * n  # X rows then Z rows keep their relative order
        for g in range(t):
            f = code.sigma[r, g]
            if not f:
                continue
            rep = regular_representation(f, lat)
            for k in range(n):
                for j in range(n):
                    ent[block + k][g * n + j] = rep[k][j]
    sigma = PolyMatrix(ent, code.D, code.field, t * n)
    return CodeDef(f"{code.name}/cg{n}", code.D, q * n, sigma, code.note)


def tensor_ancilla(code: CodeDef, n: int) -> CodeDef:
    """Add n ancilla qubits per site, each stabilized by its own Z."""
    if n < 0:
        raise CodeError("ancilla count must be >= 0")
    if n == 0:
        return code
    q, t = code.q, code.t
    D, F = code.D, code.field
    z = LaurentPoly.zero(D, F)
    one = LaurentPoly.one(D, F)
    rows = []
    for r in range(q):
        rows.append(code.sigma.row(r) + [z] * n)
    for _ in range(n):
        rows.append([z] * (t + n))
    for r in range(q):
        rows.append(code.sigma.row(q + r) + [z] * n)
    for a in range(n):
        rows.append([z] * t + [one if b == a else z for b in range(n)])
    sigma = PolyMatrix(rows, D, F, t + n)
    return CodeDef(f"{code.name}+anc{n}", D, q + n, sigma, code.note)


def direct_sum(a: CodeDef, b: CodeDef) -> CodeDef:
    if a.D != b.D or a.field != b.field:
        raise CodeError("direct sum needs codes over the same ring")
    qa, qb = a.q, b.q
    xa = a.sigma.submatrix(range(qa), range(a.t))
    za = a.sigma.submatrix(range(qa, 2 * qa), range(a.t))
    xb = b.sigma.submatrix(range(qb), range(b.t))
    zb = b.sigma.submatrix(range(qb, 2 * qb), range(b.t))
    sigma = PolyMatrix.block_diag(xa, xb).vstack(PolyMatrix.block_diag(za, zb))
    return CodeDef(f"{a.name}+{b.name}", a.D, qa + qb, sigma)


__all__ = [
    "CodeError", "CodeDef", "CommutationResult", "check_commuting", "excitation_map",
    "Hadamard", "CPhase", "XPhase", "CNOT", "CNOTHadamard", "SwapQubits", "RowOp",
    "ColumnOp", "ColumnScale", "ColumnSwap", "CoarseGrain", "SymplecticTransform",
    "move_matrix", "is_symplectic", "apply_elementary", "apply_moves", "apply_to_sigma",
    "random_move", "Sublattice", "regular_representation", "coarse_grain", "tensor_ancilla",
    "direct_sum", "move_to_dict", "parse_code_dict",
]
