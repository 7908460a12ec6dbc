import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from laurentcodes import GF2, LaurentPoly, PolyMatrix
from laurentcodes.catalog import ising1d
from laurentcodes.codes import (
    CoarseGrain, CodeDef, ColumnOp, ColumnScale, ColumnSwap, SymplecticTransform,
    apply_to_sigma, direct_sum, is_symplectic, random_move, tensor_ancilla,
)
from laurentcodes.lattice import degeneracy_k
from laurentcodes.onedim import (
    ClassifyError, classify_1d, euclid_gcd, ising_decompose, is_diagonal_form, laurent_divmod,
    ldeg, period_of, replay_row, smith_diagonalize, symplectic_smith, unit_normal,
)
from strategies import GF3, laurent_polys


def P(s, F=GF2):
    return LaurentPoly.parse(s, 1, F)


def chain(f, F=GF2):
    z = LaurentPoly.zero(1, F)
    return CodeDef(f"chain[{f}]", 1, 1, PolyMatrix([[z], [P(f, F)]], 1, F, 1))


def scramble(code, rng, nmoves=5):
    sigma = code.sigma
    for _ in range(nmoves):
        sigma = apply_to_sigma(sigma, code.q, random_move(code.q, 1, rng, code.field))
    return code.with_sigma(sigma, name=code.name + "~")


def transcript_transforms(code, res):
    """Composite row transforms before and after the coarse-graining step."""
    pieces, cur_q, T = [], code.q, SymplecticTransform.identity(code.q, 1, code.field)
    for m in res.transcript:
        if isinstance(m, CoarseGrain):
            pieces.append((T.matrix, cur_q))
            cur_q *= res.coarse_factor
            T = SymplecticTransform.identity(cur_q, 1, code.field)
        elif isinstance(m, (ColumnOp, ColumnScale, ColumnSwap)):
            continue
        else:
            T = T.then(m)
    pieces.append((T.matrix, cur_q))
    return pieces


# -- univariate helpers -------------------------------------------------------

@given(laurent_polys(nvars=1, field=GF3, max_terms=5, exp_range=4),
       laurent_polys(nvars=1, field=GF3, max_terms=3, exp_range=3, allow_zero=False))
def test_laurent_divmod(a, b):
    q, r = laurent_divmod(a, b)
    assert q * b + r == a
    assert ldeg(r) < ldeg(b) or not r


@given(laurent_polys(nvars=1, field=GF3, max_terms=4, exp_range=3, allow_zero=False),
       laurent_polys(nvars=1, field=GF3, max_terms=4, exp_range=3))
def test_euclid_transcript_reproduces_gcd(f, g):
    d, ops = euclid_gcd(f, g)
    a, b = replay_row(ops, f, g)
    assert a == d and not b
    # d divides both
    for h in (f, g):
        if h:
            assert not laurent_divmod(h, d)[1]


def test_unit_normal():
    f = P("x^-2+2*x", GF3)
    g, u = unit_normal(f)
    assert g == P("2+x^3", GF3)
    assert g == u * f
    assert g.min_exps() == (0,)


@pytest.mark.parametrize("f, n", [("1+x", 1), ("1+x+x^2", 3), ("1+x^2", 2), ("1+x+x^3", 7),
                                  ("1+x^3", 3), ("1", 1)])
def test_period(f, n):
    assert period_of(P(f)) == n


@pytest.mark.parametrize("f, n, copies", [("1+x", 1, 1), ("1+x+x^2", 3, 2), ("1+x^2", 2, 2),
                                          ("1+x+x^3", 7, 3), ("x^-1+1", 1, 1)])
def test_ising_decompose(f, n, copies):
    dec = ising_decompose(P(f))
    assert dec.n == n and dec.ising_count == copies
    assert sum(1 for d in dec.diagonal if not d.is_unit()) == copies


def test_ising_decompose_worked_diagonal():
    # diag(1, x'+1, x'+1) after coarse-graining by 3, with x' = x^3
    dec = ising_decompose(P("1+x+x^2"))
    units = [d for d in dec.diagonal if d.is_unit()]
    others = [unit_normal(d)[0] for d in dec.diagonal if not d.is_unit()]
    assert len(units) == 1
    assert others == [P("1+x"), P("1+x")]


@given(st.integers(0, 2 ** 32))
def test_smith_diagonalize_is_equivalent(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)

    def rp():
        return LaurentPoly({(rng.randint(-1, 2),): 1 for _ in range(rng.randint(0, 3))}, 1)

    A = [[rp() for _ in range(n)] for _ in range(n)]
    D, ops = smith_diagonalize(A)
    for i in range(n):
        for j in range(n):
            if i != j:
                assert not D[i][j]
    # the determinant is preserved up to a unit
    det_a = PolyMatrix(A, 1, GF2, n).det()
    det_d = PolyMatrix(D, 1, GF2, n).det()
    if det_a:
        assert unit_normal(det_a)[0] == unit_normal(det_d)[0]
    else:
        assert not det_d


# -- the full pipeline -------------------------------------------------------

def test_worked_example():
    res = classify_1d(chain("1+x+x^2"))
    assert (res.coarse_factor, res.ising_copies, res.free_qubits) == (3, 2, 1)
    for L in (3, 6, 9):
        assert degeneracy_k(chain("1+x+x^2"), L) == 2


def test_already_diagonal_input_has_empty_prefix():
    res = classify_1d(ising1d())
    assert res.transcript == []
    assert (res.ising_copies, res.free_qubits) == (1, 0)


def test_ancilla_counts_as_free():
    res = classify_1d(tensor_ancilla(ising1d(), 1))
    assert (res.ising_copies, res.free_qubits, res.coarse_factor) == (1, 1, 1)


def test_gf3_chain():
    res = classify_1d(chain("1+x+x^2", GF3))
    # over F_3, 1+x+x^2 = (x-1)^2 divides x^3 - 1
    assert res.coarse_factor == 3
    assert res.ising_copies == 2


def test_non_1d_rejected():
    from laurentcodes.catalog import toric2d
    with pytest.raises(ClassifyError):
        classify_1d(toric2d())


def _random_case(rng):
    parts = [rng.choice(["1+x", "1+x", "1+x+x^2", "1+x^2"]) for _ in range(rng.randint(1, 2))]
    code = chain(parts[0])
    for f in parts[1:]:
        code = direct_sum(code, chain(f))
    anc = rng.randint(0, 1)
    code = tensor_ancilla(code, anc)
    return code, parts


@pytest.mark.parametrize("seed", range(10))
def test_scrambled_sums_round_trip(seed):
    rng = random.Random(seed)
    code, parts = _random_case(rng)
    expect_ising = sum(P(f).max_exps()[0] for f in parts)
    scrambled = scramble(code, rng)
    res = classify_1d(scrambled)
    assert res.ising_copies == expect_ising
    assert res.free_qubits == code.q * res.coarse_factor - expect_ising
    assert is_diagonal_form(res.final.sigma, res.final.q)
    for T, q in transcript_transforms(scrambled, res):
        assert is_symplectic(T, q)
    for m in (1, 2):
        L = res.coarse_factor * m
        assert degeneracy_k(scrambled, L) == res.ising_copies + res.unconstrained_qubits * m


def test_symplectic_smith_output_is_diagonal():
    rng = random.Random(5)
    code = scramble(direct_sum(chain("1+x"), chain("1+x+x^2")), rng, nmoves=6)
    diag, moves = symplectic_smith(code)
    assert is_diagonal_form(diag.sigma, diag.q)
    assert moves
