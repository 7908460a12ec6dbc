import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from laurentcodes import GF2, LaurentPoly, PolyMatrix
from laurentcodes.catalog import (
    CATALOG, catalog_get, random_commuting_code, string_family, toric2d, wen,
)
from laurentcodes.codes import (
    CNOT, CPhase, CNOTHadamard, CodeDef, CodeError, ColumnScale, Hadamard, RowOp, Sublattice,
    SwapQubits, SymplecticTransform, XPhase, apply_elementary, apply_moves, check_commuting,
    coarse_grain, direct_sum, excitation_map, is_symplectic, move_matrix, random_move,
    regular_representation, tensor_ancilla,
)
from laurentcodes.lattice import degeneracy_k
from strategies import GF3


def P(s, D=2, F=GF2):
    return LaurentPoly.parse(s, D, F)


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_codes_commute(name):
    code = catalog_get(name)
    lam = PolyMatrix.lam(code.q, code.D, code.field)
    assert (code.sigma.dagger() @ lam @ code.sigma).is_zero()
    assert excitation_map(code) @ code.sigma == PolyMatrix.zeros(code.t, code.t, code.D)


def test_anticommuting_pair_is_rejected_with_witness():
    sigma = PolyMatrix.parse([["1", "0"], ["0", "1"]], 1)
    res = check_commuting(sigma, 1)
    assert not res
    assert res.witness == (0, 1)
    assert res.value == LaurentPoly.one(1)
    with pytest.raises(CodeError, match="do not commute"):
        CodeDef("bad", 1, 1, sigma)


def test_shape_checks():
    with pytest.raises(CodeError):
        CodeDef("x", 1, 2, PolyMatrix.parse([["0"], ["1+x"]], 1))
    with pytest.raises(CodeError):
        CodeDef("x", 2, 1, PolyMatrix.parse([["0"], ["1+x"]], 1))


@pytest.mark.parametrize("name", list(CATALOG))
def test_json_roundtrip(name):
    code = catalog_get(name)
    again = CodeDef.from_json(code.to_json())
    assert again == code
    assert again.name == code.name


@pytest.mark.parametrize("mutate, msg", [
    (lambda d: d.pop("generators"), "generators"),
    (lambda d: d.update(extra=1), "extra"),
    (lambda d: d.update(dimension="2"), "dimension"),
    (lambda d: d["generators"][0].pop(), "entries"),
])
def test_json_validation(mutate, msg):
    d = toric2d().to_dict()
    mutate(d)
    with pytest.raises(CodeError, match=msg):
        CodeDef.from_dict(d)


def test_json_noncommuting_rejected():
    d = {"name": "bad", "dimension": 1, "qubits_per_site": 1, "field": 2,
         "generators": [["1", "0"], ["0", "1"]]}
    with pytest.raises(CodeError):
        CodeDef.from_json(json.dumps(d))


# -- moves -----------------------------------------------------------------

def _all_kinds(q, D, F):
    one = LaurentPoly.one(D, F)
    x = LaurentPoly.var(0, D, F)
    out = [Hadamard(1), CPhase(1, x + x.antipode()), XPhase(1, one)]
    if q > 1:
        out += [CNOT(1, 2, x + one), CNOTHadamard(2, 1, x), SwapQubits(1, 2)]
    return out


@pytest.mark.parametrize("F", [GF2, GF3], ids=["GF2", "GF3"])
@pytest.mark.parametrize("q", [1, 2, 3])
def test_each_move_is_symplectic(F, q):
    for m in _all_kinds(q, 2, F):
        assert is_symplectic(move_matrix(m, q, 2, F), q), m


def test_non_self_conjugate_phase_rejected():
    with pytest.raises(CodeError, match="self-conjugate"):
        move_matrix(CPhase(1, P("x")), 1, 2, GF2)


def test_non_symplectic_raw_row_op_rejected():
    with pytest.raises(CodeError):
        move_matrix(RowOp(1, 2, P("x")), 2, 2, GF2)


@given(st.integers(0, 2 ** 32), st.integers(1, 3), st.sampled_from([GF2, GF3]))
def test_random_move_sequences_stay_symplectic(seed, q, F):
    rng = random.Random(seed)
    T = SymplecticTransform.identity(q, 2, F)
    for _ in range(4):
        T = T.then(random_move(q, 2, rng, F))
    assert is_symplectic(T.matrix, q)
    assert len(T.provenance) == 4


@given(st.integers(0, 2 ** 32))
def test_random_codes_commute(seed):
    rng = random.Random(seed)
    code = random_commuting_code(rng.randint(1, 2), rng.randint(1, 2), rng)
    assert check_commuting(code.sigma, code.q)


# -- coarse-graining ---------------------------------------------------------

def test_sublattice_reduce_is_a_decomposition():
    lat = Sublattice.from_matrix([[1, 0], [-1, 2]])
    assert lat.index == 2
    reps = lat.representatives()
    for v in [(0, 0), (3, -5), (-2, 7), (1, 1)]:
        rep, c = lat.reduce(v)
        assert rep in reps
        back = tuple(r + sum(lat.basis[i][j] * c[j] for j in range(2)) for i, r in enumerate(rep))
        assert back == v


@given(st.integers(0, 2 ** 32))
def test_regular_representation_is_multiplicative(seed):
    rng = random.Random(seed)
    lat = Sublattice.diagonal([rng.randint(1, 3), rng.randint(1, 2)])

    def rp():
        return LaurentPoly({(rng.randint(-2, 2), rng.randint(-2, 2)): 1 for _ in range(3)}, 2)

    f, g = rp(), rp()
    n = lat.index
    A = PolyMatrix(regular_representation(f, lat), 2, GF2, n)
    B = PolyMatrix(regular_representation(g, lat), 2, GF2, n)
    C = PolyMatrix(regular_representation(f * g, lat), 2, GF2, n)
    assert A @ B == C


def test_wen_coarse_grains_to_displayed_matrix():
    # new variables x' = x y^-1, y' = y^2
    cg = coarse_grain(wen(), [[1, 0], [-1, 2]])
    assert cg.q == 2 and cg.t == 2
    assert cg.sigma == PolyMatrix.parse(
        [["1+x*y", "y+x*y"], ["1+x", "1+x*y"], ["1+x*y", "0"], ["0", "1+x*y"]], 2)


def test_wen_moves_reach_toric_code():
    cg = coarse_grain(wen(), [[1, 0], [-1, 2]])
    steps = [
        (XPhase(2, P("1")), None),  # E_{2,4}(1)
        (XPhase(1, P("1")), [["0", "y+x*y"], ["1+x", "0"], ["1+x*y", "0"], ["0", "1+x*y"]]),
        (CNOTHadamard(1, 2, P("y")), [["0", "y+x*y"], ["1+x", "0"], ["1+y", "0"], ["0", "x+x*y"]]),
        (ColumnScale(2, P("x^-1*y^-1")),
         [["0", "1+x^-1"], ["1+x", "0"], ["1+y", "0"], ["0", "1+y^-1"]]),
        (Hadamard(1), [["1+y", "0"], ["1+x", "0"], ["0", "1+x^-1"], ["0", "1+y^-1"]]),
    ]
    cur = cg
    for m, expect in steps:
        cur = apply_elementary(cur, m)
        if expect is not None:
            assert cur.sigma == PolyMatrix.parse(expect, 2), m
    for L in (2, 3, 4):
        assert degeneracy_k(cur, L) == degeneracy_k(toric2d(), L) == 2


def test_coarse_grain_identity_and_errors():
    c = toric2d()
    assert coarse_grain(c, [1, 1]) is c
    with pytest.raises(CodeError):
        coarse_grain(c, [2])
    with pytest.raises(CodeError):
        coarse_grain(c, [0, 1])


@pytest.mark.parametrize("name", ["toric2d", "newman-moore", "wen", "ising2d"])
@pytest.mark.parametrize("factors", [[2, 1], [1, 3], [2, 2]])
def test_coarse_grain_degeneracy(name, factors):
    code = catalog_get(name)
    cg = coarse_grain(code, factors)
    assert cg.q == code.q * factors[0] * factors[1]
    # a coarse lattice of size L' is an original lattice of size factor * L'
    for L in (1, 2):
        big = [f * L for f in factors]
        assert degeneracy_k(cg, [L, L]) == degeneracy_k(code, big)


def test_tensor_ancilla_and_direct_sum():
    t = toric2d()
    a = tensor_ancilla(t, 2)
    assert a.q == 4 and a.t == 4
    assert tensor_ancilla(t, 0) is t
    for L in (2, 3):
        assert degeneracy_k(a, L) == degeneracy_k(t, L)
    s = direct_sum(t, catalog_get("newman-moore"))
    assert s.q == 3
    for L in (2, 3, 4):
        nm = degeneracy_k(catalog_get("newman-moore"), L)
        assert degeneracy_k(s, L) == degeneracy_k(t, L) + nm


def test_string_family_base_case_matches_toric_code():
    sf = string_family(LaurentPoly.parse("1+x", 1))
    for L in (2, 3, 4):
        assert degeneracy_k(sf, L) == 2


def test_apply_moves_composes():
    code = toric2d()
    ms = [Hadamard(1), CNOT(1, 2, P("x")), SwapQubits(1, 2)]
    seq = code
    for m in ms:
        seq = apply_elementary(seq, m)
    assert apply_moves(code, ms) == seq
