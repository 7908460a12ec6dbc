import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from laurentcodes import GF4, LaurentPoly
from laurentcodes.catalog import catalog_get, ising1d, random_commuting_code, toric2d
from laurentcodes.lattice import (
    CrossCheckError, LatticeError, LatticeLimitExceeded, brute_force_group_order, check_complex,
    cubic_closed_form, degeneracy, degeneracy_k, instantiate, rank_gf2, rank_mod_p,
)
from laurentcodes.univariate import poly_divmod, poly_gcd
from strategies import GF3, GF5


def dense_rank_mod_p(M, p):
    """Row reduction on a dense matrix, written independently of the sparse routines."""
    M = [list(r) for r in M]
    rank, rows = 0, len(M)
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if M[i][c] % p), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        for i in range(rows):
            if i != rank and M[i][c] % p:
                k = M[i][c] * inv % p
                M[i] = [(a - k * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


@given(st.lists(st.integers(0, 2 ** 12 - 1), max_size=14))
def test_rank_gf2_matches_dense(cols):
    M = [[(c >> r) & 1 for c in cols] for r in range(12)]
    assert rank_gf2(cols) == dense_rank_mod_p(M, 2)


@given(st.sampled_from([3, 5, 7]),
       st.lists(st.lists(st.integers(0, 6), min_size=6, max_size=6), max_size=8))
def test_rank_mod_p_matches_dense(p, cols):
    sparse = [{r: v % p for r, v in enumerate(c) if v % p} for c in cols]
    M = [[c[r] % p for c in cols] for r in range(6)] if cols else []
    assert rank_mod_p(sparse, p) == dense_rank_mod_p(M, p)


def test_instance_layout():
    inst = instantiate(ising1d(), 3)
    assert inst.S == 3
    assert inst.sigma_shape() == (6, 3)
    # generator 0 at site 0 is Z_0 Z_1: rows q*S + 0 and q*S + 1
    assert inst.dense()[3][0] == 1 and inst.dense()[4][0] == 1
    assert check_complex(inst)


@pytest.mark.parametrize("name", ["toric2d", "levin-wen", "cubic"])
def test_epsilon_annihilates_sigma_on_lattice(name):
    assert check_complex(instantiate(catalog_get(name), 2))


def test_errors():
    with pytest.raises(LatticeError):
        instantiate(toric2d(), [2])
    with pytest.raises(LatticeError):
        instantiate(toric2d(), [0, 2])
    with pytest.raises(LatticeLimitExceeded):
        instantiate(toric2d(), 50, cell_limit=1000)
    with pytest.raises(LatticeLimitExceeded):
        brute_force_group_order(toric2d(), 4, bound=8)


@pytest.mark.parametrize("L", [2, 3, 4, 5, 6])
def test_toric2d(L):
    res = degeneracy(toric2d(), L)
    assert res.k == 2 and res.dimK == 4
    assert res.to_dict()["sizes"] == [L, L]


@pytest.mark.parametrize("L, k", [(1, 2), (2, 6), (3, 2), (4, 14), (5, 2), (7, 2), (8, 30)])
def test_cubic_against_closed_form(L, k):
    assert cubic_closed_form(L) == k
    if L <= 5:
        assert degeneracy_k(catalog_get("cubic"), L) == k


def test_cubic_closed_form_values():
    assert cubic_closed_form(15) == 50
    assert cubic_closed_form(3) == 2
    with pytest.raises(LatticeError):
        cubic_closed_form(0)


@pytest.mark.parametrize("sizes, k", [((2, 2, 2), 8), ((4, 2, 2), 8), ((2, 4, 2), 8)])
def test_chamon(sizes, k):
    assert degeneracy_k(catalog_get("chamon"), sizes) == k


@pytest.mark.parametrize("name", ["toric2d", "ising1d", "ising2d", "newman-moore", "wen",
                                  "levin-wen", "chamon"])
def test_brute_force_agrees(name):
    code = catalog_get(name)
    for L in (1, 2):
        if code.t * L ** code.D <= 16:
            assert brute_force_group_order(code, L) == degeneracy_k(code, L)


@pytest.mark.parametrize("F", [GF3, GF5], ids=["GF3", "GF5"])
@pytest.mark.parametrize("seed", range(4))
def test_odd_characteristic_oracle(F, seed):
    rng = random.Random(seed)
    code = random_commuting_code(1, rng.randint(1, 2), rng, field=F)
    for L in (1, 2, 3):
        if code.t * L <= 6:
            assert brute_force_group_order(code, L) == degeneracy_k(code, L)


def test_elapsed_is_recorded():
    res = degeneracy(toric2d(), 2)
    assert res.elapsed_ms >= 0
    assert res.method == "rank"


def test_cross_check_error_is_an_assertion():
    assert issubclass(CrossCheckError, AssertionError)


# -- univariate gcd over GF(4) ------------------------------------------------

def test_gf4_gcd():
    x = LaurentPoly.var(0, 1, GF4)
    one = LaurentPoly.one(1, GF4)
    w = one.scale(2)
    f = (x + w) * (x + one)
    g = (x + w) * (x + w)
    assert poly_gcd(f, g) == x + w
    q, r = poly_divmod(f, x + one)
    assert q == x + w and not r
