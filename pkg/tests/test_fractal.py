from math import comb

import pytest
from hypothesis import given

from laurentcodes import LaurentPoly
from laurentcodes.catalog import chamon, cubic, newman_moore
from laurentcodes.codes import excitation_map
from laurentcodes.fractal import (
    ProcessError, build_recipe, energy_of, lex_least_term, pgm_bitmap, positivizing_map,
    separation, simulate_energy, size_of, trace_csv, truncated_charge_operator,
    verify_barrier,
)
from laurentcodes.invariants import find_fractal_generator, fractal_witness, mat_vec
from strategies import GF3, laurent_polys


def P(s, D=2):
    return LaurentPoly.parse(s, D)


def nm_witness():
    code = newman_moore()
    return code, find_fractal_generator(code)


def test_recipe_length_and_order():
    code, w = nm_witness()
    for r in range(4):
        rec = build_recipe(w.f, w.p, r, code)
        steps = list(rec.steps())
        assert len(steps) == len(rec) == 3 ** r
        assert rec.v == w.v
    # s_1 visits the shifted copies of p by absolute degree, then exponent tuple
    rec = build_recipe(w.f, w.p, 1)
    assert [e for _, e in rec.steps()] == [(0, 0), (-1, 0), (0, -1)]


@pytest.mark.parametrize("r", range(6))
def test_accumulated_operator_is_a_power(r):
    _, w = nm_witness()
    rec = build_recipe(w.f, w.p, r)
    expect = tuple((w.f ** (2 ** r - 1)) * a for a in w.p)
    assert rec.accumulated() == expect


def test_trace_starts_at_zero_and_matches_recomputation():
    code, w = nm_witness()
    rec = build_recipe(w.f, w.p, 3)
    trace = simulate_energy(rec, code, sample_every=1)
    assert trace[0] == 0
    assert len(trace) == len(rec) + 1
    final = mat_vec(excitation_map(code), rec.accumulated())
    assert trace[-1] == energy_of(final)


def test_trace_csv():
    assert trace_csv([0, 3, 2]) == "step,energy\n0,0\n1,3\n2,2\n"


@pytest.mark.parametrize("r", range(7))
def test_newman_moore_barrier(r):
    code, w = nm_witness()
    rec = build_recipe(w.f, w.p, r)
    trace = simulate_energy(rec, code)
    assert max(trace) <= 9 * (r + 1)
    assert trace[-1] == 3
    sep = separation(w.f, w.v, r)
    assert sep is not None and sep >= 2 ** r - 2


def test_chamon_barrier_constant_from_first_level():
    code = chamon()
    w = fractal_witness(code, P("1+x*y^-1", 3))
    c = max(simulate_energy(build_recipe(w.f, w.p, 0), code))
    for r in range(9):
        trace = simulate_energy(build_recipe(w.f, w.p, r), code)
        assert max(trace) <= c * (r + 1)


def test_verify_barrier_reports():
    code, w = nm_witness()
    rep = verify_barrier(code, w.f, w.p, r_max=4)
    assert (rep.e, rep.l, rep.c) == (3, 3, 9)
    assert rep.ok and rep.accumulated_ok
    assert [row.final_energy for row in rep.rows] == [3] * 5
    d = rep.to_dict()
    assert d["ok"] and len(d["rows"]) == 5


def test_verify_barrier_cubic():
    code = cubic()
    w = find_fractal_generator(code)
    assert verify_barrier(code, w.f, w.p, r_max=3).ok


def test_mismatched_v_rejected():
    code, w = nm_witness()
    with pytest.raises(ProcessError):
        verify_barrier(code, w.f, w.p, v=(P("1+x"),))


def test_build_recipe_requires_divisible_syndrome():
    code, w = nm_witness()
    with pytest.raises(ProcessError):
        build_recipe(P("1+x"), w.p, 0, code)


def test_gf2_only():
    with pytest.raises(ProcessError):
        build_recipe(LaurentPoly.parse("1+x", 1, GF3), (LaurentPoly.one(1, GF3),), 1)
    with pytest.raises(ProcessError):
        build_recipe(P("x"), (P("1"),), 1)


def test_size_of():
    assert size_of((P("1+x^3"), P("y^-2"))) == 3
    assert size_of((P("0"),)) == 0


# -- positivizing map and the truncated operator ------------------------------

@given(laurent_polys(nvars=3, max_terms=4, exp_range=2, allow_zero=False))
def test_positivizing_map_is_unitriangular_and_positive(f):
    s = lex_least_term(f)
    g = f.shift(tuple(-a for a in s))
    Z = positivizing_map(g)
    D = 3
    for i in range(D):
        assert Z[i][i] == 1
        for j in range(i + 1, D):
            assert Z[i][j] == 0
    for e in g.terms:
        assert all(sum(Z[i][j] * e[j] for j in range(D)) >= 0 for i in range(D))


def test_positivizing_map_rejects_unnormalized():
    with pytest.raises(ProcessError):
        positivizing_map(P("x^-1+y"))


def test_truncated_operator_is_stable():
    f = P("1+x+y")
    lo, hi = (-2, -2), (6, 6)
    op = truncated_charge_operator(f, (P("1"),), lo, hi)
    later = (f ** (2 ** (op.n + 2) - 1))
    kept = {e: c for e, c in later.items() if all(a <= x <= b for x, a, b in zip(e, lo, hi))}
    assert op.components[0] == LaurentPoly(kept, 2)
    # Sierpinski pattern: the box contains Pascal's triangle mod 2
    for i in range(5):
        for j in range(5 - i):
            assert op.components[0].coeff((i, j)) == comb(i + j, i) % 2


def test_truncated_operator_with_negative_exponents():
    f = P("1+x^-1+y^-1")
    op = truncated_charge_operator(f, (P("1"),), (-4, -4), (1, 1))
    assert op.unit_shift == (-1, 0)
    assert op.components[0]


def test_pgm_bitmap():
    img = pgm_bitmap(P("1+x"), (0, 0), (2, 1)).decode()
    assert img == "P2\n3 2\n1\n0 0 0\n1 1 0\n"
    with pytest.raises(ProcessError):
        pgm_bitmap(P("1+x", 3), (0, 0), (1, 1))
