"""Built-in example codes and random commuting code generators.

Each entry lists sigma column by column (entries X_1..X_q, Z_1..Z_q), with
``~`` meaning inverse in the notes below (e.g. ``x^-1``).
"""

from __future__ import annotations

import random
from typing import Callable

from .codes import CodeDef, CodeError, apply_to_sigma, random_move
from .field import GF2, Field
from .laurent import LaurentPoly, parse_poly
from .matrix import PolyMatrix


def _code(name: str, D: int, q: int, rows: list[list[str]], note: str,
          field: Field = GF2) -> CodeDef:
    sigma = PolyMatrix.parse(rows, D, field)
    return CodeDef(name, D, q, sigma, note)


def ising1d() -> CodeDef:
    return _code("ising1d", 1, 1, [["0"], ["1+x"]], "1D Ising chain, sigma = (0, 1+x)^T")


def ising2d() -> CodeDef:
    return _code("ising2d", 2, 1, [["0", "0"], ["1+x", "1+y"]],
                 "2D Ising model, two Z-type couplings")


def toric2d() -> CodeDef:
    return _code("toric2d", 2, 2,
                 [["1+x^-1", "0"], ["1+y^-1", "0"], ["0", "1+y"], ["0", "1+x"]],
                 "2D toric code, star and plaquette columns")


def toric3d() -> CodeDef:
    return _code("toric3d", 3, 3, [
        ["1+x^-1", "0", "0", "0"],
        ["1+y^-1", "0", "0", "0"],
        ["1+z^-1", "0", "0", "0"],
        ["0", "0", "1+z", "1+y"],
        ["0", "1+z", "0", "1+x"],
        ["0", "1+y", "1+x", "0"],
    ], "3D toric code, q = 3")


_SX4 = [
    ["1+y", "1+x", "0", "0"],
    ["1+w", "0", "0", "1+x"],
    ["1+z", "0", "1+x", "0"],
    ["0", "1+z", "1+y", "0"],
    ["0", "1+w", "0", "1+y"],
    ["0", "0", "1+w", "1+z"],
]
# listed with the antipode applied; the catalog entry undoes it
_SZ4_BAR = [
    ["0", "0", "1+w", "1+z"],
    ["0", "1+z", "1+y", "0"],
    ["0", "1+w", "0", "1+y"],
    ["1+w", "0", "0", "1+x"],
    ["1+z", "0", "1+x", "0"],
    ["1+y", "1+x", "0", "0"],
]


def toric4d_blocks() -> tuple[PolyMatrix, PolyMatrix]:
    sx = PolyMatrix.parse(_SX4, 4)
    sz = PolyMatrix.parse(_SZ4_BAR, 4).antipode()
    return sx, sz


def toric4d() -> CodeDef:
    sx, sz = toric4d_blocks()
    sigma = PolyMatrix.block_diag(sx, sz)
    return CodeDef("toric4d", 4, 6, sigma, "4D toric code, q = 6, t = 8, block diagonal")


def toric4d_boundary() -> PolyMatrix:
    """The 1 x 4 map (1+x, 1+y, 1+z, 1+w) continuing the Z sector."""
    return PolyMatrix.parse([["1+x", "1+y", "1+z", "1+w"]], 4)


def wen() -> CodeDef:
    return _code("wen", 2, 1, [["1+x+y+x*y"], ["1+x*y"]], "Wen plaquette model, XZZX-type term")


def chamon() -> CodeDef:
    return _code("chamon", 3, 1, [["x+x^-1+y+y^-1"], ["z+z^-1+y+y^-1"]], "Chamon model")


def cubic() -> CodeDef:
    return _code("cubic", 3, 2, [
        ["1+x*y+y*z+z*x", "0"],
        ["1+x+y+z", "0"],
        ["0", "1+x^-1+y^-1+z^-1"],
        ["0", "1+x^-1*y^-1+y^-1*z^-1+z^-1*x^-1"],
    ], "cubic code, q = 2")


def levin_wen() -> CodeDef:
    return _code("levin-wen", 3, 2, [
        ["1+z", "1+z", "x+y"],
        ["y+y*z", "x+x*z", "x+y"],
        ["y+z", "1+x", "1+x"],
        ["y+z", "z+x*z", "y+x*y"],
    ], "Levin-Wen fermion model, q = 2, t = 3")


# excitation map rows as usually displayed (each row shifted by a monomial)
LEVIN_WEN_EPSILON_DISPLAY = [
    ["y+z", "y+z", "y+y*z", "1+z"],
    ["z+x*z", "1+x", "x+x*z", "1+z"],
    ["y+x*y", "1+x", "x+y", "x+y"],
]
LEVIN_WEN_TORSION_DISPLAY = ["1+y", "1+x", "0"]


def newman_moore() -> CodeDef:
    return _code("newman-moore", 2, 1, [["0"], ["1+x+y"]], "Newman-Moore triangular spin model")


def string_family(p: LaurentPoly) -> CodeDef:
    """2D code whose excitation map is [[p(x), p(y), 0, 0], [0, 0, p(y~), -p(x~)]].

    ``p`` is univariate; p = 1+x gives a code equivalent to the 2D toric code.
    """
    if p.nvars != 1:
        raise CodeError("string_family takes a univariate polynomial")
    F = p.field
    px = p.substitute_monomials([(1, 0)])
    py = p.substitute_monomials([(0, 1)])
    z = LaurentPoly.zero(2, F)
    # sigma = (eps lambda^{-1})^dagger, written out column by column
    col1 = [z, z, -px.antipode(), -py.antipode()]
    col2 = [py, -px, z, z]
    sigma = PolyMatrix.from_columns([col1, col2], 4, 2, F)
    return CodeDef(f"string[{p.format()}]", 2, 2, sigma, "string-operator family")


CATALOG: dict[str, Callable[[], CodeDef]] = {
    "ising1d": ising1d,
    "ising2d": ising2d,
    "toric2d": toric2d,
    "toric3d": toric3d,
    "toric4d": toric4d,
    "wen": wen,
    "chamon": chamon,
    "cubic": cubic,
    "levin-wen": levin_wen,
    "newman-moore": newman_moore,
}


def catalog_names() -> list[str]:
    return list(CATALOG)


def catalog_get(name: str) -> CodeDef:
    try:
        return CATALOG[name]()
    except KeyError:
        raise CodeError(f"unknown catalog code {name!r}; known: {', '.join(CATALOG)}") from None


def random_diagonal_seed(D: int, q: int, rng: random.Random, field: Field = GF2,
                         max_exp: int = 1) -> CodeDef:
    """A commuting code with one Z-type column per qubit, each a random polynomial."""
    z = LaurentPoly.zero(D, field)
    cols = []
    for i in range(q):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, max_exp) for _ in range(D))
            terms[e] = rng.randrange(1, field.p)
        f = LaurentPoly(terms, D, field)
        if f.is_zero():
            f = LaurentPoly.one(D, field)
        col = [z] * (2 * q)
        col[q + i] = f
        cols.append(col)
    sigma = PolyMatrix.from_columns(cols, 2 * q, D, field)
    return CodeDef("seed", D, q, sigma)


def random_commuting_code(D: int, q: int, rng: random.Random, nmoves: int = 4,
                          field: Field = GF2) -> CodeDef:
    code = random_diagonal_seed(D, q, rng, field)
    sigma = code.sigma
    for _ in range(nmoves):
        sigma = apply_to_sigma(sigma, q, random_move(q, D, rng, field))
    return CodeDef(f"random-D{D}-q{q}", D, q, sigma)


__all__ = [
    "CATALOG", "catalog_names", "catalog_get", "ising1d", "ising2d", "toric2d", "toric3d",
    "toric4d", "toric4d_blocks", "toric4d_boundary", "wen", "chamon", "cubic", "levin_wen",
    "newman_moore", "string_family", "random_diagonal_seed", "random_commuting_code",
    "LEVIN_WEN_EPSILON_DISPLAY", "LEVIN_WEN_TORSION_DISPLAY", "parse_poly",
]
