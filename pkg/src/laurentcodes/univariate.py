"""Division and gcd for one-variable polynomials (nonnegative exponents).

Works over any Field, including extensions such as GF(4).
"""

from __future__ import annotations

from .laurent import LaurentPoly


def _check(f: LaurentPoly) -> None:
    if f.nvars != 1:
        raise ValueError("univariate routines need nvars = 1")
    if f and f.min_exps()[0] < 0:
        raise ValueError(f"{f.format()} has negative exponents")


def upoly_degree(f: LaurentPoly) -> int:
    if not f:
        raise ValueError("the zero polynomial has no degree")
    return f.max_exps()[0]


def leading_coeff(f: LaurentPoly) -> int:
    return f.coeff((upoly_degree(f),))


def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    _check(a)
    _check(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    F = a.field
    db = upoly_degree(b)
    inv = F.inv(leading_coeff(b))
    q = LaurentPoly.zero(1, F)
    r = a
    while r and upoly_degree(r) >= db:
        d = upoly_degree(r)
        c = F.mul(leading_coeff(r), inv)
        t = LaurentPoly.monomial((d - db,), c, F)
        q = q + t
        r = r - t * b
    return q, r


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd in F[x]; gcd(0, 0) = 0."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic() if a else a


__all__ = ["upoly_degree", "leading_coeff", "poly_divmod", "poly_gcd"]
