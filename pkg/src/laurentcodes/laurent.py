"""Laurent polynomials over a finite field in D variables.

A polynomial is stored as a dict mapping exponent tuples (length D, signed)
to nonzero coefficient ints in the encoding of :mod:`laurentcodes.field`.
Values are immutable by convention: every operation returns a new object.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from .field import GF2, Field

Exps = tuple[int, ...]

VAR_LETTERS = ("x", "y", "z", "w")


class ParseError(ValueError):
    """Syntax error in a polynomial string; ``pos`` is the 0-based offset."""

    def __init__(self, msg: str, text: str, pos: int) -> None:
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def var_names(nvars: int) -> list[str]:
    if nvars <= len(VAR_LETTERS):
        return list(VAR_LETTERS[:nvars])
    return [f"x{i + 1}" for i in range(nvars)]


def abs_deg(e: Exps) -> int:
    return sum(a if a >= 0 else -a for a in e)


def _format_key(e: Exps) -> tuple:
    return (abs_deg(e), e)


class LaurentPoly:
    __slots__ = ("_terms", "nvars", "field", "_hash")

    def __init__(self, terms: Mapping[Exps, int] | None = None, nvars: int = 1,
                 field: Field = GF2) -> None:
        clean: dict[Exps, int] = {}
        if terms:
            p = field.p
            for e, c in terms.items():
                e = tuple(int(a) for a in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for D={nvars}")
                if field.is_prime_field:
                    c = int(c) % p
                else:
                    c = int(c)
                    if not 0 <= c < field.order:
                        raise ValueError(f"coefficient {c} not an element of {field}")
                if c:
                    clean[e] = c
        self._terms = clean
        self.nvars = nvars
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exps, int], nvars: int, field: Field) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.nvars = nvars
        obj.field = field
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, nvars: int = 1, field: Field = GF2) -> "LaurentPoly":
        return cls._raw({}, nvars, field)

    @classmethod
    def one(cls, nvars: int = 1, field: Field = GF2) -> "LaurentPoly":
        return cls._raw({(0,) * nvars: 1}, nvars, field)

    @classmethod
    def constant(cls, c: int, nvars: int = 1, field: Field = GF2) -> "LaurentPoly":
        c = field.from_int(c) if field.is_prime_field else c
        return cls({(0,) * nvars: c}, nvars, field)

    @classmethod
    def monomial(cls, e: Iterable[int], coeff: int = 1, field: Field = GF2) -> "LaurentPoly":
        e = tuple(e)
        return cls({e: coeff}, len(e), field)

    @classmethod
    def var(cls, i: int, nvars: int, field: Field = GF2) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): 1}, nvars, field)

    @classmethod
    def parse(cls, text: str, nvars: int, field: Field = GF2) -> "LaurentPoly":
        return parse_poly(text, nvars, field)

    # basic queries

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exps, int]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        """Terms in graded lexicographic order (absolute degree, then exponents)."""
        return sorted(self._terms.items(), key=lambda t: _format_key(t[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    is_unit = is_monomial

    def coeff(self, e: Iterable[int]) -> int:
        return self._terms.get(tuple(e), 0)

    def trace(self) -> int:
        """Coefficient at the identity monomial."""
        return self._terms.get((0,) * self.nvars, 0)

    def abs_degree(self) -> int:
        if not self._terms:
            raise ValueError("absolute degree of the zero polynomial is undefined")
        return max(abs_deg(e) for e in self._terms)

    def min_exps(self) -> Exps:
        return tuple(min(e[i] for e in self._terms) for i in range(self.nvars))

    def max_exps(self) -> Exps:
        return tuple(max(e[i] for e in self._terms) for i in range(self.nvars))

    def span(self) -> int:
        """Max over axes of (max exponent - min exponent); 0 for monomials."""
        if not self._terms:
            raise ValueError("span of the zero polynomial is undefined")
        lo, hi = self.min_exps(), self.max_exps()
        return max((h - l for h, l in zip(hi, lo)), default=0)

    def degree(self) -> int:
        """Univariate Euclidean degree: max exponent minus min exponent."""
        if self.nvars != 1:
            raise ValueError("degree() is only defined for D = 1")
        return self.span()

    def is_polynomial(self) -> bool:
        return all(a >= 0 for e in self._terms for a in e)

    # arithmetic

    def _check(self, other: "LaurentPoly") -> None:
        if other.nvars != self.nvars or other.field != self.field:
            raise ValueError("operands live in different rings")

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.nvars, self.field)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        F = self.field
        if F.is_prime_field:
            p = F.p
            for e, c in other._terms.items():
                v = (out.get(e, 0) + c) % p
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        else:
            for e, c in other._terms.items():
                v = F.add(out.get(e, 0), c)
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return LaurentPoly._raw(out, self.nvars, F)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        F = self.field
        return LaurentPoly._raw({e: F.neg(c) for e, c in self._terms.items()}, self.nvars, F)

    def __sub__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, int] = {}
        F = self.field
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if F.is_prime_field:
            p = F.p
            for e1, c1 in b.items():
                for e2, c2 in a.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    out[e] = (out.get(e, 0) + c1 * c2) % p
        else:
            for e1, c1 in b.items():
                for e2, c2 in a.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    out[e] = F.add(out.get(e, 0), F.mul(c1, c2))
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, self.nvars, F)

    __rmul__ = __mul__

    def scale(self, c: int) -> "LaurentPoly":
        F = self.field
        if F.is_prime_field:
            c %= F.p
        if c == 0:
            return LaurentPoly.zero(self.nvars, F)
        return LaurentPoly._raw({e: F.mul(v, c) for e, v in self._terms.items()}, self.nvars, F)

    def shift(self, m: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial x^m."""
        m = tuple(m)
        return LaurentPoly._raw({tuple(a + b for a, b in zip(e, m)): c
                                 for e, c in self._terms.items()}, self.nvars, self.field)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            return self.inverse() ** (-n)
        result = LaurentPoly.one(self.nvars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frobenius(self, k: int = 1) -> "LaurentPoly":
        """Raise to the power p^k using the Frobenius identity (prime fields only)."""
        F = self.field
        if not F.is_prime_field:
            return self ** (F.p ** k)
        q = F.p ** k
        return LaurentPoly._raw({tuple(a * q for a in e): c for e, c in self._terms.items()},
                                self.nvars, F)

    def inverse(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise ValueError("only monomials are units")
        (e, c), = self._terms.items()
        return LaurentPoly._raw({tuple(-a for a in e): self.field.inv(c)}, self.nvars, self.field)

    def antipode(self) -> "LaurentPoly":
        return LaurentPoly._raw({tuple(-a for a in e): c for e, c in self._terms.items()},
                                self.nvars, self.field)

    bar = antipode

    def is_self_conjugate(self) -> bool:
        return self == self.antipode()

    def evaluate_at_one(self) -> int:
        F = self.field
        s = 0
        for c in self._terms.values():
            s = F.add(s, c)
        return s

    def substitute_monomials(self, images: list[Exps]) -> "LaurentPoly":
        """Apply the exponent-linear map x_i -> x^{images[i]}."""
        n2 = len(images[0]) if images else self.nvars
        out: dict[Exps, int] = {}
        F = self.field
        for e, c in self._terms.items():
            new = [0] * n2
            for a, img in zip(e, images):
                if a:
                    for j, b in enumerate(img):
                        new[j] += a * b
            t = tuple(new)
            out[t] = F.add(out.get(t, 0), c)
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, n2, F)

    def normalized(self) -> tuple["LaurentPoly", Exps]:
        """Multiply by the smallest monomial making all exponents >= 0.

        Returns (polynomial, shift) with polynomial = self * x^shift.
        """
        if not self._terms:
            return self, (0,) * self.nvars
        lo = self.min_exps()
        shift = tuple(-a for a in lo)
        return self.shift(shift), shift

    def monic(self) -> "LaurentPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if not self._terms:
            return self
        _, c = self.sorted_terms()[-1]
        return self.scale(self.field.inv(c))

    def centered(self) -> "LaurentPoly":
        """Unit multiple with the smallest total absolute degree, made monic.

        Ties go to the graded-lex smallest formatting; used as a canonical
        representative of a principal ideal.
        """
        if not self._terms:
            return self
        best = None
        for e, c in self._terms.items():
            cand = self.shift(tuple(-a for a in e)).scale(self.field.inv(c))
            key = (sum(abs_deg(t) for t in cand._terms), max(abs_deg(t) for t in cand._terms),
                   [t for t, _ in cand.sorted_terms()][::-1])
            if best is None or key < best[0]:
                best = (key, cand)
        return best[1]

    # comparison / hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.nvars, self.field)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.nvars == other.nvars and self.field == other.field
                and self._terms == other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.field.p, frozenset(self._terms.items())))
        return self._hash

    # formatting

    def format(self, names: list[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or var_names(self.nvars)
        F = self.field
        parts = []
        for e, c in self.sorted_terms():
            mono = []
            for n, a in zip(names, e):
                if a == 1:
                    mono.append(n)
                elif a:
                    mono.append(f"{n}^{a}")
            if F.is_prime_field:
                cs = str(c)
            else:
                cs = f"[{c}]"
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append("*".join(mono))
            else:
                parts.append(cs + "*" + "*".join(mono))
        return "+".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r}, D={self.nvars}, p={self.field.p})"


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|\[(?P<elem>\d+)\]|(?P<name>[a-zA-Z]\d*)|(?P<op>[+\-*^]))")


def parse_poly(text: str, nvars: int, field: Field = GF2) -> LaurentPoly:
    """Parse the ASCII grammar, e.g. ``"1+x*y^-1"`` or ``"x1^2+3*x2"``.

    Terms are joined by '+' (a '-' separator is accepted as negation).
    """
    names = var_names(nvars)
    index = {n: i for i, n in enumerate(names)}
    if nvars <= len(VAR_LETTERS):
        for i in range(nvars):
            index[f"x{i + 1}"] = i
    toks: list[tuple[str, str, int]] = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character", text, pos)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    if not toks:
        raise ParseError("empty polynomial", text, 0)
    toks.append(("end", "", len(text)))
    i = 0
    terms: dict[Exps, int] = {}
    F = field

    def peek() -> tuple[str, str, int]:
        return toks[i]

    def expect_int() -> int:
        nonlocal i
        sign = 1
        kind, val, at = toks[i]
        if kind == "op" and val == "-":
            sign = -1
            i += 1
            kind, val, at = toks[i]
        if kind != "num":
            raise ParseError("expected integer exponent", text, at)
        i += 1
        return sign * int(val)

    def parse_mono(e: list[int]) -> None:
        nonlocal i
        kind, val, at = toks[i]
        if kind != "name":
            raise ParseError("expected variable", text, at)
        if val not in index:
            raise ParseError(f"variable {val!r} out of range for D={nvars}", text, at)
        i += 1
        power = 1
        if peek()[0] == "op" and peek()[1] == "^":
            i += 1
            power = expect_int()
        e[index[val]] += power

    sign = 1
    if peek()[0] == "op" and peek()[1] == "-":
        sign = -1
        i += 1
    while True:
        kind, val, at = peek()
        e = [0] * nvars
        coeff = 1
        elem = None
        if kind == "elem":  # packed extension-field element, as printed by format()
            elem = int(val)
            if not 0 <= elem < F.order:
                raise ParseError(f"[{val}] is not an element of {F}", text, at)
            i += 1
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
                parse_mono(e)
        elif kind == "num":
            coeff = int(val)
            i += 1
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
                parse_mono(e)
        elif kind == "name":
            parse_mono(e)
        else:
            raise ParseError("expected term", text, at)
        while peek()[0] == "op" and peek()[1] == "*":
            i += 1
            parse_mono(e)
        c = F.from_int(sign * coeff) if elem is None else elem
        if elem is not None and sign < 0:
            c = F.neg(c)
        t = tuple(e)
        v = F.add(terms.get(t, 0), c)
        if v:
            terms[t] = v
        else:
            terms.pop(t, None)
        kind, val, at = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = 1 if val == "+" else -1
            i += 1
            continue
        raise ParseError("expected '+' or end of input", text, at)
    return LaurentPoly._raw(terms, nvars, F)
