"""Prime fields and small extension fields.

Elements are encoded as plain ints.  For a prime field F_p the int is the
residue itself.  For GF(p^k) the int packs the coefficients of the residue
polynomial in base p (lowest degree first), so GF(4) = F_2[w]/(w^2+w+1) has
elements 0, 1, w=2, w+1=3.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Field descriptor: characteristic p and an optional irreducible modulus.

    ``modulus`` lists coefficients of a monic irreducible polynomial over F_p,
    lowest degree first, e.g. (1, 1, 1) for w^2 + w + 1.
    """

    p: int = 2
    modulus: tuple[int, ...] | None = None
    _tables: tuple = dc_field(default=(), compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"field characteristic {self.p} is not prime")
        if self.modulus is not None:
            mod = tuple(int(c) % self.p for c in self.modulus)
            if len(mod) < 2 or mod[-1] != 1:
                raise ValueError("extension modulus must be monic of degree >= 1")
            object.__setattr__(self, "modulus", mod)
            if len(mod) == 2:
                object.__setattr__(self, "modulus", None)
                return
            if not _irreducible(mod, self.p):
                raise ValueError(f"modulus {mod} is reducible over F_{self.p}")
            object.__setattr__(self, "_tables", _build_tables(self.p, mod))

    @property
    def degree(self) -> int:
        return 1 if self.modulus is None else len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.p ** self.degree

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is None

    def __call__(self, value: int) -> "FieldElem":
        return FieldElem(self, self.from_int(value))

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F."""
        return n % self.p

    def add(self, a: int, b: int) -> int:
        if self.modulus is None:
            return (a + b) % self.p
        return self._tables[0][a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.modulus is None:
            return (-a) % self.p
        return self._tables[2][a]

    def mul(self, a: int, b: int) -> int:
        if self.modulus is None:
            return (a * b) % self.p
        return self._tables[1][a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.modulus is None:
            return pow(a, self.p - 2, self.p)
        return self._tables[3][a]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        if self.modulus is None:
            return f"Field(p={self.p})"
        return f"Field(p={self.p}, modulus={self.modulus})"


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(a % p)
        a //= p
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    n = 0
    for d in reversed(ds):
        n = n * p + d
    return n


def _polymulmod(a: list[int], b: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    k = len(mod) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for j in range(k + 1):
                prod[d - k + j] = (prod[d - k + j] - c * mod[j]) % p
    return prod[:k]


def _irreducible(mod: tuple[int, ...], p: int) -> bool:
    # brute force: no root-free factorisation needed for the tiny fields used here
    k = len(mod) - 1
    for d in range(1, k // 2 + 1):
        for n in range(p ** d):
            cand = _digits(n, p, d) + [1]
            if _polydivides(cand, list(mod), p):
                return False
    return True


def _polydivides(a: list[int], b: list[int], p: int) -> bool:
    r = b[:]
    inv = pow(a[-1], p - 2, p)
    while len(r) >= len(a) and any(r):
        if r[-1] == 0:
            r.pop()
            continue
        c = (r[-1] * inv) % p
        shift = len(r) - len(a)
        for i, ai in enumerate(a):
            r[shift + i] = (r[shift + i] - c * ai) % p
        r.pop()
    return not any(r)


@lru_cache(maxsize=None)
def _build_tables(p: int, mod: tuple[int, ...]) -> tuple:
    k = len(mod) - 1
    q = p ** k
    digits = [_digits(a, p, k) for a in range(q)]
    add = [[_undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q)]
           for a in range(q)]
    mul = [[_undigits(_polymulmod(digits[a], digits[b], mod, p), p) for b in range(q)]
           for a in range(q)]
    neg = [_undigits([(-x) % p for x in digits[a]], p) for a in range(q)]
    inv = [0] * q
    for a in range(1, q):
        for b in range(1, q):
            if mul[a][b] == 1:
                inv[a] = b
                break
    return add, mul, neg, inv


GF2 = Field(2)
GF4 = Field(2, (1, 1, 1))


@dataclass(frozen=True)
class FieldElem:
    """A field element bound to its field."""

    field: Field
    value: int

    def _coerce(self, other: "FieldElem | int") -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("mixing elements of different fields")
            return other.value
        return self.field.from_int(other)

    def __add__(self, other: "FieldElem | int") -> "FieldElem":
        return FieldElem(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other: "FieldElem | int") -> "FieldElem":
        return FieldElem(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other: "FieldElem | int") -> "FieldElem":
        return FieldElem(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other: "FieldElem | int") -> "FieldElem":
        return FieldElem(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.value))

    def __truediv__(self, other: "FieldElem | int") -> "FieldElem":
        return self * FieldElem(self.field, self._coerce(other)).inverse()

    def __pow__(self, n: int) -> "FieldElem":
        return FieldElem(self.field, self.field.pow(self.value, n))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value
