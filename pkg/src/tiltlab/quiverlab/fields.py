"""Exact coefficient fields: the rationals and prime fields.

A field object exposes zero/one/of_int; elements support the usual
arithmetic operators.  Rationals are plain fractions.Fraction values,
prime-field elements are ModInt instances.
"""

from __future__ import annotations

from fractions import Fraction


class _Rationals:
    name = "QQ"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def of_int(self, n: int):
        return Fraction(n)

    def __repr__(self):
        return "QQ"


QQ = _Rationals()


class ModInt:
    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def __add__(self, other):
        return ModInt(self.val + other.val, self.p)

    def __sub__(self, other):
        return ModInt(self.val - other.val, self.p)

    def __neg__(self):
        return ModInt(-self.val, self.p)

    def __mul__(self, other):
        return ModInt(self.val * other.val, self.p)

    def __truediv__(self, other):
        return self * other.inverse()

    def inverse(self):
        if not self.val:
            raise ZeroDivisionError
        return ModInt(pow(self.val, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.val == other % self.p
        return isinstance(other, ModInt) and self.val == other.val and self.p == other.p

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return bool(self.val)

    def __repr__(self):
        return "%d" % self.val


class GF:
    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError("GF needs a prime modulus")
        self.p = p
        self.name = "GF(%d)" % p

    def zero(self):
        return ModInt(0, self.p)

    def one(self):
        return ModInt(1, self.p)

    def of_int(self, n: int):
        return ModInt(n, self.p)

    def __repr__(self):
        return self.name
