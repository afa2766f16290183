"""Exact Laurent polynomials in one variable v over the integers.

A polynomial is stored as a dict {exponent: coefficient} with no zero
coefficients, so equality is structural and hashing is cheap.  All
arithmetic uses Python integers and is exact.

Two involutions are provided besides the ring operations:

* ``bar``  : v |-> v^-1,
* ``iota`` : v^n |-> (-1)^n v^-n  (termwise sign-twisted bar).
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple


class LaurentInt:
    """An element of Z[v, v^-1] in canonical (zero-free) form."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        data: Dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, c in items:
            if c:
                data[int(e)] = data.get(int(e), 0) + int(c)
                if not data[int(e)]:
                    del data[int(e)]
        self.coeffs = data
        self._hash = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "LaurentInt":
        return LaurentInt()

    @staticmethod
    def const(n: int) -> "LaurentInt":
        return LaurentInt({0: n})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentInt":
        return LaurentInt({exp: coeff})

    # -- ring structure ----------------------------------------------

    def __add__(self, other: "LaurentInt") -> "LaurentInt":
        data = dict(self.coeffs)
        for e, c in other.coeffs.items():
            data[e] = data.get(e, 0) + c
            if not data[e]:
                del data[e]
        out = LaurentInt.__new__(LaurentInt)
        out.coeffs = data
        out._hash = None
        return out

    def __neg__(self) -> "LaurentInt":
        out = LaurentInt.__new__(LaurentInt)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        out._hash = None
        return out

    def __sub__(self, other: "LaurentInt") -> "LaurentInt":
        return self + (-other)

    def __mul__(self, other) -> "LaurentInt":
        if isinstance(other, int):
            return LaurentInt({e: c * other for e, c in self.coeffs.items()})
        data: Dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                data[e] = data.get(e, 0) + c1 * c2
        return LaurentInt(data)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        return isinstance(other, LaurentInt) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- the operations used throughout the Hecke-side code -----------

    def bar(self) -> "LaurentInt":
        """The involution v |-> v^-1."""
        return LaurentInt({-e: c for e, c in self.coeffs.items()})

    def iota(self) -> "LaurentInt":
        """The involution v^n |-> (-1)^n v^-n, applied termwise."""
        return LaurentInt({-e: (c if e % 2 == 0 else -c) for e, c in self.coeffs.items()})

    def eval_one(self) -> int:
        """Evaluate at v = 1 (sum of coefficients)."""
        return sum(self.coeffs.values())

    def coefficient(self, exp: int) -> int:
        return self.coeffs.get(exp, 0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def in_v_times_polys(self) -> bool:
        """True iff the polynomial lies in vZ[v] (all exponents >= 1)."""
        return all(e >= 1 for e in self.coeffs)

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    # -- serialization used by the table file format ------------------

    def to_dict(self) -> Dict[str, int]:
        return {str(e): self.coeffs[e] for e in sorted(self.coeffs)}

    @staticmethod
    def from_dict(d: Mapping[str, int]) -> "LaurentInt":
        return LaurentInt({int(e): int(c) for e, c in d.items()})

    # -- display -------------------------------------------------------

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
                continue
            vpow = "v" if e == 1 else ("v^-1" if e == -1 else "v^%d" % e)
            if c == 1:
                parts.append(vpow)
            elif c == -1:
                parts.append("-" + vpow)
            else:
                parts.append("%d*%s" % (c, vpow))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


ZERO = LaurentInt.zero()
ONE = LaurentInt.const(1)
V = LaurentInt.monomial(1)
VINV = LaurentInt.monomial(-1)
