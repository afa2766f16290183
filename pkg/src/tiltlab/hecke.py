"""The extended affine Hecke algebra over Z[v, v^-1].

Standard basis (H_w), quadratic relation H_s^2 = (v^-1 - v) H_s + 1 for the
affine simple reflections, and H_x H_y = H_xy on length-additive products.
The Kazhdan-Lusztig element attached to w is the unique bar-invariant
element of H_w + sum_{x} vZ[v] H_x; it is computed by the descent recursion
(multiply canonical elements for a coatom and a generator, then straighten
away the bar-symmetric defects).

Also provided: the sign-twisted involution iota with iota(v^n H_w) =
(-v)^-n H_w, Bernstein elements theta_lambda = H_{t_mu} (H_{t_nu})^-1 for a
dominant decomposition lambda = mu - nu, and their weighted sums over the
weights of a representation.
"""

from __future__ import annotations

import threading
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .laurent import ONE, V, VINV, LaurentInt
from .weyl import DatumMismatch, ExtendedWeyl, WextElement

_V_MINUS_VINV = V - VINV
_VINV_MINUS_V = VINV - V


class HeckeElt:
    """A finitely supported Z[v,v^-1]-combination of standard basis symbols."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "HeckeAlgebra", terms: Mapping[WextElement, LaurentInt]):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c}

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        data = dict(self.terms)
        for w, c in other.terms.items():
            s = data.get(w)
            data[w] = c if s is None else s + c
        return HeckeElt(self.algebra, data)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + other.scale(LaurentInt.const(-1))

    def scale(self, c: LaurentInt | int) -> "HeckeElt":
        if isinstance(c, int):
            c = LaurentInt.const(c)
        return HeckeElt(self.algebra, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return self.algebra.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, HeckeElt) and self.algebra is other.algebra
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, w: WextElement) -> LaurentInt:
        return self.terms.get(w, LaurentInt.zero())

    def support(self) -> List[WextElement]:
        return sorted(self.terms, key=lambda w: (w.length, w.w, w.t))

    def bar(self) -> "HeckeElt":
        return self.algebra.bar(self)

    def iota(self) -> "HeckeElt":
        return self.algebra.iota(self)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in self.support():
            c = self.terms[w]
            cs = repr(c)
            if len(c.coeffs) > 1 or (len(c.coeffs) == 1 and set(c.coeffs.values()) != {1}):
                cs = "(%s)" % cs
                parts.append("%s*H[%r]" % (cs, w))
            elif cs == "1":
                parts.append("H[%r]" % (w,))
            else:
                parts.append("%s*H[%r]" % (cs, w))
        return " + ".join(parts)


class HeckeAlgebra:
    """Arithmetic in the extended affine Hecke algebra of a group."""

    def __init__(self, group: ExtendedWeyl):
        self.group = group
        self._kl_cache: Dict[WextElement, HeckeElt] = {}
        self._lock = threading.Lock()

    # -- constructors ----------------------------------------------------

    def zero(self) -> HeckeElt:
        return HeckeElt(self, {})

    def unit(self) -> HeckeElt:
        return HeckeElt(self, {self.group.identity: ONE})

    def std(self, w: WextElement) -> HeckeElt:
        if w.group is not self.group:
            raise DatumMismatch("element from a different group")
        return HeckeElt(self, {w: ONE})

    def from_terms(self, terms: Mapping[WextElement, LaurentInt]) -> HeckeElt:
        return HeckeElt(self, terms)

    # -- right multiplication by generators --------------------------------

    def _mul_gen(self, a: HeckeElt, s: WextElement) -> HeckeElt:
        """a * H_s for an affine simple reflection s."""
        G = self.group
        data: Dict[WextElement, LaurentInt] = {}

        def bump(w, c):
            prev = data.get(w)
            data[w] = c if prev is None else prev + c

        for w, c in a.terms.items():
            ws = G.mul(w, s)
            if ws.length > w.length:
                bump(ws, c)
            else:
                bump(ws, c)
                bump(w, c * _VINV_MINUS_V)
        return HeckeElt(self, data)

    def _mul_omega(self, a: HeckeElt, om: WextElement) -> HeckeElt:
        G = self.group
        return HeckeElt(self, {G.mul(w, om): c for w, c in a.terms.items()})

    def _mul_std(self, a: HeckeElt, y: WextElement) -> HeckeElt:
        G = self.group
        om, word = G.reduced_word(y)
        out = self._mul_omega(a, om) if om != G.identity else a
        for i in word:
            out = self._mul_gen(out, G.affine_simples[i])
        return out

    def mul(self, a: HeckeElt, b: HeckeElt) -> HeckeElt:
        if a.algebra is not b.algebra or a.algebra is not self:
            raise DatumMismatch("elements from different algebras")
        out = self.zero()
        for y, c in b.terms.items():
            out = out + self._mul_std(a, y).scale(c)
        return out

    # -- inverses, bar, iota -------------------------------------------------

    def std_inverse(self, w: WextElement) -> HeckeElt:
        """(H_w)^-1, via H_s^-1 = H_s + (v - v^-1)."""
        G = self.group
        om, word = G.reduced_word(w)
        out = self.unit()
        for i in reversed(word):
            s = G.affine_simples[i]
            out = self._mul_gen(out, s) + out.scale(_V_MINUS_VINV)
        if om != G.identity:
            out = self._mul_omega(out, G.inv(om))
        return out

    def bar(self, a: HeckeElt) -> HeckeElt:
        """The bar involution: v -> v^-1, H_w -> (H_{w^-1})^-1."""
        G = self.group
        out = self.zero()
        for w, c in a.terms.items():
            om, word = G.reduced_word(w)
            img = HeckeElt(self, {om: ONE})
            for i in word:
                s = G.affine_simples[i]
                img = self._mul_gen(img, s) + img.scale(_V_MINUS_VINV)
            out = out + img.scale(c.bar())
        return out

    def iota(self, a: HeckeElt) -> HeckeElt:
        """The ring involution with iota(v^n H_w) = (-v)^-n H_w."""
        return HeckeElt(self, {w: c.iota() for w, c in a.terms.items()})

    # -- Kazhdan-Lusztig basis ---------------------------------------------

    def kl_gen(self, i: int) -> HeckeElt:
        s = self.group.affine_simples[i]
        return HeckeElt(self, {s: ONE, self.group.identity: V})

    def kl_element(self, w: WextElement) -> HeckeElt:
        """The canonical basis element attached to w (cached)."""
        with self._lock:
            hit = self._kl_cache.get(w)
        if hit is not None:
            return hit
        G = self.group
        if w.length == 0:
            val = self.std(w)
        else:
            dec = G.omega_split(w)
            if dec.omega != G.identity:
                val = self._mul_omega_left(dec.omega, self.kl_element(dec.affine_part))
            else:
                i = G.right_descents(w)[0]
                s = G.affine_simples[i]
                y = G.mul(w, s)
                c = self.mul(self.kl_element(y), self.kl_gen(i))
                val = self._straighten(c, w)
        with self._lock:
            self._kl_cache[w] = val
        return val

    def _mul_omega_left(self, om: WextElement, a: HeckeElt) -> HeckeElt:
        G = self.group
        return HeckeElt(self, {G.mul(om, w): c for w, c in a.terms.items()})

    def _straighten(self, c: HeckeElt, top: WextElement) -> HeckeElt:
        """Subtract bar-symmetric defects d * KL(z) until all off-top
        coefficients lie in vZ[v].  Assumes c is bar-invariant with
        unitriangular top coefficient."""
        assert c.coefficient(top) == ONE
        while True:
            bad = [w for w, p in c.terms.items()
                   if w != top and not p.in_v_times_polys()]
            if not bad:
                return c
            z = max(bad, key=lambda w: w.length)
            p = c.terms[z]
            defect = {0: p.coefficient(0)}
            for e, coef in p.coeffs.items():
                if e < 0:
                    defect[e] = coef
                    defect[-e] = defect.get(-e, 0) + coef
            d = LaurentInt(defect)
            c = c - self.kl_element(z).scale(d)

    def kl_by_bar_solve(self, w: WextElement, universe: Sequence[WextElement]) -> HeckeElt:
        """Independent computation of the canonical element by solving the
        bar-invariance equations over a finite Bruhat-closed universe.

        Used as a cross-check oracle: it shares no code with the descent
        recursion beyond the bar involution itself.
        """
        G = self.group
        below = [x for x in universe if G.bruhat_leq(x, w)]
        below.sort(key=lambda x: -x.length)
        # r[x] = coefficient of H_x in bar(H_y), per y
        bar_rows = {y: self.bar(self.std(y)) for y in below}
        coeffs: Dict[WextElement, LaurentInt] = {w: ONE}
        for x in below:
            if x == w:
                continue
            rhs = LaurentInt.zero()
            for y, py in coeffs.items():
                if y == x:
                    continue
                rhs = rhs + py.bar() * bar_rows[y].coefficient(x)
            # bar-invariance reads p_x = bar(p_x) r_{x,x} + rhs with
            # r_{x,x} = 1, so p_x - bar(p_x) = rhs and p_x is the
            # positive-exponent part of rhs (p_x must lie in vZ[v]).
            assert bar_rows[x].coefficient(x) == ONE
            p = LaurentInt({e: c for e, c in rhs.coeffs.items() if e > 0})
            assert p - p.bar() == rhs, "bar system inconsistent"
            if p:
                coeffs[x] = p
        return HeckeElt(self, coeffs)

    # -- Bernstein elements ---------------------------------------------------

    def _strictly_dominant(self) -> Tuple[int, ...]:
        d = self.group.datum
        if d.rho is not None and d.is_dominant(d.rho):
            return d.rho
        # small search for a vector with all simple pairings >= 1
        from itertools import product
        for radius in range(1, 5):
            for cand in product(range(-radius, radius + 1), repeat=d.rank):
                if all(d.pair_simple(cand, i) >= 1 for i in range(d.rank)):
                    return tuple(cand)
        raise ValueError("no strictly dominant vector found in the lattice")

    def _dominant_decomposition(self, lam: Sequence[int], pad: int = 0):
        d = self.group.datum
        delta = self._strictly_dominant()
        k = pad
        for i in range(d.rank):
            p = d.pair_simple(lam, i)
            q = d.pair_simple(delta, i)
            if p < 0:
                need = (-p + q - 1) // q
                k = max(k, need + pad)
        nu = tuple(k * c for c in delta)
        mu = tuple(a + b for a, b in zip(lam, nu))
        return mu, nu

    def bernstein(self, lam: Sequence[int]) -> HeckeElt:
        """theta_lambda = H_{t_mu} (H_{t_nu})^-1 for lambda = mu - nu dominant.

        Independence of the decomposition is asserted on a second choice.
        """
        G = self.group
        mu, nu = self._dominant_decomposition(lam)
        out = self.mul(self.std(G.translation(mu)), self.std_inverse(G.translation(nu)))
        mu2, nu2 = self._dominant_decomposition(lam, pad=1)
        alt = self.mul(self.std(G.translation(mu2)), self.std_inverse(G.translation(nu2)))
        assert out == alt, "Bernstein element depends on the decomposition"
        return out

    def theta_char(self, weights) -> HeckeElt:
        """Sum of mult * theta_lambda over a weight multiset.

        ``weights`` is a mapping weight -> multiplicity or an iterable of
        (weight, multiplicity) pairs.
        """
        items = weights.items() if isinstance(weights, Mapping) else weights
        out = self.zero()
        for lam, m in items:
            if m:
                out = out + self.bernstein(lam).scale(int(m))
        return out
