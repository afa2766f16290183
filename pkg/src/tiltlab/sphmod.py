"""Spherical and antispherical right modules over the extended Hecke algebra.

Both modules are induced from a character of the finite Hecke subalgebra:
the trivial character (H_u acts by v^-len(u)) gives the spherical module
with standard basis (M_x), the sign character (H_u acts by (-v)^len(u))
gives the antispherical module with basis (N_x); in both cases x runs over
the minimal coset representatives of W \\ W_ext.

Structural maps:

* ``project``  : H_{u x} |-> v^-len(u) M_x resp. (-v)^len(u) N_x,
* ``eta``      : the section M-side -> Hecke with 1 (x) H |-> KL(w0) * H,
* ``phi``      : the module morphism sending M_e to the canonical N_{t_sigma}
                 for a weight sigma with all simple pairings 1,
* ``mod_iota`` : coefficientwise sign-twisted bar M -> N.

Canonical bases are computed by the module-level descent recursion; the
projection identities from the Hecke side serve as independent checks.
"""

from __future__ import annotations

import threading
from typing import Dict, List, Mapping, Sequence, Tuple

from .laurent import ONE, V, VINV, LaurentInt
from .hecke import HeckeAlgebra, HeckeElt
from .weyl import DatumMismatch, ExtendedWeyl, NotMinimal, WextElement

_V_MINUS_VINV = V - VINV
_VINV_MINUS_V = VINV - V
_MINUS_V = LaurentInt.monomial(1, -1)


class BadSigma(ValueError):
    """The weight passed to phi does not pair to 1 with every simple coroot."""


class ParabolicElt:
    """An element of the spherical or antispherical module."""

    __slots__ = ("module", "terms")

    def __init__(self, module: "ParabolicModule", terms: Mapping[WextElement, LaurentInt]):
        self.module = module
        self.terms = {w: c for w, c in terms.items() if c}

    def __add__(self, other: "ParabolicElt") -> "ParabolicElt":
        assert self.module is other.module
        data = dict(self.terms)
        for w, c in other.terms.items():
            s = data.get(w)
            data[w] = c if s is None else s + c
        return ParabolicElt(self.module, data)

    def __sub__(self, other: "ParabolicElt") -> "ParabolicElt":
        return self + other.scale(LaurentInt.const(-1))

    def scale(self, c: LaurentInt | int) -> "ParabolicElt":
        if isinstance(c, int):
            c = LaurentInt.const(c)
        return ParabolicElt(self.module, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, h: HeckeElt) -> "ParabolicElt":
        return self.module.act(self, h)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ParabolicElt) and self.module is other.module
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, w: WextElement) -> LaurentInt:
        return self.terms.get(w, LaurentInt.zero())

    def coeffs(self) -> Dict[WextElement, LaurentInt]:
        """The stored basis coordinates (a copy)."""
        return dict(self.terms)

    def support(self) -> List[WextElement]:
        return sorted(self.terms, key=lambda w: (w.length, w.w, w.t))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        tag = "M" if self.module.side == "sph" else "N"
        parts = []
        for w in self.support():
            c = self.terms[w]
            cs = repr(c)
            if len(c.coeffs) > 1 or set(c.coeffs.values()) != {1}:
                parts.append("(%s)*%s[%r]" % (cs, tag, w))
            elif cs == "1":
                parts.append("%s[%r]" % (tag, w))
            else:
                parts.append("%s*%s[%r]" % (cs, tag, w))
        return " + ".join(parts)


def get_module(algebra: HeckeAlgebra, side: str) -> "ParabolicModule":
    """The parabolic module of the given side, one instance per algebra."""
    registry = getattr(algebra, "_parabolic_modules", None)
    if registry is None:
        registry = {}
        algebra._parabolic_modules = registry
    if side not in registry:
        registry[side] = ParabolicModule(algebra, side)
    return registry[side]


class ParabolicModule:
    """The spherical (side="sph") or antispherical (side="asph") module."""

    def __init__(self, algebra: HeckeAlgebra, side: str):
        if side not in ("sph", "asph"):
            raise ValueError("side must be 'sph' or 'asph'")
        self.algebra = algebra
        self.group = algebra.group
        self.side = side
        self._canonical_cache: Dict[WextElement, ParabolicElt] = {}
        self._lock = threading.Lock()

    # -- basis elements ------------------------------------------------------

    def zero(self) -> ParabolicElt:
        return ParabolicElt(self, {})

    def std(self, x: WextElement) -> ParabolicElt:
        if not self.group.coset_min_test(x):
            raise NotMinimal("basis symbols are indexed by minimal coset reps")
        return ParabolicElt(self, {x: ONE})

    def from_terms(self, terms: Mapping[WextElement, LaurentInt]) -> ParabolicElt:
        return ParabolicElt(self, terms)

    def _finite_char(self, length: int) -> LaurentInt:
        if self.side == "sph":
            return LaurentInt.monomial(-length)
        return LaurentInt.monomial(length, 1 if length % 2 == 0 else -1)

    # -- projection from the Hecke algebra -------------------------------------

    def project(self, h: HeckeElt) -> ParabolicElt:
        """The natural quotient map, H_{u x} -> char(u) * (basis symbol at x)."""
        G = self.group
        data: Dict[WextElement, LaurentInt] = {}
        for w, c in h.terms.items():
            best = None
            for u in range(G.datum.weyl_order):
                cand = G.mul(G.element(u, (0,) * G.datum.rank), w)
                if best is None or cand.length < best.length:
                    best = cand
            x = best
            u = G.mul(w, G.inv(x))
            assert not any(u.t)
            coef = c * self._finite_char(u.length)
            prev = data.get(x)
            data[x] = coef if prev is None else prev + coef
        return ParabolicElt(self, data)

    def lift(self, m: ParabolicElt) -> HeckeElt:
        """The coefficientwise section sending each basis symbol to H_x."""
        return self.algebra.from_terms(dict(m.terms))

    # -- the right action -------------------------------------------------------

    def _act_gen(self, m: ParabolicElt, s: WextElement) -> ParabolicElt:
        G = self.group
        data: Dict[WextElement, LaurentInt] = {}

        def bump(w, c):
            prev = data.get(w)
            data[w] = c if prev is None else prev + c

        for x, c in m.terms.items():
            xs = G.mul(x, s)
            if xs.length < x.length:
                bump(xs, c)
                bump(x, c * _VINV_MINUS_V)
            elif G.coset_min_test(xs):
                bump(xs, c)
            else:
                # xs = r x for a finite simple reflection r; apply the character
                bump(x, c * (VINV if self.side == "sph" else _MINUS_V))
        return ParabolicElt(self, data)

    def _act_omega(self, m: ParabolicElt, om: WextElement) -> ParabolicElt:
        G = self.group
        return ParabolicElt(self, {G.mul(x, om): c for x, c in m.terms.items()})

    def act(self, m: ParabolicElt, h: HeckeElt) -> ParabolicElt:
        """m * h, evaluated through a reduced factorization of each H_y."""
        if m.module is not self or h.algebra is not self.algebra:
            raise DatumMismatch("mixed module/algebra instances")
        G = self.group
        out = self.zero()
        for y, c in h.terms.items():
            om, word = G.reduced_word(y)
            cur = self._act_omega(m, om) if om != G.identity else m
            for i in word:
                cur = self._act_gen(cur, G.affine_simples[i])
            out = out + cur.scale(c)
        return out

    def bar(self, m: ParabolicElt) -> ParabolicElt:
        """The induced bar involution: project(bar(lift(m)))."""
        return self.project(self.algebra.bar(self.lift(m)))

    # -- canonical basis ---------------------------------------------------------

    def canonical(self, x: WextElement) -> ParabolicElt:
        """The unique bar-invariant element in B_x + sum_y vZ[v] B_y."""
        if not self.group.coset_min_test(x):
            raise NotMinimal("canonical basis is indexed by minimal coset reps")
        with self._lock:
            hit = self._canonical_cache.get(x)
        if hit is not None:
            return hit
        G = self.group
        if x.length == 0:
            val = self.std(x)
        else:
            # a right descent of a minimal representative stays minimal
            i = G.right_descents(x)[0]
            y = G.mul(x, G.affine_simples[i])
            assert G.coset_min_test(y)
            c = self.act(self.canonical(y), self.algebra.kl_gen(i))
            val = self._straighten(c, x)
        with self._lock:
            self._canonical_cache[x] = val
        return val

    def _straighten(self, c: ParabolicElt, top: WextElement) -> ParabolicElt:
        assert c.coefficient(top) == ONE, (c, top)
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
            c = c - self.canonical(z).scale(LaurentInt(defect))


# -- the structural maps between the two modules and the algebra -------------


def eta(m: ParabolicElt) -> HeckeElt:
    """The Hecke-valued lift of the spherical module, M_x |-> KL(w0) * H_x."""
    mod = m.module
    assert mod.side == "sph", "eta is defined on the spherical module"
    G = mod.group
    w0 = G.element(G.datum.longest_index, (0,) * G.datum.rank)
    alg = mod.algebra
    out = alg.zero()
    base = alg.kl_element(w0)
    for x, c in m.terms.items():
        out = out + alg.mul(base, alg.std(x)).scale(c)
    return out


def phi(m: ParabolicElt, sigma: Sequence[int]) -> ParabolicElt:
    """The module morphism M -> N determined by M_e |-> canonical N_{t_sigma}.

    ``sigma`` must pair to 1 with every simple coroot.
    """
    mod = m.module
    assert mod.side == "sph", "phi is defined on the spherical module"
    d = mod.group.datum
    if any(d.pair_simple(sigma, i) != 1 for i in range(d.rank)):
        raise BadSigma("sigma must satisfy <sigma, alpha^vee> = 1 for all simple alpha")
    asph = get_module(mod.algebra, "asph")
    target = asph.canonical(mod.group.translation(sigma))
    out = asph.zero()
    for x, c in m.terms.items():
        out = out + asph.act(target, mod.algebra.std(x)).scale(c)
    return out


def mod_iota(m: ParabolicElt) -> ParabolicElt:
    """The sign-twisted isomorphism between the two modules.

    Basis symbols map to basis symbols and coefficients through
    iota(v^n) = (-v)^-n; satisfies iota(m * h) = iota(m) * iota(h).
    """
    other = "asph" if m.module.side == "sph" else "sph"
    target = get_module(m.module.algebra, other)
    return ParabolicElt(target, {w: c.iota() for w, c in m.terms.items()})
