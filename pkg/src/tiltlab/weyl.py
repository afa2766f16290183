"""The extended affine Weyl group W_ext = W semidirect X.

Elements are kept in the normal form w * t_lambda (finite part on the left),
which matches the closed length formula

    len(w t_lambda) = sum_{alpha > 0, w(alpha) > 0} |<lambda, alpha^vee>|
                    + sum_{alpha > 0, w(alpha) < 0} |1 + <lambda, alpha^vee>|.

The affine subgroup W_aff = W semidirect ZR is a Coxeter group whose simple
generators are recovered abstractly as the length-one elements; the
length-zero subgroup Omega complements it, and every element factors
uniquely as omega * y with y in W_aff.

The translation pairing defaults to coroots (X a character lattice).  To
work with a cocharacter lattice, build the datum of the dual root system;
the ``pairing_side`` flag records which convention is in force.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .rootdata import NotDominant, RootDatum, Weight


class DatumMismatch(ValueError):
    pass


class NotMinimal(ValueError):
    pass


class WextElement:
    """An element w * t_lambda of the extended affine Weyl group."""

    __slots__ = ("group", "w", "t", "_len")

    def __init__(self, group: "ExtendedWeyl", w: int, t: Weight):
        self.group = group
        self.w = w
        self.t = tuple(t)
        self._len: Optional[int] = None

    def __eq__(self, other) -> bool:
        return (isinstance(other, WextElement) and self.group is other.group
                and self.w == other.w and self.t == other.t)

    def __hash__(self):
        return hash((self.w, self.t))

    def __mul__(self, other: "WextElement") -> "WextElement":
        return self.group.mul(self, other)

    def __repr__(self) -> str:
        word = self.group.datum.weyl_words[self.w]
        wpart = "*".join("s%d" % (i + 1) for i in word) if word else "e"
        if any(self.t):
            return "%s*t%s" % (wpart, list(self.t)) if word else "t%s" % (list(self.t),)
        return wpart

    @property
    def length(self) -> int:
        if self._len is None:
            self._len = self.group.wext_length(self)
        return self._len

    def inverse(self) -> "WextElement":
        return self.group.inv(self)

    def to_dict(self) -> dict:
        return {"w": [i for i in self.group.datum.weyl_words[self.w]],
                "t": [int(c) for c in self.t]}


class OmegaDecomposition:
    """x = omega * y with len(omega) = 0 and y in W_aff as a reduced word."""

    __slots__ = ("omega", "affine_part", "affine_word")

    def __init__(self, omega: WextElement, affine_part: WextElement,
                 affine_word: Tuple[int, ...]):
        self.omega = omega
        self.affine_part = affine_part
        self.affine_word = affine_word


class ExtendedWeyl:
    """Group operations, length, Bruhat order and coset combinatorics."""

    def __init__(self, datum: RootDatum, pairing_side: str = "coroot"):
        if pairing_side not in ("coroot", "root"):
            raise ValueError("pairing_side must be 'coroot' or 'root'")
        self.datum = datum
        self.pairing_side = pairing_side
        self._lock = threading.Lock()
        self._bruhat_cache: Dict[Tuple[WextElement, WextElement], bool] = {}
        self._omega_conj: Dict[WextElement, Dict[int, int]] = {}

        self.identity = WextElement(self, 0, (0,) * datum.rank)
        self.finite_simples = tuple(
            WextElement(self, datum.simple_weyl(i), (0,) * datum.rank)
            for i in range(datum.rank))
        self._find_affine_simples()
        self._find_omega()

    # -- construction of elements --------------------------------------

    def element(self, w: int, t: Sequence[int]) -> WextElement:
        return WextElement(self, w, tuple(int(c) for c in t))

    def translation(self, lam: Sequence[int]) -> WextElement:
        return WextElement(self, 0, tuple(int(c) for c in lam))

    def finite_from_word(self, word: Iterable[int]) -> WextElement:
        w = 0
        for i in word:
            w = self.datum.weyl_mul(w, self.datum.simple_weyl(i))
        return WextElement(self, w, (0,) * self.datum.rank)

    # -- group law -------------------------------------------------------

    def mul(self, x: WextElement, y: WextElement) -> WextElement:
        if x.group is not y.group or x.group is not self:
            raise DatumMismatch("elements belong to different groups")
        d = self.datum
        w = d.weyl_mul(x.w, y.w)
        lam = d.weyl_act(d.weyl_inv(y.w), x.t)
        t = tuple(a + b for a, b in zip(lam, y.t))
        return WextElement(self, w, t)

    def inv(self, x: WextElement) -> WextElement:
        d = self.datum
        wi = d.weyl_inv(x.w)
        t = tuple(-c for c in d.weyl_act(x.w, x.t))
        return WextElement(self, wi, t)

    # -- length ------------------------------------------------------------

    def wext_length(self, x: WextElement) -> int:
        d = self.datum
        total = 0
        for root in d.positive_roots:
            p = d.pair(x.t, root.cofunc)
            if d.root_is_positive(d.weyl_act(x.w, root.x)):
                total += abs(p)
            else:
                total += abs(1 + p)
        return total

    # -- affine simple generators and Omega ---------------------------------

    def _find_affine_simples(self) -> None:
        d = self.datum
        zero = (0,) * d.rank
        candidates = {WextElement(self, d.simple_weyl(i), zero) for i in range(d.rank)}
        for root in d.all_roots:
            sref = self._reflection_index(root)
            for sign in (1, -1):
                t = tuple(sign * c for c in root.x)
                candidates.add(WextElement(self, sref, t))
        found = [x for x in candidates
                 if x.length == 1 and self.in_root_lattice(x.t)]
        found.sort(key=lambda x: (x.w, x.t))
        self.affine_simples: Tuple[WextElement, ...] = tuple(found)
        self._affine_simple_index = {s: i for i, s in enumerate(found)}

    def _reflection_index(self, root) -> int:
        d = self.datum
        w = 0
        # s_beta for beta = v(alpha_i) is v s_i v^-1; recover by acting on weights
        n = d.rank
        cols = []
        for j in range(n):
            e = [0] * n
            e[j] = 1
            p = d.pair(e, root.cofunc)
            cols.append([e[k] - p * root.x[k] for k in range(n)])
        mat = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        return d.weyl_index[mat]

    def in_root_lattice(self, t: Sequence[int]) -> bool:
        d = self.datum
        fw = [d.pair_simple(t, i) for i in range(d.rank)]
        coords = [sum(Fraction(d._cartan_inv[i][j]) * fw[j] for j in range(d.rank))
                  for i in range(d.rank)]
        if not all(c.denominator == 1 for c in coords):
            return False
        rebuilt = [0] * d.rank
        for j, c in enumerate(coords):
            for k in range(d.rank):
                rebuilt[k] += int(c) * d.simple_roots[j][k]
        return tuple(rebuilt) == tuple(t)

    def in_affine(self, x: WextElement) -> bool:
        return self.in_root_lattice(x.t)

    def _find_omega(self) -> None:
        d = self.datum
        gens = [self.omega_split(self.translation(tuple(int(i == j) for i in range(d.rank)))).omega
                for j in range(d.rank)]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        self.omega_elements: Tuple[WextElement, ...] = tuple(
            sorted(seen, key=lambda x: (x.w, x.t)))
        self._omega_index = {o: i for i, o in enumerate(self.omega_elements)}

    def omega_split(self, x: WextElement) -> OmegaDecomposition:
        """The unique factorization x = omega * y with y in W_aff."""
        y = x
        left_word: List[WextElement] = []
        while y.length > 0:
            for s in self.affine_simples:
                if self.mul(s, y).length < y.length:
                    y = self.mul(s, y)
                    left_word.append(s)
                    break
            else:  # pragma: no cover - cannot happen for valid elements
                raise RuntimeError("no descent found for %r" % (y,))
        omega = y
        # x = (s_1 ... s_m) * omega; conjugate the word through omega to get
        # the left-sided normal form x = omega * y'.
        conj = self._conjugation_by(omega)
        aff_word = tuple(conj[self._affine_simple_index[s]] for s in left_word)
        affine = self.identity
        for idx in aff_word:
            affine = self.mul(affine, self.affine_simples[idx])
        return OmegaDecomposition(omega, affine, aff_word)

    def _conjugation_by(self, omega: WextElement) -> Dict[int, int]:
        """The permutation of affine simple generators s |-> omega^-1 s omega."""
        with self._lock:
            cached = self._omega_conj.get(omega)
        if cached is not None:
            return cached
        oinv = self.inv(omega)
        table = {}
        for i, s in enumerate(self.affine_simples):
            img = self.mul(self.mul(oinv, s), omega)
            table[i] = self._affine_simple_index[img]
        with self._lock:
            self._omega_conj[omega] = table
        return table

    def reduced_word(self, x: WextElement) -> Tuple[WextElement, Tuple[int, ...]]:
        """x as (omega, reduced word in affine simple generators)."""
        dec = self.omega_split(x)
        return dec.omega, dec.affine_word

    # -- Bruhat order -----------------------------------------------------

    def bruhat_leq(self, x: WextElement, y: WextElement) -> bool:
        """Bruhat order, comparable only inside a common Omega coset."""
        dx = self.omega_split(x)
        dy = self.omega_split(y)
        if dx.omega != dy.omega:
            return False
        return self._bruhat_aff(dx.affine_part, dy.affine_part)

    def _bruhat_aff(self, u: WextElement, v: WextElement) -> bool:
        if u == self.identity:
            return True
        if u.length > v.length:
            return False
        if u == v:
            return True
        key = (u, v)
        with self._lock:
            if key in self._bruhat_cache:
                return self._bruhat_cache[key]
        for s in self.affine_simples:
            sv = self.mul(s, v)
            if sv.length < v.length:
                su = self.mul(s, u)
                if su.length < u.length:
                    res = self._bruhat_aff(su, sv)
                else:
                    res = self._bruhat_aff(u, sv)
                break
        else:  # v == e, u != e
            res = False
        with self._lock:
            self._bruhat_cache[key] = res
        return res

    # -- minimal coset representatives and friends ---------------------------

    def coset_min_test(self, x: WextElement) -> bool:
        """True iff x is the minimal-length element of W * x."""
        return all(self.mul(s, x).length > x.length for s in self.finite_simples)

    def weight_to_wlambda(self, lam: Sequence[int]) -> WextElement:
        """The minimal-length element of the coset W * t_lambda."""
        d = self.datum
        t = self.translation(lam)
        best = None
        best_len = None
        ties = 0
        for w in range(d.weyl_order):
            cand = self.mul(WextElement(self, w, (0,) * d.rank), t)
            if best_len is None or cand.length < best_len:
                best, best_len, ties = cand, cand.length, 1
            elif cand.length == best_len:
                ties += 1
        assert ties == 1, "minimal coset representative must be unique"
        return best

    def right_descents(self, x: WextElement) -> List[int]:
        return [i for i, s in enumerate(self.affine_simples)
                if self.mul(x, s).length < x.length]

    def left_descents(self, x: WextElement) -> List[int]:
        return [i for i, s in enumerate(self.affine_simples)
                if self.mul(s, x).length < x.length]

    # -- dot action ---------------------------------------------------------

    def dot_p(self, x: WextElement, mu: Sequence[int], p: int) -> Weight:
        """(w t_lambda) .p mu = w(mu + p*lambda + rho) - rho."""
        d = self.datum
        rho = d._rho_frac
        v = [Fraction(m) + p * l + r for m, l, r in zip(mu, x.t, rho)]
        img = [sum(Fraction(d.weyl_matrices[x.w][i][k]) * v[k] for k in range(d.rank))
               for i in range(d.rank)]
        out = [img[i] - rho[i] for i in range(d.rank)]
        assert all(c.denominator == 1 for c in out)
        return tuple(int(c) for c in out)

    def is_restricted(self, x: WextElement, p: int) -> bool:
        """True iff x .p 0 is a restricted dominant weight.

        Requires x to be a minimal coset representative.  With p = 0 the
        stable notion is used: <x .p 0, alpha_i^vee> is affine-linear in p,
        and x counts as restricted iff it lies in [0, p) for all large p.
        """
        if not self.coset_min_test(x):
            raise NotMinimal("element is not minimal in its W-coset")
        d = self.datum
        if p > 0:
            mu = self.dot_p(x, (0,) * d.rank, p)
            return all(0 <= d.pair_simple(mu, i) < p for i in range(d.rank))
        wl = d.weyl_act(x.w, x.t)
        rho = d._rho_frac
        wrho = [sum(Fraction(d.weyl_matrices[x.w][i][k]) * rho[k] for k in range(d.rank))
                for i in range(d.rank)]
        for i in range(d.rank):
            slope = d.pair_simple(wl, i)
            const = d.pair([a - b for a, b in zip(wrho, rho)], d.simple_cofuncs[i])
            assert const.denominator == 1
            if not ((slope == 0 and const >= 0) or (slope == 1 and const < 0)):
                return False
        return True

    def longest_double_coset_rep(self, mu: Sequence[int]) -> WextElement:
        """The maximal-length element of the double coset W t_mu W."""
        d = self.datum
        if not d.is_dominant(mu):
            raise NotDominant("double-coset representative needs a dominant weight")
        seen: Dict[WextElement, None] = {}
        for u in range(d.weyl_order):
            for v in range(d.weyl_order):
                w = d.weyl_mul(u, v)
                t = d.weyl_act(d.weyl_inv(v), mu)
                seen[WextElement(self, w, t)] = None
        best = None
        ties = 0
        for x in seen:
            if best is None or x.length > best.length:
                best, ties = x, 1
            elif x.length == best.length:
                ties += 1
        assert ties == 1, "maximal double-coset element must be unique"
        return best

    # -- enumeration ----------------------------------------------------------

    def elements_up_to_length(self, bound: int, affine_only: bool = False) -> List[WextElement]:
        """All elements of length <= bound (of W_aff if affine_only)."""
        seeds = [self.identity] if affine_only else list(self.omega_elements)
        seen = set(seeds)
        frontier = list(seeds)
        while frontier:
            nxt = []
            for x in frontier:
                if x.length >= bound:
                    continue
                for s in self.affine_simples:
                    y = self.mul(x, s)
                    if y.length > x.length and y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen, key=lambda x: (x.length, x.w, x.t))

    def minimal_reps_up_to_length(self, bound: int) -> List[WextElement]:
        return [x for x in self.elements_up_to_length(bound) if self.coset_min_test(x)]

    # -- serialization ----------------------------------------------------------

    def element_to_dict(self, x: WextElement) -> dict:
        return x.to_dict()

    def element_from_dict(self, d: dict) -> WextElement:
        if "w" in d and "t" in d:
            x = self.finite_from_word(d["w"])
            return self.mul(x, self.translation(d["t"]))
        if "omega" in d and "word" in d:
            x = self.omega_elements[int(d["omega"])]
            for i in d["word"]:
                x = self.mul(x, self.affine_simples[int(i)])
            return x
        raise ValueError("unrecognized element serialization: %r" % (d,))
