"""Finite root data: Cartan matrices, weights, roots/coroots and the Weyl group.

Weights are plain integer tuples in a fixed basis of the lattice X.  With
``lattice_kind="weight"`` the basis consists of the fundamental weights, so
the pairing with the i-th simple coroot is simply the i-th coordinate and
the j-th simple root has coordinates given by the j-th column of the Cartan
matrix.  With ``lattice_kind="root"`` the basis consists of the simple roots
themselves (X is then the root lattice).  A custom lattice may be described
by giving the simple roots and coroots explicitly.

Convention: ``cartan[i][j] = <alpha_j, alpha_i^vee>``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

Weight = Tuple[int, ...]


class NotFiniteType(ValueError):
    """The given matrix is not a finite-type Cartan matrix."""


class NotDominant(ValueError):
    pass


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _mat_vec(a, v):
    n = len(a)
    return tuple(sum(a[i][k] * v[k] for k in range(n)) for i in range(n))


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _check_cartan(cartan) -> None:
    n = len(cartan)
    if n == 0 or any(len(row) != n for row in cartan):
        raise NotFiniteType("Cartan matrix must be square and nonempty")
    for i in range(n):
        if cartan[i][i] != 2:
            raise NotFiniteType("diagonal entries must equal 2")
        for j in range(n):
            if i != j:
                if cartan[i][j] > 0:
                    raise NotFiniteType("off-diagonal entries must be <= 0")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise NotFiniteType("zero pattern must be symmetric")


def _symmetrizer(cartan) -> List[Fraction]:
    """Positive d_i with d_i * a_ij = d_j * a_ji, found by graph traversal."""
    n = len(cartan)
    d: List[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if cartan[i][j] != 0 and i != j:
                    val = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        raise NotFiniteType("Cartan matrix is not symmetrizable")
    return [x for x in d]  # type: ignore[misc]


def _is_positive_definite(sym) -> bool:
    n = len(sym)
    m = [[Fraction(x) for x in row] for row in sym]
    # Fraction-exact Gaussian elimination on leading principal minors.
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


def _invert(mat) -> List[List[Fraction]]:
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class Root:
    """A root together with its coordinates in both bases and its coroot."""

    __slots__ = ("x", "rc", "cofunc")

    def __init__(self, x: Weight, rc: Tuple[int, ...], cofunc: Tuple[int, ...]):
        self.x = x          # coordinates in the chosen basis of X
        self.rc = rc        # coordinates in the simple-root basis
        self.cofunc = cofunc  # the coroot as an integer functional on X

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.rc) and any(self.rc)


class RootDatum:
    """A finite root datum with a chosen lattice basis.

    Attributes of interest: ``rank``, ``cartan``, ``simple_roots`` (columns in
    X-coordinates), ``simple_cofuncs`` (coroots as functionals on X),
    ``positive_roots`` (list of :class:`Root`), ``rho``.
    """

    def __init__(self, cartan, lattice_kind: str = "weight",
                 simple_roots=None, simple_coroots=None):
        cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        _check_cartan(cartan)
        d = _symmetrizer(cartan)
        sym = [[d[i] * cartan[i][j] for j in range(len(cartan))] for i in range(len(cartan))]
        if not _is_positive_definite(sym):
            raise NotFiniteType("symmetrized Cartan matrix is not positive definite")
        self.cartan = cartan
        self.rank = len(cartan)
        self.lattice_kind = lattice_kind
        n = self.rank

        if lattice_kind == "weight":
            self.simple_roots = tuple(tuple(cartan[i][j] for i in range(n)) for j in range(n))
            self.simple_cofuncs = tuple(tuple(int(i == k) for i in range(n)) for k in range(n))
        elif lattice_kind == "root":
            self.simple_roots = tuple(tuple(int(i == j) for i in range(n)) for j in range(n))
            self.simple_cofuncs = tuple(tuple(cartan[k][i] for i in range(n)) for k in range(n))
        elif lattice_kind == "custom":
            if simple_roots is None or simple_coroots is None:
                raise ValueError("custom lattice needs simple_roots and simple_coroots")
            self.simple_roots = tuple(tuple(int(x) for x in v) for v in simple_roots)
            self.simple_cofuncs = tuple(tuple(int(x) for x in v) for v in simple_coroots)
            for i in range(n):
                for j in range(n):
                    if sum(a * b for a, b in zip(self.simple_cofuncs[i], self.simple_roots[j])) != cartan[i][j]:
                        raise NotFiniteType("simple roots/coroots do not realize the Cartan matrix")
        else:
            raise ValueError("unknown lattice_kind %r" % lattice_kind)

        self._symmetrizer = d
        self._cartan_inv = _invert(cartan)
        # rho has all simple-coroot pairings equal to 1; in a general basis its
        # coordinates may be fractional (it need not lie in X).
        self._rho_frac = self._solve_pairings([1] * n)
        self.rho: Weight | None = None
        if all(x.denominator == 1 for x in self._rho_frac):
            self.rho = tuple(int(x) for x in self._rho_frac)

        self._simple_matrices = tuple(self._reflection_matrix(i) for i in range(n))
        self._enumerate_roots()
        self._enumerate_weyl()

    # -- basic linear algebra on the lattice ---------------------------

    def _solve_pairings(self, values) -> Tuple[Fraction, ...]:
        """A vector x (possibly fractional) with <x, alpha_i^vee> = values[i]."""
        n = self.rank
        a = [[Fraction(self.simple_cofuncs[i][j]) for j in range(n)] for i in range(n)]
        inv = _invert(a)
        return tuple(sum(inv[i][j] * values[j] for j in range(n)) for i in range(n))

    def pair(self, weight: Sequence, cofunc: Sequence[int]):
        """The pairing <weight, coroot> for a coroot given as a functional."""
        return sum(a * b for a, b in zip(cofunc, weight))

    def pair_simple(self, weight: Sequence, i: int):
        return self.pair(weight, self.simple_cofuncs[i])

    def _reflection_matrix(self, i: int):
        n = self.rank
        cols = []
        for j in range(n):
            e = [0] * n
            e[j] = 1
            p = self.simple_cofuncs[i][j]
            col = [e[k] - p * self.simple_roots[i][k] for k in range(n)]
            cols.append(col)
        return tuple(tuple(cols[j][i2] for j in range(n)) for i2 in range(n))

    def reflect_simple(self, i: int, weight):
        p = self.pair_simple(weight, i)
        return tuple(w - p * a for w, a in zip(weight, self.simple_roots[i]))

    def is_dominant(self, weight: Sequence) -> bool:
        return all(self.pair_simple(weight, i) >= 0 for i in range(self.rank))

    # -- roots ----------------------------------------------------------

    def _enumerate_roots(self) -> None:
        n = self.rank
        seen: Dict[Weight, Root] = {}
        frontier: List[Root] = []
        for j in range(n):
            rc = tuple(int(i == j) for i in range(n))
            r = Root(self.simple_roots[j], rc, self.simple_cofuncs[j])
            seen[r.x] = r
            frontier.append(r)
        while frontier:
            nxt: List[Root] = []
            for r in frontier:
                for i in range(n):
                    p = self.pair_simple(r.x, i)
                    x2 = tuple(a - p * b for a, b in zip(r.x, self.simple_roots[i]))
                    if x2 in seen:
                        continue
                    rc2 = list(r.rc)
                    rc2[i] -= sum(self.cartan[i][j] * r.rc[j] for j in range(n))
                    cof2 = self._reflect_cofunc(i, r.cofunc)
                    r2 = Root(x2, tuple(rc2), cof2)
                    seen[x2] = r2
                    nxt.append(r2)
            frontier = nxt
        self.all_roots = list(seen.values())
        self.positive_roots = [r for r in self.all_roots if r.is_positive()]
        self.positive_roots.sort(key=lambda r: (sum(r.rc), r.rc))
        self.positive_cofuncs = [r.cofunc for r in self.positive_roots]
        self._positive_x = {r.x for r in self.positive_roots}

    def _reflect_cofunc(self, i: int, cofunc: Tuple[int, ...]) -> Tuple[int, ...]:
        # <lambda, (s_i beta)^vee> = <s_i(lambda), beta^vee>
        m = self._simple_matrices[i]
        n = self.rank
        return tuple(sum(cofunc[r] * m[r][k] for r in range(n)) for k in range(n))

    def root_is_positive(self, x: Weight) -> bool:
        return tuple(x) in self._positive_x

    # -- the finite Weyl group ------------------------------------------

    def _enumerate_weyl(self) -> None:
        n = self.rank
        ident = _identity(n)
        mats = [ident]
        words: List[Tuple[int, ...]] = [()]
        index = {ident: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for wi in frontier:
                for i in range(n):
                    m2 = _mat_mul(mats[wi], self._simple_matrices[i])
                    if m2 not in index:
                        index[m2] = len(mats)
                        mats.append(m2)
                        words.append(words[wi] + (i,))
                        nxt.append(index[m2])
            frontier = nxt
        self.weyl_matrices = mats
        self.weyl_words = words
        self.weyl_index = index
        self.weyl_order = len(mats)
        self.longest_index = max(range(len(mats)), key=lambda k: len(words[k]))

    def weyl_length(self, w: int) -> int:
        return len(self.weyl_words[w])

    def weyl_act(self, w: int, weight):
        return _mat_vec(self.weyl_matrices[w], weight)

    def weyl_mul(self, w1: int, w2: int) -> int:
        return self.weyl_index[_mat_mul(self.weyl_matrices[w1], self.weyl_matrices[w2])]

    def weyl_inv(self, w: int) -> int:
        m = self.weyl_matrices[w]
        n = self.rank
        # reflections generate a finite matrix group; invert by search-free
        # transpose-in-group trick is unsound in general, so invert exactly.
        inv = _invert(m)
        mi = tuple(tuple(int(inv[i][j]) for j in range(n)) for i in range(n))
        return self.weyl_index[mi]

    def simple_weyl(self, i: int) -> int:
        return self.weyl_index[self._simple_matrices[i]]

    def finite_weyl_min_rep(self, weight) -> Tuple[int, Weight]:
        """The minimal-length w with w(weight) dominant, and that dominant weight."""
        x = tuple(weight)
        w = 0
        while True:
            for i in range(self.rank):
                if self.pair_simple(x, i) < 0:
                    x = self.reflect_simple(i, x)
                    w = self.weyl_mul(self.simple_weyl(i), w)
                    break
            else:
                return w, x

    def weyl_orbit(self, weight) -> List[Weight]:
        seen = {tuple(weight)}
        frontier = [tuple(weight)]
        while frontier:
            nxt = []
            for x in frontier:
                for i in range(self.rank):
                    y = self.reflect_simple(i, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    # -- Weyl characters --------------------------------------------------

    def _fweight(self, weight) -> Tuple:
        """Coordinates of a weight in the fundamental-weight basis."""
        return tuple(self.pair_simple(weight, i) for i in range(self.rank))

    def _form(self, x, y) -> Fraction:
        """W-invariant form, computed through fundamental-weight coordinates."""
        fx, fy = self._fweight(x), self._fweight(y)
        n = self.rank
        total = Fraction(0)
        for i in range(n):
            for j in range(n):
                total += fx[i] * self._cartan_inv[i][j] * self._symmetrizer[j] * fy[j]
        return total

    def weyl_character_weights(self, lam) -> Dict[Weight, int]:
        """Weight multiplicities of the Weyl module with highest weight lam.

        Freudenthal's recursion, run over the dominant weights below lam and
        spread over Weyl orbits.  Exact rational arithmetic throughout.
        """
        lam = tuple(lam)
        if not self.is_dominant(lam):
            raise NotDominant("highest weight must be dominant")
        rho = self._rho_frac
        lam_rho = tuple(Fraction(a) + b for a, b in zip(lam, rho))
        norm_top = self._form(lam_rho, lam_rho)

        # All lattice points lam - sum n_i alpha_i with |mu+rho| <= |lam+rho|.
        candidates = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for mu in frontier:
                for j in range(self.rank):
                    nu = tuple(a - b for a, b in zip(mu, self.simple_roots[j]))
                    if nu in candidates:
                        continue
                    nu_rho = tuple(Fraction(a) + b for a, b in zip(nu, rho))
                    if self._form(nu_rho, nu_rho) <= norm_top:
                        candidates.add(nu)
                        nxt.append(nu)
            frontier = nxt

        dominants = [mu for mu in candidates if self.is_dominant(mu)]
        # height of lam - mu orders the recursion top-down
        def height(mu):
            diff = self._fweight(tuple(a - b for a, b in zip(lam, mu)))
            rc = [sum(self._cartan_inv[i][j] * diff[j] for j in range(self.rank))
                  for i in range(self.rank)]
            return sum(rc)
        dominants.sort(key=height)

        mult: Dict[Weight, int] = {}

        def get_mult(nu) -> int:
            w, dom = self.finite_weyl_min_rep(nu)
            return mult.get(dom, 0)

        for mu in dominants:
            if mu == lam:
                mult[mu] = 1
                continue
            mu_rho = tuple(Fraction(a) + b for a, b in zip(mu, rho))
            denom = norm_top - self._form(mu_rho, mu_rho)
            total = Fraction(0)
            for root in self.positive_roots:
                k = 1
                while True:
                    nu = tuple(a + k * b for a, b in zip(mu, root.x))
                    m = get_mult(nu)
                    if m == 0:
                        nu_rho = tuple(Fraction(a) + b for a, b in zip(nu, rho))
                        if self._form(nu_rho, nu_rho) > norm_top:
                            break
                        k += 1
                        continue
                    total += 2 * m * self._form(nu, root.x)
                    k += 1
            if denom == 0:
                mult[mu] = 0
                continue
            val = total / denom
            assert val.denominator == 1
            if val:
                mult[mu] = int(val)

        out: Dict[Weight, int] = {}
        for mu, m in mult.items():
            if m <= 0:
                continue
            for nu in self.weyl_orbit(mu):
                out[nu] = m
        return out


def build_root_datum(cartan, lattice_kind: str = "weight", **kw) -> RootDatum:
    """Build and validate a root datum from a Cartan matrix."""
    return RootDatum(cartan, lattice_kind, **kw)


def root_datum_from_file(path: str) -> RootDatum:
    """Read a datum description {"cartan": [[..]], "lattice": "weight"}."""
    import json
    with open(path) as fh:
        doc = json.load(fh)
    if "cartan" not in doc:
        raise NotFiniteType("datum file lacks a cartan matrix")
    return build_root_datum(doc["cartan"], doc.get("lattice", "weight"))


CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -1), (-2, 2)),
}
