"""Graded path algebras with homogeneous relations.

A quiver is a vertex list plus named arrows; paths compose right-to-left
(like maps: the path "a*b" applies b first).  The algebra is graded by path
length, with the vertex idempotents in degree 0 and every arrow in degree 1.
Per degree we keep the monomial paths, an echelon basis of the degree-n
piece of the relation ideal, and the surviving coset basis of A_n.

Relations are entered as strings such as "a*b" or "x*y + y*x" and must be
homogeneous of degree >= 2.

``quadratic_dual`` realizes the dual of a quadratic algebra on the opposite
quiver: the pairing puts the dual path x*.y* against the reversed path y.x,
so that the annihilator of  k{a*b}  in the two-vertex cycle example is
spanned by  a*.b*  (the worked example in the docstring of
:func:`quadratic_dual`).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .fields import QQ


class InhomogeneousRelation(ValueError):
    pass


class NotQuadratic(ValueError):
    pass


class Arrow:
    __slots__ = ("name", "src", "tgt")

    def __init__(self, name: str, src, tgt):
        self.name = name
        self.src = src
        self.tgt = tgt

    def __repr__(self):
        return "%s:%s->%s" % (self.name, self.src, self.tgt)


class Path:
    """A monomial path: arrows listed left-to-right in composition order
    (the rightmost arrow is applied first).  Degree-0 paths are the vertex
    idempotents, with an empty arrow tuple."""

    __slots__ = ("arrows", "src", "tgt")

    def __init__(self, arrows: Tuple[str, ...], src, tgt):
        self.arrows = arrows
        self.src = src
        self.tgt = tgt

    def __eq__(self, other):
        return (isinstance(other, Path) and self.arrows == other.arrows
                and self.src == other.src)

    def __hash__(self):
        return hash((self.arrows, self.src))

    def __repr__(self):
        return "*".join(self.arrows) if self.arrows else "e_%s" % (self.src,)

    @property
    def degree(self) -> int:
        return len(self.arrows)


def parse_relation(text: str, arrows: Dict[str, Arrow], field):
    """Parse a linear combination of paths, e.g. "a*b - 2*b*a"."""
    terms = []
    expr = text.replace("-", "+-").split("+")
    for raw in expr:
        raw = raw.strip()
        if not raw:
            continue
        sign = field.one()
        if raw.startswith("-"):
            sign = -field.one()
            raw = raw[1:].strip()
        factors = [f.strip() for f in raw.split("*") if f.strip()]
        coeff = sign
        names: List[str] = []
        for f in factors:
            if f.lstrip("-").isdigit():
                coeff = coeff * field.of_int(int(f))
            elif "/" in f and all(part.isdigit() for part in f.split("/")):
                num, den = f.split("/")
                coeff = coeff * field.of_int(int(num)) / field.of_int(int(den))
            else:
                if f not in arrows:
                    raise InhomogeneousRelation("unknown arrow %r in %r" % (f, text))
                names.append(f)
        if not names:
            raise InhomogeneousRelation("relation term without a path in %r" % text)
        for left, right in zip(names, names[1:]):
            if arrows[left].src != arrows[right].tgt:
                raise InhomogeneousRelation(
                    "non-composable product %s*%s in %r" % (left, right, text))
        path = Path(tuple(names), arrows[names[-1]].src, arrows[names[0]].tgt)
        terms.append((coeff, path))
    if not terms:
        raise InhomogeneousRelation("empty relation %r" % text)
    degrees = {p.degree for _, p in terms}
    if len(degrees) != 1 or min(degrees) < 2:
        raise InhomogeneousRelation(
            "relation %r must be homogeneous of degree >= 2" % text)
    return terms


class GradedAlgebra:
    """A path algebra modulo homogeneous relations, presented per degree."""

    def __init__(self, vertices: Sequence, arrows: Sequence[Tuple[str, object, object]],
                 relations: Sequence[str], field=QQ, degree_bound: int = 8,
                 name: str = ""):
        self.vertices = list(vertices)
        self.arrows: Dict[str, Arrow] = {}
        for nm, src, tgt in arrows:
            if nm in self.arrows:
                raise ValueError("duplicate arrow name %r" % nm)
            if src not in self.vertices or tgt not in self.vertices:
                raise ValueError("arrow %r uses an unknown vertex" % nm)
            self.arrows[nm] = Arrow(nm, src, tgt)
        self.field = field
        self.degree_bound = degree_bound
        self.name = name
        self.relation_strings = list(relations)
        self.relations = [parse_relation(r, self.arrows, field) for r in relations]

        self._paths: List[List[Path]] = []     # all monomial paths per degree
        self._ideal_rows: List[List[List]] = []  # echelon rows per degree
        self._pivots: List[List[int]] = []
        self._basis: List[List[Path]] = []     # surviving coset basis per degree
        self.top_degree: Optional[int] = None  # first degree with A_d = 0
        self._build()

    # -- construction -----------------------------------------------------

    def _build(self) -> None:
        f = self.field
        paths0 = [Path((), v, v) for v in self.vertices]
        self._paths.append(paths0)
        self._ideal_rows.append([])
        self._pivots.append([])
        self._basis.append(list(paths0))

        rel_by_degree: Dict[int, List] = {}
        for rel in self.relations:
            rel_by_degree.setdefault(rel[0][1].degree, []).append(rel)

        for n in range(1, self.degree_bound + 1):
            prev = self._paths[n - 1]
            paths = []
            for p in prev:
                for a in self.arrows.values():
                    if a.src == p.tgt:
                        paths.append(Path((a.name,) + p.arrows, p.src, a.tgt))
            self._paths.append(paths)
            index = {p: i for i, p in enumerate(paths)}
            ech: List[List] = []
            piv: List[int] = []
            # ideal propagation: arrow * J_{n-1}, J_{n-1} * arrow, new relations
            prev_rows = self._ideal_rows[n - 1]
            prev_paths = self._paths[n - 1]
            for row in prev_rows:
                for a in self.arrows.values():
                    # left multiply
                    vec = [f.zero() for _ in paths]
                    ok = False
                    for j, c in enumerate(row):
                        if not c:
                            continue
                        q = prev_paths[j]
                        if a.src == q.tgt:
                            newp = Path((a.name,) + q.arrows, q.src, a.tgt)
                            vec[index[newp]] = vec[index[newp]] + c
                            ok = True
                    if ok:
                        linalg.echelon_insert(f, ech, piv, vec)
                    # right multiply
                    vec = [f.zero() for _ in paths]
                    ok = False
                    for j, c in enumerate(row):
                        if not c:
                            continue
                        q = prev_paths[j]
                        if q.src == a.tgt:
                            newp = Path(q.arrows + (a.name,), a.src, q.tgt)
                            vec[index[newp]] = vec[index[newp]] + c
                            ok = True
                    if ok:
                        linalg.echelon_insert(f, ech, piv, vec)
            for rel in rel_by_degree.get(n, []):
                vec = [f.zero() for _ in paths]
                for c, p in rel:
                    vec[index[p]] = vec[index[p]] + c
                linalg.echelon_insert(f, ech, piv, vec)
            self._ideal_rows.append(ech)
            self._pivots.append(piv)
            pivset = set(piv)
            basis = [p for i, p in enumerate(paths) if i not in pivset]
            self._basis.append(basis)
            if not basis and self.top_degree is None:
                self.top_degree = n
                break
        while len(self._basis) <= self.degree_bound:
            if self.top_degree is None:
                break
            self._paths.append([])
            self._ideal_rows.append([])
            self._pivots.append([])
            self._basis.append([])

    @property
    def is_finite_dimensional(self) -> bool:
        return self.top_degree is not None

    def max_degree(self) -> int:
        """Largest degree with a computed (possibly zero) basis."""
        return len(self._basis) - 1

    def dims(self, n: int) -> int:
        if n < 0:
            return 0
        if n >= len(self._basis):
            if self.is_finite_dimensional:
                return 0
            raise BoundError(n, self.degree_bound)
        return len(self._basis[n])

    def total_dimension(self) -> Optional[int]:
        if not self.is_finite_dimensional:
            return None
        return sum(len(b) for b in self._basis)

    def basis(self, n: int) -> List[Path]:
        if n < 0:
            return []
        if n >= len(self._basis):
            if self.is_finite_dimensional:
                return []
            raise BoundError(n, self.degree_bound)
        return self._basis[n]

    def basis_paths(self, src, tgt, n: int) -> List[Path]:
        """Basis of e_tgt A_n e_src (paths src -> tgt surviving in degree n)."""
        return [p for p in self.basis(n) if p.src == src and p.tgt == tgt]

    # -- normal form -----------------------------------------------------------

    def reduce(self, combo: Dict[Path, object]) -> Dict[Path, object]:
        """Normal form of a path combination against the ideal echelon rows."""
        out: Dict[Path, object] = {}
        by_degree: Dict[int, Dict[Path, object]] = {}
        for p, c in combo.items():
            by_degree.setdefault(p.degree, {})[p] = c
        f = self.field
        for n, part in by_degree.items():
            if n >= len(self._paths):
                if self.is_finite_dimensional:
                    continue
                raise BoundError(n, self.degree_bound)
            paths = self._paths[n]
            index = {p: i for i, p in enumerate(paths)}
            vec = [f.zero() for _ in paths]
            for p, c in part.items():
                vec[index[p]] = vec[index[p]] + c
            for row, pc in zip(self._ideal_rows[n], self._pivots[n]):
                if vec[pc]:
                    fcoef = vec[pc]
                    vec = [x - fcoef * y for x, y in zip(vec, row)]
            for i, c in enumerate(vec):
                if c:
                    out[paths[i]] = out.get(paths[i], f.zero()) + c
        return {p: c for p, c in out.items() if c}

    def mul_paths(self, p: Path, q: Path) -> Dict[Path, object]:
        """Normal form of the composition p o q (q applied first)."""
        if p.src != q.tgt:
            return {}
        prod = Path(p.arrows + q.arrows, q.src, p.tgt)
        return self.reduce({prod: self.field.one()})

    def arrow_on_basis(self, a_name: str, n: int) -> Dict[Path, Dict[Path, object]]:
        """For each basis path q of degree n with src(a) == tgt(q), the normal
        form of a o q expressed over the degree-(n+1) basis."""
        a = self.arrows[a_name]
        out = {}
        for q in self.basis(n):
            if q.tgt != a.src:
                continue
            prod = Path((a_name,) + q.arrows, q.src, a.tgt)
            out[q] = self.reduce({prod: self.field.one()})
        return out

    # -- comparison helpers ----------------------------------------------------

    def graded_dim_signature(self, upto: Optional[int] = None):
        upto = self.max_degree() if upto is None else min(upto, self.max_degree())
        sig = {}
        for n in range(upto + 1):
            for i in self.vertices:
                for j in self.vertices:
                    d = len(self.basis_paths(j, i, n))
                    if d:
                        sig[(n, i, j)] = d
        return sig

    def __repr__(self):
        nm = self.name or "GradedAlgebra"
        dims = [self.dims(n) for n in range(min(self.max_degree(), 6) + 1)]
        return "%s(dims=%s%s)" % (nm, dims, "" if self.is_finite_dimensional else "...")


class BoundError(Exception):
    def __init__(self, degree, bound):
        super().__init__("degree %d exceeds computed bound %d" % (degree, bound))
        self.degree = degree
        self.bound = bound


def build_algebra(quiver, relations: Sequence[str], field=QQ,
                  degree_bound: int = 8, name: str = "") -> GradedAlgebra:
    """Build an algebra from quiver data {vertices: [...], arrows: [{name, from, to}]}."""
    if isinstance(quiver, dict):
        vertices = quiver["vertices"]
        arrows = [(a["name"], a["from"], a["to"]) for a in quiver["arrows"]]
    else:
        vertices, arrows = quiver
    return GradedAlgebra(vertices, arrows, relations, field, degree_bound, name)


# -- presets -----------------------------------------------------------------

_TWO_CYCLE = {"vertices": [1, 2],
              "arrows": [{"name": "a", "from": 1, "to": 2},
                         {"name": "b", "from": 2, "to": 1}]}
_TWO_CYCLE_STAR = {"vertices": [1, 2],
                   "arrows": [{"name": "bs", "from": 1, "to": 2},
                              {"name": "as", "from": 2, "to": 1}]}
_WEDGE = {"vertices": [1],
          "arrows": [{"name": "x", "from": 1, "to": 1},
                     {"name": "y", "from": 1, "to": 1}]}

PRESETS = {
    "R": (_TWO_CYCLE, []),
    "Rstar": (_TWO_CYCLE_STAR, []),
    "R_ab": (_TWO_CYCLE, ["a*b"]),
    "R_ab_ba": (_TWO_CYCLE, ["a*b", "b*a"]),
    "ext2": (_WEDGE, ["x*x", "y*y", "x*y + y*x"]),
}


def preset_algebra(name: str, field=QQ, degree_bound: int = 8) -> GradedAlgebra:
    if name not in PRESETS:
        raise KeyError("unknown preset %r (have %s)" % (name, sorted(PRESETS)))
    quiver, rels = PRESETS[name]
    return build_algebra(quiver, rels, field, degree_bound, name=name)


# -- quadratic duality -----------------------------------------------------------


def quadratic_dual(algebra: GradedAlgebra, name: str = "") -> GradedAlgebra:
    """The quadratic dual on the opposite quiver.

    Dual arrows are named with an "s" suffix (a -> as) and reverse
    direction.  The pairing puts the dual path xs*ys against the reversed
    original path y*x: <xs*ys, u*w> = [x == w][y == u].

    Worked example (two-vertex cycle, arrows a: 1->2, b: 2->1, relation a*b):
    the free degree-2 paths are a*b (a loop at 2) and b*a (a loop at 1);
    their dual partners are bs*as and as*bs.  The annihilator of k{a*b} is
    then spanned by as*bs, giving the dual algebra with relation as*bs.
    """
    if any(rel[0][1].degree != 2 for rel in algebra.relations):
        raise NotQuadratic("quadratic dual needs relations of degree exactly 2")
    f = algebra.field
    dual_arrows = [(a.name + "s", a.tgt, a.src) for a in algebra.arrows.values()]
    # free degree-2 paths on both sides
    orig_paths = algebra._paths[2] if len(algebra._paths) > 2 else _free_paths2(algebra)
    # relation space inside the free degree-2 span
    index = {p: i for i, p in enumerate(orig_paths)}
    rows = []
    for rel in algebra.relations:
        vec = [f.zero() for _ in orig_paths]
        for c, p in rel:
            vec[index[p]] = vec[index[p]] + c
        rows.append(vec)
    rel_rows, _ = linalg.rref(f, rows) if rows else ([], [])

    # dual degree-2 paths: xs*ys is composable iff y*x is; enumerate them as
    # the partners of the composable original paths
    dual_paths = []
    for p in orig_paths:
        u, w = p.arrows
        dual_paths.append((w + "s", u + "s"))

    def pairing(dp, p):
        x = dp[0][:-1]
        y = dp[1][:-1]
        u, w = p.arrows
        return f.one() if (x == w and y == u) else f.zero()

    # annihilator of the relation row space
    ann_rows = []
    if rel_rows:
        mat = [[pairing(dp, orig_paths[j]) for dp in dual_paths] for j in range(len(orig_paths))]
        # coefficients c with sum_dp c_dp <dp, r> = 0 for all relation rows r
        system = []
        for r in rel_rows:
            system.append([linalg.sum_list(f, [r[j] * mat[j][k] for j in range(len(orig_paths))])
                           for k in range(len(dual_paths))])
        ann = linalg.nullspace(f, system, len(dual_paths))
    else:
        ann = [linalg.unit_vector(f, len(dual_paths), k) for k in range(len(dual_paths))]

    rel_strings = []
    for v in ann:
        terms = []
        for k, c in enumerate(v):
            if not c:
                continue
            x, y = dual_paths[k]
            cs = "" if c == f.one() else "%s*" % (c,)
            terms.append("%s%s*%s" % (cs, x, y))
        if terms:
            rel_strings.append(" + ".join(terms))
    dual_name = name or (algebra.name + "!" if algebra.name else "dual")
    return GradedAlgebra(algebra.vertices, dual_arrows, rel_strings, f,
                         algebra.degree_bound, name=dual_name)


def _free_paths2(algebra: GradedAlgebra) -> List[Path]:
    out = []
    for b in algebra.arrows.values():
        for a in algebra.arrows.values():
            if a.src == b.tgt:
                out.append(Path((a.name, b.name), b.src, a.tgt))
    return out


def renaming_isomorphic(a: GradedAlgebra, b: GradedAlgebra,
                        upto: Optional[int] = None):
    """Search for an isomorphism given by a vertex bijection and an arrow
    bijection (no scalar mixing).  Returns the (vertex_map, arrow_map) pair
    or None.  Compares relation spaces exactly in degree 2 and graded
    dimensions in all computed degrees.
    """
    import itertools
    if len(a.vertices) != len(b.vertices) or len(a.arrows) != len(b.arrows):
        return None
    f = a.field
    a_arrows = list(a.arrows.values())
    b_arrows = list(b.arrows.values())
    for vperm in itertools.permutations(b.vertices):
        vmap = dict(zip(a.vertices, vperm))
        candidates = []
        for aa in a_arrows:
            fits = [bb.name for bb in b_arrows
                    if vmap[aa.src] == bb.src and vmap[aa.tgt] == bb.tgt]
            candidates.append(fits)
        for choice in itertools.product(*candidates):
            if len(set(choice)) != len(choice):
                continue
            amap = {aa.name: nm for aa, nm in zip(a_arrows, choice)}
            if _renaming_works(a, b, vmap, amap, upto):
                return vmap, amap
    return None


def _renaming_works(a: GradedAlgebra, b: GradedAlgebra, vmap, amap, upto) -> bool:
    """Graded dims must agree and the ideal row spaces must map onto each
    other in every computed degree (robust against redundant relations)."""
    f = a.field
    top = min(a.max_degree(), b.max_degree()) if upto is None else upto
    for n in range(top + 1):
        for i in a.vertices:
            for j in a.vertices:
                if len(a.basis_paths(i, j, n)) != len(b.basis_paths(vmap[i], vmap[j], n)):
                    return False
    for n in range(2, top + 1):
        arows = a._ideal_rows[n] if n < len(a._ideal_rows) else []
        brows = b._ideal_rows[n] if n < len(b._ideal_rows) else []
        if len(arows) != len(brows):
            return False
        if not arows:
            continue
        apaths = a._paths[n]
        bpaths = b._paths[n]
        bindex = {p: i for i, p in enumerate(bpaths)}
        for row in arows:
            vec = [f.zero() for _ in bpaths]
            for j, c in enumerate(row):
                if not c:
                    continue
                p = apaths[j]
                img = Path(tuple(amap[x] for x in p.arrows), vmap[p.src], vmap[p.tgt])
                if img not in bindex:
                    return False
                vec[bindex[img]] = vec[bindex[img]] + c
            if not linalg.row_space_contains(f, brows, vec):
                return False
    return True
