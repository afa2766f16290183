"""Canonical-basis tables and the verification suite for the basis identities.

A table maps group elements to basis expansions (regular basis in the Hecke
algebra, or spherical/antispherical basis in the parabolic modules).  At
p = 0 tables are produced internally from the Kazhdan-Lusztig recursion;
for p > 0 they are external inputs loaded from files and validated
(unit triangularity, coefficient positivity, Omega-compatibility).

The verifiers compute both sides of each identity exactly and return a
report; when the stated hypotheses of an identity fail the comparison is
still carried out but the verdict is HYPOTHESIS_VIOLATED rather than
PASS/FAIL.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .laurent import ONE, LaurentInt
from .rootdata import CARTAN, RootDatum, build_root_datum
from .weyl import ExtendedWeyl, WextElement
from .hecke import HeckeAlgebra, HeckeElt
from .sphmod import BadSigma, ParabolicElt, ParabolicModule, get_module, eta, phi
from . import sl2


class SchemaError(ValueError):
    pass


class PositivityViolation(ValueError):
    pass


class TriangularityViolation(ValueError):
    pass


class MissingEntry(KeyError):
    pass


#: known root-datum tags for table files
TYPE_REGISTRY = {
    "A1-affine-ext": ("A1", "weight"),
    "A2-affine-ext": ("A2", "weight"),
    "A3-affine-ext": ("A3", "weight"),
}

_group_cache: Dict[str, HeckeAlgebra] = {}


def algebra_for_type(tag: str) -> HeckeAlgebra:
    """A shared Hecke algebra instance for a table type tag."""
    if tag not in _group_cache:
        if tag not in TYPE_REGISTRY:
            raise SchemaError("unknown table type %r" % tag)
        name, kind = TYPE_REGISTRY[tag]
        datum = build_root_datum(CARTAN[name], kind)
        _group_cache[tag] = HeckeAlgebra(ExtendedWeyl(datum))
    return _group_cache[tag]


BASIS_KINDS = ("regular", "spherical", "antispherical")
PROVENANCES = ("internal_p0", "file", "oracle_v1")


def bundled_table_path(name: str) -> str:
    """Path of a table file shipped with the package."""
    return os.path.join(os.path.dirname(__file__), "data", name)


class PCanTable:
    """A canonical-basis table with provenance and validation."""

    def __init__(self, algebra: HeckeAlgebra, basis_kind: str, p: int,
                 type_tag: str, provenance: str = "file",
                 specialization: str = "graded"):
        if basis_kind not in BASIS_KINDS:
            raise SchemaError("unknown basis kind %r" % basis_kind)
        if provenance not in PROVENANCES:
            raise SchemaError("unknown provenance %r" % provenance)
        if specialization not in ("graded", "v1"):
            raise SchemaError("unknown specialization %r" % specialization)
        self.algebra = algebra
        self.group = algebra.group
        self.basis_kind = basis_kind
        self.p = p
        self.type_tag = type_tag
        self.provenance = provenance
        self.specialization = specialization
        self.entries: Dict[WextElement, object] = {}

    # -- population -----------------------------------------------------

    def module(self) -> Optional[ParabolicModule]:
        if self.basis_kind == "spherical":
            return get_module(self.algebra, "sph")
        if self.basis_kind == "antispherical":
            return get_module(self.algebra, "asph")
        return None

    def set_entry(self, w: WextElement, value) -> None:
        self.entries[w] = value

    def entry(self, w: WextElement):
        try:
            return self.entries[w]
        except KeyError:
            raise MissingEntry("no table entry for %r" % (w,))

    def has_entry(self, w: WextElement) -> bool:
        return w in self.entries

    def sorted_targets(self) -> List[WextElement]:
        return sorted(self.entries, key=lambda w: (w.length, w.w, w.t))

    # -- validation ---------------------------------------------------------

    def validate(self) -> None:
        mod = self.module()
        for w in self.entries:
            entry = self.entries[w]
            if mod is not None and not self.group.coset_min_test(w):
                raise SchemaError("module-basis target %r is not minimal" % (w,))
            if entry.coefficient(w) != ONE:
                raise TriangularityViolation(
                    "entry for %r lacks unit coefficient on its index" % (w,))
            for y, c in entry.terms.items():
                for e, coef in c.coeffs.items():
                    if coef < 0:
                        raise PositivityViolation(
                            "negative coefficient at (%r, %r, v^%d)" % (w, y, e))
        if self.basis_kind == "regular":
            self._validate_omega()

    def _validate_omega(self) -> None:
        G = self.group
        alg = self.algebra
        for w in self.entries:
            dec = G.omega_split(w)
            if dec.omega == G.identity:
                continue
            if dec.affine_part in self.entries:
                lhs = self.entries[w]
                rhs = alg.mul(alg.std(dec.omega), self.entries[dec.affine_part])
                if lhs != rhs:
                    raise SchemaError(
                        "Omega-extension mismatch at %r" % (w,))


def internal_p0_table(algebra: HeckeAlgebra, length_bound: int,
                      basis_kind: str = "regular",
                      type_tag: str = "A1-affine-ext") -> PCanTable:
    """The p = 0 table from the internal canonical-basis recursion."""
    table = PCanTable(algebra, basis_kind, 0, type_tag, provenance="internal_p0")
    G = algebra.group
    if basis_kind == "regular":
        for w in G.elements_up_to_length(length_bound):
            table.set_entry(w, algebra.kl_element(w))
    else:
        mod = table.module()
        for w in G.minimal_reps_up_to_length(length_bound):
            table.set_entry(w, mod.canonical(w))
    table.validate()
    return table


def pcan_p0(algebra: HeckeAlgebra, w: WextElement) -> HeckeElt:
    """The p = 0 canonical basis element (the KL element)."""
    return algebra.kl_element(w)


def oracle_v1_table(algebra: HeckeAlgebra, p: int, lam_max: int,
                    type_tag: str = "A1-affine-ext") -> PCanTable:
    """A v = 1 antispherical table for type A1 filled from the SL2
    tilting recursion (provenance "oracle_v1").

    Rows are indexed by the elements w with dominant w .p 0 <= lam_max.
    Such a table must not be used as the comparison target of
    verify_character_sl2 (that would be circular); it exists to produce
    data for primes without a bundled file.
    """
    G = algebra.group
    if G.datum.rank != 1:
        raise SchemaError("the v=1 oracle provider is specific to type A1")
    table = PCanTable(algebra, "antispherical", p, type_tag,
                      provenance="oracle_v1", specialization="v1")
    mod = get_module(algebra, "asph")
    elements: Dict[int, WextElement] = {}
    for w in G.minimal_reps_up_to_length(2 * (lam_max // p + 2)):
        a = G.dot_p(w, (0,), p)[0]
        if 0 <= a <= lam_max and a not in elements:
            elements[a] = w
    for a, w in sorted(elements.items()):
        terms = {}
        for b, m in sl2.tilting_multiplicities(a, p).items():
            if not m:
                continue
            if b not in elements:
                raise SchemaError("row weight %d outside the tabled range; "
                                  "increase lam_max" % b)
            terms[elements[b]] = LaurentInt.const(m)
        table.set_entry(w, mod.from_terms(terms))
    table.validate()
    return table


# -- file format ---------------------------------------------------------------


def save_table(table: PCanTable, path: str) -> None:
    doc = {
        "schema": "pcan/1",
        "type": table.type_tag,
        "p": table.p,
        "basis": table.basis_kind,
        "provenance": table.provenance,
        "specialization": table.specialization,
        "entries": [
            {
                "target": w.to_dict(),
                "coeffs": [
                    {"elt": y.to_dict(), "poly": c.to_dict()}
                    for y, c in sorted(table.entries[w].terms.items(),
                                       key=lambda kv: (kv[0].length, kv[0].w, kv[0].t))
                ],
            }
            for w in table.sorted_targets()
        ],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_table(path: str, algebra: Optional[HeckeAlgebra] = None) -> PCanTable:
    """Load and validate a table file."""
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError("not valid JSON: %s" % exc)
    for key in ("schema", "type", "p", "basis", "entries"):
        if key not in doc:
            raise SchemaError("missing header field %r" % key)
    if doc["schema"] != "pcan/1":
        raise SchemaError("unsupported schema %r" % doc["schema"])
    if algebra is None:
        algebra = algebra_for_type(doc["type"])
    basis = doc["basis"]
    if basis not in BASIS_KINDS:
        raise SchemaError("unknown basis %r" % basis)
    table = PCanTable(algebra, basis, int(doc["p"]), doc["type"],
                      provenance=doc.get("provenance", "file"),
                      specialization=doc.get("specialization", "graded"))
    G = algebra.group
    mod = table.module()
    for row in doc["entries"]:
        try:
            target = G.element_from_dict(row["target"])
            terms = {}
            for cell in row["coeffs"]:
                y = G.element_from_dict(cell["elt"])
                terms[y] = LaurentInt.from_dict(cell["poly"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError("malformed entry: %s" % exc)
        if mod is None:
            table.set_entry(target, algebra.from_terms(terms))
        else:
            table.set_entry(target, mod.from_terms(terms))
    table.validate()
    return table


# -- derived basis providers -----------------------------------------------------


def pcan_asph(table: PCanTable, w: WextElement) -> ParabolicElt:
    """Antispherical image of a regular-basis entry under the projection."""
    if table.basis_kind == "antispherical":
        return table.entry(w)
    if table.basis_kind != "regular":
        raise SchemaError("antispherical extraction needs a regular table")
    mod = get_module(table.algebra, "asph")
    return mod.project(table.entry(w))


def pcan_sph(table: PCanTable, x: WextElement) -> ParabolicElt:
    """Spherical basis element solved from eta(M-side) = regular entry at w0 x."""
    if table.basis_kind == "spherical":
        return table.entry(x)
    if table.basis_kind != "regular":
        raise SchemaError("spherical extraction needs a regular table")
    alg = table.algebra
    G = table.group
    w0 = G.element(G.datum.longest_index, (0,) * G.datum.rank)
    target = table.entry(G.mul(w0, x))
    mod = get_module(alg, "sph")
    kl_w0 = alg.kl_element(w0)
    remainder = target
    coeffs: Dict[WextElement, LaurentInt] = {}
    while remainder:
        z = max(remainder.terms, key=lambda e: (e.length, e.w, e.t))
        y = G.mul(w0, z)
        if not G.coset_min_test(y):
            raise SchemaError("eta-solve hit a non-minimal leading term %r" % (z,))
        c = remainder.coefficient(z)
        coeffs[y] = c
        remainder = remainder - alg.mul(kl_w0, alg.std(y)).scale(c)
    return mod.from_terms(coeffs)


# -- verification reports ----------------------------------------------------------

PASS = "PASS"
FAIL = "FAIL"
HYPOTHESIS_VIOLATED = "HYPOTHESIS_VIOLATED"


@dataclass
class VerifyReport:
    name: str
    status: str
    hypothesis_ok: bool
    sides_equal: Optional[bool]
    lhs: str = ""
    rhs: str = ""
    notes: List[str] = field(default_factory=list)

    def passed(self) -> bool:
        return self.status == PASS

    def render(self) -> str:
        lines = ["[%s] %s" % (self.status, self.name)]
        if self.lhs or self.rhs:
            lines.append("  lhs = %s" % self.lhs)
            lines.append("  rhs = %s" % self.rhs)
        for n in self.notes:
            lines.append("  note: %s" % n)
        return "\n".join(lines)


def _verdict(hypothesis_ok: bool, equal: bool) -> str:
    if not hypothesis_ok:
        return HYPOTHESIS_VIOLATED
    return PASS if equal else FAIL


def _sigma_weight(datum: RootDatum) -> Tuple[int, ...]:
    vec = datum._solve_pairings([1] * datum.rank)
    if not all(c.denominator == 1 for c in vec):
        raise BadSigma("the lattice contains no weight pairing to 1 with all simple coroots")
    return tuple(int(c) for c in vec)


def _compare(lhs, rhs, at_one: bool) -> bool:
    if not at_one:
        return lhs == rhs
    keys = set(lhs.terms) | set(rhs.terms)
    return all(lhs.coefficient(k).eval_one() == rhs.coefficient(k).eval_one()
               for k in keys)


def _default_tilting_char(table: PCanTable, lam) -> Dict[Tuple[int, ...], int]:
    datum = table.group.datum
    if table.p == 0:
        return datum.weyl_character_weights(lam)
    if datum.rank == 1 and datum.lattice_kind == "weight":
        # weights of the SL2 character are multiples of the fundamental weight
        a = datum.pair_simple(lam, 0)
        ch = sl2.sl2_tilting_char(a, table.p)
        return {(k,): m for k, m in ch.items()}
    raise ValueError("no default tilting character for p > 0 outside type A1; "
                     "pass tilting_char explicitly")


def verify_donkin(table: PCanTable, lam: Sequence[int], x: WextElement,
                  tilting_char: Optional[Mapping] = None) -> VerifyReport:
    """Check the translation identity for the antispherical canonical basis:
    the entry at t_lam * x must equal the entry at x times the central
    element attached to the tilting character of lam."""
    G = table.group
    alg = table.algebra
    lam = tuple(lam)
    notes: List[str] = []
    if not G.coset_min_test(x):
        raise ValueError("x must be a minimal coset representative")
    if not G.datum.is_dominant(lam):
        raise ValueError("lambda must be dominant")
    sigma = _sigma_weight(G.datum)
    shifted = G.mul(G.translation(tuple(-c for c in sigma)), x)
    hypothesis_ok = G.coset_min_test(shifted) and G.is_restricted(shifted, table.p)
    if not hypothesis_ok:
        notes.append("hypothesis: t_{-sigma} x in minimal reps and restricted fails")
    if tilting_char is None:
        tilting_char = _default_tilting_char(table, lam)
        notes.append("tilting character defaulted (%s)" %
                     ("Weyl character" if table.p == 0 else "SL2 recursion"))
    theta = alg.theta_char(tilting_char)
    lhs = pcan_asph(table, G.mul(G.translation(lam), x))
    base = pcan_asph(table, x)
    mod = get_module(alg, "asph")
    rhs = mod.act(base, theta)
    at_one = table.specialization == "v1"
    if at_one:
        notes.append("comparison at v=1 (table specialization)")
    equal = _compare(lhs, rhs, at_one)
    return VerifyReport("donkin lam=%s x=%r p=%d" % (list(lam), x, table.p),
                        _verdict(hypothesis_ok, equal), hypothesis_ok, equal,
                        repr(lhs), repr(rhs), notes)


def verify_steinberg(table: PCanTable, lam: Sequence[int], x: WextElement,
                     tilting_char: Optional[Mapping] = None) -> VerifyReport:
    """The spherical-side translation identity, hypotheses: x restricted."""
    G = table.group
    alg = table.algebra
    lam = tuple(lam)
    notes: List[str] = []
    if not G.coset_min_test(x):
        raise ValueError("x must be a minimal coset representative")
    if not G.datum.is_dominant(lam):
        raise ValueError("lambda must be dominant")
    hypothesis_ok = G.is_restricted(x, table.p)
    if not hypothesis_ok:
        notes.append("hypothesis: x restricted fails")
    if tilting_char is None:
        tilting_char = _default_tilting_char(table, lam)
        notes.append("tilting character defaulted (%s)" %
                     ("Weyl character" if table.p == 0 else "SL2 recursion"))
    theta = alg.theta_char(tilting_char)
    lhs = pcan_sph(table, G.mul(G.translation(lam), x))
    base = pcan_sph(table, x)
    mod = get_module(alg, "sph")
    rhs = mod.act(base, theta)
    at_one = table.specialization == "v1"
    equal = _compare(lhs, rhs, at_one)
    return VerifyReport("steinberg lam=%s x=%r p=%d" % (list(lam), x, table.p),
                        _verdict(hypothesis_ok, equal), hypothesis_ok, equal,
                        repr(lhs), repr(rhs), notes)


def verify_phi(table: PCanTable, sigma: Sequence[int], w: WextElement) -> VerifyReport:
    """phi must send the spherical entry at w to the antispherical entry at
    t_sigma w."""
    G = table.group
    d = G.datum
    if any(d.pair_simple(sigma, i) != 1 for i in range(d.rank)):
        raise BadSigma("sigma must pair to 1 with every simple coroot")
    if not G.coset_min_test(w):
        raise ValueError("w must be a minimal coset representative")
    m = pcan_sph(table, w)
    lhs = phi(m, tuple(sigma))
    rhs = pcan_asph(table, G.mul(G.translation(sigma), w))
    at_one = table.specialization == "v1"
    equal = _compare(lhs, rhs, at_one)
    return VerifyReport("phi sigma=%s w=%r p=%d" % (list(sigma), w, table.p),
                        _verdict(True, equal), True, equal, repr(lhs), repr(rhs))


def verify_positivity(table: PCanTable) -> VerifyReport:
    """Scan all coefficients of all entries for negativity."""
    bad = []
    for w in table.sorted_targets():
        for y, c in table.entries[w].terms.items():
            for e, coef in sorted(c.coeffs.items()):
                if coef < 0:
                    bad.append((w, y, e))
    equal = not bad
    rep = VerifyReport("positivity p=%d basis=%s" % (table.p, table.basis_kind),
                       PASS if equal else FAIL, True, equal)
    for w, y, e in bad:
        rep.notes.append("negative coefficient at (%r, %r, v^%d)" % (w, y, e))
    return rep


def verify_omega_extension(table: PCanTable) -> VerifyReport:
    """Both one-sided Omega factorizations must reproduce each regular entry."""
    if table.basis_kind != "regular":
        raise SchemaError("Omega-extension applies to regular tables")
    G = table.group
    alg = table.algebra
    checked = 0
    bad: List[str] = []
    for w in table.sorted_targets():
        dec = G.omega_split(w)
        om = dec.omega
        if om == G.identity:
            continue
        y = dec.affine_part
        if table.has_entry(y):
            checked += 1
            if table.entries[w] != alg.mul(alg.std(om), table.entries[y]):
                bad.append("left factorization fails at %r" % (w,))
        # right-sided: w = y' om with y' = om y om^-1
        yp = G.mul(G.mul(om, y), G.inv(om))
        if table.has_entry(yp):
            checked += 1
            if table.entries[w] != alg.mul(table.entries[yp], alg.std(om)):
                bad.append("right factorization fails at %r" % (w,))
    rep = VerifyReport("omega-extension p=%d" % table.p,
                       PASS if not bad else FAIL, True, not bad)
    rep.notes.append("%d factorizations checked" % checked)
    rep.notes.extend(bad)
    return rep


# -- the character formula at v = 1 ------------------------------------------------


def _principal_block_elements(group: ExtendedWeyl, p: int, lam_max: int):
    """Map dominant SL2 weights a <= lam_max to elements w with w .p 0 = a."""
    out: Dict[int, WextElement] = {}
    bound = 2 * (lam_max // p + 2)
    for w in group.minimal_reps_up_to_length(bound):
        a = group.dot_p(w, (0,), p)[0]
        if 0 <= a <= lam_max and a not in out:
            out[a] = w
    return out


def _dot_orbit_reachable(group: ExtendedWeyl, p: int, start: int, target: int,
                         bound: int) -> bool:
    """Is target in the affine dot-orbit of start (weights as multiples of
    the fundamental weight, searched within |weight| <= bound)?"""
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for a in frontier:
            for s in group.affine_simples:
                b = group.dot_p(s, (a,), p)[0]
                if abs(b) <= bound and b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
        if target in seen:
            return True
    return target in seen


def verify_character_sl2(table: PCanTable, p: int, lam_max: int) -> VerifyReport:
    """Compare table entries evaluated at v = 1 against the SL2 tilting
    multiplicities computed by the Donkin recursion.

    Dominant weights correspond to elements through w .p 0; weights outside
    the orbit of 0 have no table counterpart and are checked against the
    oracle-side invariants (unit diagonal and linkage) instead.
    """
    G = table.group
    if G.datum.rank != 1:
        raise ValueError("the character verification is specific to type A1")
    if table.p not in (0, p):
        raise ValueError("table characteristic %d does not match p=%d" % (table.p, p))
    block = _principal_block_elements(G, p, lam_max)
    notes: List[str] = []
    all_equal = True
    hypothesis_ok = True
    compared = 0
    for a in range(lam_max + 1):
        oracle = {m: c for m, c in sl2.tilting_multiplicities(a, p).items() if c}
        if a in block:
            w = block[a]
            try:
                row = pcan_asph(table, w)
            except MissingEntry:
                all_equal = False
                notes.append("lam=%d: missing table entry for %r" % (a, w))
                continue
            got: Dict[int, int] = {}
            for y, c in row.terms.items():
                val = c.eval_one()
                if val:
                    got[G.dot_p(y, (0,), p)[0]] = val
            compared += 1
            if got != oracle:
                all_equal = False
                notes.append("lam=%d: table %r != oracle %r" % (a, got, oracle))
        else:
            if oracle.get(a) != 1:
                all_equal = False
                notes.append("lam=%d: oracle diagonal not 1" % a)
            for m in oracle:
                if not _dot_orbit_reachable(G, p, a, m, lam_max + 2 * p):
                    all_equal = False
                    notes.append("lam=%d: weight %d violates linkage" % (a, m))
    notes.insert(0, "%d block weights compared against the table, %d off-orbit "
                    "weights checked for linkage" % (compared, lam_max + 1 - compared))
    return VerifyReport("character-sl2 p=%d lam_max=%d" % (p, lam_max),
                        _verdict(hypothesis_ok, all_equal), hypothesis_ok,
                        all_equal, notes=notes)
