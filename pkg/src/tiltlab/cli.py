"""Batch command-line front end.

One job per invocation; deterministic output.  Exit status: 0 on success or
verification PASS, 1 on verification FAIL, 2 on input errors.

Machine-readable output is JSON (sorted keys); the default is a plain text
report.  Report-style subcommands (oracle, verify character, quiver ext,
quiver extalg) render a PNG figure next to the output file when --out is
given, unless --no-figures is passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Dict, List, Optional

from . import pcan, sl2
from .hecke import HeckeAlgebra
from .laurent import LaurentInt
from .sphmod import get_module
from .weyl import ExtendedWeyl, WextElement


class InputError(ValueError):
    pass


# -- element and weight expression parsing ----------------------------------------


def generator_labels(group: ExtendedWeyl) -> Dict[str, WextElement]:
    labels: Dict[str, WextElement] = {}
    finite = set()
    for i, s in enumerate(group.finite_simples):
        labels["s%d" % (i + 1)] = group.affine_simples[group._affine_simple_index[s]] \
            if s in group._affine_simple_index else s
        finite.add(s)
    extra = [s for s in group.affine_simples if s not in finite]
    for k, s in enumerate(extra):
        labels["s0" if k == 0 else "s0_%d" % (k + 1)] = s
    for k, om in enumerate(group.omega_elements):
        labels["om%d" % k] = om
    labels["e"] = group.identity
    d = group.datum
    labels["w0"] = group.element(d.longest_index, (0,) * d.rank)
    return labels


def parse_weight(group: ExtendedWeyl, text: str):
    text = text.strip().strip("[]")
    if text in ("sigma", "varsigma"):
        vec = group.datum._solve_pairings([1] * group.datum.rank)
        if not all(c.denominator == 1 for c in vec):
            raise InputError("this lattice has no sigma weight")
        return tuple(int(c) for c in vec)
    try:
        coords = tuple(int(c) for c in text.replace(",", " ").split())
    except ValueError:
        raise InputError("cannot parse weight %r" % text)
    if len(coords) != group.datum.rank:
        raise InputError("weight %r has wrong rank (need %d)"
                         % (text, group.datum.rank))
    return coords


def parse_element(group: ExtendedWeyl, text: str) -> WextElement:
    """Products of tokens: e, s1..., s0, om<k>, w0, t_<weight>, w_<weight>,
    x_<weight>; tokens separated by '*'."""
    labels = generator_labels(group)
    out = group.identity
    for tok in text.strip().split("*"):
        tok = tok.strip()
        if not tok:
            continue
        if tok in labels:
            piece = labels[tok]
        elif tok.startswith("t_"):
            piece = group.translation(parse_weight(group, tok[2:]))
        elif tok.startswith("w_"):
            piece = group.weight_to_wlambda(parse_weight(group, tok[2:]))
        elif tok.startswith("x_"):
            piece = group.longest_double_coset_rep(parse_weight(group, tok[2:]))
        else:
            raise InputError("unknown element token %r" % tok)
        out = group.mul(out, piece)
    return out


# -- output plumbing -----------------------------------------------------------------


def emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        body = json.dumps(payload, sort_keys=True, indent=1) + "\n"
    else:
        body = text if text.endswith("\n") else text + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(body)
        print("wrote %s" % args.out)
    else:
        sys.stdout.write(body)


def figure_path(args) -> Optional[str]:
    if not getattr(args, "out", None) or getattr(args, "no_figures", False):
        return None
    stem, _ = os.path.splitext(args.out)
    return stem + ".png"


def _poly_text(c: LaurentInt) -> str:
    return repr(c)


# -- subcommand implementations -------------------------------------------------------


def cmd_wext(args) -> int:
    alg = pcan.algebra_for_type(args.type)
    G = alg.group
    rows = []
    for x in G.elements_up_to_length(args.max_length):
        dec = G.omega_split(x)
        rows.append({
            "element": x.to_dict(),
            "length": x.length,
            "omega": G._omega_index[dec.omega],
            "affine_word": list(dec.affine_word),
            "minimal_in_W_coset": G.coset_min_test(x),
        })
    text = ["# extended affine Weyl elements, type %s, length <= %d"
            % (args.type, args.max_length)]
    for r in rows:
        text.append("%-24s len=%d omega=%d word=%s minimal=%s"
                    % (json.dumps(r["element"]), r["length"], r["omega"],
                       r["affine_word"], r["minimal_in_W_coset"]))
    emit(args, {"type": args.type, "rows": rows}, "\n".join(text))
    return 0


def _basis_rows(entries, sort_group) -> List[dict]:
    rows = []
    for w in sorted(entries, key=lambda w: (w.length, w.w, w.t)):
        elt = entries[w]
        rows.append({
            "target": w.to_dict(),
            "coeffs": [{"elt": y.to_dict(), "poly": c.to_dict()}
                       for y, c in sorted(elt.terms.items(),
                                          key=lambda kv: (kv[0].length, kv[0].w, kv[0].t))],
        })
    return rows


def cmd_hecke(args) -> int:
    alg = pcan.algebra_for_type(args.type)
    G = alg.group
    if args.element:
        targets = [parse_element(G, args.element)]
    else:
        targets = G.elements_up_to_length(args.max_length)
    entries = {w: alg.kl_element(w) for w in targets}
    rows = _basis_rows(entries, G)
    text = ["# canonical basis, type %s" % args.type]
    for w in sorted(entries, key=lambda w: (w.length, w.w, w.t)):
        text.append("H[%r]:  %r" % (w, entries[w]))
    emit(args, {"type": args.type, "basis": "regular", "rows": rows}, "\n".join(text))
    return 0


def cmd_asph(args) -> int:
    alg = pcan.algebra_for_type(args.type)
    G = alg.group
    mod = get_module(alg, "asph")
    if args.element:
        targets = [parse_element(G, args.element)]
    else:
        targets = G.minimal_reps_up_to_length(args.max_length)
    entries = {w: mod.canonical(w) for w in targets}
    rows = _basis_rows(entries, G)
    text = ["# antispherical canonical basis, type %s" % args.type]
    for w in sorted(entries, key=lambda w: (w.length, w.w, w.t)):
        text.append("N[%r]:  %r" % (w, entries[w]))
    emit(args, {"type": args.type, "basis": "antispherical", "rows": rows},
         "\n".join(text))
    return 0


def cmd_pcan(args) -> int:
    if args.load:
        table = pcan.load_table(args.load)
        payload = {
            "type": table.type_tag, "p": table.p, "basis": table.basis_kind,
            "provenance": table.provenance, "entries": len(table.entries),
            "specialization": table.specialization,
        }
        emit(args, payload,
             "table %s: type=%s p=%d basis=%s entries=%d (valid)"
             % (args.load, table.type_tag, table.p, table.basis_kind,
                len(table.entries)))
        return 0
    alg = pcan.algebra_for_type(args.type)
    if args.from_oracle:
        if args.p < 2:
            raise InputError("--from-oracle needs a prime p >= 2")
        table = pcan.oracle_v1_table(alg, args.p, args.lambda_max, args.type)
    elif args.p != 0:
        raise InputError("only p = 0 tables can be built internally; "
                         "p > 0 tables are loaded from files or built at "
                         "v=1 with --from-oracle")
    else:
        table = pcan.internal_p0_table(alg, args.max_length, args.basis, args.type)
    if not args.out:
        raise InputError("building a table requires --out")
    pcan.save_table(table, args.out)
    print("wrote %s (%d entries)" % (args.out, len(table.entries)))
    return 0


def _load_table_arg(args) -> pcan.PCanTable:
    if args.table:
        return pcan.load_table(args.table)
    alg = pcan.algebra_for_type(args.type)
    cache_dir = os.environ.get("TILTLAB_CACHE_DIR")
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        cached = os.path.join(cache_dir, "p0_%s_l%d.json"
                              % (args.type, args.max_length))
        if os.path.exists(cached):
            return pcan.load_table(cached, algebra=alg)
        table = pcan.internal_p0_table(alg, args.max_length, "regular", args.type)
        pcan.save_table(table, cached)
        return table
    return pcan.internal_p0_table(alg, args.max_length, "regular", args.type)


def cmd_verify(args) -> int:
    table = _load_table_arg(args)
    G = table.group
    reports = []
    if args.what == "donkin" or args.what == "steinberg":
        lam = parse_weight(G, args.lam)
        x = parse_element(G, args.x)
        fn = pcan.verify_donkin if args.what == "donkin" else pcan.verify_steinberg
        reports.append(fn(table, lam, x))
    elif args.what == "phi":
        sigma = parse_weight(G, args.sigma or "sigma")
        w = parse_element(G, args.w)
        reports.append(pcan.verify_phi(table, sigma, w))
    elif args.what == "character":
        rep = pcan.verify_character_sl2(table, args.p, args.lambda_max)
        reports.append(rep)
        fig = figure_path(args)
        if fig:
            from . import plotting
            rows = sl2.multiplicity_table(args.lambda_max, args.p)
            plotting.multiplicity_heatmap(rows, fig)
            print("wrote %s" % fig)
    elif args.what == "positivity":
        reports.append(pcan.verify_positivity(table))
        if table.basis_kind == "regular":
            reports.append(pcan.verify_omega_extension(table))
    else:
        raise InputError("unknown verification %r" % args.what)
    text = "\n".join(r.render() for r in reports)
    payload = {"reports": [{
        "name": r.name, "status": r.status, "hypothesis_ok": r.hypothesis_ok,
        "sides_equal": r.sides_equal, "lhs": r.lhs, "rhs": r.rhs,
        "notes": r.notes} for r in reports]}
    emit(args, payload, text)
    return 0 if all(r.passed() for r in reports) else 1


def cmd_oracle(args) -> int:
    rows = sl2.multiplicity_table(args.lambda_max, args.p)
    lines = ["lam\tmu\tmultiplicity"]
    lines.extend("%d\t%d\t%d" % r for r in rows)
    payload = {"p": args.p, "lambda_max": args.lambda_max,
               "rows": [list(r) for r in rows]}
    emit(args, payload, "\n".join(lines))
    fig = figure_path(args)
    if fig:
        from . import plotting
        plotting.multiplicity_heatmap(rows, fig,
                                      title="SL2 tilting multiplicities, p=%d" % args.p)
        print("wrote %s" % fig)
    return 0


# -- quiver subcommands ------------------------------------------------------------------


def _quiver_algebra(args):
    from .quiverlab import GF, QQ, build_algebra, preset_algebra
    field = QQ
    if args.field.startswith("GF"):
        field = GF(int(args.field.split(":")[1]) if ":" in args.field
                   else int(args.field[2:].strip("()")))
    if args.preset:
        return preset_algebra(args.preset, field=field, degree_bound=args.bound)
    if args.quiver:
        with open(args.quiver) as fh:
            doc = json.load(fh)
        rels = doc.get("relations", [])
        if args.relations:
            rels = [r for r in args.relations.split(";") if r.strip()]
        return build_algebra(doc, rels, field=field, degree_bound=args.bound)
    raise InputError("need --preset or --quiver")


def _parse_order(args, algebra):
    if not args.order:
        return list(algebra.vertices)
    toks = [t.strip() for t in args.order.split(",")]
    out = []
    for t in toks:
        v = int(t) if t.lstrip("-").isdigit() else t
        if v not in algebra.vertices:
            raise InputError("unknown vertex %r in order" % t)
        out.append(v)
    return out


def _parse_complex(args, algebra, structure):
    from .quiverlab.modules import simple
    from .quiverlab.qh import tilting_module
    summands = []
    for tok in args.x.split("+"):
        tok = tok.strip()
        shift = 0
        cdeg = 0
        if "<" in tok:
            tok, rest = tok.split("<", 1)
            shift = int(rest.rstrip(">"))
        if "[" in tok:
            tok, rest = tok.split("[", 1)
            cdeg = int(rest.rstrip("]"))
        kind, vtx = tok[0], tok[1:]
        v = int(vtx) if vtx.lstrip("-").isdigit() else vtx
        if kind == "T":
            M = tilting_module(algebra, structure.order, v, structure=structure).module
        elif kind == "L":
            M = simple(algebra, v)
        elif kind == "D":
            M = structure.standards[v]
        elif kind == "N":
            M = structure.costandards[v]
        else:
            raise InputError("unknown object token %r" % tok)
        if shift:
            M = M.shift(shift)
        summands.append((M, cdeg))
    return summands


def cmd_quiver(args) -> int:
    from .quiverlab import (ext_algebra, ext_dims, koszul_check, qh_structure,
                            qh_koszul_check, quadratic_dual, renaming_isomorphic,
                            ringel_dual, tilting_module, parity_check, infer_dag)
    A = _quiver_algebra(args)
    if args.what == "build":
        top = (A.top_degree - 1) if A.is_finite_dimensional else A.max_degree()
        dims = [A.dims(n) for n in range(top + 1)]
        payload = {"dims": dims, "finite": A.is_finite_dimensional,
                   "total": A.total_dimension()}
        emit(args, payload, "dims per degree: %s%s" % (
            dims, "" if A.is_finite_dimensional else " (truncated)"))
        return 0
    if args.what == "ext":
        table = ext_dims(A, _vertex(args.i, A), _vertex(args.j, A), args.k)
        rows = sorted(((k, n, d) for (k, n), d in table.items()))
        payload = {"i": args.i, "j": args.j,
                   "dims": [[k, n, d] for k, n, d in rows]}
        lines = ["k\tn\tdim"] + ["%d\t%d\t%d" % r for r in rows]
        emit(args, payload, "\n".join(lines))
        fig = figure_path(args)
        if fig:
            from . import plotting
            plotting.ext_heatmap(table, fig,
                                 title="Ext(L%s, L%s<n>)" % (args.i, args.j))
            print("wrote %s" % fig)
        return 0
    if args.what == "koszul":
        ok, witness = koszul_check(A, args.k)
        emit(args, {"koszul": ok, "witness": witness},
             "koszul up to K=%d: %s%s" % (args.k, "PASS" if ok else "FAIL",
                                          "" if ok else " witness %r" % (witness,)))
        return 0 if ok else 1
    if args.what == "dual":
        D = quadratic_dual(A)
        payload = {"arrows": [[a.name, a.src, a.tgt] for a in D.arrows.values()],
                   "relations": D.relation_strings}
        emit(args, payload, "dual arrows: %s\nrelations: %s" % (
            [(a.name, a.src, a.tgt) for a in D.arrows.values()], D.relation_strings))
        return 0
    if args.what == "extalg":
        data = ext_algebra(A, args.k)
        payload = {"diagonal_dims": data.diag_dims,
                   "relations": data.presentation.relation_strings}
        emit(args, payload, "Koszul-diagonal dims: %s\npresentation relations: %s"
             % (data.diag_dims, data.presentation.relation_strings))
        fig = figure_path(args)
        if fig:
            from . import plotting
            plotting.dims_bar(data.diag_dims, fig, title="Ext algebra diagonal")
            print("wrote %s" % fig)
        return 0
    order = _parse_order(args, A)
    S = qh_structure(A, order)
    if args.what == "qh":
        emit(args, {"order": order, "ok": S.ok,
                    "certificates": [[n, p, d] for n, p, d in S.certificates]},
             S.render())
        return 0 if S.ok else 1
    if args.what == "qhkoszul":
        ok, witness = qh_koszul_check(A, order, args.k, structure=S)
        emit(args, {"ok": ok, "witness": witness},
             "qh-koszul up to K=%d: %s%s" % (args.k, "PASS" if ok else "FAIL",
                                             "" if ok else " witness %r" % (witness,)))
        return 0 if ok else 1
    if not S.ok:
        raise InputError("algebra is not quasi-hereditary for order %s" % order)
    if args.what == "tilting":
        data = tilting_module(A, order, _vertex(args.i, A), structure=S)
        emit(args, {"vertex": args.i,
                    "dims": sorted([[str(v), d, n] for (v, d), n in data.module.dims.items()]),
                    "standard_layers": [[str(j), n] for j, n in data.delta_filtration],
                    "costandard_multiplicities":
                        sorted([[str(j), n, m] for (j, n), m in data.nabla_multiplicities.items()]),
                    "indecomposable": data.indecomposable},
             data.render())
        return 0
    if args.what == "ringel":
        data = ringel_dual(A, order, structure=S)
        iso = renaming_isomorphic(data.dual, A)
        text = ["ringel dual arrows: %s" % [(a.name, a.src, a.tgt)
                                            for a in data.dual.arrows.values()],
                "relations: %s" % data.dual.relation_strings,
                "dual qh (opposite order): %s" % data.dual_qh.ok,
                "isomorphic to the original under renaming: %s" % (iso is not None)]
        emit(args, {"relations": data.dual.relation_strings,
                    "dual_qh": data.dual_qh.ok,
                    "self_dual": iso is not None}, "\n".join(text))
        return 0
    if args.what == "parity":
        if args.dag == "auto":
            dag = infer_dag(A, order, structure=S)
            if dag is None:
                raise InputError("no consistent dag; pass --dag explicitly")
        else:
            vals = [int(t) for t in args.dag.split(",")]
            dag = {v: vals[k] % 2 for k, v in enumerate(order)}
        X = _parse_complex(args, A, S)
        rep = parity_check(A, order, X, dag, structure=S)
        emit(args, {"verdict": rep.verdict, "witnesses": rep.witnesses},
             rep.render())
        return 0 if rep.verdict != "neither" else 1
    raise InputError("unknown quiver subcommand %r" % args.what)


def _vertex(raw, algebra):
    v = int(raw) if str(raw).lstrip("-").isdigit() else raw
    if v not in algebra.vertices:
        raise InputError("unknown vertex %r" % raw)
    return v


# -- argument wiring ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tiltlab",
                                description="exact Hecke/canonical-basis and "
                                            "graded quiver-algebra computations")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, typed=True):
        sp.add_argument("--out", help="output file (default stdout)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--no-figures", action="store_true")
        if typed:
            sp.add_argument("--type", default="A1-affine-ext",
                            help="root-datum tag (A1-affine-ext, A2-affine-ext, ...)")

    sp = sub.add_parser("wext", help="enumerate extended affine Weyl elements")
    common(sp)
    sp.add_argument("--max-length", type=int, default=4)
    sp.set_defaults(func=cmd_wext)

    for name, fn in (("hecke", cmd_hecke), ("kl", cmd_hecke), ("asph", cmd_asph)):
        sp = sub.add_parser(name, help="canonical basis tables")
        common(sp)
        sp.add_argument("--max-length", type=int, default=4)
        sp.add_argument("--element", help="single element expression")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("pcan", help="build or validate canonical-basis tables")
    common(sp)
    sp.add_argument("--p", type=int, default=0)
    sp.add_argument("--max-length", type=int, default=6)
    sp.add_argument("--basis", choices=pcan.BASIS_KINDS, default="regular")
    sp.add_argument("--load", help="validate an existing table file")
    sp.add_argument("--from-oracle", action="store_true",
                    help="build a v=1 antispherical A1 table from the SL2 "
                         "recursion (provenance oracle_v1)")
    sp.add_argument("--lambda-max", type=int, default=20)
    sp.set_defaults(func=cmd_pcan)

    sp = sub.add_parser("verify", help="identity verification suite")
    sp.add_argument("what", choices=("donkin", "steinberg", "phi", "character",
                                     "positivity"))
    common(sp)
    sp.add_argument("--table", help="table file (default: internal p=0 table)")
    sp.add_argument("--max-length", type=int, default=8,
                    help="length bound for the internal p=0 table")
    sp.add_argument("--p", type=int, default=5)
    sp.add_argument("--lambda-max", type=int, default=20)
    sp.add_argument("--lambda", dest="lam", default="1")
    sp.add_argument("--x", default="t_sigma")
    sp.add_argument("--w", default="e")
    sp.add_argument("--sigma")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="SL2 tilting multiplicity table")
    common(sp, typed=False)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--lambda-max", type=int, default=20)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("quiver", help="graded quiver algebra laboratory")
    sp.add_argument("what", choices=("build", "ext", "koszul", "dual", "extalg",
                                     "qh", "qhkoszul", "tilting", "ringel",
                                     "parity"))
    common(sp, typed=False)
    sp.add_argument("--preset")
    sp.add_argument("--quiver", help="quiver description file (JSON)")
    sp.add_argument("--relations", help="semicolon-separated relation strings")
    sp.add_argument("--field", default="QQ", help="QQ or GF:p")
    sp.add_argument("--bound", type=int, default=8)
    sp.add_argument("--k", type=int, default=6)
    sp.add_argument("--i", default="1")
    sp.add_argument("--j", default="1")
    sp.add_argument("--order", help="comma-separated vertex order")
    sp.add_argument("--x", default="T1", help="object expression, e.g. T1+T2, L2")
    sp.add_argument("--dag", default="auto")
    sp.set_defaults(func=cmd_quiver)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except (pcan.SchemaError, pcan.PositivityViolation,
            pcan.TriangularityViolation, pcan.MissingEntry) as exc:
        print("table error: %s" % exc, file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print("missing file: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        # NotMinimal, NotDominant, BadSigma, NotFiniteDimensional, ...
        print("input error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
