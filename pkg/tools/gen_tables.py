#!/usr/bin/env python3
"""Regenerate the bundled table files in src/tiltlab/data/.

Two tables ship with the package:

* a1_affine_p0_regular.json -- the p = 0 table for extended affine A1,
  produced by the internal canonical-basis recursion (tests regenerate it
  and compare, so the file is a frozen snapshot of that computation);

* a1_affine_p5_antispherical.json -- a v = 1 antispherical table for p = 5.
  Its rows are the SL2 tilting multiplicities computed by the base-p digit
  rule below, which shares no code with the character-multiplication
  recursion in tiltlab.sl2 (the latter is the runtime oracle those rows are
  verified against, so the two computations must stay independent).

Digit rule: for a < p-1 the only row entry is a itself.  Otherwise write
a = a0 + p*a1 with a0 in [p-1, 2p-2]; the entries for a are t + p*b where
b runs over the entries for a1 and t over {a0, 2p-2-a0}.  All interior
terms of the character product cancel in pairs, which is what makes the
rule correct; the test suite re-derives this by comparing against the
character recursion.
"""

import os
import sys
from typing import Dict

SRC = os.path.join(os.path.dirname(__file__), "..", "src")
sys.path.insert(0, SRC)

from tiltlab.laurent import LaurentInt
from tiltlab.pcan import algebra_for_type, internal_p0_table, PCanTable, save_table
from tiltlab.sphmod import get_module

DATA = os.path.join(SRC, "tiltlab", "data")

P0_LENGTH_BOUND = 6
P5 = 5
P5_LAMBDA_MAX = 28


def digit_rule_multiplicities(a: int, p: int) -> Dict[int, int]:
    """(T(a) : N(b)) for SL2 via the base-p digit rule (no characters)."""
    if a < p - 1:
        return {a: 1}
    a1, a0 = divmod(a, p)
    if a0 < p - 1:
        a0 += p
        a1 -= 1
    tops = {a0, 2 * p - 2 - a0}
    if a1 == 0:
        return {t: 1 for t in tops}
    inner = digit_rule_multiplicities(a1, p)
    out: Dict[int, int] = {}
    for b, m in inner.items():
        for t in tops:
            w = t + p * b
            out[w] = out.get(w, 0) + m
    return out


def build_p5_table() -> PCanTable:
    alg = algebra_for_type("A1-affine-ext")
    G = alg.group
    mod = get_module(alg, "asph")
    table = PCanTable(alg, "antispherical", P5, "A1-affine-ext",
                      provenance="file", specialization="v1")
    # elements of the principal block with dot-0 weight <= lambda_max
    elements = {}
    for w in G.minimal_reps_up_to_length(2 * (P5_LAMBDA_MAX // P5 + 2)):
        a = G.dot_p(w, (0,), P5)[0]
        if 0 <= a <= P5_LAMBDA_MAX:
            elements[a] = w
    for a, w in sorted(elements.items()):
        rows = digit_rule_multiplicities(a, P5)
        terms = {}
        for b, m in rows.items():
            if b not in elements:
                raise RuntimeError("row weight %d outside the tabled block" % b)
            terms[elements[b]] = LaurentInt.const(m)
        table.set_entry(w, mod.from_terms(terms))
    table.validate()
    return table


def main() -> None:
    os.makedirs(DATA, exist_ok=True)
    alg = algebra_for_type("A1-affine-ext")
    p0 = internal_p0_table(alg, P0_LENGTH_BOUND, "regular", "A1-affine-ext")
    p0.provenance = "file"
    save_table(p0, os.path.join(DATA, "a1_affine_p0_regular.json"))
    print("wrote a1_affine_p0_regular.json (%d entries)" % len(p0.entries))

    p5 = build_p5_table()
    save_table(p5, os.path.join(DATA, "a1_affine_p5_antispherical.json"))
    print("wrote a1_affine_p5_antispherical.json (%d entries)" % len(p5.entries))


if __name__ == "__main__":
    main()
