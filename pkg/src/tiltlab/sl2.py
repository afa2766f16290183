"""Ground-truth SL2 tilting characters in characteristic p.

Characters live on the weight lattice Z (multiples of the fundamental
weight) and are stored as dicts {weight: multiplicity}.  The tilting
character recursion is Donkin's tensor product theorem specialized to SL2:

* 0 <= a <= p-1        : ch T(a) = chi(a),
* p-1 <= a <= 2p-2     : ch T(a) = chi(a) + chi(2p-2-a)  (one term if equal),
* a >= 2p-1            : a = a0 + p*a1 with a0 in [p-1, 2p-2], and
                         ch T(a) = ch T(a0) * Frobenius-twist of ch T(a1).

``weyl_decompose`` inverts the unitriangular change of basis to the chi's
by top-down elimination, yielding the multiplicities (T(a) : N(b)).

The recursion is applied for every p >= 2.  The tensor theorem is only
proved for p above the bound where linkage behaves (p >= 3 in this rank);
p = 2 output is exposed for experiments but excluded from acceptance runs.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

CharZ = Dict[int, int]


class NotSymmetric(ValueError):
    pass


def weyl_char(a: int) -> CharZ:
    """chi(a) = x^a + x^(a-2) + ... + x^-a."""
    if a < 0:
        raise ValueError("weyl_char needs a nonnegative weight")
    return {k: 1 for k in range(-a, a + 1, 2)}


def char_mul(c1: CharZ, c2: CharZ) -> CharZ:
    out: CharZ = {}
    for k1, m1 in c1.items():
        for k2, m2 in c2.items():
            k = k1 + k2
            out[k] = out.get(k, 0) + m1 * m2
            if not out[k]:
                del out[k]
    return out


def twist(c: CharZ, p: int) -> CharZ:
    """Frobenius twist: scale all weights by p."""
    return {p * k: m for k, m in c.items()}


def sl2_tilting_char(lam: int, p: int) -> CharZ:
    """Character of the indecomposable tilting module T(lam) for SL2."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if lam < 0:
        raise ValueError("highest weight must be dominant")
    if lam <= p - 1:
        return weyl_char(lam)
    if lam <= 2 * p - 2:
        out = dict(weyl_char(lam))
        other = 2 * p - 2 - lam
        if other != lam:
            for k, m in weyl_char(other).items():
                out[k] = out.get(k, 0) + m
        return out
    lam1, lam0 = divmod(lam, p)
    if lam0 < p - 1:
        lam0 += p
        lam1 -= 1
    assert p - 1 <= lam0 <= 2 * p - 2 and lam1 >= 1
    return char_mul(sl2_tilting_char(lam0, p), twist(sl2_tilting_char(lam1, p), p))


def weyl_decompose(c: CharZ) -> Dict[int, int]:
    """Coordinates of a symmetric character in the chi basis.

    Top-down elimination; coordinates may be negative for virtual
    characters, but recomposition is exact.
    """
    rem = {k: m for k, m in c.items() if m}
    for k, m in rem.items():
        if rem.get(-k, 0) != m:
            raise NotSymmetric("character is not Weyl-group symmetric")
    out: Dict[int, int] = {}
    while rem:
        top = max(rem)
        if top < 0:
            raise NotSymmetric("character is not Weyl-group symmetric")
        m = rem[top]
        out[top] = m
        for k, mk in weyl_char(top).items():
            val = rem.get(k, 0) - m * mk
            if val:
                rem[k] = val
            else:
                rem.pop(k, None)
    return out


def tilting_multiplicities(lam: int, p: int) -> Dict[int, int]:
    """(T(lam) : N(mu)) for all dominant mu, from the Donkin recursion."""
    return weyl_decompose(sl2_tilting_char(lam, p))


def multiplicity_table(lam_max: int, p: int) -> List[Tuple[int, int, int]]:
    """Rows (lam, mu, multiplicity) for all dominant lam <= lam_max."""
    rows = []
    for lam in range(lam_max + 1):
        dec = tilting_multiplicities(lam, p)
        for mu in sorted(dec, reverse=True):
            if dec[mu]:
                rows.append((lam, mu, dec[mu]))
    return rows
