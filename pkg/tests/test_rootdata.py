import itertools

import pytest

from tiltlab.rootdata import CARTAN, NotFiniteType, build_root_datum


def test_a1_datum():
    d = build_root_datum(CARTAN["A1"])
    assert len(d.positive_roots) == 1
    # the positive root is alpha = 2*fundamental
    assert d.positive_roots[0].x == (2,)
    assert d.rho == (1,)


def test_a2_datum():
    d = build_root_datum(CARTAN["A2"])
    assert len(d.positive_roots) == 3
    assert d.rho == (1, 1)
    assert d.weyl_order == 6


def test_malformed_cartan_rejected():
    with pytest.raises(NotFiniteType):
        build_root_datum([[2, -1], [-1, 2], [0, 0]])
    with pytest.raises(NotFiniteType):
        build_root_datum([[2, -1], [0, 2]])  # asymmetric zero pattern
    with pytest.raises(NotFiniteType):
        build_root_datum([[2, -2], [-2, 2]])  # affine matrix, not finite type
    with pytest.raises(NotFiniteType):
        build_root_datum([[1]])


def test_pairing_examples():
    d1 = build_root_datum(CARTAN["A1"])
    assert d1.pair_simple((1,), 0) == 1
    d2 = build_root_datum(CARTAN["A2"])
    assert d2.pair_simple((1, 0), 1) == 0
    for i in range(2):
        assert d2.pair_simple(d2.rho, i) == 1


def test_dominance():
    d1 = build_root_datum(CARTAN["A1"])
    assert d1.is_dominant((1,))
    assert not d1.is_dominant((-1,))
    d2 = build_root_datum(CARTAN["A2"])
    assert not d2.is_dominant((1, -1))


def test_min_rep_examples():
    d1 = build_root_datum(CARTAN["A1"])
    w, dom = d1.finite_weyl_min_rep((-1,))
    assert d1.weyl_length(w) == 1 and dom == (1,)
    w, dom = d1.finite_weyl_min_rep((1,))
    assert w == 0 and dom == (1,)
    d2 = build_root_datum(CARTAN["A2"])
    w, dom = d2.finite_weyl_min_rep((-1, -1))
    # brute force: w0 is the unique length-3 element making -rho dominant
    assert d2.weyl_length(w) == 3 and dom == (1, 1)


def test_min_rep_minimality_brute_force():
    d2 = build_root_datum(CARTAN["A2"])
    for lam in itertools.product(range(-2, 3), repeat=2):
        w, dom = d2.finite_weyl_min_rep(lam)
        assert d2.is_dominant(dom)
        assert tuple(d2.weyl_act(w, lam)) == dom
        for u in range(d2.weyl_order):
            if d2.is_dominant(d2.weyl_act(u, lam)):
                assert d2.weyl_length(u) >= d2.weyl_length(w)
                if d2.weyl_length(u) == d2.weyl_length(w):
                    assert u == w  # minimal representative is unique


def test_weyl_characters():
    d1 = build_root_datum(CARTAN["A1"])
    assert d1.weyl_character_weights((0,)) == {(0,): 1}
    assert d1.weyl_character_weights((1,)) == {(1,): 1, (-1,): 1}
    assert d1.weyl_character_weights((2,)) == {(2,): 1, (0,): 1, (-2,): 1}
    d2 = build_root_datum(CARTAN["A2"])
    adj = d2.weyl_character_weights((1, 1))
    assert adj[(0, 0)] == 2 and sum(adj.values()) == 8
    nat = d2.weyl_character_weights((1, 0))
    assert sum(nat.values()) == 3 and set(nat.values()) == {1}


def test_datum_from_file(tmp_path):
    import json
    from tiltlab.rootdata import root_datum_from_file
    path = tmp_path / "datum.json"
    path.write_text(json.dumps({"cartan": [[2, -1], [-1, 2]],
                                "lattice": "weight"}))
    d = root_datum_from_file(str(path))
    assert d.rank == 2 and len(d.positive_roots) == 3
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"lattice": "weight"}))
    with pytest.raises(NotFiniteType):
        root_datum_from_file(str(bad))


def test_root_lattice_kind():
    d = build_root_datum(CARTAN["A2"], "root")
    assert len(d.positive_roots) == 3
    assert d.rho == (1, 1)  # rho = alpha1 + alpha2 lies in the A2 root lattice
    d1 = build_root_datum(CARTAN["A1"], "root")
    assert d1.rho is None  # rho = alpha/2 is not in the A1 root lattice
