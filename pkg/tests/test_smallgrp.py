import itertools
import random

import pytest

from charquot import smallgrp
from charquot.errors import CapExceeded
from charquot.smallgrp import builtin_group

rng = random.Random(31)


def test_cycle_notation_round_trip():
    p = smallgrp.perm_from_cycles(5, [(1, 2, 3), (4, 5)])
    assert p == (1, 2, 0, 4, 3)
    assert smallgrp.parse_cycles(smallgrp.format_cycles(p)) == [(1, 2, 3), (4, 5)]
    assert smallgrp.format_cycles(tuple(range(4))) == "()"


def test_group_cap():
    g = builtin_group("psl2_7")
    with pytest.raises(CapExceeded):
        smallgrp.PermGroup(g.degree, [g.elements[i] for i in g.gen_idx], cap=100)


def test_cayley_table_consistency():
    g = builtin_group("a5")
    for _ in range(50):
        a, b = rng.randrange(g.n), rng.randrange(g.n)
        assert g.elements[g.mult(a, b)] == smallgrp._compose(g.elements[a], g.elements[b])
        assert g.mult(a, g.inv_of(a)) == 0
    # associativity on samples
    for _ in range(20):
        a, b, c = (rng.randrange(g.n) for _ in range(3))
        assert g.mult(g.mult(a, b), c) == g.mult(a, g.mult(b, c))


def test_conjugacy_structures():
    g = builtin_group("a5")
    assert sorted(g.class_sizes.tolist()) == [1, 12, 12, 15, 20]
    for x in range(0, g.n, 7):
        rep = int(g.classmin[x])
        w = int(g.witness[x])
        assert g.conj_by(w, rep) == x
    c = g.class_reps[1]
    cent = g.centralizer(c)
    for z in cent.tolist():
        assert g.mult(int(z), c) == g.mult(c, int(z))


def test_generating_pairs_counts():
    assert len(builtin_group("c2").generating_pairs()) == 3
    assert len(builtin_group("c1").generating_pairs()) == 1
    a5 = builtin_group("a5")
    full = a5.generating_pairs()
    assert len(full) == 2280
    assert a5.modinn_classes()["pair_count"] == 2280


def test_modinn_counts_match_full_enumeration_small():
    # class-size bookkeeping equals brute force for several groups <= 500
    for name in ("c6", "v4", "s5", "a5", "psl2_7"):
        g = builtin_group(name)
        if g.n > 500:
            continue
        assert g.modinn_classes()["pair_count"] == len(g.generating_pairs()), name


def test_canonical_pair_is_inn_invariant():
    g = builtin_group("a5")
    pairs = g.generating_pairs()
    for _ in range(40):
        pair = rng.choice(pairs)
        h = rng.randrange(g.n)
        moved = (g.conj_by(h, pair[0]), g.conj_by(h, pair[1]))
        assert g.canonical_pair(moved) == g.canonical_pair(pair)


def test_pair_conjugate_and_isomorphic():
    g = builtin_group("a5")
    pairs = g.generating_pairs()
    p = pairs[0]
    assert g.pair_conjugate(p, p) is not None
    assert g.pair_isomorphic(p, p)
    h = 23
    moved = (g.conj_by(h, p[0]), g.conj_by(h, p[1]))
    w = g.pair_conjugate(p, moved)
    assert w is not None
    assert g.conj_by(w, p[0]) == moved[0] and g.conj_by(w, p[1]) == moved[1]
    assert g.pair_isomorphic(p, moved)
    # pairs with different order profiles are never isomorphic
    p23 = next(q for q in pairs if (g.order_of(q[0]), g.order_of(q[1])) == (2, 3))
    p55 = next(q for q in pairs if (g.order_of(q[0]), g.order_of(q[1])) == (5, 5))
    assert not g.pair_isomorphic(p23, p55)


def test_pair_isomorphic_is_an_equivalence_on_samples():
    g = builtin_group("a5")
    reps = g.modinn_classes()["reps"]
    sample = [reps[i] for i in range(0, len(reps), 5)]
    for p in sample:
        assert g.pair_isomorphic(p, p)
    for p, q in itertools.combinations(sample, 2):
        assert g.pair_isomorphic(p, q) == g.pair_isomorphic(q, p)
    for p, q, r in itertools.combinations(sample, 3):
        if g.pair_isomorphic(p, q) and g.pair_isomorphic(q, r):
            assert g.pair_isomorphic(p, r)


def test_nielsen_moves():
    g = builtin_group("a5")
    p = g.generating_pairs()[10]
    r_img, s_img, t_img = g.nielsen_moves(p)
    assert r_img == (g.inv_of(p[0]), p[1])
    assert s_img == (p[1], p[0])
    assert t_img == (g.inv_of(p[0]), g.mult(p[0], p[1]))
    # moves preserve generation
    for m in (r_img, s_img, t_img):
        assert g.generates(*m)
    # r and s are involutions on pairs
    assert g.apply_move("r", r_img) == p
    assert g.apply_move("s", s_img) == p


def test_a5_headline_numbers():
    g = builtin_group("a5")
    assert len(g.modinn_classes()["reps"]) == 38
    assert len(g.modaut_classes()["reps"]) == 19
    analysis = g.aut_f2_analysis()
    assert analysis["orbit_count"] == 2
    assert analysis["fixed_classes"] == []
    assert sorted(len(o) for o in analysis["orbits"]) == [9, 10]


def test_modaut_count_equals_epi_over_aut():
    # Aut(G) acts freely on generating pairs, so the class count is |Epi|/|Aut|
    for name, aut_order in (("a5", 120), ("psl2_7", 336), ("s5", 120)):
        g = builtin_group(name)
        mi = g.modinn_classes()
        ma = g.modaut_classes()
        assert mi["pair_count"] % aut_order == 0, name
        assert len(ma["reps"]) == mi["pair_count"] // aut_order, name


def test_klein_four_abelianization_is_fixed():
    g = builtin_group("v4")
    analysis = g.aut_f2_analysis()
    assert len(g.modaut_classes()["reps"]) == 1
    assert analysis["orbit_count"] == 1
    assert len(analysis["fixed_classes"]) == 1


def test_cyclic_two_has_no_fixed_class():
    # the three index-2 subgroups of F2 are permuted transitively
    g = builtin_group("c2")
    assert len(g.modaut_classes()["reps"]) == 3
    analysis = g.aut_f2_analysis()
    assert analysis["orbit_count"] == 1
    assert analysis["fixed_classes"] == []


def test_abelian_orbits_match_gl2_computation():
    # for Z/n the move action is the GL2(Z/n) action on unimodular rows
    for n in (4, 6):
        g = builtin_group(f"c{n}")
        analysis = g.aut_f2_analysis()
        pairs = {(a, b) for a in range(n) for b in range(n)
                 if __import__("math").gcd(__import__("math").gcd(a, b), n) == 1}
        mats = [((-1, 0), (0, 1)), ((0, 1), (1, 0)), ((-1, 1), (0, 1))]
        seen = set()
        orbit_count = 0
        for start in sorted(pairs):
            if start in seen:
                continue
            orbit_count += 1
            stack = [start]
            seen.add(start)
            while stack:
                a, b = stack.pop()
                for m in mats:
                    img = ((m[0][0] * a + m[1][0] * b) % n,
                           (m[0][1] * a + m[1][1] * b) % n)
                    if img not in seen:
                        seen.add(img)
                        stack.append(img)
        assert analysis["orbit_count"] == orbit_count, n


def test_orbit_partition_is_deterministic():
    g1 = smallgrp.alternating(5)
    g2 = smallgrp.alternating(5)
    assert g1.modaut_classes()["reps"] == g2.modaut_classes()["reps"]
    assert g1.aut_f2_analysis()["orbits"] == g2.aut_f2_analysis()["orbits"]


def test_negative_list_small_members():
    for name, order in (("psl3_2", 168), ("psu3_2", 72)):
        g = builtin_group(name)
        assert g.n == order
        assert g.aut_f2_analysis()["fixed_classes"] == [], name


def test_isomorphic_models_agree():
    # PSL3(2) on the Fano plane vs PSL2(7) on the projective line: the whole
    # analysis is a function of the abstract group
    g = builtin_group("psl3_2")
    h = builtin_group("psl2_7")
    assert (g.degree, h.degree) == (7, 8)
    assert g.modinn_classes()["pair_count"] == h.modinn_classes()["pair_count"]
    assert len(g.modaut_classes()["reps"]) == len(h.modaut_classes()["reps"])
    assert g.aut_f2_analysis()["orbit_count"] == h.aut_f2_analysis()["orbit_count"]


def test_builtin_library_orders():
    expect = {"a5": 60, "a6": 360, "s5": 120, "psl2_7": 168, "psl2_8": 504,
              "psl2_11": 660, "psl2_13": 1092, "psu3_2": 72, "c12": 12}
    for name, order in expect.items():
        assert builtin_group(name).n == order, name


def test_group_file_round_trip(tmp_path):
    g = builtin_group("a5")
    path = tmp_path / "a5.txt"
    smallgrp.write_group_file(path, g)
    back = smallgrp.load_group_file(path)
    assert back.n == 60
    assert back.degree == 5
