import random

from charquot import congruence as cg
from charquot.smallgrp import builtin_group

rng = random.Random(12)


def test_abelianized_letter_matrices():
    assert cg.abelianize_move((1,)) == ((1, -1), (0, 1))
    assert cg.abelianize_move((2,)) == ((0, -1), (1, 2))
    assert cg.abelianize_move(("r",)) == ((-1, 0), (0, 1))
    assert cg.abelianize_move(("s",)) == ((0, 1), (1, 0))
    assert cg.abelianize_move(("t",)) == ((-1, 1), (0, 1))


def test_abelianize_determinants():
    # braid letters land in SL2, the extra moves in the determinant -1 coset
    def det(m):
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    for letter in (1, -1, 2, -2, 3, -3):
        assert det(cg.abelianize_move((letter,))) == 1
    for letter in ("r", "s", "t"):
        assert det(cg.abelianize_move((letter,))) == -1


def test_abelianize_is_a_homomorphism():
    letters = [1, -1, 2, -2, 3, -3, "r", "s", "t"]
    for _ in range(30):
        w1 = tuple(rng.choice(letters) for _ in range(3))
        w2 = tuple(rng.choice(letters) for _ in range(3))
        assert cg.abelianize_move(w1 + w2) == cg.m2_mul(
            cg.abelianize_move(w1), cg.abelianize_move(w2))


def test_st_words_verify():
    ws, wt = cg.st_words()
    assert cg.abelianize_move(ws) == cg.S_MAT
    assert cg.abelianize_move(wt) == cg.T_MAT
    s = cg.abelianize_move(ws)
    s4 = cg.m2_mul(cg.m2_mul(s, s), cg.m2_mul(s, s))
    assert s4 == cg.IDENT2


def test_action_is_a_left_action():
    g = builtin_group("a5")
    pair = g.generating_pairs()[3]
    letters = [1, -1, 2, -2, 3, -3]
    for _ in range(25):
        w1 = tuple(rng.choice(letters) for _ in range(3))
        w2 = tuple(rng.choice(letters) for _ in range(3))
        lhs = cg.act_word(g, w1 + w2, pair)
        rhs = cg.act_word(g, w1, cg.act_word(g, w2, pair))
        assert lhs == rhs
    for l in letters:
        assert cg.act_word(g, (l,), cg.act_word(g, (-l,), pair)) == pair


def test_action_letters_track_the_inverse_automorphism():
    # evaluating phi on xi(b)^-1(w) for w in {x, y} is exactly the table
    from charquot import burau
    g = builtin_group("a5")
    u, v = g.generating_pairs()[5]

    def ev(word):
        out = 0
        for l in word:
            gelt = u if abs(l) == 1 else v
            if l < 0:
                gelt = g.inv_of(gelt)
            out = g.mult(out, gelt)
        return out

    for letter in (1, -1, 2, -2, 3, -3):
        img_x = burau.xi_letter(-letter, (1,))
        img_y = burau.xi_letter(-letter, (2,))
        assert cg.act_letter(g, letter, (u, v)) == (ev(img_x), ev(img_y))


def test_sl2_order_formula_and_closure_agree():
    for n in range(1, 25):
        assert cg.sl2_closure_mod([cg.S_MAT, cg.T_MAT], n) == cg.sl2_order_mod(n)
    assert cg.sl2_order_mod(1) == 1
    assert cg.sl2_order_mod(2) == 6
    assert cg.sl2_order_mod(8) == 384


def test_trivial_group():
    rep = cg.congruence_report(builtin_group("c1"))
    orb = rep["orbits"][0]
    assert (orb["index"], orb["degree"], orb["verdict"]) == (1, 1, "Congruence")


def test_cyclic_groups_are_congruence():
    for n in range(2, 9):
        rep = cg.congruence_report(builtin_group(f"c{n}"))
        assert len(rep["orbits"]) == 1
        orb = rep["orbits"][0]
        assert orb["verdict"] == "Congruence"
        assert orb["degree"] == orb["index"]
        assert orb["level"] == n
        assert orb["relations_ok"]


def test_cyclic_orbit_is_all_unimodular_pairs():
    import math
    for n in (5, 8):
        rep = cg.congruence_report(builtin_group(f"c{n}"))
        count = sum(1 for a in range(n) for b in range(n)
                    if math.gcd(math.gcd(a, b), n) == 1)
        assert rep["orbits"][0]["index"] == count


def test_z2_index_three():
    g = builtin_group("c2")
    base = g.generating_pairs()[0]
    ca = cg.build_class_action(g, base)
    assert ca.orbit_size == 3
    data = cg.congruence_degree(ca)
    assert data["verdict"] == "Congruence" and data["degree"] == 3


def test_a5_verdicts_and_degree_bound():
    rep = cg.congruence_report(builtin_group("a5"))
    assert sum(o["index"] for o in rep["orbits"]) == 38
    for o in rep["orbits"]:
        assert o["verdict"] in ("Noncongruence", "TotallyNoncongruence")
        assert o["degree"] <= 3
        assert o["index"] % o["degree"] == 0
        assert o["relations_ok"]
    # the mod-Inn orbits refine the two mod-Aut orbits
    assert rep["modaut_class_count"] == 19
    assert sorted(o["index"] for o in rep["orbits"]) == [10, 10, 18]


def test_base_choice_within_class_does_not_matter():
    g = builtin_group("a5")
    reps = g.modinn_classes()["reps"]
    base = reps[4]
    # any conjugate base gives identical invariants
    moved = (g.conj_by(13, base[0]), g.conj_by(13, base[1]))
    d1 = cg.congruence_degree(cg.build_class_action(g, base))
    d2 = cg.congruence_degree(cg.build_class_action(g, moved))
    for key in ("index", "level", "degree", "verdict"):
        assert d1[key] == d2[key]
    # an Aut(G)-equivalent base in a different Inn class also agrees
    modinn = g.modinn_classes()
    inn_to_aut = g.modaut_classes()["inn_to_aut"]
    twin = next(
        (p for i, p in enumerate(modinn["reps"])
         if p != base and inn_to_aut[i] == inn_to_aut[modinn["index"][base]]),
        None)
    assert twin is not None
    d3 = cg.congruence_degree(cg.build_class_action(g, twin))
    for key in ("index", "level", "degree", "verdict"):
        assert d1[key] == d3[key]


def test_braid_moves_stay_inside_the_orbit():
    # the conjugation-action letters abelianize into SL2(Z), so they must
    # permute each S,T-orbit into itself
    g = builtin_group("a5")
    ca = cg.build_class_action(g, g.modinn_classes()["reps"][0])
    in_orbit = set(ca.classes)
    for cls in ca.classes[:6]:
        for letter in (1, -1, 2, -2, 3, -3):
            img = g.canonical_pair(cg.act_letter(g, letter, cls))
            assert img in in_orbit


def test_schreier_generators_stabilize_the_base():
    g = builtin_group("a5")
    ca = cg.build_class_action(g, g.modinn_classes()["reps"][0])
    mats = cg.schreier_generators(ca)
    words = cg.schreier_generator_words(ca)
    assert len(mats) == len(words) > 0
    base = ca.classes[0]
    for h, w in zip(mats[:10], words[:10]):
        # the word abelianizes to the matrix and fixes the base class
        assert cg.abelianize_move(w) == h
        assert g.canonical_pair(cg.act_word(g, w, base)) == base


def test_coset_words_reach_their_classes():
    g = builtin_group("a5")
    ca = cg.build_class_action(g, g.modinn_classes()["reps"][0])
    base = ca.classes[0]
    for i in range(ca.orbit_size):
        assert cg.abelianize_move(ca.coset_words[i]) == ca.coset_mats[i]
        assert g.canonical_pair(cg.act_word(g, ca.coset_words[i], base)) == ca.classes[i]


def test_minus_identity_record():
    g = builtin_group("c3")
    ca = cg.build_class_action(g, g.generating_pairs()[0])
    # -I negates both coordinates; for Z/3 that is a nontrivial move
    assert ca.minus_identity_acts_trivially() == (ca.pi_s[0] == ca.pi_s[ca.pi_s[0]])
