import random

import pytest

from charquot import charvar, gf, matops
from charquot.errors import CapExceeded

rng = random.Random(7)

PRIME_POWERS = [q for q in range(2, 65) if len(gf.factorize(q)) == 1]


def test_generator_examples():
    k = gf.field(5)
    assert charvar.apply_generator(k, "r", (2, 2, 2)) == (2, 2, 2)
    assert charvar.apply_generator(k, "r", (0, 0, 1)) == (0, 0, 4)
    assert charvar.apply_generator(k, "s", (1, 2, 3)) == (2, 1, 3)
    assert charvar.apply_generator(k, "t", (1, 2, 3)) == (1, 3, 2)
    for tri in ((1, 2, 3), (0, 4, 4)):
        assert charvar.apply_generator(k, "r", charvar.apply_generator(k, "r", tri)) == tri


def test_surface_membership():
    assert charvar.on_fricke_surface(gf.field(7), (2, 2, 2))
    assert charvar.on_fricke_surface(gf.field(2), (0, 0, 0))
    assert not charvar.on_fricke_surface(gf.field(5), (0, 0, 0))
    assert not charvar.on_fricke_surface(gf.field(7), (1, 1, 1))


def test_generators_preserve_the_surface():
    for q in (3, 5, 8, 9):
        k = gf.field(q)
        for x in k.elements():
            for y in k.elements():
                for z in k.elements():
                    on = charvar.on_fricke_surface(k, (x, y, z))
                    for g in ("r", "s", "t"):
                        assert charvar.on_fricke_surface(
                            k, charvar.apply_generator(k, g, (x, y, z))) == on


def test_generators_descend_to_v_orbits():
    for q in (5, 7):
        k = gf.field(q)
        for _ in range(60):
            tri = tuple(rng.randrange(q) for _ in range(3))
            orb = charvar.v_orbit(k, tri)
            for g in ("r", "s", "t"):
                images = {charvar.canonical_triple(k, charvar.apply_generator(k, g, u))
                          for u in orb}
                assert len(images) == 1


def test_scan_results_match_expected_everywhere():
    for q in PRIME_POWERS:
        assert charvar.scan_fixed_orbits(q) == charvar.expected_fixed_orbits(q), q


def test_orbits_coincide_in_characteristic_two():
    assert charvar.scan_fixed_orbits(2) == [(0, 0, 0)]
    assert charvar.scan_fixed_orbits(4) == [(0, 0, 0)]
    assert len(charvar.scan_fixed_orbits(7)) == 2


def test_scan_cap():
    with pytest.raises(CapExceeded):
        charvar.scan_fixed_orbits(7, cap=5)


def test_classify_fixed_verdicts():
    for q in (2, 3, 4, 7, 9, 25):
        rep = charvar.classify_fixed(q)
        assert rep["verdict"] == charvar.VERDICT_NO_PSL2
        for detail in rep["details"]:
            if detail["on_surface"]:
                assert "reducible" in detail["reason"]
            else:
                assert detail["psl2_image_order"] <= 4


def test_trace_triples_are_conjugation_invariant():
    # (tr A, tr B, tr AB) is constant on simultaneous conjugacy classes
    for q in (5, 7, 9):
        k = gf.field(q)

        def rand_sl2():
            while True:
                a, b, c = (rng.randrange(q) for _ in range(3))
                if a == 0:
                    continue
                # solve ad - bc = 1
                d = k.mul(k.inv(a), k.add(1, k.mul(b, c)))
                return ((a, b), (c, d))

        def rand_gl2():
            while True:
                m = ((rng.randrange(q), rng.randrange(q)),
                     (rng.randrange(q), rng.randrange(q)))
                if matops.det(k, m) != 0:
                    return m

        for _ in range(34):
            a_mat, b_mat = rand_sl2(), rand_sl2()
            g = rand_gl2()
            g_inv = matops.mat_inv(k, g)

            def tr3(x, y):
                return (matops.trace(k, x), matops.trace(k, y),
                        matops.trace(k, matops.mat_mul(k, x, y)))

            conj = [matops.mat_mul(k, matops.mat_mul(k, g, m), g_inv)
                    for m in (a_mat, b_mat)]
            assert tr3(a_mat, b_mat) == tr3(*conj)


def test_moves_match_matrix_level_action():
    # r, s, t on trace triples agree with their action on SL2 pairs
    q = 7
    k = gf.field(q)

    def tr3(x, y):
        return (matops.trace(k, x), matops.trace(k, y),
                matops.trace(k, matops.mat_mul(k, x, y)))

    for _ in range(25):
        while True:
            a, b, c = (rng.randrange(q) for _ in range(3))
            if a:
                break
        d = k.mul(k.inv(a), k.add(1, k.mul(b, c)))
        a_mat = ((a, b), (c, d))
        while True:
            a2, b2, c2 = (rng.randrange(q) for _ in range(3))
            if a2:
                break
        d2 = k.mul(k.inv(a2), k.add(1, k.mul(b2, c2)))
        b_mat = ((a2, b2), (c2, d2))
        tri = tr3(a_mat, b_mat)
        a_inv = matops.mat_inv(k, a_mat)
        # r: (a, b) -> (a^-1, b)
        assert tr3(a_inv, b_mat) == charvar.apply_generator(k, "r", tri)
        # s: (a, b) -> (b, a)
        assert tr3(b_mat, a_mat) == charvar.apply_generator(k, "s", tri)
        # t: (a, b) -> (a^-1, ab)
        assert tr3(a_inv, matops.mat_mul(k, a_mat, b_mat)) == \
            charvar.apply_generator(k, "t", tri)
