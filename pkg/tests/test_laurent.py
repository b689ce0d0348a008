import random

import pytest
from hypothesis import given, settings, strategies as st

from charquot.errors import NotAUnit
from charquot.laurent import (
    L_ONE, LaurentPoly, LocalizedElt, Mat3, Q, Q_PLUS_1, QINV, laurent,
    render_laurent,
)

coeffs = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6)
polys = coeffs.map(LaurentPoly)


def test_canonical_form_drops_zeros():
    p = LaurentPoly({2: 0, 1: 3, 0: 0})
    assert p.c == {1: 3}
    assert LaurentPoly({0: 1}) == 1


def test_pair_serialization_round_trip():
    p = laurent({3: 2, -1: -5, 0: 1})
    assert p.to_pairs() == [(-1, -5), (0, 1), (3, 2)]
    assert LaurentPoly.from_pairs(p.to_pairs()) == p


def test_render_format():
    assert render_laurent(laurent({2: 3, 1: -1, -1: 5})) == "3*q^2 - q + 5*q^-1"
    assert render_laurent(laurent({})) == "0"
    assert render_laurent(laurent({0: -2})) == "-2"
    assert render_laurent(laurent({1: 1, 0: 1})) == "q + 1"


@given(polys)
def test_involution_is_an_involution(p):
    assert p.involve().involve() == p


@given(polys, polys)
@settings(max_examples=60)
def test_involution_is_a_ring_map(p, r):
    assert (p + r).involve() == p.involve() + r.involve()
    assert (p * r).involve() == p.involve() * r.involve()


def test_involution_fixes_the_symmetric_subring():
    r = Q + QINV
    assert r.involve() == r


def test_basic_products():
    assert Q_PLUS_1 * Q_PLUS_1.involve() == laurent({1: 1, 0: 2, -1: 1})
    assert (LocalizedElt(Q_PLUS_1) ** 2) * LocalizedElt(QINV) == \
        LocalizedElt(laurent({1: 1, 0: 2, -1: 1}))


def test_localized_additive_inverse():
    a = LocalizedElt(laurent({1: 1, 0: -1}), 1)
    b = LocalizedElt(laurent({0: 1, 1: -1}), 1)
    assert a + b == 0


def test_localized_equality_is_cross_multiplicative():
    a = LocalizedElt(Q_PLUS_1 * laurent({0: 3}), 1)   # 3(q+1)/(q+1)
    assert a == LocalizedElt(laurent({0: 3}), 0)
    assert a.normalize_pair() == (laurent({0: 3}), 0)


@given(polys, polys, polys)
@settings(max_examples=40)
def test_localized_ring_axioms_sampled(p1, p2, p3):
    a = LocalizedElt(p1, 1)
    b = LocalizedElt(p2, 2)
    c = LocalizedElt(p3, 0)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a + b).involve() == a.involve() + b.involve()
    assert (a * b).involve() == a.involve() * b.involve()


def test_unit_inversion():
    u = LocalizedElt(laurent({3: -1}), 2)      # -q^3/(q+1)^2
    assert u * u.inverse() == L_ONE
    v = LocalizedElt(Q_PLUS_1 ** 3 * laurent({-2: 1}), 1)  # q^-2 (q+1)^2
    assert v * v.inverse() == L_ONE
    with pytest.raises(NotAUnit):
        LocalizedElt(laurent({1: 1, 0: 2})).inverse()


def test_involve_rewrites_denominators():
    # 1/(q+1) -> 1/(q^-1+1) = q/(q+1)
    x = LocalizedElt(laurent({0: 1}), 1)
    assert x.involve() == LocalizedElt(Q, 1)
    assert x.involve().involve() == x


def test_matrix_inverse_and_determinant():
    rng = random.Random(11)
    ident = Mat3.identity()
    assert ident.inverse() == ident
    for _ in range(5):
        # random product of elementary unimodular matrices stays invertible
        m = Mat3.identity()
        for _ in range(4):
            i, j = rng.sample(range(3), 2)
            rows = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
            rows[i][j] = laurent({rng.randint(-2, 2): rng.randint(-2, 2)})
            m = m * Mat3(rows)
        assert m.det() == L_ONE
        assert m * m.inverse() == ident


def test_determinant_is_multiplicative_and_respects_involution():
    rng = random.Random(5)
    for _ in range(4):
        def rand_mat():
            return Mat3([[laurent({rng.randint(-2, 2): rng.randint(-3, 3)})
                          for _ in range(3)] for _ in range(3)])
        a, b = rand_mat(), rand_mat()
        assert (a * b).det() == a.det() * b.det()
        assert a.det().involve() == a.involve().det()


def test_matrix_vs_transpose():
    m = Mat3([[1, Q, 0], [0, 1, QINV], [laurent({2: 2}), 0, 1]])
    assert m.transpose().transpose() == m
    assert m.transpose().det() == m.det()
