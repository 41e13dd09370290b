# -*- coding: utf-8 -*-

import random

import pytest

from heckecentre.combinat import shapes
from heckecentre.hecke import HeckeElement, T, jm, eval_m, eval_p, is_central, check_parity_grading, \
                              class_sum, group_identity, GroupAlgebraElement
from heckecentre.permutations import identity, generator, from_word, all_permutations
from heckecentre.poly import xi


one3 = identity(3)
s1 = generator(1, 3)
s2 = generator(2, 3)
s1s2 = from_word([1, 2], 3)
s2s1 = from_word([2, 1], 3)
w0 = from_word([1, 2, 1], 3)


def test_quadratic_relation():
    assert T(s1) * T(s1) == HeckeElement.one(3) + xi*T(s1)
    assert T(s1) * T(s2) == T(s1s2)
    assert T(s1s2) * T(s1) == T(w0)
    assert T(w0) * T(s1) == T(s1s2) + xi*T(w0)

def test_left_and_right_generators():
    h = T(s1s2)
    assert h.mul_gen(1) == h * T(s1)
    assert h.left_mul_gen(1) == T(s1) * h
    assert h.left_mul_gen(2) == T(s2) * h

def test_jucys_murphy():
    L2, L3 = jm(2, 3), jm(3, 3)
    assert jm(1, 3) == 0
    assert L3 == T((3, 2, 1)) + T((1, 3, 2))
    assert L2 * L3 == T(s2s1) + xi*T(w0) + T(s1s2)
    assert L2 * L3 == L3 * L2
    for n in range(2, 6):
        L = [jm(i, n) for i in range(1, n+1)]
        assert all(a*b == b*a for a in L for b in L)
    with pytest.raises(IndexError):
        jm(4, 3)

def test_monomials_in_h3():
    m2 = eval_m((2,), 3)
    assert (m2.coeff(one3), m2.coeff(s1), m2.coeff(s1s2)) == (3, 2*xi, 1 + xi**2)
    m11 = eval_m((1, 1), 3)
    assert m11 == jm(2, 3) * jm(3, 3)
    assert (m11.coeff(one3), m11.coeff(s1), m11.coeff(s1s2)) == (0, 0, 1)
    m22 = eval_m((2, 2), 3)
    assert (m22.coeff(one3), m22.coeff(s1), m22.coeff(s1s2)) == (2 + xi**2, 3*xi + xi**3,
                                                                   1 + 4*xi**2 + xi**4)
    assert eval_m((), 3) == HeckeElement.one(3)
    assert eval_m((1, 1, 1), 3) == 0

def test_eval_p():
    L2, L3 = jm(2, 3), jm(3, 3)
    assert eval_p((1,), 3) == L2 + L3
    assert eval_p((2, 1), 3) == L2**2 * L3
    assert eval_p((1, 2), 3) == L2 * L3**2
    assert eval_m((2, 1), 3) == eval_p((2, 1), 3) + eval_p((1, 2), 3)

def test_centrality():
    for n in range(2, 6):
        for lam in shapes(n):
            assert is_central(eval_m(lam, n))
    assert not is_central(jm(2, 3))
    assert not T(s1).is_central()

def test_associativity():
    a = T(s1) + 2*T(w0)
    b = xi*T(s2s1) - T(one3)
    c = T(s2) + (1 + xi**2)*T(s1s2)
    assert (a*b)*c == a*(b*c)

def _random_element(rng, perms):
    h = HeckeElement.zero(len(perms[0]))
    for w in rng.sample(perms, 3):
        h = h + (rng.randint(-3, 3) + rng.randint(0, 2)*xi)*T(w)
    return h

@pytest.mark.parametrize("n", [3, 4])
def test_random_associativity(n):
    rng = random.Random(20 + n)
    perms = list(all_permutations(n))
    for _ in range(15):
        a, b, c = (_random_element(rng, perms) for _ in range(3))
        assert (a*b)*c == a*(b*c)

def test_group_law_when_lengths_add():
    perms = list(all_permutations(4))
    for u in perms:
        for v in perms:
            if (u*v).length == u.length + v.length:
                assert T(u) * T(v) == T(u*v)

def test_reduced_words_give_the_same_element():
    rng = random.Random(7)
    perms = list(all_permutations(4))
    for w in rng.sample(perms, 12):
        left_word = list(reversed(w.inverse().reduced_word()))
        for word in (w.reduced_word(), left_word):
            assert len(word) == w.length
            h = HeckeElement.one(4)
            for i in word:
                h = h * T(generator(i, 4))
            assert h == T(w)
    t1, t2 = T(s1), T(s2)
    assert t1*t2*t1 == t2*t1*t2

def test_parity_grading():
    for lam in shapes(5):
        assert check_parity_grading(eval_m(lam, 5), lam.size)
    assert not check_parity_grading(T(s1) + xi*T(s1), 1)

def test_specialization():
    a, b = jm(3, 4), jm(4, 4) + T(generator(2, 4))
    assert (a*b).specialize() == a.specialize() * b.specialize()
    m2 = eval_m((2,), 3).specialize()
    assert m2 == class_sum((1, 1, 1))*3 + class_sum((3,))
    assert group_identity(3) == class_sum((1, 1, 1))

def test_class_sums():
    assert len(class_sum((2, 1)).terms) == 3
    assert len(class_sum((2, 2)).terms) == 3
    assert len(class_sum((3, 1)).terms) == 8
    total = GroupAlgebraElement({}, 4)
    for mu in [(4,), (2, 2), (3, 1), (2, 1, 1), (1, 1, 1, 1)]:
        total = total + class_sum(mu)
    assert total == GroupAlgebraElement({w: 1 for w in all_permutations(4)}, 4)

def test_json_and_printing():
    h = eval_m((1, 1), 3)
    data = h.to_json()
    assert data[0] == {"w": [2, 3, 1], "c": [1]}
    assert HeckeElement.from_json(data, 3) == h
    assert str(T(s1) - xi*T(w0)) == "T[s1] - ξT[s1s2s1]"

def test_rank_checks():
    with pytest.raises(AssertionError):
        T(s1) + T(generator(1, 4))
    with pytest.raises(AssertionError):
        T(s1).coeff(identity(4))


if __name__ == "__main__":
    test_quadratic_relation()
    test_jucys_murphy()
    test_monomials_in_h3()
