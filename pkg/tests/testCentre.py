# -*- coding: utf-8 -*-

import pytest

from heckecentre.combinat import Composition, empty, enumerate_partitions
from heckecentre.centre import script_m, basis, gamma_basis, expand_in_gamma, \
                               gamma_transition, verify_gamma, counterexample_matrix, \
                               check_monomial_set, bounded_search, format_expansion
from heckecentre.hecke import eval_m, is_central
from heckecentre.matrix import LabeledMatrix
from heckecentre.poly import xi
from heckecentre.utils import RankTooLarge


C = Composition


def provenance(lam, n):
    return script_m(lam, n, route="tower").provenance


def test_examples_rank_3():
    elements = basis(3, route="tower")
    assert [e.label for e in elements] == [empty, C((1,)), C((2,))]
    assert [str(e) for e in elements] == ["M_{∅} = m_{∅}", "M_{1} = m_{1}", "M_{2} = m_{2} - ξ²m_{1,1}"]
    assert all(e.is_central() for e in elements)

def test_examples_rank_4():
    elements = basis(4, route="tower")
    assert [e.label for e in elements] == [empty, C((1,)), C((2,)), C((1, 1)), C((3,))]
    assert provenance((1, 1), 4) == {C((2,)): -1, C((1, 1)): 1 + xi**2}
    assert provenance((3,), 4) == {C((3,)): 1 + xi**2,
                                   C((2, 1)): -2*xi**2 - xi**4,
                                   C((1, 1, 1)): 3*xi**4 + xi**6}

def test_examples_rank_5():
    elements = basis(5, route="tower")
    assert [e.label for e in elements] == [empty, C((1,)), C((2,)), C((1, 1)), C((3,)), C((2, 1)), C((4,))]
    assert elements[-1].provenance == {
        C((4,)): 1 + 5*xi**2 + 5*xi**4 + xi**6,
        C((2, 2)): -(xi**8 + 6*xi**6 + 9*xi**4 + 4*xi**2),
        C((3, 1)): -(xi**8 + 6*xi**6 + 9*xi**4 + 3*xi**2),
        C((2, 1, 1)): xi**10 + 7*xi**8 + 14*xi**6 + 8*xi**4,
        C((1, 1, 1, 1)): -(xi**12 + 8*xi**10 + 20*xi**8 + 16*xi**6)}
    for e in elements:
        assert e.evaluate_provenance() == e.value
        assert is_central(e.value)

@pytest.mark.slow
def test_examples_rank_5_direct():
    direct = basis(5, route="direct")
    assert [e.provenance for e in direct] == [e.provenance for e in basis(5, route="tower")]

def test_unrealizable_shape():
    with pytest.raises(ValueError):
        script_m((1, 1), 3)
    with pytest.raises(RankTooLarge):
        basis(7)

def test_expansion_in_class_elements():
    m2 = script_m((2,), 3, route="tower")
    assert expand_in_gamma(m2) == {C((3,)): 1, C((2, 1)): 2*xi, C((1, 1, 1)): 3}
    for n in range(2, 6):
        for e in basis(n, route="tower"):
            gamma = expand_in_gamma(e)
            top = e.label.bar(n)
            assert gamma[top] == 1
            assert all(nu == top or nu.minus_one().size < e.label.size for nu in gamma)

def test_gamma_rank_3():
    gammas = gamma_basis(3, route="tower")
    assert [g.label for g in gammas] == [C((1, 1, 1)), C((2, 1)), C((3,))]
    g3 = gammas[-1]
    assert g3.provenance == {empty: -3, C((1,)): -2*xi, C((2,)): 1, C((1, 1)): -xi**2}
    assert verify_gamma(g3, (3,))
    assert not verify_gamma(g3, (2, 1))
    assert verify_gamma(gammas[1], (2, 1))
    assert str(g3).startswith("Γ_{3} = ")

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_gamma_characterization(n):
    gammas = gamma_basis(n, route="tower")
    assert sorted(g.label for g in gammas) == sorted(enumerate_partitions(n))
    for g in gammas:
        assert verify_gamma(g, g.label)
        assert g.evaluate_provenance() == g.value

def test_transition_is_unimodular():
    for n in range(1, 6):
        elements = basis(n, route="tower")
        assert gamma_transition(elements, n).det().is_unit()

def test_counterexample():
    m = counterexample_matrix()
    labels = [empty, C((1,)), C((2,))]
    assert m == LabeledMatrix([[1, 0, 3], [0, 1, 2*xi], [0, 0, 1 + xi**2]], labels)
    assert m.det() == 1 + xi**2

def test_monomial_sets():
    assert check_monomial_set([(), (1,), (1, 1)], 3)
    assert not check_monomial_set([(), (1,), (2,)], 3)
    assert not check_monomial_set([(), (1,), (2, 2)], 3)
    assert not check_monomial_set([(1,), (2,), (2, 2)], 3)
    assert check_monomial_set([(), (1,), (2,), (1, 1), (1, 1, 1)], 4)
    assert check_monomial_set([(), (1,), (1, 1), (1, 1, 1), (2, 1, 1)], 4)
    with pytest.raises(ValueError):
        check_monomial_set([(), (1,)], 3)

def test_top_monomial_is_a_class_element():
    m = eval_m((1, 1, 1, 1), 5)
    assert expand_in_gamma(m) == {C((5,)): 1}
    assert verify_gamma(m, (5,))

def test_bounded_search():
    assert bounded_search(3, 2) == [(empty, C((1,)), C((1, 1)))]
    assert (empty, C((1,)), C((1, 1))) in bounded_search(3, 4)

def test_formatting():
    assert format_expansion({C((2,)): 1, C((1, 1)): -xi**2}, "m") == "m_{2} - ξ²m_{1,1}"
    assert format_expansion({C((3,)): 1 + xi**2}, "m") == "(1+ξ²)m_{3}"
    assert format_expansion({}, "m") == "0"


if __name__ == "__main__":
    test_examples_rank_3()
    test_gamma_rank_3()
