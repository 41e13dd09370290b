# -*- coding: utf-8 -*-
"""
The invariant suite run by `heckecentre verify --n N`.

Every check is a function of the rank (and of the route used for N^(k));
run_suite collects them in a fixed order and returns name -> passed.
A check raising an exception counts as failed, and the exception is
reported through warnings.
"""

import warnings
import itertools
from collections import OrderedDict

from heckecentre.combinat import Composition, empty, compare, enumerate_compositions, enumerate_partitions, shapes, \
                                 compositions_below
from heckecentre.hecke import HeckeElement, T, jm, eval_m, eval_p, is_central, check_parity_grading, \
                              class_sum
from heckecentre.permutations import all_permutations, increasing_element, minimal_class_elements, \
                                     cycle_type, reduced_word
from heckecentre.qsym import QSymElement
from heckecentre.matrix import LabeledMatrix
from heckecentre.tower import m_matrix, n_matrix, m_matrix_direct, m_matrix_tower
from heckecentre.centre import basis, gamma_basis, gamma_transition, expand_in_gamma, verify_gamma, \
                               counterexample_matrix
from heckecentre import s3
from heckecentre.utils import MAX_DIRECT_K, MAX_ENUMERATION_RANK


######## combinatorics and S_n

def check_order(n):
    comps = compositions_below(n+1)
    return all(compare(a, b) == -1 for a, b in zip(comps, comps[1:])) and \
           all(len(enumerate_compositions(k)) == 2**(k-1) for k in range(1, n+1))

def check_bar_round_trip(n):
    return all(lam.minus_one().bar(n) == lam for lam in enumerate_partitions(n))

def check_increasing_elements(n):
    for lam in shapes(n):
        w = increasing_element(lam, n)
        if w.length != lam.size or cycle_type(w) != lam.bar(n) or len(reduced_word(w)) != w.length:
            return False
    return True

def check_minimal_lengths(n):
    return all(all(w.length == mu.minus_one().size for w in minimal_class_elements(mu))
               for mu in enumerate_partitions(n))


######## H_n

def check_jm_commute(n):
    L = [jm(i, n) for i in range(1, n+1)]
    return all(a*b == b*a for a, b in itertools.combinations(L, 2))

def check_deformed_group_law(n):
    """ T_u T_v = T_uv whenever lengths add, over all pairs in S_min(n, 4) """
    perms = list(all_permutations(min(n, 4)))
    for u in perms:
        for v in perms:
            uv = u * v
            if uv.length == u.length + v.length and T(u) * T(v) != T(uv):
                return False
    return True

def check_monomials_central(n):
    return all(is_central(eval_m(lam, n)) for lam in shapes(n))

def check_parity_grading_all(n):
    return all(check_parity_grading(eval_m(lam, n), lam.size) for lam in shapes(n))

def check_specialization(n):
    L = [jm(i, n) for i in range(2, n+1)]
    return all((a*b).specialize() == a.specialize() * b.specialize() for a, b in itertools.product(L, L))

def check_rearrangement_sum(n):
    for lam in shapes(n):
        total = HeckeElement.zero(n)
        for alpha in lam.rearrangements():
            if len(alpha) <= n:
                total = total + eval_p(alpha, n)
        if total != eval_m(lam, n):
            return False
    return True


######## quasi-symmetric functions

def check_quasi_shuffle(n):
    comps = [c for k in range(min(n, 3)+1) for c in enumerate_compositions(k)]
    p = QSymElement.p
    for a, b in itertools.product(comps, comps):
        if p(a)*p(b) != p(b)*p(a):
            return False
        if any(delta.size != a.size + b.size for delta in (p(a)*p(b)).terms):
            return False
    for a, b, c in itertools.product(comps[:6], repeat=3):
        if (p(a)*p(b))*p(c) != p(a)*(p(b)*p(c)):
            return False
    return True


######## matrices

def _levels(n):
    return range(1, min(n-1, MAX_DIRECT_K)+1)

def check_inverse(n, route):
    for k in _levels(n):
        M, N = m_matrix(k, route), n_matrix(k, route)
        if not (M @ N).is_identity() or not M.det().is_unit():
            return False
    return True

def _at_zero(m):
    return LabeledMatrix(m.specialize0(), m.row_labels, m.col_labels)

def specialized_m_matrix(k):
    """ M^(k) at ξ = 0, read off the monomials in ℤS_2k """
    parts = enumerate_partitions(k)
    columns = [eval_m(mu, 2*k).specialize() for mu in parts]
    return LabeledMatrix([[col.coeff(increasing_element(lam, 2*k)) for col in columns] for lam in parts], parts)

def check_specialization_sanity(n, route):
    for k in range(1, min(n-1, 3)+1):
        M0, N0 = _at_zero(m_matrix(k, route)), _at_zero(n_matrix(k, route))
        if M0 != specialized_m_matrix(k) or not (N0 @ M0).is_identity():
            return False
    return True

def check_tower_agrees(n, route):
    return all(m_matrix_tower(k) == m_matrix_direct(k) for k in _levels(n))

def check_rank_independence(n, route):
    return all(m_matrix_direct(k, rank=2*k+1) == m_matrix_direct(k)
               for k in _levels(n) if 2*k <= n and 2*k+1 <= MAX_ENUMERATION_RANK)

def check_counterexample(n, route):
    return not counterexample_matrix().det().is_unit()


######## the centre

def check_basis(n, route):
    elements = basis(n, route)
    if len(elements) != len(enumerate_partitions(n)):
        return False
    for e in elements:
        if not e.is_central() or e.evaluate_provenance() != e.value:
            return False
        gamma = expand_in_gamma(e)
        top = e.label.bar(n)
        if gamma.get(top) != 1:
            return False
        if any(mu != top and mu.minus_one().size >= e.label.size for mu in gamma):
            return False
    return gamma_transition(elements, n).det().is_unit()

def check_basis_specialization(n, route):
    for e in basis(n, route):
        value = e.value.specialize()
        top = class_sum(e.label.bar(n))
        if any(value.coeff(w) != 1 for w in top.terms):
            return False
    return True

def check_gamma(n, route):
    return all(verify_gamma(g, g.label) for g in gamma_basis(n, route))

def check_embedding(n, route):
    smaller = {e.label: e.provenance for e in basis(n-1, route)} if n > 1 else {}
    return all(smaller[e.label] == e.provenance for e in basis(n, route) if e.label in smaller)


######## S_3

def check_s3():
    return s3.check_closed_forms(14) and s3.check_parity(10) and s3.check_evenness(14) and \
           s3.check_recurrences(14) and s3.check_fast_path(14)

def check_s3_classification():
    four = [(empty,) + tuple(map(Composition, b)) for b in (((1,), (2,)), ((1,), (1, 1)), ((1,), (2, 2)))]
    four.append(tuple(map(Composition, ((1,), (2,), (2, 2)))))
    return s3.enumerate_zs3_bases(20) == sorted(four) and \
           s3.unit_spanning_pairs(30) == [(2, 1)]


SUITE = [
    ("composition order", check_order),
    ("bar round trip", check_bar_round_trip),
    ("increasing elements", check_increasing_elements),
    ("minimal lengths", check_minimal_lengths),
    ("Jucys-Murphy elements commute", check_jm_commute),
    ("deformed group law", check_deformed_group_law),
    ("monomials central", check_monomials_central),
    ("parity grading", check_parity_grading_all),
    ("specialization", check_specialization),
    ("rearrangement sum", check_rearrangement_sum),
    ("quasi-shuffle", check_quasi_shuffle),
    ("M N = I", check_inverse),
    ("M, N at ξ = 0", check_specialization_sanity),
    ("tower agrees with direct", check_tower_agrees),
    ("independent of rank", check_rank_independence),
    ("counterexample not unimodular", check_counterexample),
    ("basis of the centre", check_basis),
    ("basis at ξ = 0", check_basis_specialization),
    ("class elements", check_gamma),
    ("bases embed", check_embedding),
    ("S_3 closed forms", check_s3),
    ("S_3 classification", check_s3_classification),
]


def run_suite(n, route="direct", checks=None):
    """ OrderedDict name -> bool, in SUITE order. `checks` optionally restricts to some names. """
    results = OrderedDict()
    for name, check in SUITE:
        if checks is not None and name not in checks:
            continue
        args = {1: (n,), 2: (n, route), 0: ()}[check.__code__.co_argcount]
        try:
            results[name] = bool(check(*args))
        except Exception as e: # a crash is a failure of that property
            warnings.warn("{} raised {}: {}".format(name, type(e).__name__, e))
            results[name] = False
    return results
