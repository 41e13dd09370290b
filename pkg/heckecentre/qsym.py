# -*- coding: utf-8 -*-
"""
Quasi-symmetric functions in the monomial basis p^λ, in the stable regime
(infinitely many variables), and the structure constants feeding the tower.
"""

import math
import functools

import numpy as np

from heckecentre.combinat import Composition, enumerate_compositions, compositions_below
from heckecentre.matrix import LabeledMatrix
from heckecentre.poly import Poly, ZERO, ONE


@functools.lru_cache(maxsize=None)
def _quasi_shuffle(alpha, beta):
    if not alpha:
        return ((beta, 1),)
    if not beta:
        return ((alpha, 1),)
    a, b = alpha[0], beta[0]
    out = {}
    for head, left, right in ((a, alpha[1:], beta),
                              (b, alpha, beta[1:]),
                              (a + b, alpha[1:], beta[1:])):
        for comp, c in _quasi_shuffle(left, right):
            key = (head,) + comp
            out[key] = out.get(key, 0) + c
    return tuple(out.items())


class QSymElement:
    """ Finite combination Σ c_λ p^λ with coefficients in ℤ[ξ]. """
    def __init__(self, terms=None):
        terms = {} if terms is None else terms
        self.terms = {Composition(lam): Poly.coerce(c) for lam, c in terms.items() if c}

    @classmethod
    def p(cls, lam):
        return cls({Composition(lam): ONE})

    def coefficient(self, lam):
        return self.terms.get(Composition(lam), ZERO)

    def __add__(self, other):
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, ZERO) + c
        return QSymElement(out)

    def __mul__(self, other):
        if not isinstance(other, QSymElement):
            c = Poly.coerce(other)
            return QSymElement({lam: r*c for lam, r in self.terms.items()})
        out = {}
        for alpha, a in self.terms.items():
            for beta, b in other.terms.items():
                for delta, c in _quasi_shuffle(tuple(alpha), tuple(beta)):
                    delta = Composition(delta)
                    out[delta] = out.get(delta, ZERO) + a*b*c
        return QSymElement(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, QSymElement):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join("({})p^{}".format(c, lam) for lam, c in sorted(self.terms.items()))

    __repr__ = __str__


def quasi_shuffle(alpha, beta):
    """ p^α·p^β expanded in the p basis. """
    return QSymElement.p(alpha) * QSymElement.p(beta)


@functools.lru_cache(maxsize=None)
def a_poly(k):
    """ 𝔞(k) = Σ_{m=1}^{k} C(k+m-1, 2m-1) ξ^{2m} """
    assert k >= 1
    coeffs = [0]*(2*k + 1)
    for m in range(1, k+1):
        coeffs[2*m] = math.comb(k + m - 1, 2*m - 1)
    return Poly(coeffs)

def a_poly_comp(lam):
    result = ONE
    for part in lam:
        result = result * a_poly(part)
    return result


@functools.lru_cache(maxsize=None)
def a_entry(lam, mu):
    """ Coefficient of p^λ in Σ_{γ ⊨ |λ|-|μ|} 𝔞(γ) p^γ p^μ, for |λ| > |μ|; 0 otherwise. """
    lam, mu = Composition(lam), Composition(mu)
    d = lam.size - mu.size
    if d <= 0:
        return ZERO
    total = ZERO
    for gamma in enumerate_compositions(d):
        for delta, c in _quasi_shuffle(tuple(gamma), tuple(mu)):
            if delta == lam:
                total = total + a_poly_comp(gamma) * c
    return total


def a_matrix(k, include_empty=False):
    """ A^(k), labelled by the compositions of size < k.

    include_empty adds the γ = ∅ summand of the defining sum (the identity on
    compositions of equal size); this is the form that enters the tower.
    """
    assert k >= 1
    labels = compositions_below(k)
    entries = np.empty((len(labels), len(labels)), dtype=object)
    for i, lam in enumerate(labels):
        for j, mu in enumerate(labels):
            entries[i, j] = a_entry(lam, mu)
            if include_empty and lam == mu:
                entries[i, j] = entries[i, j] + ONE
    return LabeledMatrix(entries, labels, labels)
