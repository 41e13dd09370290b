# -*- coding: utf-8 -*-
"""
Integral bases of the centre Z(H_n).

The basis element indexed by a shape λ (|λ| + ℓ(λ) ≤ n) is

    M_λ = Σ_{μ ⊢ |λ|} N^(|λ|)[μ, λ] m_μ(L_1, ..., L_n).

The class elements Γ_μ (μ ⊢ n) are recovered from the M_λ by inverting the
unitriangular transition matrix between the two bases.
"""

import itertools

from heckecentre.combinat import Composition, empty, enumerate_partitions, shapes
from heckecentre.hecke import HeckeElement, eval_m, is_central, class_sum
from heckecentre.matrix import LabeledMatrix, invert_exact, zeros
from heckecentre.permutations import increasing_element, minimal_class_elements
from heckecentre.poly import ZERO
from heckecentre.tower import n_matrix
from heckecentre.utils import MAX_BASIS_RANK, MAX_ENUMERATION_RANK, guard, progress


class CentralElement:
    """ A central element together with where it came from: its expansion
    in monomials m_μ(L) (kind "m") and the label it is known by.
    """
    def __init__(self, label, value, provenance, kind="M"):
        self.label = Composition(label)
        self.value = value
        self.provenance = {Composition(mu): c for mu, c in sorted(provenance.items()) if c}
        self.kind = kind

    @property
    def rank(self):
        return self.value.rank

    def evaluate_provenance(self):
        n = self.value.rank
        return sum((eval_m(mu, n) * c for mu, c in self.provenance.items()), HeckeElement.zero(n))

    def is_central(self):
        return is_central(self.value)

    def __str__(self):
        return "{}_{{{}}} = {}".format(self.kind, self.label, format_expansion(self.provenance, "m"))

    def __repr__(self):
        return "CentralElement({})".format(self)


def format_expansion(coeffs, name):
    """ e.g. {(2): 1, (1,1): -ξ²} -> "m_{2} - ξ²m_{1,1}" """
    terms = []
    for mu, c in sorted(coeffs.items()):
        symbol = "{}_{{{}}}".format(name, mu)
        if c == 1:
            terms.append(symbol)
        elif c == -1:
            terms.append("-" + symbol)
        elif c.is_monomial:
            terms.append(str(c) + symbol)
        else:
            terms.append("({}){}".format(c, symbol))
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def script_m(lam, n, route="direct", matrices=None):
    """ matrices, if given, maps k to N^(k) (e.g. an on-disk cache); otherwise
    N^(k) is computed along the route.
    """
    lam = Composition(lam)
    assert lam.is_partition, "{} is not a partition".format(lam)
    if lam.size + len(lam) > n:
        raise ValueError("Shape {} is not realizable in S_{}.".format(lam, n))
    N = matrices(lam.size) if matrices else n_matrix(lam.size, route)
    provenance = {mu: N[mu, lam] for mu in N.row_labels}
    value = sum((eval_m(mu, n) * c for mu, c in provenance.items() if c), HeckeElement.zero(n))
    return CentralElement(lam, value, provenance, kind="M")


def basis(n, route="direct", matrices=None):
    """ One M_λ per shape, in increasing order of λ; p(n) elements in all. """
    assert n >= 1
    guard(n, MAX_BASIS_RANK, "rank")
    return [script_m(lam, n, route, matrices) for lam in progress(shapes(n), desc="basis of Z(H_{})".format(n))]


def _gamma_rows(n):
    return [mu.minus_one() for mu in enumerate_partitions(n)]


def expand_in_gamma(h, n=None):
    """ Coefficients of the class elements Γ_μ (μ ⊢ n) in a central element,
    read off at increasing elements of shape μ-1. Zero coefficients are left out.
    """
    value = h.value if isinstance(h, CentralElement) else h
    n = value.rank if n is None else n
    assert n == value.rank
    out = {}
    for mu in sorted(enumerate_partitions(n), key=lambda mu: mu.minus_one()):
        c = value.coeff(increasing_element(mu.minus_one(), n))
        if c:
            out[mu] = c
    return out


def gamma_transition(elements, n, labels=None):
    """ Matrix C with C[μ-1, λ] = coefficient of Γ_μ in the element labelled λ.
    Rows are labelled by the shapes μ-1 so that Γ_μ sits on the row of the
    increasing element it is read from.
    """
    rows = sorted(_gamma_rows(n))
    labels = [e.label for e in elements] if labels is None else labels
    entries = zeros(len(rows), len(elements))
    for j, e in enumerate(elements):
        value = e.value if isinstance(e, CentralElement) else e
        for i, shape in enumerate(rows):
            entries[i, j] = value.coeff(increasing_element(shape, n))
    return LabeledMatrix(entries, rows, labels)


def gamma_basis(n, route="direct", matrices=None):
    """ Γ_μ for all μ ⊢ n, in increasing order of μ-1, as Γ = M C^-1. """
    guard(n, MAX_BASIS_RANK, "rank")
    elements = basis(n, route, matrices)
    C = gamma_transition(elements, n)
    Cinv = invert_exact(C) # rows: basis labels λ, columns: shapes μ-1
    gammas = []
    for shape in Cinv.col_labels:
        value = HeckeElement.zero(n)
        provenance = {}
        for e in elements:
            c = Cinv[e.label, shape]
            if not c:
                continue
            value = value + e.value * c
            for mu, r in e.provenance.items():
                provenance[mu] = provenance.get(mu, ZERO) + r*c
        gammas.append(CentralElement(shape.bar(n), value, provenance, kind="Γ"))
    return gammas


def verify_gamma(g, mu):
    """ The two defining properties of the class element Γ_μ:
    it specializes to the class sum of μ at ξ = 0, and among the elements of
    minimal length in any class only those of μ occur, each with coefficient 1.
    """
    mu = Composition(mu)
    value = g.value if isinstance(g, CentralElement) else g
    n = value.rank
    if mu.size != n:
        return False
    guard(n, MAX_ENUMERATION_RANK, "rank")
    if value.specialize() != class_sum(mu):
        return False
    for nu in enumerate_partitions(n):
        expected = 1 if nu == mu else 0
        if any(value.coeff(w) != expected for w in minimal_class_elements(nu)):
            return False
    return True


def counterexample_matrix():
    """ {m_∅, m_1, m_2} expanded in the class elements of H_3. Its determinant is
    1+ξ², so these three central elements span Z(H_3) over ℚ(ξ) but not over ℤ[ξ].
    """
    labels = [empty, Composition((1,)), Composition((2,))]
    return gamma_transition([eval_m(mu, 3) for mu in labels], 3, labels)


def monomial_transition(partitions, n):
    partitions = sorted({Composition(mu) for mu in partitions})
    return gamma_transition([eval_m(mu, n) for mu in partitions], n, partitions)


def check_monomial_set(partitions, n):
    """ True if {m_μ(L) : μ in partitions} is an integral basis of Z(H_n). """
    count = len(enumerate_partitions(n))
    if len(set(Composition(mu) for mu in partitions)) != count:
        raise ValueError("Z(H_{}) has rank {}, got {} distinct monomials.".format(n, count, len(partitions)))
    return monomial_transition(partitions, n).det().is_unit()


def bounded_search(n, max_size):
    """ Every set of p(n) monomials m_μ, with ℓ(μ) < n and |μ| ≤ max_size,
    which is an integral basis of Z(H_n). A bounded search only: monomials
    of any size are candidates.
    """
    guard(n, 5, "rank")
    candidates = [mu for k in range(max_size+1) for mu in enumerate_partitions(k, n-1)]
    count = len(enumerate_partitions(n))
    columns = gamma_transition([eval_m(mu, n) for mu in candidates], n, candidates)
    found = []
    for subset in progress(itertools.combinations(range(len(candidates)), count),
                           desc="subsets"):
        sub = columns.entries[:, list(subset)]
        if LabeledMatrix(sub, columns.row_labels, [candidates[j] for j in subset]).det().is_unit():
            found.append(tuple(candidates[j] for j in subset))
    return found
