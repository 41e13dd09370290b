# -*- coding: utf-8 -*-
"""
Monomials in the Jucys-Murphy elements of S_3, and which of them form integral
bases of the centre.

In ℤS_3 only L_2 and L_3 are nonzero, so m_μ(L) vanishes as soon as μ has
three parts. Every remaining monomial is a combination of the three class
sums, with coefficients (⟨1, m_μ⟩, ⟨s1, m_μ⟩, ⟨s1s2, m_μ⟩).
"""

import functools
import itertools
import warnings
from dataclasses import dataclass

from heckecentre.combinat import Composition, empty, enumerate_partitions
from heckecentre.hecke import eval_m
from heckecentre.permutations import increasing_element
from heckecentre.poly import Poly, xi
from heckecentre.settings import _supported
from heckecentre.centre import gamma_transition


_shortest = [increasing_element(shape, 3) for shape in ((), (1,), (2,))] # 1, s1, s1s2


@dataclass(frozen=True)
class S3Coefficients:
    gamma111: int
    gamma21: int
    gamma3: int

    def __iter__(self):
        return iter((self.gamma111, self.gamma21, self.gamma3))

    def __getitem__(self, i):
        return tuple(self)[i]

    def __add__(self, other):
        return S3Coefficients(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        return S3Coefficients(*(a - b for a, b in zip(self, other)))

    def __mul__(self, k):
        return S3Coefficients(*(k*a for a in self))

    __rmul__ = __mul__

    @property
    def is_zero(self):
        return not any(self)

    @property
    def all_even(self):
        return all(a % 2 == 0 for a in self)

    @classmethod
    def of(cls, element):
        """ from a central element of ℤS_3 """
        return cls(*(element.coeff(w) for w in _shortest))


def _monomial(mu):
    mu = Composition(mu)
    if len(mu) > 2:
        raise ValueError("m_{} has more than two parts; it vanishes in ℤS_3.".format(mu))
    return mu


######## computing columns

@functools.lru_cache(maxsize=None)
def _via_hecke(mu):
    return eval_m(mu, 3).specialize()

@functools.lru_cache(maxsize=None)
def _via_relations(mu):
    """ m_μ(L_2, L_3) in ℤS_3 from monomials of size at most 4, through
        m_i = m_2 m_{i-2} - m_{2,2} m_{i-4}     (i ≥ 5)
        m_{i,i} = m_{1,1} m_{i-1,i-1}
        m_{i+j,i} = m_{i,i} m_j
    which hold for symmetric polynomials in two variables.
    """
    if mu.size <= 4:
        return _via_hecke(mu)
    if len(mu) == 1:
        i = mu[0]
        return _via_relations(Composition((2,))) * _via_relations(Composition((i-2,))) - \
               _via_relations(Composition((2, 2))) * _via_relations(Composition((i-4,)))
    a, b = mu
    if a == b:
        return _via_relations(Composition((1, 1))) * _via_relations(Composition((a-1, a-1)))
    return _via_relations(Composition((b, b))) * _via_relations(Composition((a-b,)))


def monomial_in_zs3(mu, path="hecke"):
    mu = _monomial(mu)
    if path == "hecke":
        return _via_hecke(mu)
    elif path == "relations":
        return _via_relations(mu)
    raise NotImplementedError("Path '{}' not supported.".format(path))


def c_column(mu, path="hecke"):
    """ Class-sum coefficients of m_μ(L) in ℤS_3. """
    return S3Coefficients.of(monomial_in_zs3(mu, path))


def _sixth(x):
    assert x % 6 == 0
    return x // 6

def _third(x):
    assert x % 3 == 0
    return x // 3


def closed_mi(i):
    assert i >= 1
    s = (-1)**i
    return S3Coefficients(_sixth((1 + s)*(2**i + 5)),
                          _sixth((1 - s)*(2**i + 1)),
                          _sixth((1 + s)*(2**i - 1)))

def closed_mii(i):
    assert i >= 1
    s = (-1)**i
    return S3Coefficients(_third(2**i + 2*s), 0, _third(2**i - s))

def closed_mij(i, j):
    """ the column of m_{i+j,i} """
    assert i >= 1 and j >= 1
    si, sj = (-1)**i, (-1)**j
    return S3Coefficients(_sixth((1 + sj)*(2**(i+j) + 2**i + 4*si)),
                          _sixth((1 - sj)*(2**(i+j) + 2**i)),
                          _sixth((1 + sj)*(2**(i+j) + 2**i - 2*si)))

def closed_form(mu):
    mu = _monomial(mu)
    if not mu:
        return S3Coefficients(1, 0, 0)
    if len(mu) == 1:
        return closed_mi(mu[0])
    a, b = mu
    return closed_mii(a) if a == b else closed_mij(b, a - b)


def s3_monomials(bound):
    """ μ with 1 ≤ |μ| ≤ bound and at most two parts, in increasing order """
    return [mu for k in range(1, bound+1) for mu in enumerate_partitions(k, 2)]


######## the lemmas

def check_closed_forms(bound=14):
    return all(c_column(mu) == closed_form(mu) for mu in s3_monomials(bound))


def check_parity(bound=10):
    """ The coefficient on a class whose shortest elements have length ℓ vanishes
    unless ℓ ≡ |μ| (mod 2).
    """
    for mu in s3_monomials(bound):
        for length, c in enumerate(c_column(mu)):
            if (length - mu.size) % 2 and c:
                return False
    return True


def check_evenness(bound=14):
    """ all coefficients of m_{i+j,i} are even """
    return all(closed_mij(i, j).all_even and c_column((i+j, i)).all_even
               for i in range(1, bound) for j in range(1, bound) if 2*i + j <= bound)


def _two_variable(mu, x, y):
    mu = Composition(mu)
    if not mu:
        return 1
    if len(mu) == 1:
        return x**mu[0] + y**mu[0]
    a, b = mu
    return x**a * y**b if a == b else x**a * y**b + x**b * y**a


def check_relations(bound=14):
    """ The product relations among two-variable monomials, both as polynomial
    identities and as identities in ℤS_3 at (L_2, L_3).
    """
    assert "sympy" in _supported, "SymPy required for check_relations"
    import sympy

    x, y = sympy.symbols("x y")
    m = lambda *mu: _two_variable(mu, x, y)
    z = lambda *mu: _via_hecke(Composition(mu))

    cases = [((i,), [((2,), (i-2,)), ((2, 2), (i-4,))], [1, -1]) for i in range(5, bound+1)]
    cases += [((i, i), [((1, 1), (i-1, i-1))], [1]) for i in range(2, bound//2 + 1)]
    cases += [((i+j, i), [((i, i), (j,))], [1]) for i in range(1, bound) for j in range(1, bound)
                                                     if 2*i + j <= bound]
    for mu, products, signs in cases:
        symbolic = sum(s * m(*a) * m(*b) for (a, b), s in zip(products, signs))
        if sympy.expand(m(*mu) - symbolic) != 0:
            return False
        value = None
        for (a, b), s in zip(products, signs):
            term = z(*a) * z(*b) * s
            value = term if value is None else value + term
        if z(*mu) != value:
            return False
    return True


def check_recurrences(bound=14):
    col = lambda *mu: c_column(mu)
    for i in range(5, bound+1):
        if col(i) != 5*col(i-2) - 4*col(i-4):
            return False
    for i in range(3, bound//2 + 1):
        if col(i, i) != col(i-1, i-1) + 2*col(i-2, i-2):
            return False
    for i in range(1, bound):
        for j in range(5, bound):
            if 2*i + j <= bound and col(i+j, i) != 5*col(i+j-2, i) - 4*col(i+j-4, i):
                return False
    return True


def check_fast_path(bound=14):
    return all(c_column(mu, "hecke") == c_column(mu, "relations") for mu in s3_monomials(bound))


def spanning_det(i, j):
    """ det of the (Γ_{1,1,1}, Γ_3) rows of the columns m_{2j}, m_{i,i} """
    return _third((-1)**(i+1) * (4**j + 1) + 2**(i+1))

def spanning_det_direct(i, j):
    a, b = closed_mi(2*j), closed_mii(i)
    return a.gamma111 * b.gamma3 - b.gamma111 * a.gamma3

def unit_spanning_pairs(limit=30):
    return [(i, j) for i in range(1, limit+1) for j in range(1, limit+1) if abs(spanning_det(i, j)) == 1]


######## classification

def _column_store(bound):
    return {mu: c_column(mu, "relations") for mu in [empty] + s3_monomials(bound)}


def gamma21_spanners(bound=20):
    """ monomials whose Γ_{2,1} coefficient is ±1 (the odd sizes carry nothing else) """
    return [mu for mu, c in _column_store(bound).items() if abs(c.gamma21) == 1]


def gamma3_unit_monomials(bound=20):
    """ even-size monomials with Γ_3 coefficient ±1, i.e. those completing m_∅ to a basis """
    return [mu for mu, c in _column_store(bound).items()
               if mu and mu.size % 2 == 0 and abs(c.gamma3) == 1]


def _det3(a, b, c):
    return (a[0]*(b[1]*c[2] - b[2]*c[1]) - b[0]*(a[1]*c[2] - a[2]*c[1]) + c[0]*(a[1]*b[2] - a[2]*b[1]))


def enumerate_zs3_bases(bound=20):
    """ All sets of three monomials (m_∅ and m_μ with ℓ(μ) ≤ 2, |μ| ≤ bound)
    forming a ℤ-basis of Z(ℤS_3). Odd sizes only touch Γ_{2,1} and even sizes
    never do, so a basis is one odd column with Γ_{2,1} coefficient ±1 and two
    even columns with a unimodular (Γ_{1,1,1}, Γ_3) block. Zero columns, and
    columns with all entries even, can't be part of a basis.
    """
    store = {mu: c for mu, c in _column_store(bound).items() if not c.is_zero and not c.all_even}
    odd = [mu for mu, c in store.items() if mu.size % 2 == 1 and abs(c.gamma21) == 1]
    even = [mu for mu in store if mu.size % 2 == 0]
    bases = []
    for o in odd:
        for e1, e2 in itertools.combinations(even, 2):
            if abs(_det3(store[o], store[e1], store[e2])) == 1:
                bases.append(tuple(sorted((o, e1, e2))))
    return sorted(bases)


def brute_force_zs3_bases(bound):
    """ enumerate_zs3_bases without any pruning """
    store = _column_store(bound)
    return sorted(tuple(sorted(triple)) for triple in itertools.combinations(store, 3)
                  if abs(_det3(*(store[mu] for mu in triple))) == 1)


H3_COLUMNS = [empty, Composition((1,)), Composition((2,)), Composition((1, 1)), Composition((2, 2))]

# reference values, rows Γ_{1,1,1}, Γ_{2,1}, Γ_3
H3_REFERENCE = {
    empty: (1, 0, 0),
    Composition((1,)): (0, 1, 0),
    Composition((2,)): (3, 2*xi, 1 + xi**2),
    Composition((1, 1)): (0, 0, 1),
    Composition((2, 2)): (2 + xi**2, xi*(3 + xi**2), 1 + 4*xi + xi**2),
}


def h3_table():
    """ the five monomials of the ℤS_3 bases, expanded in the class elements of H_3 """
    return gamma_transition([eval_m(mu, 3) for mu in H3_COLUMNS], 3, H3_COLUMNS)


def h3_table_discrepancies():
    """ (μ, row shape, expected, computed) for every reference entry that exact arithmetic disagrees with """
    table = h3_table()
    out = []
    for mu, expected in H3_REFERENCE.items():
        for shape, p in zip(table.row_labels, expected):
            if table[shape, mu] != Poly.coerce(p):
                out.append((mu, shape, Poly.coerce(p), table[shape, mu]))
    return out


def h3_unique_basis():
    """ Of the four ℤS_3 bases, the ones whose determinant over H_3 is a unit. """
    for mu, shape, expected, computed in h3_table_discrepancies():
        warnings.warn("H_3 table entry for m_{{{}}} on Γ_{{{}}}: expected {}, computed {}."
                      .format(mu, shape.bar(3), expected, computed))
    table = h3_table()
    survivors = []
    for candidate in enumerate_zs3_bases(4):
        sub = table.restrict(table.row_labels, candidate)
        if sub.det().is_unit():
            survivors.append(candidate)
    assert len(survivors) == 1, "expected a unique survivor, got {}".format(survivors)
    return survivors[0]


def coefficient_table(max_size=7):
    """ Columns of class-sum coefficients for m_∅ and every two-part monomial up to max_size,
    in increasing order (grouped by size).
    """
    return [(mu, c_column(mu)) for mu in [empty] + s3_monomials(max_size)]
