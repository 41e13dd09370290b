# -*- coding: utf-8 -*-
"""
The Iwahori-Hecke algebra H_n over ℤ[ξ], in the basis T_w (w in S_n), with

    T_w T_s = T_ws + ξ T_w   if ℓ(ws) < ℓ(w)
    T_w T_s = T_ws           otherwise.

At ξ = 0 this is the group algebra ℤS_n. Elements are immutable; the
internal representation is a dict from one-line tuples to nonzero Polys.
"""

import functools

from heckecentre.combinat import Composition
from heckecentre.permutations import Permutation, identity, reduced_word, transposition, \
                                     class_elements, inversions
from heckecentre.poly import Poly, ZERO, ONE


####### termwise helpers on raw dicts (the hot loops)

def _acc(out, w, c):
    if w in out:
        out[w] = out[w] + c
    else:
        out[w] = c

def _prune(terms):
    return {w: c for w, c in terms.items() if c}

def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for w, c in b.items():
        _acc(out, w, c)
    return _prune(out)

def _mul_gen(terms, i):
    """ right multiplication by T_{s_i} """
    out = {}
    for w, c in terms.items():
        a, b = w[i-1], w[i]
        _acc(out, w[:i-1] + (b, a) + w[i+1:], c)
        if a > b: # length drops
            _acc(out, w, c.shift(1))
    return _prune(out)

def _left_mul_gen(terms, i):
    """ left multiplication by T_{s_i} """
    out = {}
    for w, c in terms.items():
        pos_i, pos_next = w.index(i), w.index(i+1)
        sw = tuple(i+1 if x == i else (i if x == i+1 else x) for x in w)
        _acc(out, sw, c)
        if pos_i > pos_next: # length drops
            _acc(out, w, c.shift(1))
    return _prune(out)

def _times_jm(terms, j):
    """ right multiplication by L_j, through L_{j} = T_{j-1} L_{j-1} T_{j-1} + T_{j-1} """
    if j == 1:
        return {}
    t = _mul_gen(terms, j-1)
    if j == 2:
        return t
    return _add(_mul_gen(_times_jm(t, j-1), j-1), t)

def _times(terms, v):
    for i in reduced_word(v):
        terms = _mul_gen(terms, i)
    return terms


class HeckeElement:
    """ Σ r_w T_w. Supports +, -, * (with other elements or with scalars
    in ℤ[ξ]), ** and ==. Build elements with T(w), one(n), jm(i, n), etc.
    """
    __slots__ = ("terms", "rank")

    def __init__(self, terms=None, rank=None):
        terms = {} if terms is None else terms
        if rank is None:
            assert terms, "The rank of an empty HeckeElement must be given."
            rank = len(next(iter(terms)))
        self.rank = rank
        self.terms = {tuple(w): Poly.coerce(c) for w, c in terms.items() if c}
        assert all(len(w) == rank for w in self.terms), "Mixed ranks in HeckeElement."

    @classmethod
    def _raw(cls, terms, rank):
        h = object.__new__(cls)
        h.terms = terms
        h.rank = rank
        return h

    @classmethod
    def basis_element(cls, w, coeff=ONE):
        w = Permutation(w)
        return cls._raw({tuple(w): Poly.coerce(coeff)} if coeff else {}, len(w))

    @classmethod
    def one(cls, n):
        return cls.basis_element(identity(n))

    @classmethod
    def zero(cls, n):
        return cls._raw({}, n)

    ########

    def coeff(self, w):
        assert len(w) == self.rank, "Rank mismatch: S_{} vs H_{}".format(len(w), self.rank)
        return self.terms.get(tuple(w), ZERO)

    def items(self):
        """ (Permutation, coefficient) pairs, shortest and then lexicographically first """
        for w in sorted(self.terms, key=lambda w: (inversions(w), w)):
            yield Permutation(w), self.terms[w]

    def support(self):
        return [w for w, _ in self.items()]

    def mul_gen(self, i):
        assert 1 <= i < self.rank, "T_{} is not a generator of H_{}".format(i, self.rank)
        return HeckeElement._raw(_mul_gen(self.terms, i), self.rank)

    def left_mul_gen(self, i):
        assert 1 <= i < self.rank, "T_{} is not a generator of H_{}".format(i, self.rank)
        return HeckeElement._raw(_left_mul_gen(self.terms, i), self.rank)

    def times_jm(self, j):
        return HeckeElement._raw(_times_jm(self.terms, j), self.rank)

    def specialize(self):
        """ ξ -> 0, landing in ℤS_n """
        return GroupAlgebraElement({w: c.specialize0() for w, c in self.terms.items()}, self.rank)

    def is_central(self):
        return is_central(self)

    ######## arithmetic

    def _check(self, other):
        assert isinstance(other, HeckeElement)
        assert self.rank == other.rank, "Rank mismatch: H_{} vs H_{}".format(self.rank, other.rank)

    def __add__(self, other):
        if isinstance(other, int) and other == 0: # so that sum() works
            return self
        self._check(other)
        return HeckeElement._raw(_add(self.terms, other.terms), self.rank)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return HeckeElement._raw({w: -c for w, c in self.terms.items()}, self.rank)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        c = Poly.coerce(other)
        if not c:
            return HeckeElement.zero(self.rank)
        return HeckeElement._raw(_prune({w: r*c for w, r in self.terms.items()}), self.rank)

    def __rmul__(self, other): # scalars only; HeckeElement*HeckeElement goes to __mul__
        return self.__mul__(other)

    def __pow__(self, k):
        assert isinstance(k, int) and k >= 0
        result = HeckeElement.one(self.rank)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    ######## representation

    def to_json(self):
        return [{"w": list(w), "c": c.to_json()} for w, c in self.items()]

    @staticmethod
    def from_json(data, rank):
        return HeckeElement({tuple(term["w"]): Poly(term["c"]) for term in data}, rank)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            name = "T[{}]".format(w)
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            elif c.is_monomial:
                parts.append(str(c) + name)
            else:
                parts.append("({}){}".format(c, name))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "HeckeElement(H_{}: {})".format(self.rank, self)


T = HeckeElement.basis_element


def mul_gen(h, i): return h.mul_gen(i)


def multiply(a, b):
    """ a·b, folding a through a reduced word of each T_v in b. """
    a._check(b)
    out = {}
    for v, c in b.terms.items():
        for w, r in _times(a.terms, v).items():
            _acc(out, w, r*c)
    return HeckeElement._raw(_prune(out), a.rank)


def coeff(h, w): return h.coeff(w)


def jm(i, n):
    """ The Jucys-Murphy element L_i = Σ_{j<i} T_{(j i)}; L_1 = 0. """
    if not 1 <= i <= n:
        raise IndexError("L_{} is not defined in H_{}".format(i, n))
    return HeckeElement._raw({tuple(transposition(j, i, n)): ONE for j in range(1, i)}, n)


def eval_p(lam, n):
    """ The monomial quasi-symmetric polynomial p^λ evaluated at L_1, ..., L_n,

        Σ_{j_1 < ... < j_r} L_{j_1}^{λ_1} ... L_{j_r}^{λ_r}.

    Computed one index j at a time: after step j, row[t] holds p^(λ_1..λ_t)
    evaluated at L_1..L_j.
    """
    lam = Composition(lam)
    r = len(lam)
    assert r <= n, "p^{} needs at least {} variables".format(lam, r)
    row = [{tuple(range(1, n+1)): ONE}] + [{}]*r
    for j in range(2, n+1): # L_1 = 0 contributes nothing
        for t in range(min(r, j), 0, -1):
            grown = row[t-1]
            for _ in range(lam[t-1]):
                if not grown:
                    break
                grown = _times_jm(grown, j)
            if grown:
                row[t] = _add(row[t], grown)
    return HeckeElement._raw(row[r], n)


@functools.lru_cache(maxsize=256)
def _eval_m(lam, n):
    total = {}
    for alpha in lam.rearrangements():
        total = _add(total, eval_p(alpha, n).terms)
    return HeckeElement._raw(total, n)

def eval_m(lam, n):
    """ The monomial symmetric polynomial m_λ evaluated at L_1, ..., L_n.
    Central in H_n; zero when λ has n parts (or more), since L_1 = 0.
    """
    lam = Composition(lam)
    assert lam.is_partition, "{} is not a partition".format(lam)
    if len(lam) >= n and lam:
        return HeckeElement.zero(n)
    return _eval_m(lam, n)


def is_central(h):
    return all(_mul_gen(h.terms, i) == _left_mul_gen(h.terms, i) for i in range(1, h.rank))


def specialize(h): return h.specialize()


def check_parity_grading(h, degree):
    """ True if every coefficient of T_w in h only has powers ξ^e with
    e ≡ degree - ℓ(w) (mod 2), as for any product of `degree` Jucys-Murphy elements.
    """
    for w, c in h.terms.items():
        parity = (degree - inversions(w)) % 2
        if any(x for e, x in enumerate(c.coeffs) if e % 2 != parity):
            return False
    return True


############ ℤS_n

class GroupAlgebraElement:
    """ Integer combination of permutations; the image of H_n at ξ = 0. """
    __slots__ = ("terms", "rank")

    def __init__(self, terms, rank):
        self.rank = rank
        self.terms = {tuple(w): int(c) for w, c in terms.items() if c}

    def coeff(self, w):
        return self.terms.get(tuple(w), 0)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupAlgebraElement(out, self.rank)

    def __neg__(self):
        return GroupAlgebraElement({w: -c for w, c in self.terms.items()}, self.rank)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupAlgebraElement({w: c*other for w, c in self.terms.items()}, self.rank)
        assert self.rank == other.rank
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                uv = tuple(u[x-1] for x in v)
                out[uv] = out.get(uv, 0) + a*b
        return GroupAlgebraElement(out, self.rank)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __str__(self):
        items = sorted(self.terms.items(), key=lambda t: (inversions(t[0]), t[0]))
        return " + ".join("{}·{}".format(c, Permutation(w)) for w, c in items) or "0"

    def __repr__(self):
        return "GroupAlgebraElement(S_{}: {})".format(self.rank, self)


def group_identity(n): return GroupAlgebraElement({tuple(range(1, n+1)): 1}, n)


def class_sum(mu):
    """ Sum of all permutations of cycle type μ. """
    mu = Composition(mu)
    return GroupAlgebraElement({w: 1 for w in class_elements(mu)}, mu.size)
