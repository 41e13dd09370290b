# -*- coding: utf-8 -*-
"""
The symmetric group S_n as a Coxeter group of type A.

Permutations are in one-line notation on {1,...,n}. Products are composition
of maps, (uv)(x) = u(v(x)), so right multiplication by s_i swaps the entries
in positions i and i+1, and left multiplication by s_i swaps the values i
and i+1. With this convention ℓ(w s_i) < ℓ(w) exactly when w(i) > w(i+1).
"""

import functools
import itertools

from heckecentre.combinat import Composition
from heckecentre.utils import MAX_ENUMERATION_RANK, guard


class Permutation(tuple):
    """ One-line notation. Being a tuple, a Permutation is equal to (and
    hashes like) the plain tuple of its images, which is what the Hecke
    algebra uses internally as dictionary keys.
    """
    def __new__(cls, images):
        if isinstance(images, Permutation):
            return images
        images = tuple(int(x) for x in images)
        assert sorted(images) == list(range(1, len(images)+1)), \
               "{} is not a permutation of 1..{}".format(images, len(images))
        return super().__new__(cls, images)

    @property
    def rank(self):
        return len(self)

    @functools.cached_property
    def length(self):
        return inversions(self)

    def apply_gen(self, i):
        return apply_gen(self, i)

    def reduced_word(self):
        return reduced_word(self)

    def cycle_type(self):
        return cycle_type(self)

    def inverse(self):
        inv = [0]*len(self)
        for pos, x in enumerate(self, 1):
            inv[x-1] = pos
        return Permutation(inv)

    def __mul__(self, other):
        assert len(self) == len(other), "Can't multiply permutations of different ranks."
        return Permutation(tuple(self[x-1] for x in other))

    def __str__(self):
        word = reduced_word(self)
        return "".join("s{}".format(i) for i in word) if word else "1"

    def to_json(self):
        return list(self)


def identity(n): return Permutation(range(1, n+1))

def generator(i, n):
    assert 1 <= i < n, "s_{} is not a generator of S_{}".format(i, n)
    return identity(n).apply_gen(i)[0]

def transposition(i, j, n):
    images = list(range(1, n+1))
    images[i-1], images[j-1] = images[j-1], images[i-1]
    return Permutation(images)


def inversions(w):
    n = len(w)
    return sum(1 for a in range(n) for b in range(a+1, n) if w[a] > w[b])


def apply_gen(w, i):
    """ Returns (w·s_i, +1 or -1), the sign being the change in length. """
    if not 1 <= i < len(w):
        raise IndexError("s_{} is not a generator of S_{}".format(i, len(w)))
    a, b = w[i-1], w[i]
    ws = Permutation(w[:i-1] + (b, a) + w[i+1:])
    return ws, (1 if a < b else -1)


def reduced_word(w):
    """ A reduced word for w, found by stripping right descents. """
    w = list(w)
    word = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i+1]:
                break
        else:
            break
        w[i], w[i+1] = w[i+1], w[i]
        word.append(i+1)
    return word[::-1]


def from_word(word, n):
    w = identity(n)
    for i in word:
        w, _ = apply_gen(w, i)
    return w


def cycle_type(w):
    seen = [False]*len(w)
    lengths = []
    for start in range(len(w)):
        if seen[start]:
            continue
        size = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = w[x] - 1
            size += 1
        lengths.append(size)
    return Composition(sorted(lengths, reverse=True))


def increasing_element(lam, n):
    """ The canonical increasing element of shape λ in S_n: runs of λ_1, λ_2, ...
    consecutive generators starting at s_1, consecutive runs separated by
    a single unused index. E.g. shape (1,2,1) gives s1 s3s4 s6.
    """
    lam = Composition(lam)
    if lam.size + len(lam) > n:
        raise ValueError("S_{} contains no increasing element of shape {}.".format(n, lam))
    word = []
    start = 1
    for part in lam:
        word.extend(range(start, start + part))
        start += part + 1
    return from_word(word, n)


def all_permutations(n):
    """ Streams S_n. """
    guard(n, MAX_ENUMERATION_RANK, "rank")
    return (Permutation(p) for p in itertools.permutations(range(1, n+1)))


def class_elements(mu):
    mu = Composition(mu)
    return [w for w in all_permutations(mu.size) if cycle_type(w) == mu]


def minimal_class_elements(mu):
    """ The elements of minimal length in the conjugacy class of cycle type μ. """
    mu = Composition(mu)
    assert mu.is_partition, "{} is not a partition".format(mu)
    shortest = mu.minus_one().size
    return [w for w in all_permutations(mu.size)
              if inversions(w) == shortest and cycle_type(w) == mu]
