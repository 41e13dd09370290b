# -*- coding: utf-8 -*-
"""
Compositions and partitions.

A composition is a finite ordered tuple of positive integers; the empty
composition ∅ is allowed and has size 0. Partitions are compositions whose
parts are weakly decreasing.

Compositions are ordered by size first; two compositions of the same positive
size are compared by dropping their last parts and comparing what remains.
This order labels every matrix in the package.
"""

import re
import functools
import itertools

from heckecentre.utils import isint


def sort_key(parts):
    """ The order on compositions as a plain tuple key:
    the sizes of the successive prefixes λ, λ', λ'', ..., ending at 0.
    """
    key = []
    total = sum(parts)
    for p in reversed(parts):
        key.append(total)
        total -= p
    key.append(0)
    return tuple(key)


class Composition(tuple):
    """ Value type for compositions. Equality and hashing are those of the
    underlying tuple, but comparisons follow the composition order.
    """
    def __new__(cls, parts=()):
        if isinstance(parts, Composition):
            return parts
        parts = tuple(parts)
        if not all(isint(p) for p in parts):
            raise ValueError("Composition parts must be integers, got {}.".format(parts))
        parts = tuple(int(p) for p in parts)
        assert all(p >= 1 for p in parts), "Composition parts must be positive, got {}".format(parts)
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    @property
    def is_partition(self):
        return all(self[i] >= self[i+1] for i in range(len(self)-1))

    def minus_one(self):
        return Composition(p-1 for p in self if p > 1)

    def prime(self):
        if not self:
            raise ValueError("∅ has no prime.")
        return Composition(self[:-1])

    def bar(self, n):
        padding = n - len(self) - self.size
        if padding < 0:
            raise ValueError("Shape {} does not fit in rank {} (needs |λ|+ℓ(λ) ≤ n).".format(self, n))
        return Composition(sorted([p+1 for p in self] + [1]*padding, reverse=True))

    def sorted(self):
        """ The partition with the same parts. """
        return Composition(sorted(self, reverse=True))

    def rearrangements(self):
        return sorted({Composition(p) for p in itertools.permutations(self)})

    #####

    def __lt__(self, other): return sort_key(self) < sort_key(other)
    def __le__(self, other): return sort_key(self) <= sort_key(other)
    def __gt__(self, other): return sort_key(self) > sort_key(other)
    def __ge__(self, other): return sort_key(self) >= sort_key(other)

    def __str__(self):
        return ",".join(str(p) for p in self) if self else "∅"

    def __repr__(self):
        return "({})".format(",".join(str(p) for p in self)) if self else "∅"

    def to_json(self):
        return list(self)


empty = Composition()


def compare(a, b):
    """ -1, 0 or 1 as a is less than, equal to or greater than b. """
    ka, kb = sort_key(a), sort_key(b)
    return (ka > kb) - (ka < kb)

def minus_one(lam): return Composition(lam).minus_one()
def prime(lam): return Composition(lam).prime()
def bar(lam, n): return Composition(lam).bar(n)
def rearrangements(lam): return Composition(lam).rearrangements()


@functools.lru_cache(maxsize=None)
def _compositions(k):
    if k == 0:
        return ((),)
    return tuple((first,) + rest for first in range(1, k+1)
                                for rest in _compositions(k - first))

@functools.lru_cache(maxsize=None)
def enumerate_compositions(k):
    """ All 2^(k-1) compositions of k (just ∅ for k = 0), in increasing order. """
    assert k >= 0
    return tuple(sorted(Composition(c) for c in _compositions(k)))


def compositions_below(k):
    """ Compositions of every size smaller than k, in increasing order.
    These label the rows of the tower matrices of level k.
    """
    return tuple(c for size in range(k) for c in enumerate_compositions(size))


def _partitions(k, largest, max_length):
    if k == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first, max_length - 1):
            yield (first,) + rest

@functools.lru_cache(maxsize=None)
def enumerate_partitions(k, max_length=None):
    """ Partitions of k in increasing order, optionally with at most max_length parts. """
    assert k >= 0
    max_length = k if max_length is None else max_length
    return tuple(sorted(Composition(p) for p in _partitions(k, k, max_length)))


def shapes(n):
    """ Partitions λ with |λ| + ℓ(λ) ≤ n, in increasing order.
    These are the shapes of increasing elements of S_n, one per conjugacy class.
    """
    return tuple(lam for k in range(n) for lam in enumerate_partitions(k)
                     if k + len(lam) <= n)


def parse_composition(text):
    """ Reads "3,1,4", "(3,1,4)", "[3, 1, 4]", "314" (single digit parts),
    or one of "", "0", "e", "empty", "∅" for the empty composition.
    """
    text = text.strip().strip("()[]{}").strip()
    if text.lower() in ("", "0", "e", "empty", "∅"):
        return empty
    if re.fullmatch(r"[1-9]+", text):
        return Composition(int(c) for c in text)
    if not re.fullmatch(r"\d+(\s*[,\s]\s*\d+)*", text):
        raise ValueError("Can't read a composition from '{}'.".format(text))
    return Composition(int(c) for c in re.split(r"[,\s]+", text))
