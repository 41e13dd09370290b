# -*- coding: utf-8 -*-

import pytest

from heckecentre.combinat import enumerate_partitions, shapes
from heckecentre.permutations import Permutation, identity, generator, transposition, apply_gen, \
                                     reduced_word, from_word, cycle_type, increasing_element, \
                                     all_permutations, class_elements, minimal_class_elements
from heckecentre.utils import RankTooLarge


def test_multiplication_convention():
    w = Permutation((3, 1, 2))
    # right multiplication by s_i swaps positions, left multiplication swaps values
    assert w * generator(1, 3) == (1, 3, 2)
    assert generator(1, 3) * w == (3, 2, 1)
    assert w * w.inverse() == identity(3)

def test_lengths():
    assert identity(4).length == 0
    assert Permutation((3, 2, 1)).length == 3
    assert transposition(1, 3, 3).length == 3
    ws, sign = apply_gen(Permutation((2, 1, 3)), 1)
    assert ws == identity(3) and sign == -1
    ws, sign = apply_gen(identity(3), 2)
    assert ws == (1, 3, 2) and sign == 1
    with pytest.raises(IndexError):
        apply_gen(identity(3), 3)

def test_words():
    assert from_word([1, 2], 3) == (2, 3, 1)
    assert from_word([2, 1], 3) == (3, 1, 2)
    assert str(from_word([1, 2], 3)) == "s1s2"
    assert str(identity(3)) == "1"
    for w in all_permutations(5):
        word = reduced_word(w)
        assert len(word) == w.length
        assert from_word(word, 5) == w

def test_cycle_type():
    assert cycle_type(identity(3)) == (1, 1, 1)
    assert cycle_type(Permutation((2, 3, 1))) == (3,)
    assert cycle_type(Permutation((2, 1, 4, 3, 5))) == (2, 2, 1)

def test_increasing_elements():
    w = increasing_element((1, 2, 1), 7)
    assert w == from_word([1, 3, 4, 6], 7)
    assert w.length == 4
    assert cycle_type(w) == (3, 2, 2)
    assert increasing_element((2,), 3) == from_word([1, 2], 3)
    assert increasing_element((), 3) == identity(3)
    for n in range(1, 7):
        for lam in shapes(n):
            w = increasing_element(lam, n)
            assert w.length == lam.size
            assert cycle_type(w) == lam.bar(n)
    with pytest.raises(ValueError):
        increasing_element((1, 1), 3)

def test_minimal_class_elements():
    assert minimal_class_elements((1, 1, 1)) == [identity(3)]
    assert sorted(minimal_class_elements((3,))) == sorted([from_word([1, 2], 3), from_word([2, 1], 3)])
    assert sorted(minimal_class_elements((2, 1))) == sorted([generator(1, 3), generator(2, 3)])
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            shortest = min(w.length for w in class_elements(mu))
            assert shortest == mu.minus_one().size

def test_enumeration_guard():
    assert len(list(all_permutations(4))) == 24
    with pytest.raises(RankTooLarge):
        all_permutations(9)


if __name__ == "__main__":
    test_multiplication_convention()
    test_increasing_elements()
