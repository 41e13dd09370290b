# -*- coding: utf-8 -*-

import pytest

from heckecentre.combinat import Composition, empty
from heckecentre.matrix import LabeledMatrix, NotUnimodular, det, invert_exact, block_diag, eye
from heckecentre.poly import xi, ONE


two = [Composition((2,)), Composition((1, 1))]
M2 = LabeledMatrix([[1 + xi**2, 1], [xi**2, 1]], two)
N2 = LabeledMatrix([[1, -1], [-xi**2, 1 + xi**2]], two)


def test_lookup():
    assert M2[(2,), (1, 1)] == 1
    assert M2[(1, 1), (2,)] == xi**2
    assert M2.row((2,)) == [1 + xi**2, 1]
    assert M2.column((1, 1)) == [1, 1]
    assert M2.shape == (2, 2)

def test_labels_must_increase():
    with pytest.raises(AssertionError):
        LabeledMatrix([[1, 0], [0, 1]], [Composition((1,)), empty])
    with pytest.raises(AssertionError):
        LabeledMatrix([[1, 0]], [empty])

def test_products():
    assert (M2 @ N2).is_identity()
    assert (N2 @ M2).is_identity()
    assert M2 - M2 == LabeledMatrix([[0, 0], [0, 0]], two)
    with pytest.raises(AssertionError):
        M2 @ LabeledMatrix([[1]], [empty])

def test_det():
    counter = LabeledMatrix([[1, 0, 3], [0, 1, 2*xi], [0, 0, 1 + xi**2]],
                            [empty, Composition((1,)), Composition((2,))])
    assert counter.det() == 1 + xi**2
    assert M2.det() == 1
    assert LabeledMatrix([[0, 1], [1, 0]], two).det() == -1
    assert LabeledMatrix([[xi, 1], [xi**2, xi]], two).det() == 0
    assert det([]) == ONE
    with pytest.raises(NotUnimodular) as e:
        invert_exact(counter)
    assert e.value.det == 1 + xi**2

def test_inverse():
    assert invert_exact(M2) == N2
    assert M2.inverse().inverse() == M2
    swap = LabeledMatrix([[0, 1], [1, 0]], two)
    assert invert_exact(swap) == swap
    rect = LabeledMatrix([[1, 0]], [empty], two)
    with pytest.raises(AssertionError):
        invert_exact(rect)

def test_restrict_and_transpose():
    assert M2.restrict([(1, 1)], [(2,)])[(1, 1), (2,)] == xi**2
    assert M2.transpose()[(2,), (1, 1)] == xi**2
    assert M2.specialize0()[0, 0] == 1

def test_blocks():
    b = block_diag(eye(1), eye(2))
    assert LabeledMatrix(b, [empty] + two).is_identity()

def test_json():
    data = N2.to_json()
    assert data == {"rows": [[2], [1, 1]], "cols": [[2], [1, 1]],
                    "entries": [[[1], [-1]], [[0, 0, -1], [1, 0, 1]]]}
    assert LabeledMatrix.from_json(data) == N2

def test_printing():
    text = str(M2)
    assert "1+ξ²" in text
    assert text.splitlines()[0].split("|")[1].split() == ["2", "1,1"]


if __name__ == "__main__":
    test_inverse()
    test_det()
