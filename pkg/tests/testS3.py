# -*- coding: utf-8 -*-

import pytest

from heckecentre.combinat import Composition, empty
from heckecentre.poly import xi
from heckecentre.settings import _supported
from heckecentre import s3
from heckecentre.s3 import S3Coefficients, c_column, closed_form, coefficient_table


C = Composition

# coefficient columns, in order
TABLE = [((), (1, 0, 0)), ((1,), (0, 1, 0)),
         ((2,), (3, 0, 1)), ((1, 1), (0, 0, 1)),
         ((3,), (0, 3, 0)), ((2, 1), (0, 2, 0)),
         ((4,), (7, 0, 5)), ((2, 2), (2, 0, 1)), ((3, 1), (2, 0, 4)),
         ((5,), (0, 11, 0)), ((3, 2), (0, 4, 0)), ((4, 1), (0, 6, 0)),
         ((6,), (23, 0, 21)), ((3, 3), (2, 0, 3)), ((4, 2), (8, 0, 6)), ((5, 1), (10, 0, 12)),
         ((7,), (0, 43, 0)), ((4, 3), (0, 8, 0)), ((5, 2), (0, 12, 0)), ((6, 1), (0, 22, 0))]

FOUR_BASES = [(empty, C((1,)), C((2,))),
              (empty, C((1,)), C((1, 1))),
              (empty, C((1,)), C((2, 2))),
              (C((1,)), C((2,)), C((2, 2)))]


def test_table():
    rows = coefficient_table(7)
    assert [mu for mu, _ in rows] == [C(mu) for mu, _ in TABLE]
    assert [tuple(c) for _, c in rows] == [c for _, c in TABLE]

def test_both_paths_agree():
    for mu, expected in TABLE:
        assert tuple(c_column(mu, "relations")) == expected
    assert s3.check_fast_path(14)
    with pytest.raises(NotImplementedError):
        c_column((2,), "guess")

def test_three_parts_vanish():
    with pytest.raises(ValueError):
        c_column((1, 1, 1))

def test_closed_forms():
    assert closed_form((6,)) == S3Coefficients(23, 0, 21)
    assert closed_form((3, 3)) == S3Coefficients(2, 0, 3)
    assert closed_form((5, 1)) == S3Coefficients(10, 0, 12)
    assert s3.check_closed_forms(14)

def test_lemmas():
    assert s3.check_parity(10)
    assert s3.check_evenness(14)
    assert s3.check_recurrences(14)

@pytest.mark.skipif("sympy" not in _supported, reason="needs sympy")
def test_relations():
    assert s3.check_relations(14)

def test_coefficient_arithmetic():
    a, b = S3Coefficients(1, 2, 3), S3Coefficients(0, 1, 1)
    assert a + b == S3Coefficients(1, 3, 4)
    assert a - b == S3Coefficients(1, 1, 2)
    assert 2*a == a*2 == S3Coefficients(2, 4, 6)
    assert a[2] == 3 and list(a) == [1, 2, 3]
    assert S3Coefficients(0, 0, 0).is_zero
    assert S3Coefficients(2, 0, 4).all_even

def test_spanning_determinant():
    assert spanning(2, 1) == 1
    assert spanning(1, 1) == 3
    assert spanning(4, 2) == 5
    for i in range(1, 11):
        for j in range(1, 11):
            assert s3.spanning_det(i, j) == s3.spanning_det_direct(i, j)
    assert s3.unit_spanning_pairs(30) == [(2, 1)]

spanning = s3.spanning_det

def test_classification():
    assert s3.enumerate_zs3_bases(20) == FOUR_BASES
    assert s3.enumerate_zs3_bases(8) == s3.brute_force_zs3_bases(8)
    assert s3.gamma21_spanners(20) == [C((1,))]
    assert s3.gamma3_unit_monomials(20) == [C((2,)), C((1, 1)), C((2, 2))]

def test_h3_table():
    table = s3.h3_table()
    assert table[(2,), (2, 2)] == 1 + 4*xi**2 + xi**4
    assert table[(), (2,)] == 3
    discrepancies = s3.h3_table_discrepancies()
    assert discrepancies == [(C((2, 2)), C((2,)), 1 + 4*xi + xi**2, 1 + 4*xi**2 + xi**4)]

def test_h3_unique_basis():
    with pytest.warns(UserWarning):
        assert s3.h3_unique_basis() == (empty, C((1,)), C((1, 1)))


if __name__ == "__main__":
    test_table()
    test_classification()
