# -*- coding: utf-8 -*-
"""
Matrices over ℤ[ξ] whose rows and columns carry composition labels.
"""

import numpy as np

from heckecentre.combinat import Composition
from heckecentre.poly import Poly, ZERO, ONE


class NotUnimodular(ArithmeticError):
    """ The determinant is not ±1, so there is no inverse over ℤ[ξ]. """
    def __init__(self, det):
        super().__init__("Determinant {} is not a unit of ℤ[ξ].".format(det))
        self.det = det


def _as_entries(rows):
    """ nested sequence (or array) of ints/Polys -> 2d object array of Polys """
    rows = [list(r) for r in rows]
    entries = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, r in enumerate(rows):
        assert len(r) == entries.shape[1], "Ragged matrix rows."
        for j, x in enumerate(r):
            entries[i, j] = Poly.coerce(x)
    return entries

def zeros(rows, cols):
    entries = np.empty((rows, cols), dtype=object)
    entries.fill(ZERO)
    return entries

def eye(n):
    entries = zeros(n, n)
    for i in range(n):
        entries[i, i] = ONE
    return entries


class LabeledMatrix:
    """ A wrapper around a 2d numpy array of Polys, with labelled rows and columns.
    Label lists are strictly increasing in the composition order.
    Supports @, +, -, unary -, == and lookup by labels: M[λ, μ].
    Instances are immutable (the array is flagged read-only).
    """
    def __init__(self, entries, row_labels, col_labels=None):
        if col_labels is None:
            col_labels = row_labels
        if not (isinstance(entries, np.ndarray) and entries.dtype == object and entries.ndim == 2):
            entries = _as_entries(entries)
        else:
            entries = entries.copy()
        self.row_labels = tuple(Composition(lam) for lam in row_labels)
        self.col_labels = tuple(Composition(lam) for lam in col_labels)
        assert entries.shape == (len(self.row_labels), len(self.col_labels)), \
               "Entries of shape {} don't match {} row and {} column labels".format(
                   entries.shape, len(self.row_labels), len(self.col_labels))
        for labels in (self.row_labels, self.col_labels):
            assert all(a < b for a, b in zip(labels, labels[1:])), \
                   "Labels must be strictly increasing: {}".format(labels)
        entries.flags.writeable = False
        self.entries = entries
        self._rows = {lam: i for i, lam in enumerate(self.row_labels)}
        self._cols = {mu: j for j, mu in enumerate(self.col_labels)}

    @classmethod
    def identity(cls, labels):
        return cls(eye(len(labels)), labels, labels)

    @property
    def shape(self):
        return self.entries.shape

    @property
    def is_square(self):
        return self.shape[0] == self.shape[1]

    def __getitem__(self, key):
        lam, mu = key
        return self.entries[self._rows[Composition(lam)], self._cols[Composition(mu)]]

    def row(self, lam):
        return list(self.entries[self._rows[Composition(lam)]])

    def column(self, mu):
        return list(self.entries[:, self._cols[Composition(mu)]])

    def relabel(self, row_labels, col_labels=None):
        return LabeledMatrix(self.entries, row_labels, row_labels if col_labels is None else col_labels)

    def restrict(self, row_labels, col_labels):
        rows = [self._rows[Composition(lam)] for lam in row_labels]
        cols = [self._cols[Composition(mu)] for mu in col_labels]
        return LabeledMatrix(self.entries[np.ix_(rows, cols)], row_labels, col_labels)

    def transpose(self):
        return LabeledMatrix(self.entries.T, self.col_labels, self.row_labels)

    def specialize0(self):
        """ ξ -> 0, as an integer array """
        return np.vectorize(lambda p: p.specialize0(), otypes=[object])(self.entries)

    def is_identity(self):
        return self.is_square and self.row_labels == self.col_labels and \
               all(self.entries[i, j] == (1 if i == j else 0)
                   for i in range(self.shape[0]) for j in range(self.shape[1]))

    ######## arithmetic

    def __matmul__(self, other):
        assert self.col_labels == other.row_labels, "Can't multiply: column labels {} vs row labels {}".format(
                                                        self.col_labels, other.row_labels)
        if not self.col_labels: # numpy would hand back int zeros
            return LabeledMatrix(zeros(*self.shape[:1], *other.shape[1:]), self.row_labels, other.col_labels)
        return LabeledMatrix(self.entries @ other.entries, self.row_labels, other.col_labels)

    def __add__(self, other):
        assert self.row_labels == other.row_labels and self.col_labels == other.col_labels
        return LabeledMatrix(self.entries + other.entries, self.row_labels, self.col_labels)

    def __neg__(self):
        return LabeledMatrix(-self.entries, self.row_labels, self.col_labels)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, LabeledMatrix):
            return NotImplemented
        return self.row_labels == other.row_labels and self.col_labels == other.col_labels and \
               all(a == b for a, b in zip(self.entries.flat, other.entries.flat))

    __hash__ = None

    def det(self):
        return det(self.entries)

    def inverse(self):
        return invert_exact(self)

    ######## representation

    def to_json(self):
        return {"rows": [lam.to_json() for lam in self.row_labels],
                "cols": [mu.to_json() for mu in self.col_labels],
                "entries": [[p.to_json() for p in row] for row in self.entries]}

    @staticmethod
    def from_json(data):
        entries = [[Poly(c) for c in row] for row in data["entries"]]
        return LabeledMatrix(entries if entries else zeros(0, len(data["cols"])),
                             data["rows"], data["cols"])

    def __str__(self):
        cells = [[str(p) for p in row] for row in self.entries]
        heads = [str(mu) for mu in self.col_labels]
        width = max([len(c) for row in cells for c in row] + [len(h) for h in heads] + [1])
        side = max([len(str(lam)) for lam in self.row_labels] + [1])
        lines = [" "*side + " | " + "  ".join(h.rjust(width) for h in heads)]
        for lam, row in zip(self.row_labels, cells):
            lines.append(str(lam).rjust(side) + " | " + "  ".join(c.rjust(width) for c in row))
        return "\n".join(lines)

    def __repr__(self):
        return "LabeledMatrix({}x{})".format(*self.shape)


def block(blocks, row_labels, col_labels=None):
    """ LabeledMatrix from a 2d arrangement of object arrays (as np.block). """
    return LabeledMatrix(np.block(blocks), row_labels, col_labels)

def block_diag(a, b):
    return np.block([[a, zeros(a.shape[0], b.shape[1])],
                     [zeros(b.shape[0], a.shape[1]), b]])


######## exact linear algebra

def det(entries):
    """ Fraction-free (Bareiss) elimination; every division is exact. """
    m = [list(row) for row in entries]
    n = len(m)
    assert all(len(row) == n for row in m), "det of a non-square matrix"
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n-1):
        if not m[k][k]: # look for a pivot below
            for i in range(k+1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k+1, n):
            for j in range(k+1, n):
                m[i][j] = (m[k][k]*m[i][j] - m[i][k]*m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[n-1][n-1] * sign


def adjugate(entries):
    n = entries.shape[0]
    adj = zeros(n, n)
    if n == 1:
        adj[0, 0] = ONE
        return adj
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(entries, i, axis=0), j, axis=1)
            cofactor = det(minor)
            adj[j, i] = cofactor if (i + j) % 2 == 0 else -cofactor
    return adj


def invert_exact(m):
    """ The inverse over ℤ[ξ] as adjugate/det, for det = ±1.
    Rows of the result carry the column labels of m and vice versa.
    """
    assert m.is_square, "Only square matrices can be inverted."
    d = m.det()
    if not d.is_unit():
        raise NotUnimodular(d)
    adj = adjugate(m.entries)
    if d == -1:
        adj = -adj
    return LabeledMatrix(adj, m.col_labels, m.row_labels)
