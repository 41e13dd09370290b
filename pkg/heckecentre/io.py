# -*- coding: utf-8 -*-
"""
This file contains the entire interface of the library with the OS:
writing results (JSON, CSV, plain text) to stdout or to files, and the
on-disk cache of N^(k) matrices.

There is a class for each output format, providing the same functions
for every kind of result:
    * matrix(m)                    a LabeledMatrix
    * basis(n, elements, gammas)   basis elements and their Γ expansions
    * table(rows)                  (μ, S3Coefficients) pairs
    * report(items)                name -> value pairs (verification, enumeration)

Each returns a string; write_output puts it somewhere.
"""

import os
import io
import sys
import csv
import json
import warnings

from heckecentre.combinat import Composition
from heckecentre.matrix import LabeledMatrix
from heckecentre.centre import format_expansion


def _label(lam):
    return str(Composition(lam))


def _plain(value):
    """ report values -> JSON-friendly values """
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Composition):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)


class _IO_json:
    name = "json"

    @staticmethod
    def dumps(obj):
        return json.dumps(obj, ensure_ascii=False, indent=1) + "\n"

    @staticmethod
    def matrix(m):
        return _IO_json.dumps(m.to_json())

    @staticmethod
    def basis(n, elements, gammas):
        return _IO_json.dumps([{"lambda": e.label.to_json(),
                                "monomial_coeffs": {_label(mu): c.to_json() for mu, c in e.provenance.items()},
                                "gamma_coeffs": {_label(nu): c.to_json() for nu, c in sorted(g.items())}}
                               for e, g in zip(elements, gammas)])

    @staticmethod
    def table(rows):
        return _IO_json.dumps([{"mu": mu.to_json(), "coeffs": list(c)} for mu, c in rows])

    @staticmethod
    def report(items):
        return _IO_json.dumps({name: _plain(v) for name, v in items.items()})


class _IO_csv:
    name = "csv"

    @staticmethod
    def _rows(rows):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(rows)
        return buffer.getvalue()

    @staticmethod
    def matrix(m):
        return _IO_csv._rows([[""] + [_label(mu) for mu in m.col_labels]] +
                             [[_label(lam)] + [str(p) for p in m.row(lam)] for lam in m.row_labels])

    @staticmethod
    def basis(n, elements, gammas):
        rows = [["lambda", "kind", "index", "coeff"]]
        for e, g in zip(elements, gammas):
            rows += [[_label(e.label), "m", _label(mu), str(c)] for mu, c in e.provenance.items()]
            rows += [[_label(e.label), "Γ", _label(nu), str(c)] for nu, c in sorted(g.items())]
        return _IO_csv._rows(rows)

    @staticmethod
    def table(rows):
        return _IO_csv._rows([["mu", "1", "s1", "s1s2"]] + [[_label(mu)] + list(c) for mu, c in rows])

    @staticmethod
    def report(items):
        return _IO_csv._rows([["name", "value"]] + [[name, _text_value(v)] for name, v in items.items()])


def _text_value(v):
    if isinstance(v, bool):
        return "pass" if v else "FAIL"
    if isinstance(v, Composition):
        return "m_{{{}}}".format(v)
    if isinstance(v, tuple): # a set of monomials
        return "{" + ", ".join(_text_value(x) for x in v) + "}"
    if isinstance(v, list):
        return "; ".join(_text_value(x) for x in v) if v else "none"
    return str(v)


class _IO_text:
    name = "text"

    @staticmethod
    def matrix(m):
        return str(m) + "\n"

    @staticmethod
    def basis(n, elements, gammas):
        return "".join("{} = {}\n".format(e, format_expansion(g, "Γ")) for e, g in zip(elements, gammas))

    @staticmethod
    def table(rows):
        width = max([len(_label(mu)) for mu, _ in rows] + [2])
        lines = ["{}  {:>6} {:>6} {:>6}".format("μ".rjust(width), "1", "s1", "s1s2")]
        lines += ["{}  {:>6} {:>6} {:>6}".format(_label(mu).rjust(width), *c) for mu, c in rows]
        return "\n".join(lines) + "\n"

    @staticmethod
    def report(items):
        width = max([len(name) for name in items] + [1])
        return "".join("{}  {}\n".format(name.ljust(width), _text_value(v)) for name, v in items.items())


_formats = {f.name: f for f in (_IO_json, _IO_csv, _IO_text)}

def get_format(name):
    if name not in _formats:
        raise NotImplementedError("Output format '{}' not supported (use one of {}).".format(
                                  name, ", ".join(_formats)))
    return _formats[name]


def write_output(text, filename=None, stream=None):
    """ to a file if a filename is given, otherwise to stream (stdout by default) """
    if filename is None:
        (stream or sys.stdout).write(text)
        return
    folder = os.path.dirname(filename)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(filename, "w", encoding="utf-8", newline="") as file:
        file.write(text)


class MatrixCache:
    """ JSON files {which}_k{k}_{route}.json in a folder, e.g. N_k3_direct.json.
    A basis of Z(H_n) needs N^(0), ..., N^(n-1); each is computed once and
    picked up again by later runs.
    """
    def __init__(self, cache_dir):
        self.cache_dir = cache_dir

    def filename(self, which, k, route):
        return os.path.join(self.cache_dir, "{}_k{}_{}.json".format(which, k, route))

    def load(self, which, k, route):
        filename = self.filename(which, k, route)
        if not os.path.isfile(filename):
            return None
        try:
            with open(filename, encoding="utf-8") as file:
                return LabeledMatrix.from_json(json.load(file))
        except (ValueError, KeyError, AssertionError) as e:
            warnings.warn("Ignoring unreadable cache file {} ({}).".format(filename, e))
            return None

    def store(self, which, k, route, m):
        write_output(_IO_json.matrix(m), self.filename(which, k, route))

    def get(self, which, k, route, compute):
        m = self.load(which, k, route)
        if m is None:
            m = compute()
            self.store(which, k, route, m)
        return m

    def n_matrices(self, route):
        """ k -> N^(k), through the cache """
        from heckecentre.tower import n_matrix
        return lambda k: self.get("N", k, route, lambda: n_matrix(k, route))
