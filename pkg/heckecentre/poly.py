# -*- coding: utf-8 -*-
"""
The ground ring ℤ[ξ].

Poly is an immutable dense polynomial with arbitrary precision integer
coefficients in ascending degree, e.g. 1+ξ² is Poly((1, 0, 1)).
Python ints mix freely with Polys in arithmetic, which lets numpy object
arrays of Polys do matrix products.
"""

from heckecentre.utils import isint, superscript


class NotDivisible(ArithmeticError):
    pass

class DivisionByZero(ZeroDivisionError):
    pass


def _trim(c):
    n = len(c)
    while n and not c[n-1]:
        n -= 1
    return tuple(c[:n])


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            coeffs = coeffs.coeffs
        elif isint(coeffs):
            coeffs = (coeffs,)
        coeffs = list(coeffs)
        if not all(isint(c) for c in coeffs):
            raise ValueError("Polynomial coefficients must be integers, got {}.".format(coeffs))
        self.coeffs = _trim([int(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs): # coeffs already trimmed
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @staticmethod
    def coerce(x):
        if isinstance(x, Poly):
            return x
        if isint(x):
            return Poly._raw((int(x),) if x else ())
        raise TypeError("Can't use {} as a polynomial in ξ.".format(type(x).__name__))

    @staticmethod
    def monomial(degree, coeff=1):
        return Poly._raw((0,)*degree + (coeff,)) if coeff else ZERO

    @property
    def degree(self):
        return len(self.coeffs) - 1 # -1 for zero

    def is_unit(self):
        return self.coeffs in ((1,), (-1,))

    def specialize0(self):
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, x):
        result = 0
        for c in reversed(self.coeffs):
            result = result*x + c
        return result

    def shift(self, k=1):
        """ multiplication by ξ^k """
        return Poly._raw((0,)*k + self.coeffs) if self.coeffs else self

    ######## arithmetic

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, Poly):
            if not isint(other):
                return NotImplemented
            other = Poly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return Poly._raw(a)
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Poly._raw(_trim(res))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if not isinstance(other, Poly) and not isint(other):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not isint(other):
                return NotImplemented
            other = Poly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        res = [0]*(len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i+j] += x*y
        return Poly._raw(_trim(res))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k):
        assert isint(k) and k >= 0
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def exact_div(self, other):
        """ Returns q with self = q*other, raising NotDivisible if there is no
        such q in ℤ[ξ].
        """
        other = Poly.coerce(other)
        b = other.coeffs
        if not b:
            raise DivisionByZero("Division of {} by zero.".format(self))
        a = self.coeffs
        if not a:
            return ZERO
        if len(a) < len(b):
            raise NotDivisible("{} is not divisible by {}.".format(self, other))

        rem = list(a)
        q = [0]*(len(a) - len(b) + 1)
        lead = b[-1]
        for i in range(len(q)-1, -1, -1):
            c = rem[i + len(b) - 1]
            if c % lead:
                raise NotDivisible("{} is not divisible by {}.".format(self, other))
            f = c // lead
            q[i] = f
            if f:
                for j, y in enumerate(b):
                    rem[i+j] -= f*y
        if any(rem):
            raise NotDivisible("{} is not divisible by {}.".format(self, other))
        return Poly._raw(_trim(q))

    def __floordiv__(self, other):
        return self.exact_div(other)

    ######## comparison

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isint(other):
            return self.coeffs == Poly.coerce(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    ######## representation

    def to_json(self):
        return list(self.coeffs)

    @staticmethod
    def from_json(coeffs):
        return Poly(coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if k == 0 else ("ξ" if k == 1 else "ξ" + superscript(k))
            if k and abs(c) == 1:
                body = power
            else:
                body = str(abs(c)) + power
            terms.append(("-" if c < 0 else "+", body))
        text = "".join(sign + body for sign, body in terms)
        return text[1:] if text.startswith("+") else text

    def __repr__(self):
        return "Poly({})".format(str(self))

    @property
    def is_monomial(self):
        return sum(1 for c in self.coeffs if c) == 1


ZERO = Poly._raw(())
ONE = Poly._raw((1,))
xi = Poly._raw((0, 1))


def exact_div(a, b): return Poly.coerce(a).exact_div(b)
def is_unit(a): return Poly.coerce(a).is_unit()
def specialize0(a): return Poly.coerce(a).specialize0()
