"""Exact scalars over the Gaussian rationals and first-order jets on top of them.

Every quantity in this package is computed over Q(i); there is no floating
point anywhere.  Rationals are gmpy2.mpq when available (much faster), with
fractions.Fraction as a fallback.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is normally present
    _mpq = Fraction

_ZERO = _mpq(0)
_ONE = _mpq(1)


class QI:
    """A Gaussian rational re + im*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _mpq(re)
        self.im = _mpq(im)

    @classmethod
    def _raw(cls, re, im):
        # fast path: parts are already mpq
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QI._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QI._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QI._raw(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return QI._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c, d = other.re, other.im
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return QI._raw((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return QI._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        return QI._raw(self.re, -self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_rational(self):
        return self.im == 0

    def as_fraction(self):
        if self.im != 0:
            raise ValueError("not a rational number: %s" % self)
        return Fraction(int(self.re.numerator), int(self.re.denominator))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return "QI(%s)" % format_scalar(self)


def _coerce(v):
    if isinstance(v, QI):
        return v
    if isinstance(v, int):
        return QI._raw(_mpq(v), _ZERO)
    if isinstance(v, (Fraction, type(_ONE))):
        return QI._raw(_mpq(v), _ZERO)
    return NotImplemented


ZERO = QI(0)
ONE = QI(1)
I = QI(0, 1)


def qi(re=0, im=0):
    return QI(re, im)


def rat(num, den=1):
    return QI._raw(_mpq(num, den), _ZERO)


# --- external scalar syntax -------------------------------------------------
#
# Grammar: optional rational part a or a/b, optional imaginary part c*i or
# c/d*i, joined by a sign.  Examples: "3", "-1/2", "2+1/3*i", "-1/2*i", "0".

_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = _re.compile(
    r"^\s*(?:(?P<re>%(r)s)(?=\s*(?:[+-]|$)))?\s*"
    r"(?:(?P<im>%(r)s)\s*\*\s*i|(?P<imsign>[+-]?)\s*i)?\s*$" % {"r": _RAT}
)


def parse_scalar(text):
    """Parse 'a/b+c/d*i' style input into a QI scalar."""
    m = _SCALAR_RE.match(text)
    if m is None or (m.group("re") is None and m.group("im") is None
                     and m.group("imsign") is None):
        raise ValueError("bad scalar syntax: %r" % text)
    # mpq() rejects a leading '+', Fraction does not
    re_part = _mpq(Fraction(m.group("re"))) if m.group("re") else _ZERO
    if m.group("im") is not None:
        im_part = _mpq(Fraction(m.group("im")))
    elif m.group("imsign") is not None:
        im_part = -_ONE if m.group("imsign") == "-" else _ONE
    else:
        im_part = _ZERO
    return QI._raw(re_part, im_part)


def format_scalar(z):
    """Canonical form: '0', '3', '-1/2', '1/2+3*i', '-2*i', '1-i' never used
    (imaginary part always carries '*i')."""
    if z.im == 0:
        return str(z.re)
    imtxt = "%s*i" % z.im
    if z.re == 0:
        return imtxt
    if z.im > 0:
        return "%s+%s" % (z.re, imtxt)
    return "%s%s" % (z.re, imtxt)


class Jet:
    """Dual number a + b*eps over Q(i); eps**2 = 0.  Used for exact
    directional derivatives of polynomial maps."""

    __slots__ = ("val", "eps")

    def __init__(self, val, eps=ZERO):
        self.val = val if isinstance(val, QI) else _coerce(val)
        self.eps = eps if isinstance(eps, QI) else _coerce(eps)

    def __add__(self, other):
        other = _jcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Jet(self.val + other.val, self.eps + other.eps)

    __radd__ = __add__

    def __sub__(self, other):
        other = _jcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Jet(self.val - other.val, self.eps - other.eps)

    def __rsub__(self, other):
        other = _jcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Jet(other.val - self.val, other.eps - self.eps)

    def __mul__(self, other):
        other = _jcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Jet(self.val * other.val,
                   self.val * other.eps + self.eps * other.val)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _jcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        v = self.val / other.val
        return Jet(v, (self.eps - v * other.eps) / other.val)

    def __neg__(self):
        return Jet(-self.val, -self.eps)

    def __eq__(self, other):
        other = _jcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.val == other.val and self.eps == other.eps

    def __bool__(self):
        return bool(self.val) or bool(self.eps)

    def __repr__(self):
        return "Jet(%s, %s)" % (self.val, self.eps)


def _jcoerce(v):
    if isinstance(v, Jet):
        return v
    c = _coerce(v)
    if c is NotImplemented:
        return NotImplemented
    return Jet(c, ZERO)
