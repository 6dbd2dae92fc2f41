"""Exact scalars over Q or a quadratic extension Q(sqrt(s)).

A Field fixes the extension once (s = None for plain Q, otherwise a squarefree
integer, not 0 or 1).  Every Scalar stores u + v*sqrt(s) with u, v Fractions;
in the rational field v is identically 0.  Scalars from different fields never
mix.  Serialization: "p/q" for rationals, "[p/q, r/t]" for u + v*sqrt(s).
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from ..errors import PreconditionError


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def _rational_sqrt(f: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if f < 0:
        return None
    p, q = f.numerator, f.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


class Field:
    """Field context: Q when s is None, else Q(sqrt(s)) with s squarefree."""

    __slots__ = ("s",)

    def __init__(self, s: int | None = None):
        if s is not None:
            if not isinstance(s, int) or s in (0, 1) or not _is_squarefree(s):
                raise PreconditionError(f"extension modulus must be squarefree and not 0/1, got {s!r}")
        self.s = s

    @property
    def is_rational(self) -> bool:
        return self.s is None

    def scalar(self, u, v=0) -> Scalar:
        u = Fraction(u)
        v = Fraction(v)
        if self.s is None and v != 0:
            raise PreconditionError("nonzero sqrt part in a rational field")
        return Scalar(u, v, self)

    @property
    def zero(self) -> Scalar:
        return self.scalar(0)

    @property
    def one(self) -> Scalar:
        return self.scalar(1)

    def sqrt_gen(self) -> Scalar:
        if self.s is None:
            raise PreconditionError("rational field has no extension generator")
        return self.scalar(0, 1)

    def coerce(self, x) -> Scalar:
        if isinstance(x, Scalar):
            if x.field != self:
                raise PreconditionError("scalar from a different field")
            return x
        return self.scalar(x)

    def parse(self, text: str) -> Scalar:
        text = text.strip()
        if text.startswith("["):
            if self.s is None:
                raise PreconditionError(f"quadratic literal {text!r} in a rational field")
            if not text.endswith("]"):
                raise PreconditionError(f"malformed scalar literal {text!r}")
            parts = text[1:-1].split(",")
            if len(parts) != 2:
                raise PreconditionError(f"malformed scalar literal {text!r}")
            return self.scalar(Fraction(parts[0].strip()), Fraction(parts[1].strip()))
        return self.scalar(Fraction(text))

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.s == other.s

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return hash(("Field", self.s))

    def __repr__(self) -> str:
        return "Field(Q)" if self.s is None else f"Field(Q(sqrt({self.s})))"


class Scalar:
    __slots__ = ("u", "v", "field")

    def __init__(self, u: Fraction, v: Fraction, field: Field):
        self.u = u
        self.v = v
        self.field = field

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise PreconditionError("mixing scalars from different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.u + o.u, self.v + o.v, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.u, -self.v, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.u - o.u, self.v - o.v, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        s = self.field.s
        if s is None:
            return Scalar(self.u * o.u, Fraction(0), self.field)
        return Scalar(self.u * o.u + s * self.v * o.v, self.u * o.v + self.v * o.u, self.field)

    __rmul__ = __mul__

    def conjugate(self) -> Scalar:
        return Scalar(self.u, -self.v, self.field)

    def norm(self) -> Fraction:
        """u^2 - s*v^2 (rational)."""
        s = self.field.s
        if s is None:
            return self.u * self.u
        return self.u * self.u - s * self.v * self.v

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        n = self.norm()
        return Scalar(self.u / n, -self.v / n, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sqrt(self):
        """A square root in the same field, or None if there is none."""
        f = self.field
        if self.is_zero():
            return f.zero
        if f.s is None:
            r = _rational_sqrt(self.u)
            return None if r is None else f.scalar(r)
        A, B, s = self.u, self.v, f.s
        if B == 0:
            r = _rational_sqrt(A)
            if r is not None:
                return f.scalar(r)
            r = _rational_sqrt(A / s)
            if r is not None:
                return f.scalar(0, r)
            return None
        # (a + b*sqrt(s))^2 = A + B*sqrt(s): a^2 + s b^2 = A, 2ab = B.
        w = _rational_sqrt(A * A - s * B * B)
        if w is None:
            return None
        for half in (( A + w) / 2, (A - w) / 2):
            a = _rational_sqrt(half)
            if a is not None and a != 0:
                b = B / (2 * a)
                cand = f.scalar(a, b)
                if cand * cand == self:
                    return cand
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.u == other.u and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self) -> int:
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.field.s))

    def serialize(self) -> str:
        if self.field.s is None:
            return f"{self.u.numerator}/{self.u.denominator}"
        return (f"[{self.u.numerator}/{self.u.denominator}, "
                f"{self.v.numerator}/{self.v.denominator}]")

    def __repr__(self) -> str:
        if self.field.s is None or self.v == 0:
            return str(self.u)
        return f"({self.u}+{self.v}*sqrt({self.field.s}))"


QQ = Field()
