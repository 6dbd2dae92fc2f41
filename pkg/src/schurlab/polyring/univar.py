"""Univariate helpers over an exact Field: gcd, factoring, root extraction.

Polynomials are plain lists of Scalars, ascending by exponent.  Factoring is
delegated to sympy (over the rationals, or over the quadratic extension via
its algebraic-number support); everything coming back from sympy is converted
to Scalars and re-checked in exact arithmetic here.
"""
from __future__ import annotations

from fractions import Fraction

import sympy

from ..errors import PreconditionError
from ..exact_math import Field, Scalar


def trim(coeffs: list[Scalar]) -> list[Scalar]:
    out = list(coeffs)
    while out and out[-1].is_zero():
        out.pop()
    return out


def degree(coeffs: list[Scalar]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(trim(coeffs)) - 1


def eval_univar(coeffs, x: Scalar) -> Scalar:
    total = x.field.zero
    for c in reversed(list(coeffs)):
        total = total * x + c
    return total


def monic(coeffs: list[Scalar]) -> list[Scalar]:
    t = trim(coeffs)
    if not t:
        return t
    inv = t[-1].inverse()
    return [c * inv for c in t]


def univar_gcd(field: Field, a, b) -> list[Scalar]:
    """Monic gcd by the Euclid remainder loop."""
    a, b = trim(a), trim(b)
    while b:
        # a mod b
        r = list(a)
        binv = b[-1].inverse()
        while len(r) >= len(b) and trim(r):
            r = trim(r)
            if len(r) < len(b):
                break
            shift = len(r) - len(b)
            q = r[-1] * binv
            for i in range(len(b)):
                r[shift + i] = r[shift + i] - q * b[i]
            r.pop()
        a, b = b, trim(r)
    return monic(a)


def scalar_to_sympy(c: Scalar):
    u = sympy.Rational(c.u.numerator, c.u.denominator)
    if c.field.is_rational or c.v == 0:
        return u
    v = sympy.Rational(c.v.numerator, c.v.denominator)
    return u + v * sympy.sqrt(sympy.Integer(c.field.s))


def scalar_from_sympy(field: Field, expr) -> Scalar:
    expr = sympy.expand(expr)
    if field.is_rational:
        r = sympy.Rational(expr)
        return field.scalar(Fraction(int(r.p), int(r.q)))
    root = sympy.sqrt(sympy.Integer(field.s))
    if field.s < 0:
        conj = sympy.expand(expr.conjugate())
    else:
        conj = sympy.expand(expr.subs(root, -root))
    u = sympy.Rational(sympy.expand((expr + conj) / 2))
    v = sympy.Rational(sympy.expand((expr - conj) / (2 * root)))
    return field.scalar(Fraction(int(u.p), int(u.q)), Fraction(int(v.p), int(v.q)))


def factor_univar(field: Field, coeffs) -> tuple[Scalar, list[tuple[list[Scalar], int]]]:
    """Factor into irreducibles over the field.  Returns (unit, [(factor, mult)]),
    factors monic of degree >= 1.  The product is re-verified exactly."""
    coeffs = trim(coeffs)
    if not coeffs:
        raise PreconditionError("factoring the zero polynomial")
    x = sympy.Symbol("x")
    expr = sympy.expand(sum(scalar_to_sympy(c) * x ** i for i, c in enumerate(coeffs)))
    if field.is_rational:
        const, parts = sympy.factor_list(expr, x)
    else:
        const, parts = sympy.factor_list(
            expr, x, extension=sympy.sqrt(sympy.Integer(field.s)))
    unit = scalar_from_sympy(field, const)
    factors: list[tuple[list[Scalar], int]] = []
    for base, mult in parts:
        mult = int(mult)
        base = sympy.expand(base)
        d = int(sympy.degree(base, x))
        if d == 0:
            unit = unit * scalar_from_sympy(field, base) ** mult
            continue
        fac = [scalar_from_sympy(field, base.coeff(x, i)) for i in range(d + 1)]
        lead = fac[-1]
        unit = unit * lead ** mult
        factors.append(([c * lead.inverse() for c in fac], mult))
    # exact re-check of the factorization
    prod = [unit]
    for fac, mult in factors:
        for _ in range(mult):
            new = [field.zero] * (len(prod) + len(fac) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(fac):
                    new[i + j] = new[i + j] + a * b
            prod = new
    assert trim(prod) == coeffs, "factorization failed exact re-check"
    factors.sort(key=lambda fm: (len(fm[0]), [c.serialize() for c in fm[0]]))
    return unit, factors


def roots_with_multiplicity(field: Field, coeffs):
    """Roots in the field.  Returns (roots, unresolved) where roots is a list of
    (Scalar, multiplicity) and unresolved collects the irreducible factors of
    degree >= 2 that do not split, as (monic coefficient list, multiplicity)."""
    _, factors = factor_univar(field, coeffs)
    roots: list[tuple[Scalar, int]] = []
    unresolved: list[tuple[list[Scalar], int]] = []
    for fac, mult in factors:
        d = len(fac) - 1
        if d == 1:
            roots.append((-fac[0] / fac[1], mult))
            continue
        if d == 2:
            # quadratic formula as an independent check on the factorizer
            disc = fac[1] * fac[1] - 4 * fac[0] * fac[2]
            r = disc.sqrt()
            if r is not None:
                two_a = 2 * fac[2]
                roots.append(((-fac[1] + r) / two_a, mult))
                roots.append(((-fac[1] - r) / two_a, mult))
                continue
        unresolved.append((fac, mult))
    for root, _ in roots:
        assert eval_univar(coeffs, root).is_zero()
    return roots, unresolved
