"""Independent exact arithmetic in Z[zeta_24] for cross-checking the library.

Elements of Q(zeta_24) are represented as length-8 tuples of Fractions: the
coefficients of 1, x, ..., x^7 modulo the 24th cyclotomic polynomial
Phi_24(x) = x^8 - x^4 + 1.  Every root of unity of order dividing 24 and
every quadratic irrationality used by the supported rings (i, sqrt(-2),
omega = e^{i pi/3}) lives in this field, so eigenvalue identities such as
"lambda_1 * lambda_2 = det" can be verified without trusting any library
code.  This module intentionally reimplements the arithmetic from scratch.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple

Cyc = Tuple[Fraction, ...]

ZERO: Cyc = (Fraction(0),) * 8
ONE: Cyc = (Fraction(1),) + (Fraction(0),) * 7


def from_rational(a) -> Cyc:
    return (Fraction(a),) + (Fraction(0),) * 7


def add(u: Cyc, v: Cyc) -> Cyc:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Cyc, v: Cyc) -> Cyc:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Cyc) -> Cyc:
    return tuple(-a for a in u)


def mul(u: Cyc, v: Cyc) -> Cyc:
    # schoolbook product, degree <= 14, then reduce by x^8 = x^4 - 1
    prod = [Fraction(0)] * 15
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    prod[i + j] += a * b
    for k in range(14, 7, -1):
        c = prod[k]
        if c:
            prod[k] = Fraction(0)
            prod[k - 4] += c
            prod[k - 8] -= c
    return tuple(prod[:8])


def power(u: Cyc, n: int) -> Cyc:
    result = ONE
    base = u
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result


def zeta(n: int, k: int) -> Cyc:
    """e^{2 pi i k / n} for n dividing 24."""
    if 24 % n != 0:
        raise ValueError(f"order {n} does not divide 24")
    e = (24 // n) * k % 24
    out = ONE
    x = (Fraction(0), Fraction(1)) + (Fraction(0),) * 6
    for _ in range(e):
        out = mul(out, x)
    return out


I_UNIT = zeta(4, 1)
SQRT_MINUS_2 = add(zeta(8, 1), zeta(8, 3))
OMEGA = zeta(6, 1)  # (1 + sqrt(-3)) / 2


def embed_quad(ring, x) -> Cyc:
    """Image of a QuadElem inside Q(zeta_24); ring must be one of the
    supported specs (d in {0, 1, 2, 3})."""
    theta_img = {
        (0, 1): ZERO,
        (1, 1): I_UNIT,
        (1, 2): mul(from_rational(2), I_UNIT),
        (2, 1): SQRT_MINUS_2,
        (3, 1): OMEGA,
        (3, 2): mul(from_rational(2), OMEGA),
    }[(ring.d, ring.f)]
    return add(from_rational(x.a), mul(from_rational(x.b), theta_img))
