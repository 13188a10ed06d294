"""Exact arithmetic in imaginary quadratic orders.

The ring ``R = Z + f*w*Z`` is encoded by a :class:`RingSpec` with squarefree
``d >= 1`` and conductor ``f >= 1``, where ``w = sqrt(-d)`` when
``-d % 4 != 1`` and ``w = (1 + sqrt(-d)) / 2`` when ``-d % 4 == 1``.  The pair
``(d, f) = (0, 1)`` encodes the rational integers Z.  Elements are written on
the basis ``(1, theta)`` with ``theta = f*w``, which satisfies the integral
quadratic relation ``theta**2 = p*theta + q`` recorded on the spec.

Coordinates are exact rationals so that torus points and inverses can be
represented; integrality is checked where operations require it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import BadConductor, NotAUnit, NotSquarefree, RingMismatch

Rat = Union[int, Fraction]


def _is_squarefree(n: int) -> bool:
    if n % 4 == 0:
        return False
    k = 3
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    """An imaginary quadratic order, or Z when ``(d, f) == (0, 1)``."""

    d: int
    f: int

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or self.d < 0:
            raise NotSquarefree(f"d must be a nonnegative integer, got {self.d!r}")
        if not isinstance(self.f, int) or self.f < 1:
            raise BadConductor(f"f must be a positive integer, got {self.f!r}")
        if self.d == 0:
            if self.f != 1:
                raise BadConductor("the rational integers are encoded as (d, f) = (0, 1)")
        elif not _is_squarefree(self.d):
            raise NotSquarefree(f"d must be squarefree, got {self.d}")

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    @property
    def p(self) -> int:
        """Linear coefficient in ``theta**2 = p*theta + q``."""
        if self.d == 0:
            return 0
        return self.f if (-self.d) % 4 == 1 else 0

    @property
    def q(self) -> int:
        """Constant coefficient in ``theta**2 = p*theta + q``."""
        if self.d == 0:
            return 0
        if (-self.d) % 4 == 1:
            return -self.f * self.f * (1 + self.d) // 4
        return -self.d * self.f * self.f

    def __str__(self) -> str:
        if self.d == 0:
            return "Z"
        return f"R(-{self.d},{self.f})"


def make_ring(d: int, f: int = 1) -> RingSpec:
    """Validated constructor for :class:`RingSpec`."""
    return RingSpec(d, f)


def _as_fraction(x: Rat) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadElem:
    """The element ``a + b*theta`` of the fraction field of ``ring``."""

    ring: RingSpec
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        if self.ring.is_rational and self.b != 0:
            raise BadConductor("elements over Z must have b == 0")

    # -- ring helpers ------------------------------------------------------

    def _check(self, other: "QuadElem") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"mixed rings {self.ring} and {other.ring}")

    def _coerce(self, other: Union["QuadElem", Rat]) -> "QuadElem":
        if isinstance(other, QuadElem):
            self._check(other)
            return other
        return QuadElem(self.ring, _as_fraction(other), Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Union["QuadElem", Rat]) -> "QuadElem":
        o = self._coerce(other)
        return QuadElem(self.ring, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: Union["QuadElem", Rat]) -> "QuadElem":
        o = self._coerce(other)
        return QuadElem(self.ring, self.a - o.a, self.b - o.b)

    def __rsub__(self, other: Rat) -> "QuadElem":
        return self._coerce(other) - self

    def __neg__(self) -> "QuadElem":
        return QuadElem(self.ring, -self.a, -self.b)

    def __mul__(self, other: Union["QuadElem", Rat]) -> "QuadElem":
        o = self._coerce(other)
        p, q = self.ring.p, self.ring.q
        bb = self.b * o.b
        return QuadElem(
            self.ring,
            self.a * o.a + bb * q,
            self.a * o.b + self.b * o.a + bb * p,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        n = norm(self)
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        c = conjugate(self)
        return QuadElem(self.ring, c.a / n, c.b / n)

    def __truediv__(self, other: Union["QuadElem", Rat]) -> "QuadElem":
        return self * self._coerce(other).inverse()

    def __pow__(self, n: int) -> "QuadElem":
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadElem(self.ring, Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates --------------------------------------------------------

    @property
    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*theta" if self.b != 1 else "theta"
        sign = "+" if self.b > 0 else "-"
        babs = abs(self.b)
        bstr = "theta" if babs == 1 else f"{babs}*theta"
        return f"{self.a} {sign} {bstr}"


def elem(ring: RingSpec, a: Rat, b: Rat = 0) -> QuadElem:
    """Shorthand constructor ``a + b*theta``."""
    return QuadElem(ring, _as_fraction(a), _as_fraction(b))


def zero(ring: RingSpec) -> QuadElem:
    return elem(ring, 0, 0)


def one(ring: RingSpec) -> QuadElem:
    return elem(ring, 1, 0)


def theta(ring: RingSpec) -> QuadElem:
    return elem(ring, 0, 1)


def conjugate(x: QuadElem) -> QuadElem:
    """Complex conjugation: ``a + b*theta -> (a + b*p) - b*theta``."""
    return QuadElem(x.ring, x.a + x.b * x.ring.p, -x.b)


def norm(x: QuadElem) -> Fraction:
    """``x * conjugate(x)``; positive definite for ``d >= 1``."""
    p, q = x.ring.p, x.ring.q
    return x.a * x.a + x.a * x.b * p - x.b * x.b * q


@dataclass(frozen=True)
class RootOfUnity:
    """The root of unity ``e^(2*pi*i*k/n)`` stored in lowest terms."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        k = self.k % self.n
        g = gcd(k, self.n)
        object.__setattr__(self, "k", k // g)
        object.__setattr__(self, "n", self.n // g)

    @property
    def order(self) -> int:
        return self.n

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        n = self.n * other.n // gcd(self.n, other.n)
        return RootOfUnity(self.k * (n // self.n) + other.k * (n // other.n), n)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.k, self.n)

    def __pow__(self, m: int) -> "RootOfUnity":
        return RootOfUnity(self.k * m, self.n)

    def __str__(self) -> str:
        if self.n == 1:
            return "1"
        if (self.k, self.n) == (1, 2):
            return "-1"
        return f"zeta({self.k}/{self.n})"

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n}


ONE = RootOfUnity(0, 1)
MINUS_ONE = RootOfUnity(1, 2)


def _unit_generator(ring: RingSpec) -> tuple[QuadElem, int]:
    """Generator of the unit group and its order."""
    if (ring.d, ring.f) == (1, 1):
        return theta(ring), 4
    if (ring.d, ring.f) == (3, 1):
        return theta(ring), 6
    return -one(ring), 2


def units(ring: RingSpec) -> list[QuadElem]:
    """All units of the ring, listed as powers of the canonical generator.

    ``Z[i]`` has four units ``[1, i, -1, -i]`` with ``i = theta``; the maximal
    order at ``d = 3`` has six, powers of the primitive sixth root
    ``theta = e^(pi*i/3)``; every other ring has ``[1, -1]``.
    """
    g, n = _unit_generator(ring)
    out = [one(ring)]
    for _ in range(n - 1):
        out.append(out[-1] * g)
    return out


def is_unit(x: QuadElem) -> bool:
    return x.is_integral and norm(x) == 1


def unit_to_root(x: QuadElem) -> RootOfUnity:
    """Express a unit as the root of unity it equals under the embedding."""
    g, n = _unit_generator(x.ring)
    u = one(x.ring)
    for k in range(n):
        if x == u:
            return RootOfUnity(k, n)
        u = u * g
    raise NotAUnit(f"{x} is not a unit of {x.ring}")


def root_to_unit(ring: RingSpec, root: RootOfUnity) -> QuadElem:
    """Inverse of :func:`unit_to_root`; raises NotAUnit if absent."""
    g, n = _unit_generator(ring)
    if n % root.n != 0:
        raise NotAUnit(f"{root} is not a unit of {ring}")
    return g ** (root.k * (n // root.n))


# -- JSON helpers ----------------------------------------------------------


def rat_to_json(x: Fraction) -> Union[int, str]:
    x = _as_fraction(x)
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def rat_from_json(v: Union[int, str]) -> Fraction:
    if isinstance(v, bool):
        raise ValueError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {v!r}") from exc
    raise ValueError(f"not a rational: {v!r}")


def ring_to_json(ring: RingSpec) -> dict:
    return {"d": ring.d, "f": ring.f}


def ring_from_json(doc: dict) -> RingSpec:
    if not isinstance(doc, dict) or "d" not in doc:
        raise ValueError(f"ring document must be an object with 'd': {doc!r}")
    d = doc["d"]
    f = doc.get("f", 1)
    if not isinstance(d, int) or isinstance(d, bool):
        raise ValueError(f"ring 'd' must be an integer: {d!r}")
    if not isinstance(f, int) or isinstance(f, bool):
        raise ValueError(f"ring 'f' must be an integer: {f!r}")
    return make_ring(d, f)


def elem_to_json(x: QuadElem) -> list:
    return [rat_to_json(x.a), rat_to_json(x.b)]


def elem_from_json(ring: RingSpec, v) -> QuadElem:
    if isinstance(v, (int, str)):
        return QuadElem(ring, rat_from_json(v), Fraction(0))
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return QuadElem(ring, rat_from_json(v[0]), rat_from_json(v[1]))
    raise ValueError(f"ring element must be [a, b] or a bare rational: {v!r}")
