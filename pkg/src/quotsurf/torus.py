"""Exact affine automorphisms of the rank-4 torus attached to a quadratic order.

The torus is A = E x E for E = C/(Z + theta*Z), with theta the distinguished
generator of the quadratic order the matrices live over.  A point of A is
recorded by four rational coordinates (x1, x2, x3, x4) taken modulo 1, meaning
z1 = x1 + x2*theta and z2 = x3 + x4*theta.  A 2x2 matrix over the order acts
Z-linearly on those coordinates through the 4x4 integer matrix obtained by
replacing each entry with its 2x2 multiplication matrix.  An affine
automorphism is a translation followed by such a linear action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, cached_property
from math import lcm
from typing import Iterable, Sequence, Tuple

from .errors import GroupExceedsCap, RingMismatch
from .quad_order import QuadElem, RingSpec, rat_from_json, rat_to_json
from .matrix_group import (
    LinearGroup,
    Mat2,
    _mat_key,
    det,
    element_order,
    group_from_elements,
    identity,
    mat_mul,
)

AFFINE_CLOSURE_CAP = 10000

Int4 = Tuple[Tuple[int, int, int, int], ...]


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class TorusPoint:
    """A point of the torus, four rational coordinates modulo 1."""

    coords: Tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        if len(self.coords) != 4:
            raise ValueError("a torus point has exactly 4 coordinates")
        normalized = tuple(_mod1(Fraction(c)) for c in self.coords)
        object.__setattr__(self, "coords", normalized)

    def __add__(self, other: "TorusPoint") -> "TorusPoint":
        return TorusPoint(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "TorusPoint") -> "TorusPoint":
        return TorusPoint(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "TorusPoint":
        return TorusPoint(tuple(-a for a in self.coords))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def torsion_order(self) -> int:
        """Order of the point in the group of torsion points (Q/Z)^4."""
        return lcm(*(c.denominator for c in self.coords))

    def to_json(self) -> list:
        return [rat_to_json(c) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def torus_point(values: Sequence) -> TorusPoint:
    return TorusPoint(tuple(Fraction(v) for v in values))


ZERO_POINT = torus_point([0, 0, 0, 0])


def point_from_json(data) -> TorusPoint:
    if not isinstance(data, list) or len(data) != 4:
        raise ValueError("torus point must be a list of 4 rationals")
    return TorusPoint(tuple(rat_from_json(v) for v in data))


def mult_matrix(e: QuadElem) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """2x2 integer matrix of multiplication by e on the lattice Z + theta*Z.

    Columns are the images of the basis (1, theta): e*1 = a + b*theta and
    e*theta = b*q + (a + b*p)*theta, where theta^2 = p*theta + q.
    """
    ring = e.ring
    a, b = e.a, e.b
    if a.denominator != 1 or b.denominator != 1:
        raise ValueError(f"{e} is not integral over {ring}")
    a, b = int(a), int(b)
    return ((a, b * ring.q), (b, a + b * ring.p))


@lru_cache(maxsize=None)
def linear_to_int4(mat: Mat2) -> Int4:
    """4x4 integer matrix of mat acting on the rational coordinates of E x E."""
    blocks = [[mult_matrix(mat.e11), mult_matrix(mat.e12)],
              [mult_matrix(mat.e21), mult_matrix(mat.e22)]]
    rows = []
    for bi in range(2):
        for r in range(2):
            rows.append(tuple(blocks[bi][bj][r][c] for bj in range(2) for c in range(2)))
    return tuple(rows)


def int4_identity() -> Int4:
    return tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))


def int4_mul(m1: Int4, m2: Int4) -> Int4:
    return tuple(
        tuple(sum(m1[i][k] * m2[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )


def int4_apply(m: Int4, pt: TorusPoint) -> TorusPoint:
    return TorusPoint(tuple(
        sum(m[i][j] * pt.coords[j] for j in range(4)) for i in range(4)
    ))


def int4_det(m: Int4) -> int:
    """Determinant of a 4x4 integer matrix by cofactor expansion."""
    def det3(a) -> int:
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))

    total = 0
    for j in range(4):
        minor = [tuple(m[i][k] for k in range(4) if k != j) for i in range(1, 4)]
        total += (-1) ** j * m[0][j] * det3(minor)
    return total


@dataclass(frozen=True)
class AffineAut:
    """Affine torus automorphism x |-> L(x) + t with L a matrix over the order."""

    translation: TorusPoint
    linear: Mat2

    @property
    def ring(self) -> RingSpec:
        return self.linear.ring

    @property
    def is_translation(self) -> bool:
        return self.linear == identity(self.ring)

    @property
    def is_identity(self) -> bool:
        return self.is_translation and self.translation.is_zero

    def apply(self, pt: TorusPoint) -> TorusPoint:
        return int4_apply(linear_to_int4(self.linear), pt) + self.translation

    def __mul__(self, other: "AffineAut") -> "AffineAut":
        if self.ring != other.ring:
            raise RingMismatch(f"cannot compose over {self.ring} and {other.ring}")
        lin = mat_mul(self.linear, other.linear)
        trans = self.translation + int4_apply(linear_to_int4(self.linear),
                                              other.translation)
        return AffineAut(trans, lin)

    def inverse(self) -> "AffineAut":
        from .matrix_group import mat_inv
        linv = mat_inv(self.linear)
        return AffineAut(-int4_apply(linear_to_int4(linv), self.translation), linv)

    def __pow__(self, n: int) -> "AffineAut":
        if n < 0:
            return self.inverse() ** (-n)
        result = identity_affine(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_json(self) -> dict:
        from .matrix_group import mat_to_json
        return {"linear": mat_to_json(self.linear),
                "translation": self.translation.to_json()}

    def __str__(self) -> str:
        if self.translation.is_zero:
            return str(self.linear)
        return f"t{self.translation} . {self.linear}"


def identity_affine(ring: RingSpec) -> AffineAut:
    return AffineAut(ZERO_POINT, identity(ring))


def translation_aut(ring: RingSpec, pt: TorusPoint) -> AffineAut:
    return AffineAut(pt, identity(ring))


def linear_aut(mat: Mat2) -> AffineAut:
    return AffineAut(ZERO_POINT, mat)


def affine_order(h: AffineAut) -> int | None:
    """Exact order of an affine automorphism, or None if infinite.

    If the linear part L has finite order r, then h^r is the translation by
    T = sum_{s<r} L^s(t), and the order of h equals r times the torsion order
    of T: no smaller power of h can be the identity because its linear part
    is nontrivial, and the powers of h^r are the translations by the
    multiples of T.
    """
    r = element_order(h.linear)
    if r is None:
        return None
    m4 = linear_to_int4(h.linear)
    total = h.translation
    acc = h.translation
    for _ in range(r - 1):
        acc = int4_apply(m4, acc)
        total = total + acc
    return r * total.torsion_order


def _affine_key(h: AffineAut):
    return (_mat_key(h.linear), h.translation.coords)


@dataclass(frozen=True)
class AffineGroup:
    """A finite group of affine torus automorphisms, closed under composition."""

    ring: RingSpec
    generators: Tuple[AffineAut, ...]
    elements: Tuple[AffineAut, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def linear_image(self) -> LinearGroup:
        """The group of linear parts, as a closed matrix group."""
        seen = {}
        for h in self.elements:
            seen.setdefault(_mat_key(h.linear), h.linear)
        mats = tuple(seen[k] for k in sorted(seen))
        gen_mats = []
        gen_seen = set()
        for h in self.generators:
            k = _mat_key(h.linear)
            if k not in gen_seen:
                gen_seen.add(k)
                gen_mats.append(h.linear)
        return group_from_elements(self.ring, tuple(gen_mats), mats)

    @cached_property
    def translation_subgroup(self) -> Tuple[AffineAut, ...]:
        """The normal subgroup of pure translations contained in the group."""
        return tuple(h for h in self.elements if h.is_translation)

    @cached_property
    def kernel_det(self) -> Tuple[AffineAut, ...]:
        """Elements whose linear part has determinant 1."""
        result = []
        for h in self.elements:
            d = det(h.linear)
            if d.b == 0 and d.a == 1:
                result.append(h)
        return tuple(result)

    def __str__(self) -> str:
        return (f"affine group of order {self.order} over {self.ring} "
                f"({len(self.generators)} generators)")


def close_affine(generators: Iterable[AffineAut],
                 cap: int = AFFINE_CLOSURE_CAP) -> AffineGroup:
    """Close a list of affine automorphisms under composition.

    Raises InfiniteOrderGenerator if some generator has infinite order and
    GroupExceedsCap if the closure grows past `cap` elements.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("all generators must live over the same order")
    from .errors import InfiniteOrderGenerator
    for g in gens:
        if element_order(g.linear) is None:
            raise InfiniteOrderGenerator(
                f"generator {g} has a linear part of infinite order")

    ident = identity_affine(ring)
    elements = {_affine_key(ident): ident}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for h in frontier:
            for g in gens:
                prod = h * g
                key = _affine_key(prod)
                if key not in elements:
                    if len(elements) >= cap:
                        raise GroupExceedsCap(
                            f"affine closure exceeded cap of {cap} elements")
                    elements[key] = prod
                    new_frontier.append(prod)
        frontier = new_frontier
    ordered = tuple(elements[k] for k in sorted(elements))
    return AffineGroup(ring, tuple(gens), ordered)


def affine_from_json(ring: RingSpec, data: dict) -> AffineAut:
    from .matrix_group import mat_from_json
    if not isinstance(data, dict) or "linear" not in data:
        raise ValueError("affine generator must be an object with a 'linear' key")
    lin = mat_from_json(ring, data["linear"])
    trans = point_from_json(data["translation"]) if "translation" in data \
        else ZERO_POINT
    return AffineAut(trans, lin)
