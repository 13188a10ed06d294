"""Finite-order elements and finite subgroups of GL(2, R).

Every finite-order element of GL(2, R) over an imaginary quadratic order has
unit determinant and eigenvalues that are roots of unity of order 1, 2, 3, 4,
6, 8 or 12; the pair is determined by (determinant, trace) through finitely
many cases, tabulated per ring in :func:`_eigen_table`.  Rows whose two
eigenvalues coincide ("scalar rows") pin the matrix itself to be scalar --
a non-scalar matrix hitting such a (det, trace) pair has infinite order.

On top of the element classification the module closes finitely generated
subgroups by breadth-first multiplication and recognizes them against the
catalog of isomorphism classes (see :mod:`quotsurf.catalog`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    AmbiguousLabel,
    DetNotUnit,
    GroupExceedsCap,
    InfiniteOrderGenerator,
    NotInCatalog,
    NotIntegral,
    NotInvertibleInR,
    RingMismatch,
)
from .quad_order import (
    QuadElem,
    RingSpec,
    RootOfUnity,
    conjugate,
    elem,
    elem_from_json,
    elem_to_json,
    is_unit,
    norm,
    one,
    theta,
    unit_to_root,
    zero,
)

MAX_ELEMENT_ORDER = 12


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix with entries in the ring (integral coordinates)."""

    e11: QuadElem
    e12: QuadElem
    e21: QuadElem
    e22: QuadElem

    def __post_init__(self) -> None:
        r = self.e11.ring
        for e in (self.e12, self.e21, self.e22):
            if e.ring != r:
                raise RingMismatch("matrix entries from different rings")
        for e in self.entries:
            if not e.is_integral:
                raise NotIntegral(f"matrix entry {e} is not in {r}")

    @property
    def ring(self) -> RingSpec:
        return self.e11.ring

    @property
    def entries(self) -> tuple[QuadElem, QuadElem, QuadElem, QuadElem]:
        return (self.e11, self.e12, self.e21, self.e22)

    def __mul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.e11, -self.e12, -self.e21, -self.e22)

    def __str__(self) -> str:
        return f"[[{self.e11}, {self.e12}], [{self.e21}, {self.e22}]]"


def mat2(ring: RingSpec, rows) -> Mat2:
    """Build a matrix from ``[[e11, e12], [e21, e22]]`` with flexible entries.

    Each entry may be a QuadElem, an int/Fraction (meaning ``a + 0*theta``) or
    a pair ``(a, b)`` meaning ``a + b*theta``.
    """
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("matrix literal must be 2x2")

    def conv(v) -> QuadElem:
        if isinstance(v, QuadElem):
            if v.ring != ring:
                raise RingMismatch("entry from a different ring")
            return v
        if isinstance(v, (int, Fraction)):
            return elem(ring, v, 0)
        if isinstance(v, (tuple, list)) and len(v) == 2:
            return elem(ring, v[0], v[1])
        raise ValueError(f"bad matrix entry {v!r}")

    return Mat2(conv(rows[0][0]), conv(rows[0][1]), conv(rows[1][0]), conv(rows[1][1]))


def identity(ring: RingSpec) -> Mat2:
    return mat2(ring, [[1, 0], [0, 1]])


def scalar_mat(x: QuadElem) -> Mat2:
    z = zero(x.ring)
    return Mat2(x, z, z, x)


def mat_mul(m1: Mat2, m2: Mat2) -> Mat2:
    if m1.ring != m2.ring:
        raise RingMismatch("matrices from different rings")
    return Mat2(
        m1.e11 * m2.e11 + m1.e12 * m2.e21,
        m1.e11 * m2.e12 + m1.e12 * m2.e22,
        m1.e21 * m2.e11 + m1.e22 * m2.e21,
        m1.e21 * m2.e12 + m1.e22 * m2.e22,
    )


def det(m: Mat2) -> QuadElem:
    return m.e11 * m.e22 - m.e12 * m.e21


def trace(m: Mat2) -> QuadElem:
    return m.e11 + m.e22


def is_scalar(m: Mat2) -> bool:
    return m.e12.is_zero and m.e21.is_zero and m.e11 == m.e22


def mat_inv(m: Mat2) -> Mat2:
    """Inverse over the ring; defined exactly when det is a unit."""
    d = det(m)
    if not is_unit(d):
        raise NotInvertibleInR(f"determinant {d} is not a unit of {m.ring}")
    dinv = conjugate(d)  # norm(d) == 1, so the conjugate is the inverse
    return Mat2(dinv * m.e22, -(dinv * m.e12), -(dinv * m.e21), dinv * m.e11)


def mat_pow(m: Mat2, n: int) -> Mat2:
    if n < 0:
        return mat_pow(mat_inv(m), -n)
    out = identity(m.ring)
    base = m
    while n:
        if n & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        n >>= 1
    return out


def element_order(m: Mat2, cap: int = MAX_ELEMENT_ORDER) -> Optional[int]:
    """Order of m by repeated multiplication, None when it exceeds ``cap``.

    Finite-order elements over these rings have order at most 12, so the
    default cap is exact: None means infinite order.
    """
    ident = identity(m.ring)
    p = m
    for n in range(1, cap + 1):
        if p == ident:
            return n
        p = mat_mul(p, m)
    return None


# ---------------------------------------------------------------------------
# eigenvalue classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EigenClass:
    """Eigenvalue data of a finite-order matrix."""

    lambda1: RootOfUnity
    lambda2: RootOfUnity
    order: int

    def pair_key(self) -> tuple:
        return tuple(sorted([(self.lambda1.n, self.lambda1.k), (self.lambda2.n, self.lambda2.k)]))

    def to_json(self) -> dict:
        return {
            "lambda1": self.lambda1.to_json(),
            "lambda2": self.lambda2.to_json(),
            "order": self.order,
        }


def _root(k: int, n: int) -> RootOfUnity:
    return RootOfUnity(k, n)


@lru_cache(maxsize=None)
def _eigen_table(ring: RingSpec):
    """Map (det, trace) -> (lambda1, lambda2, order, scalar_value | None).

    Rows with ``scalar_value`` match only scalar matrices (equal eigenvalues);
    the value is the ring element x with m = x*I.  Absence of a row means
    infinite order for that (det, trace).
    """
    one_e = one(ring)
    two = elem(ring, 2)
    th = theta(ring) if not ring.is_rational else None
    rows: dict[tuple[QuadElem, QuadElem], tuple] = {}

    def put(d, t, l1, l2, scalar=None):
        rows[(d, t)] = (l1, l2, lcm(l1.order, l2.order), scalar)

    # determinant 1 (any ring)
    put(one_e, two, _root(0, 1), _root(0, 1), scalar=one_e)
    put(one_e, -two, _root(1, 2), _root(1, 2), scalar=-one_e)
    put(one_e, -one_e, _root(1, 3), _root(2, 3))
    put(one_e, zero(ring), _root(1, 4), _root(3, 4))
    put(one_e, one_e, _root(1, 6), _root(5, 6))

    # determinant -1 (any ring)
    put(-one_e, zero(ring), _root(0, 1), _root(1, 2))

    if (ring.d, ring.f) == (2, 1):
        s2 = th  # sqrt(-2)
        put(-one_e, s2, _root(1, 8), _root(3, 8))
        put(-one_e, -s2, _root(5, 8), _root(7, 8))

    if (ring.d, ring.f) == (1, 1):
        i = th  # sqrt(-1)
        put(-one_e, 2 * i, _root(1, 4), _root(1, 4), scalar=i)
        put(-one_e, -(2 * i), _root(3, 4), _root(3, 4), scalar=-i)
        put(-one_e, i, _root(1, 12), _root(5, 12))
        put(-one_e, -i, _root(7, 12), _root(11, 12))
        # determinant i
        put(i, zero(ring), _root(3, 8), _root(7, 8))
        put(i, one_e + i, _root(1, 4), _root(0, 1))
        put(i, -(one_e + i), _root(3, 4), _root(1, 2))
        # determinant -i
        put(-i, zero(ring), _root(1, 8), _root(5, 8))
        put(-i, one_e - i, _root(3, 4), _root(0, 1))
        put(-i, -(one_e - i), _root(1, 4), _root(1, 2))

    if ring.d == 3 and ring.f in (1, 2):
        # sqrt(-3) lies in the ring: 2*theta - 1 at f = 1, theta - 1 at f = 2
        s3 = 2 * th - 1 if ring.f == 1 else th - 1
        put(-one_e, s3, _root(1, 6), _root(1, 3))
        put(-one_e, -s3, _root(2, 3), _root(5, 6))

    if (ring.d, ring.f) == (3, 1):
        # theta = e^(pi i/3); the four non-real unit determinants
        z6 = th              # e^(pi i/3)
        z6c = one_e - th     # e^(-pi i/3)
        z3 = th - one_e      # e^(2 pi i/3)
        z3c = -th            # e^(-2 pi i/3)
        put(z6, zero(ring), _root(1, 3), _root(5, 6))
        put(z6, one_e + th, _root(1, 6), _root(0, 1))
        put(z6, -(one_e + th), _root(2, 3), _root(1, 2))
        put(z6c, zero(ring), _root(1, 6), _root(2, 3))
        put(z6c, two - th, _root(5, 6), _root(0, 1))
        put(z6c, th - two, _root(1, 3), _root(1, 2))
        put(z3, zero(ring), _root(5, 12), _root(11, 12))
        put(z3, th, _root(1, 3), _root(0, 1))
        put(z3, -th, _root(5, 6), _root(1, 2))
        put(z3, 2 * th, _root(1, 6), _root(1, 6), scalar=z6)
        put(z3, -(2 * th), _root(2, 3), _root(2, 3), scalar=z3c)
        put(z3c, zero(ring), _root(1, 12), _root(7, 12))
        put(z3c, one_e - th, _root(2, 3), _root(0, 1))
        put(z3c, th - one_e, _root(1, 6), _root(1, 2))
        put(z3c, 2 * th - two, _root(1, 3), _root(1, 3), scalar=z3)
        put(z3c, two - 2 * th, _root(5, 6), _root(5, 6), scalar=z6c)

    return rows


def eigen_classify(m: Mat2) -> Optional[EigenClass]:
    """Eigenvalue pair and order of a finite-order matrix; None if infinite.

    Raises DetNotUnit when the determinant is not a unit (such a matrix is
    never of finite order, but the caller usually wants to know why).
    """
    d = det(m)
    if not is_unit(d):
        raise DetNotUnit(f"determinant {d} is not a unit of {m.ring}")
    row = _eigen_table(m.ring).get((d, trace(m)))
    if row is None:
        return None
    l1, l2, order, scalar_value = row
    if scalar_value is not None and not is_scalar(m):
        return None
    return EigenClass(l1, l2, order)


def has_eigenvalue_one(m: Mat2) -> bool:
    """True iff 1 is an eigenvalue, i.e. trace == det + 1."""
    return trace(m) == det(m) + one(m.ring)


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------


def _mat_key(m: Mat2) -> tuple:
    return tuple(x for e in m.entries for x in (e.a, e.b))


@dataclass(frozen=True)
class LinearGroup:
    """A finite subgroup of GL(2, R), closed under multiplication."""

    ring: RingSpec
    generators: tuple[Mat2, ...]
    elements: tuple[Mat2, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def sl_part(self) -> tuple[Mat2, ...]:
        o = one(self.ring)
        return tuple(m for m in self.elements if det(m) == o)

    @cached_property
    def det_order(self) -> int:
        """Order s of the (cyclic) image of the determinant."""
        return len({_mat_key(scalar_mat(det(m))) for m in self.elements})

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators or self.elements
        for i, g in enumerate(gens):
            for h in gens[i + 1:]:
                if mat_mul(g, h) != mat_mul(h, g):
                    return False
        return True

    @cached_property
    def element_orders(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for m in self.elements:
            n = element_order(m)
            assert n is not None, "closed group contains an infinite-order element"
            out[n] = out.get(n, 0) + 1
        return out

    def __contains__(self, m: Mat2) -> bool:
        return m in set(self.elements)


def _close(ring: RingSpec, gens: Sequence[Mat2], cap: int) -> tuple[Mat2, ...]:
    ident = identity(ring)
    seen = {ident}
    queue = [ident]
    while queue:
        x = queue.pop()
        for g in gens:
            y = mat_mul(x, g)
            if y not in seen:
                if len(seen) >= cap:
                    raise GroupExceedsCap(f"group closure exceeded cap {cap}")
                seen.add(y)
                queue.append(y)
    return tuple(sorted(seen, key=_mat_key))


def close_linear(generators: Sequence[Mat2], cap: int = 256) -> LinearGroup:
    """Close the generated subgroup of GL(2, R) by breadth-first products."""
    gens = tuple(generators)
    if not gens:
        raise ValueError("close_linear needs at least one generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generators from different rings")
        if not is_unit(det(g)):
            raise InfiniteOrderGenerator(
                f"generator {g} has non-unit determinant {det(g)}"
            )
        if element_order(g) is None:
            raise InfiniteOrderGenerator(f"generator {g} has infinite order")
    return LinearGroup(ring, gens, _close(ring, gens, cap))


def group_from_elements(ring: RingSpec, generators: Sequence[Mat2],
                        elements: Iterable[Mat2]) -> LinearGroup:
    """Wrap an already-closed element set (no closure is recomputed)."""
    elems = tuple(sorted(set(elements), key=_mat_key))
    return LinearGroup(ring, tuple(generators), elems)


# ---------------------------------------------------------------------------
# catalog labels and recognition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogLabel:
    """A catalog name: family and index, e.g. HQ8(3) or K4."""

    family: str
    index: int

    def __str__(self) -> str:
        if self.family == "K":
            return f"K{self.index}"
        return f"{self.family}({self.index})"


_LABEL_RE = re.compile(r"^([A-Za-z][A-Za-z0-9]*?)\(?(\d+)\)?$")


def parse_label(s: str) -> CatalogLabel:
    m = _LABEL_RE.match(s.strip())
    if not m:
        raise ValueError(f"bad catalog label {s!r}")
    return CatalogLabel(m.group(1), int(m.group(2)))


# expected multiset of element orders for each SL-part isomorphism class
_SL_ORDER_PROFILE = {
    1: ("K", 1, {1: 1}),
    2: ("K", 2, {1: 1, 2: 1}),
    3: ("K", 5, {1: 1, 3: 2}),
    4: ("K", 3, {1: 1, 2: 1, 4: 2}),
    6: ("K", 6, {1: 1, 2: 1, 3: 2, 6: 2}),
    8: ("K", 4, {1: 1, 2: 1, 4: 6}),
    12: ("K", 7, {1: 1, 2: 1, 3: 2, 4: 6, 6: 2}),
    24: ("K", 8, {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}),
}


def _orders_multiset(elements: Sequence[Mat2]) -> dict[int, int]:
    out: dict[int, int] = {}
    for m in elements:
        n = element_order(m)
        if n is None:
            raise NotInCatalog("group contains an infinite-order element")
        out[n] = out.get(n, 0) + 1
    return out


def _classify_sl_elements(elements: Sequence[Mat2]) -> CatalogLabel:
    profile = _SL_ORDER_PROFILE.get(len(elements))
    if profile is None:
        raise NotInCatalog(
            f"no SL(2, R) class of order {len(elements)} exists in the catalog"
        )
    family, index, orders = profile
    if _orders_multiset(elements) != orders:
        raise NotInCatalog(
            f"element orders do not match the unique SL class of order {len(elements)}"
        )
    return CatalogLabel(family, index)


def classify_sl(group: LinearGroup) -> CatalogLabel:
    """Recognize a finite subgroup of SL(2, R): one of K1..K8."""
    o = one(group.ring)
    if any(det(m) != o for m in group.elements):
        raise ValueError("classify_sl expects a subgroup of SL(2, R)")
    return _classify_sl_elements(group.elements)


@dataclass(frozen=True)
class RecognitionResult:
    """Result of catalog recognition for a finite subgroup of GL(2, R)."""

    label: CatalogLabel
    all_matches: tuple[CatalogLabel, ...]
    sl_label: CatalogLabel
    s: int
    order: int

    def __str__(self) -> str:
        return str(self.label)

    def to_json(self) -> dict:
        return {
            "label": str(self.label),
            "all_matches": [str(l) for l in self.all_matches],
            "sl_label": str(self.sl_label),
            "s": self.s,
            "order": self.order,
        }


def classify_gl(group: LinearGroup, strict: bool = False) -> RecognitionResult:
    """Recognize a finite subgroup of GL(2, R) against the catalog.

    The SL part is classified first; the extension data (order of the
    determinant image, order and scalarity of an element generating the
    determinant image, and its conjugation action on the SL part) is matched
    against the catalog entries of the corresponding family.  Several entries
    can match one group when the catalog itself lists one isomorphism class
    under more than one index; ``all_matches`` reports every match and
    ``label`` the preferred one (the lowest-indexed match realizable over an
    imaginary quadratic order, falling back to the lowest-indexed match).
    With ``strict=True`` multiple matches raise AmbiguousLabel.
    """
    from . import catalog  # deferred: catalog builds matrices via this module

    sl_label = _classify_sl_elements(group.sl_part)
    s = group.det_order
    order = group.order
    if order != s * len(group.sl_part):
        raise NotInCatalog("group order is not s * |SL part|")
    if s == 1:
        return RecognitionResult(sl_label, (sl_label,), sl_label, 1, order)

    matches = catalog.match_entries(group, sl_label, s)
    if not matches:
        raise NotInCatalog(
            f"no catalog entry matches: SL part {sl_label}, s={s}, order {order}"
        )
    if strict and len(matches) > 1:
        raise AmbiguousLabel(matches)
    return RecognitionResult(catalog.preferred_label(matches), tuple(matches),
                             sl_label, s, order)


# ---------------------------------------------------------------------------
# JSON helpers
# ---------------------------------------------------------------------------


def mat_to_json(m: Mat2) -> list:
    return [
        [elem_to_json(m.e11), elem_to_json(m.e12)],
        [elem_to_json(m.e21), elem_to_json(m.e22)],
    ]


def mat_from_json(ring: RingSpec, doc) -> Mat2:
    if not isinstance(doc, (list, tuple)) or len(doc) != 2:
        raise ValueError(f"matrix must be [[e11, e12], [e21, e22]]: {doc!r}")
    rows = []
    for row in doc:
        if not isinstance(row, (list, tuple)) or len(row) != 2:
            raise ValueError(f"matrix must be [[e11, e12], [e21, e22]]: {doc!r}")
        rows.append([elem_from_json(ring, v) for v in row])
    return Mat2(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
