"""Kodaira-Enriques type of the quotient of the torus by a finite affine group.

The decision tree works entirely on exact data computed by the other modules:

1.  If every linear part is the identity, the quotient is again a torus
    (``Abelian``).
2.  If the linear action is nontrivial but lands in SL, the quotient is
    ``K3`` (after resolving the finitely many quotient singularities).
3.  If the determinant character is nontrivial and the only special linear
    part is the identity, a generator h_o of the determinant image decides:
    when its linear part has eigenvalue 1, the quotient is ``Hyperelliptic``
    if the group acts freely (every element other than the identity has an
    empty fixed set) and ``RuledElliptic`` otherwise (some element then fixes
    a whole curve); when it has no eigenvalue 1 the quotient is ``Rational``.
4.  Otherwise both the special linear part and the determinant character are
    nontrivial; if every element outside the determinant kernel acts freely
    the quotient is ``Enriques`` (the kernel then has index exactly 2), and
    otherwise it is ``Rational``.

Smoothness of the quotient is equivalent to the absence of elements whose
linear part lacks the eigenvalue 1: such an element always has a fixed point
(its displacement matrix is nonsingular), and the corresponding stabilizer is
not generated by pseudo-reflections.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .fixed_points import (
    EigClass,
    FixedPointSet,
    element_eig_class,
    fixed_set,
)
from .matrix_group import classify_gl, det, element_order, mat_inv, mat_mul
from .quad_order import unit_to_root
from .torus import AffineAut, AffineGroup, close_affine, int4_identity, linear_to_int4


class SurfaceType(str, Enum):
    ABELIAN = "Abelian"
    K3 = "K3"
    HYPERELLIPTIC = "Hyperelliptic"
    RULED_ELLIPTIC = "RuledElliptic"
    ENRIQUES = "Enriques"
    RATIONAL = "Rational"


@dataclass(frozen=True)
class GeneratorFixedPoints:
    """Fixed-point data of a single generator, for the report."""

    index: int
    eig_class: EigClass
    fixed_points: FixedPointSet

    def to_json(self) -> dict:
        return {
            "generator": self.index,
            "eig_class": self.eig_class.value,
            "fixed_set": self.fixed_points.to_json(),
        }


@dataclass(frozen=True)
class ClassificationReport:
    """Full output of the surface-type decision, all invariants included."""

    surface_type: SurfaceType
    smooth: bool
    group_order: int
    translation_order: int
    kernel_det_order: int
    s: int
    catalog_label: str
    enriques_index: Optional[int]
    fixed_point_summary: Tuple[GeneratorFixedPoints, ...]

    def to_json(self) -> dict:
        return {
            "surface_type": self.surface_type.value,
            "smooth": self.smooth,
            "group_order": self.group_order,
            "translation_order": self.translation_order,
            "kernel_det_order": self.kernel_det_order,
            "s": self.s,
            "catalog_label": self.catalog_label,
            "enriques_index": self.enriques_index,
            "fixed_point_summary": [g.to_json() for g in self.fixed_point_summary],
        }

    def __str__(self) -> str:
        parts = [f"surface type: {self.surface_type.value}",
                 f"smooth quotient: {'yes' if self.smooth else 'no'}",
                 f"group order: {self.group_order}",
                 f"translations: {self.translation_order}",
                 f"det kernel order: {self.kernel_det_order}",
                 f"det image order: {self.s}",
                 f"linear image: {self.catalog_label}"]
        if self.enriques_index is not None:
            parts.append(f"enriques index: {self.enriques_index}")
        return "\n".join(parts)


def is_smooth_quotient(h: AffineGroup) -> bool:
    """True when no element's linear part lacks the eigenvalue 1."""
    return all(element_eig_class(x) is not EigClass.NO_EIGENVALUE_ONE
               for x in h.elements)


def _det_order(x: AffineAut) -> int:
    return unit_to_root(det(x.linear)).order


def surface_type(h: AffineGroup) -> ClassificationReport:
    """Classify the quotient surface of the torus by the affine group h."""
    linear = h.linear_image
    s = linear.det_order
    sl_trivial = len(linear.sl_part) == 1
    linear_trivial = len(linear.elements) == 1
    kernel = h.kernel_det

    recognition = classify_gl(linear)
    label = str(recognition.label)

    kind: SurfaceType
    enriques_index: Optional[int] = None

    if linear_trivial:
        kind = SurfaceType.ABELIAN
    elif s == 1:
        kind = SurfaceType.K3
    elif sl_trivial:
        candidates = [x for x in h.elements if _det_order(x) == s]
        classes = {element_eig_class(x) for x in candidates}
        assert len(classes) == 1, \
            "determinant generators must share their eigenvalue-1 class"
        if classes.pop() is EigClass.HAS_EIGENVALUE_ONE:
            free = all(fixed_set(x).is_empty
                       for x in h.elements if not x.is_identity)
            if free:
                kind = SurfaceType.HYPERELLIPTIC
            else:
                kind = SurfaceType.RULED_ELLIPTIC
        else:
            kind = SurfaceType.RATIONAL
    else:
        kernel_set = set(kernel)
        outside = [x for x in h.elements if x not in kernel_set]
        if all(fixed_set(x).is_empty for x in outside):
            assert h.order == 2 * len(kernel), \
                "free determinant cosets force a kernel of index 2"
            kind = SurfaceType.ENRIQUES
            enriques_index = 2
        else:
            kind = SurfaceType.RATIONAL

    summary = tuple(
        GeneratorFixedPoints(i, element_eig_class(g), fixed_set(g))
        for i, g in enumerate(h.generators)
    )
    return ClassificationReport(
        surface_type=kind,
        smooth=is_smooth_quotient(h),
        group_order=h.order,
        translation_order=len(h.translation_subgroup),
        kernel_det_order=len(kernel),
        s=s,
        catalog_label=label,
        enriques_index=enriques_index,
        fixed_point_summary=summary,
    )


def _eigenvalues_plus_minus_one(x: AffineAut) -> bool:
    d = det(x.linear)
    tr = x.linear.e11 + x.linear.e22
    return d.b == 0 and d.a == -1 and tr.is_zero


def _involution_condition(x: AffineAut) -> bool:
    """(L + I) t is nonzero mod Z^4 for the affine part of x."""
    m4 = linear_to_int4(x.linear)
    ident = int4_identity()
    t = x.translation.coords
    for i in range(4):
        total = sum((m4[i][j] + ident[i][j]) * t[j] for j in range(4))
        if total.denominator != 1:
            return True
    return False


def enriques_structure_check(h: AffineGroup, lifting_variant: bool = False
                             ) -> bool:
    """Sufficient structural test for an Enriques quotient.

    Looks for a generating pair (a, b) of the group where the linear part of
    a is special linear of order 2, 3, 4 or 6, the linear part of b has
    eigenvalues 1 and -1 and inverts a by conjugation, and the affine part of
    b translates some point off its own negative, i.e. (L(b) + I) applied to
    the translation of b is nonzero modulo Z^4.  The two variants evaluate
    the same condition on exact rational data (`lifting_variant` is kept for
    callers that want to record which reading of the condition they asked
    for); the surface_type decision tree remains the authority.
    """
    del lifting_variant  # both readings agree on exact data; see docstring

    def generates(a: AffineAut, b: AffineAut) -> bool:
        # both a and b lie in the (closed) group, so the closure of the pair
        # is a subgroup of it and an order match means equality
        sub = close_affine([a, b], cap=h.order + 1)
        return sub.order == h.order

    for a in h.elements:
        da = det(a.linear)
        if not (da.b == 0 and da.a == 1):
            continue
        order_a = element_order(a.linear)
        if order_a not in (2, 3, 4, 6):
            continue
        inv_a = mat_inv(a.linear)
        for b in h.elements:
            if not _eigenvalues_plus_minus_one(b):
                continue
            conj = mat_mul(mat_mul(b.linear, a.linear), mat_inv(b.linear))
            if conj != inv_a:
                continue
            if not _involution_condition(b):
                continue
            if generates(a, b):
                return True
    return False
