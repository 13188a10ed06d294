"""Exact arithmetic for finite automorphism groups of abelian surfaces E x E
with complex multiplication by an imaginary quadratic order, and the
Kodaira type of the quotient surfaces.

Layers, bottom to top:

* :mod:`quotsurf.quad_order` — the orders R = Z + f*omega*Z, their elements,
  units and roots of unity, all over :class:`fractions.Fraction`.
* :mod:`quotsurf.matrix_group` — 2x2 matrices over R, finite subgroup
  closure, eigenvalue classification of finite-order elements, and
  recognition of subgroups of SL(2, R) and GL(2, R) against the catalog.
* :mod:`quotsurf.torus` — torsion points of the torus A = E x E, affine
  automorphisms, and closure of finitely generated affine groups.
* :mod:`quotsurf.fixed_points` — fixed-point sets of affine automorphisms
  via Smith normal form over the integers.
* :mod:`quotsurf.catalog` — the group catalog (K1..K8, HC*, HQ8, HQ12,
  HSL23), witness realizations, affine families (K3, hyperelliptic,
  ruled-elliptic, Enriques) and catalog self-verification.
* :mod:`quotsurf.classifier` — the Kodaira-type decision for A/H.
"""

from .errors import (
    AmbiguousLabel,
    BadConductor,
    DetNotUnit,
    DomainError,
    GroupExceedsCap,
    InfiniteOrderGenerator,
    NotAUnit,
    NotInCatalog,
    NotIntegral,
    NotInvertibleInR,
    NotRealizable,
    NotSquarefree,
    RingMismatch,
    TorsionConstraintViolated,
)
from .quad_order import (
    QuadElem,
    RingSpec,
    RootOfUnity,
    conjugate,
    elem,
    is_unit,
    make_ring,
    norm,
    one,
    root_to_unit,
    theta,
    unit_to_root,
    units,
    zero,
)
from .matrix_group import (
    CatalogLabel,
    LinearGroup,
    Mat2,
    RecognitionResult,
    classify_gl,
    classify_sl,
    close_linear,
    det,
    eigen_classify,
    element_order,
    has_eigenvalue_one,
    identity,
    is_scalar,
    mat2,
    mat_inv,
    mat_mul,
    mat_pow,
    parse_label,
    scalar_mat,
    trace,
)
from .torus import (
    AffineAut,
    AffineGroup,
    TorusPoint,
    affine_order,
    close_affine,
    identity_affine,
    linear_aut,
    mult_matrix,
    torus_point,
    translation_aut,
)
from .fixed_points import (
    EigClass,
    FixKind,
    FixedPointSet,
    common_fixed_set,
    element_eig_class,
    fixed_set,
    is_reflection,
    smith_normal_form,
    solve_torus_congruence,
)
from .catalog import (
    CatalogEntry,
    DEFECTS,
    DUPLICATE_SETS,
    ENTRIES,
    family_affine,
    get_entry,
    match_entries,
    preferred_label,
    realize,
    verify_catalog,
)
from .classifier import (
    ClassificationReport,
    SurfaceType,
    is_smooth_quotient,
    surface_type,
)

__version__ = "1.0.0"

__all__ = [
    # errors
    "AmbiguousLabel", "BadConductor", "DetNotUnit", "DomainError",
    "GroupExceedsCap", "InfiniteOrderGenerator", "NotAUnit", "NotInCatalog",
    "NotIntegral", "NotInvertibleInR", "NotRealizable", "NotSquarefree",
    "RingMismatch", "TorsionConstraintViolated",
    # rings
    "QuadElem", "RingSpec", "RootOfUnity", "conjugate", "elem", "is_unit",
    "make_ring", "norm", "one", "root_to_unit", "theta", "unit_to_root",
    "units", "zero",
    # matrices and recognition
    "CatalogLabel", "LinearGroup", "Mat2", "RecognitionResult",
    "classify_gl", "classify_sl", "close_linear", "det", "eigen_classify",
    "element_order", "has_eigenvalue_one", "identity", "is_scalar", "mat2",
    "mat_inv", "mat_mul", "mat_pow", "parse_label", "scalar_mat", "trace",
    # torus
    "AffineAut", "AffineGroup", "TorusPoint", "affine_order",
    "close_affine", "identity_affine", "linear_aut", "mult_matrix",
    "torus_point", "translation_aut",
    # fixed points
    "EigClass", "FixKind", "FixedPointSet", "common_fixed_set",
    "element_eig_class", "fixed_set", "is_reflection", "smith_normal_form",
    "solve_torus_congruence",
    # catalog
    "CatalogEntry", "DEFECTS", "DUPLICATE_SETS", "ENTRIES", "family_affine",
    "get_entry", "match_entries", "preferred_label", "realize",
    "verify_catalog",
    # classifier
    "ClassificationReport", "SurfaceType", "is_smooth_quotient",
    "surface_type",
    "__version__",
]
