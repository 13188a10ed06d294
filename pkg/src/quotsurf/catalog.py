"""Catalog of the finite matrix groups and affine families used for recognition.

The catalog has three layers:

* ``ENTRIES`` — one :class:`CatalogEntry` per listed group class.  The ``K``
  family collects the subgroups of SL(2, R) up to isomorphism (K1..K8); the
  ``HC1``/``HC2``/``HC3``/``HC4``/``HC6``/``HQ8``/``HQ12``/``HSL23`` families
  collect the subgroups of GL(2, R) that are not contained in SL(2, R),
  organised by their SL part K and the order s of their determinant image.
  Each entry records the invariants recognition needs (s, group order, order
  r of a distinguished generator of the determinant image, scalarity,
  abelianness, conjugation action on K) together with explicit witness
  generators when the class is realizable over an imaginary quadratic order.
  Classes whose witnesses need a larger number field carry
  ``realizable=False`` and the field name.

* affine families — constructors for the standard examples of finite affine
  automorphism groups of the torus E x E whose quotients have a prescribed
  Kodaira type: the ``K3`` shapes, the hyperelliptic shapes ``HE*``, the
  ruled-with-elliptic-base shapes ``RE*`` and the ``Enriques`` shape.  Each
  constructor validates the family's torsion constraints and raises
  :class:`~quotsurf.errors.TorsionConstraintViolated` when they fail.

* ``verify_catalog()`` — instantiates every realizable entry, closes it,
  and checks expected order, determinant order, generator order, scalarity,
  relations, eigenvalue class and the recognition round trip.

Known anomalies of the catalog data (duplicate indices, misprints that were
normalised, one missing constraint) are recorded verbatim in ``DEFECTS`` and
``DUPLICATE_SETS`` so that reports can cite them instead of silently papering
over them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import NotAUnit, NotInCatalog, NotRealizable, TorsionConstraintViolated
from .matrix_group import (
    CatalogLabel,
    LinearGroup,
    Mat2,
    close_linear,
    det,
    eigen_classify,
    element_order,
    identity,
    is_scalar,
    mat2,
    mat_inv,
    mat_mul,
    mat_pow,
    parse_label,
)
from .quad_order import (
    QuadElem,
    RingSpec,
    elem,
    is_unit,
    make_ring,
    ring_to_json,
    theta,
    unit_to_root,
)
from .torus import (
    AffineAut,
    TorusPoint,
    close_affine,
    linear_to_int4,
    int4_apply,
    mult_matrix,
    torus_point,
    translation_aut,
)

# ---------------------------------------------------------------------------
# Entry table
# ---------------------------------------------------------------------------

#: family name of the GL catalog, keyed by the order of the SL part K.
_FAMILY_BY_K_ORDER = {
    1: "HC1",
    2: "HC2",
    3: "HC3",
    4: "HC4",
    6: "HC6",
    8: "HQ8",
    12: "HQ12",
    24: "HSL23",
}


@dataclass(frozen=True)
class CatalogEntry:
    """One catalogued class of finite subgroups of GL(2, R).

    ``generators`` holds 2x2 matrix literals (entries are ints or
    ``(a, b)`` pairs meaning ``a + b*theta``) to be instantiated over
    ``ring``; ``ring`` is None for entries valid over every order.  The
    distinguished generator (the one generating the determinant image, with
    order ``r``) is always listed last, and ``gen_names`` names the
    generators for the relation words in ``relations`` and ``action``.
    ``action`` gives the conjugation action of the distinguished generator
    ``c`` on a standard generating tuple of K; recognition searches all
    candidates and all generating tuples for a solution of these word
    identities.  ``eigen`` is the eigenvalue class of the distinguished
    witness generator as a sorted pair of (n, k) exponents of e^(2*pi*i*k/n).
    """

    label: CatalogLabel
    ring: Optional[RingSpec]
    s: int
    expected_order: int
    r: Optional[int]
    group_name: str
    realizable: bool
    field: Optional[str]
    ho_scalar: Optional[bool]
    abelian: Optional[bool]
    gen_names: Tuple[str, ...]
    generators: Tuple[tuple, ...]
    action: Tuple[Tuple[str, str], ...]
    relations: Tuple[Tuple[str, str], ...]
    eigen: Optional[Tuple[Tuple[int, int], Tuple[int, int]]]
    note: str = ""

    def to_json(self) -> dict:
        return {
            "label": str(self.label),
            "family": self.label.family,
            "index": self.label.index,
            "ring": ring_to_json(self.ring) if self.ring else "any",
            "s": self.s,
            "expected_order": self.expected_order,
            "r": self.r,
            "group": self.group_name,
            "realizable": self.realizable,
            "field": self.field,
            "scalar": self.ho_scalar,
            "abelian": self.abelian,
            "relations": [list(p) for p in self.relations],
            "action": [list(p) for p in self.action],
            "eigen": [list(p) for p in self.eigen] if self.eigen else None,
            "note": self.note,
        }


def _E(label: str, *, s: int, order: int, ring: Optional[tuple] = None,
       r: Optional[int] = None, group: str = "", realizable: bool = True,
       field: Optional[str] = None, scalar: Optional[bool] = None,
       abelian: Optional[bool] = None, names: Tuple[str, ...] = (),
       gens: Tuple[tuple, ...] = (), action: Tuple[Tuple[str, str], ...] = (),
       relations: Tuple[Tuple[str, str], ...] = (),
       eigen: Optional[tuple] = None, note: str = "") -> CatalogEntry:
    lab = parse_label(label)
    rs = make_ring(*ring) if ring is not None else None
    return CatalogEntry(lab, rs, s, order, r, group, realizable, field,
                        scalar, abelian, names, gens, action, relations,
                        eigen, note)


# common matrix literals ((a, b) entries mean a + b*theta)
_I2 = ((1, 0), (0, 1))
_NEG_I2 = ((-1, 0), (0, -1))
_J = ((0, 1), (-1, 0))                       # order 4, det 1, trace 0
_SL_TR0 = ((1, -2), (1, -1))                 # order 4, det 1, trace 0
_SL_TRM1 = ((1, 1), (-3, -2))                # order 3, det 1, trace -1
_SL_TR1 = ((2, 1), (-3, -1))                 # order 6, det 1, trace 1
_DIAG_T_1 = (((0, 1), 0), (0, 1))            # diag(theta, 1)
_DIAG_T_CONJ = (((0, 1), 0), (0, (0, -1)))   # diag(theta, -theta) / diag(i, -i)
_DIAG_M1_1 = ((-1, 0), (0, 1))               # diag(-1, 1)
_DIAG_1_M1 = ((1, 0), (0, -1))               # diag(1, -1)
_SWAP = ((0, 1), (1, 0))                     # eigenvalues 1, -1
_SCALAR_T = (((0, 1), 0), (0, (0, 1)))       # theta * I  (i*I over Z[i])
_SCALAR_Z3 = (((-1, 1), 0), (0, (-1, 1)))    # (theta - 1) * I over O(-3)
_G4_EIS = (((0, 1), 0), (0, (1, -1)))        # diag(theta, 1 - theta)
_GB_EIS = (((0, 1), (1, -1)), ((1, -1), (0, -1)))  # [[t, 1-t], [1-t, -t]]
_G3_EIS = ((-1, (-1, 1)), ((0, 1), 0))       # [[-1, t-1], [t, 0]]
_G2_GAUSS = ((0, (0, 1)), ((0, 1), 0))       # [[0, i], [i, 0]]

_K4_RELATIONS = (("g1^2", "-I"), ("g2^2", "-I"), ("g2 g1", "-g1 g2"))
_K7_RELATIONS = (("g1^2", "-I"), ("g4^3", "-I"), ("g4 g1 g4", "g1"))
_K8_RELATIONS = (("g1^2", "-I"), ("g2^2", "-I"), ("g3^3", "I"),
                 ("g2 g1", "-g1 g2"), ("g3 g1 g3^-1", "g2"),
                 ("g3 g2 g3^-1", "g1 g2"))
_INVERTING = (("c g c^-1", "g^-1"),)


def _hq8_action(x1: str, x2: str) -> Tuple[Tuple[str, str], ...]:
    return (("c g1 c^-1", x1), ("c g2 c^-1", x2))


def _hq12_action(j: int) -> Tuple[Tuple[str, str], ...]:
    word = "g1 g4" if j == 1 else f"g1 g4^{j}"
    return (("c g4 c^-1", "g4"), ("c g1 c^-1", word))


def _hsl_action(x1: str, x2: str, x3: str) -> Tuple[Tuple[str, str], ...]:
    return (("c g1 c^-1", x1), ("c g2 c^-1", x2), ("c g3 c^-1", x3))


ENTRIES: Tuple[CatalogEntry, ...] = (
    # ----- subgroups of SL(2, R) -----
    _E("K1", s=1, order=1, r=None, group="C1", abelian=True,
       names=("g",), gens=(_I2,)),
    _E("K2", s=1, order=2, group="C2", abelian=True,
       names=("g",), gens=(_NEG_I2,)),
    _E("K3", s=1, order=4, group="C4", abelian=True,
       names=("g",), gens=(_SL_TR0,)),
    _E("K4", s=1, order=8, ring=(1, 1), group="Q8", abelian=False,
       names=("g1", "g2"), gens=(_DIAG_T_CONJ, _J), relations=_K4_RELATIONS),
    _E("K5", s=1, order=3, group="C3", abelian=True,
       names=("g",), gens=(_SL_TRM1,)),
    _E("K6", s=1, order=6, group="C6", abelian=True,
       names=("g",), gens=(_SL_TR1,)),
    _E("K7", s=1, order=12, ring=(3, 1), group="Q12", abelian=False,
       names=("g1", "g4"), gens=(_J, _G4_EIS), relations=_K7_RELATIONS),
    _E("K8", s=1, order=24, group="SL(2,3)", abelian=False,
       realizable=False, field="Q(sqrt(-d), sqrt(-3))",
       names=("g1", "g2", "g3"), relations=_K8_RELATIONS,
       note="existence inside SL(2, R) for an imaginary quadratic order R "
            "is open; the witness satisfies K8^o < SL(2, Q(sqrt(-d), "
            "sqrt(-3)))"),

    # ----- K trivial: cyclic groups meeting SL trivially -----
    _E("HC1(1)", s=2, order=2, r=2, group="C2", abelian=True,
       names=("c",), gens=(_DIAG_1_M1,), eigen=((1, 0), (2, 1))),
    _E("HC1(2)", s=3, order=3, r=3, ring=(3, 1), group="C3", abelian=True,
       names=("c",), gens=((((-1, 1), 0), (0, 1)),),
       eigen=((1, 0), (3, 1))),
    _E("HC1(3)", s=4, order=4, r=4, ring=(1, 1), group="C4", abelian=True,
       names=("c",), gens=(_DIAG_T_1,), eigen=((1, 0), (4, 1))),
    _E("HC1(4)", s=6, order=6, r=6, ring=(3, 1), group="C6", abelian=True,
       names=("c",), gens=(_DIAG_T_1,), eigen=((1, 0), (6, 1))),

    # ----- K = {I, -I} -----
    _E("HC2(1)", s=2, order=4, r=4, ring=(1, 1), group="C4", abelian=True,
       scalar=True, names=("c",), gens=(_SCALAR_T,),
       eigen=((4, 1), (4, 1))),
    _E("HC2(2)", s=2, order=4, r=2, group="C2 x C2", abelian=True,
       names=("k", "c"), gens=(_NEG_I2, _DIAG_1_M1),
       eigen=((1, 0), (2, 1))),
    _E("HC2(3)", s=3, order=6, r=6, ring=(3, 1), group="C6", abelian=True,
       names=("c",), gens=(_SCALAR_T,), eigen=((6, 1), (6, 1))),
    _E("HC2(4)", s=4, order=8, r=8, ring=(1, 1), group="C8", abelian=True,
       names=("c",), gens=((((0, 1), (0, 1)), ((-1, -1), (0, -1))),),
       eigen=((8, 3), (8, 7))),
    _E("HC2(5)", s=4, order=8, r=4, ring=(1, 1), group="C2 x C4",
       abelian=True, names=("k", "c"), gens=(_NEG_I2, _DIAG_T_1),
       eigen=((1, 0), (4, 1))),
    _E("HC2(6)", s=4, order=8, r=8, ring=(1, 1), group="C8", abelian=True,
       names=("c",), gens=((((0, 1), (0, 1)), ((-1, -1), (0, -1))),),
       eigen=((8, 3), (8, 7)),
       note="lists the same class as HC2(4)"),
    _E("HC2(7)", s=6, order=12, r=6, ring=(3, 1), group="C2 x C6",
       abelian=True, names=("k", "c"), gens=(_NEG_I2, _DIAG_T_1),
       eigen=((1, 0), (6, 1))),

    # ----- K = C3 -----
    _E("HC3(1)", s=2, order=6, r=6, ring=(3, 1), group="C6", abelian=True,
       names=("c",), gens=((((0, 1), 0), (0, (-1, 1))),),
       eigen=((3, 1), (6, 1))),
    _E("HC3(2)", s=2, order=6, r=2, group="S3", abelian=False,
       realizable=False, field="Q(sqrt(-d))", action=_INVERTING,
       names=("g", "c"), eigen=((1, 0), (2, 1))),
    _E("HC3(3)", s=3, order=9, r=3, ring=(3, 1), group="C3 x C3",
       abelian=True, scalar=True, names=("g", "c"),
       gens=(_SL_TRM1, _SCALAR_Z3), eigen=((3, 1), (3, 1))),
    _E("HC3(4)", s=6, order=18, r=6, ring=(3, 1), group="C3 x C6",
       abelian=True, names=("g", "c"),
       gens=((((-1, 1), 0), (0, (0, -1))), (((0, 1), 0), (0, (0, -1)))),
       eigen=((3, 2), (6, 1))),
    _E("HC3(5)", s=6, order=18, r=6, group="C3 : C6", abelian=False,
       realizable=False, field="Q(sqrt(-3))", action=_INVERTING,
       names=("g", "c")),

    # ----- K = C4 -----
    _E("HC4(1)", s=2, order=8, r=8, ring=(2, 1), group="C8", abelian=True,
       names=("c",), gens=(((1, 1), ((0, 1), (-1, 1))),),
       eigen=((8, 1), (8, 3))),
    _E("HC4(2)", s=2, order=8, r=2, ring=(1, 1), group="C4 x C2",
       abelian=True, names=("g", "c"), gens=(_DIAG_T_CONJ, _DIAG_M1_1),
       eigen=((1, 0), (2, 1))),
    _E("HC4(3)", s=2, order=8, r=2, group="D4", abelian=False,
       realizable=False, field="Q(sqrt(-d))", action=_INVERTING,
       names=("g", "c"), eigen=((1, 0), (2, 1))),
    _E("HC4(4)", s=3, order=12, r=12, ring=(3, 1), group="C12",
       abelian=True, names=("c",), gens=(((0, 1), ((1, -1), 0)),),
       eigen=((12, 5), (12, 11))),
    _E("HC4(5)", s=3, order=12, r=3, ring=(3, 1), group="C4 x C3",
       abelian=True, scalar=True, names=("g", "c"),
       gens=(_SL_TR0, _SCALAR_Z3), eigen=((3, 1), (3, 1)),
       note="C4 x C3 = C12; lists the same class as HC4(4)"),
    _E("HC4(6)", s=4, order=16, r=4, ring=(1, 1), group="C4 x C4",
       abelian=True, names=("g", "c"), gens=(_DIAG_T_CONJ, _DIAG_T_1),
       eigen=((1, 0), (4, 1))),
    _E("HC4(7)", s=4, order=16, r=8, group="C2 x C8", abelian=True,
       realizable=False, field="Q(sqrt(2), i)", names=("g", "c")),
    _E("HC4(8)", s=4, order=16, r=8, group="C4 : C8", abelian=False,
       realizable=False, field="Q(sqrt(2), i)", action=_INVERTING,
       names=("g", "c")),
    _E("HC4(9)", s=6, order=24, r=6, group="C4 : C6", abelian=False,
       realizable=False, field="Q(sqrt(-3))", action=_INVERTING,
       names=("g", "c")),

    # ----- K = C6 -----
    _E("HC6(1)", s=2, order=12, r=12, ring=(1, 1), group="C12",
       abelian=True, names=("c",), gens=(((1, 1), ((0, 1), (-1, 1))),),
       eigen=((12, 1), (12, 5))),
    _E("HC6(2)", s=2, order=12, r=2, ring=(3, 1), group="C6 x C2",
       abelian=True, names=("g", "c"), gens=(_G4_EIS, _DIAG_M1_1),
       eigen=((1, 0), (2, 1)),
       note="display name 'C6 x C12' contradicts the order-12 data; "
            "recorded as C6 x C2"),
    _E("HC6(3)", s=2, order=12, r=2, group="D6", abelian=False,
       realizable=False, field="Q(sqrt(-d))", action=_INVERTING,
       names=("g", "c"), eigen=((1, 0), (2, 1))),
    _E("HC6(4)", s=3, order=18, r=3, ring=(3, 1), group="C6 x C3",
       abelian=True, scalar=True, names=("g", "c"),
       gens=(_SL_TR1, _SCALAR_Z3), eigen=((3, 1), (3, 1))),
    _E("HC6(5)", s=4, order=24, r=8, group="C6 : C8", abelian=False,
       realizable=False, field="Q(sqrt(2), i)", action=_INVERTING,
       names=("g", "c")),
    _E("HC6(6)", s=6, order=36, r=6, group="C6 : C6", abelian=False,
       realizable=False, field="Q(sqrt(-3))", action=_INVERTING,
       names=("g", "c")),
    _E("HC6(7)", s=6, order=36, r=6, ring=(3, 1), group="C6 x C6",
       abelian=True, names=("g", "c"),
       gens=(_G4_EIS, (((-1, 1), 0), (0, (1, -1)))),
       eigen=((3, 1), (6, 5))),

    # ----- K = Q8 -----
    _E("HQ8(1)", s=2, order=16, r=4, ring=(1, 1), group="Q8 . C4",
       abelian=False, scalar=True, names=("g1", "g2", "c"),
       gens=(_J, _G2_GAUSS, _SCALAR_T), relations=_K4_RELATIONS,
       eigen=((4, 1), (4, 1))),
    _E("HQ8(2)", s=2, order=16, r=2, ring=(1, 1), group="Q8 : C2",
       abelian=False, names=("g1", "g2", "c"),
       gens=(_J, _G2_GAUSS, _DIAG_M1_1),
       action=_hq8_action("-g1", "-g2"),
       relations=_K4_RELATIONS + _hq8_action("-g1", "-g2"),
       eigen=((1, 0), (2, 1)),
       note="generates the same order-16 group as HQ8(1)"),
    _E("HQ8(3)", s=2, order=16, r=8, group="", abelian=False,
       realizable=False, field="Q(sqrt(2), i)",
       names=("g1", "g2", "c"), action=_hq8_action("g2", "-g1")),
    _E("HQ8(4)", s=2, order=16, r=2, group="", abelian=False,
       realizable=False, field="Q(sqrt(-2))",
       names=("g1", "g2", "c"), action=_hq8_action("g2", "g1"),
       eigen=((1, 0), (2, 1))),
    _E("HQ8(5)", s=3, order=24, r=3, ring=(3, 1), group="Q8 x C3",
       abelian=False, scalar=True, names=("g1", "g2", "c"),
       gens=(_J, _GB_EIS, _SCALAR_Z3), relations=_K4_RELATIONS,
       eigen=((3, 1), (3, 1))),
    _E("HQ8(6)", s=3, order=24, r=3, group="", abelian=False,
       realizable=False, field="Q(sqrt(-3))",
       names=("g1", "g2", "c"), action=_hq8_action("g2", "g1 g2")),
    _E("HQ8(7)", s=4, order=32, r=8, group="", abelian=False,
       realizable=False, field="Q(sqrt(2), i)",
       names=("g1", "g2", "c"), action=_hq8_action("-g1", "-g2")),
    _E("HQ8(8)", s=4, order=32, r=8, group="", abelian=False,
       realizable=False, field="Q(sqrt(2), i)",
       names=("g1", "g2", "c"), action=_hq8_action("g2", "g1"),
       note="same class as HQ8(9): the HQ8(9) witness realizes it over "
            "Z[i]"),
    _E("HQ8(9)", s=4, order=32, r=4, ring=(1, 1), group="",
       abelian=False, names=("g1", "g2", "c"),
       gens=(_J, _G2_GAUSS, _DIAG_T_1),
       action=_hq8_action("g2", "-g1"),
       relations=_K4_RELATIONS + _hq8_action("g2", "-g1"),
       eigen=((1, 0), (4, 1)),
       note="the original second relation line repeats the g1 relation; "
            "recorded as c g2 c^-1 = -g1"),

    # ----- K = Q12 -----
    _E("HQ12(1)", s=2, order=24, r=4, ring=(1, 1), group="",
       abelian=False, scalar=True, realizable=False,
       field="Q(sqrt(3), i)", names=("g1", "g4", "c"),
       eigen=((4, 1), (4, 1)),
       note="recorded ring 'R - Z[i]' read as R = Z[i]; an integral "
            "realization over Z[i] exists but is not part of the data"),
    _E("HQ12(2)", s=2, order=24, r=6, ring=(3, 1), group="",
       abelian=False, names=("g1", "g4", "c"),
       gens=(_J, _G4_EIS, (((0, 1), 0), (0, (-1, 1)))),
       action=_hq12_action(1),
       relations=_K7_RELATIONS + _hq12_action(1),
       eigen=((3, 1), (6, 1))),
    _E("HQ12(3)", s=2, order=24, r=12, group="", abelian=False,
       realizable=False, field="Q(sqrt(3), i)",
       names=("g1", "g4", "c"), action=_hq12_action(2)),
    _E("HQ12(4)", s=2, order=24, r=2, ring=(3, 1), group="",
       abelian=False, names=("g1", "g4", "c"),
       gens=(_J, _G4_EIS, _DIAG_1_M1),
       action=_hq12_action(3),
       relations=_K7_RELATIONS + _hq12_action(3),
       eigen=((1, 0), (2, 1))),
    _E("HQ12(5)", s=3, order=36, r=3, ring=(3, 1), group="",
       abelian=False, scalar=True, names=("g1", "g4", "c"),
       gens=(_J, _G4_EIS, _SCALAR_Z3), relations=_K7_RELATIONS,
       eigen=((3, 1), (3, 1))),
    _E("HQ12(6)", s=3, order=36, r=3, ring=(3, 1), group="",
       abelian=False, names=("g1", "g4", "c"),
       gens=(_J, _G4_EIS, ((1, 0), (0, (-1, 1)))),
       action=_hq12_action(2),
       relations=_K7_RELATIONS + _hq12_action(2),
       eigen=((1, 0), (3, 1)),
       note="display omits '=' in the conjugation relation; eigenvalue "
            "pair printed in the order matching j = 4, not the stated "
            "j = 2"),
    _E("HQ12(7)", s=3, order=36, r=12, group="", abelian=False,
       realizable=False, field="Q(sqrt(3), i)",
       names=("g1", "g4", "c"), action=_hq12_action(3)),
    _E("HQ12(8)", s=4, order=48, r=8, group="", abelian=False,
       realizable=False, field="Q(sqrt(2), sqrt(3), i)",
       names=("g1", "g4", "c"), action=_hq12_action(3)),
    _E("HQ12(9)", s=6, order=72, r=6, ring=(3, 1), group="",
       abelian=False, names=("g1", "g4", "c"),
       gens=(_J, _G4_EIS, (((1, -1), 0), (0, 1))),
       action=_hq12_action(1),
       relations=_K7_RELATIONS + _hq12_action(1),
       eigen=((1, 0), (6, 5)),
       note="printed eigenvalue pair belongs to the inverse of the "
            "witness generator"),
    _E("HQ12(10)", s=6, order=72, r=6, ring=(3, 1), group="",
       abelian=False, names=("g1", "g4", "c"),
       gens=(_J, _G4_EIS, (((-1, 1), 0), (0, (1, -1)))),
       action=_hq12_action(3),
       relations=_K7_RELATIONS + _hq12_action(3),
       eigen=((3, 1), (6, 5))),

    # ----- K = SL(2,3) -----
    _E("HSL23(1)", s=2, order=48, r=4, group="", abelian=False,
       scalar=True, realizable=False, field="Q(sqrt(3), i)",
       names=("g1", "g2", "g3", "c"), eigen=((4, 1), (4, 1))),
    _E("HSL23(2)", s=2, order=48, r=2, group="", abelian=False,
       realizable=False, field="Q(sqrt(3), i)",
       names=("g1", "g2", "g3", "c"),
       action=_hsl_action("-g1", "-g2", "-g2 g3"),
       eigen=((1, 0), (2, 1))),
    _E("HSL23(3)", s=2, order=48, r=8, group="", abelian=False,
       realizable=False, field="Q(sqrt(2), sqrt(3), i)",
       names=("g1", "g2", "g3", "c"),
       action=_hsl_action("g2", "-g1", "g2 g3^2")),
    _E("HSL23(4)", s=2, order=48, r=2, group="", abelian=False,
       realizable=False, field="Q(sqrt(-2), sqrt(-3))",
       names=("g1", "g2", "g3", "c"),
       action=_hsl_action("g2", "g1", "g1 g3^2"),
       eigen=((1, 0), (2, 1))),
    _E("HSL23(5)", s=3, order=72, r=3, ring=(3, 1), group="SL(2,3) x C3",
       abelian=False, scalar=True, names=("g1", "g2", "g3", "c"),
       gens=(_J, _GB_EIS, _G3_EIS, _SCALAR_Z3), relations=_K8_RELATIONS,
       eigen=((3, 1), (3, 1))),
    _E("HSL23(6)", s=3, order=72, r=3, group="", abelian=False,
       realizable=False, field="Q(sqrt(-3))",
       names=("g1", "g2", "g3", "c"),
       action=_hsl_action("g2", "g1 g2", "g3"),
       eigen=((1, 0), (3, 1)),
       note="realization field missing from the source display; recorded "
            "as Q(sqrt(-3)). Same class as HSL23(5), whose witness "
            "realizes it over O(-3)"),
    _E("HSL23(7)", s=4, order=96, r=8, group="", abelian=False,
       realizable=False, field="Q(sqrt(2), sqrt(3), i)",
       names=("g1", "g2", "g3", "c"),
       action=_hsl_action("-g1", "-g2", "-g2 g3")),
    _E("HSL23(8)", s=4, order=96, r=8, group="", abelian=False,
       realizable=False, field="Q(sqrt(2), sqrt(3), i)",
       names=("g1", "g2", "g3", "c"),
       action=_hsl_action("g2", "g1", "g1 g3^2")),
    _E("HSL23(9)", s=4, order=96, r=4, group="", abelian=False,
       realizable=False, field="Q(sqrt(3), i)",
       names=("g1", "g2", "g3", "c"),
       action=_hsl_action("g2", "-g1", "g2 g3^2"),
       eigen=((1, 0), (4, 1))),
)

ENTRY_BY_LABEL: Dict[str, CatalogEntry] = {str(e.label): e for e in ENTRIES}

#: catalog indices that describe the same isomorphism class; recognition
#: reports every member in ``all_matches``.
DUPLICATE_SETS: Tuple[Tuple[str, ...], ...] = (
    ("HC2(4)", "HC2(6)"),
    ("HC4(4)", "HC4(5)"),
    ("HQ8(1)", "HQ8(2)"),
    ("HQ8(8)", "HQ8(9)"),
    ("HQ12(2)", "HQ12(4)"),
    ("HQ12(5)", "HQ12(6)"),
    ("HQ12(9)", "HQ12(10)"),
    ("HSL23(5)", "HSL23(6)"),
)

#: recorded anomalies of the catalog data (kept verbatim, never silently
#: repaired beyond what each line states).
DEFECTS: Tuple[str, ...] = (
    "HC2(4) and HC2(6) list the same class (C8, s = 4) under two indices.",
    "HC4(4) and HC4(5) list isomorphic classes (C12 = C4 x C3, s = 3); "
    "every group matching one matches the other.",
    "HQ8(1) and HQ8(2) generate the same order-16 subgroup of GL(2, Z[i]); "
    "each group contains distinguished generators of both shapes.",
    "HQ8(8) is recorded only over Q(sqrt(2), i) although it is isomorphic "
    "to HQ8(9), whose witness is integral over Z[i].",
    "HQ8(9): the defining display repeats the g1 relation twice; the "
    "intended second relation c g2 c^-1 = -g1 is recorded instead.",
    "HQ8(8): the surrounding text asserts c^2 = i I while the eigenvalue "
    "data forces c^2 = -i I; this swaps c with c^-1 and does not affect "
    "the class.",
    "HQ12(1): the recorded ring 'R - Z[i]' is read as R = Z[i]; an "
    "integral realization over Z[i] exists (g4 = [[2,1],[-3,-1]], "
    "g1 = [[i,i],[0,-i]], c = i I) although the entry is catalogued over "
    "Q(sqrt(3), i).",
    "HQ12(2) and HQ12(4) match exactly the same groups, as do HQ12(5) and "
    "HQ12(6), and HQ12(9) and HQ12(10): each group of the cell contains "
    "distinguished generators realizing both actions.",
    "HQ12(6): the display omits '=' in its conjugation relation and prints "
    "the eigenvalue pair in the order matching j = 4 rather than the "
    "stated j = 2; recognition does not use printed eigenvalue order.",
    "HQ12(9): the printed eigenvalue pair belongs to the inverse of the "
    "recorded witness generator.",
    "HC6(2): the display names the group C6 x C12 although its order is "
    "12; recorded as C6 x C2.",
    "HC4(1): the printed eigenvalue e^(3 pi i/3) is read as e^(3 pi i/4); "
    "the recorded class is (zeta_8, zeta_8^3).",
    "HSL23(6): the realization field is missing from the display; recorded "
    "as Q(sqrt(-3)). The class equals HSL23(5), whose witness is integral "
    "over O(-3).",
    "K8: the existence of an SL(2,3)-type subgroup of SL(2, R) for an "
    "imaginary quadratic order R is open; the witness satisfies "
    "K8^o < SL(2, Q(sqrt(-d), sqrt(-3))).",
    "K3 affine family: the shapes j = 7 and j = 8 carry identical "
    "generator data; both need the SL(2,3) linear part and are not "
    "realizable over an imaginary quadratic order.",
    "RE4 affine family: the defining data states no membership constraint "
    "on U1 although RE2, RE3 and RE6 each carry one; the constructor "
    "enforces the analogous constraint (b*U1 in <P1> for some b in "
    "{1,2,3}), without which the quotient is not ruled with elliptic "
    "base.",
)


def get_entry(label) -> CatalogEntry:
    """Look up a catalog entry by label string or :class:`CatalogLabel`."""
    key = str(label) if isinstance(label, CatalogLabel) else str(parse_label(str(label)))
    try:
        return ENTRY_BY_LABEL[key]
    except KeyError:
        raise ValueError(f"unknown catalog label {label!r}") from None


def entries_json() -> list:
    """The whole entry table as JSON-compatible data."""
    return [e.to_json() for e in ENTRIES]


# ---------------------------------------------------------------------------
# Word evaluation and recognition
# ---------------------------------------------------------------------------

def _eval_word(word: str, env: Dict[str, Mat2], ring: RingSpec) -> Mat2:
    """Evaluate a relation word like ``"-g1 g4^-1 c"`` in ``env``.

    A word is an optional leading ``-`` followed by whitespace-separated
    factors ``name`` or ``name^exponent``; ``I`` denotes the identity.
    """
    text = word.strip()
    negate = False
    while text.startswith("-"):
        negate = not negate
        text = text[1:].lstrip()
    result = identity(ring)
    for token in text.split():
        if "^" in token:
            name, _, exp_text = token.partition("^")
            exp = int(exp_text)
        else:
            name, exp = token, 1
        base = identity(ring) if name == "I" else env[name]
        result = mat_mul(result, mat_pow(base, exp))
    return -result if negate else result


def _k_generating_tuples(family: str, k_elems: Sequence[Mat2]):
    """Standard generating tuples of the SL part K, with their word names.

    Returns ``(names, tuples)`` where every tuple satisfies the family's
    defining K relations; the conjugation-action words of an entry are
    solved over all of them, making recognition independent of the
    generator choice.
    """
    if family in ("HC1", "HC2"):
        return (), [()]
    if family in ("HC3", "HC4", "HC6"):
        t = {"HC3": 3, "HC4": 4, "HC6": 6}[family]
        return ("g",), [(g,) for g in k_elems if element_order(g) == t]
    order4 = [g for g in k_elems if element_order(g) == 4]
    if family == "HQ8":
        pairs = [(a, b) for a in order4 for b in order4
                 if mat_mul(b, a) == -mat_mul(a, b)]
        return ("g1", "g2"), pairs
    if family == "HQ12":
        order6 = [g for g in k_elems if element_order(g) == 6]
        pairs = [(a, b) for a in order4 for b in order6
                 if mat_mul(mat_mul(a, b), mat_inv(a)) == mat_inv(b)]
        return ("g1", "g4"), pairs
    if family == "HSL23":
        anti = [(a, b) for a in order4 for b in order4
                if mat_mul(b, a) == -mat_mul(a, b)]
        order3 = [g for g in k_elems if element_order(g) == 3]
        triples = []
        for a, b in anti:
            ab = mat_mul(a, b)
            for c in order3:
                ci = mat_inv(c)
                if (mat_mul(mat_mul(c, a), ci) == b
                        and mat_mul(mat_mul(c, b), ci) == ab):
                    triples.append((a, b, c))
        return ("g1", "g2", "g3"), triples
    raise NotInCatalog(f"no GL catalog family with SL part of order "
                       f"{len(k_elems)}")


def match_entries(group: LinearGroup, sl_label: CatalogLabel,
                  s: int) -> List[CatalogLabel]:
    """All catalog entries matched by ``group``, sorted by index.

    The family is fixed by the order of the SL part; within it, an entry
    matches when (s, group order) agree, the abelianness constraint holds,
    and the group contains a generator of the determinant image with the
    entry's order r, scalarity, and conjugation action on some standard
    generating tuple of K.
    """
    del sl_label  # the SL part order determines the family
    family = _FAMILY_BY_K_ORDER.get(len(group.sl_part))
    if family is None:
        raise NotInCatalog(
            f"no GL catalog family with SL part of order {len(group.sl_part)}")
    ring = group.ring
    names = None
    tuples: List[tuple] = []
    matches: List[CatalogLabel] = []
    for entry in ENTRIES:
        if (entry.label.family != family or entry.s != s
                or entry.expected_order != group.order):
            continue
        if entry.abelian is not None and group.is_abelian != entry.abelian:
            continue
        candidates = [
            h for h in group.elements
            if unit_to_root(det(h)).order == s
            and element_order(h) == entry.r
            and (entry.ho_scalar is not True or is_scalar(h))
        ]
        if not candidates:
            continue
        if not entry.action:
            matches.append(entry.label)
            continue
        if names is None:
            names, tuples = _k_generating_tuples(family, group.sl_part)
        if _action_holds(entry.action, candidates, names, tuples, ring):
            matches.append(entry.label)
    matches.sort(key=lambda lab: lab.index)
    return matches


def _action_holds(action, candidates, names, tuples, ring) -> bool:
    for cand in candidates:
        for tup in tuples:
            env = dict(zip(names, tup))
            env["c"] = cand
            if all(_eval_word(lhs, env, ring) == _eval_word(rhs, env, ring)
                   for lhs, rhs in action):
                return True
    return False


def preferred_label(matches: Sequence[CatalogLabel]) -> CatalogLabel:
    """The label to report for a set of matching entries.

    The first match whose entry is realizable over an imaginary quadratic
    order wins; when none is, the lowest-indexed match is kept.  Matches
    arrive sorted by index.
    """
    for lab in matches:
        if ENTRY_BY_LABEL[str(lab)].realizable:
            return lab
    return matches[0]


# ---------------------------------------------------------------------------
# Realization
# ---------------------------------------------------------------------------

def realize(label, b1=1, ring: Optional[RingSpec] = None) -> Tuple[Mat2, ...]:
    """Witness generators of a realizable entry, over the entry's ring.

    ``b1`` is the free unit parameter: the witnesses are conjugated by
    diag(b1, 1), which keeps all entries in the ring exactly when ``b1`` is
    a unit (NotAUnit otherwise).  Entries valid over every order accept a
    ``ring`` argument (default: the rational integer ring); entries with a
    fixed ring reject a conflicting one.  Entries without an integral
    witness raise NotRealizable naming their field.
    """
    entry = get_entry(label)
    if not entry.realizable:
        raise NotRealizable(str(entry.label), entry.field)
    if entry.ring is not None:
        if ring is not None and ring != entry.ring:
            raise ValueError(
                f"{entry.label} is defined over {entry.ring}, not {ring}")
        use_ring = entry.ring
    else:
        use_ring = ring if ring is not None else make_ring(0, 1)
    gens = tuple(mat2(use_ring, rows) for rows in entry.generators)
    b1_elem = _coerce_unit(b1, use_ring)
    if b1_elem != elem(use_ring, 1):
        d_mat = mat2(use_ring, ((b1_elem, 0), (0, 1)))
        d_inv = mat_inv(d_mat)
        gens = tuple(mat_mul(mat_mul(d_mat, g), d_inv) for g in gens)
    return gens


def _coerce_unit(b1, ring: RingSpec) -> QuadElem:
    if isinstance(b1, QuadElem):
        if b1.ring != ring:
            raise ValueError(f"parameter b1 lives in {b1.ring}, not {ring}")
        cand = b1
    elif isinstance(b1, (tuple, list)) and len(b1) == 2:
        cand = elem(ring, b1[0], b1[1])
    else:
        cand = elem(ring, b1)
    if not is_unit(cand):
        raise NotAUnit(f"parameter b1 = {cand} is not a unit of {ring}")
    return cand


# ---------------------------------------------------------------------------
# Affine families
# ---------------------------------------------------------------------------

_RING_Z = (0, 1)
_RING_GAUSS = (1, 1)
_RING_EIS = (3, 1)

# linear shapes of the K3 family, keyed by j
_K3_SHAPES: Dict[int, Optional[Tuple[tuple, ...]]] = {
    1: (_NEG_I2,),
    2: (_SL_TR0,),
    3: (_DIAG_T_CONJ, _J),
    4: (_SL_TRM1,),
    5: (_SL_TR1,),
    6: (_J, _G4_EIS),
    7: None,
    8: None,
}
_K3_FIXED_RING = {3: _RING_GAUSS, 6: _RING_EIS}

# (s, doubled translation, fixed ring or None) per hyperelliptic tag
_HE_TAGS: Dict[str, Tuple[int, bool, Optional[tuple]]] = {
    "HE2": (2, False, None),
    "HE22": (2, True, None),
    "HE3": (3, False, _RING_EIS),
    "HE33": (3, True, _RING_EIS),
    "HE4": (4, False, _RING_GAUSS),
    "HE44": (4, True, _RING_GAUSS),
    "HE6": (6, False, _RING_EIS),
}

_RE_RINGS = {2: None, 3: _RING_EIS, 4: _RING_GAUSS, 6: _RING_EIS}

# default linear pairs (L(h), L(h_o)) of the Enriques shape, by s
_ENRIQUES_SHAPES: Dict[int, Tuple[tuple, tuple]] = {
    2: (_NEG_I2, _SWAP),
    3: (((0, -1), (1, -1)), _SWAP),
    4: (_J, _DIAG_1_M1),
    6: (((0, 1), (-1, 1)), _SWAP),
}


def family_affine(tag: str, params: Optional[dict] = None) -> List[AffineAut]:
    """Affine generators of a named family, after validating its constraints.

    Tags: ``K3`` (smooth K3 quotients), ``HE2``/``HE22``/``HE3``/``HE33``/
    ``HE4``/``HE44``/``HE6`` (hyperelliptic quotients), ``RE2``/``RE3``/
    ``RE4``/``RE6`` (ruled quotients with elliptic base) and ``Enriques``.
    ``params`` supplies the torsion points (coordinates as ints, strings
    like ``"1/2"``, or Fractions); violated torsion constraints raise
    TorsionConstraintViolated, malformed parameters raise ValueError.
    """
    params = dict(params or {})
    if tag == "K3":
        return _family_k3(params)
    if tag in _HE_TAGS:
        return _family_he(tag, params)
    if tag in ("RE2", "RE3", "RE4", "RE6"):
        return _family_re(int(tag[2:]), params)
    if tag == "Enriques":
        return _family_enriques(params)
    raise ValueError(f"unknown affine family tag {tag!r}")


def _fraction(v, what: str) -> Fraction:
    if isinstance(v, float):
        raise ValueError(f"{what} must be exact (int, Fraction or 'a/b' "
                         f"string), not a float")
    try:
        return Fraction(v)
    except (TypeError, ValueError):
        raise ValueError(f"{what} is not a rational number: {v!r}") from None


def _coords(v, n: int, what: str) -> Tuple[Fraction, ...]:
    if not isinstance(v, (tuple, list)) or len(v) != n:
        raise ValueError(f"{what} must be a list of {n} rationals")
    return tuple(_fraction(c, what) % 1 for c in v)


def _ring_param(params: dict, default: tuple,
                forced: Optional[tuple]) -> RingSpec:
    given = params.get("ring")
    if forced is not None:
        forced_ring = make_ring(*forced)
        if given is not None:
            given_ring = _as_ring(given)
            if given_ring != forced_ring:
                raise ValueError(
                    f"this family is defined over {forced_ring}, "
                    f"not {given_ring}")
        return forced_ring
    if given is None:
        return make_ring(*default)
    return _as_ring(given)


def _as_ring(v) -> RingSpec:
    if isinstance(v, RingSpec):
        return v
    if isinstance(v, dict):
        return make_ring(int(v["d"]), int(v.get("f", 1)))
    if isinstance(v, (tuple, list)) and len(v) == 2:
        return make_ring(int(v[0]), int(v[1]))
    raise ValueError(f"bad ring parameter {v!r}")


def _span_mod1(points: Iterable[Tuple[Fraction, ...]]) -> set:
    """The finite subgroup of (Q/Z)^n generated by ``points``."""
    pts = [tuple(Fraction(c) % 1 for c in p) for p in points]
    zero = tuple(Fraction(0) for _ in range(len(pts[0]) if pts else 2))
    seen = {zero}
    frontier = [zero]
    while frontier:
        cur = frontier.pop()
        for p in pts:
            nxt = tuple((a + b) % 1 for a, b in zip(cur, p))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def _scale2(k: int, p: Tuple[Fraction, Fraction]) -> Tuple[Fraction, Fraction]:
    return ((k * p[0]) % 1, (k * p[1]) % 1)


def _mult2(e: QuadElem, p: Tuple[Fraction, Fraction]) -> Tuple[Fraction, Fraction]:
    m = mult_matrix(e)
    return ((m[0][0] * p[0] + m[0][1] * p[1]) % 1,
            (m[1][0] * p[0] + m[1][1] * p[1]) % 1)


def _zeta(ring: RingSpec, s: int) -> QuadElem:
    if s == 2:
        return elem(ring, -1)
    if s == 3:
        return theta(ring) - 1
    if s in (4, 6):
        return theta(ring)
    raise ValueError(f"no primitive root of unity of order {s} here")


def _diag_1_zeta(ring: RingSpec, s: int) -> Mat2:
    return mat2(ring, ((1, 0), (0, _zeta(ring, s))))


def _family_k3(params: dict) -> List[AffineAut]:
    j = params.get("j", 1)
    if not isinstance(j, int) or not 1 <= j <= 8:
        raise ValueError("K3 family parameter j must be an integer in 1..8")
    shapes = _K3_SHAPES[j]
    if shapes is None:
        raise NotRealizable(f"K3({j})", "Q(sqrt(-d), sqrt(-3))")
    ring = _ring_param(params, _RING_Z, _K3_FIXED_RING.get(j))
    translations = params.get("translations", [])
    if not isinstance(translations, (tuple, list)) or len(translations) > 3:
        raise ValueError("K3 family takes at most three translation points")
    lifts = params.get("lifts", [])
    if not isinstance(lifts, (tuple, list)) or len(lifts) > len(shapes):
        raise ValueError(
            f"K3 shape j={j} has {len(shapes)} linear generators; too many "
            f"lift translations")
    gens = [translation_aut(ring, torus_point(_coords(t, 4, "translation")))
            for t in translations]
    for idx, rows in enumerate(shapes):
        lift = _coords(lifts[idx], 4, "lift") if idx < len(lifts) \
            else (Fraction(0),) * 4
        gens.append(AffineAut(torus_point(lift), mat2(ring, rows)))
    return gens


def _split_aut(ring: RingSpec, s: int,
               w: Tuple[Fraction, Fraction]) -> AffineAut:
    """The automorphism acting as translation by w on factor 1 and as the
    order-s unit on factor 2."""
    return AffineAut(torus_point((w[0], w[1], 0, 0)), _diag_1_zeta(ring, s))


def _he_kernel_points(group) -> Tuple[set, set]:
    """(K1, K2): factor-1 translation points of ker(pr2) and factor-2
    translation points of ker(pr1), for a group of split automorphisms."""
    ring = group.ring
    ident = identity(ring)
    k1 = set()
    k2 = set()
    for h in group.elements:
        c = h.translation.coords
        if h.linear == ident and c[2] == 0 and c[3] == 0:
            k1.add((c[0], c[1]))
        if h.linear == ident and c[0] == 0 and c[1] == 0:
            k2.add((c[2], c[3]))
    return k1, k2


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise TorsionConstraintViolated(message)


def _family_he(tag: str, params: dict) -> List[AffineAut]:
    s, doubled, forced = _HE_TAGS[tag]
    ring = _ring_param(params, _RING_Z, forced)
    m_pts = [_coords(p, 2, "M point") for p in params.get("M", [])]
    n_pts = [_coords(p, 2, "N point") for p in params.get("N", [])]
    if len(m_pts) > 2 or len(n_pts) > 2:
        raise ValueError("the hyperelliptic families take at most two M and "
                         "two N translation points")
    if "W" not in params:
        raise ValueError(f"{tag} requires the point W")
    w = _coords(params["W"], 2, "W")
    gens: List[AffineAut] = []
    for p in m_pts:
        gens.append(translation_aut(ring, torus_point((p[0], p[1], 0, 0))))
    for p in n_pts:
        gens.append(translation_aut(ring, torus_point((0, 0, p[0], p[1]))))
    if doubled:
        if "X" not in params or "Y" not in params:
            raise ValueError(f"{tag} requires the points X and Y")
        x = _coords(params["X"], 2, "X")
        y = _coords(params["Y"], 2, "Y")
        gens.append(translation_aut(ring, torus_point((x[0], x[1],
                                                       y[0], y[1]))))
    gens.append(_split_aut(ring, s, w))

    group = close_affine(gens)
    k1, k2 = _he_kernel_points(group)
    not_in_1 = {2: (1,), 3: (2,), 4: (2, 3), 6: (3, 4, 5)}[s]
    _require(_scale2(s, w) in k1,
             f"{s}*W must lie in the translation kernel over factor 2")
    for k in not_in_1:
        _require(_scale2(k, w) not in k1,
                 f"{k}*W must lie outside the translation kernel over "
                 f"factor 2 (W has the wrong torsion order)")
    if doubled:
        _require(_scale2(s if s != 4 else 2, x) in k1,
                 "X does not satisfy the family's torsion constraint")
        bad_x = {2: (1,), 3: (2,), 4: (1,)}[s]
        for k in bad_x:
            _require(_scale2(k, x) not in k1,
                     f"{k}*X must lie outside the translation kernel over "
                     f"factor 2")
        if s == 4:
            one_plus_i = theta(ring) + 1
            _require(_mult2(one_plus_i, y) in k2,
                     "(1+i)*Y must lie in the translation kernel over "
                     "factor 1")
        else:
            _require(_scale2(s, y) in k2,
                     f"{s}*Y must lie in the translation kernel over "
                     f"factor 1")
        _require(y not in k2,
                 "Y must lie outside the translation kernel over factor 1")
    return gens


def _family_re(s: int, params: dict) -> List[AffineAut]:
    ring = _ring_param(params, _RING_Z, _RE_RINGS[s])
    for key in ("P1", "Q1", "U1"):
        if key not in params:
            raise ValueError(f"RE{s} requires the point {key}")
    p1 = _coords(params["P1"], 2, "P1")
    q1 = _coords(params["Q1"], 2, "Q1")
    u1 = _coords(params["U1"], 2, "U1")
    gens: List[AffineAut] = [
        translation_aut(ring, torus_point((p1[0], p1[1], q1[0], q1[1])))]
    zeta = _zeta(ring, s)
    if s == 2:
        p2 = _coords(params.get("P2", (0, 0)), 2, "P2")
        q2 = _coords(params.get("Q2", (0, 0)), 2, "Q2")
        gens.append(translation_aut(
            ring, torus_point((p2[0], p2[1], q2[0], q2[1]))))
        span1 = _span_mod1([p1, p2])
        _require(u1 in span1, "U1 must lie in the subgroup of factor 1 "
                              "generated by P1 and P2")
        span4 = _span_mod1([p1 + q1, p2 + q2])
        for p, q in ((p1, q1), (p2, q2)):
            flipped = p + _scale2(-1, q)
            _require(flipped in span4,
                     "the order-2 generator must normalize the translation "
                     "part: (P, -Q) has to lie in the subgroup generated by "
                     "(P1, Q1) and (P2, Q2)")
    else:
        span1 = _span_mod1([p1])
        needed = {3: (2,), 4: (1, 2, 3), 6: (3, 4, 5)}[s]
        _require(any(_scale2(k, u1) in span1 for k in needed),
                 f"some multiple k*U1 with k in {needed} must lie in the "
                 f"subgroup of factor 1 generated by P1")
        m = lcm(*(c.denominator for c in p1 + q1)) if any(p1 + q1) else 1
        target = p1 + _mult2(zeta, q1)
        point = p1 + q1
        if not any(gcd(jj, m) == 1
                   and tuple((jj * c) % 1 for c in point) == target
                   for jj in range(1, m + 1)):
            raise TorsionConstraintViolated(
                "no residue j realizes the semidirect action: j*(P1, Q1) "
                "must equal (P1, zeta*Q1) for some j prime to the order "
                "of (P1, Q1)")
    gens.append(_split_aut(ring, s, u1))
    return gens


def _family_enriques(params: dict) -> List[AffineAut]:
    s = params.get("s", 2)
    if s not in (2, 3, 4, 6):
        raise ValueError("Enriques family parameter s must be 2, 3, 4 or 6")
    ring = _ring_param(params, _RING_Z, None)
    if "point" not in params:
        raise ValueError("Enriques family requires the point (U_o, V_o)")
    point = torus_point(_coords(params["point"], 4, "point"))
    h_translation = torus_point(
        _coords(params.get("h_translation", (0, 0, 0, 0)), 4,
                "h_translation"))
    rows_h, rows_ho = _ENRIQUES_SHAPES[s]
    lin_h = mat2(ring, rows_h)
    lin_ho = mat2(ring, rows_ho)
    moved = int4_apply(linear_to_int4(lin_ho), point) + point
    _require(not moved.is_zero,
             "(L(h_o) + I)(U_o, V_o) vanishes, so h_o^2 is the identity "
             "translation and the quotient is not of Enriques type")
    return [AffineAut(h_translation, lin_h), AffineAut(point, lin_ho)]


# ---------------------------------------------------------------------------
# Self-verification
# ---------------------------------------------------------------------------

def _verify_entry(entry: CatalogEntry) -> dict:
    from .matrix_group import classify_gl

    row: dict = {"label": str(entry.label), "realizable": entry.realizable}
    if entry.group_name:
        row["group"] = entry.group_name
    if not entry.realizable:
        row["field"] = entry.field
        row["status"] = "not realizable"
        if entry.note:
            row["note"] = entry.note
        return row
    gens = realize(entry.label)
    ring = gens[0].ring
    row["ring"] = str(ring)
    group = close_linear(gens)
    row["order"] = group.order
    checks: Dict[str, bool] = {}
    checks["order"] = group.order == entry.expected_order
    checks["det_order"] = group.det_order == entry.s
    if entry.r is not None:
        checks["generator_order"] = element_order(gens[-1]) == entry.r
    if entry.ho_scalar is True:
        checks["scalar"] = is_scalar(gens[-1])
    if entry.abelian is not None:
        checks["abelian"] = group.is_abelian == entry.abelian
    if entry.relations:
        env = dict(zip(entry.gen_names, gens))
        checks["relations"] = all(
            _eval_word(lhs, env, ring) == _eval_word(rhs, env, ring)
            for lhs, rhs in entry.relations)
    if entry.eigen is not None:
        eig = eigen_classify(gens[-1])
        checks["eigenvalues"] = (eig is not None
                                 and eig.pair_key() == entry.eigen)
    result = classify_gl(group)
    row["label_out"] = str(result.label)
    row["all_matches"] = [str(lab) for lab in result.all_matches]
    checks["roundtrip"] = str(entry.label) in row["all_matches"]
    row["checks"] = checks
    row["status"] = "ok" if all(checks.values()) else "FAIL"
    if entry.note:
        row["note"] = entry.note
    return row


def verify_catalog() -> dict:
    """Check every realizable entry against its recorded invariants.

    Returns a report with one row per entry (closure order, relation and
    eigenvalue checks, recognition round trip) plus the duplicate sets and
    the recorded data anomalies.  Verification failures appear as rows with
    status FAIL, never as exceptions.
    """
    rows = [_verify_entry(e) for e in ENTRIES]
    failures = [r["label"] for r in rows if r["status"] == "FAIL"]
    summary = {
        "total_entries": len(rows),
        "realizable": sum(1 for r in rows if r["realizable"]),
        "verified": sum(1 for r in rows if r["status"] == "ok"),
        "failures": failures,
        "duplicate_sets": [list(d) for d in DUPLICATE_SETS],
        "defects": list(DEFECTS),
    }
    return {"entries": rows, "summary": summary}
