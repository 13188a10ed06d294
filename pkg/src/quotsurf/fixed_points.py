"""Fixed-point sets of affine torus automorphisms, computed exactly.

The fixed points of x |-> L(x) + t on the torus (Q/Z)^4 (rational points; the
structure of the full fixed set is already determined there) are the solutions
of (L4 - I)x = -t modulo Z^4, where L4 is the 4x4 integer matrix of L.  The
solver reduces the coefficient matrix to Smith normal form U*M*V = D over Z,
which turns the system into independent congruences d_i * y_i = rhs_i (mod 1)
plus integrality conditions for the zero rows.  Common fixed sets of several
automorphisms stack their systems into one matrix before the same reduction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .matrix_group import has_eigenvalue_one, identity
from .torus import (
    AffineAut,
    TorusPoint,
    int4_identity,
    linear_to_int4,
)

ENUMERATION_LIMIT = 4096
LISTED_LIMIT = 64

IntMatrix = List[List[int]]


@dataclass(frozen=True)
class SmithDecomposition:
    """U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..."""

    U: Tuple[Tuple[int, ...], ...]
    D: Tuple[Tuple[int, ...], ...]
    V: Tuple[Tuple[int, ...], ...]
    diag: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)


def _identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(rows: Sequence[Sequence[int]], ncols: int | None = None
                      ) -> SmithDecomposition:
    """Smith normal form over Z with the transforming matrices.

    `rows` may be empty; `ncols` must then be supplied.
    """
    m = len(rows)
    if m:
        n = len(rows[0])
    elif ncols is None:
        raise ValueError("ncols is required for an empty matrix")
    else:
        n = ncols
    a: IntMatrix = [list(r) for r in rows]
    u = _identity_matrix(m)
    v = _identity_matrix(n)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, factor: int) -> None:
        a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + factor * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, factor: int) -> None:
        for row in a:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for k in range(min(m, n)):
        while True:
            pivot = None
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    val = abs(a[i][j])
                    if val and (best is None or val < best):
                        best, pivot = val, (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != k:
                swap_rows(k, pi)
            if pj != k:
                swap_cols(k, pj)
            if a[k][k] < 0:
                negate_row(k)
            clean = True
            for i in range(m):
                if i != k and a[i][k]:
                    add_row(i, k, -(a[i][k] // a[k][k]))
                    if a[i][k]:
                        clean = False
            for j in range(n):
                if j != k and a[k][j]:
                    add_col(j, k, -(a[k][j] // a[k][k]))
                    if a[k][j]:
                        clean = False
            if not clean:
                continue
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if a[i][j] % a[k][k]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(k, offender, 1)
        if a[k][k] == 0:
            break

    diag = tuple(a[i][i] if i < m else 0 for i in range(min(m, n) if m else 0))
    # pad the diagonal to n entries semantically handled by callers
    return SmithDecomposition(
        U=tuple(tuple(r) for r in u),
        D=tuple(tuple(r) for r in a),
        V=tuple(tuple(r) for r in v),
        diag=diag,
    )


class FixKind(str, Enum):
    EMPTY = "empty"
    FINITE = "finite"
    POSITIVE_DIMENSIONAL = "positive_dimensional"


@dataclass(frozen=True)
class FixedPointSet:
    """The solution set of an affine congruence system on the torus."""

    kind: FixKind
    count: int | None = None
    dimension: int | None = None
    component_count: int | None = None
    representatives: Tuple[TorusPoint, ...] = ()
    truncated: bool = False

    @property
    def is_empty(self) -> bool:
        return self.kind is FixKind.EMPTY

    def to_json(self) -> dict:
        if self.kind is FixKind.EMPTY:
            return {"kind": self.kind.value}
        if self.kind is FixKind.FINITE:
            return {
                "kind": self.kind.value,
                "count": self.count,
                "representatives": [p.to_json() for p in self.representatives],
                "truncated": self.truncated,
            }
        return {
            "kind": self.kind.value,
            "dimension": self.dimension,
            "component_count": self.component_count,
            "sample_points": [p.to_json() for p in self.representatives],
            "truncated": self.truncated,
        }

    def __str__(self) -> str:
        if self.kind is FixKind.EMPTY:
            return "empty"
        if self.kind is FixKind.FINITE:
            return f"{self.count} isolated points"
        return (f"dimension {self.dimension}, "
                f"{self.component_count} components")


EMPTY_FIXED_SET = FixedPointSet(FixKind.EMPTY)
WHOLE_TORUS = FixedPointSet(FixKind.POSITIVE_DIMENSIONAL, dimension=2,
                            component_count=1,
                            representatives=(TorusPoint((Fraction(0),) * 4),))


def solve_torus_congruence(rows: Sequence[Sequence[int]],
                           rhs: Sequence[Fraction]) -> FixedPointSet:
    """Solve rows * x = rhs (mod Z^m) for x in the torus (Q/Z)^4."""
    m = len(rows)
    if m != len(rhs):
        raise ValueError("one right-hand side entry per equation row")
    if m == 0:
        return WHOLE_TORUS
    snf = smith_normal_form(rows, ncols=4)
    # transformed right-hand side: one entry per equation row
    new_rhs = [sum(snf.U[i][j] * Fraction(rhs[j]) for j in range(m))
               for i in range(m)]
    divisors: List[int] = []
    free_coords: List[int] = []
    for i in range(4):
        d = snf.diag[i] if i < len(snf.diag) else 0
        if d == 0:
            free_coords.append(i)
        else:
            divisors.append(d)
    # every zero row (beyond the rank, or entirely absent coordinates)
    # imposes an integrality condition on the right-hand side
    for i in range(m):
        d = snf.diag[i] if i < len(snf.diag) else 0
        if d == 0 and new_rhs[i].denominator != 1:
            return EMPTY_FIXED_SET

    component_count = 1
    for d in divisors:
        component_count *= d

    def enumerate_points(limit_ok: bool) -> Tuple[Tuple[TorusPoint, ...], bool]:
        if not limit_ok:
            return (), True
        solved_idx = [i for i in range(4)
                      if (snf.diag[i] if i < len(snf.diag) else 0) != 0]
        choices = []
        for i in solved_idx:
            d = snf.diag[i]
            base = new_rhs[i] / d
            choices.append([base + Fraction(j, d) for j in range(d)])
        points = []
        for combo in itertools.product(*choices) if choices else [()]:
            y = [Fraction(0)] * 4
            for idx, val in zip(solved_idx, combo):
                y[idx] = val
            x = tuple(sum(Fraction(snf.V[i][j]) * y[j] for j in range(4))
                      for i in range(4))
            points.append(TorusPoint(x))
        points.sort(key=lambda p: p.coords)
        truncated = len(points) > LISTED_LIMIT
        return tuple(points[:LISTED_LIMIT]), truncated

    if free_coords:
        dim2 = len(free_coords)
        assert dim2 % 2 == 0, "fixed locus must have even real dimension"
        reps, truncated = enumerate_points(component_count <= ENUMERATION_LIMIT)
        truncated = truncated or component_count > ENUMERATION_LIMIT
        return FixedPointSet(FixKind.POSITIVE_DIMENSIONAL,
                             dimension=dim2 // 2,
                             component_count=component_count,
                             representatives=reps,
                             truncated=truncated)

    reps, truncated = enumerate_points(component_count <= ENUMERATION_LIMIT)
    truncated = truncated or component_count > ENUMERATION_LIMIT
    return FixedPointSet(FixKind.FINITE, count=component_count,
                         representatives=reps, truncated=truncated)


def _system_rows(h: AffineAut) -> Tuple[List[List[int]], List[Fraction]]:
    m4 = linear_to_int4(h.linear)
    ident = int4_identity()
    rows = [[m4[i][j] - ident[i][j] for j in range(4)] for i in range(4)]
    rhs = [-c for c in h.translation.coords]
    return rows, rhs


def fixed_set(h: AffineAut) -> FixedPointSet:
    """The set of torus points fixed by the affine automorphism h."""
    rows, rhs = _system_rows(h)
    return solve_torus_congruence(rows, rhs)


def common_fixed_set(elements: Iterable[AffineAut]) -> FixedPointSet:
    """Points fixed by every listed automorphism (one stacked linear system)."""
    rows: List[List[int]] = []
    rhs: List[Fraction] = []
    found = False
    for h in elements:
        found = True
        r, t = _system_rows(h)
        rows.extend(r)
        rhs.extend(t)
    if not found:
        raise ValueError("need at least one automorphism")
    return solve_torus_congruence(rows, rhs)


class EigClass(str, Enum):
    TRANSLATION = "translation"
    HAS_EIGENVALUE_ONE = "eigenvalue_one"
    NO_EIGENVALUE_ONE = "no_eigenvalue_one"


def element_eig_class(h: AffineAut) -> EigClass:
    """Coarse class of the linear part: identity, eigenvalue 1, or neither."""
    if h.linear == identity(h.ring):
        return EigClass.TRANSLATION
    if has_eigenvalue_one(h.linear):
        return EigClass.HAS_EIGENVALUE_ONE
    return EigClass.NO_EIGENVALUE_ONE


def is_reflection(h: AffineAut) -> bool:
    """True when the linear part fixes a line (eigenvalue 1) and h has fixed points."""
    return (element_eig_class(h) is EigClass.HAS_EIGENVALUE_ONE
            and not fixed_set(h).is_empty)
