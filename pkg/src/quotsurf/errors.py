"""Exception hierarchy for the quotsurf library.

``ValueError`` subclasses signal malformed input (bad parameters, malformed
documents); ``DomainError`` subclasses signal inputs that are well-formed but
outside the mathematical domain of an operation (non-unit determinant,
infinite-order generators, groups beyond closure caps, ...).  The CLI maps
ValueError to exit code 1 and DomainError to exit code 2.
"""

from __future__ import annotations


class DomainError(Exception):
    """Well-formed input outside an operation's mathematical domain."""


class NotSquarefree(ValueError):
    """The discriminant parameter d must be squarefree (or 0)."""


class BadConductor(ValueError):
    """The conductor f must be a positive integer (and 1 when d = 0)."""


class RingMismatch(ValueError):
    """Operands belong to different rings."""


class NotAUnit(DomainError):
    """Expected a unit of the ring."""


class NotIntegral(DomainError):
    """Expected an element of the ring (integral coordinates)."""


class NotInvertibleInR(DomainError):
    """Matrix determinant is not a unit, so no inverse exists over the ring."""


class DetNotUnit(DomainError):
    """Eigenvalue classification requires a unit determinant."""


class InfiniteOrderGenerator(DomainError):
    """A generator has infinite order, so the generated group is infinite."""


class GroupExceedsCap(DomainError):
    """Group closure exceeded the configured element cap."""


class NotInCatalog(DomainError):
    """The group matches no catalog entry."""


class AmbiguousLabel(DomainError):
    """Strict recognition found several catalog entries matching the group."""

    def __init__(self, labels):
        self.labels = tuple(labels)
        super().__init__(
            "group matches several catalog entries: "
            + ", ".join(str(l) for l in self.labels)
        )


class NotRealizable(DomainError):
    """The catalog entry has no integral realization; carries the field."""

    def __init__(self, label, field):
        self.label = label
        self.field = field
        super().__init__(
            f"{label} has no realization over an imaginary quadratic order; "
            f"it occurs over {field}"
        )


class TorsionConstraintViolated(DomainError):
    """A family parameter violates the family's torsion constraints."""
