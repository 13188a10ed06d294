"""Frozen witness matrices with their expected exact invariants.

Each row: (ring spec (d, f), matrix literal, expected det as a root-of-unity
exponent pair (n, k), expected trace literal, expected element order,
expected eigenvalue pair key).  Matrix/trace literals use the same
conventions as ``quotsurf.matrix_group.mat2``: an int/Fraction means
``a + 0*theta``, a pair ``(a, b)`` means ``a + b*theta``.

The values are the library-independent ground truth the test suite checks
the implementation against; they are re-derivable by hand from the
characteristic polynomial (the ``_cyclo`` helper re-verifies the eigenvalue
sums and products inside Q(zeta_24) on every run).
"""

# --- special linear witnesses (det 1) --------------------------------------

SL_WITNESSES = [
    # (ring, matrix, trace, order, eigen pair)
    ((0, 1), ((1, 1), (-3, -2)), -1, 3, ((3, 1), (3, 2))),
    ((0, 1), ((1, -2), (1, -1)), 0, 4, ((4, 1), (4, 3))),
    ((0, 1), ((2, 1), (-3, -1)), 1, 6, ((6, 1), (6, 5))),
]

# The trace <-> order map for finite-order special linear elements.
SL_TRACE_TO_ORDER = {2: 1, -2: 2, -1: 3, 0: 4, 1: 6}

# --- general linear witnesses (det a nontrivial root of unity) -------------

GL_WITNESSES = [
    # det -1, trace sqrt(-2) and -sqrt(-2) over R(-2,1)
    ((2, 1), ((1, 1), ((0, 1), (-1, 1))), (2, 1), (0, 1), 8,
     ((8, 1), (8, 3))),
    ((2, 1), ((1, 1), ((0, -1), (-1, -1))), (2, 1), (0, -1), 8,
     ((8, 5), (8, 7))),
    # det -1, trace i and -i over Z[i]
    ((1, 1), ((1, 1), ((0, 1), (-1, 1))), (2, 1), (0, 1), 12,
     ((12, 1), (12, 5))),
    ((1, 1), ((1, 1), ((0, -1), (-1, -1))), (2, 1), (0, -1), 12,
     ((12, 7), (12, 11))),
    # det -1, trace sqrt(-3) and -sqrt(-3) over R(-3,1) (sqrt(-3) = 2*theta-1)
    ((3, 1), ((1, 1), ((-1, 2), (-2, 2))), (2, 1), (-1, 2), 6,
     ((3, 1), (6, 1))),
    ((3, 1), ((1, 1), ((1, -2), (0, -2))), (2, 1), (1, -2), 6,
     ((3, 2), (6, 5))),
    # same two traces over the conductor-2 ring R(-3,2) (sqrt(-3) = theta-1)
    ((3, 2), ((1, 1), ((-1, 1), (-2, 1))), (2, 1), (-1, 1), 6,
     ((3, 1), (6, 1))),
    ((3, 2), ((1, 1), ((1, -1), (0, -1))), (2, 1), (1, -1), 6,
     ((3, 2), (6, 5))),
    # det i over Z[i]: traces 0, 1+i, -1-i
    ((1, 1), (((0, 1), (0, 1)), ((-1, -1), (0, -1))), (4, 1), 0, 8,
     ((8, 3), (8, 7))),
    ((1, 1), (((0, 1), 0), (0, 1)), (4, 1), (1, 1), 4,
     ((1, 0), (4, 1))),
    ((1, 1), (((0, -1), 0), (0, -1)), (4, 1), (-1, -1), 4,
     ((2, 1), (4, 3))),
    # det -i over Z[i]: traces 0, 1-i, -1+i
    ((1, 1), (((0, -1), (0, -1)), ((-1, 1), (0, 1))), (4, 3), 0, 8,
     ((8, 1), (8, 5))),
    ((1, 1), (((0, -1), 0), (0, 1)), (4, 3), (1, -1), 4,
     ((1, 0), (4, 3))),
    ((1, 1), (((0, 1), 0), (0, -1)), (4, 3), (-1, 1), 4,
     ((2, 1), (4, 1))),
    # det e^{pi i/3} over R(-3,1)
    ((3, 1), (((-1, 1), 0), (0, (1, -1))), (6, 1), 0, 6,
     ((3, 1), (6, 5))),
    ((3, 1), (((0, 1), 0), (0, 1)), (6, 1), (1, 1), 6,
     ((1, 0), (6, 1))),
    ((3, 1), (((0, -1), 0), (0, -1)), (6, 1), (-1, -1), 6,
     ((2, 1), (3, 2))),
    # det e^{-pi i/3} over R(-3,1)
    ((3, 1), (((0, 1), 0), (0, (0, -1))), (6, 5), 0, 6,
     ((3, 2), (6, 1))),
    ((3, 1), (((1, -1), 0), (0, 1)), (6, 5), (2, -1), 6,
     ((1, 0), (6, 5))),
    ((3, 1), (((-1, 1), 0), (0, -1)), (6, 5), (-2, 1), 6,
     ((2, 1), (3, 1))),
    # det e^{2 pi i/3} over R(-3,1)
    ((3, 1), (((-1, 1), 0), (0, 1)), (3, 1), (0, 1), 3,
     ((1, 0), (3, 1))),
    ((3, 1), (((1, -1), 0), (0, -1)), (3, 1), (0, -1), 6,
     ((2, 1), (6, 5))),
    ((3, 1), (((0, 1), 0), (0, (0, 1))), (3, 1), (0, 2), 6,
     ((6, 1), (6, 1))),
    ((3, 1), (((0, -1), 0), (0, (0, -1))), (3, 1), (0, -2), 3,
     ((3, 2), (3, 2))),
    ((3, 1), ((0, 1), ((1, -1), 0)), (3, 1), 0, 12,
     ((12, 5), (12, 11))),
    # det e^{-2 pi i/3} over R(-3,1)
    ((3, 1), (((0, 1), 0), (0, -1)), (3, 2), (-1, 1), 6,
     ((2, 1), (6, 1))),
    ((3, 1), (((0, -1), 0), (0, 1)), (3, 2), (1, -1), 3,
     ((1, 0), (3, 2))),
    ((3, 1), (((-1, 1), 0), (0, (-1, 1))), (3, 2), (-2, 2), 3,
     ((3, 1), (3, 1))),
    ((3, 1), (((1, -1), 0), (0, (1, -1))), (3, 2), (2, -2), 6,
     ((6, 5), (6, 5))),
    ((3, 1), ((0, 1), ((0, 1), 0)), (3, 2), 0, 12,
     ((12, 1), (12, 7))),
]

# Witnesses named by the acceptance suite (subset of GL_WITNESSES, in the
# order they are listed there): g(sqrt-2), g(-sqrt-2), g(i), g(-i),
# g(sqrt-3), g(-sqrt-3), g_i(0), g_i(1+i), g_i(-1-i), g_-i(0), g_-i(1-i),
# g_-i(-1+i), then the diagonal R(-3,1) witnesses.
