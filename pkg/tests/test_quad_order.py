"""Ring arithmetic, units, and roots of unity."""

from fractions import Fraction

import pytest

from quotsurf.errors import BadConductor, NotAUnit, NotSquarefree, RingMismatch
from quotsurf.quad_order import (
    QuadElem,
    RootOfUnity,
    conjugate,
    elem,
    elem_from_json,
    elem_to_json,
    is_unit,
    make_ring,
    norm,
    one,
    rat_from_json,
    rat_to_json,
    ring_from_json,
    ring_to_json,
    root_to_unit,
    theta,
    unit_to_root,
    units,
    zero,
)

import _cyclo


RING_PQ = {
    (0, 1): (0, 0),
    (1, 1): (0, -1),
    (1, 2): (0, -4),
    (2, 1): (0, -2),
    (3, 1): (1, -1),
    (3, 2): (2, -4),
    (5, 1): (0, -5),
}

UNIT_COUNTS = {(1, 1): 4, (3, 1): 6, (2, 1): 2, (1, 2): 2, (3, 2): 2,
               (5, 1): 2, (0, 1): 2}


def test_ring_structure_constants():
    for (d, f), (p, q) in RING_PQ.items():
        ring = make_ring(d, f)
        assert (ring.p, ring.q) == (p, q), (d, f)


def test_ring_str():
    assert str(make_ring(0, 1)) == "Z"
    assert str(make_ring(3, 2)) == "R(-3,2)"
    assert str(make_ring(1, 1)) == "R(-1,1)"


def test_invalid_rings_rejected():
    with pytest.raises(NotSquarefree):
        make_ring(4, 1)
    with pytest.raises(NotSquarefree):
        make_ring(12, 1)
    with pytest.raises(BadConductor):
        make_ring(3, 0)
    with pytest.raises(BadConductor):
        make_ring(0, 2)
    with pytest.raises(NotSquarefree):
        make_ring(-3, 1)


def test_theta_satisfies_its_quadratic():
    for (d, f), (p, q) in RING_PQ.items():
        if d == 0:
            continue
        ring = make_ring(d, f)
        t = theta(ring)
        assert t * t == t * p + q, (d, f)


def test_eisenstein_identities():
    ring = make_ring(3, 1)
    t = theta(ring)
    assert t * t == t - 1
    assert t ** 3 == elem(ring, -1)
    assert (t - 1) * (t - 1) == -t
    assert t * (1 - t) == one(ring)
    assert (t - 1).inverse() == -t
    assert t.inverse() == 1 - t
    assert (1 - t) ** 3 == elem(ring, -1)
    assert conjugate(t) == 1 - t
    assert norm(t) == 1


def test_gauss_and_sqrt_minus_two_identities():
    g = make_ring(1, 1)
    i = theta(g)
    assert i * i == elem(g, -1)
    assert (1 + i) * (1 - i) == elem(g, 2)
    r2 = make_ring(2, 1)
    s = theta(r2)
    assert s * s == elem(r2, -2)
    assert conjugate(s) == -s
    assert norm(s) == 2


def test_rational_ring_rejects_theta_component():
    ring = make_ring(0, 1)
    with pytest.raises(BadConductor):
        QuadElem(ring, Fraction(1), Fraction(1))


def test_mixed_ring_arithmetic_rejected():
    with pytest.raises(RingMismatch):
        theta(make_ring(1, 1)) + theta(make_ring(3, 1))


def test_field_inverse():
    ring = make_ring(3, 1)
    for x in (theta(ring), elem(ring, 2, 3), elem(ring, Fraction(1, 2), 1)):
        assert x * x.inverse() == one(ring)
    with pytest.raises(ZeroDivisionError):
        zero(ring).inverse()


def test_norm_is_multiplicative():
    ring = make_ring(2, 1)
    x = elem(ring, 3, 1)
    y = elem(ring, -1, 2)
    assert norm(x * y) == norm(x) * norm(y)


def test_units_table():
    for (d, f), count in UNIT_COUNTS.items():
        ring = make_ring(d, f)
        us = units(ring)
        assert len(us) == count, (d, f)
        assert len(set(map(str, us))) == count
        for u in us:
            assert is_unit(u)
            assert norm(u) == 1


def test_unit_root_round_trip():
    for (d, f) in UNIT_COUNTS:
        ring = make_ring(d, f)
        for u in units(ring):
            r = unit_to_root(u)
            assert root_to_unit(ring, r) == u
            # the root's order matches the multiplicative order of the unit
            acc = u
            for k in range(1, r.order):
                assert acc != one(ring)
                acc = acc * u
            assert acc == one(ring)


def test_unit_to_root_rejects_non_units():
    ring = make_ring(3, 1)
    with pytest.raises(NotAUnit):
        unit_to_root(elem(ring, 2))
    with pytest.raises(NotAUnit):
        unit_to_root(theta(ring) + 1)  # norm 3


def test_root_of_unity_normalization_and_algebra():
    assert (RootOfUnity(2, 8).k, RootOfUnity(2, 8).n) == (1, 4)
    assert RootOfUnity(5, 1) == RootOfUnity(0, 1)
    r = RootOfUnity(1, 12)
    assert (r ** 12) == RootOfUnity(0, 1)
    assert r * r.inverse() == RootOfUnity(0, 1)
    assert (r ** 5).order == 12


def test_root_of_unity_against_cyclotomic_field():
    roots = [RootOfUnity(k, n)
             for n in (1, 2, 3, 4, 6, 8, 12, 24) for k in range(n)]
    for x in roots:
        for y in roots:
            prod = x * y
            lhs = _cyclo.mul(_cyclo.zeta(x.n, x.k), _cyclo.zeta(y.n, y.k))
            assert lhs == _cyclo.zeta(prod.n, prod.k), (x, y)


def test_units_embed_correctly():
    # each unit's symbolic root matches its image in Q(zeta_24)
    for (d, f) in UNIT_COUNTS:
        if d == 5:
            continue  # sqrt(-5) is not inside Q(zeta_24)
        ring = make_ring(d, f)
        for u in units(ring):
            r = unit_to_root(u)
            assert _cyclo.embed_quad(ring, u) == _cyclo.zeta(r.n, r.k), (d, f, str(u))


def test_json_round_trips():
    assert rat_to_json(Fraction(3)) == 3
    assert rat_to_json(Fraction(1, 2)) == "1/2"
    assert rat_from_json("-7/3") == Fraction(-7, 3)
    assert rat_from_json(5) == Fraction(5)
    ring = make_ring(3, 2)
    assert ring_from_json(ring_to_json(ring)) == ring
    x = elem(ring, Fraction(1, 2), -3)
    assert elem_from_json(ring, elem_to_json(x)) == x
