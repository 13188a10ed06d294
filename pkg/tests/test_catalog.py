"""Catalog entries, witness realization, affine families, self-verification."""

import pytest

from quotsurf.catalog import (
    DEFECTS,
    DUPLICATE_SETS,
    ENTRIES,
    close_affine,
    close_linear,
    entries_json,
    family_affine,
    get_entry,
    match_entries,
    parse_label,
    preferred_label,
    realize,
    verify_catalog,
)
from quotsurf.errors import (
    NotAUnit,
    NotRealizable,
    TorsionConstraintViolated,
)
from quotsurf.matrix_group import (
    classify_gl,
    classify_sl,
    element_order,
    group_from_elements,
)
from quotsurf.quad_order import make_ring


def test_entry_inventory():
    assert len(ENTRIES) == 68
    labels = [str(e.label) for e in ENTRIES]
    assert len(set(labels)) == 68
    # the eight K classes plus six H families plus the three extended ones
    assert {lab.split("(")[0] for lab in labels} == {
        "K1", "K2", "K3", "K4", "K5", "K6", "K7", "K8",
        "HC1", "HC2", "HC3", "HC4", "HC6",
        "HQ8", "HQ12", "HSL23"}
    assert sum(1 for e in ENTRIES if e.realizable) == 41


def test_get_entry_and_labels():
    e = get_entry("K4")
    assert e.expected_order == 8 and e.s == 1 and e.group_name == "Q8"
    assert get_entry(parse_label("HQ8(2)")).expected_order == 16
    with pytest.raises(ValueError):
        get_entry("NOPE(1)")
    with pytest.raises(ValueError):
        get_entry("HQ8(99)")


def test_realize_known_orders():
    for label, order in [("K1", 1), ("K2", 2), ("K3", 4), ("K4", 8),
                         ("K5", 3), ("K6", 6), ("K7", 12),
                         ("HQ8(2)", 16), ("HQ8(9)", 32),
                         ("HQ12(5)", 36), ("HQ12(10)", 72),
                         ("HSL23(5)", 72)]:
        assert close_linear(realize(label)).order == order, label


def test_realize_error_paths():
    with pytest.raises(NotRealizable):
        realize("K8")
    with pytest.raises(NotRealizable):
        realize("HSL23(1)")
    # fixed-ring entries reject a conflicting ring
    with pytest.raises(ValueError):
        realize("HQ8(2)", ring=make_ring(3, 1))
    # the free unit parameter must be a unit
    with pytest.raises(NotAUnit):
        realize("HC2(1)", b1=2)


def test_realize_ring_and_unit_freedom():
    # entries valid over every order accept a ring argument
    gens = realize("K1", ring=make_ring(5, 1))
    assert str(gens[0].ring) == "R(-5,1)"
    # conjugating by diag(u, 1) changes the witnesses, not the class
    g = realize("K4")
    gi = realize("K4", b1=(0, 1))
    assert g != gi
    a = classify_gl(close_linear(g))
    b = classify_gl(close_linear(gi))
    assert a.label == b.label


def test_classification_round_trip_on_realizable_entries():
    # every realizable witness must be recognized as (a duplicate of) itself
    for entry in ENTRIES:
        if not entry.realizable:
            continue
        grp = close_linear(realize(entry.label))
        res = classify_gl(grp)
        assert str(entry.label) in [str(m) for m in res.all_matches], \
            entry.label


def test_duplicate_sets():
    assert len(DUPLICATE_SETS) == 8
    for pair in DUPLICATE_SETS:
        assert len(pair) == 2
        matches = [
            frozenset(str(m) for m in
                      classify_gl(close_linear(realize(lab))).all_matches)
            for lab in pair if get_entry(lab).realizable
        ]
        assert matches, pair
        # every realizable member of the set matches the whole set
        for got in matches:
            assert set(pair) <= got, (pair, got)


def test_preferred_label_prefers_realizable():
    hq1 = parse_label("HQ8(8)")   # not realizable
    hq2 = parse_label("HQ8(9)")   # realizable
    assert str(preferred_label([hq1, hq2])) == "HQ8(9)"
    assert str(preferred_label([hq1])) == "HQ8(8)"


def test_verify_catalog_summary():
    v = verify_catalog()
    s = v["summary"]
    assert s["total_entries"] == 68
    assert s["realizable"] == 41
    assert s["verified"] == 41
    assert s["failures"] == []
    assert [tuple(p) for p in s["duplicate_sets"]] == list(DUPLICATE_SETS)
    assert list(s["defects"]) == list(DEFECTS)
    by_label = {e["label"]: e for e in v["entries"]}
    assert by_label["K4"]["checks"]["order"]
    assert by_label["HQ12(5)"]["checks"]["relations"]
    assert by_label["K8"]["status"] == "not realizable"


def test_family_k3_shapes():
    expected = {1: 2, 2: 4, 3: 8, 4: 3, 5: 6, 6: 12}
    for j, order in expected.items():
        h = close_affine(family_affine("K3", {"j": j}))
        assert h.order == order, j
    with pytest.raises(NotRealizable):
        family_affine("K3", {"j": 7})
    with pytest.raises(NotRealizable):
        family_affine("K3", {"j": 8})
    with pytest.raises(ValueError):
        family_affine("K3", {"j": 9})
    with pytest.raises(ValueError):
        family_affine("K3", {"j": "two"})


def test_family_he_valid_parameters():
    cases = [
        ("HE2", {"W": ("1/2", 0)}, 2),
        ("HE22", {"W": ("1/2", 0), "X": (0, "1/2"), "Y": ("1/2", 0)}, 4),
        ("HE3", {"W": ("1/3", 0)}, 3),
        ("HE33", {"W": ("1/3", 0), "X": ("1/3", "1/3"), "Y": ("1/3", 0)}, 27),
        ("HE4", {"W": ("1/4", 0)}, 4),
        ("HE44", {"W": ("1/4", 0), "X": (0, "1/2"), "Y": ("1/2", "1/2")}, 8),
        ("HE6", {"W": ("1/6", 0), "N": [("1/2", "1/2")]}, 24),
    ]
    for tag, params, order in cases:
        h = close_affine(family_affine(tag, params))
        assert h.order == order, tag


def test_family_he_violations():
    # W of the wrong torsion order
    with pytest.raises(TorsionConstraintViolated):
        family_affine("HE2", {"W": ("1/3", 0)})
    # odd-order X lies inside the kernel generated by 2X
    with pytest.raises(TorsionConstraintViolated):
        family_affine("HE22",
                      {"W": ("1/2", 0), "X": ("1/3", 0), "Y": ("1/2", 0)})
    # Y already in the factor-1 kernel
    with pytest.raises(TorsionConstraintViolated):
        family_affine("HE22", {"W": ("1/2", 0), "X": (0, "1/2"),
                               "Y": (0, 0), "N": [(0, "1/2")]})
    with pytest.raises(ValueError):
        family_affine("HE22", {"W": ("1/2", 0)})  # missing X, Y
    with pytest.raises(ValueError):
        family_affine("HE2", {})  # missing W


def test_family_re_valid_and_violations():
    cases = [
        ("RE2", {"P1": ("1/2", 0), "Q1": (0, 0), "U1": ("1/2", 0)}, 4),
        ("RE3", {"P1": ("1/3", 0), "Q1": (0, 0), "U1": ("1/3", 0)}, 9),
        ("RE4", {"P1": ("1/2", 0), "Q1": (0, 0), "U1": ("1/2", 0)}, 8),
        ("RE6", {"P1": (0, 0), "Q1": (0, 0), "U1": ("1/2", 0)}, 6),
    ]
    for tag, params, order in cases:
        h = close_affine(family_affine(tag, params))
        assert h.order == order, tag
    # U1 outside the subgroup generated by P1 (and P2)
    with pytest.raises(TorsionConstraintViolated):
        family_affine("RE2", {"P1": ("1/2", 0), "Q1": (0, 0),
                              "U1": ("1/3", 0)})
    # no residue can scale (P1, Q1) onto (P1, zeta*Q1)
    with pytest.raises(TorsionConstraintViolated):
        family_affine("RE3", {"P1": ("1/3", 0), "Q1": ("1/2", 0),
                              "U1": ("1/3", 0)})
    with pytest.raises(ValueError):
        family_affine("RE3", {"P1": ("1/3", 0)})  # missing points


def test_family_enriques():
    gens = family_affine("Enriques", {"s": 2, "point": (0, 0, "1/2", 0)})
    assert len(gens) == 2
    assert element_order(gens[0].linear) == 2
    # degenerate point: the square of the second generator is the identity
    with pytest.raises(TorsionConstraintViolated):
        family_affine("Enriques", {"s": 2, "point": (0, 0, 0, 0)})
    with pytest.raises(ValueError):
        family_affine("Enriques", {"s": 5, "point": (0, 0, "1/2", 0)})
    with pytest.raises(ValueError):
        family_affine("Enriques", {"s": 2})


def test_family_unknown_tag():
    with pytest.raises(ValueError):
        family_affine("XYZ", {})


def test_entries_json_shape():
    rows = entries_json()
    assert len(rows) == 68
    for row in rows:
        assert {"label", "family", "index", "realizable"} <= set(row)
    k4 = next(r for r in rows if r["label"] == "K4")
    assert k4["group"] == "Q8" and k4["expected_order"] == 8


def test_classify_sl_matches_catalog_orders():
    for label, order in [("K1", 1), ("K2", 2), ("K5", 3), ("K3", 4),
                         ("K6", 6), ("K4", 8), ("K7", 12)]:
        grp = close_linear(realize(label))
        assert grp.order == order
        assert str(classify_sl(grp)) == label


def test_match_entries_requires_consistent_s():
    grp = close_linear(realize("HQ8(2)"))
    sl = group_from_elements(grp.ring, list(grp.sl_part), grp.sl_part)
    matches = match_entries(grp, classify_sl(sl), grp.det_order)
    assert {str(m) for m in matches} == {"HQ8(1)", "HQ8(2)"}
