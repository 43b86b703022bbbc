import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfgalois.closedform import (
    CYCLIC_2P,
    CYCLIC_P,
    CYCLIC_P2,
    ELEMENTARY_CYCLIC,
    ELEMENTARY_KLEIN,
    PRIME,
    UNRECOGNIZED,
    GroupShape,
    UnsupportedDegree,
    classify_shape,
    degree_kind,
    predict,
    predict_2p_cyclic,
    predict_2p_dihedral,
    predict_p_squared,
    predict_prime,
)
from hopfgalois.enumeration import enumerate_all
from hopfgalois.tgdb import entries_of_degree, get_entry

# family and parameter of every recognized group at degrees 6, 9 and 10
SHAPES = {
    "6T1": (CYCLIC_2P, 1), "6T2": (CYCLIC_P, 2), "6T3": (CYCLIC_2P, 2),
    "6T5": (ELEMENTARY_CYCLIC, 2), "6T9": (ELEMENTARY_KLEIN, 2),
    "9T1": (CYCLIC_P2, 1), "9T3": (CYCLIC_P2, 2), "9T6": (CYCLIC_P2, 3), "9T10": (CYCLIC_P2, 6),
    "10T1": (CYCLIC_2P, 1), "10T2": (CYCLIC_P, 2), "10T3": (CYCLIC_2P, 2), "10T4": (CYCLIC_P, 4),
    "10T5": (CYCLIC_2P, 4), "10T6": (ELEMENTARY_CYCLIC, 2), "10T9": (ELEMENTARY_KLEIN, 2),
    "10T10": (ELEMENTARY_CYCLIC, 4), "10T17": (ELEMENTARY_KLEIN, 4),
}


def test_degree_kind():
    assert degree_kind(7) == ("p", 7)
    assert degree_kind(2) == ("p", 2)
    assert degree_kind(9) == ("p^2", 3)
    assert degree_kind(10) == ("2p", 5)
    assert degree_kind(6) == ("2p", 3)
    for g in (4, 8, 12):
        with pytest.raises(UnsupportedDegree):
            degree_kind(g)


@pytest.mark.parametrize("g", [6, 9, 10])
def test_recognized_families(g):
    for e in entries_of_degree(g):
        s = classify_shape(e)
        assert (s.family, s.m) == SHAPES.get(e.label, (UNRECOGNIZED, None)), e.label


def test_family_order_relations():
    for label, (family, m) in SHAPES.items():
        e = get_entry(label)
        _, p = degree_kind(e.degree)
        base = {CYCLIC_P2: p * p, CYCLIC_2P: 2 * p, CYCLIC_P: p, ELEMENTARY_CYCLIC: p * p, ELEMENTARY_KLEIN: 2 * p * p}
        assert e.order == base[family] * m, label


def test_prime_degree():
    for p in (2, 3, 5, 7, 11):
        for e in entries_of_degree(p):
            s = classify_shape(e)
            assert s.family == PRIME and s.recognized
            assert predict(e) == {f"C{p}": predict_prime(p, e)}
    assert predict_prime(11, get_entry("11T8")) == 0
    assert predict_prime(11, get_entry("11T4")) == 1
    assert predict_prime(5, get_entry("5T4")) == 0
    with pytest.raises(UnsupportedDegree):
        predict_prime(9, get_entry("9T1"))


def test_unsupported_degrees():
    with pytest.raises(UnsupportedDegree):
        predict(get_entry("8T3"))
    with pytest.raises(UnsupportedDegree):
        predict(get_entry("4T1"))


@given(st.sampled_from([3, 5, 7, 11]), st.integers(1, 200))
def test_p_squared_cyclic_formula(p, m):
    shape = GroupShape(p * p, p, "p^2", CYCLIC_P2, m)
    pred = predict_p_squared(p, shape)
    assert pred[f"C{p}^2"] == 0
    assert pred[f"C{p * p}"] == (p if m in (1, p) else 1)


@given(st.sampled_from([3, 5, 7]), st.sampled_from([CYCLIC_2P, CYCLIC_P, ELEMENTARY_CYCLIC, ELEMENTARY_KLEIN]), st.integers(1, 50))
def test_2p_formulas(p, family, m):
    shape = GroupShape(2 * p, p, "2p", family, m)
    assert predict_2p_dihedral(p, shape) == 2
    cyc = predict_2p_cyclic(p, shape)
    if family in (ELEMENTARY_CYCLIC, ELEMENTARY_KLEIN):
        assert cyc == 0
    elif family == CYCLIC_P and m == 2:
        assert cyc == p
    else:
        assert cyc == 1


def test_unrecognized_iff_and_open_modes():
    e = get_entry("9T2")
    assert classify_shape(e).family == UNRECOGNIZED
    assert predict(e) == {"C9": 0, "C3^2": None}
    assert predict(e, iff=False) == {"C9": None, "C3^2": None}
    e = get_entry("6T16")
    assert predict(e) == {"C6": 0, "S3": 0}
    assert predict(e, iff=False) == {"C6": None, "S3": None}


@pytest.mark.parametrize("label", ["6T2", "9T1", "9T6", "10T2", "10T17", "7T3"])
def test_predictions_match_enumeration_examples(label):
    e = get_entry(label)
    got = {k: v.total for k, v in enumerate_all(e).per_type_summary().items()}
    for k, v in predict(e).items():
        if v is not None:
            assert got[k] == v
