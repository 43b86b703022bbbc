import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hopfgalois.grouplib import catalogue, holomorph, type_by_name
from hopfgalois.permcore import (
    CapExceeded,
    NotRegular,
    PermGroup,
    all_subgroups,
    centralizer_of_regular,
    close,
    compose,
    conjugate,
    conjugation_orbit,
    derived_subgroup,
    format_cycles,
    group_order,
    identity,
    inverse,
    is_regular,
    is_solvable,
    is_transitive,
    normalizes,
    orbit_tables,
    parse_cycles,
    point_stabilizer,
    subgroups_above,
    symmetric_group,
    trivial_group,
)
from hopfgalois.tgdb import get_entry


def perms(n):
    return st.permutations(list(range(n))).map(tuple)


@st.composite
def perm_lists(draw, max_degree=7, max_gens=3):
    n = draw(st.integers(2, max_degree))
    return n, draw(st.lists(perms(n), min_size=1, max_size=max_gens))


C2_CUBED_8T3 = [
    parse_cycles("(0 7)(1 2)(3 4)(5 6)", 8),
    parse_cycles("(0 2)(1 7)(3 5)(4 6)", 8),
    parse_cycles("(0 4)(1 5)(2 6)(3 7)", 8),
]


# -- single permutations ----------------------------------------------------


def test_compose_applies_right_factor_first():
    p = parse_cycles("(0 1 2)", 3)
    q = parse_cycles("(0 1)", 3)
    assert compose(p, q) == tuple(p[q[i]] for i in range(3)) == oracles.mul(p, q)
    assert compose(p, q) == parse_cycles("(0 2)", 3)


def test_compose_trivial_cases():
    t = parse_cycles("(0 1)", 4)
    assert compose(t, t) == identity(4)
    p = parse_cycles("(0 2 3)", 4)
    assert compose(p, identity(4)) == p


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose((0, 1), (0, 1, 2))


@given(perms(9))
def test_inverse_laws(p):
    assert compose(p, inverse(p)) == identity(len(p))
    assert inverse(inverse(p)) == p


@given(perms(9), perms(9))
def test_conjugate_is_s_p_sinv(p, s):
    assert conjugate(s, p) == oracles.mul(oracles.mul(s, p), oracles.inv(s))


@given(perms(11))
def test_cycle_notation_round_trip(p):
    assert parse_cycles(format_cycles(p), 11) == p
    assert parse_cycles(format_cycles(p, one_based=True), 11, one_based=True) == p


def test_parse_identity_and_errors():
    assert parse_cycles("()", 5) == identity(5)
    with pytest.raises(ValueError):
        parse_cycles("(0 1)(1 2)", 3)
    with pytest.raises(ValueError):
        parse_cycles("(0 5)", 3)


# -- closure and order ------------------------------------------------------


def test_close_examples():
    assert close([parse_cycles("(0 1 2 3)", 4)]).order == 4
    assert close(symmetric_group(4).generators).order == 24
    assert close(C2_CUBED_8T3).order == 8


def test_close_cap():
    with pytest.raises(CapExceeded):
        close(symmetric_group(7).generators, cap=100)


def test_symmetric_group_orders_by_chain():
    for g in range(1, 12):
        assert group_order(symmetric_group(g)) == math.factorial(g)
    assert group_order(symmetric_group(8)) == 40320


def test_order_of_8T3_and_holomorph():
    assert group_order(PermGroup(C2_CUBED_8T3, 8)) == 8
    hol = holomorph(type_by_name("C2^3").standard_rep)
    assert group_order(PermGroup(hol.generators, 8)) == 1344
    assert len(oracles.closure(hol.generators, 8)) == 1344


@settings(max_examples=60, deadline=None)
@given(perm_lists())
def test_chain_order_matches_closure(data):
    n, gens = data
    G = PermGroup(gens, n)
    elems = oracles.closure(gens, n)
    assert G.chain.order == len(elems)
    assert set(G.elements) == elems
    assert list(G.elements) == sorted(G.elements)


@settings(max_examples=40, deadline=None)
@given(perm_lists(max_degree=6), perms(6))
def test_chain_membership_matches_closure(data, p):
    n, gens = data
    p = tuple(p[:n]) if n == 6 else None
    G = PermGroup(gens, n)
    elems = oracles.closure(gens, n)
    for x in list(elems)[:20]:
        assert G.chain.contains(x)
    if p is not None:
        assert G.chain.contains(p) == (p in elems)


@settings(max_examples=30, deadline=None)
@given(perm_lists(max_degree=6))
def test_materialized_groups_are_closed(data):
    n, gens = data
    G = PermGroup(gens, n)
    S = G.element_set
    assert identity(n) in S
    assert all(compose(a, b) in S for a in S for b in S)
    assert all(inverse(a) in S for a in S)
    assert len(S) == group_order(PermGroup(gens, n))


# -- transitivity, regularity, stabilizers ----------------------------------


def test_transitivity_examples():
    assert is_transitive(PermGroup([tuple(range(1, 8)) + (0,)], 8))
    assert not is_transitive(PermGroup([parse_cycles("(0 1)", 8)], 8))


def test_regularity_examples():
    assert is_regular(type_by_name("D4").standard_rep)
    assert is_regular(PermGroup([parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)], 4))
    G6 = get_entry("8T6").group
    assert G6.order > 8 and not is_regular(G6)


def test_regular_groups_are_fixed_point_free():
    for g in range(2, 12):
        for t in catalogue(g):
            N = t.standard_rep
            assert N.order == g
            for n in N.elements:
                if n != identity(g):
                    assert all(n[i] != i for i in range(g))


def test_point_stabilizer_examples():
    N = type_by_name("Q8").standard_rep
    assert point_stabilizer(N, 3).order == 1
    G6 = get_entry("8T6").group
    assert G6.order == 8 * point_stabilizer(G6, 0).order
    assert point_stabilizer(symmetric_group(4), 0).order == 6


# -- normalizers and centralizers -------------------------------------------


def test_normalizes_examples():
    N1 = PermGroup([parse_cycles("(0 7)(1 2)(3 4)(5 6)", 8), parse_cycles("(0 5 4 1)(2 3 6 7)", 8)], 8)
    G = PermGroup(C2_CUBED_8T3, 8)
    assert normalizes(N1, N1)
    assert normalizes(G, N1)
    orbit = conjugation_orbit(N1)
    hits = [M for M in orbit if normalizes(G, M)]
    # only part of the orbit is normalized, and every hit is checked elementwise
    assert 0 < len(hits) < len(orbit)
    for M in hits:
        S = M.element_set
        assert all(conjugate(s, m) in S for s in G.elements for m in M.elements)


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_centralizer_matches_brute_force_small(g):
    for t in catalogue(g):
        for N in conjugation_orbit(t.standard_rep)[:12]:
            Z = centralizer_of_regular(N)
            assert set(Z.elements) == oracles.brute_centralizer(N.elements, g)


@pytest.mark.parametrize("name", ["D4", "Q8"])
def test_centralizer_matches_brute_force_degree8(name):
    N = type_by_name(name).standard_rep
    Z = centralizer_of_regular(N)
    assert set(Z.elements) == oracles.brute_centralizer(N.elements, 8)
    assert is_regular(Z)
    from hopfgalois.grouplib import identify_type

    assert identify_type(Z).name == name


def test_centralizer_properties_all_types():
    for g in range(2, 12):
        for t in catalogue(g):
            N = t.standard_rep
            Z = centralizer_of_regular(N)
            assert Z.order == g and is_regular(Z)
            assert all(compose(z, n) == compose(n, z) for z in Z.elements for n in N.elements)
            if t.abelian:
                assert Z.element_set == N.element_set


def test_centralizer_needs_regular():
    with pytest.raises(NotRegular):
        centralizer_of_regular(symmetric_group(3))


# -- conjugation orbits -----------------------------------------------------


@pytest.mark.parametrize("g", range(2, 11))
def test_orbit_size_is_index_of_holomorph(g):
    for t in catalogue(g):
        size = len(orbit_tables(t.standard_rep))
        assert size == math.factorial(g) // holomorph(t.standard_rep).order


def test_orbit_examples():
    assert len(conjugation_orbit(type_by_name("C2^3").standard_rep)) == 30
    assert len(conjugation_orbit(type_by_name("C2").standard_rep)) == 1
    assert len(orbit_tables(type_by_name("C11").standard_rep)) == 362880


@pytest.mark.parametrize("g", [3, 4, 5, 6])
def test_orbit_matches_brute_force(g):
    from itertools import permutations

    for t in catalogue(g):
        N = t.standard_rep
        brute = {
            frozenset(oracles.mul(oracles.mul(x, n), oracles.inv(x)) for n in N.elements)
            for x in permutations(range(g))
        }
        got = {M.element_set for M in conjugation_orbit(N)}
        assert got == brute


def test_orbit_members_are_regular_of_same_type():
    from hopfgalois.grouplib import identify_type

    for g in (6, 8):
        for t in catalogue(g):
            for M in conjugation_orbit(t.standard_rep)[::37]:
                assert is_regular(M) and identify_type(M) == t


# -- subgroup lattices ------------------------------------------------------


def _dic3():
    # x^i y^j with x^6 = 1, y^2 = x^3, y x y^-1 = x^-1
    elements = [(i, j) for j in range(2) for i in range(6)]

    def op(a, b):
        (i1, j1), (i2, j2) = a, b
        if j1 == 0:
            return ((i1 + i2) % 6, j2)
        if j2 == 0:
            return ((i1 - i2) % 6, 1)
        return ((i1 - i2 + 3) % 6, 0)

    perms_ = oracles.regular_rep(elements, op)
    return PermGroup(perms_, 12, elements=perms_)


def _order12():
    c12 = PermGroup([tuple(range(1, 12)) + (0,)], 12)
    c6c2 = PermGroup([parse_cycles("(0 1 2 3 4 5)", 8), parse_cycles("(6 7)", 8)], 8)
    d6 = PermGroup([parse_cycles("(0 1 2 3 4 5)", 6), parse_cycles("(0 5)(1 4)(2 3)", 6)], 6)
    a4 = PermGroup([parse_cycles("(0 1 2)", 4), parse_cycles("(1 2 3)", 4)], 4)
    return {"C12": c12, "C6xC2": c6c2, "D6": d6, "A4": a4, "Dic3": _dic3()}


# subgroup counts for every group of order <= 12, frozen from the subset oracle
SUBGROUP_COUNTS = {
    "C2": 2, "C3": 2, "C4": 3, "C2^2": 5, "C5": 2, "C6": 4, "S3": 6, "C7": 2,
    "C8": 4, "C4xC2": 8, "C2^3": 16, "D4": 10, "Q8": 6, "C9": 3, "C3^2": 6,
    "C10": 4, "D5": 8, "C11": 2,
    "C12": 6, "C6xC2": 10, "D6": 16, "A4": 10, "Dic3": 8,
}


def _all_small_groups():
    out = {t.name: t.standard_rep for g in range(2, 12) for t in catalogue(g)}
    out.update(_order12())
    out["C1"] = trivial_group(1)
    return out


def test_subgroup_counts_against_subset_oracle():
    for name, G in _all_small_groups().items():
        oracle = oracles.subgroup_count_by_subsets(G.elements)
        assert len(all_subgroups(G)) == oracle, name
        if name in SUBGROUP_COUNTS:
            assert oracle == SUBGROUP_COUNTS[name]


def test_subgroups_examples():
    Q8 = type_by_name("Q8").standard_rep
    assert len(subgroups_above(Q8, trivial_group(8))) == 6
    assert len(subgroups_above(PermGroup(C2_CUBED_8T3, 8), trivial_group(8))) == 16
    assert len(all_subgroups(type_by_name("C11").standard_rep)) == 2
    assert len(all_subgroups(type_by_name("D4").standard_rep)) == 10
    G = symmetric_group(4)
    assert [K.key for K in subgroups_above(G, G)] == [G.key]


def test_symmetric_group_lattices():
    assert len(all_subgroups(symmetric_group(4))) == 30
    assert len(all_subgroups(symmetric_group(5))) == 156


def test_subgroups_above_lie_between():
    G = symmetric_group(5)
    H = PermGroup([parse_cycles("(0 1)", 5)], 5)
    subs = subgroups_above(G, H)
    for K in subs:
        assert H.element_set <= K.element_set <= G.element_set
        assert len(oracles.closure(K.generators, 5)) == K.order
    assert len({K.key for K in subs}) == len(subs)
    # every subgroup of S5 containing the transposition appears
    expected = [K for K in all_subgroups(G) if H.element_set <= K.element_set]
    assert len(subs) == len(expected)


def test_subgroups_above_rejects_non_subgroup():
    with pytest.raises(ValueError):
        subgroups_above(PermGroup([parse_cycles("(0 1 2)", 4)], 4), PermGroup([parse_cycles("(0 1)", 4)], 4))


# -- solvability ------------------------------------------------------------


def test_derived_series():
    S5 = symmetric_group(5)
    assert derived_subgroup(S5).order == 60
    assert is_solvable(symmetric_group(4))
    assert not is_solvable(S5)
    assert not is_solvable(symmetric_group(11))
    assert is_solvable(holomorph(type_by_name("C11").standard_rep))
