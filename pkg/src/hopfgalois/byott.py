"""Counting Hopf Galois structures through the holomorph.

For a type N and a transitive G with point stabilizer G',

    a = |Aut(G, G')| / |Aut(N)| * b

where b is the number of subgroups G* of Hol(N) admitting an isomorphism
G -> G* that carries G' onto the stabilizer of point 0 in G*.  Nothing
here looks at the regular subgroups found by direct enumeration, so the
two counts make an independent check of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .grouplib import GroupType, automorphisms, holomorph, indexed, iso_search, order_profile
from .permcore import PermGroup, all_subgroups, is_transitive, point_stabilizer
from .tgdb import TransitiveGroupEntry


class NonIntegralCount(ArithmeticError):
    """The formula gave a fraction, which means a bug upstream."""


@dataclass(frozen=True)
class ByottCount:
    group: TransitiveGroupEntry
    type: GroupType
    b: int
    aut_G_Gprime: int | None  # only computed when b > 0
    aut_N: int
    a: int


def aut_fixing(G: PermGroup, Gp: PermGroup) -> int:
    """Number of automorphisms of G mapping the subgroup Gp onto itself."""
    IG = indexed(G)
    inside = Gp.element_set
    return sum(1 for _ in iso_search(G, G, Gp, lambda y: IG.elements[y] in inside))


@lru_cache(maxsize=None)
def _aut_fixing_cached(entry_label: str, G: PermGroup) -> int:
    return aut_fixing(G, point_stabilizer(G, 0))


@lru_cache(maxsize=None)
def _holomorph_subgroups(type_name: str, N: PermGroup) -> dict[int, tuple[PermGroup, ...]]:
    """Subgroups of Hol(N), bucketed by order (the largest step of the count)."""
    buckets: dict[int, list[PermGroup]] = {}
    for H in all_subgroups(holomorph(N)):
        buckets.setdefault(H.order, []).append(H)
    return {k: tuple(v) for k, v in buckets.items()}


def _carries_stabilizer(G: PermGroup, Gp: PermGroup, Gs: PermGroup) -> bool:
    IB = indexed(Gs)
    return next(iso_search(G, Gs, Gp, lambda y: IB.elements[y][0] == 0), None) is not None


def b_count(T: GroupType, G: TransitiveGroupEntry) -> int:
    N = T.standard_rep
    hol = holomorph(N)
    if hol.order % G.order:
        return 0
    H = G.group
    H = PermGroup(H.generators, H.degree, elements=H.elements)
    Gp = point_stabilizer(H, 0)
    profile = order_profile(H)
    b = 0
    for Gs in _holomorph_subgroups(T.name, N).get(G.order, ()):
        if not is_transitive(Gs):
            continue
        if sum(1 for e in Gs.elements if e[0] == 0) != Gp.order:
            continue
        if order_profile(Gs) != profile:
            continue
        if _carries_stabilizer(H, Gp, Gs):
            b += 1
    return b


def count(T: GroupType, G: TransitiveGroupEntry) -> ByottCount:
    aut_n = len(automorphisms(T.standard_rep))
    b = b_count(T, G)
    if b == 0:
        return ByottCount(G, T, 0, None, aut_n, 0)
    aut_g = _aut_fixing_cached(G.label, G.group)
    a = Fraction(aut_g * b, aut_n)
    if a.denominator != 1:
        raise NonIntegralCount(f"{G.label}, type {T.name}: a = {a}")
    return ByottCount(G, T, b, aut_g, aut_n, int(a))
