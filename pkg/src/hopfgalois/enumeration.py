"""Direct enumeration of Hopf Galois structures for one transitive group.

Four steps per transitive group G of degree g:

1. for each type T, scan the S_g-conjugates of the regular representation
   of T and keep those normalized by G (flagging almost classical ones,
   whose centralizer lies in G);
2. count the subgroups of G containing the point stabilizer G';
3. count the G-stable subgroups of each N found in step 1;
4. split the structures into G-isomorphism classes.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .grouplib import GroupType, catalogue, g_isomorphic, holomorph
from .permcore import (
    Perm,
    PermGroup,
    all_subgroups,
    centralizer_of_regular,
    count_subgroups_above,
    group_from_table,
    identity,
    inverse,
    normalizes,
    orbit_tables,
    point_stabilizer,
)
from .tgdb import TransitiveGroupEntry


@dataclass
class HGSRecord:
    serial: int
    N: PermGroup = field(repr=False)
    type: GroupType
    almost_classical: bool
    sub_gst_count: int = 0
    bijective_correspondence: bool = False
    class_id: int = 0


@dataclass(frozen=True)
class TypeSummary:
    total: int
    almost_classical: int
    bijective: int
    classes: int


@dataclass
class GroupReport:
    group: TransitiveGroupEntry
    intfields: int | None
    records: list[HGSRecord]

    @property
    def types(self) -> tuple[GroupType, ...]:
        return catalogue(self.group.degree)

    def records_of(self, type_name: str) -> list[HGSRecord]:
        return [r for r in self.records if r.type.name == type_name]

    def per_type_summary(self) -> dict[str, TypeSummary]:
        out = {}
        for t in self.types:
            recs = self.records_of(t.name)
            out[t.name] = TypeSummary(
                len(recs),
                sum(r.almost_classical for r in recs),
                sum(r.bijective_correspondence for r in recs),
                len({r.class_id for r in recs}),
            )
        return out

    def class_sizes(self, type_name: str) -> list[int]:
        sizes = Counter(r.class_id for r in self.records_of(type_name))
        return sorted(sizes.values())


# -- step 1 -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _type_orbit(type_name: str, degree: int) -> np.ndarray:
    t = next(t for t in catalogue(degree) if t.name == type_name)
    return orbit_tables(t.standard_rep)


def _normalized_rows(tables: np.ndarray, G: PermGroup) -> np.ndarray:
    """Indices of the regular groups (as element tables) normalized by G."""
    rows = np.arange(len(tables))
    for s in G.generators:
        if not len(rows):
            break
        A = tables[rows]
        s_arr = np.asarray(s, dtype=np.int8)
        sinv = np.asarray(inverse(s), dtype=np.intp)
        C = s_arr[A[:, :, sinv].astype(np.intp)]
        # a regular group holds exactly one element moving 0 to each point
        target = A[np.arange(len(A))[:, None], C[:, :, 0].astype(np.intp)]
        ok = (C == target).all(axis=(1, 2))
        rows = rows[ok]
    return rows


def step1_enumerate(G: TransitiveGroupEntry, T: GroupType) -> list[tuple[PermGroup, bool]]:
    """Regular subgroups of type T normalized by G, with the almost classical flag."""
    hol_order = holomorph(T.standard_rep).order
    # a normalizing G sits inside a conjugate of Hol(T)
    if hol_order % G.order:
        return []
    tables = _type_orbit(T.name, G.degree)
    out = []
    for k in _normalized_rows(tables, G.group):
        N = group_from_table(tables[k])
        Z = centralizer_of_regular(N)
        ac = all(z in G.group for z in Z.generators)
        out.append((N, ac))
    return out


# -- steps 2 and 3 ----------------------------------------------------------


def step2_intfields(G: TransitiveGroupEntry) -> int:
    """Number of subgroups between the point stabilizer and G."""
    H = G.group
    # materialize once so the stabilizer and the lattice share elements
    elems = PermGroup(H.generators, H.degree, elements=H.elements)
    return count_subgroups_above(elems, point_stabilizer(elems, 0))


@lru_cache(maxsize=4096)
def _subgroups_of(N: PermGroup) -> tuple[PermGroup, ...]:
    return tuple(all_subgroups(N))


def step3_sub_gst(N: PermGroup, G: TransitiveGroupEntry) -> int:
    """Number of subgroups of N normalized by G."""
    return sum(normalizes(G.group, S) for S in _subgroups_of(N))


# -- step 4 -----------------------------------------------------------------


def step4_partition(records: list[HGSRecord], G: TransitiveGroupEntry, prefilter: bool = True) -> dict[int, int]:
    """Assign each record (by serial) the serial of the smallest member of its
    G-isomorphism class.  With ``prefilter`` only records of equal type and
    equal G-stable subgroup count are compared."""
    buckets: dict[tuple, list[HGSRecord]] = defaultdict(list)
    for r in sorted(records, key=lambda r: r.serial):
        key = (r.type.name, r.sub_gst_count) if prefilter else (r.N.order,)
        buckets[key].append(r)
    assignment = {}
    for members in buckets.values():
        reps: list[HGSRecord] = []
        for r in members:
            for rep in reps:
                if g_isomorphic(rep.N, r.N, G.group):
                    assignment[r.serial] = rep.serial
                    break
            else:
                reps.append(r)
                assignment[r.serial] = r.serial
    return assignment


# -- Hopf action ------------------------------------------------------------


def coset_labels(G: TransitiveGroupEntry, names: list[str], identity_label: str = "Id") -> list[str]:
    """Label each point (a coset of G') by a shortest word in the named generators.

    Words are explored in length-then-lexicographic order on the names, so
    each coset gets the first such word that carries point 0 to it.  A word
    ``xy`` is the product x*y (y applied first).
    """
    gens = list(G.generators)
    if len(names) != len(gens):
        raise ValueError("one name per generator required")
    order = sorted(range(len(gens)), key=lambda i: names[i])
    labels: list[str | None] = [None] * G.degree
    labels[0] = identity_label
    frontier: list[tuple[str, Perm]] = [("", identity(G.degree))]
    while any(lab is None for lab in labels) and frontier:
        nxt = []
        for word, p in frontier:
            for i in order:
                # the word gains a letter on the right, i.e. p * g_i
                q = tuple(p[x] for x in gens[i])
                nxt.append((word + names[i], q))
        nxt.sort(key=lambda wp: wp[0])
        for word, q in nxt:
            if labels[q[0]] is None:
                labels[q[0]] = word
        frontier = nxt
    return labels  # type: ignore[return-value]


def action_map(N: PermGroup, G: TransitiveGroupEntry, labels: list[str]) -> dict[Perm, str]:
    """The Hopf action n -> n^-1(point 0), reported by coset label."""
    return {n: labels[inverse(n)[0]] for n in N.elements}


# -- full pipeline ----------------------------------------------------------


def enumerate_all(G: TransitiveGroupEntry) -> GroupReport:
    records: list[HGSRecord] = []
    serial = 1
    for T in catalogue(G.degree):
        found = step1_enumerate(G, T)
        found.sort(key=lambda item: item[0].key)
        for N, ac in found:
            records.append(HGSRecord(serial, N, T, ac))
            serial += 1
    if not records:
        return GroupReport(G, None, [])
    intfields = step2_intfields(G)
    for r in records:
        r.sub_gst_count = step3_sub_gst(r.N, G)
        r.bijective_correspondence = r.sub_gst_count == intfields
    classes = step4_partition(records, G)
    for r in records:
        r.class_id = classes[r.serial]
    return GroupReport(G, intfields, records)
