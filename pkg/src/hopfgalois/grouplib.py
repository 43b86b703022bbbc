"""Abstract groups of order 2..11, their regular representations and
(G-)isomorphism machinery for regular permutation groups."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .permcore import (
    IndexedGroup,
    NotRegular,
    Perm,
    PermGroup,
    compose,
    conjugate,
    identity,
    is_regular,
    _mask_generators,
    perm_order,
    regular_labelling,
)


class NoMatch(LookupError):
    pass


@dataclass(frozen=True)
class GroupType:
    name: str
    order: int
    abelian: bool
    order_profile: tuple[tuple[int, int], ...]
    standard_rep: PermGroup = field(compare=False, repr=False)

    def __str__(self) -> str:
        return self.name


def _regular_rep(elements: list, mul) -> PermGroup:
    """Left regular representation; the identity must be ``elements[0]``."""
    index = {e: i for i, e in enumerate(elements)}
    perms = [tuple(index[mul(x, y)] for y in elements) for x in elements]
    return PermGroup(_generators_of(perms), len(elements), elements=perms)


def _generators_of(perms: list[Perm]) -> list[Perm]:
    from .permcore import _small_generating_set

    return _small_generating_set(perms, len(perms[0]))


def _cyclic_product(*ns: int) -> PermGroup:
    elements = [()]
    for n in ns:
        elements = [e + (k,) for e in elements for k in range(n)]

    def mul(x, y):
        return tuple((a + b) % n for a, b, n in zip(x, y, ns))

    return _regular_rep(elements, mul)


def _dihedral(n: int) -> PermGroup:
    # (k, f) stands for r^k s^f with s r s = r^-1
    elements = [(k, f) for f in range(2) for k in range(n)]

    def mul(x, y):
        k1, f1 = x
        k2, f2 = y
        return ((k1 + (-k2 if f1 else k2)) % n, (f1 + f2) % 2)

    return _regular_rep(elements, mul)


def _quaternion() -> PermGroup:
    # unit quaternions as (sign, axis) with axis in 1, i, j, k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elements = [(s, a) for s in (1, -1) for a in "1ijk"]

    def mul(x, y):
        sign, axis = table[x[1], y[1]]
        return (x[0] * y[0] * sign, axis)

    return _regular_rep(elements, mul)


_CONSTRUCTIONS = {
    2: [("C2", lambda: _cyclic_product(2))],
    3: [("C3", lambda: _cyclic_product(3))],
    4: [("C4", lambda: _cyclic_product(4)), ("C2^2", lambda: _cyclic_product(2, 2))],
    5: [("C5", lambda: _cyclic_product(5))],
    6: [("C6", lambda: _cyclic_product(6)), ("S3", lambda: _dihedral(3))],
    7: [("C7", lambda: _cyclic_product(7))],
    8: [
        ("C8", lambda: _cyclic_product(8)),
        ("C4xC2", lambda: _cyclic_product(4, 2)),
        ("C2^3", lambda: _cyclic_product(2, 2, 2)),
        ("D4", lambda: _dihedral(4)),
        ("Q8", _quaternion),
    ],
    9: [("C9", lambda: _cyclic_product(9)), ("C3^2", lambda: _cyclic_product(3, 3))],
    10: [("C10", lambda: _cyclic_product(10)), ("D5", lambda: _dihedral(5))],
    11: [("C11", lambda: _cyclic_product(11))],
}


def order_profile(H: PermGroup) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(Counter(perm_order(e) for e in H.elements).items()))


@lru_cache(maxsize=None)
def catalogue(order: int) -> tuple[GroupType, ...]:
    """One GroupType per isomorphism class of groups of the given order."""
    if order not in _CONSTRUCTIONS:
        raise ValueError(f"order must be in 2..11, got {order}")
    out = []
    for name, build in _CONSTRUCTIONS[order]:
        rep = build()
        out.append(GroupType(name, order, rep.is_abelian, order_profile(rep), rep))
    return tuple(out)


def type_by_name(name: str) -> GroupType:
    for n in _CONSTRUCTIONS:
        for t in catalogue(n):
            if t.name == name:
                return t
    raise KeyError(name)


def identify_type(H: PermGroup) -> GroupType:
    if H.order not in _CONSTRUCTIONS:
        raise NoMatch(f"no catalogue for order {H.order}")
    sig = (H.is_abelian, order_profile(H))
    for t in catalogue(H.order):
        if (t.abelian, t.order_profile) == sig:
            return t
    raise NoMatch(f"no group of order {H.order} with profile {sig}")


# -- homomorphism search ----------------------------------------------------


class _Table:
    """Multiplication table of a small materialized group."""

    def __init__(self, G: PermGroup):
        self.elements = list(G.elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.mul = [[self.index[compose(a, b)] for b in self.elements] for a in self.elements]
        self.ident = self.index[identity(G.degree)]
        self.orders = [perm_order(e) for e in self.elements]
        self.gens = self._greedy_generators()

    def _greedy_generators(self) -> list[int]:
        gens: list[int] = []
        span = {self.ident}
        n = len(self.elements)
        while len(span) < n:
            best, best_span = None, span
            for x in range(n):
                if x in span:
                    continue
                cand = self.span(gens + [x])
                if len(cand) > len(best_span):
                    best, best_span = x, cand
            gens.append(best)
            span = best_span
        return gens

    def span(self, gens: list[int]) -> set[int]:
        seen = {self.ident}
        stack = [self.ident]
        while stack:
            e = stack.pop()
            for s in gens:
                x = self.mul[e][s]
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return seen

    def words(self) -> list[tuple[int, int]]:
        """Spanning tree of the Cayley graph: element -> (parent, generator slot)."""
        tree: dict[int, tuple[int, int]] = {self.ident: (-1, -1)}
        order = [self.ident]
        for e in order:
            for slot, s in enumerate(self.gens):
                x = self.mul[e][s]
                if x not in tree:
                    tree[x] = (e, slot)
                    order.append(x)
        return [tree[i] for i in range(len(self.elements))]


@lru_cache(maxsize=4096)
def _table(G: PermGroup) -> _Table:
    return _Table(G)


def _homomorphisms(
    A: _Table, B: _Table, constraint=None
) -> Iterator[list[int]]:
    """Yield bijective homomorphisms A -> B as lookup lists over element indices.

    ``constraint(slot, image)`` may veto generator images early.
    """
    n = len(A.elements)
    if n != len(B.elements):
        return
    tree = A.words()
    gens = A.gens
    # elements of A in BFS order, so parents come first
    bfs = sorted(range(n), key=lambda e: _depth(tree, e))

    def extend(images: list[int]) -> list[int] | None:
        f = [-1] * n
        f[A.ident] = B.ident
        for e in bfs:
            parent, slot = tree[e]
            if parent < 0:
                continue
            f[e] = B.mul[f[parent]][images[slot]]
        if len(set(f)) != n:
            return None
        for x in range(n):
            fx = f[x]
            row_a, row_b = A.mul[x], B.mul[fx]
            for y in gens:
                if f[row_a[y]] != row_b[f[y]]:
                    return None
        return f

    def backtrack(images: list[int]) -> Iterator[list[int]]:
        k = len(images)
        if k == len(gens):
            f = extend(images)
            if f is not None:
                yield f
            return
        want = A.orders[gens[k]]
        for y in range(n):
            if B.orders[y] != want:
                continue
            if constraint is not None and not constraint(k, y):
                continue
            yield from backtrack(images + [y])

    yield from backtrack([])


def _depth(tree, e):
    d = 0
    while tree[e][0] >= 0:
        e = tree[e][0]
        d += 1
    return d


def _as_perm_maps(A: _Table, B: _Table, f: list[int]) -> dict[Perm, Perm]:
    return {A.elements[i]: B.elements[f[i]] for i in range(len(f))}


def isomorphisms(A: PermGroup, B: PermGroup) -> list[dict[Perm, Perm]]:
    """All isomorphisms A -> B as element lookup tables."""
    if A.order != B.order:
        return []
    ta, tb = _table(A), _table(B)
    return [_as_perm_maps(ta, tb, f) for f in _homomorphisms(ta, tb)]


def _point_map(N: PermGroup, f: dict[Perm, Perm]) -> Perm:
    """An automorphism of a regular group as a permutation of points."""
    labels = regular_labelling(N)
    return tuple(f[labels[i]][0] for i in range(N.degree))


@lru_cache(maxsize=1024)
def automorphisms(N: PermGroup) -> tuple[Perm, ...]:
    """Aut(N) realized on points through i <-> n_i (the element with n_i(0) = i).

    The result is exactly the stabilizer of 0 in the holomorph.
    """
    if not is_regular(N):
        raise NotRegular("automorphisms() needs a regular group")
    return tuple(sorted(_point_map(N, f) for f in isomorphisms(N, N)))


@lru_cache(maxsize=1024)
def holomorph(N: PermGroup) -> PermGroup:
    """N . Aut(N) in S_g, which is the normalizer of N."""
    auts = automorphisms(N)
    elems = [compose(n, a) for n in N.elements for a in auts]
    from .permcore import _small_generating_set

    gens = list(N.generators) + _small_generating_set(list(auts), N.degree)
    return PermGroup(gens, N.degree, elements=elems)


def g_isomorphism(N1: PermGroup, N2: PermGroup, G: PermGroup) -> dict[Perm, Perm] | None:
    """First isomorphism N1 -> N2 commuting with conjugation by G, if any."""
    if N1.order != N2.order:
        return None
    ta, tb = _table(N1), _table(N2)
    # conjugation by each generator of G, as index maps on N1 and N2
    acts = []
    for s in G.generators:
        ca = [ta.index[conjugate(s, e)] for e in ta.elements]
        cb = [tb.index[conjugate(s, e)] for e in tb.elements]
        acts.append((ca, cb))
    for f in _homomorphisms(ta, tb):
        if all(f[ca[x]] == cb[f[x]] for ca, cb in acts for x in range(len(f))):
            return _as_perm_maps(ta, tb, f)
    return None


def g_isomorphic(N1: PermGroup, N2: PermGroup, G: PermGroup) -> bool:
    return g_isomorphism(N1, N2, G) is not None


# -- isomorphisms of larger groups ------------------------------------------


@lru_cache(maxsize=256)
def indexed(G: PermGroup) -> IndexedGroup:
    return IndexedGroup(G)


@lru_cache(maxsize=256)
def _class_sizes(G: PermGroup) -> tuple[int, ...]:
    """Conjugacy class size of every element, in IndexedGroup numbering."""
    IG = indexed(G)
    acts = [IG.conjugation_action(IG.index[s]) for s in G.generators]
    size = [0] * IG.n
    for start in range(IG.n):
        if size[start]:
            continue
        cls = {start}
        stack = [start]
        while stack:
            e = stack.pop()
            for act in acts:
                x = act[e]
                if x not in cls:
                    cls.add(x)
                    stack.append(x)
        for e in cls:
            size[e] = len(cls)
    return tuple(size)


def _invariant(G: PermGroup) -> list[tuple[int, int]]:
    IG = indexed(G)
    sizes = _class_sizes(G)
    return [(perm_order(e), sizes[i]) for i, e in enumerate(IG.elements)]


def iso_search(
    A: PermGroup, B: PermGroup, head: PermGroup | None = None, head_ok=None
) -> Iterator[list[int]]:
    """Yield the isomorphisms A -> B as index maps (IndexedGroup numbering).

    Generators of ``head`` (a subgroup of A) are assigned first and their
    images must satisfy ``head_ok(b)`` for b an index of B.  Each partial
    assignment is checked on the whole subgroup it generates, which keeps
    the search small even for groups of order around a thousand.
    """
    if A.order != B.order:
        return
    IA, IB = indexed(A), indexed(B)
    n = IA.n
    inv_a, inv_b = _invariant(A), _invariant(B)
    if sorted(inv_a) != sorted(inv_b):
        return
    by_inv: dict[tuple[int, int], list[int]] = {}
    for j, key in enumerate(inv_b):
        by_inv.setdefault(key, []).append(j)

    gens: list[int] = []
    n_head = 0
    if head is not None:
        gens = _mask_generators(IA, [IA.index[e] for e in head.elements])
        n_head = len(gens)
    span_mask, span = IA.close([0], gens) if gens else (1, [0])
    for e in sorted(range(n), key=lambda i: (-inv_a[i][0], i)):
        if len(span) == n:
            break
        if not (span_mask >> e) & 1:
            gens.append(e)
            span_mask, span = IA.close(span, [e])
    gens = [x for x in gens if x]

    candidates = []
    for k, x in enumerate(gens):
        cand = by_inv.get(inv_a[x], [])
        if k < n_head and head_ok is not None:
            cand = [y for y in cand if head_ok(y)]
        candidates.append(cand)

    mul_a, mul_b = IA.mul, IB.mul

    def consistent(images: list[int]) -> list[int] | None:
        k = len(images)
        f = [-1] * n
        f[0] = 0
        used = {0}
        queue = [0]
        for e in queue:
            row_a, row_b = mul_a[e], mul_b[f[e]]
            for s, t in zip(gens[:k], images):
                x = row_a[s]
                y = row_b[t]
                if f[x] < 0:
                    if y in used:
                        return None
                    f[x] = y
                    used.add(y)
                    queue.append(x)
                elif f[x] != y:
                    return None
        return f

    inv_of_a, inv_of_b = IA.inv, IB.inv

    def words(m_s, inv_s, s, t):
        # short words in a pair of generators, for a cheap invariant check
        st = m_s[s][t]
        return (st, m_s[inv_s[s]][t], m_s[st][t], m_s[s][st])

    pair_words = {
        (i, k): [inv_a[w] for w in words(mul_a, inv_of_a, gens[i], gens[k])]
        for k in range(len(gens))
        for i in range(k)
    }

    def pairs_ok(images: list[int], y: int) -> bool:
        k = len(images)
        for i, yi in enumerate(images):
            want = pair_words[i, k]
            for w, key in zip(words(mul_b, inv_of_b, yi, y), want):
                if inv_b[w] != key:
                    return False
        return True

    def backtrack(images: list[int]) -> Iterator[list[int]]:
        k = len(images)
        for y in candidates[k]:
            if not pairs_ok(images, y):
                continue
            nxt = images + [y]
            if k + 1 < len(gens) and consistent(nxt) is None:
                continue
            if k + 1 == len(gens):
                f = consistent(nxt)
                if f is not None:
                    yield f
                continue
            yield from backtrack(nxt)

    if not gens:
        yield [0]
        return
    yield from backtrack([])
