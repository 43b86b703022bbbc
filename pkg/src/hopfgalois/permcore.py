"""Permutation and small permutation group arithmetic.

A permutation of ``{0, ..., g-1}`` is a tuple of images: ``p[i]`` is the
image of point ``i``.  Products apply the right factor first, so
``compose(p, q)[i] == p[q[i]]``.
"""

from __future__ import annotations

import math
import re
from collections import deque
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

Perm = tuple[int, ...]

DEFAULT_CAP = 10**6


class CapExceeded(RuntimeError):
    """Raised when a group is larger than the materialization cap."""


class NotRegular(ValueError):
    pass


# -- single permutations ----------------------------------------------------


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p * q``, the map ``i -> p(q(i))``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} != {len(q)}")
    return tuple([p[i] for i in q])


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(s: Perm, p: Perm) -> Perm:
    """Return ``s p s^-1``."""
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[s[i]] = s[x]
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    result = identity(len(p))
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def perm_order(p: Perm) -> int:
    order = 1
    for cyc in cycles(p):
        order = math.lcm(order, len(cyc))
    return order


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p}")
    return p


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of length > 1, each starting at its smallest point."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def format_cycles(p: Perm, one_based: bool = False) -> str:
    shift = 1 if one_based else 0
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(x + shift) for x in c) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int, one_based: bool = False) -> Perm:
    """Parse disjoint cycle notation such as ``(0 7)(1 2)`` or ``(1,8)(2,3)``."""
    text = text.strip()
    rest = _CYCLE_RE.sub("", text)
    if rest.strip():
        raise ValueError(f"unexpected characters in cycle notation: {text!r}")
    images = list(range(degree))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
        if one_based:
            pts = [x - 1 for x in pts]
        for x in pts:
            if not 0 <= x < degree:
                raise ValueError(f"point {x} out of range for degree {degree}")
            if x in used:
                raise ValueError(f"point {x} repeated in {text!r}")
            used.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return tuple(images)


def from_cycles(degree: int, *cycs: Sequence[int]) -> Perm:
    images = list(range(degree))
    for c in cycs:
        for a, b in zip(c, list(c[1:]) + [c[0]]):
            images[a] = b
    return tuple(images)


# -- stabilizer chains ------------------------------------------------------


class StabChain:
    """Deterministic Schreier-Sims base and strong generating set."""

    def __init__(self, generators: Iterable[Perm], degree: int):
        self.degree = degree
        self.base: list[int] = []
        # strong generators, each tagged with the deepest level it belongs to
        self.strong: list[tuple[int, Perm]] = []
        self.trans: list[dict[int, Perm]] = []
        gens = [g for g in generators if not is_identity(g)]
        for g in gens:
            if all(g[b] == b for b in self.base):
                self.base.append(next(x for x in range(degree) if g[x] != x))
            self.strong.append((0, g))
        self.trans = [{} for _ in self.base]
        self._build()

    def _level_gens(self, i: int) -> list[Perm]:
        return [g for lvl, g in self.strong if lvl >= i]

    def _orbit(self, i: int) -> None:
        b = self.base[i]
        trans = {b: identity(self.degree)}
        queue = deque([b])
        gens = self._level_gens(i)
        while queue:
            q = queue.popleft()
            uq = trans[q]
            for s in gens:
                r = s[q]
                if r not in trans:
                    trans[r] = compose(s, uq)
                    queue.append(r)
        self.trans[i] = trans

    def _build(self) -> None:
        i = len(self.base) - 1
        for j in range(len(self.base)):
            self._orbit(j)
        while i >= 0:
            trans = self.trans[i]
            restart = False
            for q, uq in list(trans.items()):
                for s in self._level_gens(i):
                    sg = compose(inverse(trans[s[q]]), compose(s, uq))
                    if is_identity(sg):
                        continue
                    h, j = self.sift(sg, i + 1)
                    if is_identity(h):
                        continue
                    if j == len(self.base):
                        self.base.append(next(x for x in range(self.degree) if h[x] != x))
                        self.trans.append({})
                    self.strong.append((j, h))
                    for k in range(i + 1, j + 1):
                        self._orbit(k)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    def sift(self, p: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, len(self.base)):
            u = self.trans[i].get(p[self.base[i]])
            if u is None:
                return p, i
            p = compose(inverse(u), p)
        return p, len(self.base)

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self.trans)

    def contains(self, p: Perm) -> bool:
        h, _ = self.sift(p)
        return is_identity(h)


# -- groups -----------------------------------------------------------------


class PermGroup:
    """A subgroup of S_g given by generators.

    The element set is materialized lazily (sorted lexicographically);
    the order and membership use a stabilizer chain, so huge groups such
    as S_11 are fine as long as nobody asks for ``elements``.
    """

    def __init__(
        self,
        generators: Iterable[Sequence[int]],
        degree: int | None = None,
        *,
        elements: Sequence[Perm] | None = None,
        cap: int = DEFAULT_CAP,
    ):
        gens = [tuple(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator {g} has degree {len(g)}, expected {degree}")
        if not gens:
            gens = [identity(degree)]
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(gens)
        self.cap = cap
        if elements is not None:
            self.__dict__["elements"] = tuple(sorted(elements))

    def __repr__(self) -> str:
        gens = ", ".join(format_cycles(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, <{gens}>)"

    @cached_property
    def chain(self) -> StabChain:
        return StabChain(self.generators, self.degree)

    @cached_property
    def order(self) -> int:
        if "elements" in self.__dict__:
            return len(self.elements)
        return self.chain.order

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        return tuple(sorted(_closure(self.generators, self.degree, self.cap)))

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    @cached_property
    def key(self) -> tuple[Perm, ...]:
        """Canonical subgroup key: the sorted element list."""
        return self.elements

    def __contains__(self, p: Perm) -> bool:
        if "elements" in self.__dict__:
            return p in self.element_set
        return self.chain.contains(p)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        if self.degree != other.degree or self.order != other.order:
            return False
        return all(g in other for g in self.generators)

    def __hash__(self) -> int:
        return hash((self.degree, self.order))

    def issubgroup(self, other: "PermGroup") -> bool:
        return all(g in other for g in self.generators)

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)


def _closure(generators: Sequence[Perm], degree: int, cap: int) -> set[Perm]:
    ident = identity(degree)
    found = {ident}
    queue = deque([ident])
    gens = [g for g in generators if not is_identity(g)]
    while queue:
        e = queue.popleft()
        for s in gens:
            x = compose(e, s)
            if x not in found:
                found.add(x)
                if len(found) > cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                queue.append(x)
    return found


def close(generators: Sequence[Perm], cap: int = DEFAULT_CAP) -> PermGroup:
    """Materialize the group generated by ``generators`` by BFS closure."""
    if not generators:
        raise ValueError("need at least one generator")
    if cap < 1:
        raise ValueError("cap must be positive")
    gens = [tuple(g) for g in generators]
    degree = len(gens[0])
    elements = _closure(gens, degree, cap)
    return PermGroup(gens, degree, elements=elements, cap=cap)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup([], degree, elements=[identity(degree)])


def symmetric_group(degree: int) -> PermGroup:
    if degree == 1:
        return trivial_group(1)
    if degree == 2:
        return PermGroup([(1, 0)])
    cyc = tuple(list(range(1, degree)) + [0])
    return PermGroup([from_cycles(degree, (0, 1)), cyc])


def group_order(G: PermGroup) -> int:
    return G.order


def orbit(G: PermGroup, pt: int) -> set[int]:
    seen = {pt}
    queue = [pt]
    while queue:
        x = queue.pop()
        for s in G.generators:
            y = s[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def is_transitive(G: PermGroup) -> bool:
    return len(orbit(G, 0)) == G.degree


def is_regular(N: PermGroup) -> bool:
    return N.order == N.degree and is_transitive(N)


def point_stabilizer(G: PermGroup, pt: int = 0) -> PermGroup:
    elems = [e for e in G.elements if e[pt] == pt]
    gens = _small_generating_set(elems, G.degree)
    return PermGroup(gens, G.degree, elements=elems)


def normalizes(G: PermGroup, N: PermGroup) -> bool:
    """True iff every generator of G conjugates N onto itself."""
    elems = N.element_set
    for s in G.generators:
        for n in N.generators:
            if conjugate(s, n) not in elems:
                return False
    return True


def regular_labelling(N: PermGroup) -> list[Perm]:
    """The elements of a regular group indexed by the image of point 0."""
    if not is_regular(N):
        raise NotRegular("group is not regular")
    table: list[Perm] = [()] * N.degree
    for n in N.elements:
        table[n[0]] = n
    return table


def centralizer_of_regular(N: PermGroup) -> PermGroup:
    """Centralizer of a regular group in S_g (the opposite regular action)."""
    table = regular_labelling(N)
    g = N.degree
    elems = [tuple(table[i][m[0]] for i in range(g)) for m in table]
    gens = [tuple(table[i][m[0]] for i in range(g)) for m in N.generators]
    return PermGroup(gens, g, elements=elems)


def _small_generating_set(elements: Sequence[Perm], degree: int) -> list[Perm]:
    """Greedy generating set: keep adding the element that grows the span most."""
    target = set(elements)
    gens: list[Perm] = []
    span = {identity(degree)}
    # elements of large order first tends to give short generating sequences
    ordered = sorted(elements, key=lambda e: (-perm_order(e), e))
    while len(span) < len(target):
        best, best_span = None, span
        for e in ordered:
            if e in span:
                continue
            cand = _closure(gens + [e], degree, len(target))
            if len(cand) > len(best_span):
                best, best_span = e, cand
                if len(cand) == len(target):
                    break
        gens.append(best)
        span = best_span
    return gens or [identity(degree)]


def generating_sequence(G: PermGroup) -> list[Perm]:
    return _small_generating_set(G.elements, G.degree)


# -- conjugation orbits of regular subgroups --------------------------------


def _table_array(N: PermGroup) -> np.ndarray:
    return np.array(regular_labelling(N), dtype=np.int8)


def orbit_tables(N0: PermGroup) -> np.ndarray:
    """All S_g-conjugates of a regular group as an array of element tables.

    Entry ``[k, i]`` is the element of the k-th conjugate mapping 0 to i,
    which is also its sorted element list.  Rows are in canonical order.
    """
    g = N0.degree
    start = _table_array(N0)
    if g == 1:
        return start[None]
    S = symmetric_group(g)
    conj = [(np.array(s, dtype=np.int8), np.array(inverse(s), dtype=np.intp)) for s in S.generators]
    seen = {start.tobytes()}
    found = [start[None]]
    frontier = start[None]
    while len(frontier):
        new_blocks = []
        for s, sinv in conj:
            C = s[frontier[:, :, sinv].astype(np.intp)]
            C = np.take_along_axis(C, np.argsort(C[:, :, 0], axis=1)[:, :, None], axis=1)
            new_blocks.append(C)
        cand = np.concatenate(new_blocks)
        flat = np.ascontiguousarray(cand.reshape(len(cand), -1))
        _, first = np.unique(flat.view(np.dtype((np.void, flat.shape[1]))), return_index=True)
        keep = []
        for idx in np.sort(first):
            b = flat[idx].tobytes()
            if b not in seen:
                seen.add(b)
                keep.append(idx)
        frontier = cand[keep]
        if len(keep):
            found.append(frontier)
    allt = np.concatenate(found)
    flat = allt.reshape(len(allt), -1)
    order = np.lexsort(flat.T[::-1])
    return np.ascontiguousarray(allt[order])


def group_from_table(table: np.ndarray) -> PermGroup:
    elems = [tuple(int(x) for x in row) for row in table]
    gens = _small_generating_set(elems, len(elems[0]))
    return PermGroup(gens, len(elems[0]), elements=elems)


def conjugation_orbit(N0: PermGroup) -> list[PermGroup]:
    """All distinct S_g-conjugates of the regular group ``N0``."""
    return [group_from_table(t) for t in orbit_tables(N0)]


# -- subgroup lattices ------------------------------------------------------


class IndexedGroup:
    """A materialized group with elements numbered 0..n-1 and a product table.

    Subsets are Python int bitmasks over the numbering.
    """

    def __init__(self, G: PermGroup):
        self.group = G
        self.elements = G.elements
        self.degree = G.degree
        n = len(self.elements)
        self.n = n
        self.index = {e: i for i, e in enumerate(self.elements)}
        E = np.array(self.elements, dtype=np.int64)
        g = self.degree
        weights = g ** np.arange(g - 1, -1, -1, dtype=np.int64)
        codes = E @ weights
        prod = np.take_along_axis(
            np.broadcast_to(E[:, None, :], (n, n, g)), np.broadcast_to(E[None, :, :], (n, n, g)), axis=2
        )
        # elements are sorted lexicographically, so codes are increasing
        self.mul = np.searchsorted(codes, prod @ weights).tolist()
        self.inv = [row.index(0) for row in self.mul] if n else []
        self.identity = 0

    def mask_of(self, elems: Iterable[Perm]) -> int:
        m = 0
        for e in elems:
            m |= 1 << self.index[e]
        return m

    @staticmethod
    def members(mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def close(self, elems: list[int], gens: list[int]) -> tuple[int, list[int]]:
        """Closure of a subgroup (given by its element list) with extra generators."""
        mul = self.mul
        mask = 0
        for e in elems:
            mask |= 1 << e
        out = list(elems)
        queue = list(elems)
        gens = [x for x in gens if x]
        # BFS over right multiplication; starting from a subgroup keeps this short
        while queue:
            e = queue.pop()
            row = mul[e]
            for s in gens:
                x = row[s]
                if not (mask >> x) & 1:
                    mask |= 1 << x
                    out.append(x)
                    queue.append(x)
        return mask, out

    def conjugation_action(self, x: int) -> list[int]:
        xi = self.inv[x]
        mul = self.mul
        return [mul[mul[x][e]][xi] for e in range(self.n)]

    def to_group(self, elems: Iterable[int]) -> PermGroup:
        perms = [self.elements[i] for i in sorted(elems)]
        return PermGroup(_small_generating_set(perms, self.degree), self.degree, elements=perms)


def _subgroup_masks_above(IG: IndexedGroup, base: list[int]) -> dict[int, tuple[list[int], list[int]]]:
    """All subgroups containing the subgroup ``base`` as ``mask -> (elements, gens)``.

    Joins are only formed from one representative per orbit of the
    normalizer of ``base`` acting by conjugation.
    """
    n = IG.n
    base_mask = 0
    for e in base:
        base_mask |= 1 << e
    mul, inv = IG.mul, IG.inv
    # normalizer of base in G
    norm = [
        x
        for x in range(n)
        if all((base_mask >> mul[mul[x][e]][inv[x]]) & 1 for e in base)
    ]
    norm_mask = 0
    for x in norm:
        norm_mask |= 1 << x
    norm_gens = _mask_generators(IG, norm)
    actions = [IG.conjugation_action(x) for x in norm_gens if x]

    found: dict[int, tuple[list[int], list[int]]] = {base_mask: (sorted(base), _mask_generators(IG, base))}
    reps = [base_mask]
    head = 0
    while head < len(reps):
        K = reps[head]
        head += 1
        kelems, kgens = found[K]
        done = K
        for x in range(n):
            if (done >> x) & 1:
                continue
            # x and x*k generate the same join; skip the whole coset
            for k in kelems:
                done |= 1 << mul[x][k]
            L, lelems = IG.close(kelems, kgens + [x])
            if L in found:
                continue
            # record the whole conjugacy class of L under the normalizer
            lgens = kgens + [x]
            cls = [(L, lelems, lgens)]
            found[L] = (sorted(lelems), lgens)
            reps.append(L)
            i = 0
            while i < len(cls):
                M, melems, mgens = cls[i]
                i += 1
                for act in actions:
                    C = 0
                    celems = [act[e] for e in melems]
                    for e in celems:
                        C |= 1 << e
                    if C not in found:
                        cg = [act[e] for e in mgens]
                        found[C] = (sorted(celems), cg)
                        cls.append((C, celems, cg))
    return found


def _mask_generators(IG: IndexedGroup, elems: list[int]) -> list[int]:
    target = len(elems)
    gens: list[int] = []
    span = [0]
    mask = 1
    for e in sorted(elems, key=lambda i: -perm_order(IG.elements[i])):
        if (mask >> e) & 1:
            continue
        gens.append(e)
        mask, span = IG.close(span, [e])
        if len(span) == target:
            break
    return gens


def subgroups_above(G: PermGroup, H: PermGroup) -> list[PermGroup]:
    """All subgroups K with H <= K <= G, in canonical key order."""
    if not H.issubgroup(G):
        raise ValueError("H is not a subgroup of G")
    IG = IndexedGroup(G)
    base = [IG.index[e] for e in H.elements]
    found = _subgroup_masks_above(IG, base)
    groups = []
    for elems, gens in found.values():
        perms = [IG.elements[i] for i in elems]
        gperms = [IG.elements[i] for i in gens] or [identity(G.degree)]
        groups.append(PermGroup(gperms, G.degree, elements=perms))
    groups.sort(key=lambda K: K.key)
    return groups


def count_subgroups_above(G: PermGroup, H: PermGroup) -> int:
    IG = IndexedGroup(G)
    return len(_subgroup_masks_above(IG, [IG.index[e] for e in H.elements]))


def all_subgroups(N: PermGroup) -> list[PermGroup]:
    return subgroups_above(N, trivial_group(N.degree))


# -- derived series ---------------------------------------------------------


def normal_closure(G: PermGroup, gens: Iterable[Perm]) -> PermGroup:
    """Smallest subgroup normalized by G containing ``gens``; chain based, so
    G itself is never materialized."""
    degree = G.degree
    cur: list[Perm] = []
    H = PermGroup([], degree)
    queue = [p for p in gens if not is_identity(p)]
    while queue:
        p = queue.pop()
        if p in H:
            continue
        cur.append(p)
        H = PermGroup(cur, degree)
        queue.extend(conjugate(s, p) for s in G.generators)
    return H


def derived_subgroup(G: PermGroup) -> PermGroup:
    gens = G.generators
    comms = [
        compose(compose(a, b), compose(inverse(a), inverse(b))) for a in gens for b in gens
    ]
    return normal_closure(G, comms)


def is_solvable(G: PermGroup) -> bool:
    H = G
    while H.order > 1:
        D = derived_subgroup(H)
        if D.order == H.order:
            return False
        H = D
    return True
