"""Brute-force reference implementations used by the tests.

Everything here is deliberately naive: element sets are built by repeated
multiplication and properties are checked by exhausting all candidates.
"""

from __future__ import annotations

from itertools import permutations


def mul(p, q):
    """Right factor first, applied pointwise."""
    return tuple(p[q[i]] for i in range(len(q)))


def inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def closure(gens, degree):
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for e in frontier:
            for s in gens:
                x = mul(e, s)
                if x not in elems:
                    elems.add(x)
                    new.append(x)
        frontier = new
    return elems


def subgroup_count_by_subsets(elems):
    """Count subsets that contain the identity and are closed under the
    product; for a finite group these are exactly the subgroups."""
    elems = sorted(elems)
    ident = tuple(range(len(elems[0])))
    rest = [e for e in elems if e != ident]
    n = len(rest)
    count = 0
    for bits in range(1 << n):
        S = {ident} | {rest[i] for i in range(n) if bits >> i & 1}
        if all(mul(a, b) in S for a in S for b in S):
            count += 1
    return count


def brute_centralizer(N_elems, degree):
    return {x for x in permutations(range(degree)) if all(mul(x, n) == mul(n, x) for n in N_elems)}


def brute_normalizer(N_elems, degree):
    S = set(N_elems)
    return {x for x in permutations(range(degree)) if all(mul(mul(x, n), inv(x)) in S for n in N_elems)}


def brute_automorphism_count(elems):
    """Bijections of the element set preserving the product, by trying
    every bijection that fixes the identity."""
    elems = sorted(elems)
    ident = tuple(range(len(elems[0])))
    rest = [e for e in elems if e != ident]
    count = 0
    for img in permutations(rest):
        f = dict(zip(rest, img))
        f[ident] = ident
        if all(f[mul(a, b)] == mul(f[a], f[b]) for a in elems for b in elems):
            count += 1
    return count


def regular_rep(elements, op):
    index = {e: i for i, e in enumerate(elements)}
    return [tuple(index[op(x, y)] for y in elements) for x in elements]
