"""Closed-form structure counts for degrees p, p^2 and 2p (p an odd prime
for the last two), evaluated from the isomorphism type of G.

``classify_shape`` recognizes which parameterized family G belongs to by
looking for the relevant normal subgroup and complement; the predictors
then turn the family and its parameter into per-type counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .grouplib import catalogue
from .permcore import Perm, PermGroup, compose, conjugate, identity, is_solvable, perm_order
from .tgdb import TransitiveGroupEntry

PRIME = "prime"
CYCLIC_P2 = "Cp2:Cm"
CYCLIC_2P = "C2p:Cm"
CYCLIC_P = "Cp:Cm"
ELEMENTARY_CYCLIC = "(CpxCp):Cm"
ELEMENTARY_KLEIN = "(CpxCp):(C2xCm)"
UNRECOGNIZED = "unrecognized"


class UnsupportedDegree(ValueError):
    pass


class AmbiguousShape(RuntimeError):
    pass


@dataclass(frozen=True)
class GroupShape:
    degree: int
    p: int
    kind: str  # "p", "p^2" or "2p"
    family: str
    m: int | None = None

    @property
    def recognized(self) -> bool:
        return self.family != UNRECOGNIZED


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def degree_kind(g: int) -> tuple[str, int]:
    if _is_prime(g):
        return "p", g
    for p in range(3, g):
        if _is_prime(p) and p * p == g:
            return "p^2", p
        if _is_prime(p) and 2 * p == g:
            return "2p", p
    raise UnsupportedDegree(f"degree {g} is not p, p^2 or 2p with p an odd prime")


# -- structural helpers on small materialized groups ------------------------


def _cyclic(x: Perm) -> list[Perm]:
    out = [identity(len(x))]
    y = x
    while y != out[0]:
        out.append(y)
        y = compose(x, y)
    return out


def _is_normal(G: PermGroup, A: set[Perm]) -> bool:
    return all(conjugate(s, a) in A for s in G.generators for a in A)


def _acting_order(y: Perm, x: Perm) -> int:
    """Order of conjugation by y restricted to the cyclic group <x>."""
    k, z = 1, conjugate(y, x)
    while z != x:
        z = conjugate(y, z)
        k += 1
    return k


def _faithful_cyclic_complement(G: PermGroup, x: Perm, A: set[Perm]) -> bool:
    m = G.order // len(A)
    if m == 1:
        return True
    for y in G.elements:
        if perm_order(y) != m:
            continue
        if any(c in A for c in _cyclic(y)[1:]):
            continue
        if _acting_order(y, x) == m:
            return True
    return False


def _normal_cyclic_with_complement(G: PermGroup, n: int) -> bool:
    seen: set[frozenset] = set()
    for x in G.elements:
        if perm_order(x) != n:
            continue
        A = frozenset(_cyclic(x))
        if A in seen:
            continue
        seen.add(A)
        if _is_normal(G, set(A)) and _faithful_cyclic_complement(G, x, set(A)):
            return True
    return False


def _elementary_family(G: PermGroup, p: int) -> tuple[str, int] | None:
    """(CpxCp) normal with an abelian complement acting diagonally by two
    characters whose ratio has order exactly 2."""
    h, r = divmod(G.order, p * p)
    if r or h % p == 0:
        return None
    ident = identity(G.degree)
    P = [e for e in G.elements if e == ident or perm_order(e) == p]
    if len(P) != p * p:
        return None
    u = next(e for e in P if e != ident)
    U = _cyclic(u)
    v = next(e for e in P if e not in U)
    coord = {}
    for a, ua in enumerate(U):
        vb = ident
        for b in range(p):
            coord[compose(ua, vb)] = (a, b)
            vb = compose(v, vb)
    # faithful action: the centralizer of P is P itself
    cent = sum(1 for g in G.elements if compose(g, u) == compose(u, g) and compose(g, v) == compose(v, g))
    if cent != p * p:
        return None
    mats = []
    for s in G.generators:
        cu, cv = coord[conjugate(s, u)], coord[conjugate(s, v)]
        mats.append(((cu[0], cv[0]), (cu[1], cv[1])))

    def mul(M, N):
        return tuple(
            tuple(sum(M[i][k] * N[k][j] for k in range(2)) % p for j in range(2)) for i in range(2)
        )

    if any(mul(M, N) != mul(N, M) for M in mats for N in mats):
        return None
    lines = [(1, t) for t in range(p)] + [(0, 1)]
    invariant = []
    for d in lines:
        eig = []
        for M in mats:
            img = (M[0][0] * d[0] + M[0][1] * d[1]) % p, (M[1][0] * d[0] + M[1][1] * d[1]) % p
            lam = next((c for c in range(1, p) if img == (c * d[0] % p, c * d[1] % p)), None)
            if lam is None:
                break
            eig.append(lam)
        else:
            invariant.append(eig)
    if len(invariant) != 2:
        return None
    ratios = {x * pow(y, -1, p) % p for x, y in zip(*invariant)}
    # the ratio character takes values in {1, -1} and is nontrivial
    if not ratios <= {1, p - 1} or p - 1 not in ratios:
        return None
    Pset = set(P)

    def order_mod_P(g: Perm) -> int:
        k, z = 1, g
        while z not in Pset:
            z = compose(g, z)
            k += 1
        return k

    if max(order_mod_P(g) for g in G.elements) == h:
        return ELEMENTARY_CYCLIC, h
    return ELEMENTARY_KLEIN, h // 2


def classify_shape(G: TransitiveGroupEntry) -> GroupShape:
    kind, p = degree_kind(G.degree)
    if kind == "p":
        return GroupShape(G.degree, p, kind, PRIME)
    H = G.group
    if kind == "p^2":
        # the families have order p^2 m with m | p(p-1)
        if (p**3 * (p - 1)) % H.order:
            return GroupShape(G.degree, p, kind, UNRECOGNIZED)
        H = PermGroup(H.generators, H.degree, elements=H.elements)
        if _normal_cyclic_with_complement(H, p * p):
            return GroupShape(G.degree, p, kind, CYCLIC_P2, H.order // (p * p))
        return GroupShape(G.degree, p, kind, UNRECOGNIZED)
    # 2p: every family has order dividing 2 p^2 (p-1)
    if (2 * p * p * (p - 1)) % H.order:
        return GroupShape(G.degree, p, kind, UNRECOGNIZED)
    H = PermGroup(H.generators, H.degree, elements=H.elements)
    matches = []
    if _normal_cyclic_with_complement(H, 2 * p):
        matches.append((CYCLIC_2P, H.order // (2 * p)))
    m = H.order // p
    if m % 2 == 0 and gcd(m, p) == 1 and _normal_cyclic_with_complement(H, p):
        matches.append((CYCLIC_P, m))
    elem = _elementary_family(H, p)
    if elem:
        matches.append(elem)
    if len(matches) > 1:
        raise AmbiguousShape(f"{G.label} fits {matches}")
    if not matches:
        return GroupShape(G.degree, p, kind, UNRECOGNIZED)
    family, m = matches[0]
    return GroupShape(G.degree, p, kind, family, m)


# -- predictors -------------------------------------------------------------


def predict_prime(p: int, G: TransitiveGroupEntry) -> int:
    """Structures on a degree p extension: one if G is solvable, none otherwise."""
    if G.degree != p or not _is_prime(p):
        raise UnsupportedDegree(f"{G.label} is not of prime degree {p}")
    return 1 if is_solvable(G.group) else 0


def predict_p_squared(p: int, shape: GroupShape, iff: bool = True) -> dict[str, int | None]:
    """Per-type counts for degree p^2, keyed by type name (cyclic, elementary).

    A recognized cyclic family excludes the elementary type.  Without a
    recognized family the cyclic count is 0 in ``iff`` mode and unknown
    otherwise; the elementary count is then never predicted.
    """
    cyc, elem = f"C{p * p}", f"C{p}^2"
    if shape.family == CYCLIC_P2:
        return {cyc: p if shape.m in (1, p) else 1, elem: 0}
    return {cyc: 0 if iff else None, elem: None}


def predict_2p_cyclic(p: int, shape: GroupShape, iff: bool = True) -> int | None:
    if shape.family == CYCLIC_2P:
        return 1
    if shape.family == CYCLIC_P:
        # only the dihedral group of order 2p carries p structures
        return p if shape.m == 2 else 1
    return 0 if iff else None


def predict_2p_dihedral(p: int, shape: GroupShape, iff: bool = True) -> int | None:
    if shape.family in (CYCLIC_2P, CYCLIC_P, ELEMENTARY_CYCLIC, ELEMENTARY_KLEIN):
        return 2
    return 0 if iff else None


def predict(G: TransitiveGroupEntry, iff: bool = True) -> dict[str, int | None]:
    """Per-type predicted counts for G, keyed by catalogue type name.

    Types are all present; None means no prediction.  Raises
    UnsupportedDegree for degrees 4 and 8.
    """
    shape = classify_shape(G)
    names = [t.name for t in catalogue(G.degree)]
    if shape.kind == "p":
        return {names[0]: predict_prime(shape.p, G)}
    if shape.kind == "p^2":
        return predict_p_squared(shape.p, shape, iff)
    cyclic, dihedral = names
    return {
        cyclic: predict_2p_cyclic(shape.p, shape, iff),
        dihedral: predict_2p_dihedral(shape.p, shape, iff),
    }
