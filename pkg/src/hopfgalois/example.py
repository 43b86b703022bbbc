"""A worked case: the Galois extension with group C2 x C2 x C2 and its
largest Hopf algebra isomorphism class (six structures of type D4).

G is the database entry 8T3 with generators named a, b, c; points are the
cosets labelled by words in a, b, c.  N1 = <s, r> is one regular subgroup
of the class; the other five are found by G-isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import HGSRecord, action_map, coset_labels, enumerate_all
from .grouplib import g_isomorphism
from .permcore import Perm, PermGroup, compose, format_cycles, parse_cycles, power
from .tgdb import get_entry

GROUP_LABEL = "8T3"
NAMES = ("a", "b", "c")
S1 = parse_cycles("(0 7)(1 2)(3 4)(5 6)", 8)
R1 = parse_cycles("(0 5 4 1)(2 3 6 7)", 8)


@dataclass
class ExampleMember:
    record: HGSRecord
    s: Perm
    r: Perm
    action: list[tuple[str, str]]  # (element word, coset label)


def element_words(s: Perm, r: Perm) -> list[tuple[str, Perm]]:
    """r, r^2, r^3, s, sr, sr^2, sr^3 (identity left out)."""
    out = []
    for k in (1, 2, 3):
        out.append(("r" if k == 1 else f"r^{k}", power(r, k)))
    for k in (0, 1, 2, 3):
        word = "s" + ("" if k == 0 else "r" if k == 1 else f"r^{k}")
        out.append((word, compose(s, power(r, k))))
    return out


def build(tgdb: str | None = None) -> tuple[list[str], list[ExampleMember]]:
    """Coset labels and the six members of N1's class, N1 first."""
    G = get_entry(GROUP_LABEL, tgdb)
    labels = coset_labels(G, list(NAMES))
    report = enumerate_all(G)
    N1 = PermGroup([S1, R1], 8)
    first = next(r for r in report.records if r.N == N1)
    members = []
    for rec in report.records:
        if rec.class_id != first.class_id:
            continue
        f = g_isomorphism(N1, rec.N, G.group)
        s, r = f[S1], f[R1]
        amap = action_map(rec.N, G, labels)
        members.append(ExampleMember(rec, s, r, [(w, amap[n]) for w, n in element_words(s, r)]))
    members.sort(key=lambda m: m.record.N != N1)
    return labels, members


def render(labels: list[str], members: list[ExampleMember], one_based: bool = True) -> str:
    G = get_entry(GROUP_LABEL)
    lines = [f"G = {GROUP_LABEL}, generators:"]
    for name, g in zip(NAMES, G.generators):
        lines.append(f"  {name} = {format_cycles(g, one_based)}")
    start = 1 if one_based else 0
    lines.append("points: " + ", ".join(f"{i + start}={lab}" for i, lab in enumerate(labels)))
    lines.append(f"class of {len(members)} structures of type D4 (G-isomorphic to N1 via s1->si, r1->ri):")
    for i, m in enumerate(members, 1):
        lines.append(f"  N{i} = <s{i} = {format_cycles(m.s, one_based)}, r{i} = {format_cycles(m.r, one_based)}>")
    lines.append("Hopf action n -> n^-1(point of Id):")
    for i, m in enumerate(members, 1):
        cells = [f"{w.replace('s', f's{i}').replace('r', f'r{i}')} -> {lab}" for w, lab in m.action]
        lines.append(f"  N{i}: " + ", ".join(cells))
    return "\n".join(lines) + "\n"
