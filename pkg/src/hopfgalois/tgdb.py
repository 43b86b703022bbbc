"""Transitive groups database: text format, loader, validation and a
small-degree enumeration oracle.

File format, one entry per line::

    <degree> <index> [name_hint] | <perm> ; <perm> ; ...

Permutations are disjoint cycles over 0-based points, ``()`` for the
identity.  ``#`` starts a comment line.  A trailing ``= <order>`` after the
generators declares the group order, which is then checked on load.
"""

from __future__ import annotations

import io
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from itertools import permutations
from typing import IO, Iterable

from .permcore import (
    Perm,
    PermGroup,
    conjugate,
    cycles,
    format_cycles,
    is_transitive,
    parse_cycles,
    subgroups_above,
    symmetric_group,
    trivial_group,
)

ENV_VAR = "HOPFGALOIS_TGDB"


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, column: int = 0):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


class ValidationError(ValueError):
    pass


@dataclass
class TransitiveGroupEntry:
    degree: int
    index: int
    generators: tuple[Perm, ...]
    order: int
    name_hint: str | None = None
    group: PermGroup = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.group = PermGroup(self.generators, self.degree)

    @property
    def label(self) -> str:
        return f"{self.degree}T{self.index}"

    @cached_property
    def is_galois(self) -> bool:
        """True when the point stabilizer is trivial (L/K itself is Galois)."""
        return self.order == self.degree

    def to_line(self) -> str:
        gens = " ; ".join(format_cycles(g) for g in self.generators)
        hint = f" {self.name_hint}" if self.name_hint else ""
        return f"{self.degree} {self.index}{hint} | {gens} = {self.order}"


def _parse_line(line: str, lineno: int) -> TransitiveGroupEntry:
    if "|" not in line:
        raise ParseError("missing '|' separator", lineno, len(line))
    head, _, body = line.partition("|")
    parts = head.split()
    if len(parts) not in (2, 3):
        raise ParseError("expected '<degree> <index> [name_hint]'", lineno, 0)
    try:
        degree, index = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("degree and index must be integers", lineno, 0) from None
    if degree < 1:
        raise ParseError("degree must be positive", lineno, 0)
    hint = parts[2] if len(parts) == 3 else None
    declared = None
    if "=" in body:
        body, _, order_text = body.rpartition("=")
        try:
            declared = int(order_text)
        except ValueError:
            raise ParseError("bad declared order", lineno, line.rfind("=") + 1) from None
    gens = []
    col = len(head) + 1
    for chunk in body.split(";"):
        text = chunk.strip()
        if not text:
            raise ParseError("empty generator", lineno, col)
        try:
            gens.append(parse_cycles(text, degree))
        except ValueError as exc:
            raise ParseError(str(exc), lineno, col) from None
        col += len(chunk) + 1
    G = PermGroup(gens, degree)
    label = f"{degree}T{index}"
    if not is_transitive(G):
        raise ValidationError(f"{label}: generators do not generate a transitive group")
    order = G.order
    if declared is not None and declared != order:
        raise ValidationError(f"{label}: declared order {declared} but generators give {order}")
    return TransitiveGroupEntry(degree, index, tuple(gens), order, hint)


def load_db(source: IO[str] | str | Iterable[str]) -> list[TransitiveGroupEntry]:
    """Parse and validate a database stream."""
    if isinstance(source, str):
        source = io.StringIO(source)
    entries = []
    seen = set()
    for lineno, raw in enumerate(source, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entry = _parse_line(line, lineno)
        key = (entry.degree, entry.index)
        if key in seen:
            raise ValidationError(f"{entry.label}: duplicate entry")
        seen.add(key)
        entries.append(entry)
    return entries


def dump_db(entries: Iterable[TransitiveGroupEntry]) -> str:
    return "".join(e.to_line() + "\n" for e in entries)


_CACHE: dict[str, list[TransitiveGroupEntry]] = {}


def default_db_path() -> str | None:
    return os.environ.get(ENV_VAR)


def load_default(path: str | None = None) -> list[TransitiveGroupEntry]:
    """The bundled database, or the file at ``path`` / $HOPFGALOIS_TGDB."""
    path = path or default_db_path()
    key = path or "<bundled>"
    if key not in _CACHE:
        if path:
            with open(path) as fh:
                _CACHE[key] = load_db(fh)
        else:
            text = resources.files("hopfgalois.data").joinpath("transitive_groups.txt").read_text()
            _CACHE[key] = load_db(text)
    return _CACHE[key]


def entries_of_degree(g: int, path: str | None = None) -> list[TransitiveGroupEntry]:
    return [e for e in load_default(path) if e.degree == g]


def get_entry(label: str, path: str | None = None) -> TransitiveGroupEntry:
    deg, _, idx = label.upper().partition("T")
    for e in load_default(path):
        if e.degree == int(deg) and e.index == int(idx):
            return e
    raise KeyError(label)


# -- conjugacy --------------------------------------------------------------


def cycle_type_profile(G: PermGroup) -> tuple:
    """Multiset of cycle types over all elements: a conjugacy invariant."""
    return tuple(sorted(Counter(tuple(sorted(len(c) for c in cycles(e))) for e in G.elements).items()))


def are_conjugate(G: PermGroup, H: PermGroup) -> Perm | None:
    """Brute force search for x in S_g with x G x^-1 = H; returns x or None."""
    if G.degree != H.degree or G.order != H.order:
        return None
    if cycle_type_profile(G) != cycle_type_profile(H):
        return None
    hset = H.element_set
    gens = G.generators
    for x in permutations(range(G.degree)):
        if all(conjugate(x, s) in hset for s in gens):
            return x
    return None


def enumerate_transitive_oracle(g: int) -> list[PermGroup]:
    """Transitive subgroups of S_g up to conjugacy, from the full subgroup lattice."""
    if not 1 <= g <= 6:
        raise ValueError("the enumeration oracle supports degrees 1..6")
    S = symmetric_group(g)
    subs = [K for K in subgroups_above(S, trivial_group(g)) if is_transitive(K)]
    reps: list[PermGroup] = []
    for K in sorted(subs, key=lambda K: (K.order, K.key)):
        if not any(are_conjugate(K, R) is not None for R in reps):
            reps.append(K)
    return reps


def max_holomorph_order(g: int) -> int:
    from .grouplib import catalogue, holomorph

    return max(holomorph(t.standard_rep).order for t in catalogue(g))
