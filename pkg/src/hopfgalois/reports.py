"""Per-degree runs, table rendering and comparison with published values.

Rendering goes through a plain-data model (the JSON document), so the
markdown and CSV views can be rebuilt exactly from saved JSON.
"""

from __future__ import annotations

import csv
import io
import json
import resource
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .enumeration import GroupReport, enumerate_all
from .grouplib import catalogue, holomorph
from .tgdb import TransitiveGroupEntry, entries_of_degree

SCHEMA = "hopfgalois.tables/1"


@dataclass
class DegreeSummary:
    degree: int
    transitive_total: int
    transitive_max: int
    types_count: int
    structures_total: int
    ac_total: int
    bc_total: int
    bc_not_ac: int
    giso_total: int
    giso_galois: int
    wall_time: float = 0.0
    peak_memory_estimate: float = 0.0  # MB, resident set high-water mark

    COUNT_FIELDS = (
        "transitive_total",
        "transitive_max",
        "types_count",
        "structures_total",
        "ac_total",
        "bc_total",
        "bc_not_ac",
        "giso_total",
        "giso_galois",
    )

    def counts(self) -> tuple[int, ...]:
        return tuple(getattr(self, f) for f in self.COUNT_FIELDS)


def summarize(g: int, reports: list[GroupReport], wall_time: float = 0.0) -> DegreeSummary:
    max_hol = max(holomorph(t.standard_rep).order for t in catalogue(g))
    records = [r for rep in reports for r in rep.records]
    ac = sum(r.almost_classical for r in records)
    bc = sum(r.bijective_correspondence for r in records)
    classes = [len({r.class_id for r in rep.records}) for rep in reports]
    return DegreeSummary(
        degree=g,
        transitive_total=len(reports),
        transitive_max=sum(rep.group.order <= max_hol for rep in reports),
        types_count=len(catalogue(g)),
        structures_total=len(records),
        ac_total=ac,
        bc_total=bc,
        bc_not_ac=bc - ac,
        giso_total=sum(classes),
        giso_galois=sum(c for c, rep in zip(classes, reports) if rep.group.is_galois),
        wall_time=wall_time,
        peak_memory_estimate=resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024,
    )


def _run_one(args: tuple[str, str | None]) -> GroupReport:
    from .tgdb import get_entry

    label, path = args
    return enumerate_all(get_entry(label, path))


def run_degree(
    g: int, tgdb: str | None = None, jobs: int = 1, group: str | None = None
) -> tuple[list[GroupReport], DegreeSummary]:
    """Full pipeline over every database entry of degree g (or one entry)."""
    if not 2 <= g <= 11:
        raise ValueError("degree must be in 2..11")
    entries: list[TransitiveGroupEntry] = entries_of_degree(g, tgdb)
    if group is not None:
        entries = [e for e in entries if e.label == group.upper()]
        if not entries:
            raise KeyError(group)
    start = time.perf_counter()
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            reports = list(pool.map(_run_one, [(e.label, tgdb) for e in entries]))
    else:
        reports = [enumerate_all(e) for e in entries]
    reports.sort(key=lambda r: r.group.index)
    return reports, summarize(g, reports, time.perf_counter() - start)


# -- table model ------------------------------------------------------------


def partition_string(sizes: list[int]) -> str:
    """Class sizes as 'total=count×size+...', smallest size first."""
    if not sizes:
        return "0"
    counts = sorted(Counter(sizes).items())
    return f"{sum(sizes)}=" + "+".join(f"{c}×{s}" for s, c in counts)


def build_model(reports: list[GroupReport], summary: DegreeSummary | None = None) -> dict:
    degree = summary.degree if summary else (reports[0].group.degree if reports else None)
    types = [t.name for t in catalogue(degree)] if degree else []
    groups = []
    for rep in reports:
        cells = {}
        for name, s in rep.per_type_summary().items():
            cells[name] = {
                "T": s.total,
                "a-c": s.almost_classical,
                "BC": s.bijective,
                "G-i": s.classes,
                "partition": partition_string(rep.class_sizes(name)),
            }
        groups.append(
            {
                "label": rep.group.label,
                "order": rep.group.order,
                "galois": rep.group.is_galois,
                "intfields": rep.intfields,
                "cells": cells,
            }
        )
    return {
        "schema": SCHEMA,
        "degree": degree,
        "types": types,
        "groups": groups,
        "summary": asdict(summary) if summary else None,
    }


def _cell(c: dict) -> str:
    if not c["T"]:
        return "0"
    return f"T={c['T']} a-c={c['a-c']} BC={c['BC']} G-i={c['G-i']}"


_SUMMARY_HEAD = ["degree", "total", "max", "types", "HGS", "a-c", "BC", "BC not a-c", "G-iso", "G-iso Galois"]


def _summary_row(s: dict) -> list[str]:
    return [str(s["degree"])] + [str(s[f]) for f in DegreeSummary.COUNT_FIELDS]


def _md_table(head: list[str], rows: list[list[str]]) -> list[str]:
    out = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    out += ["| " + " | ".join(r) + " |" for r in rows]
    return out


def render_model(model: dict, fmt: str) -> str:
    fmt = {"markdown": "md"}.get(fmt, fmt)
    if fmt == "json":
        return json.dumps(model, indent=2, ensure_ascii=False) + "\n"
    types = model["types"]
    rows = [g for g in model["groups"] if any(c["T"] for c in g["cells"].values())]
    if fmt == "md":
        lines = [f"## Structures, degree {model['degree']}", ""]
        lines += _md_table(["group"] + types, [[g["label"]] + [_cell(g["cells"][t]) for t in types] for g in rows])
        lines += ["", "## Isomorphism classes", ""]
        lines += _md_table(["group"] + types, [[g["label"]] + [g["cells"][t]["partition"] for t in types] for g in rows])
        if model["summary"]:
            lines += ["", "## Summary", ""]
            lines += _md_table(_SUMMARY_HEAD, [_summary_row(model["summary"])])
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["group", "order", "galois", "intfields", "type", "T", "a-c", "BC", "G-i", "partition"])
        for g in rows:
            for t in types:
                c = g["cells"][t]
                w.writerow([g["label"], g["order"], int(g["galois"]), g["intfields"], t, c["T"], c["a-c"], c["BC"], c["G-i"], c["partition"]])
        if model["summary"]:
            w.writerow([])
            w.writerow(_SUMMARY_HEAD)
            w.writerow(_summary_row(model["summary"]))
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def render(reports: list[GroupReport], fmt: str = "md", summary: DegreeSummary | None = None) -> bytes:
    return render_model(build_model(reports, summary), fmt).encode("utf-8")


def load_model(text: str | bytes) -> dict:
    model = json.loads(text)
    if model.get("schema") != SCHEMA:
        raise ValueError("not a hopfgalois tables document")
    return model


# -- published values -------------------------------------------------------

_TYPES8 = ("C8", "C4xC2", "C2^3", "D4", "Q8")
_Z = (0, 0, 0, 0)

# (T, a-c, BC, G-i) per type, for every degree 8 group with structures
PUBLISHED_TABLE_8 = {
    "8T1": ((2, 1, 2, 2), _Z, _Z, (2, 0, 2, 2), (2, 0, 2, 2)),
    "8T2": ((4, 0, 0, 2), (10, 1, 1, 7), (4, 0, 1, 4), (6, 0, 2, 5), (2, 0, 0, 2)),
    "8T3": (_Z, (42, 0, 0, 28), (8, 1, 1, 8), (42, 0, 0, 7), (14, 0, 0, 7)),
    "8T4": ((2, 0, 0, 1), (14, 0, 0, 9), (6, 0, 0, 4), (6, 1, 1, 4), (2, 0, 0, 2)),
    "8T5": ((6, 0, 0, 3), (6, 0, 6, 3), (2, 0, 2, 1), (6, 0, 6, 6), (2, 1, 2, 2)),
    "8T6": ((2, 1, 2, 2), _Z, _Z, (2, 1, 2, 2), (2, 0, 2, 2)),
    "8T7": ((2, 2, 2, 2), _Z, _Z, (2, 0, 2, 2), (2, 0, 2, 2)),
    "8T8": ((2, 1, 2, 2), _Z, _Z, (2, 0, 2, 2), (2, 1, 2, 2)),
    "8T9": (_Z, (10, 1, 1, 9), (4, 1, 1, 4), (6, 2, 2, 5), (2, 0, 0, 2)),
    "8T10": (_Z, (6, 2, 3, 6), (4, 0, 1, 4), _Z, _Z),
    "8T11": ((2, 0, 0, 1), (6, 2, 6, 5), (2, 0, 2, 2), (6, 1, 6, 6), (2, 1, 2, 2)),
    "8T12": (_Z, _Z, (2, 0, 2, 1), _Z, (2, 1, 2, 2)),
    "8T13": (_Z, _Z, (2, 1, 1, 2), _Z, (2, 0, 0, 1)),
    "8T14": (_Z, _Z, (4, 0, 1, 3), _Z, _Z),
    "8T15": ((2, 2, 2, 2), _Z, _Z, (2, 1, 2, 2), (2, 1, 2, 2)),
    "8T16": (_Z, _Z, _Z, (2, 0, 2, 2), (2, 0, 2, 2)),
    "8T17": (_Z, _Z, _Z, (2, 1, 2, 2), (2, 1, 2, 2)),
    "8T18": (_Z, (6, 3, 3, 6), (4, 1, 1, 4), _Z, _Z),
    "8T19": (_Z, (2, 1, 2, 2), (2, 1, 2, 2), _Z, _Z),
    "8T20": (_Z, (2, 0, 2, 2), (2, 0, 2, 2), _Z, _Z),
    "8T22": (_Z, (6, 6, 6, 6), (2, 2, 2, 2), (6, 6, 6, 6), (2, 2, 2, 2)),
    "8T23": (_Z, _Z, _Z, _Z, (2, 1, 2, 2)),
    "8T24": (_Z, _Z, (2, 1, 1, 2), _Z, _Z),
    "8T25": (_Z, _Z, (1, 1, 1, 1), _Z, _Z),
    "8T26": (_Z, _Z, _Z, (2, 2, 2, 2), (2, 2, 2, 2)),
    "8T29": (_Z, (2, 2, 2, 2), (2, 2, 2, 2), _Z, _Z),
    "8T32": (_Z, _Z, (2, 2, 2, 2), _Z, (2, 2, 2, 2)),
    "8T33": (_Z, _Z, (1, 1, 1, 1), _Z, _Z),
    "8T34": (_Z, _Z, (3, 0, 3, 3), _Z, _Z),
    "8T36": (_Z, _Z, (1, 1, 1, 1), _Z, _Z),
    "8T37": (_Z, _Z, (2, 0, 2, 2), _Z, _Z),
    "8T39": (_Z, _Z, (2, 2, 2, 2), _Z, _Z),
    "8T40": (_Z, _Z, _Z, _Z, (2, 2, 2, 2)),
    "8T41": (_Z, _Z, (1, 1, 1, 1), _Z, _Z),
    "8T48": (_Z, _Z, (1, 1, 1, 1), _Z, _Z),
}

# class-size partitions for the degree 8 groups where they are not all singletons
PUBLISHED_PARTITIONS_8 = {
    "8T2": ("4=2×2", "10=5×1+1×2+1×3", "4=4×1", "6=4×1+1×2", "2=2×1"),
    "8T3": ("0", "42=21×1+7×3", "8=8×1", "42=7×6", "14=7×2"),
    "8T4": ("2=1×2", "14=4×1+5×2", "6=2×1+2×2", "6=3×1+1×3", "2=2×1"),
    "8T5": ("6=3×2", "6=3×2", "2=1×2", "6=6×1", "2=2×1"),
    "8T9": ("0", "10=8×1+1×2", "4=4×1", "6=4×1+1×2", "2=2×1"),
    "8T11": ("2=1×2", "6=4×1+1×2", "2=2×1", "6=6×1", "2=2×1"),
    "8T12": ("0", "0", "2=1×2", "0", "2=2×1"),
    "8T13": ("0", "0", "2=2×1", "0", "2=1×2"),
    "8T14": ("0", "0", "4=2×1+1×2", "0", "0"),
}

# degree: total, max, types, HGS total, a-c, BC total, BC not a-c, G-iso total, G-iso Galois
PUBLISHED_SUMMARY = {
    2: (1, 1, 1, 1, 1, 1, 0, 1, 1),
    3: (2, 2, 1, 2, 2, 2, 0, 2, 1),
    4: (5, 5, 2, 10, 6, 7, 1, 10, 6),
    5: (5, 3, 1, 3, 3, 3, 0, 3, 1),
    6: (16, 10, 2, 15, 7, 9, 2, 13, 6),
    7: (7, 4, 1, 4, 4, 4, 0, 4, 1),
    8: (50, 48, 5, 348, 74, 147, 73, 262, 111),
    9: (34, 26, 2, 38, 26, 28, 2, 33, 8),
    10: (45, 21, 2, 27, 11, 17, 6, 23, 6),
    11: (8, 4, 1, 4, 4, 4, 0, 4, 1),
}


def verify_published(
    g: int,
    model: dict | None = None,
    *,
    summary_table: dict = PUBLISHED_SUMMARY,
    table8: dict = PUBLISHED_TABLE_8,
    partitions8: dict = PUBLISHED_PARTITIONS_8,
) -> list[str]:
    """Differences between computed tables and the published ones; empty
    means everything agrees.  ``model`` defaults to a fresh run."""
    if model is None:
        reports, summary = run_degree(g)
        model = build_model(reports, summary)
    diffs = []
    s = model["summary"]
    for field, want in zip(DegreeSummary.COUNT_FIELDS, summary_table[g]):
        if s[field] != want:
            diffs.append(f"summary degree {g} {field}: got {s[field]}, published {want}")
    if g != 8:
        return diffs
    by_label = {grp["label"]: grp for grp in model["groups"]}
    for label, grp in by_label.items():
        want_row = table8.get(label, (_Z,) * 5)
        for t, want in zip(_TYPES8, want_row):
            c = grp["cells"][t]
            got = (c["T"], c["a-c"], c["BC"], c["G-i"])
            if got != tuple(want):
                diffs.append(f"{label} {t}: got T/a-c/BC/G-i {got}, published {tuple(want)}")
    for label in table8:
        if label not in by_label:
            diffs.append(f"{label}: missing from computed output")
    for label, row in partitions8.items():
        for t, want in zip(_TYPES8, row):
            got = by_label[label]["cells"][t]["partition"] if label in by_label else None
            if got != want:
                diffs.append(f"{label} {t} classes: got {got}, published {want}")
    return diffs
