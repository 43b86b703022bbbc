# Every Hopf Galois structure of degree 8, grouped into the degree 8 tables.
#
#   python3 demos/02_degree8_tables.py

from hopfgalois.reports import build_model, render_model, run_degree, verify_published

reports, summary = run_degree(8)
print(f"{summary.structures_total} structures on {summary.transitive_total} groups in {summary.wall_time:.1f} s")

# per group and type: total, almost classical, bijective correspondence, classes
model = build_model(reports, summary)
print(render_model(model, "md"))

# groups with the most structures
busiest = sorted(reports, key=lambda r: -len(r.records))[:5]
for rep in busiest:
    print(rep.group.label, rep.group.name_hint, len(rep.records), "structures,", rep.intfields, "intermediate fields")

# comparison with the published tables, an empty list means full agreement
print(verify_published(8, model))
