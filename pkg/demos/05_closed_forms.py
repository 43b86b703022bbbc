# Closed-form counts for degrees p, p^2 and 2p against enumeration.
#
#   python3 demos/05_closed_forms.py

from hopfgalois.closedform import classify_shape, predict
from hopfgalois.enumeration import enumerate_all
from hopfgalois.tgdb import entries_of_degree

for g in (9, 10):
    print(f"degree {g}")
    for e in entries_of_degree(g):
        shape = classify_shape(e)
        pred = predict(e)
        got = {k: v.total for k, v in enumerate_all(e).per_type_summary().items()}
        if any(got.values()) or shape.recognized:
            print(f"  {e.label:5} {shape.family:16} m={shape.m}  predicted={pred}  enumerated={got}")

# prime degree: one structure exactly when the group is solvable
for e in entries_of_degree(11):
    print(e.label, e.order, predict(e), len(enumerate_all(e).records))
