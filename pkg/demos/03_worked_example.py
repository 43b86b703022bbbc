# The C2 x C2 x C2 extension and its class of six dihedral structures.
#
#   python3 demos/03_worked_example.py

from hopfgalois import example
from hopfgalois.enumeration import enumerate_all
from hopfgalois.tgdb import get_entry

labels, members = example.build()
print(example.render(labels, members))

# the D4 structures of 8T3 split into seven classes of six
report = enumerate_all(get_entry("8T3"))
print(report.class_sizes("D4"))

# none of the six has a G-stable subgroup lattice as large as the field lattice
for m in members:
    print(m.record.serial, m.record.sub_gst_count, "of", report.intfields)
