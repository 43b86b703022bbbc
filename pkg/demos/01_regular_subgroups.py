# Regular subgroups of S_8 and the ones a given Galois group normalizes.
#
#   python3 demos/01_regular_subgroups.py

import math

import numpy as np

from hopfgalois.enumeration import step1_enumerate
from hopfgalois.grouplib import automorphisms, catalogue, holomorph
from hopfgalois.permcore import format_cycles, orbit_tables
from hopfgalois.tgdb import get_entry

# the five groups of order 8, each as its left regular representation
for t in catalogue(8):
    N = t.standard_rep
    hol = holomorph(N)
    tables = orbit_tables(N)  # one row of images per conjugate of N in S_8
    print(f"{t.name:6} |Aut|={len(automorphisms(N)):4} |Hol|={hol.order:5} conjugates={len(tables):6}",
          f"(8!/|Hol| = {math.factorial(8) // hol.order})")

# the orbit is stored as an integer array: conjugate, element, point
tables = orbit_tables(catalogue(8)[3].standard_rep)
print(tables.shape, tables.dtype)

# G = 8T3 is elementary abelian of order 8 acting regularly on itself
G = get_entry("8T3")
for g in G.generators:
    print(format_cycles(g, one_based=True))

# the conjugates of each type normalized by G, and which of them have
# their centralizer inside G
for t in catalogue(8):
    found = step1_enumerate(G, t)
    print(f"{t.name:6} normalized by 8T3: {len(found):3}   almost classical: {sum(ac for _, ac in found)}")

# the counts add up to the row of 8T3 in the degree 8 table
print(np.array([len(step1_enumerate(G, t)) for t in catalogue(8)]).sum())
