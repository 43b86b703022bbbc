# Counting through the holomorph and comparing with direct enumeration.
#
#   python3 demos/04_byott_crosscheck.py

from hopfgalois.byott import count
from hopfgalois.enumeration import step1_enumerate
from hopfgalois.grouplib import catalogue
from hopfgalois.tgdb import entries_of_degree

# a = |Aut(G, G')| * b / |Aut(N)|, b counted among subgroups of Hol(N)
for e in entries_of_degree(6):
    for T in catalogue(6):
        c = count(T, e)
        direct = len(step1_enumerate(e, T))
        if c.a or direct:
            print(f"{e.label:5} {T.name:3} b={c.b} |Aut(G,G')|={c.aut_G_Gprime} |Aut(N)|={c.aut_N} a={c.a} direct={direct}")

# the same agreement over every group of degree 8 (about 20 s)
bad = [(e.label, T.name) for e in entries_of_degree(8) for T in catalogue(8)
       if count(T, e).a != len(step1_enumerate(e, T))]
print("mismatches:", bad)
