"""
Walking an Apery frame
======================

Adding a2 repeatedly and reducing mod a1 moves along the rows of the frame,
jumping down after a long row and up after a short one.
"""

from math import gcd

from frobstar import core, frame, star

for a, n in [(5, 5), (8, 3)]:
    P = star.StarParams(a, n)
    T = star.star_triple(P)
    F = star.frame_parameters(P)
    walk = frame.traverse(F, T)
    print(f"(a, n) = ({a}, {n}), triple {T.as_tuple()}, gcd(a1, a2) = {gcd(T.a1, T.a2)}")
    print("  first 25 cells:", [(p.y, p.z) for p in walk[:25]])
    print("  residues covered:", len({p.value % T.a1 for p in walk}), "of", T.a1)
    print("  frame values == oracle Apery set:", frame.frame_apery_values(F, T) == core.apery_set(T))

# %% a pair where the frame conditions hold but the frame is not the Apery set
P = star.StarParams(5, 9)
T = star.star_triple(P)
F = star.table_frame(P)  # frame_parameters would validate it and still accept it
vals = frame.frame_apery_values(F, T)
ap = core.apery_set(T)
off = [j for j in range(T.a1) if vals[j] != ap[j]]
print(f"(5, 9): frame valid = {frame.validate_frame(F, T)}, {len(off)} cells above the true minimum")
print("  closed g0 =", star.closed_frobenius(P), " oracle g0 =", core.frobenius(T))
