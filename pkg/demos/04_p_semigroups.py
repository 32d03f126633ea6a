"""
Beyond p = 0: counting representations
======================================

S_p holds the integers with more than p representations. Its Apery set and
Frobenius number come from scanning each residue class upward.
"""

from frobstar import core

T = core.Triple(25, 65, 121)
for p in range(4):
    print(f"p={p}: g_p = {core.frobenius(T, p)}, n_p = {core.genus(T, p)}")

# %% representation counts around the p = 1 Frobenius number
g1 = core.frobenius(T, 1)
for t in range(g1 - 3, g1 + 4):
    print(t, core.count_representations(t, T).count)

# %% levels need not move every residue: 8 = 4 + 4 = 8 in <3, 4, 8>
U = core.Triple(3, 4, 8)
print([core.apery_set(U, p).elements for p in range(3)])
