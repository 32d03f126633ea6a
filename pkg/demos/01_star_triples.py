"""
Frobenius numbers of consecutive 2-step star numbers
=====================================================

Three ways to the same number: the closed form, the L-shaped frame, and a
shortest-path oracle over residues.
"""

from frobstar import core, frame, star

P = star.StarParams(a=5, n=5)
T = star.star_triple(P)
print("triple:", T.as_tuple())

# %% closed forms pick a branch from (a mod 4, n mod 4)
print("case:", star.case_tag(P))
print("closed g0 =", star.closed_frobenius(P), " closed n0 =", star.closed_genus(P))

# %% the frame behind them
F = star.frame_parameters(P)
print("frame:", F)
print("frame g0 =", frame.frobenius_from_frame(F, T), " frame n0 =", frame.genus_from_frame(F, T))

# %% and the brute-force oracle
print("oracle g0 =", core.frobenius(T), " oracle n0 =", core.genus(T))

# %% exceptional inputs are refused, the oracle still answers
Q = star.StarParams(5, 4)
try:
    star.closed_frobenius(Q)
except Exception as exc:
    print("refused:", exc)
print("oracle g0 for (5, 4):", core.frobenius(star.star_triple(Q)))
