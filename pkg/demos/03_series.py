"""
Series of 2-step star numbers
=============================
"""

import numpy as np

from frobstar import series

for a in (2, 5, 12):
    c = series.reciprocal_check(a)
    print(f"sum 1/S(a,n), a={a}: partial+tail {c.partial_value:.12f}  closed {c.closed_value:.12f}  err {c.abs_error:.1e}")

# %% how fast does the reciprocal sum close in?
N = np.logspace(1, 5, 5).astype(int)
errs = [abs(series.reciprocal_partial(6, int(k)) - series.reciprocal_closed(6)) for k in N]
for k, e in zip(N, errs):
    print(f"N={k:>6d}  raw error {e:.3e}  vs 1/(aN) = {1 / (6 * k):.3e}")

# %% the exponential and geometric weights converge much faster
plain, alt = series.exp_sums_check(7, 30)
print("exp:", plain.partial_value, "alt:", alt.partial_value, "=", alt.closed_value)
for b in (2, 3, 10):
    print(f"geometric b={b}:", series.geometric_check(7, b).partial_value, series.geometric_closed(7, b))
