"""
Fundamental splines
===================

Each fundamental spline equals one at its own node and zero at the others;
together they sum to one everywhere.
"""

import matplotlib.pyplot as plt
import numpy as np

from trigspline import GridSpec, SplineParams, fundamental_basis

N = 7
t = np.linspace(0, 2 * np.pi, 500)
fig, axes = plt.subplots(1, 3, figsize=(12, 3.5), sharey=True)
for ax, r in zip(axes, (1, 2, 4)):
    params = SplineParams(stitch_indicator=0, interp_indicator=0, order=r)
    basis = fundamental_basis(params, N, t)
    ax.plot(t, basis)
    ax.plot(GridSpec(N).nodes(), np.zeros(N), "k|", ms=12)
    ax.set_title(f"r = {r}")
    print(f"r={r}: max |sum - 1| = {np.max(np.abs(basis.sum(axis=1) - 1)):.1e}")

# %%
# Higher order means a wider, smoother cardinal function that approaches
# the Dirichlet kernel of the interpolating polynomial.

plt.show()
