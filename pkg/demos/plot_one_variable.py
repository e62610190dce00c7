"""
Trigonometric splines of one variable
=====================================

Interpolate a few samples on a 9-node grid and compare the interpolating
polynomial with splines of increasing order.
"""

import matplotlib.pyplot as plt
import numpy as np

from trigspline import GridSpec, SampleGrid, SplineParams, coeffs_1d, eval_poly_1d, eval_spline_1d

# %%
# Samples of a square wave on the shifted grid (indicator 1).
grid = GridSpec(9, indicator=1)
x = grid.nodes()
samples = SampleGrid(np.where(x < np.pi, 1.0, -1.0), [grid])
coeffs = coeffs_1d(samples)

t = np.linspace(0, 2 * np.pi, 600)
plt.plot(t, eval_poly_1d(coeffs, t), "k:", label="polynomial")
for r in (1, 2, 3):
    # stitching on the same grid for odd r, on the other grid for even r
    params = SplineParams(stitch_indicator=r % 2, interp_indicator=1, order=r)
    plt.plot(t, eval_spline_1d(coeffs, params, t), label=f"spline r={r}, I1={params.stitch_indicator}")
plt.plot(x, samples.values, "ko")
plt.legend()
plt.title("interpolating a square wave on 9 nodes")

# %%
# With r = 1 and both indicators equal, the spline is the periodic broken
# line through the data.
p1 = SplineParams(1, 1, 1)
broken = np.interp(t, np.r_[x[-1] - 2 * np.pi, x, x[0] + 2 * np.pi], np.r_[samples.values[-1], samples.values, samples.values[0]])
print("max |spline - broken line| =", np.max(np.abs(eval_spline_1d(coeffs, p1, t) - broken)))

plt.show()
