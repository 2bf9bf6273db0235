"""
Geometry of a point configuration
=================================

Separation, interaction sums and density of a sparse sequence.
"""

import numpy as np

from pointweyl import PointConfig, RealSequence, collinear_config, interaction_sums, min_separation
from pointweyl import tail_row_sums, upper_density_estimate

# four points at the corners of a unit square in the z = 0 plane
cfg = PointConfig([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]])
print("m =", cfg.m)
print("d* =", min_separation(cfg))

# C1 is the sup of the row sums of 1/d, C2 the sup of the squared ones
sums = interaction_sums(cfg)
print(sums)

# a sparse sequence lambda_k = k^2 placed on the x3-axis
seq = RealSequence(np.arange(1, 31) ** 2)
line = collinear_config(seq)
print("collinear C1 =", interaction_sums(line).C1)
print("tail sups   =", [round(tail_row_sums(line, p), 4) for p in (1, 5, 10, 20)])

# the counting ratio n(r)/r drops as the window grows: density zero
for w in upper_density_estimate(seq, [1.0, 10.0, 100.0, 1000.0]):
    print(f"r = {w.r:7.1f}   n(r) = {w.n_r:3d}   n(r)/r = {w.ratio:.4f}")
