"""
Independent oracles
===================

Monte Carlo convolutions against closed forms, the Krein coupling and
the collinear line identity.
"""

import numpy as np

from pointweyl import PointConfig, RealSequence, krein_coupling, line_identity, triplet_matrices
from pointweyl.verify import gram_crosscheck_matrix, mc_convolution

res = mc_convolution(1.0, [0, 0, 0], [0, 0, 1], n_samples=1_000_000, seed=1)
print(f"convolution {res.computed:.5f} vs {res.target:.5f}  (rel err {res.rel_error:.2e})")

cfg = PointConfig([[0, 0, 0], [0, 0, 1], [1, 1, 0]])
est, exact = gram_crosscheck_matrix(cfg, n_samples=200_000, seed=3)
print("Monte Carlo Gram:\n", np.round(est, 3))
print("4 pi T1:\n", np.round(exact, 3))

tm = triplet_matrices(cfg)
print("T0 =\n", tm.T0)
print("Xi =\n", krein_coupling(cfg))

# int_{-r}^{r} |sum xi_k e^{i lambda_k w}|^2 dw / (2r) against the weighted sum
seq = RealSequence([0.0, 2.5, 7.0])
li = line_identity(seq, 3.0, [1.0, 0.5 - 0.5j, -0.2j])
print(li)
