"""
Negative eigenvalues of a point-interaction Hamiltonian
=======================================================

Eigenvalues -kappa^2 are the kappa where B - M(-kappa^2) is singular.
"""

import numpy as np

from pointweyl import BoundaryOperator, PointConfig, negative_count, negative_spectrum
from pointweyl import negativity_count, nonnegativity_check

# one point with coupling alpha = -1 has the single bound state z = -1
one = PointConfig([[0, 0, 0]])
print(negative_spectrum(one, BoundaryOperator.diagonal([-1.0])).eigenvalues)

# two points at distance 1: the level splits into a symmetric/antisymmetric pair
two = PointConfig([[0, 0, 0], [0, 0, 1]])
B = BoundaryOperator.diagonal([-2.0, -2.0])
rep = negative_spectrum(two, B)
for p in rep.eigenpairs:
    print(f"z = {p.z:.12f}  kappa = {p.kappa:.12f}  xi = {np.round(p.xi, 6)}  residual = {p.residual:.1e}")

# the count equals the number of negative eigenvalues of B - M(0)
print("kappa_- =", rep.kappa_minus, " count from B - M(0):", negativity_count(two, B))
print("H_B >= 0 ?", nonnegativity_check(two, BoundaryOperator.diagonal([1.0, 1.0])))

# N(kappa) is a non-increasing staircase, one step per eigenvalue
for k in np.linspace(0, 4, 9):
    print(f"N({k:.1f}) = {negative_count(two, B, k)}")
