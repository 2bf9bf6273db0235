"""
Resolvent kernel and its boundary conditions
============================================

The perturbed kernel is the free one plus a finite-rank correction built
from (B - M(z))^{-1}. Near each point it must behave like
xi_0 / |x - x_k| + xi_1 with xi_1 = B xi_0.
"""

import numpy as np

from pointweyl import BoundaryOperator, PointConfig, bc_residual, free_resolvent_kernel, resolvent_kernel
from pointweyl.verify import helmholtz_order

cfg = PointConfig([[0, 0, 0], [1.2, 0, 0]])
B = BoundaryOperator(np.array([[0.3, -0.4], [-0.4, 1.0]]))
z = -1.0
y = np.array([0.4, 0.6, 0.2])

for x in ([2.0, 0, 0], [0.5, -0.5, 0.3], [3.0, 1.0, 1.0]):
    g0 = free_resolvent_kernel(x, y, z)
    g = resolvent_kernel(cfg, B, z, x, y)
    print(f"x = {x}:  free {g0.real:+.6f}   perturbed {g.real:+.6f}")

# boundary-condition residual from symmetric probes at radii h, h/2, h/4
print("bc residual:", bc_residual(cfg, B, z, y, h=1e-3))

# away from the points the kernel solves (-Delta - z) G = 0; check the FD order
r1, r2, order = helmholtz_order(lambda p: resolvent_kernel(cfg, B, z, p, y), z, [2.0, 1.0, 0.5], 1e-2)
print(f"residuals {r1:.2e} -> {r2:.2e}, observed order {order:.2f}")
