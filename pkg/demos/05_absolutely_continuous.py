"""
Positivity of M_I(t) on the positive half-line
==============================================

M_I(t) = sqrt(t) sinc(sqrt(t) d) is the imaginary part of M(t + i0).
"""

import numpy as np

from pointweyl import PointConfig, RealSequence, ac_certificate, collinear_config, weyl_imag

two = PointConfig([[0, 0, 0], [0, 0, 1]])
cert = ac_certificate(two, np.linspace(0.5, 22, 44))
print("C1 =", cert.C1, " C2 =", cert.C2, " all positive:", cert.all_positive)
for s in cert.samples[::8]:
    print(f"t = {s.t:6.2f}  lambda_min = {s.min_eig_MI:.4f}")

# sparse collinear points k^2: positivity on (0, 50] even inside (0, C2)
sparse = collinear_config(RealSequence(np.arange(1, 13) ** 2))
cert = ac_certificate(sparse, np.linspace(0.25, 50, 200))
print("sparse collinear, min lambda_min:", min(s.min_eig_MI for s in cert.samples))

# as t -> 0 the eigenvalues shrink like powers of t and meet roundoff
for t in (1e-1, 1e-2, 1e-3, 1e-4):
    print(t, np.linalg.eigvalsh(weyl_imag(sparse, t))[0])
