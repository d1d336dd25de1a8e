"""
Coefficients and the Parseval sum
=================================

The reciprocal ``z/k`` of the extremal function has explicit
coefficients. Summing ``pi * n |c_n|^2 r^(2n)`` reproduces the closed-form
maximal area.
"""

import numpy as np

from janowski import ClassParams, area_integral, extremal_area, extremal_reciprocal_series
from janowski.series import TruncatedSeries, exp_series, log_series, pow_complex

params = ClassParams(5 / 6, -4 / 5)
c = extremal_reciprocal_series(params, 2048)
print("first coefficients:", np.round(c.coeffs[:5], 6))

for r in (0.5, 0.9, 0.99):
    res = area_integral(c, r)
    print(f"r = {r}: Parseval {res.value:.15f}  closed form {extremal_area(params, r):.15f}")

# The same series from generic series arithmetic: (1 + B z)^(1 - A/B).
one_plus_Bz = TruncatedSeries([1, params.B], 2048)
via_pow = pow_complex(one_plus_Bz, 1 - params.A / params.B)
via_exp_log = exp_series((1 - params.A / params.B) * log_series(one_plus_Bz))
print("max |pow - closed form|     =", np.abs(via_pow.coeffs - c.coeffs).max())
print("max |exp(log) - closed form| =", np.abs(via_exp_log.coeffs - c.coeffs).max())
