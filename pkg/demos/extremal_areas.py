"""
Maximal areas at the unit radius
================================

Recomputes the eight ``E_{A,B}(1)`` reference values. The ``B = 0`` rows
use the ``0F1`` series, the ``B < 0`` rows use Gauss summation at one.
"""

import numpy as np

from janowski import ClassParams, extremal_area_method
from janowski.core import TABLE2

for A, B, printed in TABLE2:
    E, method = extremal_area_method(ClassParams(A, B), 1.0)
    print(f"A = {A!s:>22}  B = {B:5.2f}  E = {E:.8f}  ({method})  printed {printed}")

# Below the unit circle the area grows smoothly with r.
params = ClassParams(2 / 3 + 0.5j, -0.5)
for r in np.linspace(0.2, 1.0, 5):
    print(f"r = {r:.1f}  E = {extremal_area_method(params, r)[0]:.10f}")
