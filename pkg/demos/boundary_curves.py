"""
Images of circles under z/k
===========================

Writes SVG curves of ``g(rho e^{i theta})`` for a few classes into
``boundary_curves/`` next to the working directory.
"""

from pathlib import Path

import numpy as np

from janowski import ClassParams
from janowski.cli import boundary_points, polyline_svg

out = Path("boundary_curves")
out.mkdir(exist_ok=True)

for name, params in {
    "exp_5_6": ClassParams(5 / 6, 0),
    "exp_complex": ClassParams(2 / 3 + 0.5j, 0),
    "gauss_1_6": ClassParams(1 / 6, -1),
    "half_complex": ClassParams(2 / 3 + 0.5j, -0.5),
}.items():
    _, g = boundary_points(params, 0.999, 2048)
    path = out / f"{name}.svg"
    path.write_text(polyline_svg(np.append(g, g[:1])))
    print(f"{path}: real part in [{g.real.min():.4f}, {g.real.max():.4f}]")
