"""
Maximal Dirichlet area of ``z/f`` over the Janowski starlike classes.

Submodules
----------
series       truncated complex power series
special      Gamma, Pochhammer, 0F1 and 2F1
core         class parameters, extremal functions, areas, presets
multipliers  triangular multiplier systems and their diagnostics
sampler      class members from Schwarz functions, maximality checks
cli          command-line interface (``janowski`` / ``python -m janowski``)
"""

from .core import (
    AreaResult,
    ClassParams,
    ClassPreset,
    area_integral,
    extremal_area,
    extremal_area_method,
    extremal_reciprocal_series,
    lemma1_functional,
    p_image_descriptor,
    parse_preset,
    preset,
)
from .errors import JanowskiError
from .multipliers import (
    MultiplierTable,
    compute_U,
    lambda_limit,
    lambda_recurrence_step,
    solve_lambda_system,
)
from .sampler import (
    Composed,
    NormalizedPolynomial,
    RotationMonomial,
    build_member,
    verify_maximality,
)
from .series import TruncatedSeries
from .special import gamma_complex, hyp_0F1, hyp_2F1, pochhammer

__version__ = "0.1.0"
