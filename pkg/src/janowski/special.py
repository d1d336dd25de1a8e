"""
Gamma, Pochhammer and low-order hypergeometric functions with complex
parameters.

Only what the area formulas need is provided: ``0F1(c; x)`` and
``2F1(a, b; c; x)`` by direct summation for real ``x`` inside the unit
interval, and the Gauss closed form for ``2F1`` at ``x = 1``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DivergentAtOne, NoConvergence, PoleAtNonPositiveInteger

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)

_REL_STOP = 1e-16
_STOP_RUN = 3
_MAX_TERMS = 1_000_000
_NEAR_ONE = 0.999


@dataclass(frozen=True)
class HypergeomResult:
    """Value of a hypergeometric sum with a truncation-error estimate.

    ``tail_bound`` is the last included term magnitude divided by
    ``1 - q``, ``q`` being the observed ratio of the last two terms; when
    ``q >= 1`` it is clamped to the last term magnitude. It is a heuristic,
    reliable once the series is ratio-contractive.
    """

    value: complex
    terms_used: int
    tail_bound: float

    def __complex__(self):
        return complex(self.value)


def _is_nonpositive_integer(z) -> bool:
    z = complex(z)
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def pochhammer(a, n: int):
    """Rising factorial ``a (a+1) ... (a+n-1)``; equals 1 for ``n = 0``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def gamma_complex(z) -> complex:
    """Gamma function for complex argument.

    Lanczos approximation on ``Re z >= 1/2`` and the reflection formula
    ``Gamma(z) Gamma(1-z) = pi / sin(pi z)`` elsewhere.
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleAtNonPositiveInteger(f"Gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return cmath.pi / (cmath.sin(cmath.pi * z) * gamma_complex(1.0 - z))
    z -= 1.0
    x = _LANCZOS_P[0]
    for i in range(1, len(_LANCZOS_P)):
        x += _LANCZOS_P[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * t ** (z + 0.5) * cmath.exp(-t) * x


def _sum_series(ratio, max_terms=_MAX_TERMS) -> HypergeomResult:
    # ratio(n) gives t_{n+1} / t_n
    total = 1.0 + 0j
    term = 1.0 + 0j
    prev = term
    small = 0
    n = 0
    while True:
        if n >= max_terms:
            raise NoConvergence(f"no convergence after {max_terms} terms")
        prev = term
        term = term * ratio(n)
        n += 1
        total += term
        if abs(term) < _REL_STOP * abs(total):
            small += 1
            if small >= _STOP_RUN:
                break
        else:
            small = 0
    last = abs(term)
    if last == 0:
        return HypergeomResult(total, n + 1, 0.0)
    q = last / abs(prev) if prev != 0 else 1.0
    tail = last / (1.0 - q) if q < 1 else last
    return HypergeomResult(total, n + 1, tail)


def hyp_0F1(c, x) -> HypergeomResult:
    """``0F1(; c; x) = sum_n x^n / ((c)_n n!)``."""
    if _is_nonpositive_integer(c):
        raise PoleAtNonPositiveInteger(f"c = {c} is a non-positive integer")
    c = complex(c)
    x = complex(x)
    return _sum_series(lambda n: x / ((c + n) * (n + 1)))


def gauss_at_one(a, b, c) -> complex:
    """Gauss summation ``2F1(a,b;c;1) = G(c) G(c-a-b) / (G(c-a) G(c-b))``."""
    a, b, c = complex(a), complex(b), complex(c)
    s = c - a - b
    if s.real <= 0:
        raise DivergentAtOne(f"2F1 diverges at x = 1 since Re(c - a - b) = {s.real:g} <= 0")
    for v in (c, c - a, c - b):
        if _is_nonpositive_integer(v):
            raise PoleAtNonPositiveInteger(f"Gamma pole at {v.real:g} in Gauss summation")
    return gamma_complex(c) * gamma_complex(s) / (gamma_complex(c - a) * gamma_complex(c - b))


def hyp_2F1(a, b, c, x: float) -> HypergeomResult:
    """``2F1(a, b; c; x)`` for real ``x``.

    Summed directly for ``|x| < 1``; polynomial when ``a`` or ``b`` is a
    non-positive integer (any ``x``); ``x = 1`` is delegated to
    :func:`gauss_at_one`. Arguments in ``(0.999, 1)`` are refused because
    direct summation there is slow and inaccurate.
    """
    if _is_nonpositive_integer(c):
        raise PoleAtNonPositiveInteger(f"c = {c} is a non-positive integer")
    a, b, c = complex(a), complex(b), complex(c)
    x = float(x)

    def ratio(n):
        return (a + n) * (b + n) / ((c + n) * (n + 1)) * x

    if _is_nonpositive_integer(a) or _is_nonpositive_integer(b):
        m = int(-max(a.real if _is_nonpositive_integer(a) else -math.inf,
                     b.real if _is_nonpositive_integer(b) else -math.inf))
        total = 1.0 + 0j
        term = 1.0 + 0j
        for n in range(m):
            term *= ratio(n)
            total += term
        return HypergeomResult(total, m + 1, 0.0)
    if x == 1.0:
        return HypergeomResult(gauss_at_one(a, b, c), 0, 0.0)
    if abs(x) >= 1.0:
        raise DivergentAtOne(f"|x| = {abs(x):g} is outside the disk of convergence")
    if x > _NEAR_ONE:
        raise DivergentAtOne(
            f"x = {x!r} is too close to 1 for direct summation; "
            "use the closed form at x = 1 instead"
        )
    return _sum_series(ratio)
