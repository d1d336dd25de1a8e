"""
Janowski classes S*(A, B), their extremal functions and Dirichlet areas.

A normalized analytic ``f`` belongs to ``S*(A, B)`` when
``z f'(z) / f(z)`` is subordinate to ``(1 + A z) / (1 + B z)``. For
``g = z / f = 1 + sum b_n z^n`` the Dirichlet area of ``g`` over
``|z| < r`` is ``pi * sum n |b_n|^2 r^(2n)``; its maximum over the class
is attained by rotations of

    k_{A,0}(z) = z exp(A z),        k_{A,B}(z) = z (1 + B z)^(A/B - 1),

and equals ``pi |A|^2 r^2 0F1(2; |A|^2 r^2)`` for ``B = 0`` and
``pi |conj(A) - B|^2 r^2 2F1(A/B, conj(A)/B; 2; B^2 r^2)`` for ``B < 0``.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import DivergentArea, InvalidParams, InvalidRadius
from .series import DEFAULT_ORDER, TruncatedSeries
from .special import hyp_0F1, hyp_2F1


@dataclass(frozen=True)
class ClassParams:
    """The pair ``(A, B)`` with ``A`` complex, ``-1 <= B <= 0`` and ``A != B``."""

    A: complex
    B: float

    def __post_init__(self):
        A = complex(self.A)
        B = complex(self.B)
        if B.imag != 0:
            raise InvalidParams(f"B must be real, got {B}")
        B = B.real
        if not (cmath.isfinite(A) and math.isfinite(B)):
            raise InvalidParams("A and B must be finite")
        if not -1.0 <= B <= 0.0:
            raise InvalidParams(f"B = {B} is outside [-1, 0]")
        if A == B:
            raise InvalidParams("A must differ from B")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", float(B))

    @property
    def phi(self) -> complex:
        """``1 - A/B``; only defined for ``B != 0``."""
        if self.B == 0:
            raise InvalidParams("phi = 1 - A/B is undefined for B = 0")
        return 1.0 - self.A / self.B

    @property
    def zeta(self) -> complex:
        """``A/B - 1``; only defined for ``B != 0``."""
        if self.B == 0:
            raise InvalidParams("zeta = A/B - 1 is undefined for B = 0")
        return self.A / self.B - 1.0


# -- presets ---------------------------------------------------------------


@dataclass(frozen=True)
class ClassPreset:
    name: str
    args: tuple = ()
    resolved: ClassParams = field(default=None, compare=False)

    @property
    def label(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({', '.join(f'{a:g}' for a in self.args)})"


def _spirallike(alpha, beta):
    e = cmath.exp(1j * alpha)
    return ClassParams(e * (e - 2.0 * beta * math.cos(alpha)), -1.0)


def _silverman(a, b):
    if a + b < 1 or not b <= a <= 1 + b:
        raise InvalidParams("silverman(a, b) needs a + b >= 1 and a in [b, 1 + b]")
    return ClassParams((b * b - a * a + a) / b, (1.0 - a) / b)


_PRESETS = {
    "starlike": (0, lambda: ClassParams(1.0, -1.0)),
    "starlike_of_order": (1, lambda beta: ClassParams(1.0 - 2.0 * beta, -1.0)),
    "yamashita": (0, lambda: ClassParams(0.0, -1.0)),
    "S10": (0, lambda: ClassParams(1.0, 0.0)),
    "T": (None, lambda alpha, beta=0.0: ClassParams((1.0 - 2.0 * beta) * alpha, -alpha)),
    "singh_singh": (1, lambda alpha: ClassParams(1.0, 1.0 / alpha - 1.0)),
    "silverman": (2, _silverman),
    "spirallike": (2, _spirallike),
}

PRESET_NAMES = tuple(_PRESETS)


def preset(name: str, *args: float) -> ClassPreset:
    """Resolve a named subclass to its ``(A, B)``.

    ``T`` takes ``alpha`` and an optional ``beta`` (``T(alpha)`` is
    ``T(alpha, 0)``). ``singh_singh(alpha)`` has ``B = 1/alpha - 1``, which
    lies in ``[-1, 0]`` only for ``alpha >= 1``.
    """
    try:
        nargs, make = _PRESETS[name]
    except KeyError:
        raise InvalidParams(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}")
    if nargs is None:
        if not 1 <= len(args) <= 2:
            raise InvalidParams(f"preset {name} takes 1 or 2 arguments")
    elif len(args) != nargs:
        raise InvalidParams(f"preset {name} takes {nargs} argument(s), got {len(args)}")
    args = tuple(float(a) for a in args)
    return ClassPreset(name, args, make(*args))


def parse_preset(text: str) -> ClassPreset:
    """Parse ``name`` or ``name(x, y)``, e.g. ``spirallike(0.7853981634, 0.5)``."""
    m = re.fullmatch(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\((.*)\))?\s*", text)
    if not m:
        raise InvalidParams(f"cannot parse preset {text!r}")
    name, inner = m.groups()
    args = []
    if inner and inner.strip():
        for tok in inner.split(","):
            args.append(_parse_real(tok))
    return preset(name, *args)


def _parse_real(tok: str) -> float:
    """A real such as ``0.5``, ``1/3``, ``pi/4`` or ``3*pi/4``."""
    tok = tok.strip().replace("π", "pi")
    if "/" in tok:
        p, q = tok.split("/", 1)
        return _parse_real(p) / _parse_real(q)
    if tok.endswith("pi"):
        k = tok[:-2].rstrip("*").strip()
        scale = {"": 1.0, "+": 1.0, "-": -1.0}.get(k)
        return math.pi * (scale if scale is not None else float(k))
    try:
        return float(tok)
    except ValueError:
        raise InvalidParams(f"cannot parse number {tok!r}")


# -- extremal functions and areas -------------------------------------------


def extremal_reciprocal_series(params: ClassParams, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Coefficients of ``z / k_{A,B}``: ``exp(-A z)`` or ``(1 + B z)^(1 - A/B)``.

    Built from the closed forms ``(-1)^n A^n / n!`` and
    ``(-1)^n (zeta)_n B^n / n!`` with ``zeta = A/B - 1``.
    """
    A, B = params.A, params.B
    c = np.zeros(order + 1, dtype=complex)
    c[0] = 1.0
    if B == 0:
        for n in range(1, order + 1):
            c[n] = c[n - 1] * (-A) / n
    else:
        zeta = params.zeta
        for n in range(1, order + 1):
            c[n] = c[n - 1] * (-B) * (zeta + n - 1) / n
    return TruncatedSeries(c)


@dataclass(frozen=True)
class AreaResult:
    """Dirichlet area (the factor pi included) with a tail estimate."""

    value: float
    partial_terms: int
    tail_estimate: float

    def __float__(self):
        return self.value


def _check_radius(r) -> float:
    r = float(r)
    if not 0.0 < r <= 1.0:
        raise InvalidRadius(f"radius r = {r} is outside (0, 1]")
    return r


def area_terms(b: TruncatedSeries, r: float) -> np.ndarray:
    """``n |b_n|^2 r^(2n)`` for ``n = 0..N`` (the ``n = 0`` entry is zero)."""
    n = np.arange(len(b))
    return n * np.abs(b.coeffs) ** 2 * r ** (2 * n)


def _tail(terms: np.ndarray) -> float:
    nz = np.flatnonzero(terms)
    if len(nz) < 2:
        return 0.0
    j, i = int(nz[-1]), int(nz[-2])
    gap = j - i
    trailing = len(terms) - 1 - j
    if trailing >= 2 * gap:
        # a long run of exact zeros: the series is a polynomial
        return 0.0
    q = (terms[j] / terms[i]) ** (1.0 / gap)
    if q >= 1.0:
        return float(terms[j])
    # next nonzero term sits `gap` places further on
    qg = q**gap
    return float(terms[j] * qg / (1.0 - qg))


def area_integral(b: TruncatedSeries, r: float) -> AreaResult:
    """``pi * sum_{n>=1} n |b_n|^2 r^(2n)`` over the available coefficients.

    The tail estimate extrapolates geometrically from the ratio of the last
    two nonzero terms, is zero when the coefficients end in a long run of
    exact zeros, and is clamped to the last term when the ratio is >= 1.
    """
    r = _check_radius(r)
    t = area_terms(b, r)
    return AreaResult(math.pi * float(t.sum()), b.order, math.pi * _tail(t))


def extremal_area_method(params: ClassParams, r: float) -> tuple[float, str]:
    """Closed-form maximal area and the evaluation route (``series``/``gauss``)."""
    r = _check_radius(r)
    A, B = params.A, params.B
    if B == 0:
        a2 = abs(A) ** 2
        if not 0 < a2 <= 1:
            raise InvalidParams(f"B = 0 requires 0 < |A| <= 1, got |A| = {math.sqrt(a2):g}")
        x = a2 * r * r
        return math.pi * x * hyp_0F1(2.0, x).value.real, "series"
    x = B * B * r * r
    method = "series"
    if x == 1.0:
        if A.real <= -1.0:
            raise DivergentArea(
                f"the maximal area at r = 1, B = -1 is finite only if Re A > -1 (Re A = {A.real:g})"
            )
        method = "gauss"
    F = hyp_2F1(A / B, A.conjugate() / B, 2.0, x).value
    return math.pi * abs(A.conjugate() - B) ** 2 * r * r * F.real, method


def extremal_area(params: ClassParams, r: float) -> float:
    """Maximal Dirichlet area of ``z / f`` over ``S*(A, B)`` on ``|z| < r``.

    Depends on ``A`` only through ``|A|`` when ``B = 0``, where the class
    additionally needs ``0 < |A| <= 1``.
    """
    return extremal_area_method(params, r)[0]


def lemma1_functional(b: TruncatedSeries, params: ClassParams, terms: int | None = None) -> float:
    """``sum_{k=1}^{N} (k^2 - |B - A - kB|^2) |b_k|^2 - |A - B|^2``.

    Nonpositive for every member of the class and every ``N``.
    """
    if terms is None:
        terms = b.order
    terms = min(int(terms), b.order)
    A, B = params.A, params.B
    k = np.arange(1, terms + 1)
    w = k * k - np.abs(B - A - k * B) ** 2
    s = float(np.sum(w * np.abs(b.coeffs[1 : terms + 1]) ** 2))
    return s - abs(A - B) ** 2


# -- image of the disk under (1 + A z) / (1 + B z) --------------------------


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def contains(self, w) -> bool:
        return abs(w - self.center) < self.radius


@dataclass(frozen=True)
class HalfPlane:
    """``Re(normal * w) > offset``.

    ``degenerate`` marks ``A = 1``, the case set aside in the classical
    statement of the half-plane image (the formula still gives
    ``Re w > 0`` there).
    """

    normal: complex
    offset: float
    degenerate: bool = False

    def contains(self, w) -> bool:
        return (self.normal * w).real > self.offset


def p_image_descriptor(params: ClassParams):
    A, B = params.A, params.B
    if B == -1.0:
        return HalfPlane(1.0 + A.conjugate(), (1.0 - abs(A) ** 2) / 2.0, degenerate=(A == 1))
    d = 1.0 - B * B
    return Disk((1.0 - A * B) / d, abs(A - B) / d)


# -- published reference values ------------------------------------------------

TABLE2 = (
    # (A, B, printed E_{A,B}(1))
    (5 / 6, 0.0, 3.03211),
    (1 / 6, 0.0, 0.0884841),
    (2 / 3 + 0.5j, 0.0, 3.03211),
    ((2 - 3j) / 5, 0.0, 2.09682),
    (5 / 6, -4 / 5, 11.2917),
    (1 / 6, -1.0, 4.34607),
    (2 / 3 + 0.5j, -1 / 2, 6.90284),
    ((2 - 3j) / 5, -3 / 5, 5.4645),
)
