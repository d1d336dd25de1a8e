"""
Members of S*(A, B) built from Schwarz functions, and a randomized check
that none of them has a larger area ``Delta(r, z/f)`` than the extremal one.

A member is fixed by a Schwarz function ``w`` through
``z f'(z) / f(z) = (1 + A w(z)) / (1 + B w(z))``. With ``p`` that quotient,
``log(z/f) = -int_0^z (p(t) - 1) / t dt``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    ClassParams,
    _check_radius,
    area_integral,
    area_terms,
    extremal_area,
    extremal_reciprocal_series,
    lemma1_functional,
)
from .errors import InvalidRadius, NormViolation
from .series import (
    DEFAULT_ORDER,
    MAX_ORDER,
    TruncatedSeries,
    compose,
    div,
    exp_series,
    integrate_p_minus_one_over_t,
)

# Schwarz functions ---------------------------------------------------------


class SchwarzSpec:
    """Recipe for an analytic self-map ``w`` of the disk with ``w(0) = 0``."""

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class RotationMonomial(SchwarzSpec):
    """``w(z) = exp(i theta) z^m``."""

    theta: float = 0.0
    m: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise NormViolation("monomial degree must be >= 1")

    def to_dict(self):
        return {"variant": "rotation_monomial", "theta": self.theta, "m": self.m}


@dataclass(frozen=True)
class NormalizedPolynomial(SchwarzSpec):
    """``w(z) = a_1 z + ... + a_d z^d`` with ``sum |a_j| <= 1``."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(a) for a in self.coeffs))

    def to_dict(self):
        return {
            "variant": "normalized_polynomial",
            "coeffs": [[a.real, a.imag] for a in self.coeffs],
        }


@dataclass(frozen=True)
class Composed(SchwarzSpec):
    """``w = outer(inner(z))``."""

    outer: SchwarzSpec
    inner: SchwarzSpec

    def to_dict(self):
        return {"variant": "composed", "outer": self.outer.to_dict(), "inner": self.inner.to_dict()}


_NORM_SLACK = 1e-12


def schwarz_series(spec: SchwarzSpec, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    if isinstance(spec, RotationMonomial):
        c = np.zeros(order + 1, dtype=complex)
        if spec.m <= order:
            c[spec.m] = np.exp(1j * spec.theta)
        return TruncatedSeries(c)
    if isinstance(spec, NormalizedPolynomial):
        mass = sum(abs(a) for a in spec.coeffs)
        if mass > 1.0 + _NORM_SLACK:
            raise NormViolation(f"sum |a_j| = {mass:.17g} exceeds 1")
        return TruncatedSeries([0.0, *spec.coeffs], order)
    if isinstance(spec, Composed):
        return compose(schwarz_series(spec.outer, order), schwarz_series(spec.inner, order))
    raise TypeError(f"unknown Schwarz spec {spec!r}")


def build_member(params: ClassParams, spec: SchwarzSpec, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Coefficients of ``z / f`` for the member generated by ``spec``."""
    w = schwarz_series(spec, order)
    p = div(1.0 + params.A * w, 1.0 + params.B * w)
    return exp_series(-integrate_p_minus_one_over_t(p))


def rotate(b: TruncatedSeries, theta: float) -> TruncatedSeries:
    """``b_n -> exp(i n theta) b_n``."""
    n = np.arange(len(b))
    return TruncatedSeries(b.coeffs * np.exp(1j * n * theta))


def rotation_check(params: ClassParams, spec: SchwarzSpec, theta: float, r: float,
                   order: int = DEFAULT_ORDER) -> tuple[float, float]:
    b = build_member(params, spec, order)
    return area_integral(b, r).value, area_integral(rotate(b, theta), r).value


# Sampling -----------------------------------------------------------------

MAX_DEGREE = 8
_P_MONOMIAL = 0.25
_P_COMPOSED = 0.10


def _random_polynomial(rng, max_degree=MAX_DEGREE) -> NormalizedPolynomial:
    d = int(rng.integers(1, max_degree + 1))
    a = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    mass = rng.uniform(0.0, 1.0)
    a *= mass / np.abs(a).sum()
    return NormalizedPolynomial(tuple(complex(x) for x in a))


def draw_spec(rng) -> SchwarzSpec:
    """One draw from the sampling distribution.

    * 25%: ``exp(i theta) z^m``, ``theta ~ U[0, 2pi)``, ``m ~ U{1..8}``;
    * 10%: composition of two random polynomials of degree <= 3;
    * otherwise: a polynomial of degree ``d ~ U{1..8}`` whose complex
      Gaussian coefficients are rescaled to total mass ``sum|a_j| ~ U[0, 1]``.
    """
    u = rng.uniform()
    if u < _P_MONOMIAL:
        return RotationMonomial(float(rng.uniform(0.0, 2.0 * math.pi)), int(rng.integers(1, MAX_DEGREE + 1)))
    if u < _P_MONOMIAL + _P_COMPOSED:
        return Composed(_random_polynomial(rng, 3), _random_polynomial(rng, 3))
    return _random_polynomial(rng)


def sample_specs(n_samples: int, seed: int) -> list[SchwarzSpec]:
    """Sample ``0`` is always ``w(z) = z``; sample ``i`` uses its own
    generator seeded by ``(seed, i)`` so any subset can be drawn
    independently."""
    specs: list[SchwarzSpec] = [RotationMonomial(0.0, 1)]
    for i in range(1, n_samples):
        specs.append(draw_spec(np.random.default_rng([seed, i])))
    return specs[:n_samples]


@dataclass(frozen=True)
class SampleReport:
    n_samples: int
    r: float
    max_area: float
    extremal_value: float
    margin: float
    worst_spec: SchwarzSpec
    seed: int
    max_lemma1: float  # largest membership functional seen
    min_dominance_slack: float  # min over samples and N' of sum_c - sum_b
    max_tail: float
    max_order_used: int

    def to_dict(self) -> dict:
        return {
            "n_samples": self.n_samples,
            "r": self.r,
            "max_area": self.max_area,
            "extremal_value": self.extremal_value,
            "margin": self.margin,
            "worst_spec": self.worst_spec.to_dict(),
            "seed": self.seed,
            "max_lemma1": self.max_lemma1,
            "min_dominance_slack": self.min_dominance_slack,
            "max_tail": self.max_tail,
            "max_order_used": self.max_order_used,
        }


TAIL_REL = 1e-10


def _member_with_tail(params, spec, r, order, E):
    # doubles the order until the area tail is negligible against E
    while True:
        b = build_member(params, spec, order)
        res = area_integral(b, r)
        if res.tail_estimate <= TAIL_REL * E or order >= MAX_ORDER:
            return b, res, order
        order = min(2 * order, MAX_ORDER)


def verify_maximality(params: ClassParams, r: float, n_samples: int = 1000, seed: int = 42,
                      order: int = DEFAULT_ORDER, specs=None) -> SampleReport:
    """Sample members and compare their areas with the closed-form maximum.

    ``specs`` overrides the random draw (e.g. to force ``w(z) = z``).
    """
    r = _check_radius(r)
    if r > 0.99:
        raise InvalidRadius("sampling is limited to r <= 0.99; use the closed form at larger r")
    if specs is None:
        if n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        specs = sample_specs(n_samples, seed)
    specs = list(specs)
    E = extremal_area(params, r)
    c_full = extremal_reciprocal_series(params, MAX_ORDER)
    c_terms = area_terms(c_full, r)
    c_cum = np.cumsum(c_terms)

    max_area = -math.inf
    worst = specs[0]
    max_l1 = -math.inf
    min_slack = math.inf
    max_tail = 0.0
    max_used = order
    for spec in specs:
        b, res, used = _member_with_tail(params, spec, r, order, E)
        area = res.value
        if area > max_area:
            max_area, worst = area, spec
        max_l1 = max(max_l1, lemma1_functional(b, params))
        b_cum = np.cumsum(area_terms(b, r))
        min_slack = min(min_slack, float(np.min(c_cum[: len(b_cum)] - b_cum)))
        max_tail = max(max_tail, res.tail_estimate)
        max_used = max(max_used, used)
    return SampleReport(
        n_samples=len(specs), r=r, max_area=max_area, extremal_value=E,
        margin=E - max_area, worst_spec=worst, seed=seed,
        max_lemma1=max_l1, min_dominance_slack=min_slack,
        max_tail=max_tail, max_order_used=max_used,
    )
