"""
Truncated complex power series about the origin.

A :class:`TruncatedSeries` of order ``N`` holds the coefficients
``c_0, ..., c_N`` of an analytic germ. Coefficients beyond ``N`` are
unknown, not zero, so every binary operation returns a result whose order
is the smaller of the two operand orders.

    >>> s = TruncatedSeries([1, -1], order=4)
    >>> (1 / s).coeffs.real
    array([1., 1., 1., 1., 1.])

All recurrences are O(N^2) and vectorised over the inner sums.
"""

from __future__ import annotations

import cmath
from numbers import Number

import numpy as np

from .errors import BranchCutViolation, NotNormalized, ZeroConstantTerm

DEFAULT_ORDER = 256
MAX_ORDER = 4096


class TruncatedSeries:
    """Immutable power series ``c_0 + c_1 z + ... + c_N z^N + O(z^(N+1))``.

    Parameters
    ----------
    coeffs : sequence of complex
        Leading coefficients. Missing coefficients up to ``order`` are
        filled with zeros; extra ones are dropped.
    order : int, optional
        Truncation order ``N``. Defaults to ``len(coeffs) - 1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs, order: int | None = None):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        if c.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if order is None:
            order = len(c) - 1
        order = int(order)
        if order < 0:
            raise ValueError("order must be non-negative")
        if order > MAX_ORDER:
            raise ValueError(f"order {order} exceeds the hard cap {MAX_ORDER}")
        out = np.zeros(order + 1, dtype=complex)
        n = min(len(c), order + 1)
        out[:n] = c[:n]
        out.flags.writeable = False
        self._c = out

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    def __len__(self):
        return len(self._c)

    def __getitem__(self, n):
        return self._c[n]

    def __repr__(self):
        return f"TruncatedSeries({np.array2string(self._c, precision=6)}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and np.array_equal(self._c, other._c)

    __hash__ = None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return TruncatedSeries(self._c, order)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, Number):
            return TruncatedSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries(self._c * other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries(self._c / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(other, self)

    def __call__(self, z):
        return eval_at(self, z)


def _orders(s: TruncatedSeries, t: TruncatedSeries) -> int:
    return min(s.order, t.order)


def add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    n = _orders(s, t)
    return TruncatedSeries(s.coeffs[: n + 1] + t.coeffs[: n + 1])


def mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order."""
    n = _orders(s, t)
    prod = np.convolve(s.coeffs[: n + 1], t.coeffs[: n + 1])
    return TruncatedSeries(prod[: n + 1])


def div(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Return ``r`` with ``t * r == s`` to the smaller order."""
    n = _orders(s, t)
    a = s.coeffs
    b = t.coeffs
    if b[0] == 0:
        raise ZeroConstantTerm("divisor has a zero constant term")
    r = np.zeros(n + 1, dtype=complex)
    inv0 = 1.0 / b[0]
    r[0] = a[0] * inv0
    for k in range(1, n + 1):
        # b[1..k] against r[k-1..0]
        r[k] = (a[k] - np.dot(b[1 : k + 1], r[k - 1 :: -1])) * inv0
    return TruncatedSeries(r)


def exp_series(s: TruncatedSeries) -> TruncatedSeries:
    """exp of a series through ``E' = s' E``."""
    n = s.order
    c = s.coeffs
    kc = np.arange(n + 1) * c  # k * c_k
    e = np.zeros(n + 1, dtype=complex)
    e[0] = cmath.exp(c[0])
    for m in range(1, n + 1):
        e[m] = np.dot(kc[1 : m + 1], e[m - 1 :: -1]) / m
    return TruncatedSeries(e)


def _check_branch(c0: complex) -> None:
    if c0.imag == 0 and c0.real <= 0:
        raise BranchCutViolation(
            f"constant term {c0} lies on the principal branch cut (-inf, 0]"
        )


def log_series(s: TruncatedSeries) -> TruncatedSeries:
    """Principal logarithm of a series; the constant term must avoid (-inf, 0]."""
    n = s.order
    c = s.coeffs
    _check_branch(complex(c[0]))
    lg = np.zeros(n + 1, dtype=complex)
    lg[0] = cmath.log(c[0])
    kl = np.zeros(n + 1, dtype=complex)  # k * l_k
    for m in range(1, n + 1):
        acc = m * c[m] - np.dot(kl[1:m], c[m - 1 : 0 : -1])
        kl[m] = acc / c[0]
        lg[m] = kl[m] / m
    return TruncatedSeries(lg)


def pow_complex(s: TruncatedSeries, exponent: complex) -> TruncatedSeries:
    """Principal power ``s ** exponent``.

    Uses the J.C.P. Miller recurrence

        n c_0 p_n = sum_{k=1}^{n} (exponent * k - (n - k)) c_k p_{n-k},

    which equals ``exp(exponent * log(s))`` but avoids the round-off
    amplification of going through the logarithm. For ``s = 1 + Bz`` it
    reduces to the Pochhammer product term by term.
    """
    n = s.order
    c = s.coeffs
    _check_branch(complex(c[0]))
    a = complex(exponent)
    p = np.zeros(n + 1, dtype=complex)
    p[0] = cmath.exp(a * cmath.log(c[0])) if c[0] != 1 else 1.0
    ks = np.arange(n + 1)
    inv0 = 1.0 / c[0]
    for m in range(1, n + 1):
        k = ks[1 : m + 1]
        w = a * k - (m - k)
        p[m] = np.dot(w * c[1 : m + 1], p[m - 1 :: -1]) * inv0 / m
    return TruncatedSeries(p)


def integrate_p_minus_one_over_t(p: TruncatedSeries) -> TruncatedSeries:
    """Series of ``int_0^z (p(t) - 1) / t dt`` for ``p(0) = 1``."""
    c = p.coeffs
    if abs(c[0] - 1) > 1e-14:
        raise NotNormalized(f"p(0) = {c[0]} but must equal 1")
    out = np.zeros_like(c)
    out[1:] = c[1:] / np.arange(1, len(c))
    return TruncatedSeries(out)


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Substitution ``outer(inner(z))`` for ``inner(0) = 0`` (Horner in series)."""
    if inner.coeffs[0] != 0:
        raise ValueError("inner series must vanish at the origin")
    n = _orders(outer, inner)
    inner = inner.truncate(n)
    nz = np.flatnonzero(outer.coeffs[: n + 1])
    top = int(nz[-1]) if len(nz) else 0
    acc = TruncatedSeries([outer.coeffs[top]], n)
    for k in range(top - 1, -1, -1):
        acc = mul(acc, inner) + outer.coeffs[k]
    return acc


def eval_at(s: TruncatedSeries, z: complex) -> complex:
    """Horner evaluation of the truncated polynomial at ``z``."""
    acc = 0j
    for c in s.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc)


def monomial(k: int, order: int, coeff: complex = 1.0) -> TruncatedSeries:
    c = np.zeros(order + 1, dtype=complex)
    if k <= order:
        c[k] = coeff
    return TruncatedSeries(c)
