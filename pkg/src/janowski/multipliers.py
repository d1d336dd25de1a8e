"""
Multipliers that combine the truncated coefficient inequalities into the
partial-sum dominance ``sum_{k<=N} k|b_k|^2 r^2k <= sum_{k<=N} k|c_k|^2 r^2k``.

For each ``N`` the weights ``lambda_{k,N}`` solve the upper-triangular
system

    k = k^2 lambda_{k,N} + sum_{n=k+1}^{N} lambda_{n,N} (k^2 - |B - A - kB|^2 r^2),

``k = 1..N``. Writing ``U_k = 1 - |B - A - kB|^2 r^2 / k^2`` the system reads
``1/k = lambda_{k,N} + U_k sum_{n>k} lambda_{n,N}``, which is solved here by
back-substitution. The same numbers follow from the recurrence

    lambda_{k,N} = lambda_{k,N-1} - U_k / N * prod_{m=k+1}^{N-1} (1 - U_m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ClassParams
from .errors import IndexOutOfRange, NoConvergence, NonpositiveU


def _row_weights(params: ClassParams, r: float, k) -> np.ndarray:
    # |B - A - kB|^2 r^2, i.e. |k - phi|^2 B^2 r^2 (|A|^2 r^2 when B = 0)
    k = np.asarray(k, dtype=float)
    return np.abs(params.B - params.A - k * params.B) ** 2 * r * r


def compute_U(params: ClassParams, r: float, k):
    """``U_k = 1 - |1 - phi/k|^2 B^2 r^2`` (``1 - |A|^2 r^2 / k^2`` when ``B = 0``).

    Accepts a scalar or an array of ``k``.
    """
    k_arr = np.asarray(k, dtype=float)
    if np.any(k_arr < 1):
        raise IndexOutOfRange("k must be >= 1")
    u = 1.0 - _row_weights(params, r, k_arr) / (k_arr * k_arr)
    return float(u) if u.ndim == 0 else u


@dataclass(frozen=True)
class MultiplierTable:
    """``lambda_{k,N'}`` for ``1 <= k <= N' <= N``.

    ``lam[k-1, n-1]`` holds ``lambda_{k,n}`` (zero below the diagonal).
    When built with ``full=False`` only the last column is stored and
    ``lam`` has a single column.
    """

    params: ClassParams
    r: float
    N: int
    lam: np.ndarray
    U: np.ndarray
    lambda_limit: dict | None = None
    limit_tol: float | None = None

    @property
    def full(self) -> bool:
        return self.lam.shape[1] == self.N

    def column(self, n: int | None = None) -> np.ndarray:
        """``lambda_{1,n} .. lambda_{n,n}``."""
        if n is None:
            n = self.N
        if not 1 <= n <= self.N:
            raise IndexOutOfRange(f"column {n} outside 1..{self.N}")
        if self.full:
            return self.lam[:n, n - 1]
        if n != self.N:
            raise IndexOutOfRange("only the last column is stored in this table")
        return self.lam[:, 0]

    def has_column(self, n: int) -> bool:
        return 1 <= n <= self.N and (self.full or n == self.N)

    def with_limits(self, ks, tol: float = 1e-14) -> "MultiplierTable":
        lim = {int(k): lambda_limit(self.params, self.r, int(k), tol) for k in ks}
        return MultiplierTable(self.params, self.r, self.N, self.lam, self.U, lim, tol)


def _back_substitute(U: np.ndarray, n: int) -> np.ndarray:
    lam = np.empty(n)
    tail = 0.0  # sum_{j>k} lambda_{j,n}
    for k in range(n, 0, -1):
        lam[k - 1] = 1.0 / k - U[k - 1] * tail
        tail += lam[k - 1]
    return lam


def solve_lambda_system(params: ClassParams, r: float, N: int, full: bool = True) -> MultiplierTable:
    """Back-substitution of the triangular system for every ``N' <= N``.

    The determinant (Cramer) form overflows doubles for moderate ``N`` and
    is never evaluated.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    U = np.asarray(compute_U(params, r, np.arange(1, N + 1)), dtype=float).reshape(N)
    if full:
        lam = np.zeros((N, N))
        for n in range(1, N + 1):
            lam[:n, n - 1] = _back_substitute(U, n)
    else:
        lam = _back_substitute(U, N).reshape(N, 1)
    lam.flags.writeable = False
    U.flags.writeable = False
    return MultiplierTable(params, float(r), N, lam, U)


def lambda_recurrence_step(table: MultiplierTable, k: int, N: int) -> float:
    """``lambda_{k,N}`` from column ``N-1`` of ``table`` via the recurrence."""
    if not 1 <= k <= N - 1:
        raise IndexOutOfRange(f"need 1 <= k <= N - 1, got k = {k}, N = {N}")
    if not table.has_column(N - 1):
        raise IndexOutOfRange(f"column {N - 1} is not available in the table")
    U = table.U if len(table.U) >= N else compute_U(table.params, table.r, np.arange(1, N + 1))
    prev = table.column(N - 1)[k - 1]
    prod = float(np.prod(1.0 - U[k : N - 1]))  # m = k+1 .. N-1
    return float(prev - U[k - 1] * prod / N)


def recurrence_table(params: ClassParams, r: float, N: int) -> MultiplierTable:
    """All columns up to ``N`` built column by column from the recurrence."""
    U = np.asarray(compute_U(params, r, np.arange(1, N + 1)), dtype=float).reshape(N)
    lam = np.zeros((N, N))
    lam[0, 0] = 1.0
    table = MultiplierTable(params, float(r), N, lam, U)
    for n in range(2, N + 1):
        for k in range(1, n):
            lam[k - 1, n - 1] = lambda_recurrence_step(table, k, n)
        lam[n - 1, n - 1] = 1.0 / n
    lam.flags.writeable = False
    return table


def lambda_limit(params: ClassParams, r: float, k: int, tol: float = 1e-14,
                 max_terms: int = 1_000_000) -> float:
    """``lambda_k = 1/k - U_k sum_{n>k} (1/n) prod_{m=k+1}^{n-1} (1 - U_m)``.

    Summed until an increment drops below ``tol``.
    """
    if k < 1:
        raise IndexOutOfRange("k must be >= 1")
    Uk = compute_U(params, r, k)
    total = 0.0
    prod = 1.0
    n0 = k + 1
    chunk = 4096
    while n0 - k - 1 < max_terms:
        n = np.arange(n0, n0 + chunk, dtype=float)
        # factor (1 - U_m) for m = n-1, with m = k contributing nothing
        m = n - 1.0
        f = np.where(m > k, 1.0 - compute_U(params, r, np.maximum(m, 1.0)), 1.0)
        prods = prod * np.cumprod(f)
        inc = prods / n
        small = np.flatnonzero(inc < tol)
        if len(small):
            stop = int(small[0]) + 1
            total += float(inc[:stop].sum())
            return 1.0 / k - Uk * total
        if not np.all(np.isfinite(inc)):
            break
        total += float(inc.sum())
        prod = float(prods[-1])
        n0 += chunk
    raise NoConvergence(
        f"lambda_{k} did not converge within {max_terms} terms "
        f"(params={params}, r={r})"
    )


@dataclass(frozen=True)
class SBoundReport:
    k: int
    P: int
    S_kP: float
    R_kP: float
    bound: float  # 1 / (k U_k)
    bound_holds: bool  # S_kP + R_kP < bound
    monotone: bool  # 1/(n U_n) > 1/((n+1) U_{n+1}) for n = k..P-1


def s_bound_check(params: ClassParams, r: float, k: int, P: int) -> SBoundReport:
    """Evaluate the partial-sum split ``S_{k,P} + R_{k,P} < 1/(k U_k)``.

    ``S_{k,P} = sum_{n=k}^{P} (1/n) prod_{m=k}^{n-1} (1 - U_m)`` and
    ``R_{k,P} = prod_{m=k}^{P} (1 - U_m) / (P U_P)``.
    """
    if not 1 <= k <= P:
        raise IndexOutOfRange("need 1 <= k <= P")
    n = np.arange(k, P + 1)
    U = np.asarray(compute_U(params, r, n), dtype=float).reshape(-1)
    if np.any(U <= 0):
        bad = int(n[np.flatnonzero(U <= 0)[0]])
        raise NonpositiveU(f"U_{bad} <= 0; the bound needs U_n > 0 on {k}..{P}")
    one_minus = 1.0 - U
    prods = np.concatenate(([1.0], np.cumprod(one_minus)))  # prod_{m=k}^{n-1}, n = k..P+1
    S = float(np.sum(prods[:-1] / n))
    R = float(prods[-1] / (P * U[-1]))
    inv = 1.0 / (n * U)
    bound = float(inv[0])
    return SBoundReport(
        k=k, P=P, S_kP=S, R_kP=R, bound=bound,
        bound_holds=bool(S + R < bound),
        monotone=bool(np.all(inv[:-1] > inv[1:])),
    )


def weighted_sum_identity_check(table: MultiplierTable) -> float:
    """Largest residual of the defining system over all stored columns.

    Uses the raw coefficients ``k^2 - |B - A - kB|^2 r^2`` rather than
    ``U``, so it checks the solver independently.
    """
    params, r = table.params, table.r
    cols = range(1, table.N + 1) if table.full else [table.N]
    worst = 0.0
    for n in cols:
        lam = table.column(n)
        k = np.arange(1, n + 1, dtype=float)
        off = k * k - _row_weights(params, r, k)
        suffix = np.concatenate((np.cumsum(lam[::-1])[::-1][1:], [0.0]))  # sum_{j>k}
        res = np.abs(k - (k * k * lam + off * suffix))
        worst = max(worst, float(res.max()))
    return worst


def positivity_summary(table: MultiplierTable) -> dict:
    """Sign pattern of ``U`` and positivity of the stored multipliers."""
    U = table.U[: table.N]
    single = bool(np.all(U > 0) or np.all(U < 0))
    col = table.column()
    return {
        "U_single_signed": single,
        "U_sign": "positive" if np.all(U > 0) else "negative" if np.all(U < 0) else "mixed",
        "min_lambda": float(col.min()),
        "all_positive": bool(np.all(col > 0)),
    }


# -- published U_k reference values -------------------------------------------

TABLE3 = (
    # (k, A, B, r, printed U_k); B = None stands for "all"
    (1, 2 + 1j, None, 0.5, -5.25),
    (1, 1 + 1j, None, 0.4, 0.2),
    (2, -2 + 1j, -1.0, 0.5, 0.375),
    (2, -2 + 1j, -1.0, 0.8, -0.6),
)


def table3_comparison() -> list[dict]:
    """Recompute the printed ``U_k`` values.

    For ``k = 1`` the formula gives ``U_1 = 1 - |A|^2 r^2`` for every ``B``,
    which disagrees with the first two printed rows; they are flagged, not
    matched.
    """
    rows = []
    for k, A, B, r, printed in TABLE3:
        Bv = -1.0 if B is None else B
        val = compute_U(ClassParams(A, Bv), r, k)
        ok = math.isclose(val, printed, rel_tol=0, abs_tol=1e-12)
        rows.append({
            "k": k, "A": A, "B": "all" if B is None else B, "r": r,
            "printed": printed, "computed": val,
            "status": "matched" if ok else "discrepant",
            "note": "" if ok else "printed value does not follow from U_1 = 1 - |A|^2 r^2",
        })
    return rows
