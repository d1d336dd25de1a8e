"""
Multipliers behind the partial-sum inequality
=============================================

Solves the triangular systems for ``lambda_{k,N}``, checks them against
the column recurrence, and looks at the limits ``lambda_k``.
"""

import numpy as np

from janowski import ClassParams
from janowski.multipliers import (
    compute_U,
    lambda_limit,
    positivity_summary,
    recurrence_table,
    s_bound_check,
    solve_lambda_system,
    table3_comparison,
    weighted_sum_identity_check,
)

params, r = ClassParams(1, -1), 0.5
table = solve_lambda_system(params, r, 30)
print("U_1..U_5:", np.round(table.U[:5], 6))
print("lambda_{k,30}, k = 1..5:", np.round(table.column()[:5], 8))
print("residual:", weighted_sum_identity_check(table))
print("recurrence vs solve:", np.abs(recurrence_table(params, r, 30).lam - table.lam).max())
print("positivity:", positivity_summary(table))
print("lambda_1 limit:", lambda_limit(params, r, 1))
print(s_bound_check(ClassParams(0.7, -1), r, 1, 50))

# A sequence with a negative U_2 pushes lambda_2 above 1/2.
p = ClassParams(-2 + 1j, -1)
print("U_2 at r = 0.8:", compute_U(p, 0.8, 2), " lambda_2 =", lambda_limit(p, 0.8, 2))

for row in table3_comparison():
    print(row["k"], row["A"], row["r"], row["printed"], round(row["computed"], 12), row["status"])
