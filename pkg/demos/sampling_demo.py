"""
Random members never beat the extremal area
===========================================

Each member comes from a Schwarz function ``w`` through
``z f'/f = (1 + A w) / (1 + B w)``. Areas of ``z/f`` are compared with
the closed-form maximum.
"""

from janowski import ClassParams, area_integral, extremal_area, verify_maximality
from janowski.sampler import NormalizedPolynomial, RotationMonomial, build_member, sample_specs

params = ClassParams(1, -1)
r = 0.6

print("w(z) = z:", area_integral(build_member(params, RotationMonomial(0, 1)), r).value)
print("w(z) = z^2:", area_integral(build_member(params, RotationMonomial(0, 2)), r).value)
print("w(z) = 0.5z + 0.3iz^3:", area_integral(build_member(params, NormalizedPolynomial((0.5, 0, 0.3j))), r).value)
print("closed form:", extremal_area(params, r))

print("a few random draws:")
for spec in sample_specs(4, seed=42)[1:]:
    print("  ", spec)

report = verify_maximality(params, r, n_samples=500, seed=42)
print(f"margin = {report.margin:.3e}, worst = {report.worst_spec}")
print(f"largest coefficient functional = {report.max_lemma1:.3e}")
print(f"smallest partial-sum slack = {report.min_dominance_slack:.3e}")
