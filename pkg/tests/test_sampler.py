import json
import math

import numpy as np
import pytest

from janowski.core import ClassParams, area_integral, extremal_reciprocal_series, lemma1_functional
from janowski.errors import InvalidRadius, NormViolation
from janowski.sampler import (
    Composed,
    NormalizedPolynomial,
    RotationMonomial,
    build_member,
    rotation_check,
    sample_specs,
    schwarz_series,
    verify_maximality,
)


class TestSchwarzSeries:
    def test_identity(self):
        np.testing.assert_array_equal(schwarz_series(RotationMonomial(0, 1), 1).coeffs, [0, 1])

    def test_polynomial(self):
        np.testing.assert_array_equal(schwarz_series(NormalizedPolynomial((0.5, 0.5)), 2).coeffs, [0, 0.5, 0.5])

    def test_composed(self):
        w = schwarz_series(Composed(RotationMonomial(0, 2), RotationMonomial(0, 3)), 8)
        expected = np.zeros(9)
        expected[6] = 1
        np.testing.assert_array_equal(w.coeffs, expected)

    def test_rotation(self):
        w = schwarz_series(RotationMonomial(math.pi / 2, 3), 5)
        assert w.coeffs[3] == pytest.approx(1j)

    def test_norm_violation(self):
        with pytest.raises(NormViolation):
            schwarz_series(NormalizedPolynomial((0.6, 0.5j)), 4)
        with pytest.raises(NormViolation):
            RotationMonomial(0, 0)

    def test_spec_dicts_are_json(self):
        spec = Composed(NormalizedPolynomial((0.25j,)), RotationMonomial(1.0, 2))
        assert json.loads(json.dumps(spec.to_dict()))["variant"] == "composed"


class TestBuildMember:
    @pytest.mark.parametrize("params", [ClassParams(1, -1), ClassParams(5 / 6, 0),
                                        ClassParams(2 / 3 + 0.5j, -0.5), ClassParams(-1.5, -1)], ids=str)
    def test_identity_gives_extremal(self, params):
        b = build_member(params, RotationMonomial(0, 1), 64)
        c = extremal_reciprocal_series(params, 64)
        np.testing.assert_allclose(b.coeffs, c.coeffs, rtol=1e-12, atol=1e-14)

    def test_zero_schwarz(self):
        b = build_member(ClassParams(0.4 + 0.2j, -0.3), NormalizedPolynomial(()), 10)
        np.testing.assert_allclose(b.coeffs, np.eye(11)[0], atol=1e-16)

    def test_square(self):
        b = build_member(ClassParams(1, -1), RotationMonomial(0, 2), 12)
        expected = np.zeros(13)
        expected[[0, 2]] = [1, -1]
        np.testing.assert_allclose(b.coeffs, expected, atol=1e-15)

    def test_membership(self):
        params = ClassParams(0.6 - 0.3j, -0.8)
        for spec in sample_specs(60, 3):
            b = build_member(params, spec, 128)
            assert lemma1_functional(b, params) <= 1e-8


class TestRotation:
    def test_zero_angle(self):
        a, b = rotation_check(ClassParams(1, -1), NormalizedPolynomial((0.3, 0.2j)), 0.0, 0.7)
        assert a == b

    def test_identity_spec(self):
        a, b = rotation_check(ClassParams(0.5, -0.5), RotationMonomial(0, 1), math.pi / 3, 0.8)
        assert b == pytest.approx(a, rel=1e-14)

    def test_random(self):
        rng = np.random.default_rng(5)
        params = ClassParams(0.7 + 0.7j, -0.4)
        for spec in sample_specs(20, 11):
            a, b = rotation_check(params, spec, rng.uniform(0, 2 * math.pi), 0.9)
            assert b == pytest.approx(a, rel=1e-12)


class TestSampling:
    def test_first_is_identity(self):
        assert sample_specs(5, 1)[0] == RotationMonomial(0.0, 1)
        assert len(sample_specs(1, 1)) == 1

    def test_per_index_seeds(self):
        # a longer run extends a shorter one without changing it
        assert sample_specs(40, 9)[:25] == sample_specs(25, 9)

    def test_forced_identity(self):
        params = ClassParams(1, -1)
        rep = verify_maximality(params, 0.6, specs=[RotationMonomial(0, 1)])
        assert abs(rep.margin) <= 1e-12 * rep.extremal_value + rep.max_tail

    def test_yamashita(self):
        r = 0.7
        rep = verify_maximality(ClassParams(0, -1), r, n_samples=200, seed=1)
        assert rep.max_area <= math.pi * r * r * (1 + 1e-12)

    def test_starlike_half(self):
        rep = verify_maximality(ClassParams(1, -1), 0.5, n_samples=1000, seed=42)
        assert rep.margin >= 0
        assert rep.min_dominance_slack >= -1e-9
        assert rep.max_lemma1 <= 1e-8

    def test_radius_cap(self):
        with pytest.raises(InvalidRadius):
            verify_maximality(ClassParams(1, -1), 0.995, n_samples=2)
        with pytest.raises(InvalidRadius):
            verify_maximality(ClassParams(1, -1), 0.0, n_samples=2)

    def test_deterministic_json(self):
        params = ClassParams(2 / 3 + 0.5j, -0.5)
        a = json.dumps(verify_maximality(params, 0.8, n_samples=50, seed=7).to_dict(), sort_keys=True)
        b = json.dumps(verify_maximality(params, 0.8, n_samples=50, seed=7).to_dict(), sort_keys=True)
        assert a == b

    def test_order_raised_when_tail_large(self):
        # slow coefficient decay at r = 0.99 forces a longer expansion
        rep = verify_maximality(ClassParams(0.5, -1), 0.99, specs=[RotationMonomial(0, 1)], order=32)
        assert rep.max_order_used > 32
        b = extremal_reciprocal_series(ClassParams(0.5, -1), rep.max_order_used)
        assert area_integral(b, 0.99).tail_estimate <= 1e-10 * rep.extremal_value
