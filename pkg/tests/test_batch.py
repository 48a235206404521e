import numpy as np
import pytest

from rsfradar import (
    BatchDesignConfig,
    CodeSequence,
    RadarParams,
    code_to_z,
    design_batch,
    lb2_gradient,
    quantize_codes,
    response_matrix,
    z_to_code,
)

from conftest import rng


def ls_objective_of_z(z, support, grid, params, delta):
    """Independent objective evaluation used by the finite-difference oracle."""
    c = z_to_code(z, delta)
    support = list(support)
    a = response_matrix(c, grid.p_values[support], grid.q_values[support], params)
    a = a / np.sqrt(z.size)
    gram = a.conj().T @ a
    return float(np.sum(np.abs(gram) ** 2))


def central_difference(z, support, grid, params, delta, step=1e-6):
    gradient = np.zeros_like(z)
    for i in range(z.size):
        forward = z.copy()
        forward[i] += step
        backward = z.copy()
        backward[i] -= step
        gradient[i] = (
            ls_objective_of_z(forward, support, grid, params, delta)
            - ls_objective_of_z(backward, support, grid, params, delta)
        ) / (2 * step)
    return gradient


class TestCodeTransforms:
    def test_center_maps_to_zero(self):
        assert code_to_z(0.5, 0.1) == pytest.approx(0.0, abs=1e-15)

    def test_endpoint_value(self):
        assert code_to_z(1.0, 0.1) == pytest.approx(2.0 + np.sqrt(3.0), abs=1e-12)

    def test_unit_z(self):
        assert z_to_code(1.0, 0.1) == pytest.approx(0.8, abs=1e-12)

    def test_zero_z(self):
        assert z_to_code(0.0, 0.1) == 0.5

    def test_asymptote(self):
        assert z_to_code(1e12, 0.1) == pytest.approx(1.1, abs=1e-6)

    def test_round_trip(self):
        c = rng(70).uniform(0, 1, 1000)
        np.testing.assert_allclose(z_to_code(code_to_z(c, 0.1), 0.1), c, atol=1e-12)


class TestGradient:
    def test_matches_finite_differences(self, params, grid, truth):
        worst = 0.0
        for trial in range(5):
            z = rng(71, trial).standard_normal(params.N)
            analytic = lb2_gradient(z, truth, grid, params, 0.1)
            numeric = central_difference(z, truth, grid, params, 0.1)
            worst = max(worst, np.max(np.abs(analytic - numeric)) / np.max(np.abs(numeric)))
        assert worst <= 1e-6

    def test_single_target_gradient_vanishes(self, params, grid):
        z = rng(72).standard_normal(params.N)
        gradient = lb2_gradient(z, [37], grid, params, 0.1)
        np.testing.assert_allclose(gradient, 0.0, atol=1e-10)

    def test_origin_cell_gradient_is_exactly_zero(self, params, grid):
        z = rng(73).standard_normal(params.N)
        gradient = lb2_gradient(z, [0], grid, params, 0.1)  # p = q = 0
        assert np.all(gradient == 0.0)


class TestDesignBatch:
    def test_single_target_returns_input(self, params, grid):
        init = CodeSequence.random(params.N, rng(74))
        trace = design_batch(init, [12], grid, params)
        assert trace.final_codes is init
        assert trace.iterations_used == 0

    def test_descent_is_monotone(self, params, grid, truth):
        for trial in range(5):
            init = CodeSequence.random(params.N, rng(75, trial))
            trace = design_batch(init, truth, grid, params)
            diffs = np.diff(trace.objective_per_iter)
            assert np.all(diffs <= 0.0)

    def test_final_codes_feasible(self, params, grid, truth):
        init = CodeSequence.random(params.N, rng(76))
        codes = design_batch(init, truth, grid, params).final_codes
        assert codes.values.min() >= 0.0 and codes.values.max() <= 1.0

    def test_objective_floor(self, params, grid, truth):
        init = CodeSequence.random(params.N, rng(77))
        trace = design_batch(init, truth, grid, params)
        assert trace.objective_per_iter[-1] >= len(truth) - 1e-9

    def test_trace_starts_at_initial_objective(self, params, grid, truth):
        init = CodeSequence.random(params.N, rng(78))
        trace = design_batch(init, truth, grid, params)
        z0 = code_to_z(init.values, 0.1)
        assert trace.objective_per_iter[0] == pytest.approx(
            ls_objective_of_z(z0, truth, grid, params, 0.1), abs=1e-12
        )

    def test_quantization_applied_after_descent(self, grid, truth):
        radar = RadarParams(delta_f=2e6)  # step 0.05
        init = CodeSequence.random(radar.N, rng(79))
        codes = design_batch(init, truth, grid, radar).final_codes
        assert quantize_codes(codes, radar).values == pytest.approx(codes.values)

    def test_iteration_cap_respected(self, params, grid, truth):
        init = CodeSequence.random(params.N, rng(80))
        config = BatchDesignConfig(max_iter=7)
        trace = design_batch(init, truth, grid, params, config)
        assert trace.iterations_used <= 7
        assert len(trace.objective_per_iter) == trace.iterations_used + 1

    def test_config_validation(self):
        with pytest.raises(ValueError):
            BatchDesignConfig(delta=0.0)
        with pytest.raises(ValueError):
            BatchDesignConfig(max_iter=0)

    def test_empty_support_rejected(self, params, grid):
        init = CodeSequence.random(params.N, rng(81))
        with pytest.raises(ValueError):
            design_batch(init, [], grid, params)
