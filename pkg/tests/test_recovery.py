import numpy as np
import pytest

from rsfradar import (
    CodeSequence,
    DegenerateSupportError,
    add_noise,
    build_dictionary,
    design_batch,
    exact_support_match,
    ls_project,
    scene_to_sparse_vector,
    subspace_pursuit,
)

from conftest import rng


class TestLsProject:
    def test_constant_column(self):
        columns = np.ones((20, 1), dtype=complex)
        coef = ls_project(columns, np.ones(20, dtype=complex))
        assert coef[0] == pytest.approx(1.0, abs=1e-12)

    def test_orthogonal_columns_decouple(self, params, grid):
        # zero codes make the columns pure Doppler ramps, i.e. orthogonal
        codes = CodeSequence(np.zeros(params.N))
        dictionary = build_dictionary(grid, codes, params)
        support = [0, 5, 11]  # distinct Doppler cells in the first range row
        columns = dictionary[:, support]
        y = rng(30).standard_normal(20) + 1j * rng(31).standard_normal(20)
        coef = ls_project(columns, y)
        expected = columns.conj().T @ y / params.N
        np.testing.assert_allclose(coef, expected, atol=1e-10)

    def test_matches_normal_equations(self, params, grid):
        codes = CodeSequence.random(params.N, rng(32))
        columns = build_dictionary(grid, codes, params)[:, [3, 17, 42, 66]]
        y = rng(33).standard_normal(20) + 1j * rng(33, 1).standard_normal(20)
        coef = ls_project(columns, y)
        gram = columns.conj().T @ columns
        expected = np.linalg.solve(gram, columns.conj().T @ y)
        np.testing.assert_allclose(coef, expected, atol=1e-10)

    def test_rank_deficient_rejected(self):
        column = np.exp(1j * rng(34).uniform(0, 2 * np.pi, 20))
        with pytest.raises(DegenerateSupportError):
            ls_project(np.column_stack([column, column]), np.ones(20, complex))


class TestSubspacePursuit:
    def test_zero_measurement(self, params, grid):
        codes = CodeSequence.random(params.N, rng(35))
        dictionary = build_dictionary(grid, codes, params)
        result = subspace_pursuit(np.zeros(params.N, complex), dictionary, 4)
        assert np.count_nonzero(result.x_hat) == 0
        assert result.residual_norm == 0.0
        # all-zero correlations tie everywhere; smallest indices win
        assert result.support == (0, 1, 2, 3)

    def test_single_target_noiseless(self, params, grid):
        codes = CodeSequence.random(params.N, rng(36))
        dictionary = build_dictionary(grid, codes, params)
        result = subspace_pursuit(dictionary[:, 0], dictionary, 1)
        assert result.support == (0,)
        assert result.x_hat[0] == pytest.approx(1.0, abs=1e-10)
        assert result.converged

    def test_va_noiseless_with_designed_codes(self, params, grid, va_scene, truth, x_true):
        init = CodeSequence.random(params.N, rng(37))
        designed = design_batch(init, truth, grid, params).final_codes
        dictionary = build_dictionary(grid, designed, params)
        result = subspace_pursuit(dictionary @ x_true, dictionary, 4)
        assert result.support == truth
        assert result.residual_norm <= 1e-10
        assert np.linalg.norm(result.x_hat - x_true) <= 1e-8

    def test_invalid_sparsity(self, params, grid):
        codes = CodeSequence.random(params.N, rng(38))
        dictionary = build_dictionary(grid, codes, params)
        with pytest.raises(ValueError):
            subspace_pursuit(np.ones(params.N, complex), dictionary, 0)
        with pytest.raises(ValueError):
            subspace_pursuit(np.ones(params.N, complex), dictionary, params.N + 1)

    def test_deterministic(self, params, grid, x_true):
        codes = CodeSequence.random(params.N, rng(39))
        dictionary = build_dictionary(grid, codes, params)
        y = add_noise(dictionary @ x_true, 0.05, rng(40)).y
        a = subspace_pursuit(y, dictionary, 4)
        b = subspace_pursuit(y, dictionary, 4)
        assert a.support == b.support
        np.testing.assert_array_equal(a.x_hat, b.x_hat)
        assert a.iterations == b.iterations

    def test_accepts_measurement_vector(self, params, grid, x_true):
        codes = CodeSequence.random(params.N, rng(41))
        dictionary = build_dictionary(grid, codes, params)
        mv = add_noise(dictionary @ x_true, 1e-3, rng(42))
        result = subspace_pursuit(mv, dictionary, 4)
        assert len(result.support) == 4

    def test_residual_orthogonal_to_support(self, params, grid, x_true):
        for trial in range(20):
            codes = CodeSequence.random(params.N, rng(43, trial))
            dictionary = build_dictionary(grid, codes, params)
            y = add_noise(dictionary @ x_true, 0.05, rng(44, trial)).y
            result = subspace_pursuit(y, dictionary, 4)
            residual = y - dictionary @ result.x_hat
            projections = dictionary[:, list(result.support)].conj().T @ residual
            assert np.max(np.abs(projections)) < 1e-10
            assert result.residual_norm <= np.linalg.norm(y)

    def test_true_support_projection_bounded_by_noise(self, params, grid, truth, x_true):
        for trial in range(20):
            codes = CodeSequence.random(params.N, rng(45, trial))
            dictionary = build_dictionary(grid, codes, params)
            clean = dictionary @ x_true
            noise = add_noise(np.zeros(params.N, complex), 0.1, rng(46, trial)).y
            y = clean + noise
            columns = dictionary[:, list(truth)]
            residual = y - columns @ ls_project(columns, y)
            assert np.linalg.norm(residual) <= np.linalg.norm(noise) + 1e-10


class TestExactSupportMatch:
    def test_identical(self, params, grid, x_true, truth):
        codes = CodeSequence.random(params.N, rng(47))
        dictionary = build_dictionary(grid, codes, params)
        result = subspace_pursuit(dictionary @ x_true, dictionary, 4)
        assert exact_support_match(result, truth)

    def test_one_index_off(self, params, grid, x_true, truth):
        codes = CodeSequence.random(params.N, rng(48))
        dictionary = build_dictionary(grid, codes, params)
        result = subspace_pursuit(dictionary @ x_true, dictionary, 4)
        wrong = set(truth) - {truth[0]} | {79 if 79 not in truth else 78}
        assert not exact_support_match(result, wrong)
