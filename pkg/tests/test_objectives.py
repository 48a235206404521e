import numpy as np
import pytest

from rsfradar import (
    CodeSequence,
    SubDictionary,
    add_noise,
    build_dictionary,
    crb_mse_bound,
    crb_objective,
    ls_objective,
    ls_project,
    sub_dictionary,
)

from conftest import rng


def two_column_sub(rho: float, n: int = 20) -> SubDictionary:
    """Unit-norm columns with real cross-correlation exactly rho."""
    first = np.zeros(n, dtype=complex)
    first[0] = 1.0
    second = np.zeros(n, dtype=complex)
    second[0] = rho
    second[1] = np.sqrt(1.0 - rho * rho)
    return SubDictionary(A=np.column_stack([first, second]), normalized=True)


def random_normalized_sub(params, grid, key, size) -> SubDictionary:
    codes = CodeSequence.random(params.N, rng(*key))
    support = rng(*key, 99).choice(grid.size, size=size, replace=False)
    return sub_dictionary(
        build_dictionary(grid, codes, params), sorted(support.tolist()), normalized=True
    )


class TestSubDictionary:
    def test_full_support_is_scaled_dictionary(self, params, grid):
        codes = CodeSequence.random(params.N, rng(50))
        dictionary = build_dictionary(grid, codes, params)
        sub = sub_dictionary(dictionary, range(grid.size), normalized=True)
        np.testing.assert_allclose(sub.A, dictionary / np.sqrt(params.N), atol=1e-15)

    def test_single_column_unit_norm(self, params, grid):
        codes = CodeSequence.random(params.N, rng(51))
        sub = sub_dictionary(build_dictionary(grid, codes, params), [7], normalized=True)
        assert np.linalg.norm(sub.A) == pytest.approx(1.0, abs=1e-12)

    def test_va_shape(self, params, grid, truth):
        codes = CodeSequence.random(params.N, rng(52))
        sub = sub_dictionary(build_dictionary(grid, codes, params), truth)
        assert sub.A.shape == (20, 4)

    def test_empty_support_rejected(self, params, grid):
        codes = CodeSequence.random(params.N, rng(53))
        with pytest.raises(ValueError):
            sub_dictionary(build_dictionary(grid, codes, params), [])

    def test_gram_diagonal_is_one(self, params, grid):
        for trial in range(10):
            sub = random_normalized_sub(params, grid, (54, trial), 5)
            gram = sub.A.conj().T @ sub.A
            np.testing.assert_allclose(np.diag(gram).real, 1.0, atol=1e-12)


class TestCrbObjective:
    def test_semi_unitary_reaches_floor(self, params, grid):
        # zero codes give orthogonal Doppler-ramp columns
        codes = CodeSequence(np.zeros(params.N))
        sub = sub_dictionary(build_dictionary(grid, codes, params), [0, 1, 2, 3])
        assert crb_objective(sub) == pytest.approx(4.0, abs=1e-10)

    @pytest.mark.parametrize("rho", [0.0, 0.25, 0.5, 0.9])
    def test_two_column_closed_form(self, rho):
        assert crb_objective(two_column_sub(rho)) == pytest.approx(
            2.0 / (1.0 - rho * rho), abs=1e-9
        )

    def test_singular_support_is_infinite(self):
        column = np.exp(1j * rng(55).uniform(0, 2 * np.pi, 20)) / np.sqrt(20)
        sub = SubDictionary(A=np.column_stack([column, column]), normalized=True)
        assert crb_objective(sub) == float("inf")

    def test_column_reordering_invariant(self, params, grid):
        sub = random_normalized_sub(params, grid, (56,), 4)
        shuffled = SubDictionary(A=sub.A[:, [2, 0, 3, 1]], normalized=True)
        assert crb_objective(shuffled) == pytest.approx(crb_objective(sub), rel=1e-12)


class TestLsObjective:
    def test_semi_unitary_reaches_floor(self, params, grid):
        codes = CodeSequence(np.zeros(params.N))
        sub = sub_dictionary(build_dictionary(grid, codes, params), [0, 1, 2, 3])
        assert ls_objective(sub) == pytest.approx(4.0, abs=1e-10)

    @pytest.mark.parametrize("rho", [0.0, 0.25, 0.5, 0.9])
    def test_two_column_closed_form(self, rho):
        assert ls_objective(two_column_sub(rho)) == pytest.approx(
            2.0 + 2.0 * rho * rho, abs=1e-9
        )

    def test_matches_eigenvalue_sum(self, params, grid):
        for trial in range(10):
            sub = random_normalized_sub(params, grid, (57, trial), 6)
            eigenvalues = np.linalg.eigvalsh(sub.A.conj().T @ sub.A)
            assert ls_objective(sub) == pytest.approx(
                float(np.sum(eigenvalues**2)), abs=1e-10
            )


class TestObjectiveFloors:
    def test_floor_and_trace_identity(self, params, grid):
        for trial in range(50):
            size = int(rng(58, trial).integers(1, 9))
            sub = random_normalized_sub(params, grid, (59, trial), size)
            gram = sub.A.conj().T @ sub.A
            assert np.trace(gram).real == pytest.approx(size, abs=1e-10)
            assert crb_objective(sub) >= size - 1e-9
            assert ls_objective(sub) >= size - 1e-9

    def test_equality_iff_orthogonal(self, params, grid):
        codes = CodeSequence(np.zeros(params.N))
        sub = sub_dictionary(build_dictionary(grid, codes, params), [0, 4, 9, 13])
        assert crb_objective(sub) == pytest.approx(4.0, abs=1e-10)
        # correlated pair sits strictly above the floor
        correlated = two_column_sub(0.3)
        assert crb_objective(correlated) > 2.0 + 1e-3
        assert ls_objective(correlated) > 2.0 + 1e-3


class TestCrbMseBound:
    def test_zero_noise(self, params, grid, truth):
        codes = CodeSequence.random(params.N, rng(60))
        sub = sub_dictionary(build_dictionary(grid, codes, params), truth, normalized=False)
        assert crb_mse_bound(sub, 0.0) == 0.0

    def test_orthogonal_columns(self, params, grid):
        codes = CodeSequence(np.zeros(params.N))
        sub = sub_dictionary(
            build_dictionary(grid, codes, params), [0, 1, 2], normalized=False
        )
        assert crb_mse_bound(sub, 0.5) == pytest.approx(0.5 * 3 / params.N, abs=1e-12)

    def test_scaling_identity(self, params, grid, truth):
        codes = CodeSequence.random(params.N, rng(61))
        dictionary = build_dictionary(grid, codes, params)
        plain = sub_dictionary(dictionary, truth, normalized=False)
        scaled = sub_dictionary(dictionary, truth, normalized=True)
        assert crb_mse_bound(plain, 2.0) == pytest.approx(
            2.0 * crb_objective(scaled) / params.N, abs=1e-10
        )

    def test_genie_estimator_attains_bound(self, params, grid, truth, x_true):
        # oracle least squares on the true support: empirical MSE matches
        # the bound within Monte-Carlo tolerance
        codes = CodeSequence.random(params.N, rng(62))
        dictionary = build_dictionary(grid, codes, params)
        columns = dictionary[:, list(truth)]
        sigma2 = 5e-4
        bound = crb_mse_bound(sub_dictionary(dictionary, truth, normalized=False), sigma2)
        trials = 20_000
        noise = add_noise(np.zeros(params.N * trials, complex), sigma2, rng(63)).y
        noise = noise.reshape(trials, params.N)
        pinv = np.linalg.pinv(columns)
        errors = noise @ pinv.T
        empirical = float(np.mean(np.sum(np.abs(errors) ** 2, axis=1)))
        assert empirical == pytest.approx(bound, rel=0.05)
