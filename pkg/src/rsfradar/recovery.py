"""Subspace Pursuit recovery of a sparse scene from one CPI of measurements.

Support sets are plain sorted tuples of dictionary column indices; all
selection steps break magnitude ties toward the smallest column index so
that identical inputs always produce identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import MeasurementVector


class DegenerateSupportError(RuntimeError):
    """Least-squares step hit a rank-deficient column set; the caller should
    treat the trial as failed rather than regularize."""


@dataclass(frozen=True)
class RecoveryResult:
    """Output of one recovery run."""

    x_hat: np.ndarray           # sparse estimate, length P*Q
    support: tuple[int, ...]    # selected column indices, sorted
    residual_norm: float
    iterations: int
    converged: bool


def ls_project(columns: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Least-squares coefficients minimizing ||y - columns @ coef||_2.

    Solved as a least-squares problem (never by forming an explicit
    inverse).  Raises DegenerateSupportError when the columns are rank
    deficient, including the overcomplete case of more columns than rows.
    """
    coef, _, rank, _ = np.linalg.lstsq(columns, y, rcond=None)
    if rank < columns.shape[1]:
        raise DegenerateSupportError(
            f"column set of size {columns.shape[1]} has rank {rank}"
        )
    return coef


def _top_k(magnitudes: np.ndarray, k: int) -> np.ndarray:
    """Indices of the k largest entries; ties go to the smallest index."""
    return np.argsort(-magnitudes, kind="stable")[:k]


def subspace_pursuit(
    y: MeasurementVector | np.ndarray,
    dictionary: np.ndarray,
    K: int,
    max_iter: int = 50,
) -> RecoveryResult:
    """Recover a K-sparse coefficient vector by Subspace Pursuit.

    Each iteration correlates the dictionary with the current residual,
    merges the K strongest columns into the running support, solves least
    squares on the merged set, keeps the K largest coefficients, and
    recomputes the residual as the projection error onto the kept columns.
    Stops when the support repeats or after max_iter iterations.

    Raises ValueError for an infeasible sparsity level and propagates
    DegenerateSupportError from the least-squares steps.
    """
    y = np.asarray(y.y if isinstance(y, MeasurementVector) else y)
    n, n_cols = dictionary.shape
    if not 1 <= K <= n:
        raise ValueError(f"sparsity level {K} outside [1, {n}]")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")

    dict_h = dictionary.conj().T
    support: tuple[int, ...] = ()
    residual = y
    coef = np.zeros(0, dtype=complex)
    converged = False
    iterations = 0

    for _ in range(max_iter):
        iterations += 1
        correlations = dict_h @ residual
        candidates = _top_k(np.abs(correlations), K)
        merged = np.array(sorted(set(support) | set(candidates.tolist())))
        merged_coef = ls_project(dictionary[:, merged], y)
        kept = _top_k(np.abs(merged_coef), K)
        new_support = tuple(sorted(merged[kept].tolist()))
        coef = ls_project(dictionary[:, new_support], y)
        residual = y - dictionary[:, new_support] @ coef
        if new_support == support:
            converged = True
            break
        support = new_support

    x_hat = np.zeros(n_cols, dtype=complex)
    x_hat[list(support)] = coef
    return RecoveryResult(
        x_hat=x_hat,
        support=support,
        residual_norm=float(np.linalg.norm(residual)),
        iterations=iterations,
        converged=converged,
    )


def exact_support_match(result: RecoveryResult, truth) -> bool:
    """True iff the recovered support equals the true support as a set."""
    return set(result.support) == set(truth)
