"""Sequential code design: choose the next pulse's code by grid search.

The designer tracks the unnormalized sub-dictionary of the estimated
support together with its Gram matrix and the Gram's inverse.  Appending a
pulse adds a rank-one term to the Gram, so the inverse is maintained with
the Sherman-Morrison identity and refreshed from scratch if it drifts.

Two search objectives are supported for a candidate row a^H:

  mode 1 (exact)        maximize  a^H F^2 a / (1 + a^H F a),  F = Gram^-1,
                        equivalent to minimizing the trace of the updated
                        inverse Gram;
  mode 2 (approximate)  minimize  a^H Gram a, the only candidate-dependent
                        term of the squared-Gram objective.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import RadarParams, RangeDopplerGrid

# Max-abs drift of Gram @ inverse from identity before a full re-inversion.
REFRESH_TOL = 1e-8

# Objective values within this relative band of the optimum count as tied
# and resolve to the smallest candidate code.
TIE_RTOL = 1e-12


@dataclass(frozen=True)
class SequentialState:
    """Designer state after some number of pulses on a fixed support."""

    rows: np.ndarray        # pulses-so-far x |support| sub-dictionary
    gram: np.ndarray        # rows^H rows
    gram_inv: np.ndarray
    n_pulses: int

    @classmethod
    def from_columns(cls, columns: np.ndarray) -> "SequentialState":
        """Fresh state from the unnormalized support columns (pulses as rows)."""
        gram = columns.conj().T @ columns
        return cls(
            rows=columns,
            gram=gram,
            gram_inv=np.linalg.inv(gram),
            n_pulses=columns.shape[0],
        )


def candidate_row(
    c: float,
    support,
    grid: RangeDopplerGrid,
    params: RadarParams,
    pulse_index: int,
) -> np.ndarray:
    """Sub-dictionary row a pulse with code c would add at pulse_index."""
    support = list(support)
    p = grid.p_values[support]
    q = grid.q_values[support]
    return np.exp(1j * (p * c + q * pulse_index * (1.0 + c * params.B / params.f_c)))


def objective_mode1(row: np.ndarray, gram_inv: np.ndarray) -> float:
    """Exact-criterion score of a candidate row; larger is better."""
    a = row.conj()
    fa = gram_inv @ a
    numerator = float(np.real(np.vdot(fa, fa)))
    denominator = 1.0 + float(np.real(np.vdot(a, fa)))
    return numerator / denominator


def objective_mode2(row: np.ndarray, gram: np.ndarray) -> float:
    """Approximate-criterion score of a candidate row; smaller is better."""
    a = row.conj()
    return float(np.real(np.vdot(a, gram @ a)))


def _candidate_rows(
    codes: np.ndarray,
    support,
    grid: RangeDopplerGrid,
    params: RadarParams,
    pulse_index: int,
) -> np.ndarray:
    support = list(support)
    p = grid.p_values[support]
    q = grid.q_values[support]
    factors = 1.0 + codes * (params.B / params.f_c)
    return np.exp(1j * (np.outer(codes, p) + np.outer(factors, q) * pulse_index))


def _best_index(values: np.ndarray, maximize: bool) -> int:
    """First index attaining the optimum up to a tiny relative band, so that
    mathematically tied candidates resolve to the smallest code."""
    best = values.max() if maximize else values.min()
    band = TIE_RTOL * max(1.0, abs(best))
    good = values >= best - band if maximize else values <= best + band
    return int(np.argmax(good))


def design_next_code(
    state: SequentialState,
    mode: int,
    support,
    grid: RangeDopplerGrid,
    params: RadarParams,
    n_candidates: int = 1024,
) -> float:
    """Exhaustively search a uniform candidate grid on [0, 1] for the next
    code under the given mode's objective; ties go to the smallest code."""
    if mode not in (1, 2):
        raise ValueError("mode must be 1 or 2")
    if n_candidates < 2:
        raise ValueError("need at least two candidate codes")
    codes = np.linspace(0.0, 1.0, n_candidates)
    rows = _candidate_rows(codes, support, grid, params, state.n_pulses)
    a = rows.conj()
    if mode == 1:
        fa = a @ state.gram_inv.T
        numerator = np.sum(np.abs(fa) ** 2, axis=1)
        denominator = 1.0 + np.real(np.einsum("ci,ci->c", rows, fa))
        best = _best_index(numerator / denominator, maximize=True)
    else:
        values = np.real(np.einsum("ci,ij,cj->c", rows, state.gram, a))
        best = _best_index(values, maximize=False)
    return float(codes[best])


def update_state(state: SequentialState, row: np.ndarray) -> SequentialState:
    """Append a transmitted row: rank-one Gram update and Sherman-Morrison
    inverse update, with a full re-inversion if the inverse has drifted."""
    a = row.conj()
    fa = state.gram_inv @ a
    denominator = 1.0 + float(np.real(row @ fa))
    gram = state.gram + np.outer(a, row)
    gram_inv = state.gram_inv - np.outer(fa, fa.conj()) / denominator
    drift = np.max(np.abs(gram @ gram_inv - np.eye(gram.shape[0])))
    if drift > REFRESH_TOL:
        gram_inv = np.linalg.inv(gram)
    return SequentialState(
        rows=np.vstack([state.rows, row[None, :]]),
        gram=gram,
        gram_inv=gram_inv,
        n_pulses=state.n_pulses + 1,
    )
