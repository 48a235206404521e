"""Batch code design: steepest descent on the least-squares objective.

The box constraint c in [0, 1]^N is removed by relaxing each code to
(-delta, 1 + delta) and substituting c = 1/2 + (1 + 2*delta)/pi * arctan(z),
which maps the whole real line onto the relaxed interval.  Descent runs in
z-space with the analytic gradient of tr((A^H A)^2) obtained by the chain
rule through the reparameterization; a backtracking line search with an
Armijo sufficient-decrease test guarantees a non-increasing objective
trace.  The final codes are clipped back to [0, 1] and, when the radar has
a discrete synthesizer, quantized once after the descent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import CodeSequence, RadarParams, RangeDopplerGrid, quantize_codes, response_matrix


@dataclass(frozen=True)
class LineSearch:
    """Backtracking parameters for the Armijo sufficient-decrease test."""

    initial_step: float = 1.0
    shrink: float = 0.5
    sufficient_decrease: float = 1e-4
    max_backtracks: int = 30


@dataclass(frozen=True)
class BatchDesignConfig:
    delta: float = 0.1          # relaxation margin of the code interval
    max_iter: int = 100
    tol: float = 1e-8           # stop when the gradient infinity-norm drops below
    line_search: LineSearch = field(default_factory=LineSearch)

    def __post_init__(self):
        if self.delta <= 0:
            raise ValueError("relaxation margin must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


@dataclass(frozen=True)
class DesignTrace:
    """Convergence record of one descent run; objective_per_iter starts at
    the initial objective and is non-increasing."""

    objective_per_iter: list[float]
    final_codes: CodeSequence
    iterations_used: int


def code_to_z(c, delta: float):
    """Map codes in [0, 1] to the unconstrained variable z."""
    return np.tan(np.pi / (1.0 + 2.0 * delta) * (np.asarray(c, dtype=float) - 0.5))


def z_to_code(z, delta: float):
    """Inverse map; the image is the open interval (-delta, 1 + delta)."""
    return 0.5 + (1.0 + 2.0 * delta) / np.pi * np.arctan(np.asarray(z, dtype=float))


def _scaled_columns(
    z: np.ndarray,
    p: np.ndarray,
    q: np.ndarray,
    params: RadarParams,
    delta: float,
) -> np.ndarray:
    """1/sqrt(N)-scaled support columns as a function of z."""
    c = z_to_code(z, delta)
    return response_matrix(c, p, q, params) / np.sqrt(z.size)


def _ls_objective_of_z(
    z: np.ndarray, p: np.ndarray, q: np.ndarray, params: RadarParams, delta: float
) -> float:
    a = _scaled_columns(z, p, q, params, delta)
    gram = a.conj().T @ a
    return float(np.sum(np.abs(gram) ** 2))


def lb2_gradient(
    z: np.ndarray,
    support,
    grid: RangeDopplerGrid,
    params: RadarParams,
    delta: float,
) -> np.ndarray:
    """Gradient of tr((A^H A)^2) with respect to z.

    With D(n, l) = A(n, l) * j * (p_l + q_l * n * B / f_c) * dc_n/dz_n the
    gradient is 4 * Re diag(D (A^H A) A^H); dc/dz is the arctan derivative
    (1 + 2*delta) / (pi * (z^2 + 1)).
    """
    z = np.asarray(z, dtype=float)
    support = list(support)
    p = grid.p_values[support]
    q = grid.q_values[support]
    a = _scaled_columns(z, p, q, params, delta)
    gram = a.conj().T @ a
    n = np.arange(z.size)
    phase_rate = p[None, :] + np.outer(n, q) * (params.B / params.f_c)
    dc_dz = (1.0 + 2.0 * delta) / (np.pi * (z * z + 1.0))
    d = a * (1j * phase_rate) * dc_dz[:, None]
    return 4.0 * np.real(np.einsum("nl,nl->n", d @ gram, a.conj()))


def design_batch(
    init_codes: CodeSequence,
    support,
    grid: RangeDopplerGrid,
    params: RadarParams,
    config: BatchDesignConfig | None = None,
) -> DesignTrace:
    """Minimize the least-squares objective over codes by steepest descent.

    Starts from init_codes, iterates in z-space until the gradient
    infinity-norm falls below config.tol, the line search stalls, or
    config.max_iter accepted steps have been taken.  If no step is accepted
    the initial codes are returned unchanged.
    """
    if config is None:
        config = BatchDesignConfig()
    support = list(support)
    if not support:
        raise ValueError("support set is empty")
    p = grid.p_values[support]
    q = grid.q_values[support]
    delta = config.delta
    ls = config.line_search

    z = code_to_z(init_codes.values, delta)
    value = _ls_objective_of_z(z, p, q, params, delta)
    trace = [value]
    accepted = 0

    for _ in range(config.max_iter):
        gradient = lb2_gradient(z, support, grid, params, delta)
        if np.max(np.abs(gradient)) < config.tol:
            break
        gradient_sq = float(gradient @ gradient)
        step = ls.initial_step
        for _ in range(ls.max_backtracks):
            z_new = z - step * gradient
            value_new = _ls_objective_of_z(z_new, p, q, params, delta)
            if value_new <= value - ls.sufficient_decrease * step * gradient_sq:
                break
            step *= ls.shrink
        else:
            break  # no acceptable step along the descent direction
        z, value = z_new, value_new
        trace.append(value)
        accepted += 1

    if accepted == 0:
        final = init_codes
    else:
        final = CodeSequence(np.clip(z_to_code(z, delta), 0.0, 1.0))
    if params.delta_f > 0:
        final = quantize_codes(final, params)
    return DesignTrace(objective_per_iter=trace, final_codes=final, iterations_used=accepted)
