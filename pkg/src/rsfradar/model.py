"""Signal model for random stepped frequency (RSF) radar.

A coherent processing interval (CPI) consists of N monotone pulses whose
carrier frequencies are offset from the center frequency by per-pulse
frequency-modulation codes c_n in [0, 1], i.e. f_n = f_c + c_n * B.  Within
one coarse-range bin the echo of a moving point target reduces to a
two-parameter phase signature per pulse,

    exp(j * (p * c_n + q * n * c'_n)),    c'_n = 1 + c_n * B / f_c,

where p is the range phase of the target and q its Doppler phase.  Targets
are discretized on a grid of P range cells by Q Doppler cells, so the
noise-free CPI measurement is a sparse combination of unit-modulus
dictionary columns.  This module holds the radar parameters, the grid, code
sequences, dictionary synthesis, echo generation and noise injection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class RadarParams:
    """Physical constants of the radar.

    Defaults describe an X-band configuration with a 40 MHz synthetic
    bandwidth and 20 pulses per CPI; the product B * T_p = 4 gives four
    high-range-resolution cells per coarse-range bin.
    """

    f_c: float = 10e9       # carrier frequency (Hz)
    B: float = 40e6         # synthetic bandwidth (Hz)
    T: float = 100e-6       # pulse repetition interval (s)
    T_p: float = 0.1e-6     # pulse duration (s)
    N: int = 20             # pulses per CPI
    delta_f: float = 0.0    # frequency step size (Hz); 0 = continuous codes

    def __post_init__(self):
        if self.f_c <= 0:
            raise ValueError("carrier frequency must be positive")
        if self.B <= 0:
            raise ValueError("bandwidth must be positive")
        if not 0 < self.T_p <= self.T:
            raise ValueError("need 0 < T_p <= T")
        if self.N < 1:
            raise ValueError("need at least one pulse per CPI")
        if self.delta_f < 0:
            raise ValueError("frequency step size cannot be negative")
        if self.delta_f > 0 and self.delta_f >= 1.0 / self.T_p:
            # Larger steps alias the high-resolution profile (ghost images).
            raise ValueError("frequency step size must be below 1/T_p")


@dataclass(frozen=True)
class RangeDopplerGrid:
    """Discretized range-Doppler search space.

    Cell (m, n) carries range phase m * delta_p and Doppler phase
    n * delta_q and maps to dictionary column l = m * Q + n (row-major).
    """

    P: int                  # range cells
    Q: int                  # Doppler cells
    delta_p: float          # range-phase step (rad)
    delta_q: float          # Doppler-phase step (rad)

    def __post_init__(self):
        if self.P < 1 or self.Q < 1:
            raise ValueError("grid needs at least one cell per axis")

    @property
    def size(self) -> int:
        return self.P * self.Q

    @cached_property
    def p_values(self) -> np.ndarray:
        """Range phase of every column, length P*Q."""
        p = (np.arange(self.size) // self.Q) * self.delta_p
        p.flags.writeable = False
        return p

    @cached_property
    def q_values(self) -> np.ndarray:
        """Doppler phase of every column, length P*Q."""
        q = (np.arange(self.size) % self.Q) * self.delta_q
        q.flags.writeable = False
        return q

    def column(self, m: int, n: int) -> int:
        """Column index of cell (m, n)."""
        if not (0 <= m < self.P and 0 <= n < self.Q):
            raise IndexError(f"cell ({m}, {n}) outside {self.P}x{self.Q} grid")
        return m * self.Q + n

    def cell(self, l: int) -> tuple[int, int]:
        """Inverse of column(): (m, n) of column l."""
        if not 0 <= l < self.size:
            raise IndexError(f"column {l} outside grid of size {self.size}")
        return divmod(l, self.Q)

    def locate(self, p: float, q: float) -> int:
        """Column index of the cell with phases (p, q).

        Raises ValueError if (p, q) does not coincide with a grid cell to
        within 1e-9 of a phase step; off-grid targets are rejected rather
        than snapped.
        """
        m = int(round(p / self.delta_p))
        n = int(round(q / self.delta_q)) if self.delta_q > 0 else 0
        on_grid = (
            0 <= m < self.P
            and 0 <= n < self.Q
            and abs(p - m * self.delta_p) <= 1e-9 * self.delta_p
            and abs(q - n * self.delta_q) <= 1e-9 * max(self.delta_q, 1.0)
        )
        if not on_grid:
            raise ValueError(f"target phases ({p}, {q}) lie off the grid")
        return self.column(m, n)


def make_grid(params: RadarParams, P: int, Q: int) -> RangeDopplerGrid:
    """Build the standard grid: P range cells of width c/(2B) spanning one
    coarse-range bin, Q Doppler cells spanning one unambiguous interval."""
    return RangeDopplerGrid(
        P=P,
        Q=Q,
        delta_p=2.0 * np.pi * params.B * params.T_p / P,
        delta_q=2.0 * np.pi / Q,
    )


@dataclass(frozen=True)
class CodeSequence:
    """Per-pulse frequency-modulation codes, each in [0, 1]."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("codes must form a non-empty 1-D vector")
        if not np.all(np.isfinite(v)):
            raise ValueError("codes must be finite")
        if v.min() < 0.0 or v.max() > 1.0:
            raise ValueError("codes must lie in [0, 1]")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.values.size

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "CodeSequence":
        """n codes drawn i.i.d. uniform on [0, 1)."""
        return cls(rng.uniform(0.0, 1.0, n))


@dataclass(frozen=True)
class Target:
    """Point scatterer: complex amplitude and (range, Doppler) phases."""

    gamma: complex
    p: float    # range phase (rad)
    q: float    # Doppler phase (rad)


@dataclass(frozen=True)
class TargetScene:
    """A collection of point targets, each on a distinct grid cell."""

    targets: tuple[Target, ...]

    def __init__(self, targets):
        object.__setattr__(self, "targets", tuple(targets))

    @property
    def K(self) -> int:
        return len(self.targets)

    def column_indices(self, grid: RangeDopplerGrid) -> list[int]:
        """Dictionary column of every target; rejects off-grid targets and
        targets sharing a cell."""
        cols = [grid.locate(t.p, t.q) for t in self.targets]
        if len(set(cols)) != len(cols):
            raise ValueError("two targets share a grid cell")
        return cols


@dataclass(frozen=True)
class MeasurementVector:
    """One CPI of received samples and the noise variance that produced it."""

    y: np.ndarray
    sigma2: float


def code_factor(c, params: RadarParams):
    """Carrier scale factor c' = 1 + c * B / f_c of a code value (scalar or
    array); lies in [1, 1 + B/f_c]."""
    return 1.0 + np.asarray(c, dtype=float) * (params.B / params.f_c)


def response_matrix(
    c: np.ndarray,
    p: np.ndarray,
    q: np.ndarray,
    params: RadarParams,
    pulse_indices: np.ndarray | None = None,
) -> np.ndarray:
    """Unit-modulus pulse responses for raw code values.

    Entry (i, l) is exp(j * (p_l * c_i + q_l * n_i * c'_i)) where n_i is the
    pulse index of row i (defaults to 0, 1, ...).  This is the single source
    of the phase convention; the dictionary, echoes and candidate rows are
    all built from it.  Accepts any real code values, which the batch
    designer needs while iterating in its relaxed domain.
    """
    c = np.asarray(c, dtype=float)
    n = np.arange(c.size) if pulse_indices is None else np.asarray(pulse_indices)
    cp = 1.0 + c * (params.B / params.f_c)
    phase = np.outer(c, p) + np.outer(n * cp, q)
    return np.exp(1j * phase)


def atom(l: int, grid: RangeDopplerGrid, codes: CodeSequence, params: RadarParams) -> np.ndarray:
    """Noise-free echo signature of a unit target at grid column l."""
    if not 0 <= l < grid.size:
        raise IndexError(f"column {l} outside grid of size {grid.size}")
    return response_matrix(
        codes.values, grid.p_values[l : l + 1], grid.q_values[l : l + 1], params
    ).ravel()


def build_dictionary(
    grid: RangeDopplerGrid, codes: CodeSequence, params: RadarParams
) -> np.ndarray:
    """Dictionary matrix, one unit-modulus column per grid cell (N x P*Q)."""
    return response_matrix(codes.values, grid.p_values, grid.q_values, params)


def scene_to_sparse_vector(scene: TargetScene, grid: RangeDopplerGrid) -> np.ndarray:
    """Sparse coefficient vector of the scene: gamma_k at the target cells,
    zero elsewhere (length P*Q)."""
    x = np.zeros(grid.size, dtype=complex)
    for target, col in zip(scene.targets, scene.column_indices(grid)):
        x[col] = target.gamma
    return x


def synthesize_echo(
    scene: TargetScene,
    codes: CodeSequence,
    grid: RangeDopplerGrid,
    params: RadarParams,
) -> np.ndarray:
    """Noise-free CPI measurement of the scene: sum of gamma_k times the
    response column of each target's cell."""
    if scene.K == 0:
        return np.zeros(len(codes), dtype=complex)
    cols = scene.column_indices(grid)
    gammas = np.array([t.gamma for t in scene.targets])
    columns = response_matrix(
        codes.values, grid.p_values[cols], grid.q_values[cols], params
    )
    return columns @ gammas


def add_noise(
    y_clean: np.ndarray, sigma2: float, rng: np.random.Generator
) -> MeasurementVector:
    """Add circularly-symmetric complex Gaussian noise of per-element
    variance sigma2 (real and imaginary parts each carry sigma2 / 2)."""
    if sigma2 < 0:
        raise ValueError("noise variance cannot be negative")
    n = y_clean.size
    scale = np.sqrt(sigma2 / 2.0)
    w = scale * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
    return MeasurementVector(y=y_clean + w, sigma2=sigma2)


def quantize_codes(codes: CodeSequence, params: RadarParams) -> CodeSequence:
    """Snap each code to the nearest multiple of delta_f / B.

    Realizable carrier offsets are integer multiples d * delta_f with
    0 <= d <= floor(B / delta_f); delta_f = 0 means a continuous synthesizer
    and returns the input unchanged.
    """
    if params.delta_f == 0.0:
        return codes
    step = params.delta_f / params.B
    d_max = int(np.floor(params.B / params.delta_f))
    d = np.clip(np.rint(codes.values / step), 0, d_max)
    return CodeSequence(np.clip(d * step, 0.0, 1.0))
