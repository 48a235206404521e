"""Monte-Carlo studies: scenario catalog, trial engine, metrics, CSV output.

Seven studies are provided, one per CLI subcommand:

  run_crb_scatter            recovery MSE of random codes against their
                             inverse-Gram bound (scatter)
  run_objective_comparison   bound vs least-squares surrogate (scatter)
  run_convergence            mean descent curve of the batch designer
  run_batch_comparison       two-CPI protocol, predefined vs batch-adaptive
                             codes over an SNR sweep
  run_sequential_comparison  random vs sequentially designed codes as
                             measurements accumulate
  run_deltaf_sweep           sequential modes under code quantization
  run_k_sweep                sequential modes against target count

Every random draw comes from a dedicated numpy Generator seeded by
(seed, study, stream, indices...), so trials are independent, reorderable
and bit-reproducible.  Within a trial the compared modes share noise and
scene draws, making the comparisons paired.
"""

from __future__ import annotations

import csv
import dataclasses
from dataclasses import dataclass, field

import numpy as np

from .batch import BatchDesignConfig, design_batch
from .model import (
    CodeSequence,
    RadarParams,
    RangeDopplerGrid,
    Target,
    TargetScene,
    add_noise,
    build_dictionary,
    make_grid,
    quantize_codes,
    scene_to_sparse_vector,
)
from .recovery import DegenerateSupportError, subspace_pursuit
from .objectives import crb_objective, ls_objective, sub_dictionary
from .sequential import SequentialState, candidate_row, design_next_code, update_state

# Canonical four-target scene: grid cells (range, Doppler), unit amplitudes.
VA_CELLS = ((3, 7), (2, 13), (3, 14), (0, 15))

CODE_MODES = (
    "predefined-random",
    "batch-adaptive",
    "sequential-mode-1",
    "sequential-mode-2",
)

# Study identifiers used as RNG stream prefixes.
_CRB_SCATTER = 1
_OBJ_COMPARE = 2
_CONVERGENCE = 3
_BATCH_COMPARE = 4
_SEQ_COMPARE = 5
_DELTAF_SWEEP = 6
_K_SWEEP = 7

# Stream labels within a study.
_CODES = 0
_NOISE = 1
_NOISE2 = 2
_INIT = 3
_RAND_CODES = 4
_SCENE = 5

SEQ_MODE_LABELS = {"random": "random", 1: "adaptive1", 2: "adaptive2"}


def rng_stream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for a (seed, key...) address."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), *map(int, key)]))


def sigma2_from_snr_db(snr_db: float, n_pulses: int, gamma_mag: float = 1.0) -> float:
    """Noise variance giving each unit target the stated normalized SNR,
    defined as |gamma|^2 / (N * sigma2)."""
    return gamma_mag**2 / (n_pulses * 10.0 ** (snr_db / 10.0))


def sigma2_from_db(sigma2_db: float) -> float:
    """Noise variance quoted in dB, as linear power."""
    return 10.0 ** (sigma2_db / 10.0)


@dataclass(frozen=True)
class ScenarioConfig:
    """Full description of one study run.

    targets holds explicit grid cells (m, n) with unit amplitudes; when
    None the scene is drawn per trial with K targets on distinct random
    cells.  Exactly one of snr_db / sigma2_db may be set; sweep studies
    carry their noise grid instead.
    """

    radar: RadarParams = field(default_factory=RadarParams)
    P: int = 4
    Q: int = 20
    targets: tuple[tuple[int, int], ...] | None = VA_CELLS
    K: int = 4
    code_mode: str = "predefined-random"
    snr_db: float | None = 20.0
    sigma2_db: float | None = None
    n_trials: int = 1000
    seed: int = 0
    out: str | None = None
    # study-specific knobs
    n_codes: int = 100              # code draws in the scatter studies
    n_designed: int = 20            # pulses appended by the sequential studies
    n_candidates: int = 1024        # sequential search grid
    design_iters: int = 100         # batch descent iteration cap
    sp_max_iter: int = 50
    snr_grid: tuple[float, ...] = (0.0, 5.0, 10.0, 15.0, 20.0)
    sigma2_grid: tuple[float, ...] = (0.0, 5.0)         # dB
    deltaf_grid: tuple[float, ...] | None = None        # None = log default
    k_values: tuple[int, ...] = (1, 2, 3, 4, 5, 6, 7, 8)

    def __post_init__(self):
        if self.code_mode not in CODE_MODES:
            raise ValueError(f"unknown code mode {self.code_mode!r}")
        if self.snr_db is not None and self.sigma2_db is not None:
            raise ValueError("give either snr_db or sigma2_db, not both")
        if self.n_trials < 1:
            raise ValueError("n_trials must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.K < 1:
            raise ValueError("K must be at least 1")

    def grid(self) -> RangeDopplerGrid:
        return make_grid(self.radar, self.P, self.Q)

    def scene(self, grid: RangeDopplerGrid) -> TargetScene | None:
        """Explicit scene, or None when targets are drawn per trial."""
        if self.targets is None:
            return None
        return scene_from_cells(self.targets, grid)

    def sigma2(self) -> float:
        if (self.snr_db is None) == (self.sigma2_db is None):
            raise ValueError("exactly one noise specification is required")
        if self.snr_db is not None:
            return sigma2_from_snr_db(self.snr_db, self.radar.N)
        return sigma2_from_db(self.sigma2_db)


def scene_from_cells(cells, grid: RangeDopplerGrid, gammas=None) -> TargetScene:
    """Scene with unit (or given) amplitudes at the listed grid cells."""
    cells = list(cells)
    if gammas is None:
        gammas = [1.0] * len(cells)
    return TargetScene(
        Target(g, m * grid.delta_p, n * grid.delta_q)
        for g, (m, n) in zip(gammas, cells)
    )


def random_scene(K: int, grid: RangeDopplerGrid, rng: np.random.Generator) -> TargetScene:
    """K unit targets on distinct random grid cells."""
    columns = rng.choice(grid.size, size=K, replace=False)
    return scene_from_cells([grid.cell(int(l)) for l in columns], grid)


def scenario_va() -> ScenarioConfig:
    """The canonical study scenario: X-band defaults, 4-by-20 grid, four
    unit targets, normalized SNR 20 dB."""
    return ScenarioConfig()


@dataclass(frozen=True)
class TrialStats:
    """Aggregate of a batch of Monte-Carlo trials."""

    mse: float
    exact_support_fraction: float
    n_trials: int


def compute_stats(records) -> TrialStats:
    """Mean squared error and exact-support fraction of (sq_err, matched)
    records."""
    records = list(records)
    if not records:
        raise ValueError("no trial records to aggregate")
    errors = np.array([r[0] for r in records], dtype=float)
    matches = np.array([r[1] for r in records], dtype=bool)
    return TrialStats(
        mse=float(errors.mean()),
        exact_support_fraction=float(matches.mean()),
        n_trials=len(records),
    )


def write_csv(path: str, fieldnames: list[str], rows: list[dict]) -> None:
    """UTF-8 CSV with one header row; floats keep full precision."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_format_value(row[name]) for name in fieldnames])


def _format_value(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _maybe_write(cfg: ScenarioConfig, fieldnames: list[str], rows: list[dict]) -> None:
    if cfg.out:
        write_csv(cfg.out, fieldnames, rows)


def _sp_trial(dictionary, x_true, sigma2, K, rng, sp_max_iter):
    """One synthesize/recover trial; None when the solver hit a degenerate
    support."""
    y = add_noise(dictionary @ x_true, sigma2, rng)
    try:
        result = subspace_pursuit(y, dictionary, K, sp_max_iter)
    except DegenerateSupportError:
        return None
    return float(np.linalg.norm(x_true - result.x_hat) ** 2), result.support


# ---------------------------------------------------------------------------
# scatter studies


def run_crb_scatter(cfg: ScenarioConfig) -> list[dict]:
    """Recovery MSE of random code sequences against the inverse-Gram bound
    at the true support.  Columns: code_id, lb, mse."""
    grid = cfg.grid()
    scene = cfg.scene(grid)
    truth = tuple(sorted(scene.column_indices(grid)))
    x = scene_to_sparse_vector(scene, grid)
    sigma2 = cfg.sigma2()

    rows = []
    for code_id in range(cfg.n_codes):
        codes = CodeSequence.random(cfg.radar.N, rng_stream(cfg.seed, _CRB_SCATTER, _CODES, code_id))
        dictionary = build_dictionary(grid, codes, cfg.radar)
        lb = crb_objective(sub_dictionary(dictionary, truth, normalized=True))
        records = []
        for t in range(cfg.n_trials):
            rec = _sp_trial(
                dictionary, x, sigma2, cfg.K,
                rng_stream(cfg.seed, _CRB_SCATTER, _NOISE, code_id, t), cfg.sp_max_iter,
            )
            if rec is not None:
                records.append((rec[0], set(rec[1]) == set(truth)))
        stats = compute_stats(records)
        rows.append({"code_id": code_id, "lb": lb, "mse": stats.mse})
    _maybe_write(cfg, ["code_id", "lb", "mse"], rows)
    return rows


def run_objective_comparison(cfg: ScenarioConfig) -> list[dict]:
    """Bound vs least-squares surrogate over random codes at the true
    support.  Columns: lb, lb2."""
    grid = cfg.grid()
    scene = cfg.scene(grid)
    truth = tuple(sorted(scene.column_indices(grid)))

    rows = []
    for code_id in range(cfg.n_codes):
        codes = CodeSequence.random(cfg.radar.N, rng_stream(cfg.seed, _OBJ_COMPARE, _CODES, code_id))
        sub = sub_dictionary(build_dictionary(grid, codes, cfg.radar), truth, normalized=True)
        rows.append({"lb": crb_objective(sub), "lb2": ls_objective(sub)})
    _maybe_write(cfg, ["lb", "lb2"], rows)
    return rows


# ---------------------------------------------------------------------------
# batch design studies


def run_convergence(cfg: ScenarioConfig) -> list[dict]:
    """Mean least-squares objective per descent iteration over random
    initializations at the true support.  Columns: iter, mean_lb2."""
    grid = cfg.grid()
    scene = cfg.scene(grid)
    truth = tuple(sorted(scene.column_indices(grid)))
    design_cfg = BatchDesignConfig(max_iter=cfg.design_iters)

    traces = []
    for t in range(cfg.n_trials):
        init = CodeSequence.random(cfg.radar.N, rng_stream(cfg.seed, _CONVERGENCE, _INIT, t))
        traces.append(design_batch(init, truth, grid, cfg.radar, design_cfg).objective_per_iter)

    rows = []
    for it in range(cfg.design_iters + 1):
        # converged runs hold their final value
        values = [trace[min(it, len(trace) - 1)] for trace in traces]
        rows.append({"iter": it, "mean_lb2": float(np.mean(values))})
    _maybe_write(cfg, ["iter", "mean_lb2"], rows)
    return rows


def batch_comparison_trial(
    x_true,
    truth,
    predefined_codes: CodeSequence,
    predefined_dict,
    grid,
    radar: RadarParams,
    design_cfg: BatchDesignConfig,
    K: int,
    sigma2: float,
    rng_cpi1: np.random.Generator,
    rng_cpi2: np.random.Generator,
    sp_max_iter: int = 50,
) -> dict | None:
    """One paired two-CPI trial.

    CPI 1 uses the predefined codes and yields a support estimate; CPI 2 is
    run twice on the same noise realization, once reusing the predefined
    codes and once with codes redesigned for the estimated support.
    Returns per-mode (sq_err, matched) records plus the CPI-1 record, or
    None if any recovery degenerated.
    """
    truth_set = set(truth)
    clean = predefined_dict @ x_true
    try:
        first = subspace_pursuit(
            add_noise(clean, sigma2, rng_cpi1), predefined_dict, K, sp_max_iter
        )
        shared_noise = add_noise(np.zeros(clean.size, complex), sigma2, rng_cpi2).y
        kept = subspace_pursuit(clean + shared_noise, predefined_dict, K, sp_max_iter)
        designed = design_batch(
            predefined_codes, first.support, grid, radar, design_cfg
        ).final_codes
        designed_dict = build_dictionary(grid, designed, radar)
        adapted = subspace_pursuit(
            designed_dict @ x_true + shared_noise, designed_dict, K, sp_max_iter
        )
    except DegenerateSupportError:
        return None
    return {
        "cpi1": (float(np.linalg.norm(x_true - first.x_hat) ** 2), set(first.support) == truth_set),
        "predefined": (float(np.linalg.norm(x_true - kept.x_hat) ** 2), set(kept.support) == truth_set),
        "adaptive": (float(np.linalg.norm(x_true - adapted.x_hat) ** 2), set(adapted.support) == truth_set),
    }


def run_batch_comparison(cfg: ScenarioConfig) -> list[dict]:
    """Two-CPI comparison of predefined vs batch-adaptive codes over the
    SNR grid.  Columns: snr_db, mode, mse, exact_fraction."""
    grid = cfg.grid()
    scene = cfg.scene(grid)
    truth = tuple(sorted(scene.column_indices(grid)))
    x = scene_to_sparse_vector(scene, grid)
    design_cfg = BatchDesignConfig(max_iter=cfg.design_iters)

    predefined = CodeSequence.random(cfg.radar.N, rng_stream(cfg.seed, _BATCH_COMPARE, _CODES))
    predefined_dict = build_dictionary(grid, predefined, cfg.radar)

    rows = []
    for s_idx, snr_db in enumerate(cfg.snr_grid):
        sigma2 = sigma2_from_snr_db(snr_db, cfg.radar.N)
        records = {"predefined": [], "adaptive": []}
        for t in range(cfg.n_trials):
            outcome = batch_comparison_trial(
                x, truth, predefined, predefined_dict, grid, cfg.radar,
                design_cfg, cfg.K, sigma2,
                rng_stream(cfg.seed, _BATCH_COMPARE, _NOISE, s_idx, t),
                rng_stream(cfg.seed, _BATCH_COMPARE, _NOISE2, s_idx, t),
                cfg.sp_max_iter,
            )
            if outcome is None:
                continue
            records["predefined"].append(outcome["predefined"])
            records["adaptive"].append(outcome["adaptive"])
        for mode in ("predefined", "adaptive"):
            stats = compute_stats(records[mode])
            rows.append({
                "snr_db": snr_db, "mode": mode,
                "mse": stats.mse, "exact_fraction": stats.exact_support_fraction,
            })
    _maybe_write(cfg, ["snr_db", "mode", "mse", "exact_fraction"], rows)
    return rows


# ---------------------------------------------------------------------------
# sequential design studies


def _quantize_scalar(c: float, radar: RadarParams) -> float:
    if radar.delta_f == 0.0:
        return c
    return float(quantize_codes(CodeSequence([c]), radar).values[0])


def sequential_trial(
    scene: TargetScene,
    K: int,
    sigma2: float,
    grid: RangeDopplerGrid,
    radar: RadarParams,
    n_designed: int,
    seed: int,
    key: tuple[int, ...],
    n_candidates: int = 1024,
    sp_max_iter: int = 50,
) -> dict | None:
    """One paired trial of the three sequential modes.

    A shared random initial CPI is extended pulse by pulse; the random mode
    draws each new code uniformly while the adaptive modes search the
    candidate grid against their maintained state.  All modes share the
    per-pulse noise.  After every new pulse the scene is re-recovered from
    all pulses so far and the support estimate (hence the designer state)
    is refreshed.  Returns per-mode lists of (sq_err, matched) records, one
    per appended pulse, or None if any recovery degenerated.
    """
    n0 = radar.N
    x = scene_to_sparse_vector(scene, grid)
    truth_set = set(scene.column_indices(grid))
    p_all, q_all = grid.p_values, grid.q_values
    bandwidth_ratio = radar.B / radar.f_c

    init = CodeSequence.random(n0, rng_stream(seed, *key, _INIT))
    if radar.delta_f > 0:
        init = quantize_codes(init, radar)
    base = build_dictionary(grid, init, radar)
    noise0 = add_noise(np.zeros(n0, complex), sigma2, rng_stream(seed, *key, _NOISE)).y
    pulse_noise = add_noise(
        np.zeros(n_designed, complex), sigma2, rng_stream(seed, *key, _NOISE2)
    ).y
    random_codes = rng_stream(seed, *key, _RAND_CODES).uniform(0.0, 1.0, n_designed)

    y0 = base @ x + noise0
    try:
        first = subspace_pursuit(y0, base, K, sp_max_iter)
    except DegenerateSupportError:
        return None

    results = {}
    for mode in ("random", 1, 2):
        dictionary = np.empty((n0 + n_designed, grid.size), dtype=complex)
        dictionary[:n0] = base
        y = np.empty(n0 + n_designed, dtype=complex)
        y[:n0] = y0
        support = first.support
        state = None
        if mode != "random":
            state = SequentialState.from_columns(dictionary[:n0][:, list(support)])
        records = []
        for i in range(n_designed):
            n = n0 + i
            if mode == "random":
                c = float(random_codes[i])
            else:
                c = design_next_code(state, mode, support, grid, radar, n_candidates)
            c = _quantize_scalar(c, radar)
            factor = 1.0 + c * bandwidth_ratio
            dictionary[n] = np.exp(1j * (c * p_all + n * factor * q_all))
            y[n] = dictionary[n] @ x + pulse_noise[i]
            try:
                rec = subspace_pursuit(y[: n + 1], dictionary[: n + 1], K, sp_max_iter)
            except DegenerateSupportError:
                return None
            records.append((
                float(np.linalg.norm(x - rec.x_hat) ** 2),
                set(rec.support) == truth_set,
            ))
            if mode != "random":
                if rec.support == support:
                    state = update_state(state, candidate_row(c, support, grid, radar, n))
                else:
                    state = SequentialState.from_columns(dictionary[: n + 1][:, list(rec.support)])
            support = rec.support
        results[mode] = records
    return results


def run_sequential_comparison(cfg: ScenarioConfig) -> list[dict]:
    """Random vs sequentially designed codes as measurements accumulate,
    for each noise level of the sigma2 grid.  Columns: sigma2_db,
    n_measurements, mode, mse, exact_fraction."""
    grid = cfg.grid()
    scene = cfg.scene(grid)

    rows = []
    for s_idx, sigma2_db in enumerate(cfg.sigma2_grid):
        sigma2 = sigma2_from_db(sigma2_db)
        per_mode = {m: [] for m in ("random", 1, 2)}
        for t in range(cfg.n_trials):
            outcome = sequential_trial(
                scene, cfg.K, sigma2, grid, cfg.radar, cfg.n_designed,
                cfg.seed, (_SEQ_COMPARE, s_idx, t), cfg.n_candidates, cfg.sp_max_iter,
            )
            if outcome is None:
                continue
            for mode in per_mode:
                per_mode[mode].append(outcome[mode])
        for mode, trials in per_mode.items():
            for i in range(cfg.n_designed):
                stats = compute_stats([trial[i] for trial in trials])
                rows.append({
                    "sigma2_db": sigma2_db,
                    "n_measurements": cfg.radar.N + i + 1,
                    "mode": SEQ_MODE_LABELS[mode],
                    "mse": stats.mse,
                    "exact_fraction": stats.exact_support_fraction,
                })
    _maybe_write(
        cfg, ["sigma2_db", "n_measurements", "mode", "mse", "exact_fraction"], rows
    )
    return rows


def default_deltaf_grid(radar: RadarParams, n_points: int = 8) -> tuple[float, ...]:
    """Logarithmically spaced frequency steps from B/1e6 up to just below
    the ghost-image limit 1/T_p."""
    return tuple(np.geomspace(radar.B * 1e-6, 0.99 / radar.T_p, n_points))


def _final_step_sweep(
    cfg: ScenarioConfig,
    study: int,
    radar: RadarParams,
    K: int,
    sigma2: float,
    outer_idx: int,
) -> dict[str, TrialStats]:
    """Shared engine of the delta-f and K sweeps: random scenes, a random
    initial CPI, a few designed pulses, and the final-step error per mode."""
    grid = make_grid(radar, cfg.P, cfg.Q)
    per_mode = {m: [] for m in ("random", 1, 2)}
    for t in range(cfg.n_trials):
        scene = random_scene(K, grid, rng_stream(cfg.seed, study, _SCENE, outer_idx, t))
        outcome = sequential_trial(
            scene, K, sigma2, grid, radar, cfg.n_designed,
            cfg.seed, (study, outer_idx, t), cfg.n_candidates, cfg.sp_max_iter,
        )
        if outcome is None:
            continue
        for mode in per_mode:
            per_mode[mode].append(outcome[mode][-1])
    return {SEQ_MODE_LABELS[m]: compute_stats(records) for m, records in per_mode.items()}


def run_deltaf_sweep(cfg: ScenarioConfig) -> list[dict]:
    """Sequential modes under code quantization at each tested frequency
    step.  Columns: delta_f, mode, mse."""
    sigma2 = sigma2_from_db(cfg.sigma2_db if cfg.sigma2_db is not None else 0.0)
    deltaf_grid = cfg.deltaf_grid or default_deltaf_grid(cfg.radar)

    rows = []
    for d_idx, delta_f in enumerate(deltaf_grid):
        radar = dataclasses.replace(cfg.radar, delta_f=delta_f)
        stats = _final_step_sweep(cfg, _DELTAF_SWEEP, radar, cfg.K, sigma2, d_idx)
        for mode in ("random", "adaptive1", "adaptive2"):
            rows.append({"delta_f": delta_f, "mode": mode, "mse": stats[mode].mse})
    _maybe_write(cfg, ["delta_f", "mode", "mse"], rows)
    return rows


def run_k_sweep(cfg: ScenarioConfig) -> list[dict]:
    """Sequential modes against the number of targets.  Columns: k, mode,
    mse, n_trials."""
    sigma2 = sigma2_from_db(cfg.sigma2_db if cfg.sigma2_db is not None else -5.0)

    rows = []
    for k_idx, K in enumerate(cfg.k_values):
        if K < 1:
            raise ValueError("target counts must be at least 1")
        stats = _final_step_sweep(cfg, _K_SWEEP, cfg.radar, K, sigma2, k_idx)
        for mode in ("random", "adaptive1", "adaptive2"):
            rows.append({
                "k": K, "mode": mode,
                "mse": stats[mode].mse, "n_trials": stats[mode].n_trials,
            })
    _maybe_write(cfg, ["k", "mode", "mse", "n_trials"], rows)
    return rows


# ---------------------------------------------------------------------------
# configuration files

_LIST_KEYS = {"snr_grid", "sigma2_grid", "deltaf_grid", "k_values"}
_RADAR_KEYS = {"f_c", "B", "T", "T_p", "N", "delta_f"}
_INT_KEYS = {
    "N", "P", "Q", "K", "n_trials", "seed", "n_codes", "n_designed",
    "n_candidates", "design_iters", "sp_max_iter",
}
_FLOAT_KEYS = {"f_c", "B", "T", "T_p", "delta_f", "snr_db", "sigma2_db"}
_STR_KEYS = {"code_mode", "out"}
ALLOWED_CONFIG_KEYS = _RADAR_KEYS | _INT_KEYS | _FLOAT_KEYS | _STR_KEYS | _LIST_KEYS | {"targets"}


def _parse_targets(text: str):
    """'m,n;m,n;...' as grid cells, or 'random' for per-trial scenes."""
    if text.strip().lower() == "random":
        return None
    cells = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad target cell {chunk!r}, expected 'm,n'")
        cells.append((int(parts[0]), int(parts[1])))
    return tuple(cells)


def load_config(path: str, base: ScenarioConfig | None = None) -> ScenarioConfig:
    """Apply a key = value configuration file on top of a base scenario.

    Lines starting with '#' and blank lines are ignored; unknown keys are
    rejected.  List values are comma separated; targets use 'm,n;m,n;...'
    or 'random'.
    """
    cfg = base if base is not None else scenario_va()
    radar_updates: dict = {}
    cfg_updates: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{line_no}: expected 'key = value'")
            key, _, raw = line.partition("=")
            key = key.strip()
            raw = raw.strip()
            if key not in ALLOWED_CONFIG_KEYS:
                raise ValueError(f"{path}:{line_no}: unknown key {key!r}")
            if key == "targets":
                cfg_updates["targets"] = _parse_targets(raw)
            elif key in _LIST_KEYS:
                values = tuple(float(v) for v in raw.split(","))
                if key == "k_values":
                    values = tuple(int(v) for v in values)
                cfg_updates[key] = values
            elif key in _RADAR_KEYS:
                radar_updates[key] = int(raw) if key == "N" else float(raw)
            elif key in _INT_KEYS:
                cfg_updates[key] = int(raw)
            elif key in _FLOAT_KEYS:
                cfg_updates[key] = float(raw)
            else:
                cfg_updates[key] = raw
    # setting one noise spec in the file displaces the other
    if "snr_db" in cfg_updates and "sigma2_db" not in cfg_updates:
        cfg_updates.setdefault("sigma2_db", None)
    if "sigma2_db" in cfg_updates and "snr_db" not in cfg_updates:
        cfg_updates.setdefault("snr_db", None)
    if radar_updates:
        cfg_updates["radar"] = dataclasses.replace(cfg.radar, **radar_updates)
    return dataclasses.replace(cfg, **cfg_updates)
