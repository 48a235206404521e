"""Cognitive random stepped frequency radar: sparse range-Doppler recovery
and adaptive design of per-pulse frequency-modulation codes."""

from .batch import (
    BatchDesignConfig,
    DesignTrace,
    LineSearch,
    code_to_z,
    design_batch,
    lb2_gradient,
    z_to_code,
)
from .harness import (
    ScenarioConfig,
    TrialStats,
    compute_stats,
    load_config,
    random_scene,
    run_batch_comparison,
    run_convergence,
    run_crb_scatter,
    run_deltaf_sweep,
    run_k_sweep,
    run_objective_comparison,
    run_sequential_comparison,
    scenario_va,
    scene_from_cells,
    sigma2_from_db,
    sigma2_from_snr_db,
)
from .model import (
    CodeSequence,
    MeasurementVector,
    RadarParams,
    RangeDopplerGrid,
    Target,
    TargetScene,
    add_noise,
    atom,
    build_dictionary,
    code_factor,
    make_grid,
    quantize_codes,
    response_matrix,
    scene_to_sparse_vector,
    synthesize_echo,
)
from .objectives import (
    SubDictionary,
    crb_mse_bound,
    crb_objective,
    ls_objective,
    sub_dictionary,
)
from .recovery import (
    DegenerateSupportError,
    RecoveryResult,
    exact_support_match,
    ls_project,
    subspace_pursuit,
)
from .sequential import (
    SequentialState,
    candidate_row,
    design_next_code,
    objective_mode1,
    objective_mode2,
    update_state,
)

__all__ = [
    "BatchDesignConfig",
    "CodeSequence",
    "DegenerateSupportError",
    "DesignTrace",
    "LineSearch",
    "MeasurementVector",
    "RadarParams",
    "RangeDopplerGrid",
    "RecoveryResult",
    "ScenarioConfig",
    "SequentialState",
    "SubDictionary",
    "Target",
    "TargetScene",
    "TrialStats",
    "add_noise",
    "atom",
    "build_dictionary",
    "candidate_row",
    "code_factor",
    "code_to_z",
    "compute_stats",
    "crb_mse_bound",
    "crb_objective",
    "design_batch",
    "design_next_code",
    "exact_support_match",
    "lb2_gradient",
    "load_config",
    "ls_objective",
    "ls_project",
    "make_grid",
    "objective_mode1",
    "objective_mode2",
    "quantize_codes",
    "random_scene",
    "response_matrix",
    "run_batch_comparison",
    "run_convergence",
    "run_crb_scatter",
    "run_deltaf_sweep",
    "run_k_sweep",
    "run_objective_comparison",
    "run_sequential_comparison",
    "scenario_va",
    "scene_from_cells",
    "scene_to_sparse_vector",
    "sigma2_from_db",
    "sigma2_from_snr_db",
    "sub_dictionary",
    "subspace_pursuit",
    "synthesize_echo",
    "update_state",
    "z_to_code",
]
