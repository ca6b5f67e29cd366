"""Two-mode squeezed Gaussian states in squeezed-thermal baths.

Variance-matrix dynamics under beam-splitter decoherence, determinant-form
separability criteria with an independent partial-transpose oracle, and
entanglement-lifetime searches.
"""

from .channel import (
    ChannelScenario,
    ChannelTime,
    environment_variance,
    evolve,
    evolve_variance,
    normalized_time,
)
from .separability import (
    BOUNDARY_TOL,
    InitiallySeparable,
    NeverSeparable,
    SeparabilityVerdict,
    block_delta,
    e_factor,
    lemma1_separable,
    monotonicity_gap,
    ppt_oracle,
    separability_verdict,
    separation_time,
    simon_delta,
    symmetric_closed_form_separable,
    symmetric_lhs_rhs,
)
from .states import (
    PHYSICALITY_TOL,
    EnvironmentModeSpec,
    SymmetricBlockForm,
    TwoModeSqueezedSpec,
    eval_characteristic,
    is_physical,
    mean_excitation,
    reduce_to_symmetric,
    squeezed_thermal_variance,
    symplectic_eigenvalues,
    tmss_variance,
)
from .sweep import (
    SweepRequest,
    SweepResult,
    default_grid,
    figure1_table,
    run_sweep,
    write_figure1,
    write_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY_TOL",
    "ChannelScenario",
    "ChannelTime",
    "EnvironmentModeSpec",
    "InitiallySeparable",
    "NeverSeparable",
    "PHYSICALITY_TOL",
    "SeparabilityVerdict",
    "SweepRequest",
    "SweepResult",
    "SymmetricBlockForm",
    "TwoModeSqueezedSpec",
    "block_delta",
    "default_grid",
    "e_factor",
    "environment_variance",
    "eval_characteristic",
    "evolve",
    "evolve_variance",
    "figure1_table",
    "is_physical",
    "lemma1_separable",
    "mean_excitation",
    "monotonicity_gap",
    "normalized_time",
    "ppt_oracle",
    "reduce_to_symmetric",
    "run_sweep",
    "separability_verdict",
    "separation_time",
    "simon_delta",
    "squeezed_thermal_variance",
    "symmetric_closed_form_separable",
    "symmetric_lhs_rhs",
    "symplectic_eigenvalues",
    "tmss_variance",
    "write_figure1",
    "write_sweep",
]
