"""Numerical workbench for Tsallis and Renyi coherence quantifiers."""
from .linalg import (
    DensityMatrix,
    Spectrum,
    abs_power_trace,
    direct_sum,
    hermitian_eig,
    matrix_power,
    trace_norm,
    validate_density,
)
from .divergences import (
    CatalogFunction,
    f_entropy,
    neg_log,
    quasi_relative_entropy,
    renyi_entropy,
    renyi_relative_entropy,
    tsallis_entropy,
    tsallis_f,
    tsallis_relative_entropy,
    von_neumann_entropy,
)
from .coherence import (
    IncoherentState,
    Measure,
    MeasureId,
    coherence,
    dephase,
    dephase_alpha,
    dephase_alpha_unnormalized,
    pure_state_ct,
)
from .channels import KrausChannel, apply, classify, is_alpha_gio, make_example_channel, post_measurement

__version__ = "0.1.0"
