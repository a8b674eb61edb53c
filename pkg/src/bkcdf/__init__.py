"""Boundary-corrected kernel distribution function estimation."""

from .analysis import (
    MiseTerms,
    NoOptimalBandwidthError,
    PointwiseError,
    asymptotic_pointwise,
    exact_bias,
    exact_integrated_variance,
    exact_mise,
    exact_mse_curve,
    exact_variance,
    mise_terms,
    pointwise_error,
)
from .boundary import (
    FAMILY_NAMES,
    BoundaryKernelFamily,
    ConditionCheck,
    DegenerateKernelError,
)
from .distributions import (
    BetaMixture,
    Reflected,
    Uniform,
    replicate_rng,
    solve_params,
)
from .estimator import (
    EstimatorConfig,
    boundary_cdf,
    classical_cdf,
    evaluate_grid,
    is_proper,
)
from .kernels import KERNEL_NAMES, BaseKernel
from .quadrature import (
    QuadSpec,
    QuadratureError,
    RootFindingError,
    RootSpec,
    find_root,
    integrate,
)
from .simulation import SimConfig, SimResult, run_ise, summarize

__version__ = "0.1.0"
