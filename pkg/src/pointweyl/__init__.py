"""Point interactions in R^3: Weyl matrices, spectra, resolvents and radial Gram matrices."""

__version__ = "0.1.0"

from .errors import NumericalFailure, PoleError
from .geometry import (
    PointConfig,
    RealSequence,
    collinear_config,
    interaction_sums,
    min_separation,
    tail_row_sums,
    upper_density_estimate,
)
from .rpdf import (
    Bernstein,
    DiscreteMeasure,
    ExpDecay,
    OmegaKernel,
    Schoenberg,
    bernstein_moment,
    eval_radial,
    gram_matrix,
    line_identity,
    line_identity_residual,
    omega3_invertibility_certificate,
    schur_bound,
    strong_pd_profile,
)
from .special import omega_kernel
from .spectral import (
    BoundaryOperator,
    ac_certificate,
    bc_residual,
    eigenfunction_eval,
    form_corrections,
    free_resolvent_kernel,
    negative_count,
    negative_spectrum,
    negativity_count,
    nonnegativity_check,
    resolvent_kernel,
)
from .weyl import (
    krein_coupling,
    sqrt_branch,
    triplet_matrices,
    weyl_boundary,
    weyl_imag,
    weyl_matrix,
    weyl_zero,
)
