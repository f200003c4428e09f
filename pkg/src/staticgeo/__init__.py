"""staticgeo: numerics for rotationally symmetric static vacuum geometries.

Covers the exact metric catalog with static-equation residuals and mass
flux, per-sphere curvature functionals with four Minkowski-type inequality
checks, inverse mean curvature flow in the radial ODE and axisymmetric PDE
reductions, the conformal mass-flip transform, CMC stability spectra, and
quasi-local mass comparisons on perturbed axisymmetric surfaces.
"""

__version__ = "0.1.0"

from .errors import (
    DimensionError,
    DomainError,
    HypothesisError,
    ParameterError,
    ResolutionError,
    SingularFlowError,
    StaticGeoError,
    StiffnessError,
)
from .metrics import (
    SchwarzschildParams,
    WarpedStaticMetric,
    adm_mass,
    catalog,
    flat_metric,
    load_metric,
    metric_from_tables,
    schwarzschild,
    schwarzschild_isotropic,
    static_residual,
    unit_sphere_area,
)
from .quantities import (
    SphereReport,
    bartnik_mass_identity_check,
    codazzi_beta,
    hawking_q_check,
    levelset_minkowski_check,
    m0_of,
    minkowski_check,
    sphere_geometry,
    willmore_check,
    yamabe_energy,
)
from .flow import (
    AxiFlowState,
    AxiTrajectory,
    FlowConfig,
    RadialFlowState,
    RadialTrajectory,
    area_growth_check,
    flow_to_metric,
    imcf_ode_closed_form,
    imcf_ode_solve,
    imcf_pde_solve,
    pde_grid,
    radialize,
)
from .conformal import (
    ConformalPair,
    conformal_flip,
    conformal_minkowski_check,
    conformal_ricci_residual,
    mass_flip_check,
    mean_curvature_flip,
    outer_minimizing_proxy,
    vh_identity_check,
)
from .stability import (
    StabilitySpectrum,
    eigenvalue_bound_check,
    extension_kernel_check,
    lambda1_round,
    laplace_spectrum_axisymmetric,
    schwarzschild_stability_threshold,
    stability_potential,
    stability_spectrum,
)
from .surfaces import (
    AxiSurface,
    LegendreProfile,
    SurfaceProfile,
    SurfaceReport,
    TabulatedProfile,
    hawking_vs_q,
    holder_chain_check,
    induced_geometry,
    offset_sphere_profile,
    profile_from_json,
    surface_report,
)
from .report import InequalityReport
