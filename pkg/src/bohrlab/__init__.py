"""Sharp Bohr-type inequalities for the Cesaro, Bernardi and DFT majorants of
bounded analytic functions on shifted disks."""

from .domain import (
    CoefficientSeries,
    Normalization,
    ShiftedDisk,
    lemma2_bound,
    make_shifted_disk,
    map_to_unit_disk,
    normalized_modulus,
)
from .errors import (
    BohrLabError,
    BracketError,
    ContractError,
    DivergenceError,
    DomainError,
    NumericError,
    TruncationError,
)
from .extremal import (
    ExtremalParams,
    GKind,
    MarginTable,
    extremal_cesaro_closed_form,
    extremal_coeffs,
    extremal_series,
    residual_g,
    sharpness_margin,
    sweep_margins,
)
from .operators import (
    BoundKind,
    MajorantValue,
    Operator,
    bernardi_majorant,
    bohr_majorant,
    cesaro_majorant,
    dft_coefficient_transform,
    dft_majorant,
    majorant,
    target_bound,
)
from .radius import (
    ProblemTag,
    RadiusProblem,
    RootCertificate,
    defining_residual,
    radius_for,
    solve_bracketed_root,
)
from .report import emit_table
from .testfn import (
    BlaschkeSpec,
    blaschke_taylor,
    check_coefficient_lemma,
    compose_affine_pullback,
)

__version__ = "0.1.0"
