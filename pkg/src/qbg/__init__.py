"""Qudit Bloch geometry: diagonal/real/imaginary coordinates of density
matrices, tight state-space bounds, and the extremal families that
saturate them."""

from .bounds import (
    BoundaryCurve,
    BoundarySample,
    BoundVerdict,
    Landmarks,
    boundary_samples,
    evaluate_bounds,
    landmark_points,
    landmarks,
    max_imaginary,
)
from .extremal import (
    ExtremalSpec,
    embedded_imag_pure,
    even_block,
    odd_block_zero,
    odd_linear,
    saturation_report,
)
from .imaginarity import ImaginarityReport, robustness
from .numerics import hermitian_eigenvalues, majorizes, trace_norm
from .sampling import (
    CoordinateRecord,
    ProofStepReport,
    coordinate_cloud,
    empirical_boundary,
    haar_pure,
    hs_mixed,
    proof_step_check,
)
from .state import (
    BlochBasis,
    BlochVector,
    Coordinates,
    DensityMatrix,
    DxiParts,
    Tolerances,
    bloch_vector,
    coordinates,
    decompose,
    gellmann_basis,
    purity,
    recompose,
    state_coordinates,
    state_from_bloch,
    validate_density,
)
from .transform import (
    RotationStep,
    apply_steps,
    givens_conjugate,
    sweep_uniform_diagonal,
    transpose_state,
)

__version__ = "0.1.0"

__all__ = [
    "BlochBasis",
    "BlochVector",
    "BoundaryCurve",
    "BoundarySample",
    "BoundVerdict",
    "CoordinateRecord",
    "Coordinates",
    "DensityMatrix",
    "DxiParts",
    "ExtremalSpec",
    "ImaginarityReport",
    "Landmarks",
    "ProofStepReport",
    "RotationStep",
    "Tolerances",
    "apply_steps",
    "bloch_vector",
    "boundary_samples",
    "coordinate_cloud",
    "coordinates",
    "decompose",
    "embedded_imag_pure",
    "empirical_boundary",
    "evaluate_bounds",
    "even_block",
    "gellmann_basis",
    "givens_conjugate",
    "haar_pure",
    "hermitian_eigenvalues",
    "hs_mixed",
    "landmark_points",
    "landmarks",
    "majorizes",
    "max_imaginary",
    "odd_block_zero",
    "odd_linear",
    "proof_step_check",
    "purity",
    "recompose",
    "robustness",
    "saturation_report",
    "state_coordinates",
    "state_from_bloch",
    "sweep_uniform_diagonal",
    "trace_norm",
    "transpose_state",
    "validate_density",
]
