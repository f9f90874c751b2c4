"""Entangling capacity of two-qubit gates.

Canonical decomposition of 4x4 unitaries into local rotations around a
three-angle interaction core, closed-form single-use capacities by parameter
region, and a multi-start numerical optimizer over (optionally
ancilla-extended) initial pure states.
"""

from .canonical import (
    CanonicalParams,
    bell_coefficients,
    decompose,
    invariants_match,
    local_invariants,
)
from .capacity import (
    AnalyticCapacity,
    InterconversionBounds,
    RegionTag,
    capacity_c2,
    capacity_concurrence,
    capacity_entropy_no_ancilla,
    capacity_linear_entropy,
    delta_c2_bell,
    interconversion_bounds,
    n_copy_capacity,
    region_of,
)
from .errors import (
    BranchResolutionError,
    ConvergenceError,
    DimensionMismatchError,
    EntcapError,
    MatrixParseError,
    NotCanonicalError,
    NotNormalizedError,
    NotUnitaryError,
    UnsupportedMeasureError,
    WrongPartitionError,
    ZeroCapacityError,
)
from .measures import (
    MeasureKind,
    binary_entropy,
    concurrence,
    entropy_from_concurrence,
    entropy_of_entanglement,
    evaluate,
    linear_entropy,
    linear_entropy_rescaled,
)
from .optimize import (
    CapacityResult,
    FamilyKind,
    GateFamily,
    OptimizerConfig,
    SweepRow,
    custom_sweep,
    family_sweep,
    family_unitary,
    minimize_initial_entanglement,
    numeric_capacity,
    parameterize_state,
    product_start_capacity,
)
from .qcore import (
    BELL_BASIS,
    CNOT,
    DCNOT,
    IDENTITY4,
    SWAP,
    PureState,
    build_canonical_unitary,
    haar_random_local_unitary,
    haar_random_state,
    haar_random_unitary,
    make_rng,
    partial_trace,
    von_neumann_entropy_bits,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticCapacity",
    "BELL_BASIS",
    "BranchResolutionError",
    "CNOT",
    "CanonicalParams",
    "CapacityResult",
    "ConvergenceError",
    "DCNOT",
    "DimensionMismatchError",
    "EntcapError",
    "FamilyKind",
    "GateFamily",
    "IDENTITY4",
    "InterconversionBounds",
    "MatrixParseError",
    "MeasureKind",
    "NotCanonicalError",
    "NotNormalizedError",
    "NotUnitaryError",
    "OptimizerConfig",
    "PureState",
    "RegionTag",
    "SWAP",
    "SweepRow",
    "UnsupportedMeasureError",
    "WrongPartitionError",
    "ZeroCapacityError",
    "bell_coefficients",
    "binary_entropy",
    "build_canonical_unitary",
    "capacity_c2",
    "capacity_concurrence",
    "capacity_entropy_no_ancilla",
    "capacity_linear_entropy",
    "concurrence",
    "custom_sweep",
    "decompose",
    "delta_c2_bell",
    "entropy_from_concurrence",
    "entropy_of_entanglement",
    "evaluate",
    "family_sweep",
    "family_unitary",
    "haar_random_local_unitary",
    "haar_random_state",
    "haar_random_unitary",
    "interconversion_bounds",
    "invariants_match",
    "linear_entropy",
    "linear_entropy_rescaled",
    "local_invariants",
    "make_rng",
    "minimize_initial_entanglement",
    "n_copy_capacity",
    "numeric_capacity",
    "parameterize_state",
    "partial_trace",
    "product_start_capacity",
    "region_of",
    "von_neumann_entropy_bits",
]
