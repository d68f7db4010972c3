from ._core import (
    AxiomFailure,
    BudgetExceeded,
    StructuralError,
    algebra_names,
    algebra_size,
    biquandle_type,
    boundary,
    cocycle_names,
    count_colorings,
    homology,
    invariant,
    mirror_check,
    validate_diagram,
    verify_algebra,
    verify_cocycle,
)

__all__ = [
    "AxiomFailure",
    "BudgetExceeded",
    "StructuralError",
    "algebra_names",
    "algebra_size",
    "biquandle_type",
    "boundary",
    "cocycle_names",
    "count_colorings",
    "homology",
    "invariant",
    "mirror_check",
    "validate_diagram",
    "verify_algebra",
    "verify_cocycle",
]
