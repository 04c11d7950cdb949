"""Python bindings for the chtwist numerical core."""

from ._core import (
    BasisMismatch,
    ConditioningError,
    DomainError,
    ModelParams,
    adapted_frame,
    alpha_of_xh,
    assemble_dbeta,
    christoffel,
    complex_structure,
    contact_report,
    curvature_algebraic,
    curvature_numeric,
    dbeta_fd_oracle,
    hamiltonian,
    integrate_flow,
    metric,
    omega_total,
    pfaffian,
    transversality_check,
    verify,
    xh_closed,
    xh_solve,
)

__all__ = [
    "BasisMismatch",
    "ConditioningError",
    "DomainError",
    "ModelParams",
    "adapted_frame",
    "alpha_of_xh",
    "assemble_dbeta",
    "christoffel",
    "complex_structure",
    "contact_report",
    "curvature_algebraic",
    "curvature_numeric",
    "dbeta_fd_oracle",
    "hamiltonian",
    "integrate_flow",
    "metric",
    "omega_total",
    "pfaffian",
    "transversality_check",
    "verify",
    "xh_closed",
    "xh_solve",
]
