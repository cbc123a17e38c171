"""Thermal and ground-state entanglement of two coupled charge qubits.

The package computes Wootters concurrence for a pair of capacitively
coupled superconducting charge qubits operated at the charge degeneracy
point: closed-form spectra, thermal (Gibbs) density matrices built two
independent ways, the T -> 0 limit, and deterministic parameter sweeps
feeding the shipped figure datasets.
"""

__version__ = "0.1.0"

from .entanglement import (
    SPIN_FLIP,
    ground_state_concurrence,
    pure_state_concurrence,
    thermal_concurrence,
    wootters_concurrence,
)
from .linalg import (
    EigenSystem,
    NonSymmetricMatrixError,
    NotPositiveSemidefiniteError,
    jacobi_eigen,
    mat_mul,
    psd_sqrt,
)
from .model import (
    BASIS_LABELS,
    AnalyticEigensystem,
    GroundStateInfo,
    IdenticalEigensystem,
    QubitParams,
    analytic_eigensystem,
    build_degenerate_hamiltonian,
    build_full_hamiltonian,
    ground_state,
    identical_eigensystem,
)
from .sweep import (
    DiagonalArgmaxReport,
    ExperimentPoint,
    FigureDataset,
    GridAxis,
    GridSpec,
    argmax_diagonal_check,
    compare_experiments,
    dataset_to_csv,
    dataset_to_json,
    figure_dataset,
    format_number,
    run_sweep,
    validity_warning,
    write_dataset,
)
from .thermal import (
    ClosedFormTerms,
    ThermalState,
    closed_form_density,
    closed_form_terms,
    gibbs_state,
    ground_projector_state,
    zero_temperature_state,
)

__all__ = [
    "__version__",
    "SPIN_FLIP",
    "BASIS_LABELS",
    "AnalyticEigensystem",
    "ClosedFormTerms",
    "DiagonalArgmaxReport",
    "EigenSystem",
    "ExperimentPoint",
    "FigureDataset",
    "GridAxis",
    "GridSpec",
    "GroundStateInfo",
    "IdenticalEigensystem",
    "NonSymmetricMatrixError",
    "NotPositiveSemidefiniteError",
    "QubitParams",
    "ThermalState",
    "analytic_eigensystem",
    "argmax_diagonal_check",
    "build_degenerate_hamiltonian",
    "build_full_hamiltonian",
    "closed_form_density",
    "closed_form_terms",
    "compare_experiments",
    "dataset_to_csv",
    "dataset_to_json",
    "figure_dataset",
    "format_number",
    "gibbs_state",
    "ground_projector_state",
    "ground_state",
    "ground_state_concurrence",
    "identical_eigensystem",
    "jacobi_eigen",
    "mat_mul",
    "psd_sqrt",
    "pure_state_concurrence",
    "run_sweep",
    "thermal_concurrence",
    "validity_warning",
    "wootters_concurrence",
    "write_dataset",
    "zero_temperature_state",
]
