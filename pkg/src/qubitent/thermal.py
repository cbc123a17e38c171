"""Thermal equilibrium states of the two-qubit model.

Two independent constructions of rho(T) = exp(-H/kT)/Z are provided:

* :func:`gibbs_state` diagonalizes H and sums Boltzmann-weighted spectral
  projectors.  This spectral route is the package's reference
  implementation.
* :func:`closed_form_density` assembles the analytic matrix built from
  hyperbolic functions of the two level splittings.  It is a validated
  accelerator; the test suite pins it element-wise to the spectral route.

Temperatures are strictly positive dimensionless numbers in units of
e_m/k (k = 1).  The T -> 0 limit is a separate operation,
:func:`zero_temperature_state`, which returns the ground projector or,
for a degenerate ground space, the uniform mixture over it (the true
limit of the Gibbs family).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import jacobi_eigen
from .model import build_degenerate_hamiltonian, ground_state

__all__ = [
    "ThermalState",
    "ClosedFormTerms",
    "gibbs_state",
    "closed_form_terms",
    "closed_form_density",
    "zero_temperature_state",
    "ground_projector_state",
]

_TRACE_TOL = 1e-12
_SYM_TOL = 1e-12
# exp() overflows near 710; switch the hyperbolic terms to a rescaled
# representation comfortably before that.
_EXP_SHIFT_LIMIT = 700.0


def _check_temperature(t: float) -> float:
    t = float(t)
    if not math.isfinite(t) or t <= 0.0:
        raise ValueError(
            f"temperature must be a finite positive number, got {t!r}; "
            "use zero_temperature_state for the T -> 0 limit"
        )
    return t


@dataclass(frozen=True)
class ThermalState:
    """Validated real density matrix: symmetric, unit trace, PSD.

    Trace and symmetry are checked on construction; positive
    semidefiniteness is guaranteed by the constructors in this module and
    re-enforced wherever the matrix is factored downstream.  The stored
    array is marked read-only.
    """

    matrix: np.ndarray

    def __post_init__(self):
        arr = np.array(self.matrix, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise ValueError("density matrix has non-finite entries")
        trace_error = abs(float(np.trace(arr)) - 1.0)
        if trace_error > _TRACE_TOL:
            raise ValueError(f"density matrix trace deviates from 1 by {trace_error:.3e}")
        asym = float(np.max(np.abs(arr - arr.T)))
        if asym > _SYM_TOL:
            raise ValueError(f"density matrix asymmetry {asym:.3e} exceeds {_SYM_TOL:g}")
        arr.setflags(write=False)
        object.__setattr__(self, "matrix", arr)


@dataclass(frozen=True)
class ClosedFormTerms:
    """Ingredients of the analytic thermal density matrix.

    With level splittings sqrt(a_big) and sqrt(b_big) and arguments
    x_a = sqrt(a_big)/(2t), x_b = sqrt(b_big)/(2t):

        m1 = (cosh x_a + cosh x_b) / 2
        m2 = e_m * (sinh x_a / sqrt(a_big) + sinh x_b / sqrt(b_big))
        m3 = (e_j1 + e_j2) * sinh x_b / (2 sqrt(b_big))
        m4 = (e_j1 - e_j2) * sinh x_a / (2 sqrt(a_big))
        m5 = (cosh x_b - cosh x_a) / 2
        m6 = e_m * (sinh x_a / sqrt(a_big) - sinh x_b / sqrt(b_big))

    and the partition function z = 4*m1.  When max(x_a, x_b) is large
    enough to overflow exp(), every m and z is uniformly rescaled by
    exp(-log_scale); density-matrix ratios are unchanged.  log_scale is
    0.0 whenever the literal values are representable.
    """

    m1: float
    m2: float
    m3: float
    m4: float
    m5: float
    m6: float
    x_a: float
    x_b: float
    z: float
    log_scale: float = 0.0


def gibbs_state(h, t: float) -> ThermalState:
    """Thermal state exp(-H/t)/Z from the spectral decomposition of H.

    Exponents are shifted by the ground energy before exponentiation, so
    arbitrarily small temperatures cannot overflow; deeply suppressed
    weights underflow harmlessly to zero.
    """
    t = _check_temperature(t)
    eigen = jacobi_eigen(h)
    weights = np.exp(-(eigen.values - eigen.values[0]) / t)
    weights /= weights.sum()
    rho = (eigen.vectors * weights) @ eigen.vectors.T
    return ThermalState(matrix=(rho + rho.T) * 0.5)


def closed_form_terms(e_j1: float, e_j2: float, e_m: float, t: float) -> ClosedFormTerms:
    """Hyperbolic building blocks of the analytic thermal state."""
    t = _check_temperature(t)
    # Validate parameter domain through the Hamiltonian constructor.
    build_degenerate_hamiltonian(e_j1, e_j2, e_m)

    diff = e_j1 - e_j2
    total = e_j1 + e_j2
    root_a = 2.0 * math.hypot(0.5 * diff, e_m)
    root_b = 2.0 * math.hypot(0.5 * total, e_m)
    x_a = root_a / (2.0 * t)
    x_b = root_b / (2.0 * t)

    shift = max(x_a, x_b)
    if shift > _EXP_SHIFT_LIMIT:
        def cosh(x: float) -> float:
            return 0.5 * (math.exp(x - shift) + math.exp(-x - shift))

        def sinh(x: float) -> float:
            return 0.5 * (math.exp(x - shift) - math.exp(-x - shift))

        log_scale = shift
    else:
        cosh = math.cosh
        sinh = math.sinh
        log_scale = 0.0

    cosh_a = cosh(x_a)
    cosh_b = cosh(x_b)
    sinh_a = sinh(x_a)
    sinh_b = sinh(x_b)

    m1 = 0.5 * (cosh_a + cosh_b)
    m2 = e_m * (sinh_a / root_a + sinh_b / root_b)
    m3 = total * sinh_b / (2.0 * root_b)
    m4 = diff * sinh_a / (2.0 * root_a)
    m5 = 0.5 * (cosh_b - cosh_a)
    m6 = e_m * (sinh_a / root_a - sinh_b / root_b)

    return ClosedFormTerms(
        m1=m1, m2=m2, m3=m3, m4=m4, m5=m5, m6=m6,
        x_a=x_a, x_b=x_b, z=4.0 * m1, log_scale=log_scale,
    )


def closed_form_density(e_j1: float, e_j2: float, e_m: float, t: float) -> ThermalState:
    """Analytic thermal density matrix at the charge degeneracy point.

    Layout in the basis |00>, |01>, |10>, |11>: diagonal m1 -+ m2, outer
    corners m5 + m6, inner anti-diagonal block m5 - m6, single-flip
    entries m3 -+ m4, all divided by z = 4*m1.
    """
    c = closed_form_terms(e_j1, e_j2, e_m, t)
    rho = np.array(
        [
            [c.m1 - c.m2, c.m3 - c.m4, c.m3 + c.m4, c.m5 + c.m6],
            [c.m3 - c.m4, c.m1 + c.m2, c.m5 - c.m6, c.m3 + c.m4],
            [c.m3 + c.m4, c.m5 - c.m6, c.m1 + c.m2, c.m3 - c.m4],
            [c.m5 + c.m6, c.m3 + c.m4, c.m3 - c.m4, c.m1 - c.m2],
        ]
    )
    return ThermalState(matrix=rho / c.z)


def zero_temperature_state(e_j1: float, e_j2: float, e_m: float) -> ThermalState:
    """T -> 0 limit of the Gibbs family at the degeneracy point.

    Projector onto the unique ground state, or the equal mixture of the
    two ground projectors when the ground space is degenerate.
    """
    info = ground_state(e_j1, e_j2, e_m)
    k = info.states.shape[1]
    rho = (info.states @ info.states.T) / k
    return ThermalState(matrix=(rho + rho.T) * 0.5)


def ground_projector_state(h, tie_rtol: float = 1e-9) -> ThermalState:
    """Numeric T -> 0 limit for an arbitrary symmetric Hamiltonian.

    Eigenvalues within ``tie_rtol * max(1, |E_min|)`` of the minimum count
    as ground levels; the result is the uniform mixture over that
    eigenspace.  Serves as an independent cross-check of
    :func:`zero_temperature_state` and as the off-degeneracy-point path.
    """
    eigen = jacobi_eigen(h)
    ground_energy = eigen.values[0]
    tol = tie_rtol * max(1.0, abs(float(ground_energy)))
    members = eigen.values <= ground_energy + tol
    block = eigen.vectors[:, members]
    rho = (block @ block.T) / block.shape[1]
    return ThermalState(matrix=(rho + rho.T) * 0.5)
