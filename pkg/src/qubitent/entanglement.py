"""Wootters concurrence for two-qubit states.

Every density matrix in scope is real and symmetric, so the complex
conjugation in the spin-flip construction is a no-op and the whole
computation stays inside real symmetric linear algebra: with
F = sigma_y (x) sigma_y and S = sqrt(rho), the symmetric matrix
W = S F S satisfies W @ W = S (F rho F) S, which shares its spectrum
with rho * rho_tilde.  The concurrence ingredients are therefore the
absolute eigenvalues of W; taking square roots of the eigenvalues of
W @ W instead would amplify O(eps) eigen-noise into O(sqrt(eps)) errors
on the near-zero part of the spectrum.  Complex input is rejected
explicitly rather than half-supported.
"""

from __future__ import annotations

import numpy as np

from .linalg import jacobi_eigen, psd_sqrt
from .model import build_degenerate_hamiltonian
from .thermal import ThermalState, gibbs_state, zero_temperature_state

__all__ = [
    "SPIN_FLIP",
    "wootters_concurrence",
    "pure_state_concurrence",
    "ground_state_concurrence",
    "thermal_concurrence",
]

# sigma_y (x) sigma_y is real in the |00>, |01>, |10>, |11> basis:
# antidiagonal (-1, 1, 1, -1).  It is symmetric and squares to identity.
SPIN_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)
SPIN_FLIP.setflags(write=False)

_UNIT_SLACK = 1e-12


def _require_real(arr: np.ndarray, what: str) -> None:
    if np.iscomplexobj(arr):
        raise TypeError(
            f"complex {what} is unsupported: all states in scope are real symmetric"
        )


def _coerce_density(rho) -> np.ndarray:
    if isinstance(rho, ThermalState):
        matrix = rho.matrix
    else:
        arr = np.asarray(rho)
        _require_real(arr, "density matrix")
        matrix = ThermalState(matrix=np.asarray(arr, dtype=float)).matrix
    if matrix.shape != (4, 4):
        raise ValueError(f"two-qubit density matrix must be 4x4, got {matrix.shape}")
    return matrix


def _clip_unit(value: float, what: str) -> float:
    if value > 1.0 + _UNIT_SLACK:
        raise RuntimeError(f"{what} exceeded 1 by more than {_UNIT_SLACK:g}: {value!r}")
    return min(max(value, 0.0), 1.0)


def wootters_concurrence(rho) -> float:
    """Concurrence of a real two-qubit density matrix.

    Accepts a :class:`ThermalState` or a raw 4x4 real matrix satisfying
    the same invariants.  Returns max(l1 - l2 - l3 - l4, 0) where the
    l_i are the descending square roots of the spectrum of
    sqrt(rho) (F rho F) sqrt(rho), computed as the absolute eigenvalues
    of the symmetric matrix sqrt(rho) F sqrt(rho).
    """
    matrix = _coerce_density(rho)
    root = psd_sqrt(matrix)  # also enforces the PSD invariant of rho
    product = root @ SPIN_FLIP @ root
    eigen = jacobi_eigen((product + product.T) * 0.5)
    lams = np.sort(np.abs(eigen.values))[::-1]
    return _clip_unit(float(lams[0] - lams[1] - lams[2] - lams[3]), "concurrence")


def pure_state_concurrence(amps) -> float:
    """Concurrence 2|a00*a11 - a01*a10| of a normalized amplitude vector.

    Amplitudes are ordered |00>, |01>, |10>, |11>.  Agrees with
    :func:`wootters_concurrence` applied to the projector.
    """
    arr = np.asarray(amps)
    _require_real(arr, "amplitude vector")
    vec = np.asarray(arr, dtype=float).reshape(-1)
    if vec.shape != (4,):
        raise ValueError(f"amplitude vector must have 4 entries, got shape {arr.shape}")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"amplitude vector is not normalized: |amps| = {norm!r}")
    return _clip_unit(
        2.0 * abs(vec[0] * vec[3] - vec[1] * vec[2]), "pure-state concurrence"
    )


def ground_state_concurrence(e_j1: float, e_j2: float, e_m: float) -> float:
    """Concurrence of the T -> 0 state.

    For identical qubits (unique ground state) this equals
    e_m / sqrt(e_m**2 + e_j**2).
    """
    return wootters_concurrence(zero_temperature_state(e_j1, e_j2, e_m))


def thermal_concurrence(e_j1: float, e_j2: float, e_m: float, t: float) -> float:
    """Concurrence of the Gibbs state at temperature t (units of e_m/k)."""
    return wootters_concurrence(
        gibbs_state(build_degenerate_hamiltonian(e_j1, e_j2, e_m), t)
    )
