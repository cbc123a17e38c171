"""Dense real-symmetric linear algebra for small matrices.

This is the numerical kernel the rest of the package trusts: a cyclic
Jacobi eigensolver, a checked matrix product, and a positive-semidefinite
square root built on the eigensolver.  Everything here targets the 4x4
matrices of the two-qubit problem; the routines work for any small n but
make no attempt to be competitive beyond that.

All functions are pure: inputs are never mutated and no module state is
touched, so concurrent use needs no locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "EigenSystem",
    "NonSymmetricMatrixError",
    "NotPositiveSemidefiniteError",
    "jacobi_eigen",
    "mat_mul",
    "psd_sqrt",
]

# Relative tolerance for accepting a matrix as symmetric.
SYMMETRY_RTOL = 1e-12
# Jacobi sweeps stop once every off-diagonal magnitude is below this
# fraction of the input scale.
_CONVERGENCE_RTOL = 1e-14
# Eigenvalues above -PSD_TOL are treated as zero by psd_sqrt; anything
# below it is a genuine violation.
PSD_TOL = 1e-12
_MAX_SWEEPS = 60


class NonSymmetricMatrixError(ValueError):
    """Input violated the symmetric-matrix contract."""

    def __init__(self, max_asymmetry: float):
        self.max_asymmetry = float(max_asymmetry)
        super().__init__(
            f"matrix is not symmetric: max |m - m.T| element is {max_asymmetry:.6e}"
        )


class NotPositiveSemidefiniteError(ValueError):
    """Input to psd_sqrt had a significantly negative eigenvalue."""

    def __init__(self, eigenvalue: float):
        self.eigenvalue = float(eigenvalue)
        super().__init__(
            f"matrix is not positive semidefinite: eigenvalue {eigenvalue:.6e} "
            f"is below -{PSD_TOL:g}"
        )


@dataclass(frozen=True)
class EigenSystem:
    """Spectral decomposition of a real symmetric matrix.

    Attributes
    ----------
    values:
        Eigenvalues in ascending order.
    vectors:
        Orthonormal eigenvectors as columns; ``vectors[:, i]`` pairs with
        ``values[i]``.  Callers must not rely on the sign of a column.
    """

    values: np.ndarray
    vectors: np.ndarray


def _as_square(m, name: str = "matrix") -> np.ndarray:
    arr = np.asarray(m, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"{name} must be square, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} has non-finite entries")
    return arr


def jacobi_eigen(m) -> EigenSystem:
    """Diagonalize a real symmetric matrix with cyclic Jacobi rotations.

    Parameters
    ----------
    m:
        Square real matrix, symmetric to within ``SYMMETRY_RTOL`` relative
        to its largest element.

    Returns
    -------
    EigenSystem
        Ascending eigenvalues with orthonormal eigenvector columns.  Ties
        keep the order in which the diagonal entries settled.

    Raises
    ------
    NonSymmetricMatrixError
        If the asymmetry exceeds the contract tolerance.
    """
    arr = _as_square(m)
    scale = max(1.0, float(np.max(np.abs(arr))) if arr.size else 0.0)
    max_asymmetry = float(np.max(np.abs(arr - arr.T)))
    if max_asymmetry > SYMMETRY_RTOL * scale:
        raise NonSymmetricMatrixError(max_asymmetry)

    n = arr.shape[0]
    # Work on plain nested lists: for 4x4 problems scalar Python
    # arithmetic beats per-element ndarray access by a wide margin.
    a = ((arr + arr.T) * 0.5).tolist()
    v = np.eye(n).tolist()
    threshold = _CONVERGENCE_RTOL * scale

    converged = False
    for _ in range(_MAX_SWEEPS + 1):
        off = 0.0
        for p in range(n - 1):
            row = a[p]
            for q in range(p + 1, n):
                mag = abs(row[q])
                if mag > off:
                    off = mag
        if off <= threshold:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                # hypot keeps t accurate for |theta| >> 1 without overflow
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                shift = t * apq
                a[p][p] -= shift
                a[q][q] += shift
                a[p][q] = 0.0
                a[q][p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i][p]
                    aiq = a[i][q]
                    new_ip = aip - s * (aiq + tau * aip)
                    new_iq = aiq + s * (aip - tau * aiq)
                    a[i][p] = new_ip
                    a[p][i] = new_ip
                    a[i][q] = new_iq
                    a[q][i] = new_iq
                for i in range(n):
                    vi = v[i]
                    vip = vi[p]
                    viq = vi[q]
                    vi[p] = vip - s * (viq + tau * vip)
                    vi[q] = viq + s * (vip - tau * viq)
    if not converged:
        raise RuntimeError(f"Jacobi iteration failed to converge in {_MAX_SWEEPS} sweeps")

    diag = np.array([a[i][i] for i in range(n)])
    order = np.argsort(diag, kind="stable")
    return EigenSystem(values=diag[order], vectors=np.array(v)[:, order])


def mat_mul(a, b) -> np.ndarray:
    """Checked matrix product of two real matrices."""
    left = np.asarray(a, dtype=float)
    right = np.asarray(b, dtype=float)
    if left.ndim != 2 or right.ndim != 2:
        raise ValueError("mat_mul expects two 2-d matrices")
    if left.shape[1] != right.shape[0]:
        raise ValueError(
            f"dimension mismatch: cannot multiply {left.shape} by {right.shape}"
        )
    if not (np.isfinite(left).all() and np.isfinite(right).all()):
        raise ValueError("mat_mul operands must be finite")
    return left @ right


def psd_sqrt(m) -> np.ndarray:
    """Symmetric square root of a symmetric positive-semidefinite matrix.

    Eigenvalues in ``[-PSD_TOL, 0)`` are rounding debris and are clipped
    to zero; anything below ``-PSD_TOL`` raises
    :class:`NotPositiveSemidefiniteError` carrying the offending value.
    The result ``s`` is symmetric and satisfies ``s @ s ~ m``.
    """
    eigen = jacobi_eigen(m)
    smallest = float(eigen.values[0])
    if smallest < -PSD_TOL:
        raise NotPositiveSemidefiniteError(smallest)
    clipped = np.where(eigen.values > 0.0, eigen.values, 0.0)
    root = (eigen.vectors * np.sqrt(clipped)) @ eigen.vectors.T
    return (root + root.T) * 0.5
