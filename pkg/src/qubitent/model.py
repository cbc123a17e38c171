"""Two-qubit Hamiltonians of the capacitively coupled charge-qubit pair.

Convention, fixed once for the whole package: the computational basis is
ordered ``|00>, |01>, |10>, |11>``, qubit 1 is the left tensor factor and
``sigma_z|0> = +|0>``.  Basis-independent quantities (spectra, concurrence)
do not depend on this choice, but matrix dumps are bit-comparable only
under it.

The full Hamiltonian is

    H = -1/2 * ( h1*sz1 + h2*sz2 + e_j1*sx1 + e_j2*sx2 - 2*e_m*szz )

with gate-charge dependent longitudinal fields

    h1 = 4*e_c1*(1/2 - n_g1) + 2*e_m*(1/2 - n_g2)
    h2 = 4*e_c2*(1/2 - n_g2) + 2*e_m*(1/2 - n_g1).

At the charge degeneracy point (n_g1 = n_g2 = 1/2) both fields vanish and
the model reduces to transverse terms plus the zz coupling.  That reduced
Hamiltonian conserves the product sx1*sx2, so it splits into two 2x2
blocks spanned by ``|00> +- |11>`` and ``|01> +- |10>``; every closed-form
eigenpair below comes from those blocks.

Energies are dimensionless multiples of the coupling e_m (with k = 1);
all derived quantities are invariant under a uniform rescaling of the
energies and the temperature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BASIS_LABELS",
    "QubitParams",
    "AnalyticEigensystem",
    "IdenticalEigensystem",
    "GroundStateInfo",
    "build_full_hamiltonian",
    "build_degenerate_hamiltonian",
    "analytic_eigensystem",
    "identical_eigensystem",
    "ground_state",
    "degeneracy_threshold",
]

BASIS_LABELS = ("|00>", "|01>", "|10>", "|11>")

_SX = np.array([[0.0, 1.0], [1.0, 0.0]])
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]])
_I2 = np.eye(2)

SIGMA_X1 = np.kron(_SX, _I2)
SIGMA_X2 = np.kron(_I2, _SX)
SIGMA_Z1 = np.kron(_SZ, _I2)
SIGMA_Z2 = np.kron(_I2, _SZ)
SIGMA_ZZ = np.kron(_SZ, _SZ)


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


def _require_coupling(e_m: float) -> float:
    e_m = _require_finite("e_m", e_m)
    if e_m <= 0.0:
        raise ValueError(f"coupling energy e_m must be > 0, got {e_m!r}")
    return e_m


@dataclass(frozen=True)
class QubitParams:
    """Device operating point.

    Charging (``e_c``), Josephson (``e_j``) and mutual coupling (``e_m``)
    energies share one energy unit; ``n_g1``/``n_g2`` are the normalized
    gate charges.  Josephson energies may take either sign; the coupling
    must be positive.
    """

    e_c1: float
    e_c2: float
    e_j1: float
    e_j2: float
    e_m: float
    n_g1: float = 0.5
    n_g2: float = 0.5

    def __post_init__(self):
        for name in ("e_c1", "e_c2", "e_j1", "e_j2", "n_g1", "n_g2"):
            _require_finite(name, getattr(self, name))
        _require_coupling(self.e_m)


@dataclass(frozen=True)
class AnalyticEigensystem:
    """Closed-form eigenpairs of the degeneracy-point Hamiltonian.

    ``energies`` lists the four levels in the fixed labelling order
    psi_1..psi_4 = (-sqrt(a_big)/2, +sqrt(a_big)/2, +sqrt(b_big)/2,
    -sqrt(b_big)/2); ``states[:, i]`` is the matching eigenvector.
    psi_1/psi_2 live in the odd-parity block (``|00> - |11>``,
    ``|01> - |10>``), psi_3/psi_4 in the even one.

    ``a1..a4`` are the conventional mixing-coefficient closed forms

        a1 = (sqrt(a_big) + 2*e_m) / (e_j1 - e_j2)
        a2 = (sqrt(a_big) - 2*e_m) / (e_j1 - e_j2)
        a3 = (sqrt(b_big) + 2*e_m) / (e_j1 + e_j2)
        a4 = (sqrt(b_big) - 2*e_m) / (e_j1 + e_j2)

    reported as ``None`` (degenerate limit) when the relevant denominator
    is below ``degeneracy_threshold``.  The states themselves are built
    from a cancellation-free two-component form, so they remain exact
    eigenvectors arbitrarily close to (and at) the degenerate limits,
    where they reduce to the Bell combinations.  Note the ground even
    state carries the larger mixing coefficient a3 (a3 * a4 = 1), i.e.
    psi_4 is proportional to ``(1, a3, a3, 1)`` and psi_3 to
    ``(1, -a4, -a4, 1)``.

    ``norms`` are the normalizations ``sqrt(2 + 2*a_i**2)`` of the
    coefficient forms, ``None`` where the coefficient is flagged.
    """

    a_big: float
    b_big: float
    energies: np.ndarray
    a1: float | None
    a2: float | None
    a3: float | None
    a4: float | None
    states: np.ndarray
    norms: tuple[float | None, float | None, float | None, float | None]


@dataclass(frozen=True)
class IdenticalEigensystem:
    """Eigenpairs for equal Josephson energies.

    Levels in labelling order psi_1..psi_4 are
    (-e_m, +e_m, +sqrt(d_big), -sqrt(d_big)) with d_big = e_m**2 + e_j**2.
    psi_1 = (|01> - |10>)/sqrt(2) and psi_2 = (|00> - |11>)/sqrt(2) are
    Bell states for every e_j.  psi_3 and psi_4 mix ``|00> + |11>`` with
    ``|01> + |10>`` through

        xi_minus = (e_m - sqrt(d_big)) / e_j   (psi_3, norm n_plus)
        xi_plus  = (e_m + sqrt(d_big)) / e_j   (psi_4, norm n_minus)

    At e_j = 0 the ratios are undefined (``None``), the spectrum pairs up
    (``degenerate`` is set) and psi_3, psi_4 become the remaining Bell
    states (|00> + |11>)/sqrt(2) and (|01> + |10>)/sqrt(2).
    """

    d_big: float
    xi_plus: float | None
    xi_minus: float | None
    energies: np.ndarray
    states: np.ndarray
    n_plus: float | None
    n_minus: float | None
    degenerate: bool


@dataclass(frozen=True)
class GroundStateInfo:
    """Lowest eigenspace of the degeneracy-point Hamiltonian.

    ``states`` has one orthonormal column per ground vector; ``degenerate``
    is set exactly when there are two.
    """

    energy: float
    states: np.ndarray
    degenerate: bool


def degeneracy_threshold(e_j1: float, e_j2: float) -> float:
    """Scale below which |e_j1 -+ e_j2| is treated as degenerate."""
    return 1e-9 * max(1.0, abs(e_j1) + abs(e_j2))


def _two_qubit_hamiltonian(h1, h2, e_j1, e_j2, e_m) -> np.ndarray:
    return -0.5 * (
        h1 * SIGMA_Z1
        + h2 * SIGMA_Z2
        + e_j1 * SIGMA_X1
        + e_j2 * SIGMA_X2
        - 2.0 * e_m * SIGMA_ZZ
    )


def build_full_hamiltonian(params: QubitParams) -> np.ndarray:
    """4x4 Hamiltonian including gate-charge offsets.

    At ``n_g1 = n_g2 = 0.5`` this is element-wise identical to
    :func:`build_degenerate_hamiltonian` (same arithmetic, fields exactly
    zero).
    """
    h1 = 4.0 * params.e_c1 * (0.5 - params.n_g1) + 2.0 * params.e_m * (0.5 - params.n_g2)
    h2 = 4.0 * params.e_c2 * (0.5 - params.n_g2) + 2.0 * params.e_m * (0.5 - params.n_g1)
    return _two_qubit_hamiltonian(h1, h2, params.e_j1, params.e_j2, params.e_m)


def build_degenerate_hamiltonian(e_j1: float, e_j2: float, e_m: float) -> np.ndarray:
    """4x4 Hamiltonian at the charge degeneracy point.

    Diagonal is ``(e_m, -e_m, -e_m, e_m)``; the transverse terms put
    ``-e_j2/2`` on the single-flip entries of qubit 2 ((0,1) and (2,3))
    and ``-e_j1/2`` on those of qubit 1 ((0,2) and (1,3)).
    """
    e_j1 = _require_finite("e_j1", e_j1)
    e_j2 = _require_finite("e_j2", e_j2)
    e_m = _require_coupling(e_m)
    return _two_qubit_hamiltonian(0.0, 0.0, e_j1, e_j2, e_m)


def _unit2(x: float, y: float) -> tuple[float, float]:
    norm = math.hypot(x, y)
    return x / norm, y / norm


def _sign_fixed(vec: np.ndarray) -> np.ndarray:
    """Deterministic global sign: largest-magnitude amplitude positive."""
    lead = int(np.argmax(np.abs(vec)))
    return -vec if vec[lead] < 0.0 else vec


_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _odd_parity_states(half_diff: float, e_m: float) -> tuple[np.ndarray, np.ndarray]:
    """Ground/excited eigenvectors of the (|00>-|11>, |01>-|10>) block.

    The block matrix is [[e_m, half_diff], [half_diff, -e_m]] with
    half_diff = (e_j1 - e_j2)/2; eigenvalues -+hypot(half_diff, e_m).
    The two-component forms below have no cancelling subtraction, so they
    stay exact through the half_diff -> 0 limit.
    """
    level = math.hypot(half_diff, e_m)
    gx, gy = _unit2(half_diff, -(e_m + level))
    ex, ey = _unit2(e_m + level, half_diff)
    ground = np.array([gx, gy, -gy, -gx]) * _INV_SQRT2
    excited = np.array([ex, ey, -ey, -ex]) * _INV_SQRT2
    return _sign_fixed(ground), _sign_fixed(excited)


def _even_parity_states(half_sum: float, e_m: float) -> tuple[np.ndarray, np.ndarray]:
    """Ground/excited eigenvectors of the (|00>+|11>, |01>+|10>) block.

    Block matrix [[e_m, -half_sum], [-half_sum, -e_m]] with
    half_sum = (e_j1 + e_j2)/2; eigenvalues -+hypot(half_sum, e_m).
    """
    level = math.hypot(half_sum, e_m)
    gx, gy = _unit2(half_sum, e_m + level)
    ex, ey = _unit2(e_m + level, -half_sum)
    ground = np.array([gx, gy, gy, gx]) * _INV_SQRT2
    excited = np.array([ex, ey, ey, ex]) * _INV_SQRT2
    return _sign_fixed(ground), _sign_fixed(excited)


def analytic_eigensystem(e_j1: float, e_j2: float, e_m: float) -> AnalyticEigensystem:
    """Closed-form spectral decomposition of the degeneracy-point model."""
    e_j1 = _require_finite("e_j1", e_j1)
    e_j2 = _require_finite("e_j2", e_j2)
    e_m = _require_coupling(e_m)

    diff = e_j1 - e_j2
    total = e_j1 + e_j2
    a_big = diff * diff + 4.0 * e_m * e_m
    b_big = total * total + 4.0 * e_m * e_m
    level_odd = math.hypot(0.5 * diff, e_m)    # sqrt(a_big)/2
    level_even = math.hypot(0.5 * total, e_m)  # sqrt(b_big)/2

    eps = degeneracy_threshold(e_j1, e_j2)
    root_a = 2.0 * level_odd
    root_b = 2.0 * level_even
    if abs(diff) > eps:
        a1: float | None = (root_a + 2.0 * e_m) / diff
        a2: float | None = (root_a - 2.0 * e_m) / diff
    else:
        a1 = a2 = None
    if abs(total) > eps:
        a3: float | None = (root_b + 2.0 * e_m) / total
        a4: float | None = (root_b - 2.0 * e_m) / total
    else:
        a3 = a4 = None

    psi1, psi2 = _odd_parity_states(0.5 * diff, e_m)
    psi4, psi3 = _even_parity_states(0.5 * total, e_m)

    def _norm(a: float | None) -> float | None:
        return None if a is None else math.sqrt(2.0 + 2.0 * a * a)

    return AnalyticEigensystem(
        a_big=a_big,
        b_big=b_big,
        energies=np.array([-level_odd, level_odd, level_even, -level_even]),
        a1=a1,
        a2=a2,
        a3=a3,
        a4=a4,
        states=np.column_stack([psi1, psi2, psi3, psi4]),
        norms=(_norm(a1), _norm(a2), _norm(a3), _norm(a4)),
    )


def identical_eigensystem(e_j: float, e_m: float) -> IdenticalEigensystem:
    """Spectral decomposition for equal Josephson energies."""
    e_j = _require_finite("e_j", e_j)
    e_m = _require_coupling(e_m)

    d_big = e_m * e_m + e_j * e_j
    root = math.hypot(e_j, e_m)
    psi1 = np.array([0.0, 1.0, -1.0, 0.0]) * _INV_SQRT2
    psi2 = np.array([1.0, 0.0, 0.0, -1.0]) * _INV_SQRT2
    psi4, psi3 = _even_parity_states(e_j, e_m)

    degenerate = e_j == 0.0
    if degenerate:
        xi_plus = xi_minus = n_plus = n_minus = None
    else:
        xi_plus = (e_m + root) / e_j
        xi_minus = (e_m - root) / e_j
        n_plus = math.sqrt(2.0 + 2.0 * xi_minus * xi_minus)
        n_minus = math.sqrt(2.0 + 2.0 * xi_plus * xi_plus)

    return IdenticalEigensystem(
        d_big=d_big,
        xi_plus=xi_plus,
        xi_minus=xi_minus,
        energies=np.array([-e_m, e_m, root, -root]),
        states=np.column_stack([psi1, psi2, psi3, psi4]),
        n_plus=n_plus,
        n_minus=n_minus,
        degenerate=degenerate,
    )


def ground_state(e_j1: float, e_j2: float, e_m: float) -> GroundStateInfo:
    """Lowest eigenspace of the degeneracy-point Hamiltonian.

    The odd-parity minimum -sqrt(a_big)/2 and the even-parity minimum
    -sqrt(b_big)/2 compete; the strictly lower one wins (even iff
    e_j1*e_j2 > 0, odd iff < 0).  A tie within the degeneracy threshold,
    which happens exactly when e_j1*e_j2 = 0, yields a two-dimensional
    ground space holding one vector from each parity block.
    """
    e_j1 = _require_finite("e_j1", e_j1)
    e_j2 = _require_finite("e_j2", e_j2)
    e_m = _require_coupling(e_m)

    level_odd = math.hypot(0.5 * (e_j1 - e_j2), e_m)
    level_even = math.hypot(0.5 * (e_j1 + e_j2), e_m)
    odd_ground, _ = _odd_parity_states(0.5 * (e_j1 - e_j2), e_m)
    even_ground, _ = _even_parity_states(0.5 * (e_j1 + e_j2), e_m)

    eps = degeneracy_threshold(e_j1, e_j2)
    if abs(level_odd - level_even) <= eps:
        return GroundStateInfo(
            energy=-max(level_odd, level_even),
            states=np.column_stack([odd_ground, even_ground]),
            degenerate=True,
        )
    if level_even > level_odd:
        return GroundStateInfo(
            energy=-level_even, states=even_ground.reshape(4, 1), degenerate=False
        )
    return GroundStateInfo(
        energy=-level_odd, states=odd_ground.reshape(4, 1), degenerate=False
    )
