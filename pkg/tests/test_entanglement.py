import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from qubitent.entanglement import (
    SPIN_FLIP,
    ground_state_concurrence,
    pure_state_concurrence,
    thermal_concurrence,
    wootters_concurrence,
)
from qubitent.linalg import jacobi_eigen, psd_sqrt
from qubitent.model import identical_eigensystem
from qubitent.thermal import ThermalState, zero_temperature_state

ROOT2 = math.sqrt(2.0)
SINGLET = np.array([0.0, 1.0, -1.0, 0.0]) / ROOT2


def projector(vec: np.ndarray) -> np.ndarray:
    return np.outer(vec, vec)


def mu_route_concurrence(matrix: np.ndarray) -> float:
    """Literal eigenvalue-of-the-product route, kept as a cross-check."""
    root = psd_sqrt(matrix)
    product = root @ (SPIN_FLIP @ matrix @ SPIN_FLIP) @ root
    mu = jacobi_eigen((product + product.T) * 0.5).values
    lams = np.sqrt(np.clip(mu, 0.0, None))[::-1]
    return max(0.0, float(lams[0] - lams[1] - lams[2] - lams[3]))


def test_spin_flip_structure():
    expected = np.zeros((4, 4))
    expected[0, 3] = expected[3, 0] = -1.0
    expected[1, 2] = expected[2, 1] = 1.0
    np.testing.assert_array_equal(SPIN_FLIP, expected)
    np.testing.assert_array_equal(SPIN_FLIP @ SPIN_FLIP, np.eye(4))
    assert not SPIN_FLIP.flags.writeable


def test_singlet_is_maximally_entangled():
    assert wootters_concurrence(projector(SINGLET)) == pytest.approx(1.0, abs=1e-12)


def test_maximally_mixed_is_separable():
    assert wootters_concurrence(np.eye(4) / 4) == 0.0


def test_werner_family():
    # diagonal in the Bell basis: C = max(0, (3p - 1)/2)
    for p in (0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0):
        rho = p * projector(SINGLET) + (1.0 - p) * np.eye(4) / 4
        expected = max(0.0, (3.0 * p - 1.0) / 2.0)
        assert wootters_concurrence(rho) == pytest.approx(expected, abs=1e-12)


def test_cold_state_reference_value():
    rho = zero_temperature_state(3.625, 3.625, 1.0)
    assert wootters_concurrence(rho) == pytest.approx(0.26593, abs=1e-4)
    assert wootters_concurrence(rho) == pytest.approx(1.0 / math.sqrt(14.140625), abs=1e-12)


def test_complex_input_rejected():
    rho = np.eye(4, dtype=complex) / 4
    with pytest.raises(TypeError, match="complex"):
        wootters_concurrence(rho)
    with pytest.raises(TypeError, match="complex"):
        pure_state_concurrence(np.array([1j, 0, 0, 0]))


def test_wootters_rejects_invalid_density():
    with pytest.raises(ValueError):
        wootters_concurrence(np.eye(4))  # trace 4
    with pytest.raises(ValueError):
        wootters_concurrence(np.eye(3) / 3)  # wrong dimension


def test_pure_product_state():
    assert pure_state_concurrence([1.0, 0.0, 0.0, 0.0]) == 0.0


def test_pure_bell_state():
    assert pure_state_concurrence(np.array([1.0, 0.0, 0.0, -1.0]) / ROOT2) == pytest.approx(
        1.0, abs=1e-12
    )


def test_pure_cold_intercept():
    psi4 = identical_eigensystem(0.5, 1.0).states[:, 3]
    value = pure_state_concurrence(psi4)
    assert value == pytest.approx(1.0 / math.sqrt(1.25), abs=1e-12)
    assert value == pytest.approx(0.894427, abs=1e-6)
    # oracle: full mixed-state route on the projector
    assert value == pytest.approx(wootters_concurrence(projector(psi4)), abs=1e-10)


def test_pure_state_requires_normalization():
    with pytest.raises(ValueError, match="normalized"):
        pure_state_concurrence([1.0, 1.0, 0.0, 0.0])


def test_ground_state_reference_points():
    assert ground_state_concurrence(3.625, 3.625, 1.0) == pytest.approx(0.26593, abs=1e-4)
    point_b = ground_state_concurrence(13.6, 17.2, 1.0)
    # closed form from the even-block mixing coefficient
    a4 = (math.sqrt(952.64) - 2.0) / 30.8
    assert point_b == pytest.approx((1.0 - a4**2) / (1.0 + a4**2), abs=1e-9)
    assert point_b == pytest.approx(0.064, abs=1e-3)
    assert ground_state_concurrence(0.0, 0.0, 1.0) == 0.0


def test_ground_state_identical_closed_form():
    for e_j in (0.5, 1.0, 3.625, 17.2):
        expected = 1.0 / math.sqrt(1.0 + e_j**2)
        assert ground_state_concurrence(e_j, e_j, 1.0) == pytest.approx(expected, abs=1e-10)


def test_thermal_cold_plateau():
    assert thermal_concurrence(3.625, 3.625, 1.0, 0.001) == pytest.approx(0.26593, abs=1e-4)


def test_thermal_zero_josephson_is_exactly_zero():
    for t in (0.01, 1.0, 100.0):
        assert thermal_concurrence(0.0, 0.0, 1.0, t) == 0.0


def test_thermal_hot_limit():
    assert thermal_concurrence(2.0, 3.0, 1.0, 1e6) == pytest.approx(0.0, abs=1e-9)


def test_pure_state_consistency_bulk():
    rng = np.random.default_rng(314)
    worst = 0.0
    for _ in range(10_000):
        vec = rng.normal(size=4)
        vec /= np.linalg.norm(vec)
        diff = abs(pure_state_concurrence(vec) - wootters_concurrence(projector(vec)))
        worst = max(worst, diff)
    assert worst <= 1e-9


def test_mu_route_agreement():
    rng = np.random.default_rng(1234)
    from qubitent.model import build_degenerate_hamiltonian
    from qubitent.thermal import gibbs_state

    for _ in range(200):
        e_j1, e_j2 = rng.uniform(-20, 20, 2)
        e_m = rng.uniform(0.1, 5)
        t = rng.uniform(0.01, 100)
        rho = gibbs_state(build_degenerate_hamiltonian(e_j1, e_j2, e_m), t)
        assert wootters_concurrence(rho) == pytest.approx(
            mu_route_concurrence(rho.matrix), abs=1e-7
        )


def test_local_symmetries():
    rng = np.random.default_rng(2718)
    for _ in range(300):
        e_j1, e_j2 = rng.uniform(-20, 20, 2)
        e_m = rng.uniform(0.1, 5)
        t = rng.uniform(0.01, 100)
        base = thermal_concurrence(e_j1, e_j2, e_m, t)
        assert thermal_concurrence(e_j2, e_j1, e_m, t) == pytest.approx(base, abs=1e-10)
        assert thermal_concurrence(-e_j1, e_j2, e_m, t) == pytest.approx(base, abs=1e-10)
        assert thermal_concurrence(e_j1, -e_j2, e_m, t) == pytest.approx(base, abs=1e-10)


def test_uniform_scaling_invariance():
    rng = np.random.default_rng(161)
    for _ in range(100):
        e_j1, e_j2 = rng.uniform(-20, 20, 2)
        e_m = rng.uniform(0.1, 5)
        t = rng.uniform(0.01, 100)
        base = thermal_concurrence(e_j1, e_j2, e_m, t)
        for s in (0.1, 3.0, 100.0):
            scaled = thermal_concurrence(s * e_j1, s * e_j2, s * e_m, s * t)
            assert scaled == pytest.approx(base, abs=1e-10)


def test_output_always_in_unit_interval():
    rng = np.random.default_rng(404)
    from qubitent.model import build_degenerate_hamiltonian
    from qubitent.thermal import gibbs_state

    for _ in range(500):
        e_j1, e_j2 = rng.uniform(-20, 20, 2)
        e_m = rng.uniform(0.1, 5)
        t = rng.uniform(0.01, 100)
        value = wootters_concurrence(
            gibbs_state(build_degenerate_hamiltonian(e_j1, e_j2, e_m), t)
        )
        assert 0.0 <= value <= 1.0


@settings(max_examples=300, deadline=None, derandomize=True)
@given(
    raw=arrays(
        np.float64,
        (4,),
        elements=st.floats(min_value=-1.0, max_value=1.0, allow_nan=False),
    )
)
def test_pure_state_consistency_property(raw):
    norm = float(np.linalg.norm(raw))
    if norm < 1e-3:
        return
    vec = raw / norm
    assert pure_state_concurrence(vec) == pytest.approx(
        wootters_concurrence(projector(vec)), abs=1e-9
    )


def test_thermal_state_input_accepted():
    state = ThermalState(matrix=np.eye(4) / 4)
    assert wootters_concurrence(state) == 0.0
