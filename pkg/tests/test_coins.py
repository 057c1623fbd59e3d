import math

import numpy as np
import pytest

from pqwalk import apply_coin, general_coin, hadamard, identity_coin, is_unitary

S2 = math.sqrt(0.5)


def test_hadamard_entries():
    h = hadamard()
    assert h[0, 0] == S2
    assert h[0, 1] == S2
    assert h[1, 0] == S2
    assert h[1, 1] == -S2


def test_hadamard_is_unitary():
    assert is_unitary(hadamard(), 1e-12)


def test_identity_is_exact():
    assert np.array_equal(identity_coin(), np.eye(2))
    assert is_unitary(identity_coin(), 1e-12)


def test_hadamard_involution():
    s = np.array([(1 + 1j) / 2, (1 - 1j) / 2])
    back = apply_coin(hadamard(), apply_coin(hadamard(), s))
    assert np.max(np.abs(back - s)) <= 1e-15

    rng = np.random.default_rng(7)
    for _ in range(20):
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        v /= np.linalg.norm(v)
        back = apply_coin(hadamard(), apply_coin(hadamard(), v))
        assert np.max(np.abs(back - v)) <= 1e-14


def test_general_coin_hadamard_point():
    assert np.max(np.abs(general_coin(0.5, 0.0, 0.0) - hadamard())) <= 1e-15


def test_general_coin_identity_point():
    # theta + phi = pi forces the lower-right entry to +1
    c = general_coin(1.0, math.pi / 2, math.pi / 2)
    assert np.max(np.abs(c - identity_coin())) <= 1e-15


def test_general_coin_antidiagonal():
    c = general_coin(0.0, 0.0, 0.0)
    assert np.allclose(c, [[0, 1], [1, 0]], atol=1e-15)


@pytest.mark.parametrize(
    "kwargs,field",
    [
        (dict(rho=-0.1, theta=0.0, phi=0.0), "rho"),
        (dict(rho=1.1, theta=0.0, phi=0.0), "rho"),
        (dict(rho=0.5, theta=-0.2, phi=0.0), "theta"),
        (dict(rho=0.5, theta=math.pi + 0.1, phi=0.0), "theta"),
        (dict(rho=0.5, theta=0.0, phi=4.0), "phi"),
    ],
)
def test_general_coin_rejects_out_of_range(kwargs, field):
    with pytest.raises(ValueError, match=field):
        general_coin(**kwargs)


def test_general_coin_unitary_over_parameter_grid():
    rng = np.random.default_rng(2024)
    for _ in range(300):
        c = general_coin(
            float(rng.uniform(0, 1)),
            float(rng.uniform(0, math.pi)),
            float(rng.uniform(0, math.pi)),
        )
        assert is_unitary(c, 1e-12)
    # corners of the parameter box
    for rho in (0.0, 1.0):
        for theta in (0.0, math.pi):
            for phi in (0.0, math.pi):
                assert is_unitary(general_coin(rho, theta, phi), 1e-12)


def test_apply_coin_first_column():
    out = apply_coin(hadamard(), np.array([1.0, 0.0]))
    assert np.allclose(out, [S2, S2], atol=1e-15)


def test_apply_coin_matches_direct_multiply():
    # independent hand computation of the 2x2 product:
    # H (a, b) = ((a+b)/sqrt2, (a-b)/sqrt2) with a=(1+i)/2, b=(1-i)/2
    a, b = (1 + 1j) / 2, (1 - 1j) / 2
    expected = np.array([(a + b) * S2, (a - b) * S2])
    assert np.allclose(expected, [S2, 1j * S2], atol=1e-15)
    out = apply_coin(hadamard(), np.array([a, b]))
    assert np.max(np.abs(out - expected)) <= 1e-15


def test_apply_coin_identity_is_noop():
    s = np.array([0.6, 0.8j])
    assert np.array_equal(apply_coin(identity_coin(), s), s)


def test_apply_coin_preserves_norm():
    rng = np.random.default_rng(11)
    for _ in range(50):
        c = general_coin(
            float(rng.uniform(0, 1)),
            float(rng.uniform(0, math.pi)),
            float(rng.uniform(0, math.pi)),
        )
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        v /= np.linalg.norm(v)
        out = apply_coin(c, v)
        assert abs(np.sum(np.abs(out) ** 2) - 1.0) <= 1e-14


def test_is_unitary_rejects_non_unitary():
    assert not is_unitary(np.array([[1.0, 0.0], [0.0, 2.0]]), 1e-12)
    assert not is_unitary(np.ones((2, 3)))


def test_is_unitary_tolerance_validation():
    with pytest.raises(ValueError, match="tol"):
        is_unitary(hadamard(), 0.0)
