import math

import numpy as np
import pytest

from catsize.channels import (
    CHANNEL_KINDS,
    DEPHASING,
    DEPOLARIZING,
    PAULI_Z,
    ChannelSpec,
    apply_channel,
    singular_values_2x2,
    trace_norm,
)
from catsize.core import CatParams, branch_dyad

GAMMA_TS = [0.0, 0.05, 0.5, 2.0, 10.0]
EPSILONS = [0.0, 0.1, 0.3, math.pi / 4, math.pi / 2 - 0.1, math.pi / 2]


def random_operators(count, seed=3):
    rng = np.random.default_rng(seed)
    return rng.normal(size=(count, 2, 2)) + 1j * rng.normal(size=(count, 2, 2))


def test_channel_spec_validation():
    with pytest.raises(ValueError):
        ChannelSpec("amplitude-damping", 0.1)
    with pytest.raises(ValueError):
        ChannelSpec(DEPHASING, -0.1)
    assert 0.0 < ChannelSpec(DEPOLARIZING, 5.0).mu <= 1.0


@pytest.mark.parametrize("kind", CHANNEL_KINDS)
@pytest.mark.parametrize("gamma_t", GAMMA_TS)
def test_kraus_completeness(kind, gamma_t):
    ch = ChannelSpec(kind, gamma_t)
    acc = sum(k.conj().T @ k for k in ch.kraus_operators())
    assert np.max(np.abs(acc - np.eye(2))) < 1e-12


@pytest.mark.parametrize("kind", CHANNEL_KINDS)
@pytest.mark.parametrize("gamma_t", GAMMA_TS)
def test_closed_form_matches_kraus(kind, gamma_t):
    ch = ChannelSpec(kind, gamma_t)
    kraus = ch.kraus_operators()
    for x in random_operators(6):
        generic = sum(k @ x @ k.conj().T for k in kraus)
        assert np.max(np.abs(apply_channel(ch, x) - generic)) < 1e-14


def test_dephasing_halves_offdiag_at_ln2():
    ch = ChannelSpec(DEPHASING, math.log(2.0))
    dyad = np.array([[0, 1], [0, 0]], dtype=complex)
    assert np.max(np.abs(apply_channel(ch, dyad) - 0.5 * dyad)) < 1e-15


@pytest.mark.parametrize("kind", CHANNEL_KINDS)
def test_zero_time_is_identity(kind):
    ch = ChannelSpec(kind, 0.0)
    for x in random_operators(4):
        assert np.max(np.abs(apply_channel(ch, x) - x)) < 1e-15


def test_depolarizing_branch_dyad_entries():
    # E(b0) = c (1+mu)/2 |0><0| + c (1-mu)/2 |1><1| + s mu |0><1|; the
    # |1><1| weight carries tr(b0) = c through the (1-mu)/2 mixing term
    p = CatParams(5, 0.6)
    c, s = p.c_eps, p.s_eps
    for gamma_t in [0.05, 0.5, 2.0]:
        ch = ChannelSpec(DEPOLARIZING, gamma_t)
        mu = ch.mu
        expected = np.array(
            [[c * (1 + mu) / 2, s * mu], [0.0, c * (1 - mu) / 2]], dtype=complex
        )
        assert np.max(np.abs(apply_channel(ch, branch_dyad(p)) - expected)) < 1e-14


@pytest.mark.parametrize("kind", CHANNEL_KINDS)
@pytest.mark.parametrize("gamma_t", GAMMA_TS)
def test_trace_preservation(kind, gamma_t):
    ch = ChannelSpec(kind, gamma_t)
    rng = np.random.default_rng(11)
    for _ in range(5):
        z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        rho = z @ z.conj().T
        rho /= np.trace(rho)
        out = apply_channel(ch, rho)
        assert abs(np.trace(out) - 1.0) < 1e-12


@pytest.mark.parametrize("kind", CHANNEL_KINDS)
@pytest.mark.parametrize("gamma_t", GAMMA_TS)
def test_choi_matrix_is_psd(kind, gamma_t):
    choi = ChannelSpec(kind, gamma_t).choi_matrix()
    assert np.min(np.linalg.eigvalsh(choi)) > -1e-12


@pytest.mark.parametrize("eps", EPSILONS)
@pytest.mark.parametrize("gamma_t", GAMMA_TS)
def test_channel_norm_equality(eps, gamma_t):
    # both channels shrink the branch dyad's trace norm to sqrt(d)
    p = CatParams(3, eps)
    b0 = branch_dyad(p)
    mu = math.exp(-gamma_t)
    sqrt_d = math.sqrt(p.c_eps**2 + p.s_eps**2 * mu * mu)
    n_deph = trace_norm(apply_channel(ChannelSpec(DEPHASING, gamma_t), b0))
    n_depol = trace_norm(apply_channel(ChannelSpec(DEPOLARIZING, gamma_t), b0))
    assert abs(n_deph - n_depol) < 1e-12
    assert abs(n_deph - sqrt_d) < 1e-12


def test_dephasing_semigroup():
    for t1, t2 in [(0.1, 0.2), (0.7, 1.3), (0.0, 2.0)]:
        once = ChannelSpec(DEPHASING, t1 + t2)
        for x in random_operators(4, seed=5):
            composed = apply_channel(
                ChannelSpec(DEPHASING, t1), apply_channel(ChannelSpec(DEPHASING, t2), x)
            )
            assert np.max(np.abs(composed - apply_channel(once, x))) < 1e-12


def test_trace_norm_fixed_points():
    assert trace_norm(np.array([[0, 1], [0, 0]])) == pytest.approx(1.0, abs=1e-15)
    assert trace_norm(PAULI_Z) == pytest.approx(2.0, abs=1e-15)


def test_trace_norm_matches_svd():
    for x in random_operators(20, seed=9):
        reference = np.linalg.svd(x, compute_uv=False).sum()
        assert trace_norm(x) == pytest.approx(reference, rel=1e-12)
        s1, s2 = singular_values_2x2(x)
        assert s1 >= s2 >= 0.0
        np.testing.assert_allclose(
            [s1, s2], np.linalg.svd(x, compute_uv=False), rtol=1e-10, atol=1e-12
        )


def test_trace_norm_multiplicative_under_tensor_square():
    for x in random_operators(10, seed=13):
        dense = np.linalg.svd(np.kron(x, x), compute_uv=False).sum()
        assert dense == pytest.approx(trace_norm(x) ** 2, rel=1e-10)


def test_adjoint_involution():
    for x in random_operators(5, seed=17):
        assert np.array_equal(x.conj().T.conj().T, x)


def test_shape_guards():
    with pytest.raises(ValueError):
        trace_norm(np.eye(3))
    with pytest.raises(ValueError):
        apply_channel(ChannelSpec(DEPHASING, 0.1), np.eye(4))
