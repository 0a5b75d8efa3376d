"""Oracle-equivalence validation suite backing the ``validate`` CLI command.

Every closed form in the analysis modules is checked against its dense
brute-force counterpart over a standard grid; each check reports the worst
deviation seen and the tolerance it is held to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import channels, decoherence, distillation, loss, oracle
from .core import CatParams, normalization_constant, reduced_rho1

__all__ = ["CheckResult", "STANDARD_EPSILONS", "STANDARD_GAMMA_TS", "run_validation"]

STANDARD_EPSILONS = (0.1, 0.3, math.pi / 4, math.pi / 2 - 0.1)
STANDARD_GAMMA_TS = (0.05, 0.5, 2.0)
STANDARD_LAMBDAS = (0.1, 0.3, 0.7)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_err: float
    tol: float


def _result(name: str, max_err: float, tol: float) -> CheckResult:
    return CheckResult(name=name, passed=max_err <= tol, max_err=max_err, tol=tol)


def _check_cat_state_norm(max_n: int) -> CheckResult:
    worst = 0.0
    for n in range(2, max_n + 1):
        for eps in STANDARD_EPSILONS + (math.pi / 2,):
            params = CatParams(n, eps)
            phi1 = np.array([1.0, 0.0], dtype=complex)
            phi2 = np.array([params.c_eps, params.s_eps], dtype=complex)
            raw = oracle.kron_all([phi1.reshape(2, 1)] * n).ravel() + oracle.kron_all(
                [phi2.reshape(2, 1)] * n
            ).ravel()
            worst = max(
                worst,
                abs(float(np.vdot(raw, raw).real) - normalization_constant(params)),
            )
    return _result("cat_state_normalization", worst, 1e-12)


def _check_ghz_reduction(max_n: int) -> CheckResult:
    worst = 0.0
    for n in range(2, max_n + 1):
        cat = oracle.build_cat_state(CatParams(n, math.pi / 2))
        ghz = oracle.build_ghz_state(n)
        worst = max(worst, float(np.max(np.abs(cat - ghz))))
    return _result("ghz_reduction_at_eps_half_pi", worst, 1e-15)


def _evolved_block_norm(n: int, eps: float, kind: str, gamma_t: float) -> float:
    params = CatParams(n, eps)
    phi1 = np.array([1.0, 0.0], dtype=complex)
    phi2 = np.array([params.c_eps, params.s_eps], dtype=complex)
    block = oracle.kron_power(np.outer(phi1, phi2.conj()), n)
    evolved = oracle.apply_product_channel(block, channels.ChannelSpec(kind, gamma_t))
    return oracle.dense_trace_norm(evolved)


def _check_decoherence(max_n: int, kind: str) -> CheckResult:
    worst = 0.0
    for n in range(2, max_n + 1):
        for eps in STANDARD_EPSILONS:
            for gamma_t in STANDARD_GAMMA_TS:
                closed = decoherence.cat_offdiag_norm(CatParams(n, eps), gamma_t, kind)
                dense = _evolved_block_norm(n, eps, kind, gamma_t)
                worst = max(worst, abs(dense - closed) / closed)
    return _result(f"decoherence_closed_form_{kind}", worst, 1e-9)


def _check_channel_equivalence(max_n: int) -> CheckResult:
    worst = 0.0
    for n in range(2, max_n + 1):
        for eps in STANDARD_EPSILONS:
            for gamma_t in STANDARD_GAMMA_TS:
                a = _evolved_block_norm(n, eps, channels.DEPHASING, gamma_t)
                b = _evolved_block_norm(n, eps, channels.DEPOLARIZING, gamma_t)
                worst = max(worst, abs(a - b) / a)
    return _result("channel_equivalence", worst, 1e-12)


def _check_ghz_rate(max_n: int) -> CheckResult:
    dyad = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    worst = 0.0
    for n in range(1, max_n + 1):
        for gamma_t in STANDARD_GAMMA_TS:
            for kind in channels.CHANNEL_KINDS:
                block = oracle.kron_power(dyad, n)
                evolved = oracle.apply_product_channel(
                    block, channels.ChannelSpec(kind, gamma_t)
                )
                dense = oracle.dense_trace_norm(evolved)
                closed = decoherence.ghz_offdiag_norm(n, gamma_t)
                worst = max(worst, abs(dense - closed) / closed)
    return _result("ghz_decay_rate", worst, 1e-12)


def _check_reduced_rho1(max_n: int) -> CheckResult:
    worst = 0.0
    for n in range(2, max_n + 1):
        for eps in STANDARD_EPSILONS + (math.pi / 2,):
            params = CatParams(n, eps)
            dense = oracle.partial_trace_to_first(oracle.build_cat_state(params))
            worst = max(worst, float(np.max(np.abs(dense - reduced_rho1(params)))))
    return _result("reduced_rho1_vs_partial_trace", worst, 1e-12)


def _check_protocol(max_n: int) -> tuple[CheckResult, CheckResult, CheckResult]:
    worst_q = 0.0
    worst_fid = 0.0
    worst_complete = 0.0
    for n in range(2, max_n + 1):
        for eps in STANDARD_EPSILONS:
            params = CatParams(n, eps)
            q_dense, branches = oracle.enumerate_protocol(params)
            q_closed = distillation.outcome_distribution(params).q
            worst_q = max(worst_q, float(np.max(np.abs(q_dense - q_closed))))
            for branch in branches:
                if branch.n_success >= 1 and branch.state is not None:
                    fid = oracle.ghz_fidelity(branch, n)
                    worst_fid = max(worst_fid, abs(fid - 1.0))
            filt = distillation.build_filter(params)
            completeness = filt.A.conj().T @ filt.A + filt.A_bar.conj().T @ filt.A_bar
            worst_complete = max(
                worst_complete, float(np.max(np.abs(completeness - np.eye(2))))
            )
    return (
        _result("protocol_distribution", worst_q, 1e-10),
        _result("protocol_ghz_fidelity", worst_fid, 1e-10),
        _result("measurement_completeness", worst_complete, 1e-12),
    )


def _check_residual_factorization(max_n: int) -> CheckResult:
    worst = 0.0
    for n in range(3, max_n + 1):
        for eps in STANDARD_EPSILONS:
            params = CatParams(n, eps)
            _, a_bar = oracle.biorthonormal_filter(params)
            vec = oracle.apply_one_qubit(oracle.build_cat_state(params), a_bar, 0)
            vec = vec / np.linalg.norm(vec)
            rest = oracle.partial_trace_state(vec, list(range(1, n)))
            residual_cat = oracle.build_cat_state(CatParams(n - 1, eps))
            fid = float((residual_cat.conj() @ rest @ residual_cat).real)
            worst = max(worst, abs(fid - 1.0))
    return _result("residual_factorization", worst, 1e-10)


def _check_loss(max_n: int) -> CheckResult:
    worst = 0.0
    for n in range(2, max_n + 1):
        for eps in STANDARD_EPSILONS:
            for lam in STANDARD_LAMBDAS:
                params = CatParams(n, eps)
                model = loss.LossModel(lam)
                dense = oracle.enumerate_loss(params, model)
                closed = loss.cat_loss_suppression(params, model)
                worst = max(worst, abs(dense - closed))
    return _result("loss_subset_expectation", worst, 1e-9)


def run_validation(max_n: int) -> list[CheckResult]:
    """Run every oracle-equivalence check for N = 2..max_n (max_n in [2, 8])."""
    if not (2 <= max_n <= 8):
        raise ValueError(f"max_n must lie in [2, 8], got {max_n}")
    results = [
        _check_cat_state_norm(max_n),
        _check_ghz_reduction(max_n),
        _check_decoherence(max_n, channels.DEPHASING),
        _check_decoherence(max_n, channels.DEPOLARIZING),
        _check_channel_equivalence(max_n),
        _check_ghz_rate(max_n),
        _check_reduced_rho1(max_n),
    ]
    results.extend(_check_protocol(max_n))
    results.append(_check_residual_factorization(max_n))
    results.append(_check_loss(max_n))
    return results
