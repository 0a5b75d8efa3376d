import json
import math

import numpy as np
import pytest

from catsize.cli import build_effective_size_report, main
from catsize.core import CatParams
from catsize.decoherence import cat_offdiag_norm, ghz_offdiag_norm
from catsize.distillation import expected_n, outcome_distribution

PI_3 = math.pi / 3

REPORT_KEYS = [
    "N",
    "epsilon",
    "n_decoherence",
    "n_distill_mean",
    "n_distill_upper_exact",
    "n_distill_upper_asymptotic",
    "n_loss",
    "reference_N_eps_sq",
]


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_report_builder_invariants():
    for n, eps in [(2, 0.2), (100, 1.0), (10**6, 1e-3)]:
        p = CatParams(n, eps)
        r = build_effective_size_report(p)
        assert r.reference_N_eps_sq == n * eps**2
        for size in (r.n_decoherence, r.n_distill_mean, r.n_distill_upper_exact, r.n_loss):
            assert 0.0 <= size <= n
        if 0.0 < eps < math.pi / 2:
            assert r.n_loss <= r.n_decoherence
    with pytest.raises(ValueError):
        build_effective_size_report(CatParams(1, 0.2))


def test_effective_size_headline(capsys):
    code, out, _ = run_cli(
        capsys, "effective-size", "--n", "1000000", "--epsilon", "0.001"
    )
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["n_decoherence"] - 1.0) < 1e-5
    assert payload["n_distill_mean"] == pytest.approx(0.3112296494569457, rel=1e-13)
    assert abs(payload["n_loss"] - 0.5) / 0.5 < 1e-6
    # key order is part of the contract
    pairs = json.loads(out, object_pairs_hook=list)
    assert [k for k, _ in pairs] == REPORT_KEYS


def test_effective_size_ghz_fixture(capsys):
    code, out, _ = run_cli(capsys, "effective-size", "--n", "10", "--epsilon", "1.5707963")
    assert code == 0
    payload = json.loads(out)
    for key in ("n_decoherence", "n_distill_mean", "n_distill_upper_exact", "n_loss"):
        assert abs(payload[key] - 10.0) < 1e-6


def test_effective_size_product_fixture(capsys):
    code, out, _ = run_cli(capsys, "effective-size", "--n", "100", "--epsilon", "0")
    assert code == 0
    payload = json.loads(out)
    for key in (
        "n_decoherence",
        "n_distill_mean",
        "n_distill_upper_exact",
        "n_distill_upper_asymptotic",
        "n_loss",
        "reference_N_eps_sq",
    ):
        assert payload[key] == 0.0


def test_json_round_trip_exact(capsys):
    _, out, _ = run_cli(capsys, "effective-size", "--n", "123", "--epsilon", "0.37")
    payload = json.loads(out)
    report = build_effective_size_report(CatParams(123, 0.37))
    for key, value in report.to_payload().items():
        assert payload[key] == value  # 17 significant digits round-trip doubles


def test_epsilon_sq_overlap_alternative(capsys):
    code, out, _ = run_cli(
        capsys, "effective-size", "--n", "50", "--epsilon-sq-overlap", "0.25"
    )
    assert code == 0
    assert json.loads(out)["epsilon"] == pytest.approx(math.asin(0.5), rel=1e-15)
    # both flags at once is a usage error
    code, _, err = run_cli(
        capsys,
        "effective-size",
        "--n", "50", "--epsilon", "0.1", "--epsilon-sq-overlap", "0.25",
    )
    assert code == 2
    assert err.strip()
    # neither flag is a usage error too
    code, _, err = run_cli(capsys, "effective-size", "--n", "50")
    assert code == 2
    assert err.strip()
    code, _, err = run_cli(
        capsys, "effective-size", "--n", "50", "--epsilon-sq-overlap", "1.5"
    )
    assert code == 2


def test_invalid_parameters_exit_2(capsys):
    code, _, err = run_cli(capsys, "effective-size", "--n", "1", "--epsilon", "0.3")
    assert code == 2
    code, _, err = run_cli(capsys, "effective-size", "--n", "10", "--epsilon", "1.8")
    assert code == 2


def test_decoherence_curve_minimal(capsys):
    code, out, _ = run_cli(
        capsys,
        "decoherence-curve",
        "--n", "8", "--epsilon", "0.5", "--gamma-t-max", "1", "--steps", "2",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "gamma_t,ghz_norm,cat_norm"
    assert lines[1] == "0,1,1"
    assert len(lines) == 3


def test_decoherence_curve_ghz_columns_identical(capsys):
    code, out, _ = run_cli(
        capsys,
        "decoherence-curve",
        "--n", "6", "--epsilon", str(math.pi / 2), "--n-ref", "6",
        "--gamma-t-max", "2", "--steps", "9",
    )
    assert code == 0
    for line in out.splitlines()[1:]:
        _, g, c = line.split(",")
        assert abs(float(g) - float(c)) < 1e-12


def test_decoherence_curve_values_match_closed_forms(capsys):
    n, eps, n_ref = 8, 0.5, 3
    code, out, _ = run_cli(
        capsys,
        "decoherence-curve",
        "--n", str(n), "--epsilon", str(eps), "--n-ref", str(n_ref),
        "--gamma-t-max", "1.5", "--steps", "7",
    )
    assert code == 0
    p = CatParams(n, eps)
    for line in out.splitlines()[1:]:
        t, g, c = (float(v) for v in line.split(","))
        assert g == pytest.approx(ghz_offdiag_norm(n_ref, t), rel=1e-12)
        assert c == pytest.approx(cat_offdiag_norm(p, t), rel=1e-12)


def test_decoherence_curve_bad_flags(capsys):
    code, _, _ = run_cli(
        capsys, "decoherence-curve", "--n", "8", "--epsilon", "0.5", "--steps", "1"
    )
    assert code == 2
    code, _, _ = run_cli(
        capsys,
        "decoherence-curve",
        "--n", "8", "--epsilon", "0.5", "--gamma-t-max", "0",
    )
    assert code == 2


def test_distill_sim_payload(capsys):
    args = [
        "distill-sim",
        "--n", "2", "--epsilon", str(PI_3), "--trials", "2000", "--seed", "7",
    ]
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    code, out2, _ = run_cli(capsys, *args)
    assert out1 == out2  # byte-identical for identical flags and seed
    payload = json.loads(out1)
    assert set(payload.keys()) == {"exact", "mc"}
    np.testing.assert_allclose(payload["exact"]["q"], [0.4, 0.4, 0.2], atol=1e-14)
    assert payload["exact"]["source"] == "exact"
    assert payload["mc"]["source"] == "mc"
    assert payload["mc"]["trials"] == 2000
    assert payload["mc"]["seed"] == 7
    assert sum(payload["mc"]["q"]) == pytest.approx(1.0, abs=1e-12)


def test_distill_sim_half_pi(capsys):
    code, out, _ = run_cli(
        capsys,
        "distill-sim",
        "--n", "4", "--epsilon", str(math.pi / 2), "--trials", "300", "--seed", "0",
    )
    assert code == 0
    assert json.loads(out)["mc"]["q"][4] == 1.0


def test_distill_sim_bad_flags(capsys):
    code, _, _ = run_cli(
        capsys, "distill-sim", "--n", "2", "--epsilon", "0.5", "--trials", "0"
    )
    assert code == 2
    code, _, _ = run_cli(
        capsys, "distill-sim", "--n", "2", "--epsilon", "0.5", "--seed", "-1"
    )
    assert code == 2


def test_loss_curve(capsys):
    code, out, _ = run_cli(
        capsys,
        "loss-curve",
        "--n", "8", "--epsilon", "0.5", "--lambda-max", "1", "--steps", "3",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "lambda,ghz_suppression,cat_suppression"
    assert lines[1] == "0,1,1"
    code, _, _ = run_cli(
        capsys, "loss-curve", "--n", "8", "--epsilon", "0.5", "--lambda-max", "1.2"
    )
    assert code == 2


def test_validate_small_grid(capsys):
    import time

    start = time.perf_counter()
    code, out, _ = run_cli(capsys, "validate", "--max-n", "2")
    elapsed = time.perf_counter() - start
    assert code == 0
    assert elapsed < 1.0
    lines = out.splitlines()
    assert lines[0] == "status,name,max_err,tol"
    assert all(line.startswith("PASS,") for line in lines[1:])
    assert len(lines) > 10


def test_validate_out_of_range(capsys):
    code, _, err = run_cli(capsys, "validate", "--max-n", "20")
    assert code == 2
    assert "size cap" in err or "max-n" in err
    code, _, _ = run_cli(capsys, "validate", "--max-n", "1")
    assert code == 2


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys,
        "effective-size", "--n", "10", "--epsilon", "0.3", "--output", str(target),
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["N"] == 10


def test_distill_sim_mean_sanity(capsys):
    # empirical mean lands near the closed-form expectation
    code, out, _ = run_cli(
        capsys,
        "distill-sim",
        "--n", "8", "--epsilon", "0.5", "--trials", "20000", "--seed", "3",
    )
    assert code == 0
    q = np.array(json.loads(out)["mc"]["q"])
    mean = float(np.arange(9) @ q)
    p = CatParams(8, 0.5)
    exact = outcome_distribution(p).q
    var = float((np.arange(9) ** 2) @ exact) - expected_n(p) ** 2
    assert abs(mean - expected_n(p)) < 4.0 * math.sqrt(var / 20000)
