"""Acceptance suite: one test per release criterion, at pinned tolerances.

Run with ``pytest -v tests/test_acceptance.py -s`` to see one PASS line
per criterion; a pytest FAILED line marks the criterion that failed.
"""

import json
import math
import time

import numpy as np
import pytest

from spinlandauer.cli import main as cli_main
from spinlandauer.erasure import analog_erasure_entropy, capacity, discrete_erasure_entropy
from spinlandauer.meanfield import entropy_limits, entropy_per_spin, solve_magnetization
from spinlandauer.models import ClassicalOn, QuantumSpin, RegularizedSpin
from spinlandauer.montecarlo import McConfig, energy_curve, entropy_by_integration, run_chain
from spinlandauer.specfun import bessel_i, bessel_ratio, brillouin, langevin, log_gamma

LOG_4PI = 2.5310242469692908  # ln(4 pi), mpmath 30 digits
LN2 = math.log(2.0)


def _report(criterion: str, detail: str = ""):
    print(f"ACCEPTANCE {criterion}: PASS {detail}".rstrip())


def test_c01_classical_o3_disordered_entropy():
    """Classical O(3) entropy is ln 4pi everywhere at and above t_c."""
    for t in (1.0 / 3.0, 0.34, 0.5, 1.0, 100.0):
        assert entropy_per_spin(ClassicalOn(3), t) == pytest.approx(LOG_4PI, abs=1e-9)
    _report("C01", f"S(t >= 1/3)/kN = ln(4 pi) = {LOG_4PI:.10f} to 1e-9")


def test_c02_on_disordered_entropy_is_sphere_area():
    """O(n) disordered entropy equals ln(2 pi^{n/2} / Gamma(n/2)) for n = 2..10."""
    for n in range(2, 11):
        expected = math.log(2.0) + 0.5 * n * math.log(math.pi) - log_gamma(0.5 * n)
        for t in (1.0 / n, 0.5 + 1.0 / n):
            assert entropy_per_spin(ClassicalOn(n), t) == pytest.approx(expected, abs=1e-9)
    assert entropy_per_spin(ClassicalOn(3), 0.4) == pytest.approx(LOG_4PI, abs=1e-9)
    _report("C02", "ln S_{n-1} reproduced for n in 2..10 to 1e-9")


def test_c03_quantum_third_law():
    """Quantum entropy vanishes at t -> 0: probe 1e-3, analytic limit exactly 0."""
    for s in (0.5, 1.0, 1.5, 5.0, 50.0):
        assert entropy_per_spin(QuantumSpin(s), 1e-3) <= 1e-2
        assert entropy_limits(QuantumSpin(s)).s_at_zero == 0.0
    _report("C03", "S(t=1e-3) <= 1e-2 and S(0) = 0 for s in {1/2,1,3/2,5,50}")


def test_c04_regularized_zero_temperature_limit():
    """Regularized entropy floor is ln(4 pi / (2 s_max + 1))."""
    for s_max in (0.5, 1.0, 10.0, 100.0):
        expected = math.log(4.0 * math.pi / (2.0 * s_max + 1.0))
        assert entropy_limits(RegularizedSpin(s_max)).s_at_zero == pytest.approx(
            expected, abs=1e-12
        )
    _report("C04", "S(t->0)/kN = ln(4 pi/(2 s_max+1)) to 1e-12")


def test_c05_landauer_recovery():
    """The analog bound at s_max = 1/2 is the binary Landauer bound ln 2."""
    discrete = discrete_erasure_entropy(2)
    analog = analog_erasure_entropy(RegularizedSpin(0.5)).delta_s_per_spin
    assert discrete == pytest.approx(LN2, abs=1e-12)
    assert analog == pytest.approx(LN2, abs=1e-12)
    assert discrete == pytest.approx(analog, abs=1e-12)
    _report("C05", "ln 2 = 0.6931471806 recovered from both routes to 1e-12")


def test_c06_analog_bound_identity():
    """ln(8 pi / (hbar_eff^2 s_max)) = ln(2 s_max + 1) under the volume-quantum relations."""
    for s_max in (1.0, 10.0, 1000.0):
        report = analog_erasure_entropy(RegularizedSpin(s_max))
        hbar = report.regulator.hbar_eff
        delta = report.regulator.delta
        assert delta * (2.0 * s_max + 1.0) == pytest.approx(4.0 * math.pi, rel=1e-12)
        assert delta == pytest.approx(0.5 * hbar * hbar * s_max, rel=1e-12)
        lhs = math.log(8.0 * math.pi / (hbar * hbar * s_max))
        assert lhs == pytest.approx(math.log(2.0 * s_max + 1.0), abs=1e-10)
    _report("C06", "volume-quantum identity holds to 1e-10 for s_max in {1,10,1000}")


def test_c07_capacity_worked_example():
    """125 momenta at L ~ hbar: ~3141 states, ~11.6 bits; 27.6 bits cost ~19.11 kT."""
    report = capacity(125.0, hbar_eff=1.0)
    assert report.n_states in (3140, 3141)
    assert abs(report.bits - 11.6) < 0.05
    heat_276 = 27.6 * LN2
    assert heat_276 == pytest.approx(19.13, abs=0.01)
    assert abs(heat_276 - 19.11) < 0.05
    _report(
        "C07",
        f"N_l = {report.n_states}, bits = {report.bits:.3f}, 27.6-bit heat = {heat_276:.2f} kT",
    )


def test_c08_classical_limit_convergence():
    """Regularized entropy approaches the classical O(3) entropy at rate <= 5/s_max."""
    worst = 0.0
    for s_max in (10.0, 100.0, 1000.0):
        for t in (0.2, 0.5, 1.0):
            diff = abs(
                entropy_per_spin(RegularizedSpin(s_max), t)
                - entropy_per_spin(ClassicalOn(3), t)
            )
            assert diff <= 5.0 / s_max
            worst = max(worst, diff * s_max)
    _report("C08", f"max |S_reg - S_cl| * s_max = {worst:.2f} <= 5")


def test_c09_kernel_identities_under_five_seconds():
    """Special-function identities at stated tolerances, in under 5 seconds."""
    start = time.perf_counter()
    for x in np.linspace(-20.0, 20.0, 201):
        assert brillouin(0.5, x) == pytest.approx(math.tanh(x), abs=1e-12)
    for s in (10.0, 100.0, 1e4):
        for x in np.linspace(0.0, 50.0, 51):
            assert abs(brillouin(s, x) - langevin(x)) <= 1.0 / s
    for x in np.geomspace(1e-3, 50.0, 80):
        assert bessel_ratio(0.5, x) == pytest.approx(langevin(x), abs=1e-10, rel=1e-10)
        closed_half = math.sqrt(2.0 / (math.pi * x)) * math.sinh(x)
        assert bessel_i(0.5, x) == pytest.approx(closed_half, rel=1e-10)
        closed_three_half = math.sqrt(2.0 / (math.pi * x)) * (
            math.cosh(x) - math.sinh(x) / x
        )
        assert bessel_i(1.5, x) == pytest.approx(closed_three_half, rel=1e-10)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _report("C09", f"kernel identities verified in {elapsed * 1e3:.1f} ms")


def test_c10_monte_carlo_verification():
    """Seed-pinned Curie-Weiss O(3) at N=1024 agrees with the mean-field solution."""
    start = time.perf_counter()
    # (a) ordered-phase magnetization at t = 0.2
    trace = run_chain(
        McConfig(model="on3", n_spins=1024, t=0.2, sweeps=10_000, burn_in=1000, seed=7)
    )
    m_mf = solve_magnetization(ClassicalOn(3), 0.2)
    budget = 0.02 + 3.0 * trace.magnetization.std_error
    dm = abs(trace.magnetization.mean - m_mf)
    assert dm <= budget
    # (b) thermodynamic-integration entropy at t = 1/3 on a 40-point grid
    template = McConfig(model="on3", n_spins=1024, t=1.0, sweeps=3000, burn_in=600, seed=7)
    curve = energy_curve(template, list(np.linspace(0.01, 3.0, 40)))
    entropies = entropy_by_integration(curve, LOG_4PI)
    beta_c, s_c = entropies[-1]
    assert beta_c == 3.0
    ds = abs(s_c.mean - LOG_4PI)
    assert ds <= 0.05
    elapsed = time.perf_counter() - start
    assert elapsed <= 120.0
    _report(
        "C10",
        f"|dm| = {dm:.4f} <= {budget:.4f}; |dS(t_c)| = {ds:.4f} <= 0.05; {elapsed:.0f} s",
    )


def test_c11_manifest_determinism(tmp_path):
    """Re-running an MC command from its manifest reproduces files byte for byte."""
    out_file = tmp_path / "mc.csv"
    argv = [
        "mc", "--model", "on:3", "--n-spins", "128", "--beta-grid", "0.01:2.0:5",
        "--sweeps", "500", "--burn-in", "100", "--seed", "99", "--entropy",
        "--format", "csv", "--output", str(out_file),
    ]
    assert cli_main(argv) == 0
    manifest = json.loads((tmp_path / "mc.csv.manifest.json").read_text())
    params = dict(manifest["parameters"])
    replay_file = tmp_path / "replay.csv"
    params["output"] = str(replay_file)
    replay_argv = [manifest["command"]]
    for key, val in params.items():
        flag = "--" + key.replace("_", "-")
        if val == "True":
            replay_argv.append(flag)
        elif val == "False":
            continue
        else:
            replay_argv.extend([flag, val])
    assert cli_main(replay_argv) == 0
    assert out_file.read_bytes() == replay_file.read_bytes()
    _report("C11", "manifest replay reproduced the data file byte-identically")
