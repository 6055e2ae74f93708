"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as the
criteria execute.  Tolerances are fixed here, not calibrated.
"""

import math
import time

import numpy as np
import pytest

from circlenoise.fourier import (bridge_test_function, hermitian_series, inner_product,
                                 l2_norm_sq, levy_test_function, pulse_test_function,
                                 zero_series)
from circlenoise.noise import SeedSpec, noise_hminus1_norm_sq, sample_noise
from circlenoise.processes import (GridSpec, Kernel, gram_matrix, kernel_eval,
                                   synthesize_path_fft, synthesize_path_naive)
from circlenoise.verify import (char_functional_check, check_antipodal_quadratic_form,
                                check_levy_identity, check_mirror, independence_check,
                                ks_normality_check, mc_covariance_check,
                                oracle_equivalence_check)

SEED = SeedSpec(42)
R = 20000
POINTS = (0.1, 0.25, 0.5, 0.75, 0.9)
ALL_PAIRS = [(POINTS[i], POINTS[j]) for i in range(5) for j in range(i, 5)]
DISTINCT_PAIRS = [(s, t) for (s, t) in ALL_PAIRS if s != t]


def report(num: int, label: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num} ({label}): {'PASS' if ok else 'FAIL'} [{detail}]")


def test_criterion_1_bridge_covariance():
    N = 4096
    tol = 1e-3
    fs = {t: bridge_test_function(t, N) for t in POINTS}
    max_err = max(abs(inner_product(fs[s], fs[t]) - (min(s, t) - s * t))
                  for s, t in ALL_PAIRS)
    ok = max_err <= tol
    report(1, "bridge Parseval covariance, N=4096", ok, f"max_err={max_err:.3e} tol={tol:g}")
    assert ok


def test_criterion_2_levy_covariance():
    N = 4095
    tol = 1e-3
    fs = {t: levy_test_function(t, N) for t in POINTS}
    kern = Kernel("levy")
    # The Gram realizes the circular covariance everywhere; the min(s,t)
    # form is its restriction to the half-circle [0, 1/2].
    err_kernel = max(abs(inner_product(fs[s], fs[t]) - kernel_eval(kern, s, t))
                     for s, t in ALL_PAIRS)
    half_pairs = [(s, t) for s, t in ALL_PAIRS if max(s, t) <= 0.5]
    err_min = max(abs(inner_product(fs[s], fs[t]) - min(s, t)) for s, t in half_pairs)
    err_half = abs(l2_norm_sq(fs[0.5]) - 0.5)
    ok = err_kernel <= tol and err_min <= tol and err_half <= tol
    report(2, "circular-motion covariance, N=4095", ok,
           f"max_err_kernel={err_kernel:.3e} max_err_min_halfcircle={err_min:.3e} "
           f"err_at_half={err_half:.3e} tol={tol:g}")
    assert ok


def test_criterion_3_exact_identities():
    N = 1001
    rng = np.random.default_rng(42)
    residuals = []
    for _ in range(20):
        t, s = rng.random(), rng.random()
        residuals.append(check_levy_identity(t, s, N).statistic)
        residuals.append(check_mirror(0.5 + 0.5 * rng.random() * (1 - 1e-9) + 1e-12, N).statistic)
    worst = max(residuals)
    ok = worst <= 1e-12
    report(3, "exact antipodal and mirror identities, N=1001", ok,
           f"worst residual={worst:.3e} tol=1e-12")
    assert ok


def test_criterion_4_degeneracy():
    pts16 = np.arange(16) / 16
    eig = np.linalg.eigvalsh(gram_matrix(Kernel("levy"), pts16))
    near_zero = int(np.sum(eig < 1e-10 * eig[-1]))
    rng = np.random.default_rng(4)
    quad_worst = 0.0
    for _ in range(5):
        t, s = 0.5 * rng.random(), 0.5 * rng.random()
        if abs(t - s) < 1e-3:
            s = (s + 0.11) % 0.5
        quad_worst = max(quad_worst, abs(check_antipodal_quadratic_form(t, s).statistic))
    bridge_eig = np.linalg.eigvalsh(gram_matrix(Kernel("bridge"), pts16[1:]))
    ratio = bridge_eig[0] / bridge_eig[-1]
    ok = near_zero >= 7 and quad_worst <= 1e-12 and ratio > 1e-8
    report(4, "degenerate circular spectrum vs positive-definite bridge", ok,
           f"near_zero={near_zero} (need >=7) quad_form={quad_worst:.3e} "
           f"bridge_ratio={ratio:.3e} (need >1e-8)")
    assert ok


def test_criterion_5_measure_level_checks():
    t0 = time.time()
    N = 1024

    cov_checks = mc_covariance_check("bridge", N, DISTINCT_PAIRS, R, SEED, trunc_slack=2.5e-5)
    cov_ok = all(c.passed for c in cov_checks)
    cov_worst = max(abs(c.statistic - c.expected) / c.tolerance for c in cov_checks)

    ks = ks_normality_check(bridge_test_function(0.5, N), N, R, SEED)

    p1 = pulse_test_function(0.0, 0.1, 1.0, N)
    p2 = pulse_test_function(0.5, 0.1, 1.0, N)
    indep = independence_check(p1, p2, N, R, SEED,
                               orth_tol=8.0 / (math.pi ** 2 * N) + 1e-8)

    cos1 = hermitian_series(0.0, np.eye(1, N, 0).ravel())
    char_checks = [char_functional_check(f, N, R, SEED)
                   for f in (zero_series(N), cos1, bridge_test_function(0.5, N))]
    char_ok = all(c.passed for c in char_checks)

    elapsed = time.time() - t0
    ok = cov_ok and ks.passed and indep.passed and char_ok and elapsed <= 300.0
    report(5, "measure-level checks, N=1024 R=20000 seed=42", ok,
           f"cov(max err/tol)={cov_worst:.2f} ks={ks.statistic:.4f}<= {ks.tolerance:.4f} "
           f"corr={indep.statistic:.4f} char_ok={char_ok} elapsed={elapsed:.0f}s<=300s")
    assert ok


def test_criterion_6_hilbert_schmidt():
    N_sum = 10 ** 6
    partial = float(np.sum(1.0 / np.arange(1, N_sum + 1, dtype=float) ** 2))
    sum_ok = abs(partial - 1.644933) <= 1e-6

    N = 1024
    expected = 2.0 * float(np.sum(1.0 / np.arange(1, N + 1, dtype=float) ** 2))
    vals = np.fromiter((noise_hminus1_norm_sq(sample_noise(N, SEED, r)) for r in range(R)),
                       dtype=float, count=R)
    mc_err = abs(vals.mean() - expected)
    mc_ok = mc_err <= 0.02
    ok = sum_ok and mc_ok
    report(6, "Hilbert-Schmidt sums", ok,
           f"partial_sum={partial:.9f} (target 1.644933 +/- 1e-6) "
           f"mc_err={mc_err:.4f} (tol 0.02)")
    assert ok


def test_criterion_7_oracle_equivalence():
    points = (0.125, 0.25, 0.375, 0.5, 0.75)
    pairs = [(points[i], points[j]) for i in range(5) for j in range(i + 1, 5)]
    checks = oracle_equivalence_check(127, 256, pairs, R, SEED, extra_tol=2.5e-5)
    ok = all(c.passed for c in checks)
    worst = max(abs(c.statistic) / c.tolerance for c in checks)
    report(7, "spectral vs Cholesky oracle, M=256 R=20000", ok,
           f"10 pairs, worst |diff|/tol={worst:.2f}")
    assert ok


def test_criterion_8_fft_performance():
    sizes = [(8, 32), (64, 256), (1024, 4096), (4096, 16384)]
    max_dev = 0.0
    speedup_at_large = None
    for n, m in sizes:
        x = sample_noise(n, SEED, 0)
        grid = GridSpec(m)
        t0 = time.perf_counter()
        naive = synthesize_path_naive("bridge", x, grid)
        t1 = time.perf_counter()
        fft = synthesize_path_fft("bridge", x, grid)
        t2 = time.perf_counter()
        max_dev = max(max_dev, float(np.max(np.abs(naive - fft))))
        if (n, m) == (4096, 16384):
            speedup_at_large = (t1 - t0) / max(t2 - t1, 1e-12)
    ok = max_dev <= 1e-9 and speedup_at_large > 1.0
    report(8, "FFT synthesis correctness and speed", ok,
           f"max_dev={max_dev:.3e} (tol 1e-9) speedup@N=4096,M=16384={speedup_at_large:.0f}x")
    assert ok
