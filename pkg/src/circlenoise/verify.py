"""Named, tolerance-bearing checks aggregated into reproducible reports.

Every check is deterministic given its (N, M, R, seed) configuration.
Monte Carlo tolerances are explicit sums of a 4*SE statistical band and
an analytic truncation bound; exact coefficient identities use absolute
tolerance 1e-12.  Reports serialize to JSON with stable field names and
floats written at 17 significant digits, so identical configurations
produce byte-identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .fourier import (FourierSeries, add, bridge_test_function, hermitian_series, inner_product,
                      l2_norm_sq, levy_test_function, pulse_test_function, scale, truncate,
                      zero_series)
from .noise import (DOMAIN_CHOLESKY, SeedSpec, empirical_char_functional,
                    noise_hminus1_norm_sq, pairings, sample_noise)
from .processes import (PROCESS_KINDS, GridSpec, Kernel, cholesky_factor, gram_matrix,
                        kernel_eval, synthesize_path_fft)

EXACT_TOL = 1e-12

SUITE_NAMES = ("covariance", "normality", "independence", "identity",
               "charfunc", "degeneracy", "hs")
STATISTICAL_SUITES = frozenset({"covariance", "normality", "independence", "charfunc", "hs"})

# Default evaluation points for Gram and path-covariance checks.
POINT_GRID = (0.1, 0.25, 0.5, 0.75, 0.9)


@dataclass(frozen=True)
class CheckResult:
    """One named check: |statistic - expected| <= tolerance unless detail says one-sided."""

    name: str
    statistic: float
    expected: float
    tolerance: float
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "statistic": self.statistic, "expected": self.expected,
                "tolerance": self.tolerance, "pass": self.passed, "detail": self.detail}


def _two_sided(name: str, statistic: float, expected: float, tolerance: float,
               detail: str = "") -> CheckResult:
    statistic, expected, tolerance = float(statistic), float(expected), float(tolerance)
    return CheckResult(name, statistic, expected, tolerance,
                       abs(statistic - expected) <= tolerance, detail)


def _at_least(name: str, statistic: float, threshold: float, detail: str = "") -> CheckResult:
    note = "one-sided: pass iff statistic >= expected"
    detail = f"{detail}; {note}" if detail else note
    return CheckResult(name, float(statistic), float(threshold), 0.0,
                       float(statistic) >= float(threshold), detail)


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    config: dict
    checks: tuple[CheckResult, ...]

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        lines = ["{"]
        lines.append(f'  "suite": {json.dumps(self.suite)},')
        lines.append(f'  "config": {_emit(self.config)},')
        lines.append('  "checks": [')
        body = [f"    {_emit(c.to_dict())}" for c in self.checks]
        lines.append(",\n".join(body))
        lines.append("  ],")
        lines.append(f'  "overall_pass": {_emit(self.overall_pass)}')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _emit(v) -> str:
    """Deterministic JSON with floats at 17 significant digits."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.17g}"
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_emit(val)}" for k, val in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_emit(x) for x in v) + "]"
    raise TypeError(f"cannot serialize {type(v)!r}")


def _antipode(t: float) -> float:
    # Exact in floating point for t >= 1/2 (difference of nearby binades).
    return t - 0.5 if t >= 0.5 else t + 0.5


def _pair_name(prefix: str, s: float, t: float) -> str:
    return f"{prefix}(s={s:g},t={t:g})"


# ----------------------------------------------------------------------
# Deterministic coefficient-level checks


def check_parseval_bridge(max_freq: int, pairs: Sequence[tuple[float, float]]) -> list[CheckResult]:
    """Bridge-test-function Grams against min(s,t) - s*t, tolerance 1/(pi^2 N) + 1e-10.

    The tolerance is attained (not just bounded) at equal arguments, so
    diagonal pairs sit within O(1/N^2) of it either side; distinct-point
    pairs carry roughly a factor-two margin.
    """
    if max_freq < 16:
        raise ValueError("parseval bridge checks need max_freq >= 16")
    tol = 1.0 / (math.pi ** 2 * max_freq) + 1e-10
    cache: dict[float, FourierSeries] = {}

    def f(t: float) -> FourierSeries:
        if t not in cache:
            cache[t] = bridge_test_function(t, max_freq)
        return cache[t]

    out = []
    for s, t in pairs:
        stat = inner_product(f(s), f(t))
        expected = min(s, t) - s * t
        out.append(_two_sided(_pair_name("parseval_bridge", s, t), stat, expected, tol,
                              detail=f"trunc_bound=1/(pi^2*{max_freq})"))
    return out


def check_levy_gram(max_freq: int, pairs: Sequence[tuple[float, float]]) -> list[CheckResult]:
    """Odd-frequency test-function Grams against the closed-form circular covariance.

    Expected value is (r(0,t) + r(0,s) - r(s,t)) / 2, which equals
    min(s,t) whenever both points lie on the half-circle [0, 1/2].
    Tolerance 4/(pi^2 N) + 1e-10 (the tail is below 2/(pi^2 N)).
    """
    if max_freq < 1:
        raise ValueError("max_freq must be at least 1")
    kern = Kernel("levy")
    tol = 4.0 / (math.pi ** 2 * max_freq) + 1e-10
    cache: dict[float, FourierSeries] = {}

    def f(t: float) -> FourierSeries:
        if t not in cache:
            cache[t] = levy_test_function(t, max_freq)
        return cache[t]

    out = []
    for s, t in pairs:
        stat = inner_product(f(s), f(t))
        expected = kernel_eval(kern, s, t)
        half = "min(s,t) on half-circle" if max(s, t) <= 0.5 else "mirror range"
        out.append(_two_sided(_pair_name("levy_gram", s, t), stat, expected, tol, detail=half))
    return out


def check_levy_identity(t: float, s: float, max_freq: int) -> CheckResult:
    """Exact antipodal-sum identity: the coefficient vectors of f_t + f_t' and f_s + f_s' agree.

    Residual is the L2 coefficient norm of the difference; expected 0
    within 1e-12 at any truncation.
    """
    ft = add(levy_test_function(t, max_freq), levy_test_function(_antipode(t), max_freq))
    fs = add(levy_test_function(s, max_freq), levy_test_function(_antipode(s), max_freq))
    resid = math.sqrt(l2_norm_sq(add(ft, scale(fs, -1.0))))
    return _two_sided(_pair_name("levy_antipodal_identity", s, t), resid, 0.0, EXACT_TOL,
                      detail="coefficient residual of (f_t + f_t') - (f_s + f_s')")


def check_mirror(s: float, max_freq: int) -> CheckResult:
    """Exact mirror reconstruction: f_s = f_{1/2} - f_{s-1/2} at coefficient level, s in (1/2, 1)."""
    s = float(s)
    if not 0.5 < s < 1.0:
        raise ValueError(f"mirror check needs s in (1/2, 1), got {s!r}")
    combo = add(add(levy_test_function(s, max_freq),
                    scale(levy_test_function(0.5, max_freq), -1.0)),
                levy_test_function(s - 0.5, max_freq))
    resid = math.sqrt(l2_norm_sq(combo))
    return _two_sided(f"levy_mirror(s={s:g})", resid, 0.0, EXACT_TOL,
                      detail="coefficient residual of f_s - f_{1/2} + f_{s-1/2}")


def check_antipodal_quadratic_form(t: float, s: float) -> CheckResult:
    """Quadratic form (1,1,-1,-1) on an antipodal quadruple of the circular kernel is zero."""
    pts = (t, _antipode(t), s, _antipode(s))
    if len(set(pts)) != 4:
        raise ValueError("quadruple points must be distinct")
    G = gram_matrix(Kernel("levy"), pts)
    v = np.array([1.0, 1.0, -1.0, -1.0])
    stat = float(v @ G @ v)
    return _two_sided(_pair_name("antipodal_quadratic_form", s, t), stat, 0.0, EXACT_TOL,
                      detail="variance of B(t)+B(t')-B(s)-B(s')")


def _near_zero_count(G: np.ndarray, tol_ratio: float) -> tuple[int, np.ndarray]:
    eig = np.linalg.eigvalsh(G)
    lam_max = float(eig[-1])
    return int(np.sum(eig < tol_ratio * lam_max)), eig


def _uniform_antipodal_points(num_pairs: int) -> np.ndarray:
    return np.arange(2 * num_pairs) / (2 * num_pairs)


def check_degenerate_spectrum(num_pairs: int, tol_ratio: float = 1e-10,
                              points: Sequence[float] | None = None) -> CheckResult:
    """Rank deficiency of the circular-motion Gram on an antipodally symmetric grid.

    With m antipodal pairs the antipodal-sum constraint forces at least
    m-1 null directions (more when the origin pair is on the grid), so
    the count of eigenvalues below tol_ratio * lambda_max must reach m-1.
    """
    if num_pairs < 2:
        raise ValueError("need at least two antipodal pairs")
    pts = np.asarray(points if points is not None else _uniform_antipodal_points(num_pairs),
                     dtype=np.float64)
    if pts.size != 2 * num_pairs:
        raise ValueError(f"expected {2 * num_pairs} points, got {pts.size}")
    anti = np.sort((pts + 0.5) % 1.0)
    if not np.allclose(np.sort(pts), anti, atol=1e-12):
        raise ValueError("point set must be antipodally symmetric")
    count, eig = _near_zero_count(gram_matrix(Kernel("levy"), pts), tol_ratio)
    return _at_least(f"degenerate_spectrum(m={num_pairs})", count, num_pairs - 1,
                     detail=f"eigenvalues below {tol_ratio:g}*lambda_max; lambda_max={eig[-1]:.6g}")


def check_bridge_spectrum(points: Sequence[float], tol_ratio: float = 1e-10,
                          ratio_floor: float = 1e-8) -> list[CheckResult]:
    """Positive-definiteness contrast: the bridge Gram away from 0 has no near-zero eigenvalues."""
    pts = np.asarray(points, dtype=np.float64)
    if np.any(pts == 0.0):
        raise ValueError("bridge positive-definiteness grid must exclude the pinned point 0")
    count, eig = _near_zero_count(gram_matrix(Kernel("bridge"), pts), tol_ratio)
    ratio = float(eig[0] / eig[-1])
    return [
        _two_sided("bridge_near_zero_count", count, 0.0, EXACT_TOL,
                   detail=f"eigenvalues below {tol_ratio:g}*lambda_max"),
        _at_least("bridge_eigenvalue_ratio", ratio, ratio_floor,
                  detail=f"lambda_min={eig[0]:.6g}, lambda_max={eig[-1]:.6g}"),
    ]


# ----------------------------------------------------------------------
# Monte Carlo checks


def _require_reps(reps: int, what: str) -> None:
    if reps < 1000:
        raise ValueError(f"{what} requires reps >= 1000, got {reps}")


def _common_denominator(points: Iterable[float], limit: int = 10000) -> int:
    pts = list(points)
    for d in range(1, limit + 1):
        if all(abs(p * d - round(p * d)) < 1e-9 for p in pts):
            return d
    raise ValueError("evaluation points have no small common denominator; pass an explicit grid")


def _truncation_bound(kind: str, max_freq: int) -> float:
    return (1.0 if kind == "bridge" else 4.0) / (math.pi ** 2 * max_freq)


def mc_covariance_check(kind: str, max_freq: int, pairs: Sequence[tuple[float, float]],
                        reps: int, seed: SeedSpec,
                        trunc_slack: float | None = None) -> list[CheckResult]:
    """Empirical path covariance at grid pairs against the closed-form kernel.

    Paths are FFT-synthesized on the smallest uniform grid that contains
    every evaluation point and admits alias-free synthesis.  Per-pair
    tolerance is 4*SE + truncation bound, with
    SE = sqrt((K_ss K_tt + K_st^2) / R).
    """
    if kind not in PROCESS_KINDS:
        raise ValueError(f"unknown process kind {kind!r}")
    _require_reps(reps, "the covariance check")
    points = sorted({float(p) for st in pairs for p in st})
    d = _common_denominator(points)
    m = d * math.ceil((2 * max_freq + 1) / d)
    grid = GridSpec(m)
    col_of = {p: i for i, p in enumerate(points)}
    col_idx = np.array([round(p * m) for p in points], dtype=np.intp)
    cols = np.empty((reps, len(points)))
    for r in range(reps):
        path = synthesize_path_fft(kind, sample_noise(max_freq, seed, r), grid)
        cols[r] = path[col_idx]
    centered = cols - cols.mean(axis=0)
    kern = Kernel(kind)
    trunc = _truncation_bound(kind, max_freq) if trunc_slack is None else float(trunc_slack)
    out = []
    for s, t in pairs:
        cov = float(np.dot(centered[:, col_of[s]], centered[:, col_of[t]]) / (reps - 1))
        expected = kernel_eval(kern, s, t)
        se = math.sqrt((kernel_eval(kern, s, s) * kernel_eval(kern, t, t) + expected ** 2) / reps)
        out.append(_two_sided(_pair_name(f"mc_cov_{kind}", s, t), cov, expected, 4.0 * se + trunc,
                              detail=f"abs_err={abs(cov - expected):.6g}; band=4*SE={4 * se:.6g}; "
                                     f"trunc={trunc:.6g}; grid_m={m}"))
    return out


def oracle_equivalence_check(max_freq: int, grid_m: int, pairs: Sequence[tuple[float, float]],
                             reps: int, seed: SeedSpec,
                             extra_tol: float = 2.5e-5) -> list[CheckResult]:
    """Spectral sampler vs dense Cholesky oracle: bridge covariances must agree.

    Per pair, |cov_spectral - cov_cholesky| <= 4*SE_spectral +
    4*SE_cholesky + extra_tol.  The two samplers use disjoint stream
    domains of the same master seed.
    """
    _require_reps(reps, "the oracle equivalence check")
    grid = GridSpec(grid_m)
    if grid_m < 2 * max_freq + 1:
        raise ValueError("grid too small for alias-free spectral synthesis")
    points = sorted({float(p) for st in pairs for p in st})
    col_idx = np.array([round(p * grid_m) for p in points], dtype=np.intp)
    if np.any(np.abs(np.asarray(points) * grid_m - col_idx) > 1e-9):
        raise ValueError("evaluation points must lie on the synthesis grid")
    col_of = {p: i for i, p in enumerate(points)}

    spec_cols = np.empty((reps, len(points)))
    for r in range(reps):
        path = synthesize_path_fft("bridge", sample_noise(max_freq, seed, r), grid)
        spec_cols[r] = path[col_idx]
    L, _ = cholesky_factor(Kernel("bridge"), grid.times())
    chol_cols = np.empty((reps, len(points)))
    for r in range(reps):
        g = seed.generator(DOMAIN_CHOLESKY, r)
        chol_cols[r] = (L @ g.standard_normal(grid_m))[col_idx]

    spec_c = spec_cols - spec_cols.mean(axis=0)
    chol_c = chol_cols - chol_cols.mean(axis=0)
    kern = Kernel("bridge")
    out = []
    for s, t in pairs:
        i, j = col_of[s], col_of[t]
        cov_s = float(np.dot(spec_c[:, i], spec_c[:, j]) / (reps - 1))
        cov_c = float(np.dot(chol_c[:, i], chol_c[:, j]) / (reps - 1))
        k_st = kernel_eval(kern, s, t)
        se = math.sqrt((kernel_eval(kern, s, s) * kernel_eval(kern, t, t) + k_st ** 2) / reps)
        tol = 8.0 * se + extra_tol  # 4*SE for each of the two independent estimates
        out.append(_two_sided(_pair_name("oracle_equivalence", s, t), cov_s - cov_c, 0.0, tol,
                              detail=f"abs_err={abs(cov_s - cov_c):.6g}; spectral={cov_s:.6g}; "
                                     f"cholesky={cov_c:.6g}; target={k_st:.6g}"))
    return out


def _standard_normal_cdf(xs: np.ndarray) -> np.ndarray:
    root2 = math.sqrt(2.0)
    return np.array([0.5 * (1.0 + math.erf(v / root2)) for v in xs])


def ks_statistic(sample: np.ndarray) -> float:
    """Kolmogorov-Smirnov distance of a sample from the standard normal CDF."""
    x = np.sort(np.asarray(sample, dtype=np.float64))
    n = x.size
    cdf = _standard_normal_cdf(x)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - cdf), np.max(cdf - (i - 1) / n)))


def ks_normality_check(f: FourierSeries, max_freq: int, reps: int, seed: SeedSpec,
                       name: str = "ks_normality") -> CheckResult:
    """KS test of standardized pairings against N(0,1), asymptotic alpha = 0.01 critical value."""
    _require_reps(reps, "the KS normality check")
    var = l2_norm_sq(truncate(f, max_freq))
    if var == 0.0:
        raise ValueError("KS normality check needs a test function with nonzero norm")
    sample = pairings([f], max_freq, reps, seed)[:, 0] / math.sqrt(var)
    tol = 1.63 / math.sqrt(reps)
    return _two_sided(name, ks_statistic(sample), 0.0, tol,
                      detail=f"standardized by truncated norm_sq={var:.6g}; crit=1.63/sqrt(R)")


def independence_check(f: FourierSeries, g: FourierSeries, max_freq: int, reps: int,
                       seed: SeedSpec, orth_tol: float = 1e-8,
                       name: str = "independence") -> CheckResult:
    """Sample correlation of two orthogonal test functions' pairings is within 4/sqrt(R) of 0."""
    _require_reps(reps, "the independence check")
    ip = inner_product(truncate(f, max_freq), truncate(g, max_freq))
    if abs(ip) > orth_tol:
        raise ValueError(f"test functions are not orthogonal: inner product {ip!r} "
                         f"exceeds {orth_tol:g}")
    p = pairings([f, g], max_freq, reps, seed)
    corr = float(np.corrcoef(p[:, 0], p[:, 1])[0, 1])
    return _two_sided(name, corr, 0.0, 4.0 / math.sqrt(reps),
                      detail=f"truncated inner product {float(np.real(ip)):.3g}")


def char_functional_check(f: FourierSeries, max_freq: int, reps: int, seed: SeedSpec,
                          name: str = "char_functional") -> CheckResult:
    """Empirical characteristic functional against exp(-norm_sq/2).

    The statistic records Re(C_hat); the pass criterion uses the full
    complex distance |C_hat - expected| <= 4/sqrt(R).
    """
    ch = empirical_char_functional(f, max_freq, reps, seed)
    expected = math.exp(-0.5 * l2_norm_sq(truncate(f, max_freq)))
    tol = 4.0 / math.sqrt(reps)
    dist = abs(ch - expected)
    return CheckResult(name, float(ch.real), expected, tol, dist <= tol,
                       detail=f"complex distance={dist:.6g}; imag={ch.imag:.3g}")


def char_product_check(f: FourierSeries, g: FourierSeries, max_freq: int, reps: int,
                       seed: SeedSpec, name: str = "char_product") -> CheckResult:
    """Disjoint-support product rule: |C_hat(f+g) - C_hat(f) C_hat(g)| <= 12/sqrt(R)."""
    _require_reps(reps, "the product-rule check")
    p = pairings([f, g], max_freq, reps, seed)
    cf = np.mean(np.exp(1j * p[:, 0]))
    cg = np.mean(np.exp(1j * p[:, 1]))
    cfg = np.mean(np.exp(1j * (p[:, 0] + p[:, 1])))  # pairing is linear in the test function
    resid = float(abs(cfg - cf * cg))
    return _two_sided(name, resid, 0.0, 12.0 / math.sqrt(reps),
                      detail=f"|C(f)|={abs(cf):.4g}, |C(g)|={abs(cg):.4g}")


def hs_sum_check(n_max: int, two_sided_range: bool = False) -> CheckResult:
    """Partial sum of 1/n^2 against pi^2/6 (or the two-sided sum against pi^2/3)."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    s = float(np.sum(1.0 / np.arange(1, n_max + 1, dtype=np.float64) ** 2))
    if two_sided_range:
        return _two_sided(f"hs_sum_two_sided(n_max={n_max})", 2.0 * s, math.pi ** 2 / 3.0,
                          2.0 / n_max + 1e-12, detail="both frequency signs")
    return _two_sided(f"hs_sum(n_max={n_max})", s, math.pi ** 2 / 6.0, 1.0 / n_max + 1e-12,
                      detail="tail below 1/n_max")


def hs_noise_norm_check(max_freq: int, reps: int, seed: SeedSpec,
                        tolerance: float | None = None) -> CheckResult:
    """Mean dual-norm-squared of noise samples against its exact truncated expectation.

    Expectation is 2 * sum_{n<=N} 1/n^2; per-sample variance is
    4 * sum 1/n^4, giving the default 4*SE tolerance.
    """
    _require_reps(reps, "the noise norm check")
    n = np.arange(1, max_freq + 1, dtype=np.float64)
    expected = float(2.0 * np.sum(1.0 / n ** 2))
    se = 2.0 * math.sqrt(float(np.sum(1.0 / n ** 4)) / reps)
    tol = 4.0 * se if tolerance is None else float(tolerance)
    vals = np.empty(reps)
    for r in range(reps):
        vals[r] = noise_hminus1_norm_sq(sample_noise(max_freq, seed, r))
    return _two_sided(f"hs_noise_norm(N={max_freq})", float(vals.mean()), expected, tol,
                      detail=f"analytic SE={se:.6g}; sample SD={vals.std(ddof=1):.6g}")


# ----------------------------------------------------------------------
# Suites


@dataclass(frozen=True)
class SuiteConfig:
    max_freq: int = 1024
    grid: int = 2048
    reps: int = 20000
    master_seed: int = 42
    tol_ratio: float = 1e-10

    @property
    def seed(self) -> SeedSpec:
        return SeedSpec(self.master_seed)

    def as_dict(self) -> dict:
        return {"N": self.max_freq, "M": self.grid, "R": self.reps, "seed": self.master_seed}


def _distinct_pairs(points: Sequence[float]) -> list[tuple[float, float]]:
    return [(points[i], points[j]) for i in range(len(points)) for j in range(i + 1, len(points))]


def _all_pairs(points: Sequence[float]) -> list[tuple[float, float]]:
    return [(points[i], points[j]) for i in range(len(points)) for j in range(i, len(points))]


def _cosine(k: int, max_freq: int) -> FourierSeries:
    """2*cos(2 pi k t) as a real series: c_k = c_{-k} = 1."""
    pos = np.zeros(max_freq, dtype=np.complex128)
    pos[k - 1] = 1.0
    return hermitian_series(0.0, pos)


def _suite_covariance(cfg: SuiteConfig) -> list[CheckResult]:
    checks = []
    checks += check_parseval_bridge(cfg.max_freq, _distinct_pairs(POINT_GRID))
    checks += check_levy_gram(cfg.max_freq, _all_pairs(POINT_GRID))
    checks += mc_covariance_check("bridge", cfg.max_freq, _distinct_pairs(POINT_GRID),
                                  cfg.reps, cfg.seed)
    levy_pairs = [(0.2, 0.4), (0.05, 0.3), (0.25, 0.75), (0.2, 0.9), (0.1, 0.45)]
    checks += mc_covariance_check("levy", cfg.max_freq, levy_pairs, cfg.reps, cfg.seed)
    oracle_points = (0.125, 0.25, 0.375, 0.5, 0.75)
    checks += oracle_equivalence_check(127, 256, _distinct_pairs(oracle_points),
                                       cfg.reps, cfg.seed)
    return checks


def _suite_normality(cfg: SuiteConfig) -> list[CheckResult]:
    return [
        ks_normality_check(bridge_test_function(0.5, cfg.max_freq), cfg.max_freq,
                           cfg.reps, cfg.seed, name="ks_normality(bridge t=0.5)"),
        ks_normality_check(_cosine(2, cfg.max_freq), cfg.max_freq,
                           cfg.reps, cfg.seed, name="ks_normality(cosine k=2)"),
    ]


def _suite_independence(cfg: SuiteConfig) -> list[CheckResult]:
    p1 = pulse_test_function(0.0, 0.1, 1.0, cfg.max_freq)
    p2 = pulse_test_function(0.5, 0.1, 1.0, cfg.max_freq)
    pulse_tol = 8.0 / (math.pi ** 2 * cfg.max_freq) + 1e-8
    return [
        independence_check(p1, p2, cfg.max_freq, cfg.reps, cfg.seed,
                           orth_tol=pulse_tol, name="independence(disjoint pulses)"),
        independence_check(_cosine(1, cfg.max_freq), _cosine(2, cfg.max_freq), cfg.max_freq,
                           cfg.reps, cfg.seed, name="independence(cosines k=1,2)"),
    ]


def _suite_identity(cfg: SuiteConfig) -> list[CheckResult]:
    rng = np.random.default_rng(cfg.master_seed)
    checks = []
    n_id = 1001
    for _ in range(20):
        t, s = rng.random(), rng.random()
        checks.append(check_levy_identity(t, s, n_id))
    for s in (0.75, 0.5 + 1e-9, float(0.5 + 0.499 * rng.random())):
        checks.append(check_mirror(s, n_id))
    checks.append(check_mirror(0.9, 11))
    return checks


def _suite_charfunc(cfg: SuiteConfig) -> list[CheckResult]:
    p1 = pulse_test_function(0.0, 0.1, 1.0, cfg.max_freq)
    p2 = pulse_test_function(0.5, 0.1, 1.0, cfg.max_freq)
    return [
        char_functional_check(zero_series(cfg.max_freq), cfg.max_freq, cfg.reps, cfg.seed,
                              name="char_functional(zero)"),
        char_functional_check(_cosine(1, cfg.max_freq), cfg.max_freq, cfg.reps, cfg.seed,
                              name="char_functional(cosine norm_sq=2)"),
        char_product_check(p1, p2, cfg.max_freq, cfg.reps, cfg.seed,
                           name="char_product(disjoint pulses)"),
    ]


def _suite_degeneracy(cfg: SuiteConfig) -> list[CheckResult]:
    rng = np.random.default_rng(cfg.master_seed)
    checks = [
        check_degenerate_spectrum(2, cfg.tol_ratio, points=(0.1, 0.6, 0.3, 0.8)),
        check_degenerate_spectrum(8, cfg.tol_ratio),
    ]
    grid16 = _uniform_antipodal_points(8)
    checks += check_bridge_spectrum(grid16[grid16 > 0.0], cfg.tol_ratio)
    for _ in range(3):
        t = float(0.5 * rng.random())
        s = float(0.5 * rng.random())
        if abs(s - t) < 1e-3:
            s = (s + 0.2) % 0.5
        checks.append(check_antipodal_quadratic_form(t, s))
    return checks


def _suite_hs(cfg: SuiteConfig) -> list[CheckResult]:
    return [
        hs_sum_check(10 ** 6),
        hs_sum_check(10 ** 6, two_sided_range=True),
        hs_noise_norm_check(cfg.max_freq, cfg.reps, cfg.seed),
    ]


_SUITES = {
    "covariance": _suite_covariance,
    "normality": _suite_normality,
    "independence": _suite_independence,
    "identity": _suite_identity,
    "charfunc": _suite_charfunc,
    "degeneracy": _suite_degeneracy,
    "hs": _suite_hs,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> VerificationReport:
    """Run one named suite (or "all"); raises ValueError for unknown names or invalid reps."""
    cfg = cfg or SuiteConfig()
    if name != "all" and name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES + ('all',)}")
    names = SUITE_NAMES if name == "all" else (name,)
    for n in names:
        if n in STATISTICAL_SUITES:
            _require_reps(cfg.reps, f"suite {n!r}")
    checks: list[CheckResult] = []
    for n in names:
        checks.extend(_SUITES[n](cfg))
    return VerificationReport(name, cfg.as_dict(), tuple(checks))
