"""Path synthesis and covariance oracles for Gaussian processes on the circle.

Two synthesis routes are provided for the same spectral construction: a
direct O(N*M) summation over test-function coefficients and an
O(M log M) FFT evaluation, which must agree to 1e-9 elementwise.  A
dense Cholesky sampler over the closed-form kernels acts as an
independent oracle with no truncation error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO

import numpy as np

from .fourier import SQRT2, TWO_PI, bridge_test_function, levy_test_function
from .noise import DOMAIN_CHOLESKY, NoiseSample, SeedSpec, pair, sample_noise

KERNEL_KINDS = ("levy", "bridge", "min")
PROCESS_KINDS = ("bridge", "levy")

# Relative jitter ladder for the dense factorization; the rank-deficient
# levy kernel is expected to absorb a nonzero rung.
_JITTER_START = 1e-12
_JITTER_MAX = 1e-6


class CholeskyError(ValueError):
    """Dense factorization failed even at the largest jitter."""

    def __init__(self, message: str, min_eigenvalue: float):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


def circular_distance(s, t):
    """Shorter-arc distance on R/Z: min(|s-t|, 1-|s-t|).  Vectorizes."""
    d = np.abs(np.asarray(s, dtype=np.float64) - np.asarray(t, dtype=np.float64)) % 1.0
    out = np.minimum(d, 1.0 - d)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class Kernel:
    """Closed-form covariance on the circle.

    kind "levy":   (r(o,t) + r(o,s) - r(s,t)) / 2 in the circular distance r
    kind "bridge": min(s,t) - s*t
    kind "min":    min(s,t)
    """

    kind: str
    origin: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in KERNEL_KINDS:
            raise ValueError(f"unknown kernel kind {self.kind!r}; expected one of {KERNEL_KINDS}")
        if not 0.0 <= self.origin < 1.0:
            raise ValueError("kernel origin must lie in [0, 1)")


def kernel_eval(kernel: Kernel, s, t):
    """K(s, t); accepts scalars or broadcastable arrays."""
    s = np.asarray(s, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    if kernel.kind == "levy":
        o = kernel.origin
        v = 0.5 * (circular_distance(o, t) + circular_distance(o, s) - circular_distance(s, t))
    elif kernel.kind == "bridge":
        v = np.minimum(s, t) - s * t
    else:
        v = np.minimum(s, t)
    v = np.asarray(v)
    return float(v) if v.ndim == 0 else v


def gram_matrix(kernel: Kernel, points) -> np.ndarray:
    """Symmetric matrix G_ij = K(p_i, p_j) over distinct points."""
    p = np.asarray(points, dtype=np.float64)
    if p.ndim != 1 or p.size < 1:
        raise ValueError("points must be a nonempty one-dimensional sequence")
    if np.unique(p).size != p.size:
        raise ValueError("gram matrix points must be distinct")
    return np.asarray(kernel_eval(kernel, p[:, None], p[None, :]))


@dataclass(frozen=True)
class GridSpec:
    """Uniform circle grid t_j = j / num_points, j = 0..num_points-1 (endpoint 1 excluded)."""

    num_points: int

    def __post_init__(self) -> None:
        if self.num_points < 2:
            raise ValueError("grid needs at least 2 points")

    def times(self) -> np.ndarray:
        return np.arange(self.num_points) / self.num_points


def _check_process_kind(kind: str) -> None:
    if kind not in PROCESS_KINDS:
        raise ValueError(f"unknown process kind {kind!r}; expected one of {PROCESS_KINDS}")


def synthesize_path_naive(kind: str, x: NoiseSample, grid: GridSpec) -> np.ndarray:
    """Direct summation: pair the grid point's test function against x, one point at a time.

    O(N*M); the reference implementation the FFT route is checked against.
    """
    _check_process_kind(kind)
    make = bridge_test_function if kind == "bridge" else levy_test_function
    N = x.max_freq
    M = grid.num_points
    return np.array([pair(make(j / M, N), x) for j in range(M)])


def synthesize_path_fft(kind: str, x: NoiseSample, grid: GridSpec) -> np.ndarray:
    """FFT synthesis of the same pairing sum, O(M log M).

    Both processes have coefficients of the form c_n(t) = g_n * (phase(n, t) - 1)
    with a t-independent g_n, so the path splits into a constant minus one
    length-M inverse transform of the Hermitian weight sequence
    w_n = g_n-type * noise coefficient.  Requires M >= 2N+1 so the two-sided
    frequency range embeds alias-free in the grid.
    """
    _check_process_kind(kind)
    N = x.max_freq
    M = grid.num_points
    if M < 2 * N + 1:
        raise ValueError(f"alias-free FFT synthesis needs grid size >= 2N+1 = {2 * N + 1}, got {M}")
    n = np.arange(1, N + 1)
    if kind == "bridge":
        # c_n(t) = (1 - e^{-i2pi n t}) / (i2pi n); path = A - sum_n w_n e^{-i2pi n t}
        w = np.conj(x.z_pos) / (1j * TWO_PI * n)
        sign = 1.0
    else:
        # c_k(t) = (e^{i2pi k t} - 1) / (sqrt2 pi |k|); substituting k -> -n gives
        # path = sum_n w_n e^{-i2pi n t} - A with w_n = z_n / (sqrt2 pi n), odd n only.
        w = x.z_pos / (SQRT2 * np.pi * n)
        w[n % 2 == 0] = 0.0
        sign = -1.0
    W = np.zeros(M, dtype=np.complex128)
    W[1: N + 1] = w
    W[M - N:] = np.conj(w[::-1])
    dft = np.fft.fft(W)
    resid = float(np.max(np.abs(dft.imag)))
    if resid > 1e-10:
        raise AssertionError(f"Hermitian weights must give a real transform; imag residue {resid:g}")
    a = 2.0 * float(np.sum(w).real)
    return sign * (a - dft.real)


@dataclass(frozen=True, eq=False)
class PathEnsemble:
    """Replicate sample paths on a uniform grid plus their provenance."""

    grid: GridSpec
    kind: str
    max_freq: int | None  # None for the dense Cholesky oracle (no truncation)
    paths: np.ndarray = field(repr=False)  # shape (reps, grid.num_points)
    seed_info: tuple[int, int] | None = None  # (master_seed, first replicate)

    def __post_init__(self) -> None:
        p = np.asarray(self.paths, dtype=np.float64)
        if p.ndim != 2 or p.shape[1] != self.grid.num_points:
            raise ValueError("paths must be a (reps, grid points) array")
        if not np.all(np.isfinite(p)):
            raise ValueError("path values must be finite")
        p.setflags(write=False)
        object.__setattr__(self, "paths", p)

    def __repr__(self) -> str:
        return (f"PathEnsemble(kind={self.kind!r}, reps={self.paths.shape[0]}, "
                f"grid={self.grid.num_points}, max_freq={self.max_freq})")


def synthesize_ensemble(kind: str, max_freq: int, grid: GridSpec, reps: int,
                        seed: SeedSpec, method: str = "fft") -> PathEnsemble:
    """Synthesize reps independent paths; replicate r uses its own keyed stream."""
    if method not in ("fft", "naive"):
        raise ValueError(f"unknown synthesis method {method!r}")
    synth = synthesize_path_fft if method == "fft" else synthesize_path_naive
    out = np.empty((reps, grid.num_points))
    for r in range(reps):
        out[r] = synth(kind, sample_noise(max_freq, seed, r), grid)
    return PathEnsemble(grid, kind, max_freq, out, (seed.master_seed, 0))


def jittered_cholesky(G: np.ndarray) -> tuple[np.ndarray, float]:
    """Lower Cholesky factor of a symmetric matrix, with escalating diagonal jitter.

    Returns (L, jitter_used); jitter is relative to the largest diagonal
    entry, starting at 1e-12 and escalating tenfold up to 1e-6.  Raises
    CholeskyError carrying the most negative eigenvalue if even that fails.
    """
    scale = float(np.max(np.diag(G)))
    if scale <= 0.0:
        scale = 1.0
    jitter = 0.0
    while True:
        try:
            L = np.linalg.cholesky(G + (jitter * scale) * np.eye(G.shape[0]))
            return L, jitter
        except np.linalg.LinAlgError:
            if jitter == 0.0:
                jitter = _JITTER_START
            elif jitter < _JITTER_MAX:
                jitter *= 10.0
            else:
                min_eig = float(np.min(np.linalg.eigvalsh(G)))
                raise CholeskyError(
                    f"factorization failed at relative jitter {_JITTER_MAX:g}; "
                    f"most negative eigenvalue {min_eig:g}", min_eig) from None


def cholesky_factor(kernel: Kernel, points) -> tuple[np.ndarray, float]:
    """Jittered Cholesky factor of the kernel's Gram matrix over the points."""
    return jittered_cholesky(gram_matrix(kernel, points))


def cholesky_sample(kernel: Kernel, grid: GridSpec, seed: SeedSpec,
                    replicate: int = 0) -> np.ndarray:
    """Brute-force oracle draw from N(0, Gram) on the grid; no truncation error."""
    L, _ = cholesky_factor(kernel, grid.times())
    return _cholesky_draw(L, seed, replicate)


def _cholesky_draw(L: np.ndarray, seed: SeedSpec, replicate: int) -> np.ndarray:
    g = seed.generator(DOMAIN_CHOLESKY, replicate)
    return L @ g.standard_normal(L.shape[0])


def cholesky_ensemble(kernel: Kernel, grid: GridSpec, reps: int,
                      seed: SeedSpec) -> PathEnsemble:
    """reps oracle draws; factors once, draws match cholesky_sample replicate by replicate."""
    L, _ = cholesky_factor(kernel, grid.times())
    out = np.empty((reps, grid.num_points))
    for r in range(reps):
        out[r] = _cholesky_draw(L, seed, r)
    return PathEnsemble(grid, f"{kernel.kind}-cholesky", None, out, (seed.master_seed, 0))


def write_paths_csv(ensemble: PathEnsemble, fp: IO[str], config: dict | None = None) -> None:
    """Wide-format CSV: header replicate,t0,t1,... and one full-precision row per replicate."""
    if config is not None:
        fp.write("# config: " + json.dumps(config, sort_keys=True) + "\n")
    M = ensemble.grid.num_points
    fp.write("replicate," + ",".join(f"t{j}" for j in range(M)) + "\n")
    for r, row in enumerate(ensemble.paths):
        fp.write(str(r) + "," + ",".join(f"{v:.17g}" for v in row) + "\n")
