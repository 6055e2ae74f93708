"""Truncated Fourier analysis on the unit circle R/Z.

Functions on the circle are represented by two-sided coefficient vectors
c_n, |n| <= N, against the orthonormal basis psi_n(t) = exp(i*2*pi*n*t).
A real-valued function carries the exact Hermitian symmetry
c_{-n} = conj(c_n).  Inner products and norms are Parseval sums over the
coefficients; series of different truncation are aligned by implicitly
zero-padding the shorter one.  All values are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import IO, Sequence, Union

import numpy as np

TWO_PI = 2.0 * math.pi
SQRT2 = math.sqrt(2.0)

ArrayLike = Union[Sequence[complex], np.ndarray]


@dataclass(frozen=True, eq=False)
class FourierSeries:
    """Two-sided coefficient vector, laid out as coeffs[n + max_freq] = c_n."""

    coeffs: np.ndarray = field(repr=False)
    real_valued: bool = False

    def __post_init__(self) -> None:
        c = np.array(self.coeffs, dtype=np.complex128, copy=True)
        if c.ndim != 1 or c.size % 2 == 0:
            raise ValueError("coefficients must be a one-dimensional array of odd length")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        if self.real_valued and not np.array_equal(c[::-1], np.conj(c)):
            raise ValueError("real_valued series requires c_{-n} == conj(c_n) exactly")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __repr__(self) -> str:
        return f"FourierSeries(max_freq={self.max_freq}, real_valued={self.real_valued})"

    @property
    def max_freq(self) -> int:
        return (self.coeffs.size - 1) // 2

    def coeff(self, n: int) -> complex:
        """c_n, zero outside the stored frequency range."""
        if abs(n) > self.max_freq:
            return 0j
        return complex(self.coeffs[n + self.max_freq])

    @property
    def positive_coeffs(self) -> np.ndarray:
        """Read-only view of (c_1, ..., c_N)."""
        return self.coeffs[self.max_freq + 1:]


def _check_unit_point(t: float, name: str = "t") -> float:
    t = float(t)
    if not 0.0 <= t < 1.0:
        raise ValueError(f"{name} must lie in [0, 1), got {t!r}")
    return t


def hermitian_series(c0: float, positive: ArrayLike) -> FourierSeries:
    """Real-valued series from its nonnegative half; c_{-n} is set to conj(c_n)."""
    if complex(c0).imag != 0.0:
        raise ValueError("c_0 of a real-valued series must be real")
    pos = np.asarray(positive, dtype=np.complex128)
    coeffs = np.concatenate([np.conj(pos[::-1]), [complex(c0)], pos])
    return FourierSeries(coeffs, real_valued=True)


def zero_series(max_freq: int) -> FourierSeries:
    if max_freq < 0:
        raise ValueError("max_freq must be nonnegative")
    return FourierSeries(np.zeros(2 * max_freq + 1, dtype=np.complex128), real_valued=True)


def basis(n: int, max_freq: int | None = None) -> FourierSeries:
    """The basis exponential psi_n; real-valued only for n = 0."""
    N = abs(n) if max_freq is None else int(max_freq)
    if N < abs(n):
        raise ValueError("max_freq must be at least |n|")
    c = np.zeros(2 * N + 1, dtype=np.complex128)
    c[n + N] = 1.0
    return FourierSeries(c, real_valued=(n == 0))


def _aligned_pair(f: FourierSeries, g: FourierSeries) -> tuple[np.ndarray, np.ndarray]:
    # Coefficients beyond the shorter truncation are zero, so the Parseval
    # sum only runs over the common range.
    m = min(f.max_freq, g.max_freq)
    a = f.coeffs[f.max_freq - m: f.max_freq + m + 1]
    b = g.coeffs[g.max_freq - m: g.max_freq + m + 1]
    return a, b


def inner_product(f: FourierSeries, g: FourierSeries) -> complex | float:
    """L2 inner product (f, g) = integral of f*conj(g), as the Parseval sum.

    Returns a float when both series are real-valued (the exact value is
    real by Hermitian symmetry), otherwise a complex number.
    """
    a, b = _aligned_pair(f, g)
    v = np.dot(a, np.conj(b))
    if f.real_valued and g.real_valued:
        return float(v.real)
    return complex(v)


def l2_norm_sq(f: FourierSeries) -> float:
    """Squared L2 norm, sum of |c_n|^2; identical to inner_product(f, f)."""
    v = np.dot(f.coeffs, np.conj(f.coeffs))
    return float(v.real)


def _require_zero_mean(f: FourierSeries, what: str) -> None:
    if f.coeff(0) != 0:
        raise ValueError(f"{what} requires a zero-mean series (c_0 = 0), got c_0 = {f.coeff(0)!r}")


def h1_norm_sq(f: FourierSeries) -> float:
    """Squared first-order Sobolev norm, sum of n^2 |c_n|^2 (zero-mean series only)."""
    _require_zero_mean(f, "the order-1 Sobolev norm")
    n = np.arange(-f.max_freq, f.max_freq + 1, dtype=np.float64)
    return float(np.sum((n * np.abs(f.coeffs)) ** 2))


def hminus1_norm_sq(f: FourierSeries) -> float:
    """Squared dual-space norm, sum over n != 0 of |c_n|^2 / n^2 (zero-mean series only)."""
    _require_zero_mean(f, "the order minus-1 Sobolev norm")
    N = f.max_freq
    if N == 0:
        return 0.0
    n = np.arange(1, N + 1, dtype=np.float64)
    pos = f.coeffs[N + 1:]
    neg = f.coeffs[N - 1:: -1]  # c_{-1}, c_{-2}, ...
    return float(np.sum((np.abs(pos) ** 2 + np.abs(neg) ** 2) / n ** 2))


def evaluate(f: FourierSeries, t: float | np.ndarray) -> complex | float | np.ndarray:
    """Synthesis sum over n of c_n exp(i*2*pi*n*t) at a point or 1-d array of points.

    Real-valued series return real output.  Intended for desk-scale
    grids; the phase matrix for array input is len(t) x (2N+1).
    """
    ts = np.asarray(t, dtype=np.float64)
    n = np.arange(-f.max_freq, f.max_freq + 1)
    phases = np.exp(1j * TWO_PI * np.multiply.outer(ts, n))
    v = phases @ f.coeffs
    if f.real_valued:
        v = v.real
    if ts.ndim == 0:
        return float(v) if f.real_valued else complex(v)
    return v


def _indicator_positive_coeffs(a: float, b: float, max_freq: int) -> np.ndarray:
    n = np.arange(1, max_freq + 1)
    return (np.exp(-1j * TWO_PI * n * a) - np.exp(-1j * TWO_PI * n * b)) / (1j * TWO_PI * n)


def indicator_function(a: float, b: float, max_freq: int) -> FourierSeries:
    """Truncated series of the indicator 1_[a,b), 0 <= a <= b <= 1.

    c_0 = b - a and c_n = (e^{-i2pi n a} - e^{-i2pi n b}) / (i 2 pi n);
    coefficients are generated analytically, never by quadrature.
    """
    a, b = float(a), float(b)
    if not (0.0 <= a <= b <= 1.0):
        raise ValueError(f"need 0 <= a <= b <= 1, got a={a!r}, b={b!r}")
    if max_freq < 1:
        raise ValueError("max_freq must be at least 1")
    return hermitian_series(b - a, _indicator_positive_coeffs(a, b, max_freq))


def bridge_test_function(t: float, max_freq: int) -> FourierSeries:
    """Zero-mean indicator 1_[0,t) - t, the test function of the circular Brownian bridge.

    Coefficients: c_0 = 0 and c_n = (1 - e^{-i 2 pi n t}) / (i 2 pi n).
    Pairing it against white noise gives a Gaussian field over t with
    covariance min(s,t) - s*t.
    """
    t = _check_unit_point(t)
    if max_freq < 1:
        raise ValueError("max_freq must be at least 1")
    n = np.arange(1, max_freq + 1)
    pos = (1.0 - np.exp(-1j * TWO_PI * n * t)) / (1j * TWO_PI * n)
    return hermitian_series(0.0, pos)


def levy_test_function(t: float, max_freq: int) -> FourierSeries:
    """Odd-frequency test function realizing Levy's Brownian motion on the circle.

    Coefficients: c_k = (e^{i 2 pi k t} - 1) / (sqrt(2) pi |k|) for odd
    |k| <= N, exactly zero for even k and k = 0.  Pairings against white
    noise have covariance (r(0,t) + r(0,s) - r(s,t)) / 2 in the circular
    distance r, i.e. min(s,t) on the half-circle [0, 1/2] and its mirror
    image beyond; the even-frequency gap makes the process degenerate.
    """
    t = _check_unit_point(t)
    if max_freq < 1:
        raise ValueError("max_freq must be at least 1")
    k = np.arange(1, max_freq + 1)
    pos = (np.exp(1j * TWO_PI * k * t) - 1.0) / (SQRT2 * np.pi * k)
    pos[k % 2 == 0] = 0.0
    return hermitian_series(0.0, pos)


def pulse_test_function(a: float, w: float, amp: float, max_freq: int) -> FourierSeries:
    """Zero-integral square pulse amp*(1_[a,a+w) - 1_[a+w,a+2w)), support [a, a+2w).

    Wraparound supports are rejected: a + 2w must not exceed 1.
    """
    a, w, amp = float(a), float(w), float(amp)
    _check_unit_point(a, "a")
    if w <= 0.0:
        raise ValueError("pulse width must be positive")
    if a + 2.0 * w > 1.0:
        raise ValueError(f"pulse support [a, a+2w) may not wrap around 1, got a={a!r}, w={w!r}")
    if max_freq < 1:
        raise ValueError("max_freq must be at least 1")
    pos = amp * (_indicator_positive_coeffs(a, a + w, max_freq)
                 - _indicator_positive_coeffs(a + w, a + 2.0 * w, max_freq))
    return hermitian_series(0.0, pos)


def project_zero_mean(f: FourierSeries) -> FourierSeries:
    """Copy of f with c_0 set to zero; idempotent, all other coefficients unchanged."""
    if f.coeff(0) == 0:
        return f
    c = np.array(f.coeffs, copy=True)
    c[f.max_freq] = 0.0
    return FourierSeries(c, real_valued=f.real_valued)


def truncate(f: FourierSeries, max_freq: int) -> FourierSeries:
    """Restrict (or zero-pad) f to the frequency range |n| <= max_freq."""
    if max_freq < 0:
        raise ValueError("max_freq must be nonnegative")
    N = f.max_freq
    if max_freq == N:
        return f
    if max_freq < N:
        c = f.coeffs[N - max_freq: N + max_freq + 1]
    else:
        pad = max_freq - N
        c = np.concatenate([np.zeros(pad, np.complex128), f.coeffs, np.zeros(pad, np.complex128)])
    return FourierSeries(c, real_valued=f.real_valued)


def add(f: FourierSeries, g: FourierSeries) -> FourierSeries:
    """Coefficient-wise sum, aligned to the larger truncation."""
    N = max(f.max_freq, g.max_freq)
    c = truncate(f, N).coeffs + truncate(g, N).coeffs
    return FourierSeries(c, real_valued=f.real_valued and g.real_valued)


def scale(f: FourierSeries, alpha: complex) -> FourierSeries:
    """Scalar multiple alpha * f; stays real-valued only for real alpha."""
    alpha = complex(alpha)
    keep_real = f.real_valued and alpha.imag == 0.0
    return FourierSeries(alpha * f.coeffs, real_valued=keep_real)


def write_coefficients_csv(f: FourierSeries, fp: IO[str]) -> None:
    """Dump coefficients as CSV rows n, re, im for n = -N..N, full double precision."""
    fp.write("n,re,im\n")
    N = f.max_freq
    for idx, c in enumerate(f.coeffs):
        fp.write(f"{idx - N},{c.real:.17g},{c.imag:.17g}\n")
