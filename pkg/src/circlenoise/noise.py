"""Truncated draws from the white-noise measure on the circle.

A noise sample is the coefficient vector (z_n), 0 < |n| <= N, with
z_{-n} = conj(z_n) (samples are real-valued generalized functions) and,
for n > 0, Re z_n and Im z_n independent N(0, 1/2), so E|z_n|^2 = 1.
There is no n = 0 coefficient: the measure lives on the dual of the
zero-mean test-function space.  With this normalization the pairing of
a zero-mean real test function f against a sample is a centered
Gaussian whose variance is exactly the truncated squared L2 norm of f.

Reproducibility contract (fixed for this implementation): streams come
from numpy's counter-based Philox generator keyed by
SeedSequence((master_seed, domain, replicate)).  Within one replicate
the frequency draws are consumed in increasing order, real part before
imaginary part, so a sample at truncation N is the prefix of the same
replicate's sample at any larger truncation, and values are independent
of the order in which replicates are generated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .fourier import FourierSeries

# Stream domains; each (domain, replicate) pair is an independent stream.
DOMAIN_NOISE = 0
DOMAIN_CHOLESKY = 1


@dataclass(frozen=True)
class SeedSpec:
    """Master seed plus the stream-derivation rule described in the module docstring."""

    master_seed: int

    def generator(self, domain: int, replicate: int) -> np.random.Generator:
        seq = np.random.SeedSequence((int(self.master_seed), int(domain), int(replicate)))
        return np.random.Generator(np.random.Philox(seq))


@dataclass(frozen=True, eq=False)
class NoiseSample:
    """One truncated white-noise draw; z_pos holds z_n for n = 1..N."""

    z_pos: np.ndarray = field(repr=False)
    seed_info: tuple[int, int] | None = None  # (master_seed, replicate)

    def __post_init__(self) -> None:
        z = np.array(self.z_pos, dtype=np.complex128, copy=True)
        if z.ndim != 1 or z.size < 1:
            raise ValueError("z_pos must be a nonempty one-dimensional array")
        if not np.all(np.isfinite(z)):
            raise ValueError("noise coefficients must be finite")
        z.setflags(write=False)
        object.__setattr__(self, "z_pos", z)

    def __repr__(self) -> str:
        return f"NoiseSample(max_freq={self.max_freq}, seed_info={self.seed_info})"

    @property
    def max_freq(self) -> int:
        return self.z_pos.size

    def coeff(self, n: int) -> complex:
        """z_n, with z_{-n} = conj(z_n); n = 0 has no coefficient."""
        if n == 0:
            raise ValueError("white-noise samples carry no zero-frequency coefficient")
        if abs(n) > self.max_freq:
            return 0j
        if n > 0:
            return complex(self.z_pos[n - 1])
        return complex(np.conj(self.z_pos[-n - 1]))


def sample_noise(max_freq: int, seed: SeedSpec, replicate: int = 0) -> NoiseSample:
    """Draw one noise sample, deterministic in (seed, replicate, max_freq)."""
    if max_freq < 1:
        raise ValueError("max_freq must be at least 1")
    g = seed.generator(DOMAIN_NOISE, replicate)
    d = g.standard_normal(2 * max_freq)
    z = (d[0::2] + 1j * d[1::2]) * math.sqrt(0.5)
    return NoiseSample(z, (seed.master_seed, replicate))


def _pairing_coeffs(f: FourierSeries, max_freq: int) -> np.ndarray:
    """Positive-side coefficients of f clipped to |n| <= max_freq, validated for pairing."""
    if not f.real_valued:
        raise ValueError("pairing requires a real-valued test function")
    if f.coeff(0) != 0:
        raise ValueError("pairing requires a zero-mean test function (c_0 = 0)")
    return f.positive_coeffs[:max_freq]


def pair(f: FourierSeries, x: NoiseSample) -> float:
    """Dual pairing sum over 0 < |n| <= min(N_f, N_x) of c_n(f) * conj(z_n).

    Computed as 2 * Re(sum over n > 0), so the result is exactly real.
    """
    c = _pairing_coeffs(f, x.max_freq)
    m = c.size
    return float(2.0 * np.real(np.dot(c, np.conj(x.z_pos[:m]))))


def noise_hminus1_norm_sq(x: NoiseSample) -> float:
    """Squared dual-space norm of a sample, sum over n != 0 of |z_n|^2 / n^2."""
    n = np.arange(1, x.max_freq + 1, dtype=np.float64)
    return float(2.0 * np.sum((x.z_pos.real ** 2 + x.z_pos.imag ** 2) / n ** 2))


def pairings(fs: Sequence[FourierSeries], max_freq: int, reps: int,
             seed: SeedSpec) -> np.ndarray:
    """Matrix of pair(fs[j], x_r) for replicates r = 0..reps-1, shape (reps, len(fs)).

    Each replicate uses its own keyed stream, so the output is identical
    to calling sample_noise/pair one replicate at a time, in any order.
    """
    if max_freq < 1:
        raise ValueError("max_freq must be at least 1")
    if reps < 1:
        raise ValueError("reps must be positive")
    # Same dot product as pair(), per function, so batching cannot change values.
    coeffs = [_pairing_coeffs(f, max_freq) for f in fs]
    out = np.empty((reps, len(fs)), dtype=np.float64)
    for r in range(reps):
        z_conj = np.conj(sample_noise(max_freq, seed, r).z_pos)
        for j, c in enumerate(coeffs):
            out[r, j] = 2.0 * np.real(np.dot(c, z_conj[:c.size]))
    return out


def empirical_char_functional(f: FourierSeries, max_freq: int, reps: int,
                              seed: SeedSpec) -> complex:
    """Monte Carlo characteristic functional (1/R) * sum_r exp(i * pair(f, x_r)).

    The exact value for the underlying measure is exp(-norm^2 / 2) with
    the truncated squared L2 norm of f; the zero series gives exactly 1.
    """
    if reps < 1000:
        raise ValueError("characteristic-functional estimates require reps >= 1000")
    p = pairings([f], max_freq, reps, seed)[:, 0]
    return complex(np.mean(np.exp(1j * p)))
