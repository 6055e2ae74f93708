"""White noise, Brownian bridge, and Levy's Brownian motion on the unit circle.

The package realizes the white-noise measure on the circle through
truncated Hermitian Gaussian Fourier coefficients, synthesizes the
associated Brownian bridge and Levy's circular Brownian motion by
pairing test functions against noise draws (naive and FFT routes), and
verifies the covariance, identity, and degeneracy structure of these
processes with explicit tolerances.
"""

from .fourier import (FourierSeries, add, basis, bridge_test_function, evaluate,
                      h1_norm_sq, hermitian_series, hminus1_norm_sq, indicator_function,
                      inner_product, l2_norm_sq, levy_test_function, project_zero_mean,
                      pulse_test_function, scale, truncate, write_coefficients_csv,
                      zero_series)
from .noise import (NoiseSample, SeedSpec, empirical_char_functional, noise_hminus1_norm_sq,
                    pair, pairings, sample_noise)
from .processes import (CholeskyError, GridSpec, Kernel, PathEnsemble, cholesky_ensemble,
                        cholesky_factor, cholesky_sample, circular_distance, gram_matrix,
                        jittered_cholesky, kernel_eval, synthesize_ensemble,
                        synthesize_path_fft, synthesize_path_naive, write_paths_csv)
from .verify import (CheckResult, SuiteConfig, VerificationReport, char_functional_check,
                     char_product_check, check_antipodal_quadratic_form, check_bridge_spectrum,
                     check_degenerate_spectrum, check_levy_gram, check_levy_identity,
                     check_mirror, check_parseval_bridge, hs_noise_norm_check, hs_sum_check,
                     independence_check, ks_normality_check, ks_statistic, mc_covariance_check,
                     oracle_equivalence_check, run_suite)

__version__ = "0.1.0"
