#pragma once

// Numerical tolerances shared between the library and its test suites.
// Everything that gates a branch (singularity, support truncation,
// validation) lives here so the two sides can never drift apart.
namespace cartanqm::tol {

inline constexpr double hermiticity = 1e-12;      // max |M - M^dag| accepted as Hermitian
inline constexpr double eig_residual = 1e-10;     // |M v - y v| guaranteed per eigenpair
inline constexpr double jacobi_offdiag = 1e-14;   // Jacobi stop: off-diagonal norm / scale
inline constexpr int jacobi_max_sweeps = 100;

inline constexpr double singular_det = 1e-12;     // 3x3 determinant below this => singular
inline constexpr double unit_norm = 1e-12;        // state normalization drift
inline constexpr double param_norm = 1e-10;       // canonical-parameter normalization
inline constexpr double trace_one = 1e-10;        // density-matrix trace deviation
inline constexpr double positivity = 1e-10;       // eigenvalues >= -positivity required
inline constexpr double sqrt_clamp = 1e-10;       // negatives above -sqrt_clamp clamp to 0

inline constexpr double support_eps = 1e-10;      // mixed QFIM: drop terms with y_l+y_m <= eps
inline constexpr double fd_step = 1e-6;           // central finite-difference step

inline constexpr double kraus_completeness = 1e-12;
inline constexpr double gamma_range_slack = 0.0;  // noise parameter must lie in [0,1] exactly

inline constexpr double canonical_domain = 1e-12; // slack for the D_C predicate
inline constexpr int canonicalize_max_iter = 16;

}  // namespace cartanqm::tol
