#pragma once

#include <array>

#include "cartanqm/cartan.hpp"

namespace cartanqm {

/// Quantum Fisher information matrix for the three Cartan angles, with the
/// derived scalar metrics: precision bound p = Tr[Q^-1] and sloppiness
/// s = 1/Det[Q]. Singular matrices report p = s = +infinity (never NaN);
/// `det` always carries the honest determinant.
struct Qfim {
  Mat3 q;
  double det = 0.0;
  double p = 0.0;         // +inf when singular
  double s = 0.0;         // +inf when singular
  bool singular = false;

  double inv_s() const { return det; }

  static Qfim from_matrix(const Mat3& q);
};

/// Uhlmann (incompatibility) matrix. Antisymmetric by construction, zero
/// diagonal; det of an odd-dimensional antisymmetric matrix vanishes
/// identically, so `det` is a pure roundoff probe.
struct UhlmannMatrix {
  Mat3 d;
  double det = 0.0;
};

/// psi_lambda = U|psi0> together with the three derivative states
/// d_j psi = -i (s_j ⊗ s_j) U |psi0>, all in the canonical basis.
struct EvolvedPure {
  CVec psi;
  std::array<CVec, 3> dpsi;
};

EvolvedPure evolve_with_derivatives(const TwoQubitPureState& psi0, const CartanParams& lambda);

/// Pure-state QFIM: Q_jk = 4 Re[<d_j psi|d_k psi> - <d_j psi|psi><psi|d_k psi>].
Qfim qfim_pure(const TwoQubitPureState& psi0, const CartanParams& lambda);

/// Closed-form QFIM elements for a canonical-basis probe.
Qfim qfim_closed_canonical(const CanonicalParams& p);

/// Closed-form QFIM for a Bell-basis probe (a, b e^{i.}, c e^{i.}, d e^{i.});
/// depends only on the real amplitudes b, c, d. Requires b^2+c^2+d^2 <= 1.
Qfim qfim_closed_bell(double b, double c, double d);

/// Closed-form precision bound Tr[Q^-1] for a canonical-basis probe;
/// +infinity where a factor of the model is insensitive.
double closed_precision_canonical(const CanonicalParams& p);

/// Closed-form Det[Q] for a canonical-basis probe.
double closed_inv_sloppiness_canonical(const CanonicalParams& p);

/// (3/64)(1/b^2 + 1/c^2 + 1/d^2 + 1/(1-b^2-c^2-d^2)); +infinity if any
/// amplitude vanishes.
double closed_precision_bell(double b, double c, double d);

/// d_j rho = -i [s_j ⊗ s_j, rho_lambda], the analytic derivative of
/// rho_lambda = U eps(rho0) U^dag; Hermitian and traceless.
std::array<ComplexMatrix, 3> density_derivatives(const DensityMatrix4& rho_lambda);

/// General (mixed-state) QFIM from the spectral decomposition of rho_lambda:
///   Q_jk = sum_{l,m : y_l+y_m > eps} 2 Re(<y_l|d_j rho|y_m><y_m|d_k rho|y_l>)
///          / (y_l + y_m),
/// summed over the full eigenbasis with the support filter on y_l + y_m.
Qfim qfim_mixed(const DensityMatrix4& rho_lambda, const std::array<ComplexMatrix, 3>& drho,
                double support_eps = tol::support_eps);

/// D_jk = 4 Im[<d_j psi|d_k psi> - <d_j psi|psi><psi|d_k psi>]; identically
/// zero for this model (every probe, every lambda).
UhlmannMatrix uhlmann_pure(const TwoQubitPureState& psi0, const CartanParams& lambda);

/// Symmetric logarithmic derivative of a pure state:
/// L = 2(|dpsi><psi| + |psi><dpsi|), solving d rho = (L rho + rho L)/2.
ComplexMatrix sld_pure(const CVec& psi_lambda, const CVec& dpsi);

}  // namespace cartanqm
