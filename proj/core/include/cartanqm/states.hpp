#pragma once

#include <array>

#include "cartanqm/linalg.hpp"

namespace cartanqm {

enum class Basis { Canonical, Bell };

/// Normalized two-qubit pure state tagged with the basis its amplitudes are
/// expressed in. The Bell basis is ordered (|00>+|11>, |00>-|11>,
/// |01>+|10>, |01>-|10>)/sqrt(2); the diagonal gate phases are tied to this
/// order, so it is fixed project-wide.
struct TwoQubitPureState {
  std::array<cxd, 4> amp{};
  Basis basis = Basis::Canonical;

  /// Validates normalization within tol::unit_norm.
  static TwoQubitPureState make(const std::array<cxd, 4>& amplitudes, Basis basis);
  /// Rescales to unit norm (zero vector is a domain error).
  static TwoQubitPureState make_normalized(const std::array<cxd, 4>& amplitudes, Basis basis);

  CVec vec() const { return CVec{amp[0], amp[1], amp[2], amp[3]}; }
  double norm() const;
};

/// Probe parametrization in the computational basis:
/// (alpha, beta e^{i phi_beta}, gamma e^{i phi_gamma}, delta e^{i phi_delta}).
struct CanonicalParams {
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
  double phi_beta = 0.0, phi_gamma = 0.0, phi_delta = 0.0;
};

/// Throws std::domain_error reporting the normalization deficit when
/// alpha^2+beta^2+gamma^2+delta^2 differs from 1 beyond tol::param_norm.
TwoQubitPureState from_canonical_params(const CanonicalParams& p);

/// Moduli and relative phases of a state's canonical-basis amplitudes
/// (global phase referenced to the first nonzero amplitude).
CanonicalParams canonical_params_of(const TwoQubitPureState& psi);

TwoQubitPureState change_basis(const TwoQubitPureState& psi, Basis target);

/// |<a|b>| after aligning bases; global-phase-insensitive state comparison.
double fidelity(const TwoQubitPureState& a, const TwoQubitPureState& b);

/// <psi|M|psi> with M given in the canonical basis.
cxd expectation(const TwoQubitPureState& psi, const ComplexMatrix& m);

/// 2|a00 a11 - a01 a10| on the canonical-basis amplitudes.
double concurrence_pure(const TwoQubitPureState& psi);

/// 4x4 density operator, entries always in the canonical basis.
class DensityMatrix4 {
 public:
  /// Validates hermiticity, unit trace and positivity (eigenvalues allowed
  /// down to -tol::positivity); throws std::domain_error otherwise.
  static DensityMatrix4 make(const ComplexMatrix& m);
  static DensityMatrix4 from_pure(const TwoQubitPureState& psi);

  const ComplexMatrix& matrix() const { return m_; }

 private:
  explicit DensityMatrix4(const ComplexMatrix& m) : m_(m) {}
  ComplexMatrix m_;
};

/// Wootters concurrence from the eigenvalues of
/// R = sqrt( sqrt(rho) (sy x sy) rho* (sy x sy) sqrt(rho) ).
double concurrence_mixed(const DensityMatrix4& rho);

/// Tr rho^2, in [1/4, 1] for two qubits.
double purity(const DensityMatrix4& rho);

struct BlochVector {
  std::array<double, 3> r{};

  double norm() const;
  double purity() const { double n = norm(); return 0.5 * (1.0 + n * n); }
};

/// r = (Tr sx rho, Tr sy rho, Tr sz rho) for a unit-trace Hermitian 2x2.
BlochVector bloch_vector(const ComplexMatrix& rho2);

/// Reduced 2x2 states of a two-qubit density matrix.
ComplexMatrix partial_trace_second(const ComplexMatrix& rho4);
ComplexMatrix partial_trace_first(const ComplexMatrix& rho4);

}  // namespace cartanqm
