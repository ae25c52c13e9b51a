#pragma once

#include <string>
#include <vector>

#include "cartanqm/metrology.hpp"

namespace cartanqm {

enum class NoiseFamily { BitFlip, Depolarizing };

/// Single applies the channel to the first tensor factor (sigma ⊗ I); Both
/// composes two independent single-qubit channels.
enum class NoiseScope { Single, Both };

struct NoiseChannel {
  NoiseFamily family = NoiseFamily::BitFlip;
  NoiseScope scope = NoiseScope::Single;
  double gamma = 0.0;

  /// Throws std::domain_error when gamma is outside [0, 1].
  static NoiseChannel make(NoiseFamily family, NoiseScope scope, double gamma);
};

/// Kraus operators with the mixture weights folded in (K_i = sqrt(w_i) P_i);
/// sum K^dag K = identity within tol::kraus_completeness.
std::vector<ComplexMatrix> kraus_operators(const NoiseChannel& ch);

/// max |sum K^dag K - I|, the completeness defect.
double kraus_completeness_defect(const NoiseChannel& ch);

DensityMatrix4 apply_channel(const NoiseChannel& ch, const DensityMatrix4& rho0);

/// The three reference probe classes: psi1 = |0> x (|0>+e^{i phi}|1>)/sqrt(2),
/// psi2 with the factors swapped, psi3 an entangled-family member with
/// alpha = 0.3, beta = 0.2.
enum class ProbeClass { Psi1, Psi2, Psi3 };

TwoQubitPureState probe_class_state(ProbeClass cls, double phi);

const char* probe_class_name(ProbeClass cls);
const char* noise_family_name(NoiseFamily family);
const char* noise_scope_name(NoiseScope scope);

/// Precision bound of a noisy preparation: channel first, then the gate, then
/// the general QFIM. Returns +infinity when the QFIM is singular.
double noisy_precision(const TwoQubitPureState& psi0, const NoiseChannel& ch,
                       const CartanParams& lambda);

/// Uniform evaluation grid: gamma on [0, 1] inclusive, phi on [0, 2 pi).
struct NoiseScanGrid {
  int n_gamma = 101;
  int n_phi = 64;
  ProbeClass probe = ProbeClass::Psi1;

  double gamma_at(int i) const;
  double phi_at(int j) const;
};

struct NoiseScanResult {
  NoiseScanGrid grid;
  NoiseFamily family = NoiseFamily::BitFlip;
  NoiseScope scope = NoiseScope::Single;
  CartanParams lambda;
  /// p[i][j] at (gamma_at(i), phi_at(j)); +inf marks divergent cells.
  std::vector<std::vector<double>> p;
};

/// Full (gamma, phi) precision map for one probe class and channel variant.
/// Mixed states are not covariant in lambda, so lambda rides along in the
/// result metadata; default (0,0,0).
NoiseScanResult noise_scan(const NoiseScanGrid& grid, NoiseFamily family, NoiseScope scope,
                           const CartanParams& lambda = CartanParams{}, int threads = 0);

}  // namespace cartanqm
