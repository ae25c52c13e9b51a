#include "cartanqm/noise.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cartanqm/parallel.hpp"

namespace cartanqm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kTwoPi = 6.28318530717958647692;

ComplexMatrix eye2() { return ComplexMatrix::identity(2); }

void append_scaled(std::vector<ComplexMatrix>& out, double weight, const ComplexMatrix& op) {
  if (weight == 0.0) return;
  out.push_back(op * std::sqrt(weight));
}

}  // namespace

NoiseChannel NoiseChannel::make(NoiseFamily family, NoiseScope scope, double gamma) {
  if (gamma < 0.0 || gamma > 1.0) {
    std::ostringstream msg;
    msg << "noise parameter gamma must lie in [0, 1]; got " << gamma;
    throw std::domain_error(msg.str());
  }
  return NoiseChannel{family, scope, gamma};
}

std::vector<ComplexMatrix> kraus_operators(const NoiseChannel& ch) {
  double g = ch.gamma;
  std::vector<ComplexMatrix> out;

  if (ch.family == NoiseFamily::BitFlip) {
    ComplexMatrix x1 = kron(pauli_x(), eye2());
    ComplexMatrix x2 = kron(eye2(), pauli_x());
    if (ch.scope == NoiseScope::Single) {
      append_scaled(out, 1.0 - g, ComplexMatrix::identity(4));
      append_scaled(out, g, x1);
    } else {
      // Two independent flips: (1 - 2g(1-g) - g^2) = (1-g)^2 on the identity.
      append_scaled(out, 1.0 - 2.0 * g * (1.0 - g) - g * g, ComplexMatrix::identity(4));
      append_scaled(out, g * (1.0 - g), x1);
      append_scaled(out, g * (1.0 - g), x2);
      append_scaled(out, g * g, kron(pauli_x(), pauli_x()));
    }
    return out;
  }

  std::array<ComplexMatrix, 3> paulis = {pauli_x(), pauli_y(), pauli_z()};
  if (ch.scope == NoiseScope::Single) {
    append_scaled(out, 1.0 - g, ComplexMatrix::identity(4));
    for (const ComplexMatrix& s : paulis) append_scaled(out, g / 3.0, kron(s, eye2()));
  } else {
    append_scaled(out, (1.0 - g) * (1.0 - g), ComplexMatrix::identity(4));
    for (const ComplexMatrix& s : paulis)
      append_scaled(out, (1.0 - g) * g / 3.0, kron(s, eye2()));
    for (const ComplexMatrix& s : paulis)
      append_scaled(out, (1.0 - g) * g / 3.0, kron(eye2(), s));
    for (const ComplexMatrix& sk : paulis)
      for (const ComplexMatrix& sl : paulis)
        append_scaled(out, g * g / 9.0, kron(sk, sl));
  }
  return out;
}

double kraus_completeness_defect(const NoiseChannel& ch) {
  ComplexMatrix sum(4);
  for (const ComplexMatrix& k : kraus_operators(ch)) sum += k.adjoint() * k;
  return sum.max_abs_diff(ComplexMatrix::identity(4));
}

DensityMatrix4 apply_channel(const NoiseChannel& ch, const DensityMatrix4& rho0) {
  ComplexMatrix acc(4);
  for (const ComplexMatrix& k : kraus_operators(ch)) acc += k * rho0.matrix() * k.adjoint();
  return DensityMatrix4::make(acc);
}

TwoQubitPureState probe_class_state(ProbeClass cls, double phi) {
  cxd e = std::exp(cxd{0.0, phi});
  switch (cls) {
    case ProbeClass::Psi1:
      return TwoQubitPureState::make({kInvSqrt2, kInvSqrt2 * e, 0.0, 0.0}, Basis::Canonical);
    case ProbeClass::Psi2:
      return TwoQubitPureState::make({kInvSqrt2, 0.0, kInvSqrt2 * e, 0.0}, Basis::Canonical);
    case ProbeClass::Psi3: {
      cxd i{0.0, 1.0};
      double g = std::sqrt(0.5 - 0.2 * 0.2);
      double d = std::sqrt(0.5 - 0.3 * 0.3);
      return TwoQubitPureState::make({0.3, 0.2 * e, i * g * e, i * d}, Basis::Canonical);
    }
  }
  throw std::domain_error("unknown probe class");
}

const char* probe_class_name(ProbeClass cls) {
  switch (cls) {
    case ProbeClass::Psi1: return "psi1";
    case ProbeClass::Psi2: return "psi2";
    case ProbeClass::Psi3: return "psi3";
  }
  return "?";
}

const char* noise_family_name(NoiseFamily family) {
  return family == NoiseFamily::BitFlip ? "bitflip" : "depolarizing";
}

const char* noise_scope_name(NoiseScope scope) {
  return scope == NoiseScope::Single ? "single" : "both";
}

double noisy_precision(const TwoQubitPureState& psi0, const NoiseChannel& ch,
                       const CartanParams& lambda) {
  DensityMatrix4 rho0 = DensityMatrix4::from_pure(psi0);
  DensityMatrix4 noisy = apply_channel(ch, rho0);
  DensityMatrix4 rho_lambda = evolve_density(lambda, noisy);
  Qfim q = qfim_mixed(rho_lambda, density_derivatives(rho_lambda));
  return q.p;
}

double NoiseScanGrid::gamma_at(int i) const {
  return static_cast<double>(i) / static_cast<double>(n_gamma - 1);
}

double NoiseScanGrid::phi_at(int j) const {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(n_phi);
}

NoiseScanResult noise_scan(const NoiseScanGrid& grid, NoiseFamily family, NoiseScope scope,
                           const CartanParams& lambda, int threads) {
  if (grid.n_gamma < 2 || grid.n_phi < 2)
    throw std::domain_error("noise_scan grid needs at least 2 points per axis");

  NoiseScanResult res;
  res.grid = grid;
  res.family = family;
  res.scope = scope;
  res.lambda = lambda;
  res.p.assign(static_cast<std::size_t>(grid.n_gamma),
               std::vector<double>(static_cast<std::size_t>(grid.n_phi), 0.0));

  std::size_t cells = static_cast<std::size_t>(grid.n_gamma) * static_cast<std::size_t>(grid.n_phi);
  parallel_for(cells, resolve_threads(threads), [&](std::size_t idx) {
    int i = static_cast<int>(idx) / grid.n_phi;
    int j = static_cast<int>(idx) % grid.n_phi;
    NoiseChannel ch = NoiseChannel::make(family, scope, grid.gamma_at(i));
    TwoQubitPureState psi = probe_class_state(grid.probe, grid.phi_at(j));
    res.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        noisy_precision(psi, ch, lambda);
  });
  return res;
}

}  // namespace cartanqm
