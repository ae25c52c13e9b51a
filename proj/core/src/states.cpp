#include "cartanqm/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cartanqm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Bell basis vectors as columns, canonical coordinates. Orthogonal, so the
// inverse transform is the transpose.
const std::array<std::array<double, 4>, 4>& bell_columns() {
  static const std::array<std::array<double, 4>, 4> t = {{
      // |00>,|01>,|10>,|11> components of each Bell vector
      {kInvSqrt2, 0.0, 0.0, kInvSqrt2},    // (|00>+|11>)/sqrt(2)
      {kInvSqrt2, 0.0, 0.0, -kInvSqrt2},   // (|00>-|11>)/sqrt(2)
      {0.0, kInvSqrt2, kInvSqrt2, 0.0},    // (|01>+|10>)/sqrt(2)
      {0.0, kInvSqrt2, -kInvSqrt2, 0.0},   // (|01>-|10>)/sqrt(2)
  }};
  return t;
}

std::array<cxd, 4> bell_to_canonical(const std::array<cxd, 4>& b) {
  const auto& t = bell_columns();
  std::array<cxd, 4> c{};
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col)
      c[static_cast<std::size_t>(row)] +=
          t[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)] *
          b[static_cast<std::size_t>(col)];
  return c;
}

std::array<cxd, 4> canonical_to_bell(const std::array<cxd, 4>& c) {
  const auto& t = bell_columns();
  std::array<cxd, 4> b{};
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row)
      b[static_cast<std::size_t>(col)] +=
          t[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)] *
          c[static_cast<std::size_t>(row)];
  return b;
}

}  // namespace

double TwoQubitPureState::norm() const {
  double s = 0.0;
  for (const cxd& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

TwoQubitPureState TwoQubitPureState::make(const std::array<cxd, 4>& amplitudes, Basis basis) {
  TwoQubitPureState psi;
  psi.amp = amplitudes;
  psi.basis = basis;
  double defect = std::abs(psi.norm() - 1.0);
  if (defect > tol::unit_norm) {
    std::ostringstream msg;
    msg << "state is not normalized: |norm - 1| = " << defect;
    throw std::domain_error(msg.str());
  }
  return psi;
}

TwoQubitPureState TwoQubitPureState::make_normalized(const std::array<cxd, 4>& amplitudes,
                                                     Basis basis) {
  TwoQubitPureState psi;
  psi.amp = amplitudes;
  psi.basis = basis;
  double n = psi.norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero state");
  for (cxd& a : psi.amp) a /= n;
  return psi;
}

TwoQubitPureState from_canonical_params(const CanonicalParams& p) {
  double sum = p.alpha * p.alpha + p.beta * p.beta + p.gamma * p.gamma + p.delta * p.delta;
  if (std::abs(sum - 1.0) > tol::param_norm) {
    std::ostringstream msg;
    msg << "canonical parameters are not normalized: alpha^2+beta^2+gamma^2+delta^2 - 1 = "
        << sum - 1.0;
    throw std::domain_error(msg.str());
  }
  std::array<cxd, 4> a = {
      cxd{p.alpha, 0.0},
      p.beta * std::exp(cxd{0.0, p.phi_beta}),
      p.gamma * std::exp(cxd{0.0, p.phi_gamma}),
      p.delta * std::exp(cxd{0.0, p.phi_delta}),
  };
  TwoQubitPureState psi;
  psi.amp = a;
  psi.basis = Basis::Canonical;
  return psi;
}

CanonicalParams canonical_params_of(const TwoQubitPureState& psi) {
  TwoQubitPureState c = change_basis(psi, Basis::Canonical);
  double ref = 0.0;
  for (const cxd& a : c.amp) {
    if (std::abs(a) > 1e-15) {
      ref = std::arg(a);
      break;
    }
  }
  auto rel = [&](int i) {
    double m = std::abs(c.amp[static_cast<std::size_t>(i)]);
    return m > 0.0 ? std::arg(c.amp[static_cast<std::size_t>(i)]) - ref : 0.0;
  };
  CanonicalParams p;
  p.alpha = std::abs(c.amp[0]);
  p.beta = std::abs(c.amp[1]);
  p.gamma = std::abs(c.amp[2]);
  p.delta = std::abs(c.amp[3]);
  p.phi_beta = rel(1);
  p.phi_gamma = rel(2);
  p.phi_delta = rel(3);
  return p;
}

TwoQubitPureState change_basis(const TwoQubitPureState& psi, Basis target) {
  if (psi.basis == target) return psi;
  TwoQubitPureState out;
  out.basis = target;
  out.amp = (target == Basis::Canonical) ? bell_to_canonical(psi.amp)
                                         : canonical_to_bell(psi.amp);
  return out;
}

double fidelity(const TwoQubitPureState& a, const TwoQubitPureState& b) {
  TwoQubitPureState bb = change_basis(b, a.basis);
  cxd s{0.0, 0.0};
  for (int i = 0; i < 4; ++i)
    s += std::conj(a.amp[static_cast<std::size_t>(i)]) * bb.amp[static_cast<std::size_t>(i)];
  return std::abs(s);
}

cxd expectation(const TwoQubitPureState& psi, const ComplexMatrix& m) {
  TwoQubitPureState c = change_basis(psi, Basis::Canonical);
  CVec v = c.vec();
  return inner(v, matvec(m, v));
}

double concurrence_pure(const TwoQubitPureState& psi) {
  TwoQubitPureState c = change_basis(psi, Basis::Canonical);
  return 2.0 * std::abs(c.amp[0] * c.amp[3] - c.amp[1] * c.amp[2]);
}

DensityMatrix4 DensityMatrix4::make(const ComplexMatrix& m) {
  if (m.dim() != 4) throw std::domain_error("DensityMatrix4 requires a 4x4 matrix");
  m.require_hermitian(tol::hermiticity);
  double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol::trace_one) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    throw std::domain_error(msg.str());
  }
  EigenSystem es = hermitian_eig(m);
  if (es.values.front() < -tol::positivity) {
    std::ostringstream msg;
    msg << "density matrix is not positive: min eigenvalue = " << es.values.front();
    throw std::domain_error(msg.str());
  }
  return DensityMatrix4(m);
}

DensityMatrix4 DensityMatrix4::from_pure(const TwoQubitPureState& psi) {
  TwoQubitPureState c = change_basis(psi, Basis::Canonical);
  CVec v = c.vec();
  return DensityMatrix4(outer(v, v));
}

namespace {

ComplexMatrix sigma_yy() {
  return kron(pauli_y(), pauli_y());
}

// Hermitian square root via the spectral decomposition; eigenvalues in
// [-tol::sqrt_clamp, 0) clamp to zero.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  EigenSystem es = hermitian_eig(m);
  ComplexMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    double y = es.values[static_cast<std::size_t>(i)];
    if (y < 0.0) {
      if (y < -tol::sqrt_clamp) throw std::domain_error("hermitian_sqrt: negative eigenvalue");
      y = 0.0;
    }
    CVec v = es.vector(i);
    out += outer(v, v) * std::sqrt(y);
  }
  return out;
}

}  // namespace

double concurrence_mixed(const DensityMatrix4& rho) {
  const ComplexMatrix& r = rho.matrix();
  ComplexMatrix yy = sigma_yy();
  ComplexMatrix sq = hermitian_sqrt(r);
  ComplexMatrix m = sq * yy * r.conjugate() * yy * sq;

  // m is Hermitian PSD up to roundoff; symmetrize before the eigensolve.
  ComplexMatrix h(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  EigenSystem es = hermitian_eig(h);
  // Roundoff leaves ~1e-16 residue on the null eigenvalues of m; taking the
  // square root would inflate it to ~1e-8, so clamp below the noise floor.
  double clamp = 1e-13 * std::max(1.0, es.values.back());
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) {
    double y = es.values[static_cast<std::size_t>(i)];
    lam[static_cast<std::size_t>(i)] = y <= clamp ? 0.0 : std::sqrt(y);
  }
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double purity(const DensityMatrix4& rho) {
  const ComplexMatrix& m = rho.matrix();
  return (m * m).trace().real();
}

double BlochVector::norm() const {
  return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
}

BlochVector bloch_vector(const ComplexMatrix& rho2) {
  if (rho2.dim() != 2) throw std::domain_error("bloch_vector requires a 2x2 matrix");
  rho2.require_hermitian(tol::hermiticity);
  if (std::abs(rho2.trace().real() - 1.0) > tol::trace_one)
    throw std::domain_error("bloch_vector requires a unit-trace matrix");
  BlochVector b;
  b.r[0] = (pauli_x() * rho2).trace().real();
  b.r[1] = (pauli_y() * rho2).trace().real();
  b.r[2] = (pauli_z() * rho2).trace().real();
  return b;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& rho4) {
  ComplexMatrix out(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += rho4(2 * i + k, 2 * j + k);
  return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& rho4) {
  ComplexMatrix out(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += rho4(2 * k + i, 2 * k + j);
  return out;
}

}  // namespace cartanqm
