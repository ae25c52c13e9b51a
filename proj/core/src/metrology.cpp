#include "cartanqm/metrology.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cartanqm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Mat3 symmetric_from_upper(double q11, double q22, double q33, double q12, double q13, double q23) {
  Mat3 m;
  m(0, 0) = q11;
  m(1, 1) = q22;
  m(2, 2) = q33;
  m(0, 1) = m(1, 0) = q12;
  m(0, 2) = m(2, 0) = q13;
  m(1, 2) = m(2, 1) = q23;
  return m;
}

}  // namespace

Qfim Qfim::from_matrix(const Mat3& q) {
  Qfim out;
  out.q = q;
  Sym3Inverse inv = sym3_inverse_det(q);
  out.det = inv.det;
  out.singular = inv.singular;
  if (inv.singular) {
    out.p = kInf;
    out.s = kInf;
  } else {
    out.p = inv.inverse(0, 0) + inv.inverse(1, 1) + inv.inverse(2, 2);
    out.s = 1.0 / inv.det;
  }
  return out;
}

EvolvedPure evolve_with_derivatives(const TwoQubitPureState& psi0, const CartanParams& lambda) {
  TwoQubitPureState canon = change_basis(psi0, Basis::Canonical);
  TwoQubitPureState evolved = apply_gate(lambda, canon);

  EvolvedPure out;
  out.psi = evolved.vec();
  const auto& gen = cartan_generators();
  for (int j = 0; j < 3; ++j) {
    CVec g = matvec(gen[static_cast<std::size_t>(j)], out.psi);
    out.dpsi[static_cast<std::size_t>(j)] = g * cxd{0.0, -1.0};
  }
  return out;
}

Qfim qfim_pure(const TwoQubitPureState& psi0, const CartanParams& lambda) {
  EvolvedPure ev = evolve_with_derivatives(psi0, lambda);
  Mat3 q;
  for (int j = 0; j < 3; ++j) {
    for (int k = j; k < 3; ++k) {
      cxd overlap = inner(ev.dpsi[static_cast<std::size_t>(j)], ev.dpsi[static_cast<std::size_t>(k)]);
      cxd dj_psi = inner(ev.dpsi[static_cast<std::size_t>(j)], ev.psi);
      cxd psi_dk = inner(ev.psi, ev.dpsi[static_cast<std::size_t>(k)]);
      double val = 4.0 * (overlap - dj_psi * psi_dk).real();
      q(j, k) = val;
      q(k, j) = val;
    }
  }
  return Qfim::from_matrix(q);
}

Qfim qfim_closed_canonical(const CanonicalParams& p) {
  double a = p.alpha, b = p.beta, g = p.gamma, d = p.delta;
  double cd = std::cos(p.phi_delta);
  double cbg = std::cos(p.phi_beta - p.phi_gamma);
  double ad = a * d, bg = b * g;
  double sum_ad = a * a + d * d, sum_bg = b * b + g * g;

  double q11 = 4.0 * (1.0 - 2.0 * ad * cd - 2.0 * bg * cbg) * (1.0 + 2.0 * ad * cd + 2.0 * bg * cbg);
  double q22 = 4.0 * (1.0 - 2.0 * ad * cd + 2.0 * bg * cbg) * (1.0 + 2.0 * ad * cd - 2.0 * bg * cbg);
  double q33 = 16.0 * sum_ad * sum_bg;
  double q12 = 4.0 * (-a * a + b * b + g * g - d * d + 4.0 * ad * ad * cd * cd -
                      4.0 * bg * bg * cbg * cbg);
  double q13 = 16.0 * (ad * sum_bg * cd - bg * sum_ad * cbg);
  double q23 = -16.0 * (ad * sum_bg * cd + bg * sum_ad * cbg);

  return Qfim::from_matrix(symmetric_from_upper(q11, q22, q33, q12, q13, q23));
}

Qfim qfim_closed_bell(double b, double c, double d) {
  double b2 = b * b, c2 = c * c, d2 = d * d;
  if (b2 + c2 + d2 > 1.0 + tol::param_norm)
    throw std::domain_error("qfim_closed_bell: b^2 + c^2 + d^2 exceeds 1");

  double q11 = 16.0 * (1.0 - b2 - d2) * (b2 + d2);
  double q22 = 16.0 * (1.0 - b2 - c2) * (b2 + c2);
  double q33 = 16.0 * (1.0 - c2 - d2) * (c2 + d2);
  double q12 = 16.0 * (b2 * b2 + b2 * (c2 + d2 - 1.0) + c2 * d2);
  double q13 = 16.0 * (d2 - (b2 + d2) * (c2 + d2));
  double q23 = 16.0 * (c2 * (b2 + d2 - 1.0) + b2 * d2 + c2 * c2);

  return Qfim::from_matrix(symmetric_from_upper(q11, q22, q33, q12, q13, q23));
}

namespace {

// One factor of the canonical closed forms: x^4 + y^4 - 2 x^2 y^2 cos(2 phi).
double pair_factor(double x, double y, double two_phi) {
  double x2 = x * x, y2 = y * y;
  return x2 * x2 + y2 * y2 - 2.0 * x2 * y2 * std::cos(two_phi);
}

}  // namespace

double closed_precision_canonical(const CanonicalParams& p) {
  double fad = pair_factor(p.alpha, p.delta, 2.0 * p.phi_delta);
  double fbg = pair_factor(p.beta, p.gamma, 2.0 * (p.phi_beta - p.phi_gamma));
  double sum_ad = p.alpha * p.alpha + p.delta * p.delta;
  double sum_bg = p.beta * p.beta + p.gamma * p.gamma;
  if (fad <= 0.0 || fbg <= 0.0) return kInf;
  return (3.0 / 16.0) * (sum_ad / fad + sum_bg / fbg);
}

double closed_inv_sloppiness_canonical(const CanonicalParams& p) {
  double fad = pair_factor(p.alpha, p.delta, 2.0 * p.phi_delta);
  double fbg = pair_factor(p.beta, p.gamma, 2.0 * (p.phi_beta - p.phi_gamma));
  return 1024.0 * fad * fbg;
}

double closed_precision_bell(double b, double c, double d) {
  double b2 = b * b, c2 = c * c, d2 = d * d;
  double a2 = 1.0 - b2 - c2 - d2;
  if (b2 <= 0.0 || c2 <= 0.0 || d2 <= 0.0 || a2 <= 0.0) return kInf;
  return (3.0 / 64.0) * (1.0 / b2 + 1.0 / c2 + 1.0 / d2 + 1.0 / a2);
}

std::array<ComplexMatrix, 3> density_derivatives(const DensityMatrix4& rho_lambda) {
  const auto& gen = cartan_generators();
  std::array<ComplexMatrix, 3> out;
  for (int j = 0; j < 3; ++j) {
    ComplexMatrix c = commutator(gen[static_cast<std::size_t>(j)], rho_lambda.matrix());
    out[static_cast<std::size_t>(j)] = c * cxd{0.0, -1.0};
  }
  return out;
}

Qfim qfim_mixed(const DensityMatrix4& rho_lambda, const std::array<ComplexMatrix, 3>& drho,
                double support_eps) {
  for (const ComplexMatrix& d : drho) d.require_hermitian(tol::hermiticity);

  EigenSystem es = hermitian_eig(rho_lambda.matrix());

  // <y_l| d_j rho |y_m> for all pairs, per parameter.
  std::array<ComplexMatrix, 3> t;
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix& d = drho[static_cast<std::size_t>(j)];
    ComplexMatrix m(4);
    for (int l = 0; l < 4; ++l) {
      CVec vl = es.vector(l);
      CVec dv = matvec(d, vl);
      for (int k = 0; k < 4; ++k) {
        // fill column l with <y_k| d |y_l>
        m(k, l) = inner(es.vector(k), dv);
      }
    }
    t[static_cast<std::size_t>(j)] = m;
  }

  Mat3 q;
  for (int j = 0; j < 3; ++j) {
    for (int k = j; k < 3; ++k) {
      double sum = 0.0;
      for (int l = 0; l < 4; ++l) {
        for (int m = 0; m < 4; ++m) {
          double denom = es.values[static_cast<std::size_t>(l)] +
                         es.values[static_cast<std::size_t>(m)];
          if (denom <= support_eps) continue;
          cxd prod = t[static_cast<std::size_t>(j)](l, m) * t[static_cast<std::size_t>(k)](m, l);
          sum += 2.0 * prod.real() / denom;
        }
      }
      q(j, k) = sum;
      q(k, j) = sum;
    }
  }
  return Qfim::from_matrix(q);
}

UhlmannMatrix uhlmann_pure(const TwoQubitPureState& psi0, const CartanParams& lambda) {
  EvolvedPure ev = evolve_with_derivatives(psi0, lambda);
  UhlmannMatrix out;
  for (int j = 0; j < 3; ++j) out.d(j, j) = 0.0;
  for (int j = 0; j < 3; ++j) {
    for (int k = j + 1; k < 3; ++k) {
      cxd overlap = inner(ev.dpsi[static_cast<std::size_t>(j)], ev.dpsi[static_cast<std::size_t>(k)]);
      cxd dj_psi = inner(ev.dpsi[static_cast<std::size_t>(j)], ev.psi);
      cxd psi_dk = inner(ev.psi, ev.dpsi[static_cast<std::size_t>(k)]);
      double val = 4.0 * (overlap - dj_psi * psi_dk).imag();
      out.d(j, k) = val;
      out.d(k, j) = -val;
    }
  }
  const Mat3& d = out.d;
  out.det = d(0, 0) * (d(1, 1) * d(2, 2) - d(1, 2) * d(2, 1)) -
            d(0, 1) * (d(1, 0) * d(2, 2) - d(1, 2) * d(2, 0)) +
            d(0, 2) * (d(1, 0) * d(2, 1) - d(1, 1) * d(2, 0));
  return out;
}

ComplexMatrix sld_pure(const CVec& psi_lambda, const CVec& dpsi) {
  ComplexMatrix l = outer(dpsi, psi_lambda) + outer(psi_lambda, dpsi);
  return l * 2.0;
}

}  // namespace cartanqm
