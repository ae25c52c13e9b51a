#pragma once

// Shared test utilities: deterministic random draws and the independent
// oracles (cofactor determinants, spectral matrix exponential, finite
// differences) that the implementation is checked against. Everything here
// stays off the production code paths on purpose.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "cartanqm/cartan.hpp"
#include "cartanqm/linalg.hpp"
#include "cartanqm/states.hpp"

namespace testutil {

using cartanqm::CartanParams;
using cartanqm::ComplexMatrix;
using cartanqm::CVec;
using cartanqm::cxd;
using cartanqm::TwoQubitPureState;

constexpr double kPi = 3.14159265358979323846;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline TwoQubitPureState random_state(std::mt19937_64& g) {
  std::normal_distribution<double> n;
  std::array<cxd, 4> a{};
  for (cxd& x : a) x = cxd{n(g), n(g)};
  return TwoQubitPureState::make_normalized(a, cartanqm::Basis::Canonical);
}

inline CartanParams random_lambda(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-kPi, kPi);
  return CartanParams{u(g), u(g), u(g)};
}

inline ComplexMatrix random_hermitian(std::mt19937_64& g, int dim) {
  std::normal_distribution<double> n;
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    m(r, r) = cxd{n(g), 0.0};
    for (int c = r + 1; c < dim; ++c) {
      cxd v{n(g), n(g)};
      m(r, c) = v;
      m(c, r) = std::conj(v);
    }
  }
  return m;
}

inline cartanqm::DensityMatrix4 random_density(std::mt19937_64& g, int rank = 4) {
  // Mixture of `rank` random pure projectors with random weights.
  std::uniform_real_distribution<double> u(0.1, 1.0);
  std::array<double, 4> w{};
  double total = 0.0;
  for (int i = 0; i < rank; ++i) total += (w[static_cast<std::size_t>(i)] = u(g));
  ComplexMatrix acc(4);
  for (int i = 0; i < rank; ++i) {
    CVec v = random_state(g).vec();
    acc += cartanqm::outer(v, v) * (w[static_cast<std::size_t>(i)] / total);
  }
  return cartanqm::DensityMatrix4::make(acc);
}

// Determinant by cofactor expansion; independent of any solver.
inline cxd cofactor_det(const ComplexMatrix& m) {
  int n = m.dim();
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  cxd det{0.0, 0.0};
  double sign = 1.0;
  for (int col = 0; col < n; ++col) {
    ComplexMatrix minor(n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == col) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    det += sign * m(0, col) * cofactor_det(minor);
    sign = -sign;
  }
  return det;
}

// exp(-i H) for Hermitian H through its spectral decomposition.
inline ComplexMatrix exp_minus_i(const ComplexMatrix& h) {
  cartanqm::EigenSystem es = cartanqm::hermitian_eig(h);
  ComplexMatrix out(h.dim());
  for (int i = 0; i < h.dim(); ++i) {
    CVec v = es.vector(i);
    out += cartanqm::outer(v, v) * std::exp(cxd{0.0, -es.values[static_cast<std::size_t>(i)]});
  }
  return out;
}

inline double max_abs3(const cartanqm::Mat3& m) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

}  // namespace testutil
