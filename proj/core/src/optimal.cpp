#include "cartanqm/optimal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cartanqm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

cxd phase(double theta) { return std::exp(cxd{0.0, theta}); }

TwoQubitPureState factorized_sep(int index, double phi) {
  cxd h{kInvSqrt2, 0.0};
  cxd hp = kInvSqrt2 * phase(phi);
  std::array<cxd, 4> a{};
  switch (index) {
    case 1: a = {h, hp, 0.0, 0.0}; break;
    case 2: a = {h, 0.0, hp, 0.0}; break;
    case 3: a = {0.0, hp, 0.0, h}; break;
    case 4: a = {0.0, 0.0, hp, h}; break;
    default: throw std::domain_error("FactorizedSep index must be 1..4");
  }
  return TwoQubitPureState::make(a, Basis::Canonical);
}

TwoQubitPureState entangled(double alpha, double beta, int sign_gamma, int sign_delta,
                            double phi) {
  if (alpha < 0.0 || alpha > kInvSqrt2 + 1e-15 || beta < 0.0 || beta > kInvSqrt2 + 1e-15) {
    std::ostringstream msg;
    msg << "Entangled family requires alpha, beta in [0, 1/sqrt(2)]; got alpha = " << alpha
        << ", beta = " << beta;
    throw std::domain_error(msg.str());
  }
  double ga = std::sqrt(std::max(0.0, 0.5 - beta * beta));
  double de = std::sqrt(std::max(0.0, 0.5 - alpha * alpha));
  cxd i{0.0, 1.0};
  std::array<cxd, 4> a = {
      cxd{alpha, 0.0},
      beta * phase(phi),
      static_cast<double>(sign_gamma) * i * ga * phase(phi),
      static_cast<double>(sign_delta) * i * de,
  };
  return TwoQubitPureState::make(a, Basis::Canonical);
}

TwoQubitPureState bell_uniform(const std::array<double, 3>& phases) {
  std::array<cxd, 4> a = {
      cxd{0.5, 0.0},
      0.5 * phase(phases[0]),
      0.5 * phase(phases[1]),
      0.5 * phase(phases[2]),
  };
  return TwoQubitPureState::make(a, Basis::Bell);
}

// sqrt((p - 3/4)(p - 3/16)), the radical shared by the frontier and the
// kappa amplitudes.
double frontier_radical(double p) {
  return std::sqrt((p - 0.75) * (p - 3.0 / 16.0));
}

void require_p(double p) {
  if (p < 0.75) {
    std::ostringstream msg;
    msg << "precision bound p must be >= 3/4; got " << p;
    throw std::domain_error(msg.str());
  }
}

}  // namespace

TwoQubitPureState make_optimal(const OptimalFamilySpec& spec) {
  switch (spec.family) {
    case OptimalFamily::FactorizedSep:
      return factorized_sep(spec.index, spec.phi);
    case OptimalFamily::Entangled:
      return entangled(spec.alpha, spec.beta, spec.sign_gamma, spec.sign_delta, spec.phi);
    case OptimalFamily::BellUniform:
      return bell_uniform(spec.phases);
    case OptimalFamily::SubOptimalAtP:
      return suboptimal_state(spec.p, spec.position, spec.phases);
  }
  throw std::domain_error("unknown optimal family");
}

TwoQubitPureState rx_generate(double theta_a, double theta_b, RxPairing pairing, double phi) {
  // R_x(theta)|0> = (cos theta, +/- i sin theta); scaled by 1/sqrt(2) the two
  // block pairs combine into an Entangled-family member.
  double ca = std::cos(theta_a) * kInvSqrt2, sa = std::sin(theta_a) * kInvSqrt2;
  double cb = std::cos(theta_b) * kInvSqrt2, sb = std::sin(theta_b) * kInvSqrt2;
  if (pairing == RxPairing::ThetaAInner) {
    std::swap(ca, cb);
    std::swap(sa, sb);
  }
  cxd i{0.0, 1.0};
  std::array<cxd, 4> a = {
      cxd{ca, 0.0},
      cb * phase(phi),
      i * sb * phase(phi),
      i * sa,
  };
  return TwoQubitPureState::make(a, Basis::Canonical);
}

double frontier(double p) {
  require_p(p);
  double r = frontier_radical(p);
  // 8p - 3 - 8r rewritten as 12p / (8p - 3 + 8r); avoids the subtractive
  // cancellation that grows with p.
  double plus = 8.0 * p + 3.0 + 8.0 * r;
  double minus = 12.0 * p / (8.0 * p - 3.0 + 8.0 * r);
  double p2 = p * p;
  return minus * plus * plus * plus / (108.0 * p2 * p2);
}

TwoQubitPureState suboptimal_state(double p, int position, const std::array<double, 3>& phases) {
  require_p(p);
  if (position < 1 || position > 4)
    throw std::domain_error("suboptimal_state position must be 1..4");

  double r = frontier_radical(p);
  double kappa1 = 0.25 * std::sqrt((8.0 * r + 8.0 * p + 3.0) / (3.0 * p));
  // kappa2 = (1/4) sqrt((8p - 3 - 8r)/p), in the cancellation-free form.
  double kappa2 = 0.25 * std::sqrt(12.0 / (8.0 * p - 3.0 + 8.0 * r));

  std::array<cxd, 4> a{};
  int ph = 0;
  for (int i = 0; i < 4; ++i) {
    if (i + 1 == position) {
      a[static_cast<std::size_t>(i)] = cxd{kappa2, 0.0};
    } else {
      a[static_cast<std::size_t>(i)] = kappa1 * phase(phases[static_cast<std::size_t>(ph++)]);
    }
  }
  return TwoQubitPureState::make_normalized(a, Basis::Bell);
}

double det_at_fixed_p(double b, double c, double p) {
  require_p(p);
  double b2 = b * b, c2 = c * c;
  if (b2 <= 0.0 || c2 <= 0.0)
    throw std::domain_error("det_at_fixed_p: b and c must be nonzero");
  double rest = 1.0 - b2 - c2;
  if (rest <= 0.0)
    throw std::domain_error("det_at_fixed_p: b^2 + c^2 must be < 1");

  double denom = b2 * (64.0 * c2 * p - 3.0) - 3.0 * c2;
  if (denom <= 0.0)
    throw std::domain_error("det_at_fixed_p: denominator b^2(64 c^2 p - 3) - 3 c^2 must be > 0");

  // The precision constraint fixes d^2 (1 - b^2 - c^2 - d^2) = rest / T with
  // T = denom / (3 b^2 c^2); a real d^2 in (0, rest) needs rest * T >= 4.
  double t = denom / (3.0 * b2 * c2);
  if (rest * t < 4.0)
    throw std::domain_error("det_at_fixed_p: no admissible d^2 in (0, 1 - b^2 - c^2)");

  return 49152.0 * b2 * b2 * c2 * c2 * rest / denom;
}

}  // namespace cartanqm
