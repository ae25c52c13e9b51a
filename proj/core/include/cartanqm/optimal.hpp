#pragma once

#include <array>

#include "cartanqm/states.hpp"

namespace cartanqm {

enum class OptimalFamily { FactorizedSep, Entangled, BellUniform, SubOptimalAtP };

/// Parameters for the analytic probe families. Fields are read per family:
///   FactorizedSep: index (1..4), phi
///   Entangled:     alpha, beta in [0, 1/sqrt(2)], sign_gamma, sign_delta, phi
///   BellUniform:   phases (phi_b, phi_c, phi_d)
///   SubOptimalAtP: p >= 3/4, position (1..4), phases
struct OptimalFamilySpec {
  OptimalFamily family = OptimalFamily::BellUniform;
  int index = 1;
  double phi = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  int sign_gamma = +1;
  int sign_delta = +1;
  std::array<double, 3> phases{};
  double p = 0.75;
  int position = 1;
};

/// Builds a member of the optimal families; every FactorizedSep, Entangled
/// and BellUniform member satisfies p = 3/4 and Det[Q] = 64.
TwoQubitPureState make_optimal(const OptimalFamilySpec& spec);

enum class RxPairing { ThetaAOuter, ThetaAInner };

/// Generates an optimal probe by rotating |0> along x in the two invariant
/// 2x2 blocks of the gate: theta_a drives one block pair, theta_b the other.
/// ThetaAOuter assigns theta_a to the (|00>,|11>) pair, ThetaAInner swaps the
/// roles.
TwoQubitPureState rx_generate(double theta_a, double theta_b,
                              RxPairing pairing = RxPairing::ThetaAOuter, double phi = 0.0);

/// Minimum sloppiness 1/s = Det[Q] achievable at precision p >= 3/4;
/// frontier(3/4) = 64. Throws std::domain_error for p < 3/4.
double frontier(double p);

/// Bell-basis state (kappa2 at `position`, kappa1 elsewhere) that attains the
/// frontier at precision p. Phases are applied to the three kappa1
/// components in order. Throws std::domain_error for p < 3/4.
TwoQubitPureState suboptimal_state(double p, int position,
                                   const std::array<double, 3>& phases = {0.0, 0.0, 0.0});

/// Det[Q] as a function of (b, c) at fixed precision p, with the third Bell
/// amplitude d eliminated through the precision constraint. Throws
/// std::domain_error naming the violated constraint when (b, c, p) is out of
/// domain (non-positive denominator or no admissible d^2).
double det_at_fixed_p(double b, double c, double p);

}  // namespace cartanqm
