#pragma once

#include <array>
#include <vector>

#include "cartanqm/states.hpp"

namespace cartanqm {

/// The three angles of a two-qubit Cartan kernel
/// U = exp(-i (l1 sx⊗sx + l2 sy⊗sy + l3 sz⊗sz)).
struct CartanParams {
  double l1 = 0.0, l2 = 0.0, l3 = 0.0;

  double lambda_plus() const { return l1 + l2; }
  double lambda_minus() const { return l1 - l2; }

  /// Canonical class vector set: pi/2 > l1 >= l2 >= l3 >= 0 and l1+l2 <= pi/2.
  bool in_canonical_domain(double slack = tol::canonical_domain) const;
};

/// sx⊗sx, sy⊗sy, sz⊗sz in the canonical basis, indexed 0..2.
const std::array<ComplexMatrix, 3>& cartan_generators();

struct CartanGate {
  CartanParams params;
  ComplexMatrix matrix_canonical;    // 4x4 unitary
  std::array<cxd, 4> diag_bell{};    // unit-modulus phases, Bell order
};

CartanGate build_gate(const CartanParams& p);

/// One equivalence move on the class vector. Shift adds n*pi/2 to component i;
/// Reverse flips the signs of components i and j; Swap exchanges them.
struct CartanMove {
  enum class Kind { Shift, Reverse, Swap };
  Kind kind = Kind::Shift;
  int i = 0;
  int j = 0;  // unused for Shift
  int n = 0;  // unused for Reverse/Swap
};

CartanParams apply_move(const CartanParams& p, const CartanMove& m);
CartanParams replay_moves(const CartanParams& p, const std::vector<CartanMove>& moves);

struct CanonicalizeResult {
  CartanParams canonical;
  std::vector<CartanMove> ops;
};

/// Reduces an arbitrary class vector into the canonical domain using only
/// shift/reverse/swap moves, returning the move log. Throws std::runtime_error
/// if the fixpoint iteration cap is exceeded (an algorithm bug, not bad input).
CanonicalizeResult canonicalize(const CartanParams& p);

/// U(lambda) |psi0>, evaluated in the state's own basis (Bell states see the
/// diagonal form, canonical states the full matrix).
TwoQubitPureState apply_gate(const CartanParams& p, const TwoQubitPureState& psi0);

/// U rho U^dag.
DensityMatrix4 evolve_density(const CartanParams& p, const DensityMatrix4& rho);

}  // namespace cartanqm
