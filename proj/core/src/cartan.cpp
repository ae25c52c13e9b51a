#include "cartanqm/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cartanqm {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;

cxd phase(double theta) { return std::exp(cxd{0.0, theta}); }

}  // namespace

bool CartanParams::in_canonical_domain(double slack) const {
  return l1 < kHalfPi + slack && l1 >= l2 - slack && l2 >= l3 - slack && l3 >= -slack &&
         l1 + l2 <= kHalfPi + slack;
}

const std::array<ComplexMatrix, 3>& cartan_generators() {
  static const std::array<ComplexMatrix, 3> g = {
      kron(pauli_x(), pauli_x()),
      kron(pauli_y(), pauli_y()),
      kron(pauli_z(), pauli_z()),
  };
  return g;
}

CartanGate build_gate(const CartanParams& p) {
  CartanGate g;
  g.params = p;

  double lm = p.lambda_minus();
  double lp = p.lambda_plus();
  cxd em = phase(-p.l3);
  cxd ep = phase(p.l3);
  cxd mi{0.0, -1.0};

  ComplexMatrix u(4);
  u(0, 0) = em * std::cos(lm);
  u(0, 3) = mi * em * std::sin(lm);
  u(1, 1) = ep * std::cos(lp);
  u(1, 2) = mi * ep * std::sin(lp);
  u(2, 1) = mi * ep * std::sin(lp);
  u(2, 2) = ep * std::cos(lp);
  u(3, 0) = mi * em * std::sin(lm);
  u(3, 3) = em * std::cos(lm);
  g.matrix_canonical = u;

  g.diag_bell = {
      phase(-(p.l1 - p.l2 + p.l3)),
      phase(p.l1 - p.l2 - p.l3),
      phase(-(p.l1 + p.l2 - p.l3)),
      phase(p.l1 + p.l2 + p.l3),
  };
  return g;
}

CartanParams apply_move(const CartanParams& p, const CartanMove& m) {
  std::array<double, 3> v = {p.l1, p.l2, p.l3};
  switch (m.kind) {
    case CartanMove::Kind::Shift:
      v[static_cast<std::size_t>(m.i)] += m.n * kHalfPi;
      break;
    case CartanMove::Kind::Reverse:
      v[static_cast<std::size_t>(m.i)] = -v[static_cast<std::size_t>(m.i)];
      v[static_cast<std::size_t>(m.j)] = -v[static_cast<std::size_t>(m.j)];
      break;
    case CartanMove::Kind::Swap:
      std::swap(v[static_cast<std::size_t>(m.i)], v[static_cast<std::size_t>(m.j)]);
      break;
  }
  return {v[0], v[1], v[2]};
}

CartanParams replay_moves(const CartanParams& p, const std::vector<CartanMove>& moves) {
  CartanParams q = p;
  for (const CartanMove& m : moves) q = apply_move(q, m);
  return q;
}

namespace {

struct MoveRecorder {
  CartanParams cur;
  std::vector<CartanMove> log;

  void shift(int i, int n) {
    if (n == 0) return;
    CartanMove m{CartanMove::Kind::Shift, i, 0, n};
    cur = apply_move(cur, m);
    log.push_back(m);
  }
  void reverse(int i, int j) {
    CartanMove m{CartanMove::Kind::Reverse, i, j, 0};
    cur = apply_move(cur, m);
    log.push_back(m);
  }
  void swap(int i, int j) {
    CartanMove m{CartanMove::Kind::Swap, i, j, 0};
    cur = apply_move(cur, m);
    log.push_back(m);
  }

  double at(int i) const {
    return i == 0 ? cur.l1 : (i == 1 ? cur.l2 : cur.l3);
  }

  // Reduce component i into [0, pi/2).
  void reduce_mod(int i) {
    double x = at(i);
    int n = -static_cast<int>(std::floor(x / kHalfPi));
    shift(i, n);
    // floor roundoff can leave the value a hair outside; one correction step.
    if (at(i) < 0.0) shift(i, 1);
    if (at(i) >= kHalfPi) shift(i, -1);
  }

  void sort_descending() {
    // Three-element bubble sort; each exchange is a recorded Swap.
    if (at(0) < at(1)) swap(0, 1);
    if (at(1) < at(2)) swap(1, 2);
    if (at(0) < at(1)) swap(0, 1);
  }
};

}  // namespace

CanonicalizeResult canonicalize(const CartanParams& p) {
  MoveRecorder r;
  r.cur = p;

  for (int i = 0; i < 3; ++i) r.reduce_mod(i);
  r.sort_descending();

  for (int iter = 0; iter < tol::canonicalize_max_iter; ++iter) {
    if (r.cur.in_canonical_domain()) return {r.cur, r.log};
    // l1 + l2 > pi/2: map (l1, l2) -> (pi/2 - l1, pi/2 - l2) via one reverse
    // plus two shifts, then restore the ordering. The top-pair sum becomes
    // pi - (l1 + l2) < pi/2, so the iteration contracts onto the domain.
    r.reverse(0, 1);
    r.shift(0, 1);
    r.shift(1, 1);
    r.sort_descending();
  }
  if (r.cur.in_canonical_domain()) return {r.cur, r.log};
  throw std::runtime_error("canonicalize failed to reach the canonical domain (iteration cap)");
}

TwoQubitPureState apply_gate(const CartanParams& p, const TwoQubitPureState& psi0) {
  CartanGate g = build_gate(p);
  TwoQubitPureState out;
  out.basis = psi0.basis;
  if (psi0.basis == Basis::Bell) {
    for (int i = 0; i < 4; ++i)
      out.amp[static_cast<std::size_t>(i)] =
          g.diag_bell[static_cast<std::size_t>(i)] * psi0.amp[static_cast<std::size_t>(i)];
    return out;
  }
  CVec v = matvec(g.matrix_canonical, psi0.vec());
  for (int i = 0; i < 4; ++i) out.amp[static_cast<std::size_t>(i)] = v[i];
  return out;
}

DensityMatrix4 evolve_density(const CartanParams& p, const DensityMatrix4& rho) {
  CartanGate g = build_gate(p);
  ComplexMatrix u = g.matrix_canonical;
  return DensityMatrix4::make(u * rho.matrix() * u.adjoint());
}

}  // namespace cartanqm
