#include <doctest.h>

#include <cmath>

#include "cartanqm/cartan.hpp"
#include "helpers.hpp"

using namespace cartanqm;

namespace {

constexpr double kPi = testutil::kPi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

// Evolved canonical-basis state transcribed directly from the closed form.
std::array<cxd, 4> evolved_closed_form(const CartanParams& p, const std::array<cxd, 4>& a) {
  cxd mi{0.0, -1.0};
  cxd em = std::exp(cxd{0.0, -p.l3});
  cxd ep = std::exp(cxd{0.0, p.l3});
  double cm = std::cos(p.lambda_minus()), sm = std::sin(p.lambda_minus());
  double cp = std::cos(p.lambda_plus()), sp = std::sin(p.lambda_plus());
  return {
      em * (a[0] * cm + mi * a[3] * sm),
      ep * (a[1] * cp + mi * a[2] * sp),
      ep * (a[2] * cp + mi * a[1] * sp),
      em * (a[3] * cm + mi * a[0] * sm),
  };
}

ComplexMatrix bell_transform() {
  // Columns are the Bell vectors in canonical coordinates.
  ComplexMatrix t(4);
  t(0, 0) = kInvSqrt2; t(3, 0) = kInvSqrt2;
  t(0, 1) = kInvSqrt2; t(3, 1) = -kInvSqrt2;
  t(1, 2) = kInvSqrt2; t(2, 2) = kInvSqrt2;
  t(1, 3) = kInvSqrt2; t(2, 3) = -kInvSqrt2;
  return t;
}

}  // namespace

TEST_CASE("the three generators commute exactly") {
  const auto& g = cartan_generators();
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      CHECK(commutator(g[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(b)]).max_abs() ==
            0.0);
}

TEST_CASE("build_gate: zero angles give the identity") {
  CartanGate g = build_gate({0.0, 0.0, 0.0});
  CHECK(g.matrix_canonical.max_abs_diff(ComplexMatrix::identity(4)) <= 1e-15);
  for (const cxd& d : g.diag_bell) CHECK(std::abs(d - cxd{1.0, 0.0}) <= 1e-15);
}

TEST_CASE("build_gate: (pi/4, 0, 0) block structure") {
  CartanGate g = build_gate({kPi / 4, 0.0, 0.0});
  double c = std::cos(kPi / 4);
  CHECK(g.matrix_canonical(0, 0).real() == doctest::Approx(c));
  CHECK(g.matrix_canonical(0, 3).imag() == doctest::Approx(-c));
  CHECK(g.matrix_canonical(1, 1).real() == doctest::Approx(c));
  CHECK(g.matrix_canonical(1, 2).imag() == doctest::Approx(-c));
  CHECK(std::abs(g.matrix_canonical(0, 1)) == 0.0);
  CHECK(std::abs(g.matrix_canonical(2, 0)) == 0.0);
}

TEST_CASE("build_gate agrees with the spectral matrix exponential") {
  auto rng = testutil::rng(31);
  const auto& gen = cartan_generators();
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    CartanParams p = testutil::random_lambda(rng);
    ComplexMatrix h(4);
    h += gen[0] * p.l1;
    h += gen[1] * p.l2;
    h += gen[2] * p.l3;
    ComplexMatrix expected = testutil::exp_minus_i(h);
    worst = std::max(worst, build_gate(p).matrix_canonical.max_abs_diff(expected));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("build_gate: unitarity and canonical/Bell representation agreement") {
  auto rng = testutil::rng(32);
  ComplexMatrix t = bell_transform();
  double worst_unitary = 0.0, worst_basis = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    CartanParams p = testutil::random_lambda(rng);
    CartanGate g = build_gate(p);

    ComplexMatrix uu = g.matrix_canonical * g.matrix_canonical.adjoint();
    worst_unitary = std::max(worst_unitary, uu.max_abs_diff(ComplexMatrix::identity(4)));
    for (const cxd& d : g.diag_bell)
      worst_unitary = std::max(worst_unitary, std::abs(std::abs(d) - 1.0));

    ComplexMatrix diag(4);
    for (int i = 0; i < 4; ++i) diag(i, i) = g.diag_bell[static_cast<std::size_t>(i)];
    ComplexMatrix from_bell = t * diag * t.transpose();
    worst_basis = std::max(worst_basis, from_bell.max_abs_diff(g.matrix_canonical));
  }
  CHECK(worst_unitary <= 1e-12);
  CHECK(worst_basis <= 1e-10);
}

TEST_CASE("canonicalize: fixed point, reverse recovery, swap sort") {
  CartanParams in_domain{0.7, 0.5, 0.2};
  CanonicalizeResult res = canonicalize(in_domain);
  CHECK(res.ops.empty());
  CHECK(res.canonical.l1 == doctest::Approx(0.7));
  CHECK(res.canonical.l2 == doctest::Approx(0.5));
  CHECK(res.canonical.l3 == doctest::Approx(0.2));

  CanonicalizeResult rev = canonicalize({-0.7, -0.5, 0.2});
  CHECK(rev.canonical.in_canonical_domain());
  CHECK(rev.canonical.l1 == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(rev.canonical.l2 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rev.canonical.l3 == doctest::Approx(0.2).epsilon(1e-12));

  CanonicalizeResult swap = canonicalize({0.5, 0.7, 0.2});
  CHECK(swap.canonical.l1 == doctest::Approx(0.7));
  CHECK(swap.canonical.l2 == doctest::Approx(0.5));
}

TEST_CASE("canonicalize: random vectors land in the domain and the ops replay") {
  auto rng = testutil::rng(33);
  std::uniform_real_distribution<double> wide(-10.0, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    CartanParams p{wide(rng), wide(rng), wide(rng)};
    CanonicalizeResult res = canonicalize(p);
    CHECK(res.canonical.in_canonical_domain());

    CartanParams replayed = replay_moves(p, res.ops);
    CHECK(std::abs(replayed.l1 - res.canonical.l1) <= 1e-12);
    CHECK(std::abs(replayed.l2 - res.canonical.l2) <= 1e-12);
    CHECK(std::abs(replayed.l3 - res.canonical.l3) <= 1e-12);
  }
}

TEST_CASE("apply_gate: identity angles, |00> closed form, Bell phases") {
  auto rng = testutil::rng(34);
  TwoQubitPureState psi = testutil::random_state(rng);
  TwoQubitPureState same = apply_gate({0.0, 0.0, 0.0}, psi);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(same.amp[static_cast<std::size_t>(i)] -
                   psi.amp[static_cast<std::size_t>(i)]) <= 1e-15);

  CartanParams p{0.9, 0.4, 0.3};
  TwoQubitPureState zero = TwoQubitPureState::make({1.0, 0.0, 0.0, 0.0}, Basis::Canonical);
  TwoQubitPureState out = apply_gate(p, zero);
  cxd em = std::exp(cxd{0.0, -p.l3});
  CHECK(std::abs(out.amp[0] - em * std::cos(p.lambda_minus())) <= 1e-12);
  CHECK(std::abs(out.amp[1]) <= 1e-15);
  CHECK(std::abs(out.amp[2]) <= 1e-15);
  CHECK(std::abs(out.amp[3] - cxd{0.0, -1.0} * em * std::sin(p.lambda_minus())) <= 1e-12);

  // Bell-basis probe evolves by pure phases.
  TwoQubitPureState bell = TwoQubitPureState::make_normalized(
      {cxd{0.5, 0.0}, cxd{0.1, 0.2}, cxd{0.3, -0.4}, cxd{0.5, 0.1}}, Basis::Bell);
  TwoQubitPureState bout = apply_gate(p, bell);
  std::array<double, 4> phases = {-(p.l1 - p.l2 + p.l3), p.l1 - p.l2 - p.l3,
                                  -(p.l1 + p.l2 - p.l3), p.l1 + p.l2 + p.l3};
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(bout.amp[static_cast<std::size_t>(i)] -
                   bell.amp[static_cast<std::size_t>(i)] *
                       std::exp(cxd{0.0, phases[static_cast<std::size_t>(i)]})) <= 1e-12);
}

TEST_CASE("applying the gate commutes with the basis change") {
  auto rng = testutil::rng(36);
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    CartanParams p = testutil::random_lambda(rng);
    TwoQubitPureState psi = testutil::random_state(rng);
    TwoQubitPureState direct = apply_gate(p, psi);
    TwoQubitPureState via_bell =
        change_basis(apply_gate(p, change_basis(psi, Basis::Bell)), Basis::Canonical);
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(direct.amp[static_cast<std::size_t>(i)] -
                                       via_bell.amp[static_cast<std::size_t>(i)]));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("apply_gate matches the componentwise closed form on random probes") {
  auto rng = testutil::rng(35);
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    CartanParams p = testutil::random_lambda(rng);
    TwoQubitPureState psi = testutil::random_state(rng);
    TwoQubitPureState out = apply_gate(p, psi);
    std::array<cxd, 4> expect = evolved_closed_form(p, psi.amp);
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(out.amp[static_cast<std::size_t>(i)] -
                                       expect[static_cast<std::size_t>(i)]));
    CHECK(std::abs(out.norm() - 1.0) <= 1e-12);
  }
  CHECK(worst <= 1e-12);
}
