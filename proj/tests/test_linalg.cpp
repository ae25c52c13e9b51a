#include <doctest.h>

#include <cmath>

#include "cartanqm/linalg.hpp"
#include "helpers.hpp"

using namespace cartanqm;

TEST_CASE("hermitian_eig: identity") {
  EigenSystem es = hermitian_eig(ComplexMatrix::identity(4));
  for (double y : es.values) CHECK(y == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig: already diagonal") {
  ComplexMatrix m(4);
  m(0, 0) = 0.1;
  m(1, 1) = 0.2;
  m(2, 2) = 0.3;
  m(3, 3) = 0.4;
  EigenSystem es = hermitian_eig(m);
  CHECK(es.values[0] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(es.values[1] == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(es.values[2] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(es.values[3] == doctest::Approx(0.4).epsilon(1e-14));
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 4; ++r)
      CHECK(std::abs(es.vectors(r, i)) == doctest::Approx(r == i ? 1.0 : 0.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig: trace and determinant oracles on random matrices") {
  auto g = testutil::rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int dim = 2 + static_cast<int>(g() % 3);
    ComplexMatrix m = testutil::random_hermitian(g, dim);
    EigenSystem es = hermitian_eig(m);

    double sum = 0.0, prod = 1.0;
    for (double y : es.values) {
      sum += y;
      prod *= y;
    }
    CHECK(std::abs(sum - m.trace().real()) <= 1e-10);
    CHECK(std::abs(prod - testutil::cofactor_det(m).real()) <= 1e-10 * std::max(1.0, std::abs(prod)));
  }
}

TEST_CASE("hermitian_eig: reconstruction and orthonormality, 1000 draws") {
  auto g = testutil::rng(12);
  double worst_recon = 0.0, worst_ortho = 0.0, worst_residual = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    ComplexMatrix m = testutil::random_hermitian(g, 4);
    EigenSystem es = hermitian_eig(m);

    ComplexMatrix recon(4);
    for (int i = 0; i < 4; ++i) {
      CVec v = es.vector(i);
      recon += outer(v, v) * es.values[static_cast<std::size_t>(i)];
      CVec mv = matvec(m, v);
      CVec yv = v * cxd{es.values[static_cast<std::size_t>(i)], 0.0};
      worst_residual = std::max(worst_residual, (mv - yv).norm());
      for (int j = 0; j < 4; ++j) {
        double expected = (i == j) ? 1.0 : 0.0;
        worst_ortho = std::max(worst_ortho, std::abs(std::abs(inner(v, es.vector(j))) - expected));
      }
    }
    worst_recon = std::max(worst_recon, recon.max_abs_diff(m));
    CHECK(std::is_sorted(es.values.begin(), es.values.end()));
  }
  CHECK(worst_recon <= 1e-10);
  CHECK(worst_residual <= 1e-10);
  CHECK(worst_ortho <= 1e-10);
}

TEST_CASE("hermitian_eig: degenerate spectrum still yields orthonormal vectors") {
  // Two-fold degeneracy by construction: H = P + 2(I - P) for a random
  // rank-2 projector P.
  auto g = testutil::rng(13);
  CVec a = testutil::random_state(g).vec();
  CVec b = testutil::random_state(g).vec();
  cxd overlap = inner(a, b);
  for (int i = 0; i < 4; ++i) b[i] -= overlap * a[i];
  b = b.normalized();
  ComplexMatrix p = outer(a, a) + outer(b, b);
  ComplexMatrix h = p + (ComplexMatrix::identity(4) - p) * 2.0;

  EigenSystem es = hermitian_eig(h);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double expected = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(std::abs(inner(es.vector(i), es.vector(j))) - expected) <= 1e-10);
    }
}

TEST_CASE("hermitian_eig: non-Hermitian input names the offending element") {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(0, 1) = cxd{0.5, 0.0};
  m(1, 0) = cxd{0.2, 0.0};
  CHECK_THROWS_WITH_AS(hermitian_eig(m), doctest::Contains("M(0,1)"), std::domain_error);
}

TEST_CASE("sym3_inverse_det: identity and scaled identity") {
  Sym3Inverse inv = sym3_inverse_det(Mat3::identity());
  CHECK(!inv.singular);
  CHECK(inv.det == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(inv.inverse.max_abs_diff(Mat3::identity()) <= 1e-14);

  Mat3 four = Mat3::identity();
  for (int i = 0; i < 3; ++i) four(i, i) = 4.0;
  inv = sym3_inverse_det(four);
  CHECK(inv.det == doctest::Approx(64.0).epsilon(1e-14));
  for (int i = 0; i < 3; ++i) CHECK(inv.inverse(i, i) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("sym3_inverse_det: rank-deficient matrix flags singular") {
  Mat3 m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = 0.0;
  Sym3Inverse inv = sym3_inverse_det(m);
  CHECK(inv.singular);
}

TEST_CASE("sym3_inverse_det: asymmetric input rejected") {
  Mat3 m = Mat3::identity();
  m(0, 1) = 0.3;
  CHECK_THROWS_AS(sym3_inverse_det(m), std::domain_error);
}

TEST_CASE("sym3_inverse_det: Q Q^-1 = I and det(Q^-1) det(Q) = 1 on random draws") {
  auto g = testutil::rng(14);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 200; ++trial) {
    Mat3 q;
    for (int r = 0; r < 3; ++r)
      for (int c = r; c < 3; ++c) q(r, c) = q(c, r) = n(g);
    for (int i = 0; i < 3; ++i) q(i, i) += 2.0;  // keep most draws nonsingular

    Sym3Inverse inv = sym3_inverse_det(q);
    if (inv.singular) continue;
    CHECK(mat3_mul(q, inv.inverse).max_abs_diff(Mat3::identity()) <= 1e-9);

    Sym3Inverse inv2 = sym3_inverse_det(inv.inverse);
    REQUIRE(!inv2.singular);
    CHECK(inv2.det * inv.det == doctest::Approx(1.0).epsilon(1e-8));
  }
}
