#include "cartanqm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cartanqm {

namespace {

void check_dim(int dim) {
  if (dim < 2 || dim > 4) throw std::domain_error("ComplexMatrix dimension must be 2, 3 or 4");
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  check_dim(dim);
  a_.fill(cxd{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(r, c) = (*this)(c, r);
  return m;
}

cxd ComplexMatrix::trace() const {
  cxd t{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      cxd s{0.0, 0.0};
      for (int k = 0; k < dim_; ++k) s += (*this)(r, k) * o(k, c);
      m(r, c) = s;
    }
  return m;
}

ComplexMatrix ComplexMatrix::operator*(cxd s) const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
  double m = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
  return m;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i]));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  double m = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return m;
}

void ComplexMatrix::require_hermitian(double tolerance) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      double defect = std::abs((*this)(r, c) - std::conj((*this)(c, r)));
      if (defect > tolerance) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: |M(" << r << "," << c << ") - conj(M(" << c << "," << r
            << "))| = " << defect;
        throw std::domain_error(msg.str());
      }
    }
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

CVec::CVec(int dim) : dim_(dim) {
  if (dim != 2 && dim != 3 && dim != 4) throw std::domain_error("CVec dimension must be 2, 3 or 4");
  a_.fill(cxd{0.0, 0.0});
}

CVec::CVec(std::initializer_list<cxd> xs) : dim_(static_cast<int>(xs.size())) {
  if (dim_ != 2 && dim_ != 4) throw std::domain_error("CVec literal must have 2 or 4 entries");
  a_.fill(cxd{0.0, 0.0});
  int i = 0;
  for (cxd x : xs) a_[static_cast<std::size_t>(i++)] = x;
}

double CVec::norm() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += std::norm(a_[static_cast<std::size_t>(i)]);
  return std::sqrt(s);
}

CVec CVec::normalized() const {
  double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize a zero vector");
  CVec v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = (*this)[i] / n;
  return v;
}

CVec CVec::operator*(cxd s) const {
  CVec v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = (*this)[i] * s;
  return v;
}

CVec CVec::operator+(const CVec& o) const {
  CVec v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = (*this)[i] + o[i];
  return v;
}

CVec CVec::operator-(const CVec& o) const {
  CVec v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = (*this)[i] - o[i];
  return v;
}

cxd inner(const CVec& bra, const CVec& ket) {
  cxd s{0.0, 0.0};
  for (int i = 0; i < bra.dim(); ++i) s += std::conj(bra[i]) * ket[i];
  return s;
}

CVec matvec(const ComplexMatrix& m, const CVec& v) {
  CVec out(m.dim());
  for (int r = 0; r < m.dim(); ++r) {
    cxd s{0.0, 0.0};
    for (int c = 0; c < m.dim(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

ComplexMatrix outer(const CVec& ket, const CVec& bra) {
  ComplexMatrix m(ket.dim());
  for (int r = 0; r < ket.dim(); ++r)
    for (int c = 0; c < ket.dim(); ++c) m(r, c) = ket[r] * std::conj(bra[c]);
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw std::domain_error("kron expects two 2x2 factors");
  ComplexMatrix m(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2);
  m(0, 1) = cxd{0.0, -1.0};
  m(1, 0) = cxd{0.0, 1.0};
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

CVec EigenSystem::vector(int i) const {
  CVec v(vectors.dim());
  for (int r = 0; r < vectors.dim(); ++r) v[r] = vectors(r, i);
  return v;
}

namespace {

double offdiag_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing A(p,q); V accumulates eigenvectors.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  cxd apq = a(p, q);
  double mag = std::abs(apq);
  if (mag == 0.0) return;
  cxd phase = apq / mag;

  double app = a(p, p).real();
  double aqq = a(q, q).real();
  double tau = (aqq - app) / (2.0 * mag);
  double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                          : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  double c = 1.0 / std::sqrt(1.0 + t * t);
  double s = t * c;

  // Columns transform as |p'> = c|p> - s*conj(phase)|q>, |q'> = s*phase|p> + c|q>.
  int n = a.dim();
  for (int k = 0; k < n; ++k) {
    cxd akp = a(k, p);
    cxd akq = a(k, q);
    a(k, p) = akp * c - akq * s * std::conj(phase);
    a(k, q) = akp * s * phase + akq * c;
  }
  for (int k = 0; k < n; ++k) {
    cxd apk = a(p, k);
    cxd aqk = a(q, k);
    a(p, k) = apk * c - aqk * s * phase;
    a(q, k) = apk * std::conj(phase) * s + aqk * c;
  }
  for (int k = 0; k < n; ++k) {
    cxd vkp = v(k, p);
    cxd vkq = v(k, q);
    v(k, p) = vkp * c - vkq * s * std::conj(phase);
    v(k, q) = vkp * s * phase + vkq * c;
  }
}

// Modified Gram-Schmidt on a contiguous run of eigenvector columns.
void reorthonormalize(ComplexMatrix& vecs, int first, int last) {
  int n = vecs.dim();
  for (int j = first; j <= last; ++j) {
    for (int k = first; k < j; ++k) {
      cxd proj{0.0, 0.0};
      for (int r = 0; r < n; ++r) proj += std::conj(vecs(r, k)) * vecs(r, j);
      for (int r = 0; r < n; ++r) vecs(r, j) -= proj * vecs(r, k);
    }
    double nrm = 0.0;
    for (int r = 0; r < n; ++r) nrm += std::norm(vecs(r, j));
    nrm = std::sqrt(nrm);
    if (nrm > 0.0)
      for (int r = 0; r < n; ++r) vecs(r, j) /= nrm;
  }
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& m, double hermiticity_tol) {
  m.require_hermitian(hermiticity_tol);
  int n = m.dim();

  // Work on the exactly-Hermitian part so roundoff in the input cannot leak
  // imaginary components into the diagonal.
  ComplexMatrix a(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  double scale = std::max(1.0, a.max_abs());

  for (int sweep = 0; sweep < tol::jacobi_max_sweeps; ++sweep) {
    if (offdiag_norm(a) <= tol::jacobi_offdiag * scale) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es;
  es.values.resize(static_cast<std::size_t>(n));
  es.vectors = ComplexMatrix(n);
  for (int i = 0; i < n; ++i) {
    es.values[static_cast<std::size_t>(i)] = a(order[static_cast<std::size_t>(i)],
                                               order[static_cast<std::size_t>(i)]).real();
    for (int r = 0; r < n; ++r) es.vectors(r, i) = v(r, order[static_cast<std::size_t>(i)]);
  }

  // Degenerate clusters get an explicit re-orthonormalization pass.
  double cluster_tol = 1e-8 * scale;
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    bool split = (i == n) || (es.values[static_cast<std::size_t>(i)] -
                                  es.values[static_cast<std::size_t>(i - 1)] >
                              cluster_tol);
    if (split) {
      if (i - 1 > start) reorthonormalize(es.vectors, start, i - 1);
      start = i;
    }
  }
  return es;
}

Mat3 Mat3::identity() {
  Mat3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  return m;
}

double Mat3::max_abs_diff(const Mat3& o) const {
  double m = 0.0;
  for (std::size_t i = 0; i < 9; ++i) m = std::max(m, std::abs(a[i] - o.a[i]));
  return m;
}

double Mat3::symmetry_defect() const {
  double m = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m = std::max(m, std::abs((*this)(r, c) - (*this)(c, r)));
  return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
      m(r, c) = s;
    }
  return m;
}

Sym3Inverse sym3_inverse_det(const Mat3& q, double symmetry_tol) {
  if (q.symmetry_defect() > symmetry_tol)
    throw std::domain_error("sym3_inverse_det: matrix is not symmetric within tolerance");

  double c00 = q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1);
  double c01 = q(1, 2) * q(2, 0) - q(1, 0) * q(2, 2);
  double c02 = q(1, 0) * q(2, 1) - q(1, 1) * q(2, 0);
  double det = q(0, 0) * c00 + q(0, 1) * c01 + q(0, 2) * c02;

  Sym3Inverse out;
  out.det = det;
  out.singular = std::abs(det) <= tol::singular_det;
  if (out.singular) return out;

  Mat3 adj;
  adj(0, 0) = c00;
  adj(1, 0) = c01;
  adj(2, 0) = c02;
  adj(0, 1) = q(0, 2) * q(2, 1) - q(0, 1) * q(2, 2);
  adj(1, 1) = q(0, 0) * q(2, 2) - q(0, 2) * q(2, 0);
  adj(2, 1) = q(0, 1) * q(2, 0) - q(0, 0) * q(2, 1);
  adj(0, 2) = q(0, 1) * q(1, 2) - q(0, 2) * q(1, 1);
  adj(1, 2) = q(0, 2) * q(1, 0) - q(0, 0) * q(1, 2);
  adj(2, 2) = q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0);

  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.inverse(r, c) = adj(r, c) / det;
  out.singular = false;
  return out;
}

}  // namespace cartanqm
