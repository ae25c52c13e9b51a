#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "cartanqm/tolerances.hpp"

namespace cartanqm {

using cxd = std::complex<double>;

/// Dense complex matrix of dimension 2, 3 or 4, row-major, value semantics.
/// Small enough that everything lives inline; no heap traffic in hot loops.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(0) { a_.fill(cxd{0.0, 0.0}); }
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

  int dim() const { return dim_; }

  cxd& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * dim_ + c)]; }
  const cxd& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * dim_ + c)]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  cxd trace() const;

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator*(cxd s) const;
  ComplexMatrix operator*(double s) const { return (*this) * cxd{s, 0.0}; }
  ComplexMatrix& operator+=(const ComplexMatrix& o);

  /// max_ij |A_ij - B_ij|
  double max_abs_diff(const ComplexMatrix& o) const;
  double max_abs() const;

  /// max_ij |M_ij - conj(M_ji)|
  double hermiticity_defect() const;
  bool is_hermitian(double tolerance = tol::hermiticity) const { return hermiticity_defect() <= tolerance; }

  /// Throws std::domain_error naming the offending element if the defect
  /// exceeds the tolerance.
  void require_hermitian(double tolerance = tol::hermiticity) const;

 private:
  int dim_;
  std::array<cxd, 16> a_;
};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Complex column vector of dimension 2 or 4.
class CVec {
 public:
  CVec() : dim_(0) { a_.fill(cxd{0.0, 0.0}); }
  explicit CVec(int dim);
  CVec(std::initializer_list<cxd> xs);

  int dim() const { return dim_; }
  cxd& operator[](int i) { return a_[static_cast<std::size_t>(i)]; }
  const cxd& operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }

  double norm() const;
  CVec normalized() const;
  CVec operator*(cxd s) const;
  CVec operator+(const CVec& o) const;
  CVec operator-(const CVec& o) const;

 private:
  int dim_;
  std::array<cxd, 4> a_;
};

cxd inner(const CVec& bra, const CVec& ket);          // <bra|ket>
CVec matvec(const ComplexMatrix& m, const CVec& v);
ComplexMatrix outer(const CVec& ket, const CVec& bra);  // |ket><bra|
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);  // 2x2 ⊗ 2x2 -> 4x4

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Spectral decomposition of a Hermitian matrix, eigenvalues ascending,
/// eigenvectors as orthonormal columns of `vectors`.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;

  CVec vector(int i) const;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices of dimension <= 4.
/// Eigenvectors within a degenerate cluster are re-orthonormalized so the
/// column set is orthonormal to machine precision regardless of degeneracy.
/// Throws std::domain_error if the input is not Hermitian within tolerance.
EigenSystem hermitian_eig(const ComplexMatrix& m, double hermiticity_tol = tol::hermiticity);

/// Real 3x3 matrix, row-major.
struct Mat3 {
  std::array<double, 9> a{};

  static Mat3 identity();
  double& operator()(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }
  double operator()(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }
  double max_abs_diff(const Mat3& o) const;
  double symmetry_defect() const;
};

Mat3 mat3_mul(const Mat3& a, const Mat3& b);

struct Sym3Inverse {
  Mat3 inverse;   // valid only when !singular
  double det = 0.0;
  bool singular = true;
};

/// Inverse and determinant of a real symmetric 3x3 via the adjugate.
/// `singular` is set (and the inverse left empty) when |det| <= tol::singular_det.
/// Throws std::domain_error if the input is not symmetric within tolerance.
Sym3Inverse sym3_inverse_det(const Mat3& q, double symmetry_tol = tol::hermiticity);

}  // namespace cartanqm
