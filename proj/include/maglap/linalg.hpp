#pragma once

#include <Eigen/Dense>

#include <complex>

namespace maglap {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

/// Dense complex matrix with finite entries.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(Eigen::MatrixXcd entries);
  static ComplexMatrix from_real(const RealMatrix& entries);

  Index rows() const noexcept { return m_.rows(); }
  Index cols() const noexcept { return m_.cols(); }
  Complex operator()(Index i, Index j) const { return m_(i, j); }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

/// Square complex matrix equal to its conjugate transpose.
///
/// Construction symmetrizes the input exactly: the strict upper triangle is
/// replaced by the mean of each conjugate pair, the lower triangle is written
/// as its conjugate and the diagonal keeps only its real part. Inputs whose
/// deviation from Hermitian exceeds 1e-8 * max(1, max|a_ij|) are rejected.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Eigen::MatrixXcd& entries);

  Index size() const noexcept { return m_.rows(); }
  Complex operator()(Index i, Index j) const { return m_(i, j); }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

/// Ascending eigenvalues and matching unit-norm eigenvectors (columns).
///
/// Phase convention: in every column the entry of largest modulus (lowest
/// index on exact ties) is real and nonnegative.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  Index size() const noexcept { return eigenvalues.size(); }
  ComplexVector vector(Index k) const { return eigenvectors.col(k); }
};

SpectralDecomposition hermitian_eig(const HermitianMatrix& a);

/// M^t by binary exponentiation; t must be >= 1.
RealMatrix matrix_power(const RealMatrix& m, int t);
ComplexMatrix matrix_power(const ComplexMatrix& m, int t);

/// diag(d)^{-1/2} A diag(d)^{-1/2}; every d_i must be positive.
HermitianMatrix scale_rows_cols(const HermitianMatrix& a, const RealVector& d);

/// Rotates v so its largest-modulus entry is real and nonnegative.
void fix_phase(Eigen::Ref<ComplexVector> v);

}  // namespace maglap
