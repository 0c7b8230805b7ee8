#include "maglap/linalg.hpp"

#include "maglap/error.hpp"

#include <fmt/format.h>

#include <Eigen/Eigenvalues>

#include <cmath>

namespace maglap {

namespace {

bool all_finite(const Eigen::MatrixXcd& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

template <typename Matrix>
Matrix power_by_squaring(const Matrix& m, int t) {
  if (t < 1) throw InvalidArgument(fmt::format("matrix power requires t >= 1, got {}", t));
  if (m.rows() != m.cols())
    throw InvalidArgument(fmt::format("matrix power of non-square {}x{} matrix", m.rows(), m.cols()));
  Matrix result = m;
  Matrix base = m;
  int remaining = t - 1;
  while (remaining > 0) {
    if (remaining & 1) result = (result * base).eval();
    remaining >>= 1;
    if (remaining > 0) base = (base * base).eval();
  }
  return result;
}

}  // namespace

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
  if (m_.rows() == 0 || m_.cols() == 0) throw InvalidInput("empty matrix");
  if (!all_finite(m_)) throw InvalidInput("matrix has non-finite entries");
}

ComplexMatrix ComplexMatrix::from_real(const RealMatrix& entries) {
  return ComplexMatrix(entries.cast<Complex>());
}

HermitianMatrix::HermitianMatrix(const Eigen::MatrixXcd& entries) : m_(entries) {
  const Index n = m_.rows();
  if (n == 0) throw InvalidInput("empty matrix");
  if (m_.cols() != n)
    throw InvalidInput(fmt::format("Hermitian matrix must be square, got {}x{}", n, m_.cols()));
  if (!all_finite(m_)) throw InvalidInput("matrix has non-finite entries");

  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  double deviation = 0.0;
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i <= j; ++i)
      deviation = std::max(deviation, std::abs(m_(i, j) - std::conj(m_(j, i))));
  if (deviation > 1e-8 * scale)
    throw InvalidInput(fmt::format("matrix is not Hermitian (deviation {:.3e})", deviation));

  for (Index j = 0; j < n; ++j) {
    m_(j, j) = Complex(m_(j, j).real(), 0.0);
    for (Index i = 0; i < j; ++i) {
      const Complex upper = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
      m_(i, j) = upper;
      m_(j, i) = std::conj(upper);
    }
  }
}

void fix_phase(Eigen::Ref<ComplexVector> v) {
  Index best = 0;
  double best_abs = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs <= 0.0) return;
  const Complex rotation = std::conj(v(best)) / best_abs;
  v *= rotation;
  v(best) = Complex(std::abs(v(best)), 0.0);
}

SpectralDecomposition hermitian_eig(const HermitianMatrix& a) {
  const Index n = a.size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw NumericalError(fmt::format("Hermitian eigensolver did not converge for {}x{} matrix", n, n));

  SpectralDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  for (Index k = 0; k < n; ++k) {
    auto column = out.eigenvectors.col(k);
    column.normalize();
    fix_phase(column);
  }
  return out;
}

RealMatrix matrix_power(const RealMatrix& m, int t) { return power_by_squaring(m, t); }

ComplexMatrix matrix_power(const ComplexMatrix& m, int t) {
  return ComplexMatrix(power_by_squaring(m.matrix(), t));
}

HermitianMatrix scale_rows_cols(const HermitianMatrix& a, const RealVector& d) {
  const Index n = a.size();
  if (d.size() != n)
    throw InvalidArgument(fmt::format("scaling vector has length {}, matrix is {}x{}", d.size(), n, n));
  RealVector inv_sqrt(n);
  for (Index i = 0; i < n; ++i) {
    if (!(d(i) > 0.0))
      throw InvalidArgument(fmt::format("scaling entry d[{}] = {} is not positive", i, d(i)));
    inv_sqrt(i) = 1.0 / std::sqrt(d(i));
  }
  Eigen::MatrixXcd scaled = inv_sqrt.asDiagonal() * a.matrix() * inv_sqrt.asDiagonal();
  return HermitianMatrix(scaled);
}

}  // namespace maglap
