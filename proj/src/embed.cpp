#include "maglap/embed.hpp"

#include "maglap/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace maglap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_index(const SpectralDecomposition& decomp, Index k) {
  if (k < 0 || k >= decomp.size())
    throw IndexError(fmt::format("eigenvector index {} out of range [0, {})", k, decomp.size()));
}

double part_of(Complex z, Part part) {
  switch (part) {
    case Part::real:
      return z.real();
    case Part::imag:
      return z.imag();
    case Part::phase:
      return wrapped_phase(z);
  }
  return 0.0;
}

}  // namespace

double wrapped_phase(Complex z) {
  if (z == Complex(0.0, 0.0)) return 0.0;
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  // -tiny + 2 pi rounds to 2 pi
  if (a >= kTwoPi) a = 0.0;
  return a;
}

Embedding phase_of(const SpectralDecomposition& decomp, Index k) {
  check_index(decomp, k);
  const Index n = decomp.eigenvectors.rows();
  Embedding e{EmbeddingKind::phase, RealMatrix(n, 1), {k}};
  for (Index i = 0; i < n; ++i) e.coordinates(i, 0) = wrapped_phase(decomp.eigenvectors(i, k));
  return e;
}

Embedding planar(const SpectralDecomposition& decomp, Index a, Index b, Part part) {
  check_index(decomp, a);
  check_index(decomp, b);
  if (a == b) throw InvalidArgument(fmt::format("planar embedding needs two distinct eigenvectors, got {} twice", a));
  const Index n = decomp.eigenvectors.rows();
  Embedding e{EmbeddingKind::planar, RealMatrix(n, 2), {a, b}};
  for (Index i = 0; i < n; ++i) {
    e.coordinates(i, 0) = part_of(decomp.eigenvectors(i, a), part);
    e.coordinates(i, 1) = part_of(decomp.eigenvectors(i, b), part);
  }
  return e;
}

Eigen::Vector3d torus_point(double theta1, double theta2) {
  const double ring = kTorusMajorRadius + kTorusMinorRadius * std::cos(theta1);
  return {ring * std::cos(theta2), ring * std::sin(theta2), kTorusMinorRadius * std::sin(theta1)};
}

TorusEmbedding torus(const SpectralDecomposition& decomp, Index a, Index b) {
  TorusEmbedding out{planar(decomp, a, b, Part::phase), RealMatrix()};
  out.angles.kind = EmbeddingKind::torus;
  const Index n = out.angles.size();
  out.surface.resize(n, 3);
  for (Index i = 0; i < n; ++i)
    out.surface.row(i) =
        torus_point(out.angles.coordinates(i, 0), out.angles.coordinates(i, 1)).transpose();
  return out;
}

std::pair<Index, Index> default_embedding_indices(Construction c) noexcept {
  return c == Construction::markov ? std::pair<Index, Index>{1, 2} : std::pair<Index, Index>{0, 1};
}

bool has_trivial_principal(const SpectralDecomposition& decomp) noexcept {
  return decomp.size() > 0 && decomp.eigenvalues(0) <= kTrivialEigenvalue;
}

RealVector centered_phases(const ComplexVector& v) {
  Complex mean(0.0, 0.0);
  for (Index i = 0; i < v.size(); ++i) mean += v(i);
  const Complex reference = std::abs(mean) > 0.0 ? mean / std::abs(mean) : Complex(1.0, 0.0);
  RealVector out(v.size());
  for (Index i = 0; i < v.size(); ++i)
    out(i) = v(i) == Complex(0.0, 0.0) ? 0.0 : std::arg(v(i) * std::conj(reference));
  return out;
}

TheoremPrediction theorem1_prediction(const TransitionMatrix& p, double g, ColumnMass mass) {
  const Index n = p.size();
  PageRankVector h = pagerank(p);
  const RealVector column_sums = p.matrix().colwise().sum().transpose();
  ComplexVector phi(n);
  for (Index i = 0; i < n; ++i) {
    const double colmass =
        mass == ColumnMass::stationary_limit ? static_cast<double>(n) * h.h(i) : column_sums(i);
    phi(i) = std::polar(std::sqrt(0.5 * (1.0 + colmass)), kTwoPi * g * h.h(i));
  }
  phi.normalize();
  return TheoremPrediction{std::move(phi), std::move(h.h), g};
}

PhaseAlignment align_phase(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size())
    throw InvalidArgument(fmt::format("align_phase length mismatch: {} vs {}", u.size(), v.size()));
  if (u.norm() == 0.0 || v.norm() == 0.0) throw InvalidArgument("align_phase needs nonzero vectors");
  const Complex inner = v.dot(u);  // conjugates v
  const Complex c = std::abs(inner) > 0.0 ? inner / std::abs(inner) : Complex(1.0, 0.0);
  return PhaseAlignment{c, (u - c * v).norm()};
}

}  // namespace maglap
