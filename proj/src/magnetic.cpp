#include "maglap/magnetic.hpp"

#include "maglap/error.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cmath>
#include <numbers>
#include <vector>

namespace maglap {

std::string_view to_string(Construction c) noexcept {
  switch (c) {
    case Construction::unnormalized:
      return "unnormalized";
    case Construction::markov:
      return "markov";
  }
  return "unknown";
}

MagneticLaplacian magnetic_laplacian(const RealMatrix& weights, double g) {
  const Index n = weights.rows();
  if (n == 0 || weights.cols() != n) throw InvalidInput("weight matrix must be square and non-empty");
  if (!std::isfinite(g)) throw InvalidArgument("rotation parameter g must be finite");

  const double turn = 2.0 * std::numbers::pi * g;
  Eigen::MatrixXcd l(n, n);
  RealVector degree = RealVector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) degree(i) += 0.5 * (weights(i, j) + weights(j, i));
  }
  for (Index i = 0; i < n; ++i) {
    l(i, i) = Complex(degree(i) - weights(i, i), 0.0);
    for (Index j = i + 1; j < n; ++j) {
      const double magnitude = 0.5 * (weights(i, j) + weights(j, i));
      const Complex term = std::polar(magnitude, turn * (weights(j, i) - weights(i, j)));
      l(i, j) = -term;
      l(j, i) = -std::conj(term);
    }
  }
  return MagneticLaplacian{HermitianMatrix(l), std::move(degree), g, std::nullopt,
                           Construction::unnormalized, false};
}

MagneticLaplacian build_unnormalized(const AdjacencyMatrix& w, double g) {
  return magnetic_laplacian(w.weights(), g);
}

MagneticLaplacian build_markov(const TransitionMatrix& p, double g, int t) {
  const TransitionMatrix q = diffuse(p, t);
  MagneticLaplacian m = magnetic_laplacian(q.matrix(), g);
  m.t = t;
  m.construction = Construction::markov;
  return m;
}

MagneticLaplacian degree_normalize(const MagneticLaplacian& m) {
  std::vector<Index> isolated;
  for (Index i = 0; i < m.degree.size(); ++i)
    if (!(m.degree(i) > 0.0)) isolated.push_back(i);
  if (!isolated.empty())
    throw InvalidArgument(fmt::format("cannot degree-normalize: nodes {} have zero degree", isolated));
  MagneticLaplacian out = m;
  out.laplacian = scale_rows_cols(m.laplacian, m.degree);
  out.degree_normalized = true;
  return out;
}

double rescale_g(double g, const TransitionMatrix& p) {
  const double top = p.matrix().maxCoeff();
  if (!(top > 0.0)) throw InvalidArgument("transition matrix has no positive entry");
  return g / top;
}

}  // namespace maglap
