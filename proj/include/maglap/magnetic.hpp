#pragma once

#include "maglap/linalg.hpp"
#include "maglap/markov.hpp"

#include <optional>
#include <string_view>

namespace maglap {

enum class Construction { unnormalized, markov };

std::string_view to_string(Construction c) noexcept;

/// Magnetic Laplacian L = diag(D) - T o S for a weight matrix S, with
///   (T o S)(i, j) = exp(2 pi i g (S(j, i) - S(i, j))) * (S(i, j) + S(j, i)) / 2,
///   D(i)          = sum_j (S(i, j) + S(j, i)) / 2.
/// S is W for the unnormalized construction and P^t for the Markov one.
struct MagneticLaplacian {
  HermitianMatrix laplacian;
  RealVector degree;
  double g = 0.0;
  std::optional<int> t;
  Construction construction = Construction::unnormalized;
  bool degree_normalized = false;
};

/// Builds the Laplacian of an arbitrary nonnegative weight matrix.
MagneticLaplacian magnetic_laplacian(const RealMatrix& weights, double g);

MagneticLaplacian build_unnormalized(const AdjacencyMatrix& w, double g);

/// Laplacian of the diffused transition matrix P^t.
MagneticLaplacian build_markov(const TransitionMatrix& p, double g, int t);

/// D^{-1/2} L D^{-1/2}; throws InvalidArgument naming isolated nodes.
MagneticLaplacian degree_normalize(const MagneticLaplacian& m);

/// g / max_ij P(i, j), putting the Markov rotation on the scale of unit weights.
double rescale_g(double g, const TransitionMatrix& p);

}  // namespace maglap
