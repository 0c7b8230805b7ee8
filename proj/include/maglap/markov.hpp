#pragma once

#include "maglap/linalg.hpp"

#include <optional>
#include <vector>

namespace maglap {

inline constexpr double kDefaultMixingEpsilon = 1e-8;
inline constexpr double kDefaultPageRankTolerance = 1e-10;
inline constexpr long kDefaultPageRankMaxIterations = 100000;

/// Dense nonnegative directed edge weights W (W(i, j) is the weight of i -> j),
/// optionally carrying node positions (one row per node) and cluster labels.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(RealMatrix weights,
                           std::optional<RealMatrix> positions = std::nullopt,
                           std::optional<std::vector<int>> labels = std::nullopt);

  Index size() const noexcept { return w_.rows(); }
  const RealMatrix& weights() const noexcept { return w_; }
  const std::optional<RealMatrix>& positions() const noexcept { return positions_; }
  const std::optional<std::vector<int>>& labels() const noexcept { return labels_; }

  /// Indices of rows whose total outgoing weight is zero.
  std::vector<std::size_t> zero_rows() const;

  /// Same metadata, new weights.
  AdjacencyMatrix with_weights(RealMatrix weights) const;

 private:
  RealMatrix w_;
  std::optional<RealMatrix> positions_;
  std::optional<std::vector<int>> labels_;
};

/// Row-stochastic transition matrix P, recording any teleportation applied.
class TransitionMatrix {
 public:
  /// Validates nonnegativity and unit row sums (1e-12).
  explicit TransitionMatrix(RealMatrix p, double teleport_alpha = 0.0);

  Index size() const noexcept { return p_.rows(); }
  const RealMatrix& matrix() const noexcept { return p_; }
  double teleport_alpha() const noexcept { return alpha_; }
  double operator()(Index i, Index j) const { return p_(i, j); }

 private:
  struct Unchecked {};
  TransitionMatrix(Unchecked, RealMatrix p, double teleport_alpha)
      : p_(std::move(p)), alpha_(teleport_alpha) {}

  friend TransitionMatrix diffuse(const TransitionMatrix& p, int t);

  RealMatrix p_;
  double alpha_;
};

/// Stationary distribution h with h^T P = h^T.
struct PageRankVector {
  RealVector h;
  long iterations = 0;
  double residual = 0.0;  ///< L1 change of the final iteration
};

TransitionMatrix to_transition(const AdjacencyMatrix& w);

/// (1 - alpha) P + (alpha / n) J.
TransitionMatrix add_teleportation(const TransitionMatrix& p, double alpha);

/// Row-normalizes W, replaces zero rows with the uniform row, then teleports.
TransitionMatrix add_teleportation(const AdjacencyMatrix& w, double alpha);

/// P^t, still row-stochastic up to rounding.
TransitionMatrix diffuse(const TransitionMatrix& p, int t);

/// Smallest t <= t_max with every entry of P^t strictly above epsilon.
std::optional<int> mixing_time(const TransitionMatrix& p, double epsilon = kDefaultMixingEpsilon,
                               int t_max = 100);

PageRankVector pagerank(const TransitionMatrix& p, double tol = kDefaultPageRankTolerance,
                        long max_iters = kDefaultPageRankMaxIterations);

/// True iff the support of some P^t (t <= t_max) is all-positive.
bool is_ergodic(const TransitionMatrix& p, int t_max);

}  // namespace maglap
