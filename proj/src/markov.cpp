#include "maglap/markov.hpp"

#include "maglap/error.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cmath>

namespace maglap {

AdjacencyMatrix::AdjacencyMatrix(RealMatrix weights, std::optional<RealMatrix> positions,
                                 std::optional<std::vector<int>> labels)
    : w_(std::move(weights)), positions_(std::move(positions)), labels_(std::move(labels)) {
  const Index n = w_.rows();
  if (n == 0 || w_.cols() != n)
    throw InvalidInput(fmt::format("adjacency matrix must be square and non-empty, got {}x{}", n,
                                   w_.cols()));
  bool any_positive = false;
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const double x = w_(i, j);
      if (!std::isfinite(x)) throw InvalidInput(fmt::format("W[{}][{}] is not finite", i, j));
      if (x < 0.0) throw InvalidInput(fmt::format("W[{}][{}] = {} is negative", i, j, x));
      any_positive = any_positive || x > 0.0;
    }
  }
  if (!any_positive) throw InvalidInput("adjacency matrix has no positive entry");
  if (positions_ && positions_->rows() != n)
    throw InvalidInput(fmt::format("{} positions for {} nodes", positions_->rows(), n));
  if (labels_ && static_cast<Index>(labels_->size()) != n)
    throw InvalidInput(fmt::format("{} labels for {} nodes", labels_->size(), n));
}

std::vector<std::size_t> AdjacencyMatrix::zero_rows() const {
  std::vector<std::size_t> rows;
  for (Index i = 0; i < size(); ++i)
    if (w_.row(i).sum() <= 0.0) rows.push_back(static_cast<std::size_t>(i));
  return rows;
}

AdjacencyMatrix AdjacencyMatrix::with_weights(RealMatrix weights) const {
  return AdjacencyMatrix(std::move(weights), positions_, labels_);
}

TransitionMatrix::TransitionMatrix(RealMatrix p, double teleport_alpha)
    : p_(std::move(p)), alpha_(teleport_alpha) {
  const Index n = p_.rows();
  if (n == 0 || p_.cols() != n)
    throw InvalidInput(fmt::format("transition matrix must be square and non-empty, got {}x{}", n,
                                   p_.cols()));
  if (!(alpha_ >= 0.0 && alpha_ < 1.0))
    throw InvalidArgument(fmt::format("teleport alpha {} outside [0, 1)", alpha_));
  for (Index i = 0; i < n; ++i) {
    double sum = 0.0;
    for (Index j = 0; j < n; ++j) {
      const double x = p_(i, j);
      if (!std::isfinite(x) || x < 0.0)
        throw InvalidInput(fmt::format("P[{}][{}] = {} is not a probability", i, j, x));
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw InvalidInput(fmt::format("row {} of P sums to {:.17g}", i, sum));
  }
}

TransitionMatrix to_transition(const AdjacencyMatrix& w) {
  const auto sinks = w.zero_rows();
  if (!sinks.empty())
    throw SinkError(fmt::format("rows {} have no outgoing weight; add self-loops or teleportation",
                                sinks),
                    sinks);
  const RealVector sums = w.weights().rowwise().sum();
  RealMatrix p = sums.cwiseInverse().asDiagonal() * w.weights();
  return TransitionMatrix(std::move(p));
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InvalidArgument(fmt::format("teleportation alpha must lie in (0, 1), got {}", alpha));
}

RealMatrix teleport(const RealMatrix& p, double alpha) {
  const double n = static_cast<double>(p.rows());
  return ((1.0 - alpha) * p).array() + alpha / n;
}

}  // namespace

TransitionMatrix add_teleportation(const TransitionMatrix& p, double alpha) {
  check_alpha(alpha);
  return TransitionMatrix(teleport(p.matrix(), alpha), alpha);
}

TransitionMatrix add_teleportation(const AdjacencyMatrix& w, double alpha) {
  check_alpha(alpha);
  const Index n = w.size();
  RealMatrix p = w.weights();
  for (Index i = 0; i < n; ++i) {
    const double sum = p.row(i).sum();
    if (sum > 0.0)
      p.row(i) /= sum;
    else
      p.row(i).setConstant(1.0 / static_cast<double>(n));
  }
  return TransitionMatrix(teleport(p, alpha), alpha);
}

TransitionMatrix diffuse(const TransitionMatrix& p, int t) {
  return TransitionMatrix(TransitionMatrix::Unchecked{}, matrix_power(p.matrix(), t),
                          p.teleport_alpha());
}

std::optional<int> mixing_time(const TransitionMatrix& p, double epsilon, int t_max) {
  if (!(epsilon > 0.0)) throw InvalidArgument(fmt::format("epsilon must be positive, got {}", epsilon));
  if (t_max < 1) throw InvalidArgument(fmt::format("t_max must be >= 1, got {}", t_max));
  RealMatrix q = p.matrix();
  for (int t = 1; t <= t_max; ++t) {
    if (q.minCoeff() > epsilon) return t;
    if (t < t_max) q = (q * p.matrix()).eval();
  }
  return std::nullopt;
}

PageRankVector pagerank(const TransitionMatrix& p, double tol, long max_iters) {
  if (!(tol > 0.0)) throw InvalidArgument(fmt::format("tolerance must be positive, got {}", tol));
  if (max_iters < 1) throw InvalidArgument("max_iters must be >= 1");
  const Index n = p.size();
  const RealMatrix pt = p.matrix().transpose();
  RealVector h = RealVector::Constant(n, 1.0 / static_cast<double>(n));
  double change = 0.0;
  for (long it = 1; it <= max_iters; ++it) {
    RealVector next = pt * h;
    next /= next.sum();
    change = (next - h).lpNorm<1>();
    h = std::move(next);
    if (change <= tol) return PageRankVector{std::move(h), it, change};
  }
  throw ConvergenceError(
      fmt::format("pagerank did not converge in {} iterations (last L1 change {:.3e})", max_iters,
                  change),
      change, max_iters);
}

bool is_ergodic(const TransitionMatrix& p, int t_max) {
  if (t_max < 1) throw InvalidArgument(fmt::format("t_max must be >= 1, got {}", t_max));
  const RealMatrix support = (p.matrix().array() > 0.0).cast<double>();
  RealMatrix reach = support;
  for (int t = 1; t <= t_max; ++t) {
    if ((reach.array() > 0.0).all()) return true;
    if (t < t_max) {
      RealMatrix next = ((reach * support).array() > 0.0).cast<double>();
      if (next == reach) return false;
      reach = std::move(next);
    }
  }
  return false;
}

}  // namespace maglap
