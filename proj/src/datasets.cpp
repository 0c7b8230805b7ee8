#include "maglap/datasets.hpp"

#include "maglap/error.hpp"
#include "maglap/random.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace maglap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(fmt::format("{} = {} is not a probability", name, p));
}

void check_kernel(const KernelSpec& spec) {
  if (!(spec.sigma > 0.0)) throw InvalidArgument(fmt::format("sigma must be positive, got {}", spec.sigma));
  if (!(spec.drift_factor >= 1.0))
    throw InvalidArgument(fmt::format("drift factor must be >= 1, got {}", spec.drift_factor));
}

/// Signed shorter-arc angle from a to b, in (-pi, pi].
double signed_arc(double a, double b) {
  double d = std::remainder(b - a, kTwoPi);
  if (d <= -std::numbers::pi) d += kTwoPi;
  return d;
}

double kernel(double squared_distance, double bandwidth) { return std::exp(-squared_distance / bandwidth); }

}  // namespace

ClusterCycleSpec three_cluster_spec(std::uint64_t seed, int cluster_size) {
  return ClusterCycleSpec{std::vector<int>(3, cluster_size), {{0, 1, 2}}, 0.5, 0.5, 0.9, seed};
}

ClusterCycleSpec bow_tie_spec(std::uint64_t seed, int cluster_size) {
  return ClusterCycleSpec{std::vector<int>(7, cluster_size), {{0, 1, 2}, {0, 3, 4, 5, 6}}, 0.5, 0.5, 0.9,
                          seed};
}

AdjacencyMatrix gen_cluster_cycle(const ClusterCycleSpec& spec) {
  if (spec.sizes.empty()) throw InvalidArgument("cluster spec needs at least one cluster");
  check_probability(spec.p_in, "p_in");
  check_probability(spec.p_out, "p_out");
  check_probability(spec.p_clockwise, "p_clockwise");
  const int clusters = static_cast<int>(spec.sizes.size());
  std::vector<Index> offset(clusters + 1, 0);
  for (int c = 0; c < clusters; ++c) {
    if (spec.sizes[c] < 1) throw InvalidArgument(fmt::format("cluster {} is empty", c));
    offset[c + 1] = offset[c] + spec.sizes[c];
  }
  for (const auto& cycle : spec.cycles) {
    if (cycle.size() < 2) throw InvalidArgument("every cycle needs at least two clusters");
    for (int c : cycle)
      if (c < 0 || c >= clusters) throw InvalidArgument(fmt::format("cycle references unknown cluster {}", c));
  }

  const Index n = offset.back();
  RealMatrix w = RealMatrix::Zero(n, n);
  std::vector<int> labels(static_cast<std::size_t>(n));
  Rng rng(spec.seed);

  for (int c = 0; c < clusters; ++c) {
    for (Index i = offset[c]; i < offset[c + 1]; ++i) {
      labels[static_cast<std::size_t>(i)] = c;
      for (Index j = i + 1; j < offset[c + 1]; ++j) {
        if (rng.bernoulli(spec.p_in)) w(i, j) = w(j, i) = 1.0;
      }
    }
  }
  for (const auto& cycle : spec.cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      for (Index a = offset[from]; a < offset[from + 1]; ++a) {
        for (Index b = offset[to]; b < offset[to + 1]; ++b) {
          if (!rng.bernoulli(spec.p_out)) continue;
          if (rng.bernoulli(spec.p_clockwise))
            w(a, b) = 1.0;
          else
            w(b, a) = 1.0;
        }
      }
    }
  }
  return AdjacencyMatrix(std::move(w), std::nullopt, std::move(labels));
}

AdjacencyMatrix gen_circle_drift(const KernelSpec& spec) {
  check_kernel(spec);
  if (spec.n < 3) throw InvalidArgument(fmt::format("circle needs at least 3 points, got {}", spec.n));
  Rng rng(spec.seed);
  std::vector<double> angles(static_cast<std::size_t>(spec.n));
  for (double& a : angles) {
    if (rng.bernoulli(kCircleUniformWeight))
      a = rng.uniform(0.0, kTwoPi);
    else
      a = kCircleBumpCenter + kCircleBumpWidth * rng.normal();
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
  }
  std::sort(angles.begin(), angles.end());

  const Index n = spec.n;
  RealMatrix positions(n, 2);
  for (Index i = 0; i < n; ++i) {
    positions(i, 0) = std::cos(angles[static_cast<std::size_t>(i)]);
    positions(i, 1) = std::sin(angles[static_cast<std::size_t>(i)]);
  }
  const double narrow = spec.sigma * spec.sigma;
  const double wide = spec.drift_factor * narrow;
  RealMatrix w(n, n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const double d2 = (positions.row(x) - positions.row(y)).squaredNorm();
      const bool forward =
          signed_arc(angles[static_cast<std::size_t>(x)], angles[static_cast<std::size_t>(y)]) >= 0.0;
      w(x, y) = kernel(d2, forward ? wide : narrow);
    }
  }
  return AdjacencyMatrix(std::move(w), std::move(positions));
}

AdjacencyMatrix gen_square_drift_annulus(const KernelSpec& spec, const AnnulusSpec& annulus) {
  check_kernel(spec);
  if (!(annulus.r_inner > 0.0 && annulus.r_inner < annulus.r_outer))
    throw InvalidArgument(fmt::format("annulus radii must satisfy 0 < r_inner < r_outer, got {} and {}",
                                      annulus.r_inner, annulus.r_outer));
  if (!(annulus.drift >= 1.0))
    throw InvalidArgument(fmt::format("annulus drift must be >= 1, got {}", annulus.drift));
  if (spec.n < 0 || annulus.n < 0 || spec.n + annulus.n < 1)
    throw InvalidArgument("square and annulus point counts must be nonnegative with a positive total");

  Rng rng(spec.seed);
  const Index n = spec.n + annulus.n;
  RealMatrix positions(n, 2);
  for (Index i = 0; i < spec.n; ++i) {
    positions(i, 0) = rng.uniform();
    positions(i, 1) = rng.uniform();
  }
  const double r2_lo = annulus.r_inner * annulus.r_inner;
  const double r2_hi = annulus.r_outer * annulus.r_outer;
  for (Index i = spec.n; i < n; ++i) {
    const double r = std::sqrt(rng.uniform(r2_lo, r2_hi));
    const double theta = rng.uniform(0.0, kTwoPi);
    positions(i, 0) = annulus.center_x + r * std::cos(theta);
    positions(i, 1) = annulus.center_y + r * std::sin(theta);
  }

  std::vector<int> in_band(static_cast<std::size_t>(n));
  std::vector<double> polar_angle(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const double dx = positions(i, 0) - annulus.center_x;
    const double dy = positions(i, 1) - annulus.center_y;
    const double r = std::hypot(dx, dy);
    in_band[static_cast<std::size_t>(i)] = (r >= annulus.r_inner && r <= annulus.r_outer) ? 1 : 0;
    polar_angle[static_cast<std::size_t>(i)] = std::atan2(dy, dx);
  }

  const double narrow = spec.sigma * spec.sigma;
  RealMatrix w(n, n);
  for (Index x = 0; x < n; ++x) {
    const auto ux = static_cast<std::size_t>(x);
    for (Index y = 0; y < n; ++y) {
      const auto uy = static_cast<std::size_t>(y);
      double bandwidth = positions(x, 0) < positions(y, 0) ? spec.drift_factor * narrow : narrow;
      if (in_band[ux] && in_band[uy] && signed_arc(polar_angle[ux], polar_angle[uy]) >= 0.0)
        bandwidth *= annulus.drift;
      w(x, y) = kernel((positions.row(x) - positions.row(y)).squaredNorm(), bandwidth);
    }
  }
  return AdjacencyMatrix(std::move(w), std::move(positions), std::move(in_band));
}

AdjacencyMatrix make_absorbing(const AdjacencyMatrix& w, Index node) {
  if (node < 0 || node >= w.size())
    throw IndexError(fmt::format("node {} out of range [0, {})", node, w.size()));
  RealMatrix weights = w.weights();
  weights.row(node).setZero();
  return w.with_weights(std::move(weights));
}

}  // namespace maglap
