#pragma once

#include "maglap/markov.hpp"

#include <cstdint>
#include <numbers>
#include <vector>

namespace maglap {

/// Clusters joined into directed cycles.
///
/// Within a cluster each unordered pair gets an undirected unit edge with
/// probability p_in. For consecutive clusters (A, B) of a cycle, each cross
/// pair (a, b) gets, with probability p_out, one directed unit edge: a -> b
/// with probability p_clockwise, otherwise b -> a.
struct ClusterCycleSpec {
  std::vector<int> sizes;
  std::vector<std::vector<int>> cycles;
  double p_in = 0.5;
  double p_out = 0.5;
  double p_clockwise = 0.9;
  std::uint64_t seed = 0;
};

/// Asymmetric Gaussian kernel: bandwidth drift_factor * sigma^2 in the
/// favoured direction, sigma^2 otherwise.
struct KernelSpec {
  int n = 200;
  double sigma = 0.2;
  double drift_factor = 5.0;
  std::uint64_t seed = 0;
};

struct AnnulusSpec {
  double center_x = 0.5;
  double center_y = 0.5;
  double r_inner = 0.2;
  double r_outer = 0.3;
  int n = 100;
  /// Bandwidth multiplier for counterclockwise pairs inside the band.
  double drift = 5.0;
};

/// Mixture weights and bump shape of the non-uniform circle density.
inline constexpr double kCircleUniformWeight = 0.7;
inline constexpr double kCircleBumpCenter = std::numbers::pi / 2.0;
inline constexpr double kCircleBumpWidth = 0.5;

ClusterCycleSpec three_cluster_spec(std::uint64_t seed, int cluster_size = 50);
ClusterCycleSpec bow_tie_spec(std::uint64_t seed, int cluster_size = 50);

AdjacencyMatrix gen_cluster_cycle(const ClusterCycleSpec& spec);

/// Points on the unit circle sorted by angle; positions are (cos, sin).
/// W(x, y) uses the wide bandwidth when the signed shorter arc from x to y
/// is nonnegative (counterclockwise).
AdjacencyMatrix gen_circle_drift(const KernelSpec& spec);

/// spec.n uniform points on the unit square followed by annulus.n points
/// uniform on the annulus band. Drift is left to right (factor
/// spec.drift_factor when x_1 < y_1). Labels flag membership in the band.
AdjacencyMatrix gen_square_drift_annulus(const KernelSpec& spec, const AnnulusSpec& annulus);

/// Zeroes the out-edges of `node`.
AdjacencyMatrix make_absorbing(const AdjacencyMatrix& w, Index node);

}  // namespace maglap
