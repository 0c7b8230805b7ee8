#pragma once

#include "maglap/linalg.hpp"
#include "maglap/magnetic.hpp"
#include "maglap/markov.hpp"

#include <cstdint>
#include <vector>

namespace maglap {

struct KMeansResult {
  std::vector<int> labels;
  double wcss = 0.0;  ///< within-cluster sum of squares
};

/// Lloyd's algorithm with k-means++ seeding; rows of `points` are samples.
/// Keeps the best of `restarts` runs by WCSS.
KMeansResult kmeans(const RealMatrix& points, int k, std::uint64_t seed, int restarts = 10);

/// Best fraction of agreeing labels over all relabelings (at most 8 labels).
double cluster_accuracy(const std::vector<int>& pred, const std::vector<int>& truth);

/// Transition matrix used by the experiment pipelines: plain row
/// normalization, or teleportation with `alpha` when W has sink rows.
TransitionMatrix pipeline_transition(const AdjacencyMatrix& w, double alpha = 0.1);

/// Eigendecomposition of D^{-1/2} L D^{-1/2}.
SpectralDecomposition normalized_spectrum(const MagneticLaplacian& m);

/// Per node (Re phi_a, Im phi_a, Re phi_b, Im phi_b).
RealMatrix clustering_features(const SpectralDecomposition& decomp, Index a, Index b);

struct SweepRecord {
  int trial = 0;
  double g = 0.0;
  double accuracy_unnormalized = 0.0;
  double accuracy_markov = 0.0;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::uint64_t seed = 0;
  int trials = 0;
};

struct SweepOptions {
  int trials = 100;
  double g_max = 0.25;
  int t = 1;
  std::uint64_t seed = 0;
  int kmeans_restarts = 10;
  /// Worker threads; 0 picks the hardware concurrency.
  int threads = 0;
};

/// Clusters both pipelines for g ~ U(0, g_max) per trial and scores them
/// against the graph's labels. Results do not depend on `threads`.
SweepResult random_g_sweep(const AdjacencyMatrix& graph, const SweepOptions& options);

struct SinusoidFit {
  int frequency = 1;
  double phase_shift = 0.0;
  double correlation = 0.0;  ///< |Pearson|, in [0, 1]
};

/// Best |corr(values, sin(f * angles + psi))| over f in 1..max_freq and a
/// uniform grid of `grid` phase shifts on [0, 2 pi).
SinusoidFit sinusoid_fit(const RealVector& values, const RealVector& angles, int max_freq = 8,
                         int grid = 256);

double pearson(const RealVector& x, const RealVector& y);

struct ConvergencePoint {
  int t = 1;
  double residual = 0.0;
};

/// Aligned distance between the principal eigenvector of the
/// degree-normalized L^(t) and the predicted limit, for each t.
std::vector<ConvergencePoint> theorem_convergence(const TransitionMatrix& p, double g,
                                                  const std::vector<int>& t_list);

}  // namespace maglap
