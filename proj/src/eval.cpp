#include "maglap/eval.hpp"

#include "maglap/embed.hpp"
#include "maglap/error.hpp"
#include "maglap/random.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <thread>

namespace maglap {

namespace {

constexpr int kMaxLloydIterations = 300;

Index nearest_center(const RealMatrix& points, Index i, const RealMatrix& centers, double* distance) {
  Index best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Index c = 0; c < centers.rows(); ++c) {
    const double d = (points.row(i) - centers.row(c)).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  if (distance) *distance = best_d;
  return best;
}

RealMatrix seed_plus_plus(const RealMatrix& points, int k, Rng& rng) {
  const Index n = points.rows();
  RealMatrix centers(k, points.cols());
  centers.row(0) = points.row(static_cast<Index>(rng.below(static_cast<std::uint64_t>(n))));
  RealVector d2(n);
  for (Index i = 0; i < n; ++i) d2(i) = (points.row(i) - centers.row(0)).squaredNorm();
  for (int c = 1; c < k; ++c) {
    const double total = d2.sum();
    Index pick = 0;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      pick = n - 1;
      for (Index i = 0; i < n; ++i) {
        acc += d2(i);
        if (acc > target && d2(i) > 0.0) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    }
    centers.row(c) = points.row(pick);
    for (Index i = 0; i < n; ++i) d2(i) = std::min(d2(i), (points.row(i) - centers.row(c)).squaredNorm());
  }
  return centers;
}

KMeansResult lloyd(const RealMatrix& points, RealMatrix centers) {
  const Index n = points.rows();
  const Index k = centers.rows();
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (int iter = 0; iter < kMaxLloydIterations; ++iter) {
    bool changed = false;
    for (Index i = 0; i < n; ++i) {
      const int c = static_cast<int>(nearest_center(points, i, centers, nullptr));
      if (labels[static_cast<std::size_t>(i)] != c) {
        labels[static_cast<std::size_t>(i)] = c;
        changed = true;
      }
    }
    if (!changed) break;

    RealMatrix sums = RealMatrix::Zero(k, points.cols());
    std::vector<Index> counts(static_cast<std::size_t>(k), 0);
    for (Index i = 0; i < n; ++i) {
      sums.row(labels[static_cast<std::size_t>(i)]) += points.row(i);
      ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
    }
    for (Index c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        centers.row(c) = sums.row(c) / static_cast<double>(counts[static_cast<std::size_t>(c)]);
        continue;
      }
      // empty cluster: restart it at the worst-served point
      Index worst = 0;
      double worst_d = -1.0;
      for (Index i = 0; i < n; ++i) {
        const double d =
            (points.row(i) - centers.row(labels[static_cast<std::size_t>(i)])).squaredNorm();
        if (d > worst_d) {
          worst_d = d;
          worst = i;
        }
      }
      centers.row(c) = points.row(worst);
    }
  }
  double wcss = 0.0;
  for (Index i = 0; i < n; ++i) {
    double d = 0.0;
    labels[static_cast<std::size_t>(i)] = static_cast<int>(nearest_center(points, i, centers, &d));
    wcss += d;
  }
  return KMeansResult{std::move(labels), wcss};
}

std::vector<int> dense_ids(const std::vector<int>& labels, std::map<int, int>& ids) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels) {
    auto [it, inserted] = ids.try_emplace(l, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

KMeansResult kmeans(const RealMatrix& points, int k, std::uint64_t seed, int restarts) {
  if (k < 1) throw InvalidArgument(fmt::format("k must be positive, got {}", k));
  if (k > points.rows())
    throw InvalidArgument(fmt::format("k = {} exceeds the number of points {}", k, points.rows()));
  if (restarts < 1) throw InvalidArgument(fmt::format("restarts must be positive, got {}", restarts));
  Rng rng(seed);
  KMeansResult best;
  best.wcss = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    KMeansResult run = lloyd(points, seed_plus_plus(points, k, rng));
    if (run.wcss < best.wcss) best = std::move(run);
  }
  return best;
}

double cluster_accuracy(const std::vector<int>& pred, const std::vector<int>& truth) {
  if (pred.size() != truth.size())
    throw InvalidArgument(fmt::format("label length mismatch: {} vs {}", pred.size(), truth.size()));
  if (pred.empty()) throw InvalidArgument("cluster_accuracy needs at least one label");
  std::map<int, int> pred_ids;
  std::map<int, int> truth_ids;
  const auto p = dense_ids(pred, pred_ids);
  const auto t = dense_ids(truth, truth_ids);
  const std::size_t m = std::max(pred_ids.size(), truth_ids.size());
  if (m > 8) throw InvalidArgument(fmt::format("cluster_accuracy supports at most 8 labels, got {}", m));

  std::vector<std::vector<int>> confusion(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < p.size(); ++i) ++confusion[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(t[i])];
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  int best = 0;
  do {
    int hits = 0;
    for (std::size_t r = 0; r < m; ++r) hits += confusion[r][perm[r]];
    best = std::max(best, hits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(pred.size());
}

TransitionMatrix pipeline_transition(const AdjacencyMatrix& w, double alpha) {
  if (w.zero_rows().empty()) return to_transition(w);
  return add_teleportation(w, alpha);
}

SpectralDecomposition normalized_spectrum(const MagneticLaplacian& m) {
  return hermitian_eig(degree_normalize(m).laplacian);
}

RealMatrix clustering_features(const SpectralDecomposition& decomp, Index a, Index b) {
  const Embedding re = planar(decomp, a, b, Part::real);
  const Embedding im = planar(decomp, a, b, Part::imag);
  RealMatrix features(re.size(), 4);
  features.col(0) = re.coordinates.col(0);
  features.col(1) = im.coordinates.col(0);
  features.col(2) = re.coordinates.col(1);
  features.col(3) = im.coordinates.col(1);
  return features;
}

SweepResult random_g_sweep(const AdjacencyMatrix& graph, const SweepOptions& options) {
  if (!graph.labels()) throw InvalidArgument("random_g_sweep needs a graph with true labels");
  if (options.trials < 1) throw InvalidArgument(fmt::format("trials must be positive, got {}", options.trials));
  if (!(options.g_max > 0.0)) throw InvalidArgument(fmt::format("g_max must be positive, got {}", options.g_max));

  const std::vector<int>& truth = *graph.labels();
  const int k = static_cast<int>(std::set<int>(truth.begin(), truth.end()).size());
  const TransitionMatrix p = pipeline_transition(graph);
  const auto [ua, ub] = default_embedding_indices(Construction::unnormalized);
  const auto [ma, mb] = default_embedding_indices(Construction::markov);

  SweepResult result{std::vector<SweepRecord>(static_cast<std::size_t>(options.trials)), options.seed,
                     options.trials};

  auto run_trial = [&](int trial) {
    const std::uint64_t trial_seed = derive_seed(options.seed, static_cast<std::uint64_t>(trial));
    Rng rng(trial_seed);
    double g = 0.0;
    while (g <= 0.0) g = rng.uniform(0.0, options.g_max);

    const SpectralDecomposition plain = normalized_spectrum(build_unnormalized(graph, g));
    const SpectralDecomposition markov = normalized_spectrum(build_markov(p, rescale_g(g, p), options.t));
    const auto plain_labels =
        kmeans(clustering_features(plain, ua, ub), k, derive_seed(trial_seed, 1), options.kmeans_restarts);
    const auto markov_labels =
        kmeans(clustering_features(markov, ma, mb), k, derive_seed(trial_seed, 2), options.kmeans_restarts);
    result.records[static_cast<std::size_t>(trial)] =
        SweepRecord{trial, g, cluster_accuracy(plain_labels.labels, truth),
                    cluster_accuracy(markov_labels.labels, truth)};
  };

  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, options.trials);
  if (threads == 1) {
    for (int trial = 0; trial < options.trials; ++trial) run_trial(trial);
    return result;
  }

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> workers;
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (int trial = next++; trial < options.trials && !failed; trial = next++) {
        try {
          run_trial(trial);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
  return result;
}

double pearson(const RealVector& x, const RealVector& y) {
  if (x.size() != y.size()) throw InvalidArgument("pearson: length mismatch");
  const RealVector dx = x.array() - x.mean();
  const RealVector dy = y.array() - y.mean();
  const double sx = dx.norm();
  const double sy = dy.norm();
  if (sx == 0.0 || sy == 0.0) return 0.0;
  return dx.dot(dy) / (sx * sy);
}

SinusoidFit sinusoid_fit(const RealVector& values, const RealVector& angles, int max_freq, int grid) {
  if (values.size() != angles.size())
    throw InvalidArgument(fmt::format("sinusoid_fit length mismatch: {} vs {}", values.size(), angles.size()));
  if (values.size() < 4) throw InvalidArgument("sinusoid_fit needs at least 4 samples");
  if (max_freq < 1 || grid < 1) throw InvalidArgument("sinusoid_fit needs max_freq >= 1 and grid >= 1");

  SinusoidFit best;
  if ((values.array() == values(0)).all()) return best;
  double best_corr = -2.0;
  RealVector wave(values.size());
  for (int f = 1; f <= max_freq; ++f) {
    for (int s = 0; s < grid; ++s) {
      const double psi = 2.0 * std::numbers::pi * s / grid;
      for (Index i = 0; i < values.size(); ++i) wave(i) = std::sin(f * angles(i) + psi);
      // signed maximum over the full circle equals the |corr| maximum
      const double corr = pearson(values, wave);
      if (corr > best_corr) {
        best_corr = corr;
        best = SinusoidFit{f, psi, std::clamp(corr, 0.0, 1.0)};
      }
    }
  }
  return best;
}

std::vector<ConvergencePoint> theorem_convergence(const TransitionMatrix& p, double g,
                                                  const std::vector<int>& t_list) {
  const TheoremPrediction prediction = theorem1_prediction(p, g);
  std::vector<ConvergencePoint> out;
  out.reserve(t_list.size());
  for (int t : t_list) {
    const SpectralDecomposition decomp = normalized_spectrum(build_markov(p, g, t));
    out.push_back({t, align_phase(decomp.vector(0), prediction.phi).residual});
  }
  return out;
}

}  // namespace maglap
