#include "maglap/datasets.hpp"
#include "maglap/embed.hpp"
#include "maglap/error.hpp"
#include "maglap/eval.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

using namespace maglap;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wcss_of(const RealMatrix& x, const std::vector<int>& labels, int k) {
  double total = 0.0;
  for (int c = 0; c < k; ++c) {
    RealVector mean = RealVector::Zero(x.cols());
    int count = 0;
    for (Index i = 0; i < x.rows(); ++i)
      if (labels[static_cast<std::size_t>(i)] == c) {
        mean += x.row(i).transpose();
        ++count;
      }
    if (count == 0) continue;
    mean /= count;
    for (Index i = 0; i < x.rows(); ++i)
      if (labels[static_cast<std::size_t>(i)] == c) total += (x.row(i).transpose() - mean).squaredNorm();
  }
  return total;
}

/// Three cliques on a path, joined by perfect matchings; self-loops on the
/// end cliques make every degree equal so P = W / deg is symmetric.
AdjacencyMatrix regular_three_blobs(int m) {
  const Index n = 3 * m;
  RealMatrix w = RealMatrix::Zero(n, n);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < m; ++i) {
      labels[static_cast<std::size_t>(c * m + i)] = c;
      for (int j = 0; j < m; ++j)
        if (i != j) w(c * m + i, c * m + j) = 1.0;
    }
  for (int i = 0; i < m; ++i) {
    w(i, m + i) = w(m + i, i) = 1.0;
    w(m + i, 2 * m + i) = w(2 * m + i, m + i) = 1.0;
    w(i, i) = 1.0;
    w(2 * m + i, 2 * m + i) = 1.0;
  }
  return AdjacencyMatrix(w, std::nullopt, labels);
}

}  // namespace

TEST_CASE("kmeans on separated groups") {
  RealMatrix x(9, 2);
  x << 0, 0, 0, 0, 0, 0, 10, 10, 10, 10, 10, 10, -10, 10, -10, 10, -10, 10;
  const auto r = kmeans(x, 3, 1);
  CHECK(cluster_accuracy(r.labels, {0, 0, 0, 1, 1, 1, 2, 2, 2}) == 1.0);
  CHECK(r.wcss == 0.0);
}

TEST_CASE("kmeans with k = n") {
  Rng rng(2);
  RealMatrix x(6, 3);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 3; ++j) x(i, j) = rng.uniform(-1, 1);
  const auto r = kmeans(x, 6, 4);
  CHECK(std::set<int>(r.labels.begin(), r.labels.end()).size() == 6);
  CHECK(r.wcss < 1e-15);
}

TEST_CASE("kmeans matches exhaustive partition search") {
  RealMatrix line(4, 1);
  line << 0, 1, 10, 11;
  const auto r = kmeans(line, 2, 9);
  CHECK(r.labels[0] == r.labels[1]);
  CHECK(r.labels[2] == r.labels[3]);
  CHECK(r.labels[0] != r.labels[2]);

  Rng rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    RealMatrix x(8, 2);
    for (Index i = 0; i < 8; ++i) {
      const double shift = i < 4 ? 0.0 : 3.0;
      x(i, 0) = shift + rng.uniform(-1, 1);
      x(i, 1) = rng.uniform(-1, 1);
    }
    // every nonempty 2-partition, first point fixed to group 0
    double best = INFINITY;
    for (int mask = 0; mask < 128; ++mask) {
      std::vector<int> labels(8, 0);
      for (int i = 1; i < 8; ++i) labels[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1;
      if (std::count(labels.begin(), labels.end(), 1) == 0) continue;
      best = std::min(best, wcss_of(x, labels, 2));
    }
    const auto fit = kmeans(x, 2, static_cast<std::uint64_t>(trial));
    CHECK(fit.wcss == doctest::Approx(best).epsilon(1e-12));
    CHECK(wcss_of(x, fit.labels, 2) == doctest::Approx(fit.wcss).epsilon(1e-12));
  }
}

TEST_CASE("kmeans determinism and validation") {
  Rng rng(3);
  RealMatrix x(30, 2);
  for (Index i = 0; i < 30; ++i) x.row(i) << rng.uniform(0, 1), rng.uniform(0, 1);
  const auto a = kmeans(x, 4, 17);
  const auto b = kmeans(x, 4, 17);
  CHECK(a.labels == b.labels);
  CHECK(a.wcss == b.wcss);
  CHECK_THROWS_AS(kmeans(x, 31, 1), InvalidArgument);
  CHECK_THROWS_AS(kmeans(x, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(kmeans(x, 2, 1, 0), InvalidArgument);
}

TEST_CASE("cluster_accuracy") {
  const std::vector<int> truth{0, 0, 1, 1, 2, 2, 2};
  CHECK(cluster_accuracy(truth, truth) == 1.0);
  CHECK(cluster_accuracy({5, 5, 9, 9, 1, 1, 1}, truth) == 1.0);
  CHECK(cluster_accuracy({0, 1, 1, 1}, {0, 0, 1, 1}) == 0.75);
  CHECK(cluster_accuracy({0, 0, 0, 0}, {0, 0, 1, 1}) == 0.5);

  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> p(25), t(25);
    for (std::size_t i = 0; i < 25; ++i) {
      p[i] = static_cast<int>(rng.below(4));
      t[i] = static_cast<int>(rng.below(4));
    }
    const double acc = cluster_accuracy(p, t);
    CHECK(acc >= 0.0);
    CHECK(acc <= 1.0);
    CHECK(cluster_accuracy(t, p) == acc);
    std::vector<int> relabeled(25);
    for (std::size_t i = 0; i < 25; ++i) relabeled[i] = (p[i] * 3 + 1) % 4;
    CHECK(cluster_accuracy(relabeled, t) == acc);
  }
  CHECK_THROWS_AS(cluster_accuracy({0, 1}, {0}), InvalidArgument);
  CHECK_THROWS_AS(cluster_accuracy({}, {}), InvalidArgument);
  CHECK_THROWS_AS(cluster_accuracy({0, 1, 2, 3, 4, 5, 6, 7, 8}, {0, 0, 0, 0, 0, 0, 0, 0, 0}), InvalidArgument);
}

TEST_CASE("pipeline_transition") {
  const auto w = gen_cluster_cycle(three_cluster_spec(1, 10));
  CHECK(pipeline_transition(w).matrix() == to_transition(w).matrix());
  CHECK(pipeline_transition(w).teleport_alpha() == 0.0);
  const auto abs = make_absorbing(w, 3);
  const auto p = pipeline_transition(abs);
  CHECK(p.teleport_alpha() == 0.1);
  CHECK(p.matrix() == add_teleportation(abs, 0.1).matrix());
}

TEST_CASE("clustering_features") {
  SpectralDecomposition d{RealVector::Zero(2), Eigen::MatrixXcd(2, 2)};
  d.eigenvectors << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(7, 8);
  RealMatrix expected(2, 4);
  expected << 1, 2, 3, 4, 5, 6, 7, 8;
  CHECK(clustering_features(d, 0, 1) == expected);
  CHECK_THROWS_AS(clustering_features(d, 0, 2), IndexError);
}

TEST_CASE("random_g_sweep") {
  const auto w = gen_cluster_cycle(three_cluster_spec(3, 15));
  SweepOptions options;
  options.trials = 8;
  options.seed = 99;
  options.kmeans_restarts = 3;

  SUBCASE("records are complete and bounded") {
    options.threads = 1;
    const auto r = random_g_sweep(w, options);
    REQUIRE(r.records.size() == 8);
    CHECK(r.trials == 8);
    CHECK(r.seed == 99);
    for (int i = 0; i < 8; ++i) {
      const auto& rec = r.records[static_cast<std::size_t>(i)];
      CHECK(rec.trial == i);
      CHECK(rec.g > 0.0);
      CHECK(rec.g < 0.25);
      CHECK(rec.accuracy_unnormalized >= 1.0 / 3.0);
      CHECK(rec.accuracy_unnormalized <= 1.0);
      CHECK(rec.accuracy_markov >= 1.0 / 3.0);
      CHECK(rec.accuracy_markov <= 1.0);
    }
  }
  SUBCASE("thread count does not change results") {
    options.threads = 1;
    const auto serial = random_g_sweep(w, options);
    options.threads = 4;
    const auto parallel = random_g_sweep(w, options);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(serial.records[i].g == parallel.records[i].g);
      CHECK(serial.records[i].accuracy_unnormalized == parallel.records[i].accuracy_unnormalized);
      CHECK(serial.records[i].accuracy_markov == parallel.records[i].accuracy_markov);
    }
  }
  SUBCASE("single trial is reproducible") {
    options.trials = 1;
    const auto a = random_g_sweep(w, options);
    const auto b = random_g_sweep(w, options);
    CHECK(a.records[0].g == b.records[0].g);
    CHECK(a.records[0].accuracy_markov == b.records[0].accuracy_markov);
    CHECK(a.records[0].accuracy_unnormalized == b.records[0].accuracy_unnormalized);
  }
  SUBCASE("symmetric input makes g irrelevant") {
    options.threads = 2;
    const auto r = random_g_sweep(regular_three_blobs(12), options);
    for (const auto& rec : r.records) {
      CHECK(rec.accuracy_unnormalized == r.records[0].accuracy_unnormalized);
      CHECK(rec.accuracy_markov == r.records[0].accuracy_markov);
      CHECK(rec.accuracy_markov == rec.accuracy_unnormalized);
    }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(random_g_sweep(AdjacencyMatrix(w.weights()), options), InvalidArgument);
    options.trials = 0;
    CHECK_THROWS_AS(random_g_sweep(w, options), InvalidArgument);
    options.trials = 2;
    options.g_max = 0.0;
    CHECK_THROWS_AS(random_g_sweep(w, options), InvalidArgument);
  }
}

TEST_CASE("pearson") {
  RealVector x(4), y(4);
  x << 1, 2, 3, 4;
  y << 2, 4, 6, 8;
  CHECK(pearson(x, y) == doctest::Approx(1.0));
  CHECK(pearson(x, -y) == doctest::Approx(-1.0));
  y << 1, 3, 2, 4;
  CHECK(pearson(x, y) == doctest::Approx(0.8));
  CHECK(pearson(x, RealVector::Constant(4, 2.0)) == 0.0);
  CHECK_THROWS_AS(pearson(x, RealVector::Ones(3)), InvalidArgument);
}

TEST_CASE("sinusoid_fit") {
  const int n = 200;
  Rng rng(8);
  RealVector theta(n);
  for (int i = 0; i < n; ++i) theta(i) = rng.uniform(0.0, kTwoPi);

  const RealVector s2 = (2.0 * theta.array()).sin();
  const auto f2 = sinusoid_fit(s2, theta);
  CHECK(f2.frequency == 2);
  CHECK(f2.correlation >= 0.999);

  const RealVector c3 = (3.0 * theta.array()).cos();
  const auto f3 = sinusoid_fit(c3, theta);
  CHECK(f3.frequency == 3);
  CHECK(f3.phase_shift == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  CHECK(f3.correlation >= 0.999);

  const RealVector neg = -(theta.array() + 0.4).sin();
  CHECK(sinusoid_fit(neg, theta).correlation >= 0.999);

  double worst = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    RealVector noise(n);
    for (int i = 0; i < n; ++i) noise(i) = rng.normal();
    const auto fit = sinusoid_fit(noise, theta);
    CHECK(fit.correlation >= 0.0);
    CHECK(fit.correlation <= 1.0);
    worst = std::max(worst, fit.correlation);
  }
  CHECK(worst <= 0.35);

  CHECK(sinusoid_fit(RealVector::Constant(n, 1.5), theta).correlation == 0.0);
  CHECK_THROWS_AS(sinusoid_fit(s2, RealVector::Zero(n - 1)), InvalidArgument);
  CHECK_THROWS_AS(sinusoid_fit(RealVector::Zero(3), RealVector::Zero(3)), InvalidArgument);
}

TEST_CASE("theorem_convergence") {
  RealMatrix p(3, 3);
  p << 0.5, 0.25, 0.25, 0.25, 0.5, 0.25, 0.25, 0.25, 0.5;
  const auto flat = theorem_convergence(TransitionMatrix(p), 0.3, {1});
  CHECK(flat[0].residual <= 1e-8);

  Rng rng(10);
  const auto q = add_teleportation(TransitionMatrix(oracle::random_stochastic(12, rng, 0.3)), 0.1);
  const double g = rescale_g(0.04, q);
  const auto curve = theorem_convergence(q, g, {1, 3, 40});
  REQUIRE(curve.size() == 3);
  CHECK(curve[0].t == 1);
  CHECK(curve[2].t == 40);
  const auto pred = theorem1_prediction(q, g);
  const auto phi1 = hermitian_eig(degree_normalize(build_markov(q, g, 1)).laplacian).vector(0);
  CHECK(curve[0].residual == align_phase(phi1, pred.phi).residual);
  CHECK(curve[2].residual < curve[0].residual);
  CHECK(curve[2].residual <= 1e-6);
}
