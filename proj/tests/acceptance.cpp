// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status is nonzero when any selected criterion fails.

#include "maglap/datasets.hpp"
#include "maglap/embed.hpp"
#include "maglap/eval.hpp"
#include "maglap/experiment.hpp"
#include "maglap/graph_io.hpp"
#include "maglap/magnetic.hpp"
#include "maglap/markov.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace maglap;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr double kDefaultG = 0.04;
constexpr double kAlpha = 0.1;

struct Outcome {
  bool pass;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

/// Linear-interpolation percentile (q in [0, 100]).
double percentile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q / 100.0 * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

// 1. Hermitian and positive semidefinite on random graphs.
Outcome hermiticity_psd() {
  Timer timer;
  Rng rng(derive_seed(kSeed, 101));
  double worst_min = INFINITY;
  int asymmetric = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.below(63));
    const double g = rng.uniform(0.0, 0.5);
    const int t = 1 + static_cast<int>(rng.below(5));
    const AdjacencyMatrix w(oracle::random_weights(n, rng, rng.uniform(0.05, 0.6)));
    const MagneticLaplacian plain = build_unnormalized(w, g);
    const MagneticLaplacian markov = build_markov(to_transition(w), g, t);
    for (const MagneticLaplacian* m : {&plain, &markov}) {
      for (const auto& l : {m->laplacian, degree_normalize(*m).laplacian}) {
        if (!(l.matrix() == l.matrix().adjoint())) ++asymmetric;
        worst_min = std::min(worst_min, hermitian_eig(l).eigenvalues(0));
      }
    }
  }
  const double secs = timer.seconds();
  return {asymmetric == 0 && worst_min >= -1e-10 && secs < 30.0,
          fmt("non-Hermitian=%d, min eigenvalue=%.3e (>= -1e-10), %.1fs (< 30s)", asymmetric, worst_min, secs)};
}

// 2. g = 0 gives the symmetrized combinatorial Laplacian.
Outcome zero_g_reduction() {
  Rng rng(derive_seed(kSeed, 102));
  double entry_gap = 0.0;
  double spectrum_gap = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.below(40));
    const RealMatrix w = oracle::random_weights(n, rng, rng.uniform(0.1, 0.6));
    const RealMatrix s = 0.5 * (w + w.transpose());
    const RealMatrix lap = RealMatrix(s.rowwise().sum().asDiagonal()) - s;
    const auto l = build_unnormalized(AdjacencyMatrix(w), 0.0).laplacian;
    entry_gap = std::max(entry_gap, (l.matrix() - lap.cast<Complex>()).cwiseAbs().maxCoeff());
    const RealVector ev = hermitian_eig(l).eigenvalues;
    spectrum_gap = std::max(spectrum_gap, (ev - oracle::jacobi_eigenvalues(lap)).cwiseAbs().maxCoeff());
  }
  return {entry_gap <= 1e-10 && spectrum_gap <= 1e-10,
          fmt("max entry gap=%.3e, max eigenvalue gap=%.3e (<= 1e-10)", entry_gap, spectrum_gap)};
}

// 3. Principal eigenvector converges to the predicted limit.
Outcome theorem_limit() {
  Timer timer;
  const AdjacencyMatrix w = gen_cluster_cycle(three_cluster_spec(kSeed));
  const TransitionMatrix p = add_teleportation(to_transition(w), kAlpha);
  const double g = rescale_g(kDefaultG, p);
  const auto curve = theorem_convergence(p, g, {1, 20});
  const double r1 = curve[0].residual;
  const double r20 = curve[1].residual;
  const double secs = timer.seconds();
  return {r20 < 1e-6 && r20 < r1 && secs < 10.0,
          fmt("residual t=1: %.3e, t=20: %.3e (< 1e-6 and < t=1), %.1fs (< 10s)", r1, r20, secs)};
}

// 4. Markov normalization is more stable under random g.
Outcome random_g_stability() {
  Timer timer;
  const AdjacencyMatrix w = gen_cluster_cycle(three_cluster_spec(kSeed));
  SweepOptions options;
  options.trials = 100;
  options.g_max = 0.25;
  options.t = 1;
  options.seed = kSeed;
  const SweepResult r = random_g_sweep(w, options);
  double plain = 0.0, markov = 0.0;
  int perfect = 0;
  for (const auto& rec : r.records) {
    plain += rec.accuracy_unnormalized / 100.0;
    markov += rec.accuracy_markov / 100.0;
    perfect += rec.accuracy_markov == 1.0;
  }
  const double secs = timer.seconds();
  return {markov - plain >= 0.05 && perfect >= 70 && secs < 120.0,
          fmt("mean markov=%.4f, mean unnormalized=%.4f, gap=%.4f (>= 0.05), markov perfect in %d/100 (>= 70), "
              "%.1fs (< 120s)",
              markov, plain, markov - plain, perfect, secs)};
}

// 5. Mixing times of the three-cluster and bow-tie chains.
Outcome mixing_times() {
  const auto three = mixing_time(to_transition(gen_cluster_cycle(three_cluster_spec(kSeed))));
  const auto bow = mixing_time(to_transition(gen_cluster_cycle(bow_tie_spec(kSeed))));
  const bool pass = three && bow && *three > 1 && *bow > 6;
  return {pass, fmt("three-cluster=%d (> 1), bow-tie=%d (> 6)", three ? *three : -1, bow ? *bow : -1)};
}

// 6. Sinusoid recovery on the non-uniform circle.
Outcome circle_sinusoids() {
  Timer timer;
  const AdjacencyMatrix w = gen_circle_drift(KernelSpec{200, 0.2, 5.0, kSeed});
  const TransitionMatrix p = to_transition(w);
  const auto plain = normalized_spectrum(build_unnormalized(w, kDefaultG));
  const auto markov = normalized_spectrum(build_markov(p, rescale_g(kDefaultG, p), 1));
  RealVector angles(w.size());
  for (Index i = 0; i < w.size(); ++i)
    angles(i) = wrapped_phase(Complex((*w.positions())(i, 0), (*w.positions())(i, 1)));
  bool pass = true;
  std::string detail;
  for (Index k : {1, 3, 5}) {
    const double cm = sinusoid_fit(markov.eigenvectors.col(k).real(), angles).correlation;
    const double cu = sinusoid_fit(plain.eigenvectors.col(k).real(), angles).correlation;
    pass = pass && cm >= 0.9 && cm > cu;
    detail += fmt("phi%d markov=%.4f unnormalized=%.4f; ", static_cast<int>(k), cm, cu);
  }
  const double secs = timer.seconds();
  pass = pass && secs < 10.0;
  return {pass, detail + fmt("(each markov >= 0.9 and > unnormalized), %.1fs (< 10s)", secs)};
}

// 7. Trivial principal eigenvector for symmetric inputs.
Outcome trivial_eigenvector() {
  Rng rng(derive_seed(kSeed, 107));
  double worst_value = 0.0;
  double worst_vector = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 3 + static_cast<Index>(rng.below(40));
    RealMatrix a = oracle::random_weights(n, rng, rng.uniform(0.05, 0.4));
    for (Index i = 0; i < n; ++i) a(i, (i + 1) % n) += 0.5;  // a ring keeps it connected
    const AdjacencyMatrix w(a + a.transpose());
    const int t = 1 + static_cast<int>(rng.below(5));
    const MagneticLaplacian m = build_markov(to_transition(w), 0.0, t);
    const auto d = normalized_spectrum(m);
    const ComplexVector root = m.degree.array().sqrt().matrix().normalized().cast<Complex>();
    worst_value = std::max(worst_value, d.eigenvalues(0));
    worst_vector = std::max(worst_vector, align_phase(d.vector(0), root).residual);
  }
  return {worst_value <= 1e-10 && worst_vector <= 1e-8,
          fmt("max smallest eigenvalue=%.3e (<= 1e-10), max distance to sqrt(D)=%.3e (<= 1e-8)", worst_value,
              worst_vector)};
}

// 8. Power iteration agrees with a dense eigensolve.
Outcome pagerank_oracle() {
  Rng rng(derive_seed(kSeed, 108));
  double worst = 0.0;
  int checked = 0;
  while (checked < 50) {
    const Index n = 2 + static_cast<Index>(rng.below(31));
    TransitionMatrix p(oracle::random_stochastic(n, rng, rng.uniform(0.1, 0.6)));
    // half the cases are ergodic on their own, the rest through teleportation
    if (checked % 2 == 1) p = add_teleportation(p, rng.uniform(0.01, 0.3));
    if (!is_ergodic(p, 4 * static_cast<int>(n * n))) continue;
    const double gap = (pagerank(p).h - oracle::stationary_dense(p.matrix())).lpNorm<1>();
    worst = std::max(worst, gap);
    ++checked;
  }
  return {worst <= 1e-8, fmt("max L1 gap over %d chains=%.3e (<= 1e-8)", checked, worst)};
}

// 9. The absorbing node has middling pagerank; phase follows pagerank.
Outcome absorbing_state() {
  const auto cfg = default_config(Experiment::absorbing_state);
  const AdjacencyMatrix w = make_absorbing(gen_cluster_cycle(three_cluster_spec(kSeed)), cfg.absorbing_node);
  const TransitionMatrix p = pipeline_transition(w, kAlpha);
  const RealVector h = pagerank(p).h;
  const std::vector<double> all(h.data(), h.data() + h.size());
  const double lo = percentile(all, 10.0);
  const double hi = percentile(all, 90.0);
  const double node = h(cfg.absorbing_node);
  const auto d = normalized_spectrum(build_markov(p, rescale_g(kDefaultG, p), 5));
  const double r = pearson(centered_phases(d.vector(0)), h);
  return {lo < node && node < hi && r >= 0.9,
          fmt("pagerank of node %d=%.5f in (p10=%.5f, p90=%.5f), Pearson(phase, pagerank)=%.6f (>= 0.9)",
              cfg.absorbing_node, node, lo, hi, r)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 10. Every named experiment replays byte for byte from its manifest.
Outcome manifest_replay() {
  const fs::path root = fs::temp_directory_path() / ("maglap_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  fs::create_directories(root);
  {
    std::ofstream g(root / "graph.txt");
    write_edge_list(g, gen_cluster_cycle(three_cluster_spec(kSeed, 20)));
  }
  int experiments = 0, tables = 0, mismatched = 0;
  std::string failures;
  for (Experiment e : all_experiments()) {
    const std::string name(to_string(e));
    ExperimentConfig cfg = default_config(e);
    cfg.output_dir = (root / name / "first").string();
    if (e == Experiment::custom_graph) cfg.graph_path = (root / "graph.txt").string();
    run(cfg);
    const std::string cmd = std::string(MAGLAP_CLI) + " replay " + (root / name / "first" / "manifest.json").string() +
                            " --out " + (root / name / "second").string() + " > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) {
      failures += name + " (replay failed) ";
      ++mismatched;
      continue;
    }
    ++experiments;
    for (const auto& entry : fs::directory_iterator(root / name / "first")) {
      if (entry.path().extension() != ".csv") continue;
      ++tables;
      if (slurp(entry.path()) != slurp(root / name / "second" / entry.path().filename())) {
        ++mismatched;
        failures += name + "/" + entry.path().filename().string() + " ";
      }
    }
  }
  fs::remove_all(root);
  return {mismatched == 0 && experiments == static_cast<int>(all_experiments().size()),
          fmt("%d experiments, %d CSV tables compared, %d mismatches %s", experiments, tables, mismatched,
              failures.c_str())};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "Hermiticity/PSD suite", hermiticity_psd},
      {2, "g=0 reduction", zero_g_reduction},
      {3, "principal eigenvector limit", theorem_limit},
      {4, "random-g stability", random_g_stability},
      {5, "mixing times", mixing_times},
      {6, "circle sinusoid recovery", circle_sinusoids},
      {7, "trivial principal eigenvector", trivial_eigenvector},
      {8, "pagerank oracle equivalence", pagerank_oracle},
      {9, "absorbing-state placement", absorbing_state},
      {10, "manifest replay determinism", manifest_replay},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "criterion must be in 1..%zu\n", criteria.size());
    return 2;
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("AC%-2d %s  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
