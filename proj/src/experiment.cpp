#include "maglap/experiment.hpp"

#include "maglap/datasets.hpp"
#include "maglap/embed.hpp"
#include "maglap/error.hpp"
#include "maglap/eval.hpp"
#include "maglap/graph_io.hpp"
#include "maglap/magnetic.hpp"
#include "maglap/markov.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <variant>

namespace maglap {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr std::pair<Experiment, std::string_view> kNames[] = {
    {Experiment::three_clusters, "three-clusters"}, {Experiment::random_g_sweep, "random-g-sweep"},
    {Experiment::time_evolution, "time-evolution"}, {Experiment::circle_drift, "circle-drift"},
    {Experiment::bow_tie, "bow-tie"},               {Experiment::hidden_circle, "hidden-circle"},
    {Experiment::absorbing_state, "absorbing-state"}, {Experiment::custom_graph, "custom-graph"},
};

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

std::vector<int> cluster_sizes(std::string_view kind, int size) {
  return std::vector<int>(kind == "bow-tie" ? 7 : 3, size);
}

// ---------------------------------------------------------------------------
// Tables

using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return "";
        else if constexpr (std::is_same_v<T, long long>)
          return fmt::format("{}", v);
        else if constexpr (std::is_same_v<T, double>)
          return fmt::format("{:.17g}", v);
        else
          return v;
      },
      cell);
}

json json_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return nullptr;
        else
          return v;
      },
      cell);
}

Cell label_cell(const std::optional<std::vector<int>>& labels, Index i) {
  if (!labels) return std::monostate{};
  return static_cast<long long>((*labels)[static_cast<std::size_t>(i)]);
}

class Writer {
 public:
  Writer(fs::path dir, OutputFormat format) : dir_(std::move(dir)), format_(format) {
    fs::create_directories(dir_);
  }

  void emit(const Table& table) {
    const fs::path path = dir_ / (table.name + (format_ == OutputFormat::csv ? ".csv" : ".json"));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(fmt::format("cannot write {}", path.string()));
    if (format_ == OutputFormat::csv) {
      for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
        out << '\n';
      }
    } else {
      json records = json::array();
      for (const auto& row : table.rows) {
        json record = json::object();
        for (std::size_t c = 0; c < row.size(); ++c) record[table.columns[c]] = json_cell(row[c]);
        records.push_back(std::move(record));
      }
      out << records.dump(1) << '\n';
    }
    written_.push_back(path);
  }

  void emit_manifest(const std::string& text) {
    const fs::path path = dir_ / "manifest.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(fmt::format("cannot write {}", path.string()));
    out << text;
    written_.push_back(path);
  }

  std::vector<fs::path> release() { return std::move(written_); }

 private:
  fs::path dir_;
  OutputFormat format_;
  std::vector<fs::path> written_;
};

// ---------------------------------------------------------------------------
// Table builders

Table embedding_table(const std::string& mode, const SpectralDecomposition& decomp, Construction c,
                      const std::optional<std::vector<int>>& labels) {
  const auto [a, b] = default_embedding_indices(c);
  const Embedding xy = planar(decomp, a, b, Part::real);
  Table t{"embedding_" + mode, {"node", "x", "y", "label"}, {}};
  for (Index i = 0; i < xy.size(); ++i)
    t.rows.push_back({static_cast<long long>(i), xy.coordinates(i, 0), xy.coordinates(i, 1), label_cell(labels, i)});
  return t;
}

Table phase_table(const std::string& mode, const SpectralDecomposition& decomp,
                  const std::optional<std::vector<int>>& labels) {
  const Embedding phase = phase_of(decomp, 0);
  Table t{"phase_" + mode, {"node", "phase", "label"}, {}};
  for (Index i = 0; i < phase.size(); ++i)
    t.rows.push_back({static_cast<long long>(i), phase.coordinates(i, 0), label_cell(labels, i)});
  return t;
}

Table eigenvalue_table(const std::string& mode, const SpectralDecomposition& decomp) {
  Table t{"eigenvalues_" + mode, {"index", "eigenvalue"}, {}};
  for (Index k = 0; k < decomp.size(); ++k) t.rows.push_back({static_cast<long long>(k), decomp.eigenvalues(k)});
  return t;
}

Table matrix_table(const std::string& name, const RealMatrix& m) {
  Table t{name, {"node"}, {}};
  for (Index j = 0; j < m.cols(); ++j) t.columns.push_back(std::to_string(j));
  for (Index i = 0; i < m.rows(); ++i) {
    std::vector<Cell> row{static_cast<long long>(i)};
    for (Index j = 0; j < m.cols(); ++j) row.emplace_back(m(i, j));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table nodes_table(const AdjacencyMatrix& w) {
  Table t{"nodes", {"node", "pos_x", "pos_y", "angle", "label"}, {}};
  const auto& pos = w.positions();
  for (Index i = 0; i < w.size(); ++i) {
    Cell x, y, angle;
    if (pos && pos->cols() >= 2) {
      x = (*pos)(i, 0);
      y = (*pos)(i, 1);
      angle = wrapped_phase(Complex((*pos)(i, 0), (*pos)(i, 1)));
    }
    t.rows.push_back({static_cast<long long>(i), x, y, angle, label_cell(w.labels(), i)});
  }
  return t;
}

std::string markov_mode(int t) { return fmt::format("markov_t{}", t); }

// ---------------------------------------------------------------------------
// Pipelines

struct Pipelines {
  const AdjacencyMatrix& graph;
  const ExperimentConfig& cfg;
  TransitionMatrix p;
  double g_markov;

  Pipelines(const AdjacencyMatrix& w, const ExperimentConfig& config)
      : graph(w), cfg(config), p(pipeline_transition(w, config.alpha)), g_markov(rescale_g(config.g, p)) {}

  SpectralDecomposition unnormalized() const { return normalized_spectrum(build_unnormalized(graph, cfg.g)); }
  SpectralDecomposition markov(int t) const { return normalized_spectrum(build_markov(p, g_markov, t)); }
};

AdjacencyMatrix cluster_graph(const ExperimentConfig& cfg, std::string_view kind) {
  ClusterCycleSpec spec = kind == "bow-tie" ? bow_tie_spec(cfg.seed) : three_cluster_spec(cfg.seed);
  spec.sizes = cfg.sizes;
  spec.p_in = cfg.p_in;
  spec.p_out = cfg.p_out;
  spec.p_clockwise = cfg.p_clockwise;
  return gen_cluster_cycle(spec);
}

void emit_embeddings(Writer& out, const Pipelines& pipe, const std::vector<int>& times) {
  const auto& labels = pipe.graph.labels();
  const SpectralDecomposition plain = pipe.unnormalized();
  out.emit(embedding_table("unnormalized", plain, Construction::unnormalized, labels));
  out.emit(phase_table("unnormalized", plain, labels));
  out.emit(eigenvalue_table("unnormalized", plain));
  for (int t : times) {
    const SpectralDecomposition markov = pipe.markov(t);
    out.emit(embedding_table(markov_mode(t), markov, Construction::markov, labels));
    out.emit(phase_table(markov_mode(t), markov, labels));
    out.emit(eigenvalue_table(markov_mode(t), markov));
  }
}

json run_graph_experiment(Writer& out, const AdjacencyMatrix& w, const ExperimentConfig& cfg) {
  const Pipelines pipe(w, cfg);
  json derived = {{"g_markov", pipe.g_markov}, {"teleport_alpha", pipe.p.teleport_alpha()}};
  if (w.labels() || w.positions()) out.emit(nodes_table(w));
  out.emit(matrix_table("affinity", cfg.affinity_t > 0 ? diffuse(pipe.p, cfg.affinity_t).matrix() : w.weights()));
  emit_embeddings(out, pipe, cfg.t);

  const PageRankVector h = pagerank(pipe.p);
  Table pr{"pagerank", {"node", "pagerank", "label"}, {}};
  for (Index i = 0; i < w.size(); ++i)
    pr.rows.push_back({static_cast<long long>(i), h.h(i), label_cell(w.labels(), i)});
  out.emit(pr);

  if (cfg.pagerank_t > 0) {
    auto emit_phase_vs_pagerank = [&](const std::string& mode, const ComplexVector& principal) {
      const RealVector phase = centered_phases(principal);
      Table t{"phase_vs_pagerank_" + mode, {"node", "pagerank", "phase", "label"}, {}};
      for (Index i = 0; i < w.size(); ++i)
        t.rows.push_back({static_cast<long long>(i), h.h(i), phase(i), label_cell(w.labels(), i)});
      out.emit(t);
    };
    emit_phase_vs_pagerank("unnormalized", pipe.unnormalized().vector(0));
    emit_phase_vs_pagerank(markov_mode(cfg.pagerank_t), pipe.markov(cfg.pagerank_t).vector(0));
    derived["pagerank_t"] = cfg.pagerank_t;
  }

  if (!cfg.convergence_t.empty()) {
    const TransitionMatrix teleported = pipe.p.teleport_alpha() > 0.0 ? pipe.p : add_teleportation(pipe.p, cfg.alpha);
    const double g = rescale_g(cfg.g, teleported);
    Table t{"convergence", {"t", "residual"}, {}};
    for (const auto& point : theorem_convergence(teleported, g, cfg.convergence_t))
      t.rows.push_back({static_cast<long long>(point.t), point.residual});
    out.emit(t);
    derived["g_convergence"] = g;
  }

  const auto mix = mixing_time(pipe.p, cfg.mixing_epsilon, 100);
  Table t{"mixing", {"epsilon", "mixing_time"}, {}};
  t.rows.push_back({cfg.mixing_epsilon, mix ? Cell(static_cast<long long>(*mix)) : Cell(std::monostate{})});
  out.emit(t);
  return derived;
}

json run_sweep(Writer& out, const ExperimentConfig& cfg) {
  const AdjacencyMatrix w = cluster_graph(cfg, cfg.graph_kind);
  SweepOptions options;
  options.trials = cfg.trials;
  options.g_max = cfg.g_max;
  options.t = cfg.t.front();
  options.seed = cfg.seed;
  options.threads = cfg.threads;
  const SweepResult sweep = random_g_sweep(w, options);
  Table t{"sweep", {"trial", "g", "acc_unnorm", "acc_markov"}, {}};
  double mean_plain = 0.0;
  double mean_markov = 0.0;
  for (const auto& r : sweep.records) {
    t.rows.push_back({static_cast<long long>(r.trial), r.g, r.accuracy_unnormalized, r.accuracy_markov});
    mean_plain += r.accuracy_unnormalized / sweep.trials;
    mean_markov += r.accuracy_markov / sweep.trials;
  }
  out.emit(t);
  return {{"mean_acc_unnorm", mean_plain}, {"mean_acc_markov", mean_markov}};
}

json run_time_evolution(Writer& out, const ExperimentConfig& cfg) {
  const AdjacencyMatrix w = cluster_graph(cfg, cfg.graph_kind);
  const Pipelines pipe(w, cfg);
  for (int t : cfg.t) {
    const SpectralDecomposition markov = pipe.markov(t);
    out.emit(embedding_table(markov_mode(t), markov, Construction::markov, w.labels()));
    out.emit(phase_table(markov_mode(t), markov, w.labels()));
    out.emit(eigenvalue_table(markov_mode(t), markov));
  }
  return {{"g_markov", pipe.g_markov}};
}

json run_circle(Writer& out, const ExperimentConfig& cfg) {
  const AdjacencyMatrix w = gen_circle_drift(KernelSpec{cfg.n, cfg.sigma, cfg.drift, cfg.seed});
  const Pipelines pipe(w, cfg);
  out.emit(nodes_table(w));
  out.emit(matrix_table("affinity", w.weights()));
  emit_embeddings(out, pipe, cfg.t);

  RealVector angles(w.size());
  for (Index i = 0; i < w.size(); ++i)
    angles(i) = wrapped_phase(Complex((*w.positions())(i, 0), (*w.positions())(i, 1)));

  constexpr Index kVectors[] = {1, 3, 5};
  Table fits{"sinusoids", {"mode", "eigenvector", "frequency", "phase_shift", "correlation"}, {}};
  auto emit_vectors = [&](const std::string& mode, const SpectralDecomposition& decomp) {
    Table t{"eigenvectors_" + mode, {"node", "angle", "re_phi1", "re_phi3", "re_phi5"}, {}};
    for (Index i = 0; i < w.size(); ++i) {
      std::vector<Cell> row{static_cast<long long>(i), angles(i)};
      for (Index k : kVectors) row.emplace_back(decomp.eigenvectors(i, k).real());
      t.rows.push_back(std::move(row));
    }
    out.emit(t);
    for (Index k : kVectors) {
      const SinusoidFit fit = sinusoid_fit(decomp.eigenvectors.col(k).real(), angles);
      fits.rows.push_back({mode, static_cast<long long>(k), static_cast<long long>(fit.frequency), fit.phase_shift,
                           fit.correlation});
    }
  };
  emit_vectors("unnormalized", pipe.unnormalized());
  for (int t : cfg.t) emit_vectors(markov_mode(t), pipe.markov(t));
  out.emit(fits);
  return {{"g_markov", pipe.g_markov}};
}

json run_hidden_circle(Writer& out, const ExperimentConfig& cfg) {
  AnnulusSpec annulus;
  annulus.n = cfg.annulus_n;
  annulus.drift = cfg.annulus_drift;
  annulus.r_inner = cfg.annulus_r_inner;
  annulus.r_outer = cfg.annulus_r_outer;
  const AdjacencyMatrix w = gen_square_drift_annulus(KernelSpec{cfg.n, cfg.sigma, cfg.drift, cfg.seed}, annulus);
  const Pipelines pipe(w, cfg);
  out.emit(nodes_table(w));
  out.emit(matrix_table("affinity", w.weights()));
  emit_embeddings(out, pipe, cfg.t);

  const RealMatrix& pos = *w.positions();
  auto emit_phases = [&](const std::string& mode, const SpectralDecomposition& decomp) {
    const Embedding v0 = phase_of(decomp, 0);
    const Embedding v1 = phase_of(decomp, 1);
    Table t{"phases_" + mode, {"node", "pos_x", "pos_y", "phase_v0", "phase_v1", "label"}, {}};
    for (Index i = 0; i < w.size(); ++i)
      t.rows.push_back({static_cast<long long>(i), pos(i, 0), pos(i, 1), v0.coordinates(i, 0),
                        v1.coordinates(i, 0), label_cell(w.labels(), i)});
    out.emit(t);
  };
  auto emit_torus = [&](const std::string& mode, const SpectralDecomposition& decomp) {
    const TorusEmbedding tor = torus(decomp, 0, 1);
    Table t{"torus_" + mode, {"node", "theta1", "theta2", "x", "y", "z", "label"}, {}};
    for (Index i = 0; i < w.size(); ++i)
      t.rows.push_back({static_cast<long long>(i), tor.angles.coordinates(i, 0), tor.angles.coordinates(i, 1),
                        tor.surface(i, 0), tor.surface(i, 1), tor.surface(i, 2), label_cell(w.labels(), i)});
    out.emit(t);
  };
  const SpectralDecomposition plain = pipe.unnormalized();
  emit_phases("unnormalized", plain);
  emit_torus("unnormalized", plain);
  for (int t : cfg.t) emit_phases(markov_mode(t), pipe.markov(t));
  emit_torus(markov_mode(cfg.torus_t), pipe.markov(cfg.torus_t));
  return {{"g_markov", pipe.g_markov}};
}

// ---------------------------------------------------------------------------
// Manifest

json config_to_json(const ExperimentConfig& c) {
  return json{
      {"experiment", to_string(c.experiment)},
      {"g", c.g},
      {"t", c.t},
      {"alpha", c.alpha},
      {"seed", c.seed},
      {"sizes", c.sizes},
      {"p_in", c.p_in},
      {"p_out", c.p_out},
      {"p_clockwise", c.p_clockwise},
      {"graph_kind", c.graph_kind},
      {"absorbing_node", c.absorbing_node},
      {"n", c.n},
      {"sigma", c.sigma},
      {"drift", c.drift},
      {"annulus_n", c.annulus_n},
      {"annulus_drift", c.annulus_drift},
      {"annulus_r_inner", c.annulus_r_inner},
      {"annulus_r_outer", c.annulus_r_outer},
      {"torus_t", c.torus_t},
      {"trials", c.trials},
      {"g_max", c.g_max},
      {"threads", c.threads},
      {"pagerank_t", c.pagerank_t},
      {"affinity_t", c.affinity_t},
      {"convergence_t", c.convergence_t},
      {"mixing_epsilon", c.mixing_epsilon},
      {"graph_path", c.graph_path},
      {"output_dir", c.output_dir},
      {"format", c.format == OutputFormat::csv ? "csv" : "json"},
  };
}

template <typename T>
void read_field(const json& j, const char* key, T& field) {
  if (j.contains(key)) j.at(key).get_to(field);
}

}  // namespace

std::string_view to_string(Experiment e) noexcept {
  for (const auto& [value, name] : kNames)
    if (value == e) return name;
  return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) noexcept {
  for (const auto& [value, text] : kNames)
    if (text == name) return value;
  return std::nullopt;
}

const std::vector<Experiment>& all_experiments() noexcept {
  static const std::vector<Experiment> all = [] {
    std::vector<Experiment> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

ExperimentConfig default_config(Experiment e) {
  ExperimentConfig c;
  c.experiment = e;
  switch (e) {
    case Experiment::three_clusters:
      c.pagerank_t = 4;
      c.convergence_t = range(1, 20);
      break;
    case Experiment::random_g_sweep:
      break;
    case Experiment::time_evolution:
      c.g = 0.25;
      c.t = range(1, 9);
      break;
    case Experiment::circle_drift:
      break;
    case Experiment::bow_tie:
      c.graph_kind = "bow-tie";
      c.sizes = cluster_sizes("bow-tie", 50);
      c.pagerank_t = 10;
      c.affinity_t = 7;
      break;
    case Experiment::hidden_circle:
      c.g = 0.24;
      c.t = {4};
      c.drift = 3.0;
      break;
    case Experiment::absorbing_state:
      c.t = {1, 5};
      c.pagerank_t = 5;
      break;
    case Experiment::custom_graph:
      break;
  }
  return c;
}

void validate(const ExperimentConfig& c) {
  auto fail = [](const std::string& msg) { throw InvalidArgument(msg); };
  if (!std::isfinite(c.g) || c.g < 0.0) fail(fmt::format("--g must be a nonnegative number, got {}", c.g));
  if (c.t.empty()) fail("--t must list at least one diffusion time");
  for (int t : c.t)
    if (t < 1) fail(fmt::format("--t values must be positive integers, got {}", t));
  for (int t : c.convergence_t)
    if (t < 1) fail(fmt::format("--convergence-t values must be positive integers, got {}", t));
  if (!(c.alpha > 0.0 && c.alpha < 1.0)) fail(fmt::format("--alpha must lie in (0, 1), got {}", c.alpha));
  if (c.pagerank_t < 0) fail("--pagerank-t must be >= 0");
  if (c.affinity_t < 0) fail("--affinity-t must be >= 0");
  if (c.torus_t < 1) fail("--torus-t must be >= 1");
  if (!(c.mixing_epsilon > 0.0)) fail("--mixing-epsilon must be positive");

  const bool cluster = c.experiment == Experiment::three_clusters || c.experiment == Experiment::random_g_sweep ||
                       c.experiment == Experiment::time_evolution || c.experiment == Experiment::bow_tie ||
                       c.experiment == Experiment::absorbing_state;
  if (cluster) {
    if (c.graph_kind != "three-clusters" && c.graph_kind != "bow-tie")
      fail(fmt::format("--graph-kind must be three-clusters or bow-tie, got {}", c.graph_kind));
    const std::size_t expected = c.graph_kind == "bow-tie" ? 7 : 3;
    if (c.sizes.size() != expected)
      fail(fmt::format("--sizes needs {} cluster sizes for {}, got {}", expected, c.graph_kind, c.sizes.size()));
    for (int s : c.sizes)
      if (s < 1) fail(fmt::format("--sizes entries must be positive, got {}", s));
    for (double p : {c.p_in, c.p_out, c.p_clockwise})
      if (!(p >= 0.0 && p <= 1.0)) fail(fmt::format("--p-in/--p-out/--p-clockwise must be probabilities, got {}", p));
  }
  if (c.experiment == Experiment::absorbing_state) {
    int total = 0;
    for (int s : c.sizes) total += s;
    if (c.absorbing_node < 0 || c.absorbing_node >= total)
      fail(fmt::format("--absorbing-node {} outside [0, {})", c.absorbing_node, total));
  }
  if (c.experiment == Experiment::random_g_sweep) {
    if (c.trials < 1) fail("--trials must be positive");
    if (!(c.g_max > 0.0)) fail("--g-max must be positive");
  }
  if (c.experiment == Experiment::circle_drift || c.experiment == Experiment::hidden_circle) {
    if (!(c.sigma > 0.0)) fail("--sigma must be positive");
    if (!(c.drift >= 1.0)) fail("--drift must be >= 1");
    if (c.experiment == Experiment::circle_drift && c.n < 7)
      fail("--n must be at least 7 for the circle (eigenvectors 1, 3, 5 are reported)");
    if (c.experiment == Experiment::hidden_circle) {
      if (c.n < 0 || c.annulus_n < 0 || c.n + c.annulus_n < 3) fail("--n plus --annulus-n must be at least 3");
      if (!(c.annulus_drift >= 1.0)) fail("--annulus-drift must be >= 1");
      if (!(c.annulus_r_inner > 0.0 && c.annulus_r_inner < c.annulus_r_outer))
        fail("annulus radii must satisfy 0 < r_inner < r_outer");
    }
  }
  if (c.experiment == Experiment::custom_graph && c.graph_path.empty()) fail("--graph is required for custom-graph");
  if (c.output_dir.empty()) fail("--out must name an output directory");
}

std::vector<int> parse_t_list(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw InvalidArgument(fmt::format("--t: `{}` is not an integer", s));
    return v;
  };
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const int lo = parse_int(item.substr(0, dots));
      const int hi = parse_int(item.substr(dots + 2));
      if (hi < lo) throw InvalidArgument(fmt::format("--t: empty range `{}`", item));
      for (int t = lo; t <= hi; ++t) out.push_back(t);
    } else {
      out.push_back(parse_int(item));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw InvalidArgument("--t: no diffusion times given");
  return out;
}

std::string manifest_json(const ExperimentConfig& config) {
  return json{{"config", config_to_json(config)}}.dump(2) + "\n";
}

ExperimentConfig config_from_manifest_json(std::string_view text) {
  const json root = json::parse(text);
  const json& j = root.contains("config") ? root.at("config") : root;
  const auto name = j.at("experiment").get<std::string>();
  const auto experiment = parse_experiment(name);
  if (!experiment) throw InvalidInput(fmt::format("manifest names unknown experiment `{}`", name));
  ExperimentConfig c = default_config(*experiment);
  read_field(j, "g", c.g);
  read_field(j, "t", c.t);
  read_field(j, "alpha", c.alpha);
  read_field(j, "seed", c.seed);
  read_field(j, "sizes", c.sizes);
  read_field(j, "p_in", c.p_in);
  read_field(j, "p_out", c.p_out);
  read_field(j, "p_clockwise", c.p_clockwise);
  read_field(j, "graph_kind", c.graph_kind);
  read_field(j, "absorbing_node", c.absorbing_node);
  read_field(j, "n", c.n);
  read_field(j, "sigma", c.sigma);
  read_field(j, "drift", c.drift);
  read_field(j, "annulus_n", c.annulus_n);
  read_field(j, "annulus_drift", c.annulus_drift);
  read_field(j, "annulus_r_inner", c.annulus_r_inner);
  read_field(j, "annulus_r_outer", c.annulus_r_outer);
  read_field(j, "torus_t", c.torus_t);
  read_field(j, "trials", c.trials);
  read_field(j, "g_max", c.g_max);
  read_field(j, "threads", c.threads);
  read_field(j, "pagerank_t", c.pagerank_t);
  read_field(j, "affinity_t", c.affinity_t);
  read_field(j, "convergence_t", c.convergence_t);
  read_field(j, "mixing_epsilon", c.mixing_epsilon);
  read_field(j, "graph_path", c.graph_path);
  read_field(j, "output_dir", c.output_dir);
  if (j.contains("format")) {
    const auto format = j.at("format").get<std::string>();
    if (format != "csv" && format != "json") throw InvalidInput(fmt::format("unknown output format `{}`", format));
    c.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  }
  return c;
}

ExperimentConfig load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(fmt::format("cannot open manifest {}", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return config_from_manifest_json(text.str());
}

std::vector<fs::path> run(const ExperimentConfig& config) {
  validate(config);
  Writer out(config.output_dir, config.format);
  json derived;
  switch (config.experiment) {
    case Experiment::three_clusters:
    case Experiment::bow_tie:
      derived = run_graph_experiment(out, cluster_graph(config, config.graph_kind), config);
      break;
    case Experiment::absorbing_state:
      derived = run_graph_experiment(
          out, make_absorbing(cluster_graph(config, config.graph_kind), config.absorbing_node), config);
      break;
    case Experiment::custom_graph:
      derived = run_graph_experiment(out, load_graph(config.graph_path), config);
      break;
    case Experiment::random_g_sweep:
      derived = run_sweep(out, config);
      break;
    case Experiment::time_evolution:
      derived = run_time_evolution(out, config);
      break;
    case Experiment::circle_drift:
      derived = run_circle(out, config);
      break;
    case Experiment::hidden_circle:
      derived = run_hidden_circle(out, config);
      break;
  }
  out.emit_manifest(json{{"config", config_to_json(config)}, {"derived", derived}}.dump(2) + "\n");
  return out.release();
}

}  // namespace maglap
