#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maglap {

enum class Experiment {
  three_clusters,
  random_g_sweep,
  time_evolution,
  circle_drift,
  bow_tie,
  hidden_circle,
  absorbing_state,
  custom_graph,
};

enum class OutputFormat { csv, json };

std::string_view to_string(Experiment e) noexcept;
std::optional<Experiment> parse_experiment(std::string_view name) noexcept;
const std::vector<Experiment>& all_experiments() noexcept;

/// Fully resolved parameters of one experiment run. Named experiments start
/// from default_config(); CLI flags overwrite individual fields.
struct ExperimentConfig {
  Experiment experiment = Experiment::three_clusters;
  double g = 0.04;
  std::vector<int> t{1};
  double alpha = 0.1;
  std::uint64_t seed = 1;

  // cluster-cycle graphs
  std::vector<int> sizes{50, 50, 50};
  double p_in = 0.5;
  double p_out = 0.5;
  double p_clockwise = 0.9;
  /// three-clusters or bow-tie; picks the graph for time-evolution.
  std::string graph_kind = "three-clusters";
  int absorbing_node = 50;

  // kernel graphs
  int n = 200;
  double sigma = 0.2;
  double drift = 5.0;
  int annulus_n = 100;
  double annulus_drift = 5.0;
  double annulus_r_inner = 0.2;
  double annulus_r_outer = 0.3;
  /// Diffusion time of the torus projection (hidden-circle).
  int torus_t = 1;

  // sweep
  int trials = 100;
  double g_max = 0.25;
  int threads = 0;

  /// Diffusion time of the phase-vs-pagerank table; 0 disables it.
  int pagerank_t = 0;
  /// Power of P written to affinity.csv; 0 writes W.
  int affinity_t = 0;
  std::vector<int> convergence_t;
  double mixing_epsilon = 1e-8;

  std::string graph_path;
  std::string output_dir;
  OutputFormat format = OutputFormat::csv;
};

ExperimentConfig default_config(Experiment e);

/// Throws InvalidArgument naming the offending flag.
void validate(const ExperimentConfig& config);

/// Accepts `4`, `1..9` and `1,5` (mixed forms like `1..3,7` too).
std::vector<int> parse_t_list(std::string_view text);

std::string manifest_json(const ExperimentConfig& config);
ExperimentConfig config_from_manifest_json(std::string_view text);
ExperimentConfig load_manifest(const std::filesystem::path& path);

/// Runs the experiment, writes its tables and manifest.json into
/// config.output_dir, and returns the written paths.
std::vector<std::filesystem::path> run(const ExperimentConfig& config);

}  // namespace maglap
