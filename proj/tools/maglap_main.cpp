// maglap: magnetic Laplacian experiments on directed graphs.
//
//   maglap run <experiment> [flags]     run a named experiment
//   maglap replay <manifest.json>       re-run from a manifest
//   maglap list                         list experiments

#include "maglap/error.hpp"
#include "maglap/experiment.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

std::string default_output_root() {
  if (const char* env = std::getenv("MAGLAP_OUTPUT_DIR"); env && *env) return env;
  return "maglap_out";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnetic Laplacian spectral embeddings of directed graphs"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Run a named experiment and write CSV/JSON tables");
  std::string experiment_name;
  run_cmd->add_option("experiment", experiment_name, "three-clusters | random-g-sweep | time-evolution | "
                                                     "circle-drift | bow-tie | hidden-circle | "
                                                     "absorbing-state | custom-graph")
      ->required();

  // Flags are parsed into optionals so that only explicit ones override defaults.
  std::optional<double> g, alpha, p_in, p_out, p_clockwise, sigma, drift, annulus_drift, g_max, epsilon;
  std::optional<std::string> t_text, convergence_text, graph_kind, graph_path, out_dir, format;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<int>> sizes;
  std::optional<int> n, annulus_n, absorbing_node, trials, threads, pagerank_t, affinity_t, torus_t;

  run_cmd->add_option("--g", g, "Rotation parameter g (rescaled by max P for Markov runs)");
  run_cmd->add_option("--t", t_text, "Diffusion time(s): 4, 1..9 or 1,5");
  run_cmd->add_option("--alpha", alpha, "Teleportation probability used when W has sinks");
  run_cmd->add_option("--seed", seed, "Master seed");
  run_cmd->add_option("--sizes", sizes, "Cluster sizes")->delimiter(',');
  run_cmd->add_option("--p-in", p_in, "In-cluster edge probability");
  run_cmd->add_option("--p-out", p_out, "Cross-cluster edge probability");
  run_cmd->add_option("--p-clockwise", p_clockwise, "Probability a cross edge follows the cycle");
  run_cmd->add_option("--graph-kind", graph_kind, "three-clusters | bow-tie (time-evolution, sweep)");
  run_cmd->add_option("--absorbing-node", absorbing_node, "Node whose out-edges are removed");
  run_cmd->add_option("--n", n, "Number of sampled points (circle, square)");
  run_cmd->add_option("--sigma", sigma, "Kernel bandwidth");
  run_cmd->add_option("--drift", drift, "Kernel drift factor");
  run_cmd->add_option("--annulus-n", annulus_n, "Points on the annulus (hidden-circle)");
  run_cmd->add_option("--annulus-drift", annulus_drift, "Counterclockwise bandwidth boost on the annulus");
  run_cmd->add_option("--torus-t", torus_t, "Diffusion time of the torus projection");
  run_cmd->add_option("--trials", trials, "Sweep trials");
  run_cmd->add_option("--g-max", g_max, "Sweep draws g ~ U(0, g_max)");
  run_cmd->add_option("--threads", threads, "Sweep worker threads (0 = all cores)");
  run_cmd->add_option("--pagerank-t", pagerank_t, "Diffusion time of the phase-vs-pagerank table (0 = off)");
  run_cmd->add_option("--affinity-t", affinity_t, "Write P^t to affinity.csv (0 = raw W)");
  run_cmd->add_option("--convergence-t", convergence_text, "Diffusion times for convergence.csv");
  run_cmd->add_option("--mixing-epsilon", epsilon, "Threshold of the mixing-time table");
  run_cmd->add_option("--graph", graph_path, "Edge-list file (custom-graph)");
  run_cmd->add_option("--out", out_dir, "Output directory (default $MAGLAP_OUTPUT_DIR/<experiment>)");
  run_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* replay_cmd = app.add_subcommand("replay", "Re-run an experiment from its manifest.json");
  std::string manifest_path;
  std::optional<std::string> replay_out;
  replay_cmd->add_option("manifest", manifest_path, "Path to manifest.json")->required()->check(CLI::ExistingFile);
  replay_cmd->add_option("--out", replay_out, "Output directory (default: the manifest's)");

  auto* list_cmd = app.add_subcommand("list", "List named experiments");

  CLI11_PARSE(app, argc, argv);

  try {
    maglap::ExperimentConfig config;
    if (*list_cmd) {
      for (auto e : maglap::all_experiments()) std::cout << maglap::to_string(e) << '\n';
      return 0;
    }
    if (*replay_cmd) {
      config = maglap::load_manifest(manifest_path);
      if (replay_out) config.output_dir = *replay_out;
    } else {
      const auto experiment = maglap::parse_experiment(experiment_name);
      if (!experiment) {
        std::cerr << "error: unknown experiment `" << experiment_name << "` (see `maglap list`)\n";
        return 2;
      }
      config = maglap::default_config(*experiment);
      if (g) config.g = *g;
      if (t_text) config.t = maglap::parse_t_list(*t_text);
      if (alpha) config.alpha = *alpha;
      if (seed) config.seed = *seed;
      if (graph_kind) {
        config.graph_kind = *graph_kind;
        if (!sizes) config.sizes.assign(*graph_kind == "bow-tie" ? 7 : 3, 50);
      }
      if (sizes) config.sizes = *sizes;
      if (p_in) config.p_in = *p_in;
      if (p_out) config.p_out = *p_out;
      if (p_clockwise) config.p_clockwise = *p_clockwise;
      if (absorbing_node) config.absorbing_node = *absorbing_node;
      if (n) config.n = *n;
      if (sigma) config.sigma = *sigma;
      if (drift) config.drift = *drift;
      if (annulus_n) config.annulus_n = *annulus_n;
      if (annulus_drift) config.annulus_drift = *annulus_drift;
      if (torus_t) config.torus_t = *torus_t;
      if (trials) config.trials = *trials;
      if (g_max) config.g_max = *g_max;
      if (threads) config.threads = *threads;
      if (pagerank_t) config.pagerank_t = *pagerank_t;
      if (affinity_t) config.affinity_t = *affinity_t;
      if (convergence_text) config.convergence_t = maglap::parse_t_list(*convergence_text);
      if (epsilon) config.mixing_epsilon = *epsilon;
      if (graph_path) config.graph_path = *graph_path;
      if (format) config.format = *format == "json" ? maglap::OutputFormat::json : maglap::OutputFormat::csv;
      config.output_dir = out_dir ? *out_dir : default_output_root() + "/" + experiment_name;
    }
    for (const auto& path : maglap::run(config)) std::cout << path.string() << '\n';
  } catch (const maglap::InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
