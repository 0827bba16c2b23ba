#include "pfptopo/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "pfptopo/edge_list.hpp"
#include "pfptopo/errors.hpp"
#include "pfptopo/generate.hpp"
#include "pfptopo/harness.hpp"
#include "pfptopo/report_io.hpp"

namespace pfp {

namespace {

namespace fs = std::filesystem;

fs::path output_base() {
  if (const char* env = std::getenv("PFPTOPO_OUTPUT_DIR")) return env;
  return ".";
}

// Explicit --output-dir wins; otherwise a per-command directory under the
// PFPTOPO_OUTPUT_DIR base (default: current directory).
fs::path resolve_dir(const fs::path& flag, const char* sub) {
  return flag.empty() ? output_base() / sub : flag;
}

double parse_number(const std::string& token) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (...) {
    throw std::invalid_argument("bad number '" + token + "' in value list");
  }
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::size_t from = 0;
    for (std::size_t at; (at = text.find(':', from)) != std::string::npos;
         from = at + 1)
      parts.push_back(text.substr(from, at - from));
    parts.push_back(text.substr(from));
    if (parts.size() != 3)
      throw std::invalid_argument("range must be start:stop:step, got '" +
                                  text + "'");
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (step <= 0) throw std::invalid_argument("range step must be positive");
    if (stop < start - 1e-9)
      throw std::invalid_argument("range stop is below start");
    for (int i = 0;; ++i) {
      const double x = start + i * step;
      if (x > stop + 1e-9) break;
      out.push_back(x);
    }
  } else {
    std::size_t from = 0;
    for (;;) {
      const std::size_t at = text.find(',', from);
      out.push_back(parse_number(
          text.substr(from, at == std::string::npos ? at : at - from)));
      if (at == std::string::npos) break;
      from = at + 1;
    }
  }
  return out;
}

ModelConfig resolve_model(const ModelFlags& flags, NodeId nodes,
                          std::uint64_t seed) {
  const std::string preset = lower(flags.preset);
  ModelConfig cfg;
  if (preset == "ba")
    cfg = ModelConfig::ba(nodes, seed);
  else if (preset == "ig")
    cfg = ModelConfig::ig(nodes, seed);
  else if (preset == "ba+pfp" || preset == "ba-pfp" || preset == "ba_pfp")
    cfg = ModelConfig::ba_pfp(nodes, seed);
  else if (preset == "pfp")
    cfg = ModelConfig::pfp(nodes, seed);
  else
    throw std::invalid_argument("unknown model preset '" + flags.preset +
                                "' (ba | ig | ba+pfp | pfp)");

  if (flags.growth) {
    const std::string g = lower(*flags.growth);
    if (g == "new-node-only")
      cfg.growth = GrowthKind::NewNodeOnly;
    else if (g == "interactive")
      cfg.growth = GrowthKind::Interactive;
    else
      throw std::invalid_argument(
          "unknown growth '" + *flags.growth +
          "' (new-node-only | interactive)");
  }

  if (flags.delta && flags.lambda)
    throw std::invalid_argument("--delta and --lambda are mutually exclusive");
  if (flags.scheme) {
    const std::string s = lower(*flags.scheme);
    if (s == "linear") {
      if (flags.delta || flags.lambda)
        throw std::invalid_argument("linear scheme takes no parameter");
      cfg.scheme = PreferenceScheme::linear();
    } else if (s == "pf" || s == "positive-feedback") {
      if (flags.lambda)
        throw std::invalid_argument("--lambda does not apply to " + s);
      cfg.scheme = PreferenceScheme::positive_feedback(
          flags.delta.value_or(kDefaultDelta));
    } else if (s == "exponential") {
      if (!flags.lambda)
        throw std::invalid_argument("exponential scheme requires --lambda");
      cfg.scheme = PreferenceScheme::exponential(*flags.lambda);
    } else {
      throw std::invalid_argument(
          "unknown scheme '" + *flags.scheme +
          "' (linear | pf | exponential)");
    }
  } else if (flags.delta) {
    cfg.scheme = PreferenceScheme::positive_feedback(*flags.delta);
  } else if (flags.lambda) {
    cfg.scheme = PreferenceScheme::exponential(*flags.lambda);
  }

  if (flags.m) {
    if (cfg.growth != GrowthKind::NewNodeOnly)
      throw std::invalid_argument("--m applies to new-node-only growth");
    cfg.new_node_links = *flags.m;
  }
  if (flags.p) {
    if (cfg.growth != GrowthKind::Interactive)
      throw std::invalid_argument("--p applies to interactive growth");
    cfg.one_host_probability = *flags.p;
  }
  if (flags.seed_nodes) cfg.seed_nodes = *flags.seed_nodes;
  if (flags.seed_links) cfg.seed_links = *flags.seed_links;
  cfg.target_nodes = nodes;
  cfg.rng_seed = seed;
  cfg.validate();
  return cfg;
}

void cmd_generate(const GenerateOptions& opts) {
  const ModelConfig cfg = resolve_model(opts.model, opts.nodes, opts.seed);
  fs::path out = opts.out;
  if (out.empty()) {
    const fs::path dir =
        opts.output_dir.empty() ? output_base() : opts.output_dir;
    fs::create_directories(dir);
    char name[96];
    std::snprintf(name, sizeof name, "%s_n%d_s%llu.edges",
                  lower(opts.model.preset).c_str(), opts.nodes,
                  static_cast<unsigned long long>(opts.seed));
    out = dir / name;
  } else if (out.has_parent_path()) {
    fs::create_directories(out.parent_path());
  }

  const auto start = Clock::now();
  const Graph g = generate(cfg);
  const double elapsed = seconds_since(start);
  write_edge_list(g, out);
  write_generate_sidecar(fs::path(out.string() + ".json"), cfg, g, elapsed);
  std::cout << "wrote " << out.string() << ": " << describe(cfg)
            << " seed=" << opts.seed << " N=" << g.node_count()
            << " L=" << g.link_count() << " (L_ext=" << g.external_links()
            << " L_int=" << g.internal_links() << ") in "
            << static_cast<int>(elapsed * 1000) << " ms\n";
}

void cmd_analyze(const AnalyzeOptions& opts) {
  const Graph g = read_edge_list(opts.input);
  const MetricsReport r = report(g);
  const fs::path dir = resolve_dir(opts.output_dir, "analysis");
  write_analysis(dir, r);
  std::cout << format_report_line(r) << '\n'
            << "wrote " << dir.string() << '\n';
}

void cmd_table2(const Table2Options& opts) {
  const auto results =
      run_table2(opts.nodes, opts.runs, opts.seed, opts.threads);
  const fs::path dir = resolve_dir(opts.output_dir, "table2");
  write_experiment(dir, results);
  std::cout << format_summary(results) << "wrote " << dir.string() << '\n';
}

void cmd_sweep_p(const SweepOptions& opts) {
  const SweepResult sweep = sweep_p(opts.values, opts.nodes, opts.runs,
                                    opts.seed, opts.threads, opts.fixed);
  const fs::path dir = resolve_dir(opts.output_dir, "sweep_p");
  write_experiment(dir, sweep);
  write_contours(dir, sweep);
  std::cout << format_sweep_summary(sweep) << "wrote " << dir.string()
            << '\n';
}

void cmd_sweep_delta(const SweepOptions& opts) {
  const SweepResult sweep = sweep_delta(opts.values, opts.nodes, opts.runs,
                                        opts.seed, opts.threads, opts.fixed);
  const fs::path dir = resolve_dir(opts.output_dir, "sweep_delta");
  write_experiment(dir, sweep);
  write_contours(dir, sweep);
  std::cout << format_sweep_summary(sweep) << "wrote " << dir.string()
            << '\n';
}

void cmd_grid(const GridOptions& opts) {
  const SweepResult sweep =
      sweep_grid(opts.p_values, opts.delta_values, opts.nodes, opts.runs,
                 opts.seed, opts.threads);
  const fs::path dir = resolve_dir(opts.output_dir, "grid");
  write_experiment(dir, sweep, /*curves=*/false);
  write_contours(dir, sweep);
  std::cout << format_sweep_summary(sweep) << "wrote " << dir.string()
            << '\n';
}

void cmd_trajectory(const TrajectoryOptions& opts) {
  const ModelConfig cfg = resolve_model(opts.model, opts.nodes, opts.seed);
  const Trajectory t = track_trajectory(cfg, opts.sample_every);
  const fs::path dir = resolve_dir(opts.output_dir, "trajectory");
  fs::create_directories(dir);
  write_trajectory(dir / "trajectory.csv", t);
  const auto& first = t.samples.front();
  const auto& last = t.samples.back();
  char line[160];
  std::snprintf(line, sizeof line,
                "seed-node mean degree: %.2f at N=%d -> %.2f at N=%d "
                "(%zu samples)\n",
                first.second, first.first, last.second, last.first,
                t.samples.size());
  std::cout << line << "wrote " << dir.string() << '\n';
}

namespace {

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
  cmd->add_option("--model", flags.preset,
                  "Model preset: ba | ig | ba+pfp | pfp")
      ->capture_default_str();
  cmd->add_option("--growth", flags.growth,
                  "Override growth: new-node-only | interactive");
  cmd->add_option("--scheme", flags.scheme,
                  "Override preference: linear | pf | exponential");
  cmd->add_option("--m", flags.m, "Links per new node (new-node-only)");
  cmd->add_option("--p", flags.p, "One-host step probability (interactive)");
  cmd->add_option("--delta", flags.delta,
                  "Positive-feedback delta (implies --scheme pf)");
  cmd->add_option("--lambda", flags.lambda,
                  "Exponential lambda (implies --scheme exponential)");
  cmd->add_option("--seed-nodes", flags.seed_nodes, "Seed graph node count");
  cmd->add_option("--seed-links", flags.seed_links, "Seed graph link count");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "pfptopo: grow internet-like topologies (positive-feedback preference "
      "and baseline models) and measure them"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand(
      "generate", "Generate one graph and write an edge list + sidecar");
  add_model_flags(gen_cmd, gen.model);
  gen_cmd->add_option("--nodes", gen.nodes, "Target node count")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Edge-list output path");
  gen_cmd->add_option("--output-dir", gen.output_dir,
                      "Directory for the default output name");

  AnalyzeOptions ana;
  auto* ana_cmd = app.add_subcommand(
      "analyze", "Compute the full metrics report of an edge list");
  ana_cmd->add_option("--input", ana.input, "Edge-list file")->required();
  ana_cmd->add_option("--output-dir", ana.output_dir, "Output directory");

  Table2Options t2;
  auto* t2_cmd = app.add_subcommand(
      "table2", "Compare BA, IG, BA+PFP and PFP averaged over seeds");
  t2_cmd->add_option("--nodes", t2.nodes, "Target node count")
      ->capture_default_str();
  t2_cmd->add_option("--runs", t2.runs, "Runs per model")
      ->capture_default_str();
  t2_cmd->add_option("--seed", t2.seed, "Base seed")->capture_default_str();
  t2_cmd->add_option("--threads", t2.threads, "Worker threads (0 = auto)");
  t2_cmd->add_option("--output-dir", t2.output_dir, "Output directory");

  SweepOptions sp;
  std::string sp_values = "0,0.2,0.4,0.6,0.8";
  sp.fixed = 0.0;
  auto* sp_cmd = app.add_subcommand(
      "sweep-p", "Interactive growth across p values at fixed delta");
  sp_cmd->add_option("--values", sp_values,
                     "p values: comma list or start:stop:step")
      ->capture_default_str();
  sp_cmd->add_option("--delta", sp.fixed, "Fixed delta")
      ->capture_default_str();
  sp_cmd->add_option("--nodes", sp.nodes, "Target node count")
      ->capture_default_str();
  sp_cmd->add_option("--runs", sp.runs, "Runs per cell")
      ->capture_default_str();
  sp_cmd->add_option("--seed", sp.seed, "Base seed")->capture_default_str();
  sp_cmd->add_option("--threads", sp.threads, "Worker threads (0 = auto)");
  sp_cmd->add_option("--output-dir", sp.output_dir, "Output directory");

  SweepOptions sd;
  std::string sd_values = "0,0.007,0.014,0.021,0.028,0.035";
  sd.fixed = kDefaultOneHostProbability;
  auto* sd_cmd = app.add_subcommand(
      "sweep-delta", "Interactive growth across delta values at fixed p");
  sd_cmd->add_option("--values", sd_values,
                     "delta values: comma list or start:stop:step")
      ->capture_default_str();
  sd_cmd->add_option("--p", sd.fixed, "Fixed p")->capture_default_str();
  sd_cmd->add_option("--nodes", sd.nodes, "Target node count")
      ->capture_default_str();
  sd_cmd->add_option("--runs", sd.runs, "Runs per cell")
      ->capture_default_str();
  sd_cmd->add_option("--seed", sd.seed, "Base seed")->capture_default_str();
  sd_cmd->add_option("--threads", sd.threads, "Worker threads (0 = auto)");
  sd_cmd->add_option("--output-dir", sd.output_dir, "Output directory");

  GridOptions grid;
  std::string grid_p = "0:0.8:0.1";
  std::string grid_delta = "0:0.035:0.005";
  auto* grid_cmd = app.add_subcommand(
      "grid", "Cartesian (p, delta) sweep emitting contour CSVs");
  grid_cmd->add_option("--p", grid_p, "p values: comma list or range")
      ->capture_default_str();
  grid_cmd->add_option("--delta", grid_delta,
                       "delta values: comma list or range")
      ->capture_default_str();
  grid_cmd->add_option("--nodes", grid.nodes, "Target node count")
      ->capture_default_str();
  grid_cmd->add_option("--runs", grid.runs, "Runs per cell")
      ->capture_default_str();
  grid_cmd->add_option("--seed", grid.seed, "Base seed")
      ->capture_default_str();
  grid_cmd->add_option("--threads", grid.threads, "Worker threads (0 = auto)");
  grid_cmd->add_option("--output-dir", grid.output_dir, "Output directory");

  TrajectoryOptions traj;
  auto* traj_cmd = app.add_subcommand(
      "trajectory", "Track the seed nodes' mean degree while growing");
  add_model_flags(traj_cmd, traj.model);
  traj_cmd->add_option("--nodes", traj.nodes, "Target node count")
      ->capture_default_str();
  traj_cmd->add_option("--seed", traj.seed, "RNG seed")
      ->capture_default_str();
  traj_cmd->add_option("--sample-every", traj.sample_every,
                       "Growth steps between samples")
      ->capture_default_str();
  traj_cmd->add_option("--output-dir", traj.output_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_cmd) {
      cmd_generate(gen);
    } else if (*ana_cmd) {
      cmd_analyze(ana);
    } else if (*t2_cmd) {
      cmd_table2(t2);
    } else if (*sp_cmd) {
      sp.values = parse_values(sp_values);
      cmd_sweep_p(sp);
    } else if (*sd_cmd) {
      sd.values = parse_values(sd_values);
      cmd_sweep_delta(sd);
    } else if (*grid_cmd) {
      grid.p_values = parse_values(grid_p);
      grid.delta_values = parse_values(grid_delta);
      cmd_grid(grid);
    } else if (*traj_cmd) {
      cmd_trajectory(traj);
    }
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace pfp
