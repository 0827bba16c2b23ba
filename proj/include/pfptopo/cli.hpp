#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pfptopo/model.hpp"

namespace pfp {

// Model selection as given on the command line: a preset plus explicit
// overrides. resolve_model applies overrides on top of the preset.
struct ModelFlags {
  std::string preset = "pfp";  // ba | ig | ba+pfp | pfp
  std::optional<std::string> growth;
  std::optional<std::string> scheme;
  std::optional<int> m;
  std::optional<double> p;
  std::optional<double> delta;
  std::optional<double> lambda;
  std::optional<int> seed_nodes;
  std::optional<int> seed_links;
};

ModelConfig resolve_model(const ModelFlags& flags, NodeId nodes,
                          std::uint64_t seed);

// "a,b,c" or inclusive range "start:stop:step" (1e-9 endpoint tolerance).
std::vector<double> parse_values(const std::string& text);

struct GenerateOptions {
  ModelFlags model;
  NodeId nodes = 9204;
  std::uint64_t seed = 1;
  std::filesystem::path out;  // empty: derived name under output_dir
  std::filesystem::path output_dir;
};

struct AnalyzeOptions {
  std::filesystem::path input;
  std::filesystem::path output_dir;
};

struct Table2Options {
  NodeId nodes = 9204;
  int runs = 10;
  std::uint64_t seed = 1;
  int threads = 0;
  std::filesystem::path output_dir;
};

struct SweepOptions {
  std::vector<double> values;
  double fixed = 0.0;  // the non-swept parameter (delta or p)
  NodeId nodes = 9204;
  int runs = 10;
  std::uint64_t seed = 1;
  int threads = 0;
  std::filesystem::path output_dir;
};

struct GridOptions {
  std::vector<double> p_values;
  std::vector<double> delta_values;
  NodeId nodes = 3000;
  int runs = 10;
  std::uint64_t seed = 1;
  int threads = 0;
  std::filesystem::path output_dir;
};

struct TrajectoryOptions {
  ModelFlags model;
  NodeId nodes = 9204;
  std::uint64_t seed = 1;
  int sample_every = 100;
  std::filesystem::path output_dir;
};

void cmd_generate(const GenerateOptions& opts);
void cmd_analyze(const AnalyzeOptions& opts);
void cmd_table2(const Table2Options& opts);
void cmd_sweep_p(const SweepOptions& opts);
void cmd_sweep_delta(const SweepOptions& opts);
void cmd_grid(const GridOptions& opts);
void cmd_trajectory(const TrajectoryOptions& opts);

// Full command-line driver. Exit codes: 0 success, 2 usage error, 3 I/O
// error, 4 computation error.
int run_cli(int argc, const char* const* argv);

}  // namespace pfp
