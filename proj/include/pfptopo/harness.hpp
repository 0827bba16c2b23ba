#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfptopo/metrics.hpp"
#include "pfptopo/model.hpp"

namespace pfp {

// Scalar metrics of one report, in summary-table row order.
enum class Scalar {
  Nodes,
  Links,
  SeedLinks,
  InternalLinks,
  ExternalLinks,
  Theta,
  Phi001,
  TopClique,
  P1,
  P2,
  P3,
  Gamma,
  MaxDegree,
  Alpha,
  EllStar,
};
inline constexpr std::size_t kScalarCount = 15;
std::span<const Scalar> all_scalars();
const char* scalar_name(Scalar s);
std::optional<double> scalar_value(const MetricsReport& r, Scalar s);

enum class Curve { Pk, Phi, Knn, PathCcd, KtCcd, KtByDegree };
inline constexpr std::size_t kCurveCount = 6;
std::span<const Curve> all_curves();
const char* curve_name(Curve c);
std::map<double, double> curve_points(const MetricsReport& r, Curve c);

struct ScalarStat {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 below 2 values
  int defined_runs = 0;
};

struct CurvePoint {
  double mean = 0.0;
  double stddev = 0.0;
  int runs = 0;
};

struct AveragedReport {
  int runs = 0;
  std::array<ScalarStat, kScalarCount> scalars{};
  std::array<std::map<double, CurvePoint>, kCurveCount> curves{};

  const ScalarStat& stat(Scalar s) const {
    return scalars[static_cast<std::size_t>(s)];
  }
  const std::map<double, CurvePoint>& curve(Curve c) const {
    return curves[static_cast<std::size_t>(c)];
  }
};

struct RunResult {
  int run_index = 0;
  std::uint64_t seed = 0;
  MetricsReport report;
};

// Per-run scalars are averaged arithmetically; runs where a scalar is
// undefined are excluded from that scalar's mean and counted. Curves are
// averaged pointwise at common abscissae; absent points are not zero-filled.
AveragedReport average_reports(std::span<const RunResult> runs);

struct ConfigResult {
  std::string label;  // human name, e.g. "BA+PFP" or "p=0.4, delta=0.021"
  std::string slug;   // path-safe name, e.g. "ba_pfp" or "p0.4_d0.021"
  ModelConfig config;
  std::vector<RunResult> runs;
  AveragedReport average;
};

struct ExperimentSpec {
  std::vector<ModelConfig> configs;
  std::vector<std::string> labels;  // optional, sized like configs when set
  int runs_per_config = 10;
  std::uint64_t base_seed = 1;
  int threads = 0;  // 0 = hardware concurrency
};

// Runs every (config, run) cell, in parallel when threads allow; run r of
// every config uses seed base_seed + r, so a cell can be reproduced alone.
std::vector<ConfigResult> run_experiment(const ExperimentSpec& spec);

// The four standard models at the same size, averaged over `runs` seeds.
std::vector<ConfigResult> run_table2(NodeId nodes = 9204, int runs = 10,
                                     std::uint64_t base_seed = 1,
                                     int threads = 0);

struct SweepCell {
  double p = 0.0;
  double delta = 0.0;
  ConfigResult result;
};

struct SweepResult {
  NodeId nodes = 0;
  int runs = 0;
  std::uint64_t base_seed = 1;
  std::vector<SweepCell> cells;  // sorted by (p, delta)
};

// Rich-club fits degrade past this point; sweep outputs carry a warning.
inline constexpr double kTippingDelta = 0.028;

SweepResult sweep_p(std::span<const double> p_values, NodeId nodes = 9204,
                    int runs = 10, std::uint64_t base_seed = 1,
                    int threads = 0, double delta = 0.0);
SweepResult sweep_delta(std::span<const double> delta_values,
                        NodeId nodes = 9204, int runs = 10,
                        std::uint64_t base_seed = 1, int threads = 0,
                        double p = kDefaultOneHostProbability);
SweepResult sweep_grid(std::span<const double> p_values,
                       std::span<const double> delta_values,
                       NodeId nodes = 3000, int runs = 10,
                       std::uint64_t base_seed = 1, int threads = 0);

struct Trajectory {
  // (node count, mean degree of the initial seed-node set) per sample
  std::vector<std::pair<NodeId, double>> samples;
};

// Samples the seed nodes' mean degree at the seed graph and after every
// sample_every growth steps (plus the final state).
Trajectory track_trajectory(const ModelConfig& cfg, int sample_every);

}  // namespace pfp
