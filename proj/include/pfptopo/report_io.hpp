#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "pfptopo/errors.hpp"
#include "pfptopo/harness.hpp"
#include "pfptopo/metrics.hpp"
#include "pfptopo/model.hpp"

namespace pfp {

// Single-graph analysis: scalars.csv (one row) plus one x,y file per curve.
void write_analysis(const std::filesystem::path& dir, const MetricsReport& r);

// Experiment output under dir: runs.csv with one row per (config, run) and
// aggregate rows, plus <config slug>/<curve>.csv with x,y_mean,y_std,n_runs
// when curves is set.
void write_experiment(const std::filesystem::path& dir,
                      std::span<const ConfigResult> results,
                      bool curves = true);
void write_experiment(const std::filesystem::path& dir,
                      const SweepResult& sweep, bool curves = true);

// theta.csv / gamma.csv / alpha.csv, one row per cell; cells past the
// tipping delta carry a warning flag.
void write_contours(const std::filesystem::path& dir, const SweepResult& sweep);

void write_trajectory(const std::filesystem::path& path, const Trajectory& t);

// generate's metadata sidecar; records everything needed to reproduce the
// edge list plus observed link counts and wall time.
void write_generate_sidecar(const std::filesystem::path& path,
                            const ModelConfig& cfg, const Graph& g,
                            double wall_seconds);

// Human-readable summary in the four-column layout of the model comparison
// table; one column per config.
std::string format_summary(std::span<const ConfigResult> results);
std::string format_sweep_summary(const SweepResult& sweep);
std::string format_report_line(const MetricsReport& r);

}  // namespace pfp
