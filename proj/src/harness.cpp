#include "pfptopo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "pfptopo/generate.hpp"

namespace pfp {

namespace {

constexpr std::array<Scalar, kScalarCount> kScalars = {
    Scalar::Nodes,     Scalar::Links,  Scalar::SeedLinks,
    Scalar::InternalLinks, Scalar::ExternalLinks, Scalar::Theta,
    Scalar::Phi001,    Scalar::TopClique, Scalar::P1,
    Scalar::P2,        Scalar::P3,     Scalar::Gamma,
    Scalar::MaxDegree, Scalar::Alpha,  Scalar::EllStar,
};

constexpr std::array<Curve, kCurveCount> kCurves = {
    Curve::Pk,    Curve::Phi,   Curve::Knn,
    Curve::PathCcd, Curve::KtCcd, Curve::KtByDegree,
};

std::string num_slug(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// Executes fn(0..jobs-1) on up to `threads` workers; results land in
// caller-owned slots, so the merge order never depends on scheduling.
void parallel_for(int jobs, int threads,
                  const std::function<void(int)>& fn) {
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  threads = std::min(threads, jobs);
  if (threads <= 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= jobs) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

SweepResult run_sweep(std::vector<std::pair<double, double>> keys,
                      NodeId nodes, int runs, std::uint64_t base_seed,
                      int threads) {
  std::sort(keys.begin(), keys.end());
  ExperimentSpec spec;
  spec.runs_per_config = runs;
  spec.base_seed = base_seed;
  spec.threads = threads;
  for (const auto& [p, delta] : keys) {
    ModelConfig cfg;
    cfg.growth = GrowthKind::Interactive;
    cfg.one_host_probability = p;
    cfg.scheme = PreferenceScheme::positive_feedback(delta);
    cfg.target_nodes = nodes;
    spec.configs.push_back(cfg);
    spec.labels.push_back("p=" + num_slug(p) + ", delta=" + num_slug(delta));
  }
  auto results = run_experiment(spec);
  SweepResult out;
  out.nodes = nodes;
  out.runs = runs;
  out.base_seed = base_seed;
  out.cells.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    results[i].slug =
        "p" + num_slug(keys[i].first) + "_d" + num_slug(keys[i].second);
    out.cells.push_back(
        {keys[i].first, keys[i].second, std::move(results[i])});
  }
  return out;
}

}  // namespace

std::span<const Scalar> all_scalars() { return kScalars; }
std::span<const Curve> all_curves() { return kCurves; }

const char* scalar_name(Scalar s) {
  switch (s) {
    case Scalar::Nodes: return "n";
    case Scalar::Links: return "l";
    case Scalar::SeedLinks: return "l_seed";
    case Scalar::InternalLinks: return "l_int";
    case Scalar::ExternalLinks: return "l_ext";
    case Scalar::Theta: return "theta";
    case Scalar::Phi001: return "phi_0.01";
    case Scalar::TopClique: return "n_clique";
    case Scalar::P1: return "p1";
    case Scalar::P2: return "p2";
    case Scalar::P3: return "p3";
    case Scalar::Gamma: return "gamma";
    case Scalar::MaxDegree: return "k_max";
    case Scalar::Alpha: return "alpha";
    case Scalar::EllStar: return "ell_star";
  }
  return "?";
}

std::optional<double> scalar_value(const MetricsReport& r, Scalar s) {
  switch (s) {
    case Scalar::Nodes: return r.nodes;
    case Scalar::Links: return static_cast<double>(r.links);
    case Scalar::SeedLinks: return static_cast<double>(r.seed_links);
    case Scalar::InternalLinks: return static_cast<double>(r.internal_links);
    case Scalar::ExternalLinks: return static_cast<double>(r.external_links);
    case Scalar::Theta: return r.rich.theta;
    case Scalar::Phi001: return r.phi_001;
    case Scalar::TopClique: return r.rich.top_clique;
    case Scalar::P1: return r.degrees.probability(1);
    case Scalar::P2: return r.degrees.probability(2);
    case Scalar::P3: return r.degrees.probability(3);
    case Scalar::Gamma: return r.degrees.gamma;
    case Scalar::MaxDegree: return r.degrees.max_degree;
    case Scalar::Alpha: return r.mixing.alpha;
    case Scalar::EllStar: return r.paths.ell_star;
  }
  return std::nullopt;
}

const char* curve_name(Curve c) {
  switch (c) {
    case Curve::Pk: return "pk";
    case Curve::Phi: return "phi";
    case Curve::Knn: return "knn";
    case Curve::PathCcd: return "path_ccd";
    case Curve::KtCcd: return "kt_ccd";
    case Curve::KtByDegree: return "kt_by_degree";
  }
  return "?";
}

std::map<double, double> curve_points(const MetricsReport& r, Curve c) {
  std::map<double, double> out;
  switch (c) {
    case Curve::Pk:
      for (const auto& [k, p] : r.degrees.pk) out.emplace(k, p);
      break;
    case Curve::Phi:
      return r.rich.phi;
    case Curve::Knn:
      for (const auto& [k, v] : r.mixing.knn) out.emplace(k, v);
      break;
    case Curve::PathCcd:
      for (const auto& [l, p] : r.paths.ccd) out.emplace(l, p);
      break;
    case Curve::KtCcd:
      for (const auto& [kt, p] : r.triangles.ccd)
        out.emplace(static_cast<double>(kt), p);
      break;
    case Curve::KtByDegree:
      for (const auto& [k, v] : r.triangles.kt_by_degree) out.emplace(k, v);
      break;
  }
  return out;
}

AveragedReport average_reports(std::span<const RunResult> runs) {
  AveragedReport avg;
  avg.runs = static_cast<int>(runs.size());
  for (Scalar s : kScalars) {
    double sum = 0;
    int count = 0;
    for (const RunResult& r : runs)
      if (const auto v = scalar_value(r.report, s)) {
        sum += *v;
        ++count;
      }
    ScalarStat& stat = avg.scalars[static_cast<std::size_t>(s)];
    stat.defined_runs = count;
    if (count == 0) continue;
    stat.mean = sum / count;
    if (count >= 2) {
      double ss = 0;
      for (const RunResult& r : runs)
        if (const auto v = scalar_value(r.report, s))
          ss += (*v - stat.mean) * (*v - stat.mean);
      stat.stddev = std::sqrt(ss / (count - 1));
    }
  }
  for (Curve c : kCurves) {
    std::map<double, std::pair<double, int>> acc;  // x -> (sum, count)
    for (const RunResult& r : runs)
      for (const auto& [x, y] : curve_points(r.report, c)) {
        auto& [sum, count] = acc[x];
        sum += y;
        ++count;
      }
    auto& curve = avg.curves[static_cast<std::size_t>(c)];
    for (const auto& [x, sc] : acc)
      curve.emplace(x, CurvePoint{sc.first / sc.second, 0.0, sc.second});
    for (const RunResult& r : runs)
      for (const auto& [x, y] : curve_points(r.report, c)) {
        CurvePoint& pt = curve[x];
        pt.stddev += (y - pt.mean) * (y - pt.mean);
      }
    for (auto& [x, pt] : curve)
      pt.stddev = pt.runs >= 2 ? std::sqrt(pt.stddev / (pt.runs - 1)) : 0.0;
  }
  return avg;
}

std::vector<ConfigResult> run_experiment(const ExperimentSpec& spec) {
  if (spec.configs.empty())
    throw std::invalid_argument("harness: no configurations");
  if (spec.runs_per_config < 1)
    throw std::invalid_argument("harness: runs_per_config must be >= 1");
  if (!spec.labels.empty() && spec.labels.size() != spec.configs.size())
    throw std::invalid_argument("harness: labels/configs size mismatch");
  for (const ModelConfig& cfg : spec.configs) cfg.validate();

  const int runs = spec.runs_per_config;
  const int jobs = static_cast<int>(spec.configs.size()) * runs;
  std::vector<std::vector<RunResult>> results(spec.configs.size());
  for (auto& r : results) r.resize(static_cast<std::size_t>(runs));

  parallel_for(jobs, spec.threads, [&](int i) {
    const std::size_t ci = static_cast<std::size_t>(i) / runs;
    const int run = i % runs;
    ModelConfig cfg = spec.configs[ci];
    cfg.rng_seed = spec.base_seed + static_cast<std::uint64_t>(run);
    RunResult& slot = results[ci][static_cast<std::size_t>(run)];
    slot.run_index = run;
    slot.seed = cfg.rng_seed;
    slot.report = report(generate(cfg));
  });

  std::vector<ConfigResult> out;
  out.reserve(spec.configs.size());
  for (std::size_t ci = 0; ci < spec.configs.size(); ++ci) {
    ConfigResult cr;
    cr.label = spec.labels.empty() ? "config" + std::to_string(ci)
                                   : spec.labels[ci];
    cr.slug = cr.label;
    cr.config = spec.configs[ci];
    cr.runs = std::move(results[ci]);
    cr.average = average_reports(cr.runs);
    out.push_back(std::move(cr));
  }
  return out;
}

std::vector<ConfigResult> run_table2(NodeId nodes, int runs,
                                     std::uint64_t base_seed, int threads) {
  if (nodes < 100)
    throw std::invalid_argument("run_table2: nodes must be >= 100");
  ExperimentSpec spec;
  spec.configs = {ModelConfig::ba(nodes, base_seed),
                  ModelConfig::ig(nodes, base_seed),
                  ModelConfig::ba_pfp(nodes, base_seed),
                  ModelConfig::pfp(nodes, base_seed)};
  spec.labels = {"BA", "IG", "BA+PFP", "PFP"};
  spec.runs_per_config = runs;
  spec.base_seed = base_seed;
  spec.threads = threads;
  auto out = run_experiment(spec);
  out[0].slug = "ba";
  out[1].slug = "ig";
  out[2].slug = "ba_pfp";
  out[3].slug = "pfp";
  return out;
}

SweepResult sweep_p(std::span<const double> p_values, NodeId nodes, int runs,
                    std::uint64_t base_seed, int threads, double delta) {
  if (p_values.empty()) throw std::invalid_argument("sweep_p: no values");
  std::vector<std::pair<double, double>> keys;
  for (double p : p_values) keys.emplace_back(p, delta);
  return run_sweep(std::move(keys), nodes, runs, base_seed, threads);
}

SweepResult sweep_delta(std::span<const double> delta_values, NodeId nodes,
                        int runs, std::uint64_t base_seed, int threads,
                        double p) {
  if (delta_values.empty())
    throw std::invalid_argument("sweep_delta: no values");
  std::vector<std::pair<double, double>> keys;
  for (double d : delta_values) keys.emplace_back(p, d);
  return run_sweep(std::move(keys), nodes, runs, base_seed, threads);
}

SweepResult sweep_grid(std::span<const double> p_values,
                       std::span<const double> delta_values, NodeId nodes,
                       int runs, std::uint64_t base_seed, int threads) {
  if (p_values.empty() || delta_values.empty())
    throw std::invalid_argument("sweep_grid: empty value list");
  std::vector<std::pair<double, double>> keys;
  for (double p : p_values)
    for (double d : delta_values) keys.emplace_back(p, d);
  return run_sweep(std::move(keys), nodes, runs, base_seed, threads);
}

Trajectory track_trajectory(const ModelConfig& cfg, int sample_every) {
  if (sample_every < 1)
    throw std::invalid_argument("track_trajectory: interval must be >= 1");
  Trajectory out;
  std::int64_t steps = -1;
  generate(cfg, [&](const Graph& g) {
    ++steps;
    const NodeId n = g.node_count();
    const bool due = steps % sample_every == 0 || n == cfg.target_nodes;
    if (!due) return;
    if (!out.samples.empty() && out.samples.back().first == n) return;
    double sum = 0;
    for (NodeId v = 0; v < cfg.seed_nodes; ++v) sum += g.degree(v);
    out.samples.emplace_back(n, sum / cfg.seed_nodes);
  });
  return out;
}

}  // namespace pfp
