#include "pfptopo/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace pfp {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fixed(double x, int decimals) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

void write_curve_xy(const std::filesystem::path& path,
                    const std::map<double, double>& points) {
  auto out = open_out(path);
  out << "x,y\n";
  for (const auto& [x, y] : points) out << fmt(x) << ',' << fmt(y) << '\n';
  finish(out, path);
}

void write_curve_stats(const std::filesystem::path& path,
                       const std::map<double, CurvePoint>& points) {
  auto out = open_out(path);
  out << "x,y_mean,y_std,n_runs\n";
  for (const auto& [x, pt] : points)
    out << fmt(x) << ',' << fmt(pt.mean) << ',' << fmt(pt.stddev) << ','
        << pt.runs << '\n';
  finish(out, path);
}

nlohmann::ordered_json scheme_json(const PreferenceScheme& scheme) {
  nlohmann::ordered_json j;
  switch (scheme.kind) {
    case PreferenceKind::Linear:
      j["kind"] = "linear";
      break;
    case PreferenceKind::PositiveFeedback:
      j["kind"] = "positive_feedback";
      j["delta"] = scheme.param;
      break;
    case PreferenceKind::Exponential:
      j["kind"] = "exponential";
      j["lambda"] = scheme.param;
      break;
  }
  return j;
}

}  // namespace

void write_analysis(const std::filesystem::path& dir,
                    const MetricsReport& r) {
  std::filesystem::create_directories(dir);
  const auto path = dir / "scalars.csv";
  auto out = open_out(path);
  bool first = true;
  for (Scalar s : all_scalars()) {
    out << (first ? "" : ",") << scalar_name(s);
    first = false;
  }
  out << '\n';
  first = true;
  for (Scalar s : all_scalars()) {
    out << (first ? "" : ",");
    if (const auto v = scalar_value(r, s)) out << fmt(*v);
    first = false;
  }
  out << '\n';
  finish(out, path);
  for (Curve c : all_curves())
    write_curve_xy(dir / (std::string(curve_name(c)) + ".csv"),
                   curve_points(r, c));
}

namespace {

void write_experiment_impl(const std::filesystem::path& dir,
                           std::span<const ConfigResult* const> results,
                           bool curves) {
  std::filesystem::create_directories(dir);
  const auto path = dir / "runs.csv";
  auto out = open_out(path);
  out << "config,run,seed";
  for (Scalar s : all_scalars()) out << ',' << scalar_name(s);
  out << '\n';
  for (const ConfigResult* cr : results) {
    for (const RunResult& run : cr->runs) {
      out << cr->label << ',' << run.run_index << ',' << run.seed;
      for (Scalar s : all_scalars()) {
        out << ',';
        if (const auto v = scalar_value(run.report, s)) out << fmt(*v);
      }
      out << '\n';
    }
    const char* kinds[] = {"mean", "stddev"};
    for (const char* kind : kinds) {
      out << cr->label << ',' << kind << ',';
      for (Scalar s : all_scalars()) {
        const ScalarStat& stat = cr->average.stat(s);
        out << ',';
        if (stat.defined_runs > 0)
          out << fmt(kind[0] == 'm' ? stat.mean : stat.stddev);
      }
      out << '\n';
    }
    out << cr->label << ",defined_runs,";
    for (Scalar s : all_scalars())
      out << ',' << cr->average.stat(s).defined_runs;
    out << '\n';
  }
  finish(out, path);

  if (!curves) return;
  for (const ConfigResult* cr : results) {
    const auto config_dir = dir / cr->slug;
    std::filesystem::create_directories(config_dir);
    for (Curve c : all_curves())
      write_curve_stats(config_dir / (std::string(curve_name(c)) + ".csv"),
                        cr->average.curve(c));
  }
}

}  // namespace

void write_experiment(const std::filesystem::path& dir,
                      std::span<const ConfigResult> results, bool curves) {
  std::vector<const ConfigResult*> ptrs;
  ptrs.reserve(results.size());
  for (const ConfigResult& cr : results) ptrs.push_back(&cr);
  write_experiment_impl(dir, ptrs, curves);
}

void write_experiment(const std::filesystem::path& dir,
                      const SweepResult& sweep, bool curves) {
  std::vector<const ConfigResult*> ptrs;
  ptrs.reserve(sweep.cells.size());
  for (const SweepCell& cell : sweep.cells) ptrs.push_back(&cell.result);
  write_experiment_impl(dir, ptrs, curves);
}

void write_contours(const std::filesystem::path& dir,
                    const SweepResult& sweep) {
  std::filesystem::create_directories(dir);
  const std::pair<const char*, Scalar> metrics[] = {
      {"theta", Scalar::Theta}, {"gamma", Scalar::Gamma},
      {"alpha", Scalar::Alpha}};
  for (const auto& [name, scalar] : metrics) {
    const auto path = dir / (std::string(name) + ".csv");
    auto out = open_out(path);
    out << "p,delta,mean,stddev,defined_runs,warning\n";
    for (const SweepCell& cell : sweep.cells) {
      const ScalarStat& stat = cell.result.average.stat(scalar);
      out << fmt(cell.p) << ',' << fmt(cell.delta) << ',';
      if (stat.defined_runs > 0) out << fmt(stat.mean);
      out << ',';
      if (stat.defined_runs > 0) out << fmt(stat.stddev);
      out << ',' << stat.defined_runs << ','
          << (cell.delta > kTippingDelta ? "tipping" : "") << '\n';
    }
    finish(out, path);
  }
}

void write_trajectory(const std::filesystem::path& path,
                      const Trajectory& t) {
  auto out = open_out(path);
  out << "n,mean_seed_degree\n";
  for (const auto& [n, mean] : t.samples)
    out << n << ',' << fmt(mean) << '\n';
  finish(out, path);
}

void write_generate_sidecar(const std::filesystem::path& path,
                            const ModelConfig& cfg, const Graph& g,
                            double wall_seconds) {
  nlohmann::ordered_json j;
  j["command"] = "generate";
  nlohmann::ordered_json model;
  model["growth"] = cfg.growth == GrowthKind::NewNodeOnly ? "new-node-only"
                                                          : "interactive";
  model["preference"] = scheme_json(cfg.scheme);
  if (cfg.growth == GrowthKind::NewNodeOnly)
    model["new_node_links"] = cfg.new_node_links;
  else
    model["one_host_probability"] = cfg.one_host_probability;
  model["seed_nodes"] = cfg.seed_nodes;
  model["seed_links"] = cfg.seed_links;
  j["model"] = model;
  j["target_nodes"] = cfg.target_nodes;
  j["rng_seed"] = cfg.rng_seed;
  nlohmann::ordered_json result;
  result["nodes"] = g.node_count();
  result["links"] = g.link_count();
  result["seed_links"] = g.seed_links();
  result["external_links"] = g.external_links();
  result["internal_links"] = g.internal_links();
  j["result"] = result;
  j["wall_seconds"] = wall_seconds;
  auto out = open_out(path);
  out << j.dump(2) << '\n';
  finish(out, path);
}

namespace {

struct Row {
  const char* name;
  Scalar scalar;
  enum Style { Count, Exponent2, Exponent3, Percent, Mean1, Plain2 } style;
};

constexpr Row kSummaryRows[] = {
    {"nodes N", Scalar::Nodes, Row::Count},
    {"links L", Scalar::Links, Row::Count},
    {"internal links", Scalar::InternalLinks, Row::Count},
    {"external links", Scalar::ExternalLinks, Row::Count},
    {"rich-club exponent theta", Scalar::Theta, Row::Exponent2},
    {"phi(0.01)", Scalar::Phi001, Row::Percent},
    {"top clique size", Scalar::TopClique, Row::Mean1},
    {"P(1)", Scalar::P1, Row::Percent},
    {"P(2)", Scalar::P2, Row::Percent},
    {"P(3)", Scalar::P3, Row::Percent},
    {"degree exponent gamma", Scalar::Gamma, Row::Exponent3},
    {"max degree k_max", Scalar::MaxDegree, Row::Mean1},
    {"assortativity alpha", Scalar::Alpha, Row::Exponent3},
    {"char path length l*", Scalar::EllStar, Row::Plain2},
};

std::string styled(const ScalarStat& stat, Row::Style style) {
  if (stat.defined_runs == 0) return "-";
  switch (style) {
    case Row::Count: return fixed(stat.mean, 0);
    case Row::Exponent2: return fixed(stat.mean, 2);
    case Row::Exponent3: return fixed(stat.mean, 3);
    case Row::Percent: return fixed(100.0 * stat.mean, 1) + "%";
    case Row::Mean1: return fixed(stat.mean, 1);
    case Row::Plain2: return fixed(stat.mean, 2);
  }
  return "-";
}

void append_cell(std::string& line, const std::string& text, int width) {
  line += text;
  for (int i = static_cast<int>(text.size()); i < width; ++i) line += ' ';
}

}  // namespace

std::string format_summary(std::span<const ConfigResult> results) {
  constexpr int name_width = 28;
  constexpr int col_width = 12;
  std::string out;
  std::string header;
  append_cell(header, "", name_width);
  for (const ConfigResult& cr : results)
    append_cell(header, cr.label, col_width);
  out += header + '\n';
  for (const Row& row : kSummaryRows) {
    std::string line;
    append_cell(line, row.name, name_width);
    for (const ConfigResult& cr : results)
      append_cell(line, styled(cr.average.stat(row.scalar), row.style),
                  col_width);
    out += line + '\n';
  }
  return out;
}

std::string format_sweep_summary(const SweepResult& sweep) {
  constexpr int w = 10;
  std::string out;
  std::string header;
  for (const char* name :
       {"p", "delta", "theta", "gamma", "alpha", "k_max", "P(1)"})
    append_cell(header, name, w);
  out += header + "\n";
  for (const SweepCell& cell : sweep.cells) {
    std::string line;
    append_cell(line, fmt(cell.p), w);
    append_cell(line, fmt(cell.delta), w);
    append_cell(line, styled(cell.result.average.stat(Scalar::Theta),
                             Row::Exponent2), w);
    append_cell(line, styled(cell.result.average.stat(Scalar::Gamma),
                             Row::Exponent3), w);
    append_cell(line, styled(cell.result.average.stat(Scalar::Alpha),
                             Row::Exponent3), w);
    append_cell(line, styled(cell.result.average.stat(Scalar::MaxDegree),
                             Row::Mean1), w);
    append_cell(line, styled(cell.result.average.stat(Scalar::P1),
                             Row::Percent), w);
    if (cell.delta > kTippingDelta) line += " tipping";
    out += line + '\n';
  }
  return out;
}

std::string format_report_line(const MetricsReport& r) {
  std::ostringstream out;
  out << "N=" << r.nodes << " L=" << r.links;
  out << " gamma=" << (r.degrees.gamma ? fixed(*r.degrees.gamma, 3) : "-");
  out << " theta=" << (r.rich.theta ? fixed(*r.rich.theta, 2) : "-");
  out << " alpha=" << (r.mixing.alpha ? fixed(*r.mixing.alpha, 3) : "-");
  out << " l*=" << fixed(r.paths.ell_star, 2);
  out << " k_max=" << r.degrees.max_degree;
  out << " phi(0.01)=" << fixed(100.0 * r.phi_001, 1) << '%';
  out << " n_clique=" << r.rich.top_clique;
  return out.str();
}

}  // namespace pfp
