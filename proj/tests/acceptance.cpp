// Standalone verification gate. Each numbered criterion prints exactly one
// PASS/FAIL line with the measured values; the process exit status is the
// number of unexpected failures. Criterion 11 contains one tabulated value
// that is inconsistent with its own formula; that entry is reported as a
// FAIL but the line is expected and does not affect the exit status, while
// drift away from the true formula value still counts as a failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfptopo/edge_list.hpp"
#include "pfptopo/fit.hpp"
#include "pfptopo/generate.hpp"
#include "pfptopo/graph.hpp"
#include "pfptopo/harness.hpp"
#include "pfptopo/metrics.hpp"
#include "pfptopo/model.hpp"
#include "pfptopo/preference.hpp"
#include "pfptopo/report_io.hpp"
#include "pfptopo/rng.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace pfp;

namespace {

int g_unexpected_failures = 0;

void verdict(int criterion, bool ok, const std::string& detail,
             bool expected_failure = false) {
  std::printf("%s criterion %2d: %s\n",
              ok ? "PASS" : (expected_failure ? "FAIL (expected)" : "FAIL"),
              criterion, detail.c_str());
  std::fflush(stdout);
  if (!ok && !expected_failure) ++g_unexpected_failures;
}

std::string num(double x, int places = 3) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

// Appends "name=got[ref r±tol]" and returns whether got is inside the band.
bool band(std::string& out, const char* name, double got, double ref,
          double tol, int places = 3) {
  const bool ok = std::abs(got - ref) <= tol;
  out += std::string(name) + "=" + num(got, places) + "[ref " +
         num(ref, places) + "±" + num(tol, places) + (ok ? "] " : "]<-off ");
  return ok;
}

bool in_range(std::string& out, const char* name, double got, double lo,
              double hi, int places = 1) {
  const bool ok = got >= lo && got <= hi;
  out += std::string(name) + "=" + num(got, places) + "[range " +
         num(lo, places) + ".." + num(hi, places) + (ok ? "] " : "]<-off ");
  return ok;
}

double mean_stat(const ConfigResult& cr, Scalar s) {
  return cr.average.stat(s).mean;
}

bool monotone(const std::vector<double>& xs, bool increasing, bool strict) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double d = increasing ? xs[i] - xs[i - 1] : xs[i - 1] - xs[i];
    if (strict ? d <= 0 : d < 0) return false;
  }
  return true;
}

std::string join(const std::vector<double>& xs, int places = 3) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + num(xs[i], places);
  return out + "}";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- criteria 1-3: the four-model comparison at full scale ----------------

void criteria_table(const std::vector<ConfigResult>& table) {
  const ConfigResult& ba = table[0];
  const ConfigResult& ig = table[1];
  const ConfigResult& bapfp = table[2];
  const ConfigResult& pfp_r = table[3];

  {
    std::string d = "PFP at N=9204 (10 runs): ";
    bool ok = true;
    ok &= band(d, "gamma", mean_stat(pfp_r, Scalar::Gamma), -2.255, 0.08);
    ok &= band(d, "theta", mean_stat(pfp_r, Scalar::Theta), -1.49, 0.08);
    ok &= band(d, "alpha", mean_stat(pfp_r, Scalar::Alpha), -0.234, 0.03);
    ok &= band(d, "ell*", mean_stat(pfp_r, Scalar::EllStar), 3.07, 0.15);
    ok &= band(d, "phi1%", 100 * mean_stat(pfp_r, Scalar::Phi001), 44.8, 5.0,
               1);
    ok &= band(d, "P1%", 100 * mean_stat(pfp_r, Scalar::P1), 26.2, 3.0, 1);
    ok &= band(d, "P2%", 100 * mean_stat(pfp_r, Scalar::P2), 33.7, 3.0, 1);
    ok &= in_range(d, "n_clique", mean_stat(pfp_r, Scalar::TopClique), 12.0,
                   20.0);
    ok &= in_range(d, "k_max", mean_stat(pfp_r, Scalar::MaxDegree), 1200.0,
                   3200.0, 0);
    verdict(1, ok, d);
  }
  {
    std::string d = "BA at N=9204 (10 runs): ";
    bool ok = true;
    ok &= band(d, "gamma", mean_stat(ba, Scalar::Gamma), -2.902, 0.1);
    ok &= band(d, "theta", mean_stat(ba, Scalar::Theta), -0.97, 0.08);
    ok &= band(d, "alpha", mean_stat(ba, Scalar::Alpha), -0.036, 0.02);
    ok &= band(d, "ell*", mean_stat(ba, Scalar::EllStar), 4.25, 0.15);
    const double p1 = mean_stat(ba, Scalar::P1);
    const double p2 = mean_stat(ba, Scalar::P2);
    const bool zero = p1 == 0.0 && p2 == 0.0;
    d += std::string("P1=") + num(p1, 4) + " P2=" + num(p2, 4) +
         (zero ? " (exactly 0) " : "<-off ");
    ok &= zero;
    verdict(2, ok, d);
  }
  {
    const double t_ig = mean_stat(ig, Scalar::Theta);
    const double t_pfp = mean_stat(pfp_r, Scalar::Theta);
    const double t_ba = mean_stat(ba, Scalar::Theta);
    const double t_bapfp = mean_stat(bapfp, Scalar::Theta);
    const double d1 = std::abs(t_ig - t_pfp);
    const double d2 = std::abs(t_ba - t_bapfp);
    const bool ok = d1 <= 0.05 && d2 <= 0.05;
    std::string d = "growth mechanism drives the rich club: |theta(IG)-theta(PFP)|=" +
                    num(d1) + " |theta(BA)-theta(BA+PFP)|=" + num(d2) +
                    " (both <=0.05 required); theta means IG=" + num(t_ig) +
                    " PFP=" + num(t_pfp) + " BA=" + num(t_ba) +
                    " BA+PFP=" + num(t_bapfp);
    verdict(3, ok, d);
  }
}

// --- criterion 4: sweep over p at delta=0 ---------------------------------

void criterion_sweep_p() {
  const std::vector<double> ps{0.0, 0.2, 0.4, 0.6, 0.8};
  const SweepResult sweep = sweep_p(ps, 9204, 10, 1, 0);
  const std::vector<double> theta_ref{-1.36, -1.43, -1.49, -1.56, -1.61};
  const std::vector<double> gamma_ref{-2.416, -2.229, -2.206, -2.151,
                                      -2.055};
  const std::vector<double> alpha_ref{-0.075, -0.095, -0.124, -0.150,
                                      -0.183};

  std::vector<double> theta, gamma, alpha;
  for (const SweepCell& cell : sweep.cells) {
    theta.push_back(mean_stat(cell.result, Scalar::Theta));
    gamma.push_back(mean_stat(cell.result, Scalar::Gamma));
    alpha.push_back(mean_stat(cell.result, Scalar::Alpha));
  }

  bool cells_ok = true;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    cells_ok &= std::abs(theta[i] - theta_ref[i]) <= 0.08;
    cells_ok &= std::abs(gamma[i] - gamma_ref[i]) <= 0.08;
    cells_ok &= std::abs(alpha[i] - alpha_ref[i]) <= 0.03;
  }
  const bool trend_ok = monotone(theta, false, false) &&
                        monotone(gamma, true, false) &&
                        monotone(alpha, false, false);
  std::string d =
      "p sweep 0..0.8 at N=9204: theta=" + join(theta) +
      "[ref " + join(theta_ref) + "±0.08] gamma=" + join(gamma) + "[ref " +
      join(gamma_ref) + "±0.08] alpha=" + join(alpha) + "[ref " +
      join(alpha_ref) + "±0.03] trends(theta down,gamma up,alpha down)=" +
      (trend_ok ? "yes" : "NO");
  verdict(4, cells_ok && trend_ok, d);
}

// --- criterion 5: sweep over delta at p=0.4 --------------------------------

void criterion_sweep_delta() {
  const std::vector<double> deltas{0.0, 0.007, 0.014, 0.021, 0.028};
  const SweepResult sweep = sweep_delta(deltas, 9204, 10, 1, 0);
  const std::vector<double> alpha_ref{-0.124, -0.172, -0.202, -0.234,
                                      -0.279};

  std::vector<double> alpha, theta, kmax;
  for (const SweepCell& cell : sweep.cells) {
    alpha.push_back(mean_stat(cell.result, Scalar::Alpha));
    theta.push_back(mean_stat(cell.result, Scalar::Theta));
    kmax.push_back(mean_stat(cell.result, Scalar::MaxDegree));
  }

  bool alpha_ok = monotone(alpha, false, false);
  for (std::size_t i = 0; i < deltas.size(); ++i)
    alpha_ok &= std::abs(alpha[i] - alpha_ref[i]) <= 0.03;

  double t_lo = theta[0], t_hi = theta[0];
  for (const double t : theta) {
    t_lo = std::min(t_lo, t);
    t_hi = std::max(t_hi, t);
  }
  const bool theta_ok = (t_hi - t_lo) <= 0.08;
  const bool kmax_ok = monotone(kmax, true, true);

  std::string d = "delta sweep 0..0.028 at N=9204: alpha=" + join(alpha) +
                  "[ref " + join(alpha_ref) +
                  "±0.03, monotone down] theta spread=" + num(t_hi - t_lo) +
                  "[<=0.08] k_max=" + join(kmax, 0) +
                  (kmax_ok ? " strictly up" : " NOT strictly up");
  verdict(5, alpha_ok && theta_ok && kmax_ok, d);
}

// --- criterion 6: internal/external link ratio -----------------------------

void criterion_link_ratio() {
  bool ok = true;
  std::string d = "L_int/L_ext at N=5000 vs (1+p)/(2-p): ";
  for (const double p : {0.0, 0.4, 0.8}) {
    double sum = 0.0;
    for (const std::uint64_t seed : {1, 2, 3}) {
      ModelConfig cfg = ModelConfig::pfp(5000, seed);
      cfg.one_host_probability = p;
      const Graph g = generate(cfg);
      sum += static_cast<double>(g.internal_links()) /
             static_cast<double>(g.external_links());
    }
    const double got = sum / 3.0;
    const double want = expected_link_ratio(p);
    const bool cell = std::abs(got - want) <= 0.05;
    d += "p=" + num(p, 1) + ":" + num(got) + "[ref " + num(want) +
         "±0.05" + (cell ? "] " : "]<-off ");
    ok &= cell;
  }
  verdict(6, ok, d);
}

// --- criterion 7: exact link budget across random configurations -----------

void criterion_link_budget() {
  Rng rng(123);
  int checked = 0;
  bool ok = true;
  std::string first_bad;
  for (int i = 0; i < 100; ++i) {
    const NodeId n = 100 + static_cast<NodeId>(rng.below(1901));
    const std::uint64_t seed = rng.next_u64();
    ModelConfig cfg;
    const char* name = "";
    switch (rng.below(4)) {
      case 0: cfg = ModelConfig::ba(n, seed); name = "ba"; break;
      case 1: cfg = ModelConfig::ig(n, seed); name = "ig"; break;
      case 2: cfg = ModelConfig::ba_pfp(n, seed); name = "ba+pfp"; break;
      default: cfg = ModelConfig::pfp(n, seed); name = "pfp"; break;
    }
    const Graph g = generate(cfg);
    const std::int64_t want = 30 + 3 * (static_cast<std::int64_t>(n) - 10);
    const bool good =
        g.node_count() == n && g.link_count() == want && g.is_connected();
    if (!good && first_bad.empty())
      first_bad = std::string(" first offender: ") + name +
                  " n=" + std::to_string(n) +
                  " links=" + std::to_string(g.link_count()) +
                  " want=" + std::to_string(want);
    ok &= good;
    ++checked;
  }
  verdict(7, ok,
          "L = 30+3(N-10) and connectivity over " + std::to_string(checked) +
              " random configurations (N in [100,2000], all presets)" +
              first_bad);
}

// --- criterion 8: metric oracles on small random graphs --------------------

void criterion_oracles() {
  Rng rng(2024);
  int trials = 0, alpha_defined = 0;
  bool ok = true;
  std::string why;
  for (int t = 0; t < 1000 && ok; ++t) {
    const Graph g = pfp::test::random_connected(rng, 4, 60);
    ++trials;

    if (triangle_stats(g).kt != pfp::test::triangles_by_triples(g)) {
      ok = false;
      why = " triangle mismatch";
      break;
    }

    const auto ref_ell = pfp::test::mean_distance_floyd(g);
    if (!ref_ell || std::abs(path_stats(g).ell_star - *ref_ell) > 1e-9) {
      ok = false;
      why = " ell* mismatch";
      break;
    }

    const auto a = assortativity(g);
    const auto ref_a = pfp::test::pearson_assortativity(g);
    if (a.has_value() != ref_a.has_value() ||
        (a && std::abs(*a - *ref_a) > 1e-9)) {
      ok = false;
      why = " alpha mismatch";
      break;
    }
    if (a) ++alpha_defined;

    const auto rc = rich_club(g);
    const auto phis = pfp::test::phi_recount(g, rc.ranked_nodes);
    for (NodeId r = 2; r <= g.node_count(); ++r)
      if (std::abs(rc.phi_at_rank(r) -
                   phis[static_cast<std::size_t>(r - 2)]) > 1e-12) {
        ok = false;
        why = " phi mismatch at r=" + std::to_string(r);
        break;
      }
  }
  verdict(8, ok,
          "triangles/ell*/alpha/phi vs brute-force oracles on " +
              std::to_string(trials) + " random graphs (N<=60), alpha defined on " +
              std::to_string(alpha_defined) + why);
}

// --- criterion 9: power-law fitting ----------------------------------------

void criterion_fit() {
  std::vector<std::pair<double, double>> pts;
  for (int x = 2; x <= 100; ++x)
    pts.emplace_back(x, 2.5 * std::pow(x, -2.255));
  const auto exact = fit_power_law(pts, 2.0, 100.0);
  const double exact_err = exact ? std::abs(*exact + 2.255) : 1.0;

  Rng rng(7);
  for (auto& [x, y] : pts)
    y = 2.5 * std::pow(x, -2.255) * std::exp(0.01 * rng.normal());
  const auto noisy = fit_power_law(pts, 2.0, 100.0);
  const double noisy_err = noisy ? std::abs(*noisy + 2.255) : 1.0;

  const bool ok = exact_err <= 1e-9 && noisy_err <= 0.05;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "planted exponent -2.255: exact error %.2e [<=1e-9], "
                "noisy (sigma=0.01 in log space) error %.4f [<=0.05]",
                exact_err, noisy_err);
  verdict(9, ok, buf);
}

// --- criterion 10: byte-identical reruns ------------------------------------

void criterion_determinism() {
  const fs::path base = fs::temp_directory_path() / "pfptopo_acceptance";
  fs::remove_all(base);
  fs::create_directories(base);

  const std::string edges_a = edge_list_string(generate(ModelConfig::pfp(2000, 9)));
  const std::string edges_b = edge_list_string(generate(ModelConfig::pfp(2000, 9)));
  const bool edges_ok = edges_a == edges_b && !edges_a.empty();

  bool csv_ok = true;
  const fs::path ta = base / "table_a", tb = base / "table_b";
  write_experiment(ta, run_table2(300, 2, 17, 1));
  write_experiment(tb, run_table2(300, 2, 17, 1));
  csv_ok &= slurp(ta / "runs.csv") == slurp(tb / "runs.csv");
  for (const char* slug : {"ba", "ig", "ba_pfp", "pfp"})
    for (Curve c : all_curves()) {
      const std::string file = std::string(curve_name(c)) + ".csv";
      csv_ok &= slurp(ta / slug / file) == slurp(tb / slug / file);
    }

  const std::vector<double> ps{0.0, 0.4};
  const std::vector<double> ds{0.0, 0.021};
  const fs::path ga = base / "grid_a", gb = base / "grid_b";
  write_contours(ga, sweep_grid(ps, ds, 300, 1, 5, 1));
  write_contours(gb, sweep_grid(ps, ds, 300, 1, 5, 1));
  bool contours_ok = true;
  for (const char* file : {"theta.csv", "gamma.csv", "alpha.csv"})
    contours_ok &= slurp(ga / file) == slurp(gb / file) &&
                   !slurp(ga / file).empty();

  fs::remove_all(base);
  verdict(10, edges_ok && csv_ok && contours_ok,
          std::string("re-running the same seeds: edge lists ") +
              (edges_ok ? "identical" : "DIFFER") + ", experiment CSVs " +
              (csv_ok ? "identical" : "DIFFER") + ", contour CSVs " +
              (contours_ok ? "identical" : "DIFFER"));
}

// --- criterion 11: preference spot values -----------------------------------

void criterion_preference_table() {
  const auto expo = PreferenceScheme::exponential(1.15);
  const auto pf = PreferenceScheme::positive_feedback(0.021);

  struct Entry {
    const char* name;
    double got;
    double want;
  };
  const Entry consistent[] = {
      {"exp f(1000)", preference_weight(1000, expo), 2818.4},
      {"exp f(100)", preference_weight(100, expo), 199.5},
      {"exp f(10)/f(1)", preference_ratio(1, 10.0, expo), 14.1},
      {"pf f(100)", preference_weight(100, pf), 156.1},
      {"pf f(10)/f(1)", preference_ratio(1, 10.0, pf), 11.2},
  };
  bool five_ok = true;
  std::string d;
  for (const Entry& e : consistent) {
    const bool hit = std::abs(e.got - e.want) <= 0.1;
    d += std::string(e.name) + "=" + num(e.got, 1) + "[ref " +
         num(e.want, 1) + "±0.1" + (hit ? "] " : "]<-off ");
    five_ok &= hit;
  }

  // The sixth tabulated entry, 2722.7, contradicts the formula it is meant
  // to illustrate: k^(1+0.021 ln k) at k=1000 is 2723.8838. The mismatch is
  // reported honestly as an expected failure; what must hold is that the
  // computed value stays on the formula.
  const double pf1000 = preference_weight(1000, pf);
  const bool matches_table = std::abs(pf1000 - 2722.7) <= 0.1;
  const bool matches_formula = std::abs(pf1000 - 2723.8838) <= 0.1;
  d += "pf f(1000)=" + num(pf1000, 1) + "[tabulated 2722.7±0.1, formula 2723.9]";

  if (five_ok && matches_table) {
    verdict(11, true, d);
  } else if (five_ok && matches_formula) {
    verdict(11, false, d + " -- tabulated value is off its own formula",
            /*expected_failure=*/true);
  } else {
    verdict(11, false, d);
  }
}

template <typename F>
void guarded(std::initializer_list<int> criteria, F&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    for (const int c : criteria)
      verdict(c, false, std::string("unhandled error: ") + e.what());
  }
}

}  // namespace

int main() {
  std::printf("acceptance gate: PFP topology generator and metrics\n");
  guarded({1, 2, 3}, [] { criteria_table(run_table2(9204, 10, 1, 0)); });
  guarded({4}, criterion_sweep_p);
  guarded({5}, criterion_sweep_delta);
  guarded({6}, criterion_link_ratio);
  guarded({7}, criterion_link_budget);
  guarded({8}, criterion_oracles);
  guarded({9}, criterion_fit);
  guarded({10}, criterion_determinism);
  guarded({11}, criterion_preference_table);
  if (g_unexpected_failures == 0)
    std::printf("all criteria passed (one expected failure is tolerated "
                "when marked)\n");
  else
    std::printf("%d unexpected failure(s)\n", g_unexpected_failures);
  return g_unexpected_failures;
}
