#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/asymptotics.hpp"
#include "hecke/measures.hpp"
#include "hecke/patience.hpp"
#include "hecke/serialize.hpp"
#include "hecke/verify.hpp"
#include "hecke/version.hpp"

namespace {

using namespace hecke;

constexpr int kUsageError = 2;
constexpr int kVerifyFailure = 1;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HECKE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("HECKE_SEED must be a non-negative integer");
    }
  }
  return 12345;
}

std::string join(const std::vector<double>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

RunManifest make_manifest(const std::string& sub, std::uint64_t seed,
                          std::vector<std::pair<std::string, std::string>> params) {
  return {sub, std::move(params), seed, kVersion, utc_timestamp()};
}

// Writes data to path (or stdout) and the manifest next to it (or to stderr).
void emit(const std::string& path, const std::string& data, const RunManifest& m) {
  if (path.empty() || path == "-") {
    std::cout << data;
    std::cerr << m.to_json();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << data;
  std::ofstream side(path + ".manifest.json", std::ios::binary);
  side << m.to_json();
}

int cmd_verify(const std::string& level) {
  const auto results = run_verify(level == "full" ? VerifyLevel::full : VerifyLevel::fast);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " -- " << r.detail << " ("
              << format_fixed(r.seconds, 2) << " s)\n";
    ok = ok && r.passed;
  }
  std::cout << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? 0 : kVerifyFailure;
}

int cmd_exact(int n, int q, int max_n, int max_q, const std::string& out) {
  const auto d = exact_plancherel_hecke(n, q, {max_n, max_q});
  auto m = make_manifest("exact", 0, {{"n", std::to_string(n)}, {"q", std::to_string(q)}});
  auto j = nlohmann::ordered_json::parse(to_json(d));
  j["run"] = {{"subcommand", m.subcommand}, {"version", m.version}, {"n", n}, {"q", q}};
  emit(out, j.dump(2) + "\n", m);
  return 0;
}

int cmd_sample(std::size_t n, int q, std::uint64_t trials, std::uint64_t seed, unsigned threads,
               const std::string& out) {
  const auto records = sample_batch(n, q, trials, seed, threads);
  auto m = make_manifest("sample", seed, {{"n", std::to_string(n)}, {"q", std::to_string(q)},
                                          {"trials", std::to_string(trials)}});
  std::string csv = m.csv_header() + "trial,seed,shape,lis,lds\n";
  for (const auto& r : records) {
    csv += std::to_string(r.trial) + "," + std::to_string(r.seed) + "," + shape_cell(r.shape) + "," +
           std::to_string(r.lis) + "," + std::to_string(r.lds) + "\n";
  }
  emit(out, csv, m);
  return 0;
}

int cmd_sweep(std::size_t n, const std::vector<double>& alphas, const std::vector<double>& ks,
              std::uint64_t trials, std::uint64_t seed, unsigned threads, const std::string& out) {
  const bool alpha_mode = !alphas.empty();
  const auto& grid = alpha_mode ? alphas : ks;
  const auto mode = alpha_mode ? SweepConfig::Mode::alpha : SweepConfig::Mode::k;
  const auto rows = sweep_grid(n, mode, grid, trials, seed, threads);
  auto m = make_manifest("sweep", seed, {{"n", std::to_string(n)},
                                         {alpha_mode ? "alpha_grid" : "k_grid", join(grid)},
                                         {"trials", std::to_string(trials)},
                                         {"q_rule", alpha_mode ? "round(n^alpha)" : "round(k*sqrt(n))"}});
  std::string csv = m.csv_header() +
                    "n,q,alpha_or_k,trials,mean_lis,mean_lds,sigma_lis,sigma_lds,staircase_fraction\n";
  for (const auto& r : rows) {
    csv += std::to_string(r.n) + "," + std::to_string(r.q) + "," + format_fixed(r.parameter) + "," +
           std::to_string(r.trials) + "," + format_fixed(r.mean_lis) + "," + format_fixed(r.mean_lds) + "," +
           format_fixed(r.sigma_lis) + "," + format_fixed(r.sigma_lds) + "," +
           format_fixed(r.staircase_fraction) + "\n";
  }
  emit(out, csv, m);
  return 0;
}

int cmd_curve(std::size_t n, int q, std::uint64_t trials, std::uint64_t seed, unsigned threads, int grid,
              const std::string& out) {
  if (n < 2) throw std::invalid_argument("curve: n must be at least 2");
  if (grid < 1) throw std::invalid_argument("curve: grid must be positive");
  const double alpha = std::log(static_cast<double>(q)) / std::log(static_cast<double>(n));
  const Regime regime = regime_for_alpha(alpha);
  const auto records = sample_batch(n, q, trials, seed, threads);

  std::vector<ShapeFunction> fs;
  double dist_curve = 0, dist_line = 0, upper = 1.0;
  for (const auto& r : records) {
    fs.push_back(rescale(r.shape, n, q, regime));
    dist_curve += sup_norm_distance(fs.back(), plancherel_curve);
    dist_line += sup_norm_distance(fs.back(), staircase_line);
    upper = std::max(upper, fs.back().support_end());
  }
  const auto t = static_cast<double>(trials);
  auto m = make_manifest("curve", seed, {{"n", std::to_string(n)}, {"q", std::to_string(q)},
                                         {"trials", std::to_string(trials)}, {"grid", std::to_string(grid)},
                                         {"regime", regime_name(regime)}});
  std::string csv = m.csv_header();
  csv += "# mean_sup_norm_plancherel=" + format_fixed(dist_curve / t) + "\n";
  csv += "# mean_sup_norm_line=" + format_fixed(dist_line / t) + "\n";
  csv += "x,f_hat,plancherel_curve,line\n";
  for (int k = 0; k <= grid; ++k) {
    const double x = upper * k / grid;
    double f = 0;
    for (const auto& fn : fs) f += fn(x);
    csv += format_fixed(x) + "," + format_fixed(f / t) + "," + format_fixed(plancherel_curve(x)) + "," +
           format_fixed(staircase_line(x)) + "\n";
  }
  emit(out, csv, m);
  return 0;
}

int cmd_patience(int ranks, int copies, std::uint64_t trials, std::uint64_t seed, unsigned threads,
                 const std::string& prefix) {
  const DeckStats st = deck_simulation(ranks, copies, trials, seed, threads);
  auto m = make_manifest("patience", seed, {{"ranks", std::to_string(ranks)}, {"copies", std::to_string(copies)},
                                            {"trials", std::to_string(trials)}});
  const std::string head = m.csv_header() + "# mean_piles=" + format_fixed(st.mean_piles()) + "\n";
  std::string hist = head + "count,frequency\n";
  for (const auto& [count, hits] : st.histogram) {
    hist += std::to_string(count) + "," + format_fixed(static_cast<double>(hits) / static_cast<double>(trials)) + "\n";
  }
  std::string sizes = head + "position,mean_size\n";
  const auto means = st.mean_pile_sizes();
  for (std::size_t i = 0; i < means.size(); ++i) sizes += std::to_string(i + 1) + "," + format_fixed(means[i]) + "\n";

  if (prefix.empty()) {
    std::cout << hist << "\n" << sizes;
    std::cerr << m.to_json();
  } else {
    emit(prefix + "_histogram.csv", hist, m);
    emit(prefix + "_pile_sizes.csv", sizes, m);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke insertion, K-jeu de taquin and Plancherel-Hecke simulations"};
  app.set_version_flag("--version", std::string(hecke::kVersion));
  app.require_subcommand(1);

  unsigned threads = 0;
  std::string out;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--out", out, "Output file (default stdout; manifest goes to <out>.manifest.json or stderr)");

  std::uint64_t seed = 0;
  std::size_t n = 0;
  int q = 0;
  std::uint64_t trials = 0;

  auto* verify = app.add_subcommand("verify", "Run the exhaustive and exact invariant suites");
  std::string level = "fast";
  verify->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}))->capture_default_str();

  auto* exact = app.add_subcommand("exact", "Exact Plancherel-Hecke distribution as JSON");
  int max_n = 10, max_q = 5;
  exact->add_option("--n", n)->required();
  exact->add_option("--q", q)->required();
  exact->add_option("--max-n", max_n, "Exact-enumeration guard on n")->capture_default_str();
  exact->add_option("--max-q", max_q, "Exact-enumeration guard on q")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Sample shapes of random words as CSV");
  sample->add_option("--n", n)->required();
  sample->add_option("--q", q)->required()->check(CLI::PositiveNumber);
  sample->add_option("--trials", trials)->required();
  sample->add_option("--seed", seed);

  auto* sweep = app.add_subcommand("sweep", "LIS/LDS statistics across alpha or k");
  std::vector<double> alpha_grid, k_grid;
  sweep->add_option("--n", n)->required();
  auto* ag = sweep->add_option("--alpha-grid", alpha_grid, "q = round(n^alpha)")->delimiter(',');
  auto* kg = sweep->add_option("--k-grid", k_grid, "q = round(k sqrt(n))")->delimiter(',');
  ag->excludes(kg);
  sweep->add_option("--trials", trials)->required();
  sweep->add_option("--seed", seed);

  auto* curve = app.add_subcommand("curve", "Mean rescaled shape against the limit curves");
  int grid = 200;
  curve->add_option("--n", n)->required();
  curve->add_option("--q", q)->required()->check(CLI::PositiveNumber);
  curve->add_option("--trials", trials)->required();
  curve->add_option("--seed", seed);
  curve->add_option("--grid", grid)->capture_default_str();

  auto* patience = app.add_subcommand("patience", "Patience sorting on shuffled multiset decks");
  int ranks = 13, copies = 4;
  std::string prefix;
  patience->add_option("--ranks", ranks)->required();
  patience->add_option("--copies", copies)->required();
  patience->add_option("--trials", trials)->required();
  patience->add_option("--seed", seed);
  patience->add_option("--out-prefix", prefix, "Write <prefix>_histogram.csv and <prefix>_pile_sizes.csv");

  for (auto* sub : {verify, exact, sample, sweep, curve, patience}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    auto seed_or_default = [&](CLI::App* sub) { return sub->count("--seed") ? seed : default_seed(); };
    if (*verify) return cmd_verify(level);
    if (*exact) return cmd_exact(static_cast<int>(n), q, max_n, max_q, out);
    if (*sample) return cmd_sample(n, q, trials, seed_or_default(sample), threads, out);
    if (*sweep) {
      if (alpha_grid.empty() && k_grid.empty()) throw std::invalid_argument("sweep: one of --alpha-grid or --k-grid is required");
      return cmd_sweep(n, alpha_grid, k_grid, trials, seed_or_default(sweep), threads, out);
    }
    if (*curve) return cmd_curve(n, q, trials, seed_or_default(curve), threads, grid, out);
    if (*patience) return cmd_patience(ranks, copies, trials, seed_or_default(patience), threads, prefix);
  } catch (const std::invalid_argument& e) {
    std::cerr << "heckesim: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "heckesim: " << e.what() << "\n";
    return kVerifyFailure;
  }
  return kUsageError;
}
