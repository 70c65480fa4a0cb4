#include "hecke/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hecke/insertion.hpp"
#include "hecke/parallel.hpp"
#include "hecke/rng.hpp"

namespace hecke {

__extension__ typedef unsigned __int128 u128;

Regime regime_for_alpha(double alpha) { return alpha >= 0.5 ? Regime::sqrt_n : Regime::staircase; }

const char* regime_name(Regime r) { return r == Regime::sqrt_n ? "sqrt" : "staircase"; }

ShapeFunction::ShapeFunction(const YoungDiagram& shape, double scale) : scale_(scale) {
  if (!(scale > 0)) throw std::invalid_argument("ShapeFunction: scale must be positive");
  for (int c = 0; c <= shape.first_row(); ++c) heights_.push_back(shape.column_length(c + 1));
}

double ShapeFunction::step(double x) const {
  if (x < 0 || heights_.empty()) return 0;
  const double u = x * scale_;
  const auto c = static_cast<std::size_t>(std::floor(u));
  if (c >= heights_.size()) return 0;
  return heights_[c] / scale_;
}

double ShapeFunction::linear(double x) const {
  if (x < 0 || heights_.size() < 2) return 0;
  const double u = x * scale_;
  const auto c = static_cast<std::size_t>(std::floor(u));
  if (c + 1 >= heights_.size()) return 0;
  const double t = u - static_cast<double>(c);
  return ((1 - t) * heights_[c] + t * heights_[c + 1]) / scale_;
}

std::vector<double> ShapeFunction::breakpoints() const {
  std::vector<double> out;
  for (std::size_t c = 0; c < heights_.size(); ++c) out.push_back(static_cast<double>(c) / scale_);
  return out;
}

double ShapeFunction::support_end() const {
  return heights_.empty() ? 0.0 : static_cast<double>(heights_.size() - 1) / scale_;
}

ShapeFunction rescale(const YoungDiagram& shape, std::size_t n, int q, Regime regime) {
  if (regime == Regime::sqrt_n) {
    if (n == 0) throw std::invalid_argument("rescale: n must be positive in the sqrt regime");
    return ShapeFunction(shape, 2.0 * std::sqrt(static_cast<double>(n)));
  }
  if (q < 1) throw std::invalid_argument("rescale: q must be positive in the staircase regime");
  return ShapeFunction(shape, static_cast<double>(q));
}

double plancherel_curve(double x) {
  if (x >= 1.0) return 0.0;
  if (x <= 0.0) return 1.0;
  using std::numbers::pi;
  auto x_of = [](double theta) {
    const double y = (std::sin(theta) - theta * std::cos(theta)) / pi;
    return y + std::cos(theta);
  };
  // x(theta) decreases from 1 at theta = 0 to 0 at theta = pi.
  double lo = 0.0;
  double hi = pi;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (x_of(mid) > x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double theta = 0.5 * (lo + hi);
  return (std::sin(theta) - theta * std::cos(theta)) / pi;
}

double staircase_line(double x) { return x >= 1.0 || x < 0.0 ? 0.0 : 1.0 - x; }

double sup_norm_distance(const ShapeFunction& f, const std::function<double(double)>& g, std::size_t grid) {
  const double upper = std::max(f.support_end(), 1.0);
  double worst = 0;
  auto probe = [&](double x) { worst = std::max(worst, std::abs(f(x) - g(x))); };
  for (std::size_t k = 0; k <= grid; ++k) probe(upper * static_cast<double>(k) / static_cast<double>(grid));
  for (double x : f.breakpoints()) probe(x);
  return worst;
}

double beta(double k) {
  if (!(k > 0)) throw std::invalid_argument("beta: k must be positive");
  return k <= 1 ? k / 2 : (2 - 1 / k) / 2;
}

int SweepConfig::q() const {
  const double nn = static_cast<double>(n);
  const double raw = mode == Mode::alpha ? std::pow(nn, parameter) : parameter * std::sqrt(nn);
  const long long rounded = std::llround(raw);
  if (rounded < 1) throw std::invalid_argument("sweep: q = round(...) must be at least 1");
  if (rounded > 1'000'000'000LL) throw std::invalid_argument("sweep: q too large");
  return static_cast<int>(rounded);
}

bool is_staircase(const YoungDiagram& shape, int q) {
  if (shape.rows() != q) return false;
  for (int r = 1; r <= q; ++r) {
    if (shape.row_length(r) != q - r + 1) return false;
  }
  return true;
}

namespace {

struct SweepAcc {
  std::uint64_t sum_lis = 0, sum_lis_sq = 0, sum_lds = 0, sum_lds_sq = 0, hits = 0;
  int min_lis = std::numeric_limits<int>::max();
  int max_lis = 0;
  std::vector<std::pair<std::uint64_t, YoungDiagram>> snapshots;

  void merge(SweepAcc& o) {
    sum_lis += o.sum_lis;
    sum_lis_sq += o.sum_lis_sq;
    sum_lds += o.sum_lds;
    sum_lds_sq += o.sum_lds_sq;
    hits += o.hits;
    min_lis = std::min(min_lis, o.min_lis);
    max_lis = std::max(max_lis, o.max_lis);
    snapshots.insert(snapshots.end(), std::make_move_iterator(o.snapshots.begin()),
                     std::make_move_iterator(o.snapshots.end()));
  }
};

double unbiased_sd(std::uint64_t sum, std::uint64_t sum_sq, std::uint64_t t) {
  if (t < 2) return 0.0;
  // t * sum_sq - sum^2 is exact in 128-bit integers.
  const auto num = static_cast<u128>(t) * sum_sq - static_cast<u128>(sum) * sum;
  const double var = static_cast<double>(num) / (static_cast<double>(t) * static_cast<double>(t - 1));
  return std::sqrt(var);
}

}  // namespace

SweepResult sweep(const SweepConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("sweep: trials must be positive");
  const int q = config.q();
  auto acc = parallel_trials<SweepAcc>(config.trials, config.threads, [&](std::uint64_t t, SweepAcc& a) {
    Stream rng(config.seed, t);
    YoungDiagram shape = heckeshape(random_word(config.n, q, rng));
    const auto l = static_cast<std::uint64_t>(shape.first_row());
    const auto d = static_cast<std::uint64_t>(shape.first_column());
    a.sum_lis += l;
    a.sum_lis_sq += l * l;
    a.sum_lds += d;
    a.sum_lds_sq += d * d;
    a.min_lis = std::min(a.min_lis, shape.first_row());
    a.max_lis = std::max(a.max_lis, shape.first_row());
    if (is_staircase(shape, q)) ++a.hits;
    if (t < config.max_snapshots) a.snapshots.emplace_back(t, std::move(shape));
  });
  std::sort(acc.snapshots.begin(), acc.snapshots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  SweepResult r;
  r.n = config.n;
  r.q = q;
  r.mode = config.mode;
  r.parameter = config.parameter;
  r.trials = config.trials;
  r.sum_lis = acc.sum_lis;
  r.sum_lis_sq = acc.sum_lis_sq;
  r.sum_lds = acc.sum_lds;
  r.sum_lds_sq = acc.sum_lds_sq;
  r.staircase_hits = acc.hits;
  r.min_lis = acc.min_lis;
  r.max_lis = acc.max_lis;
  const auto t = static_cast<double>(config.trials);
  r.mean_lis = static_cast<double>(acc.sum_lis) / t;
  r.mean_lds = static_cast<double>(acc.sum_lds) / t;
  r.sigma_lis = unbiased_sd(acc.sum_lis, acc.sum_lis_sq, config.trials);
  r.sigma_lds = unbiased_sd(acc.sum_lds, acc.sum_lds_sq, config.trials);
  r.staircase_fraction = static_cast<double>(acc.hits) / t;
  r.snapshots = std::move(acc.snapshots);
  return r;
}

std::vector<SweepResult> sweep_grid(std::size_t n, SweepConfig::Mode mode, const std::vector<double>& values,
                                    std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  std::vector<SweepResult> out;
  for (double v : values) {
    SweepConfig c;
    c.n = n;
    c.mode = mode;
    c.parameter = v;
    c.trials = trials;
    c.seed = seed;
    c.threads = threads;
    out.push_back(sweep(c));
  }
  return out;
}

long long erdos_szekeres_bound(int a, int b, int q) {
  if (a < 1 || b < 1 || a >= q || b >= q) throw std::invalid_argument("erdos_szekeres_bound: need 1 <= a, b < q");
  long long s = 0;
  for (int i = 1; i <= a; ++i) s += std::min(b, q - i + 1);
  return s;
}

long long erdos_szekeres_bound_by_columns(int a, int b, int q) {
  if (a < 1 || b < 1 || a >= q || b >= q) throw std::invalid_argument("erdos_szekeres_bound: need 1 <= a, b < q");
  long long s = 0;
  for (int j = 1; j <= b; ++j) s += std::min(a, q - j + 1);
  return s;
}

bool check_es(const Word& w, int a, int b) {
  const long long bound = erdos_szekeres_bound(a, b, w.alphabet_size());
  if (coxeter_length(hecke_product(w)) <= bound) return true;
  return lis(w) > a || lds(w) > b;
}

namespace {

struct StaircaseAcc {
  std::uint64_t shape_hits = 0, perm_hits = 0, disagreements = 0;
  void merge(const StaircaseAcc& o) {
    shape_hits += o.shape_hits;
    perm_hits += o.perm_hits;
    disagreements += o.disagreements;
  }
};

}  // namespace

StaircaseCheck staircase_check(std::size_t n, int q, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (q < 1) throw std::invalid_argument("staircase_check: q must be positive");
  const Permutation w0 = longest_element(q);
  auto acc = parallel_trials<StaircaseAcc>(trials, threads, [&](std::uint64_t t, StaircaseAcc& a) {
    Stream rng(seed, t);
    const Word w = random_word(n, q, rng);
    const bool by_shape = is_staircase(heckeshape(w), q);
    const bool by_perm = hecke_product(w) == w0;
    a.shape_hits += by_shape;
    a.perm_hits += by_perm;
    a.disagreements += by_shape != by_perm;
  });
  return {trials, acc.shape_hits, acc.perm_hits, acc.disagreements};
}

}  // namespace hecke
