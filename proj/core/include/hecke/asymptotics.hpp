#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/diagram.hpp"
#include "hecke/word.hpp"

namespace hecke {

enum class Regime {
  sqrt_n,     // both axes divided by 2 sqrt(n); used for alpha >= 1/2
  staircase,  // both axes divided by q; used for alpha < 1/2
};

Regime regime_for_alpha(double alpha);
const char* regime_name(Regime r);

/// Rescaled shape of a diagram. The step form at x is #{i : lambda_i > x * scale},
/// divided by scale; the linear form interpolates the knots
/// (c, #{i : lambda_i > c}) for c = 0..lambda_1, both coordinates divided by scale.
class ShapeFunction {
 public:
  ShapeFunction() = default;
  ShapeFunction(const YoungDiagram& shape, double scale);

  double step(double x) const;
  double linear(double x) const;
  double operator()(double x) const { return linear(x); }

  /// Rescaled knot abscissae.
  std::vector<double> breakpoints() const;
  double support_end() const;

 private:
  std::vector<int> heights_;  // heights_[c] = #{i : lambda_i > c}
  double scale_ = 1.0;
};

ShapeFunction rescale(const YoungDiagram& shape, std::size_t n, int q, Regime regime);

/// Limit shape x = y + cos(theta), y = (sin(theta) - theta cos(theta)) / pi,
/// solved for y by bisection in theta; 0 for x >= 1 and 1 at x = 0.
double plancherel_curve(double x);

/// y = 1 - x on [0, 1], 0 beyond.
double staircase_line(double x);

/// Max |f - g| over a uniform grid of `grid` points on [0, max(support, 1)]
/// together with every breakpoint of f.
double sup_norm_distance(const ShapeFunction& f, const std::function<double(double)>& g,
                         std::size_t grid = 10000);

/// k/2 for k <= 1, (2 - 1/k)/2 for k > 1. Throws for k <= 0.
double beta(double k);

struct SweepConfig {
  enum class Mode { alpha, k };

  std::size_t n = 0;
  Mode mode = Mode::alpha;
  double parameter = 1.0;  // alpha or k
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t max_snapshots = 0;  // shapes kept for trials 0..max_snapshots-1
  unsigned threads = 0;           // 0: hardware concurrency

  /// round(n^alpha) or round(k sqrt(n)). Throws if the result is below 1.
  int q() const;
};

struct SweepResult {
  std::size_t n = 0;
  int q = 0;
  SweepConfig::Mode mode = SweepConfig::Mode::alpha;
  double parameter = 0;
  std::uint64_t trials = 0;

  // Exact integer aggregates.
  std::uint64_t sum_lis = 0;
  std::uint64_t sum_lis_sq = 0;
  std::uint64_t sum_lds = 0;
  std::uint64_t sum_lds_sq = 0;
  std::uint64_t staircase_hits = 0;
  int min_lis = 0;
  int max_lis = 0;

  double mean_lis = 0;
  double mean_lds = 0;
  double sigma_lis = 0;  // unbiased sample standard deviation
  double sigma_lds = 0;
  double staircase_fraction = 0;

  std::vector<std::pair<std::uint64_t, YoungDiagram>> snapshots;  // by trial
};

SweepResult sweep(const SweepConfig& config);

/// One sweep per parameter value, each with the same base seed.
std::vector<SweepResult> sweep_grid(std::size_t n, SweepConfig::Mode mode, const std::vector<double>& values,
                                    std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

bool is_staircase(const YoungDiagram& shape, int q);

/// Sum_{i=1}^{a} min(b, q - i + 1): the size of the a x b box cut by the staircase.
/// Throws unless 1 <= a, b < q.
long long erdos_szekeres_bound(int a, int b, int q);
/// The same quantity summed by columns.
long long erdos_szekeres_bound_by_columns(int a, int b, int q);

/// The implication: coxeter_length(W(w)) > bound implies lis(w) > a or lds(w) > b.
bool check_es(const Word& w, int a, int b);

struct StaircaseCheck {
  std::uint64_t trials = 0;
  std::uint64_t shape_hits = 0;        // heckeshape == staircase(q)
  std::uint64_t permutation_hits = 0;  // hecke_product == longest element
  std::uint64_t disagreements = 0;     // trials where the two tests differ
  double fraction() const { return trials ? static_cast<double>(shape_hits) / static_cast<double>(trials) : 0.0; }
};

StaircaseCheck staircase_check(std::size_t n, int q, std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace hecke
