#include "hecke/measures.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hecke/counting.hpp"
#include "hecke/insertion.hpp"
#include "hecke/parallel.hpp"
#include "hecke/word.hpp"

namespace hecke {

Rational ExactDistribution::probability(const YoungDiagram& shape) const {
  for (const auto& e : entries) {
    if (e.shape == shape) return e.probability;
  }
  return 0;
}

Rational ExactDistribution::total() const {
  Rational t = 0;
  for (const auto& e : entries) t += e.probability;
  return t;
}

void check_exact_limits(int n, int q, const ExactLimits& limits) {
  if (n < 0) throw std::invalid_argument("exact: n must be non-negative");
  if (q < 1) throw std::invalid_argument("exact: q must be positive");
  if (n > limits.max_n || q > limits.max_q) {
    throw std::invalid_argument("exact: (n, q) = (" + std::to_string(n) + ", " + std::to_string(q) +
                                ") exceeds the exact-enumeration limit n <= " + std::to_string(limits.max_n) +
                                ", q <= " + std::to_string(limits.max_q));
  }
}

ExactDistribution exact_plancherel_hecke(int n, int q, const ExactLimits& limits) {
  check_exact_limits(n, q, limits);
  ExactDistribution d{n, q, power(static_cast<unsigned>(q), static_cast<unsigned>(n)), {}};
  const int max_size = std::min(n, q * (q + 1) / 2);
  IncreasingCounter inc(q);
  SetValuedCounter svt;
  BigInt sum = 0;
  for (const auto& shape : partitions_inside(YoungDiagram::staircase(q), 0, max_size)) {
    BigInt left = inc(shape);
    BigInt right = svt(shape, n);
    if (left == 0 || right == 0) continue;
    BigInt weight = left * right;
    sum += weight;
    d.entries.push_back({shape, std::move(left), std::move(right), Rational(weight, d.denominator)});
  }
  if (sum != d.denominator) throw std::logic_error("exact_plancherel_hecke: weights do not sum to q^n");
  return d;
}

Rational expected_lis(const ExactDistribution& d) {
  Rational e = 0;
  for (const auto& entry : d.entries) e += entry.probability * entry.shape.first_row();
  return e;
}

Rational prob_lis(const ExactDistribution& d, int ell) {
  Rational p = 0;
  for (const auto& entry : d.entries) {
    if (entry.shape.first_row() == ell) p += entry.probability;
  }
  return p;
}

Rational expected_lis_exact(int n, int q, const ExactLimits& limits) {
  return expected_lis(exact_plancherel_hecke(n, q, limits));
}

Rational prob_lis_exact(int n, int q, int ell, const ExactLimits& limits) {
  return prob_lis(exact_plancherel_hecke(n, q, limits), ell);
}

Rational plancherel_rsk_prob(const YoungDiagram& shape, int n, int q) {
  if (shape.size() != n) throw std::invalid_argument("plancherel_rsk_prob: |lambda| must equal n");
  const BigInt num = count_standard(shape) * count_semistandard(shape, q);
  return Rational(num, power(static_cast<unsigned>(q), static_cast<unsigned>(n)));
}

Rational plancherel_prob(const YoungDiagram& shape, int n) {
  if (shape.size() != n) throw std::invalid_argument("plancherel_prob: |lambda| must equal n");
  const BigInt f = count_standard(shape);
  return Rational(f * f, factorial(static_cast<unsigned>(n)));
}

ExactDistribution exact_plancherel_rsk(int n, int q) {
  if (n < 0 || q < 1) throw std::invalid_argument("exact_plancherel_rsk: need n >= 0, q >= 1");
  ExactDistribution d{n, q, power(static_cast<unsigned>(q), static_cast<unsigned>(n)), {}};
  for (const auto& shape : partitions_of(n)) {
    BigInt f = count_standard(shape);
    BigInt g = count_semistandard(shape, q);
    if (g == 0) continue;
    Rational p(f * g, d.denominator);
    d.entries.push_back({shape, std::move(f), std::move(g), p});
  }
  return d;
}

ExactDistribution exact_plancherel(int n) {
  if (n < 0) throw std::invalid_argument("exact_plancherel: need n >= 0");
  ExactDistribution d{n, 0, factorial(static_cast<unsigned>(n)), {}};
  for (const auto& shape : partitions_of(n)) {
    BigInt f = count_standard(shape);
    Rational p(f * f, d.denominator);
    d.entries.push_back({shape, f, f, p});
  }
  return d;
}

Rational markov_transition(const YoungDiagram& lambda, const YoungDiagram& mu, int q) {
  if (q < 1) throw std::invalid_argument("markov_transition: q must be positive");
  if (mu.size() != lambda.size() + 1 || !mu.contains(lambda)) {
    throw std::invalid_argument("markov_transition: mu does not cover lambda");
  }
  const BigInt g_lambda = count_semistandard(lambda, q);
  if (g_lambda == 0) throw std::invalid_argument("markov_transition: lambda has more than q rows");
  return Rational(count_semistandard(mu, q), g_lambda * q);
}

std::vector<double> markov_weights(const YoungDiagram& lambda, int q) {
  std::vector<double> out;
  for (const Box& b : lambda.addable()) {
    // g_mu / g_lambda = (q + content) * prod over the new box's row and column of h / (h + 1).
    double w = static_cast<double>(q + b.content()) / q;
    if (w <= 0) {
      out.push_back(0.0);
      continue;
    }
    for (int c = 1; c < b.col; ++c) {
      const double h = lambda.hook({b.row, c});
      w *= h / (h + 1);
    }
    for (int r = 1; r < b.row; ++r) {
      const double h = lambda.hook({r, b.col});
      w *= h / (h + 1);
    }
    out.push_back(w);
  }
  return out;
}

SampleRecord sample_plancherel_hecke(std::size_t n, int q, std::uint64_t seed) {
  Stream rng(seed, 0);
  const Word w = random_word(n, q, rng);
  YoungDiagram shape = heckeshape(w);
  const int lis_len = shape.first_row();
  const int lds_len = shape.first_column();
  return {std::move(shape), lis_len, lds_len, 0, rng.key()};
}

namespace {

struct BatchAcc {
  std::vector<SampleRecord> records;
  void merge(BatchAcc& other) {
    records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                   std::make_move_iterator(other.records.end()));
  }
};

struct SumAcc {
  std::uint64_t sum = 0;
  void merge(const SumAcc& other) { sum += other.sum; }
};

}  // namespace

std::vector<SampleRecord> sample_batch(std::size_t n, int q, std::uint64_t trials, std::uint64_t seed,
                                       unsigned threads) {
  auto acc = parallel_trials<BatchAcc>(trials, threads, [&](std::uint64_t t, BatchAcc& a) {
    Stream rng(seed, t);
    YoungDiagram shape = heckeshape(random_word(n, q, rng));
    const int l1 = shape.first_row();
    const int c1 = shape.first_column();
    a.records.push_back({std::move(shape), l1, c1, t, rng.key()});
  });
  std::sort(acc.records.begin(), acc.records.end(),
            [](const SampleRecord& a, const SampleRecord& b) { return a.trial < b.trial; });
  return std::move(acc.records);
}

std::vector<YoungDiagram> markov_sample_path(int n, int q, Stream& rng) {
  if (q < 1) throw std::invalid_argument("markov_sample_path: q must be positive");
  std::vector<YoungDiagram> path{YoungDiagram()};
  for (int step = 0; step < n; ++step) {
    const YoungDiagram& cur = path.back();
    const auto boxes = cur.addable();
    const auto weights = markov_weights(cur, q);
    double total = 0;
    for (double w : weights) total += w;
    const double u = rng.uniform01() * total;
    double acc = 0;
    std::size_t pick = boxes.size() - 1;
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      acc += weights[k];
      if (u < acc) {
        pick = k;
        break;
      }
    }
    while (weights[pick] <= 0) --pick;  // guard against rounding at the tail
    path.push_back(cur.with_box(boxes[pick]));
  }
  return path;
}

std::vector<YoungDiagram> markov_sample_path(int n, int q, std::uint64_t seed) {
  Stream rng(seed, 0);
  return markov_sample_path(n, q, rng);
}

YoungDiagram sample_plancherel_rsk(std::size_t n, int q, Stream& rng) {
  return rsk_shape(random_word(n, q, rng));
}

double gamma_estimate(int i, int q, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw std::invalid_argument("gamma_estimate: trials must be positive");
  auto acc = parallel_trials<SumAcc>(trials, threads, [&](std::uint64_t t, SumAcc& a) {
    Stream rng(seed, t);
    a.sum += static_cast<std::uint64_t>(markov_sample_path(i, q, rng).back().first_column());
  });
  return static_cast<double>(acc.sum) / static_cast<double>(trials);
}

}  // namespace hecke
