#pragma once

#include <cstdint>
#include <vector>

#include "hecke/diagram.hpp"
#include "hecke/numeric.hpp"
#include "hecke/rng.hpp"

namespace hecke {

/// Bounds on (n, q) for exact enumeration.
struct ExactLimits {
  int max_n = 10;
  int max_q = 5;
};

/// One shape of an exact distribution with probability left * right / denominator.
struct ShapeWeight {
  YoungDiagram shape;
  BigInt left;   // d^lambda(q) or f^lambda
  BigInt right;  // e^lambda(n) or g^lambda(q)
  Rational probability;
};

struct ExactDistribution {
  int n = 0;
  int q = 0;
  BigInt denominator;                 // q^n (or n! for the Plancherel measure)
  std::vector<ShapeWeight> entries;   // lexicographic by shape, zero-weight shapes omitted

  /// 0 for shapes outside the support.
  Rational probability(const YoungDiagram& shape) const;
  Rational total() const;
};

/// Throws std::invalid_argument when (n, q) exceeds the limits.
void check_exact_limits(int n, int q, const ExactLimits& limits);

/// mu_{n,q}: d^lambda(q) e^lambda(n) / q^n over shapes inside the staircase.
/// Throws std::logic_error if the weights fail to sum to q^n.
ExactDistribution exact_plancherel_hecke(int n, int q, const ExactLimits& limits = {});

/// Sum of lambda_1 times probability.
Rational expected_lis_exact(int n, int q, const ExactLimits& limits = {});
/// Probability that lambda_1 equals ell.
Rational prob_lis_exact(int n, int q, int ell, const ExactLimits& limits = {});
Rational expected_lis(const ExactDistribution& d);
Rational prob_lis(const ExactDistribution& d, int ell);

/// nu_{n,q}(lambda) = f^lambda g^lambda(q) / q^n. Throws unless |lambda| = n.
Rational plancherel_rsk_prob(const YoungDiagram& shape, int n, int q);
/// (f^lambda)^2 / n!. Throws unless |lambda| = n.
Rational plancherel_prob(const YoungDiagram& shape, int n);

ExactDistribution exact_plancherel_rsk(int n, int q);
ExactDistribution exact_plancherel(int n);

/// g_mu(q) / (q g_lambda(q)). Throws unless mu covers lambda and g_lambda(q) > 0.
Rational markov_transition(const YoungDiagram& lambda, const YoungDiagram& mu, int q);

/// Floating-point transition weights to each addable box of lambda, same order
/// as lambda.addable(); they sum to 1 up to rounding.
std::vector<double> markov_weights(const YoungDiagram& lambda, int q);

struct SampleRecord {
  YoungDiagram shape;
  int lis = 0;
  int lds = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;  // key of the trial's random stream
};

/// heckeshape of random_word(n, q, seed).
SampleRecord sample_plancherel_hecke(std::size_t n, int q, std::uint64_t seed);

/// Trial t uses Stream(seed, t). Records are ordered by trial.
std::vector<SampleRecord> sample_batch(std::size_t n, int q, std::uint64_t trials, std::uint64_t seed,
                                       unsigned threads = 0);

/// Shapes after 0, 1, ..., n steps of the growth chain, starting from the empty shape.
std::vector<YoungDiagram> markov_sample_path(int n, int q, std::uint64_t seed);
std::vector<YoungDiagram> markov_sample_path(int n, int q, Stream& rng);

/// RSK shape of a uniform word; a second exact sampler of nu_{n,q}.
YoungDiagram sample_plancherel_rsk(std::size_t n, int q, Stream& rng);

/// Mean first-column length of the chain after i steps.
double gamma_estimate(int i, int q, std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace hecke
