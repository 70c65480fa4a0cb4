#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hecke/diagram.hpp"
#include "hecke/numeric.hpp"

namespace hecke {

/// d^lambda(q): increasing tableaux of shape lambda with entries in 1..q.
BigInt count_increasing(const YoungDiagram& shape, int q);

/// e^lambda(n): standard set-valued tableaux of shape lambda on labels 1..n.
BigInt count_set_valued_standard(const YoungDiagram& shape, int n);

/// f^lambda by the hook-length formula.
BigInt count_standard(const YoungDiagram& shape);

/// g^lambda(q) by the hook-content formula. Throws std::logic_error if the
/// product fails to be an integer.
BigInt count_semistandard(const YoungDiagram& shape, int q);

/// Memoized e^lambda(n). Not thread-safe; use one instance per task.
class SetValuedCounter {
 public:
  BigInt operator()(const YoungDiagram& shape, int n);

 private:
  std::map<std::pair<std::vector<int>, int>, BigInt> memo_;
};

/// Memoized d^lambda(q) for a fixed q. Not thread-safe; use one instance per task.
class IncreasingCounter {
 public:
  explicit IncreasingCounter(int q) : q_(q) {}
  BigInt operator()(const YoungDiagram& shape);

 private:
  BigInt fill_from(const YoungDiagram& shape, int r, const std::vector<int>& above);

  int q_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo_;
};

}  // namespace hecke
