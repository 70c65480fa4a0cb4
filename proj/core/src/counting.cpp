#include "hecke/counting.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hecke {

BigInt SetValuedCounter::operator()(const YoungDiagram& shape, int n) {
  if (n < 0) return 0;
  if (shape.empty()) return n == 0 ? 1 : 0;
  if (shape.size() > n) return 0;
  const auto key = std::make_pair(shape.parts(), n);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // The largest label sits in a corner, either alone or with smaller labels.
  const auto corners = shape.corners();
  BigInt total = BigInt(corners.size()) * (*this)(shape, n - 1);
  for (const Box& c : corners) total += (*this)(shape.without_box(c), n - 1);
  memo_.emplace(key, total);
  return total;
}

BigInt IncreasingCounter::operator()(const YoungDiagram& shape) {
  if (q_ < 1) throw std::invalid_argument("count_increasing: q must be positive");
  if (shape.empty()) return 1;
  if (!YoungDiagram::staircase(q_).contains(shape)) return 0;
  return fill_from(shape, 1, {});
}

// Number of ways to fill rows r, r+1, ... given the filled row r-1 (`above`).
BigInt IncreasingCounter::fill_from(const YoungDiagram& shape, int r, const std::vector<int>& above) {
  if (r > shape.rows()) return 1;
  const int len = shape.row_length(r);
  std::vector<int> key_above(above.begin(), above.begin() + std::min<std::ptrdiff_t>(len, std::ssize(above)));
  auto key = std::make_pair(shape.parts(), key_above);
  key.first.erase(key.first.begin(), key.first.begin() + (r - 1));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // slack[c]: longest chain of boxes strictly southeast of (r, c+1) within the shape.
  std::vector<int> slack(static_cast<std::size_t>(len), 0);
  for (int c = 1; c <= len; ++c) {
    int best = 0;
    for (int rr = r; rr <= shape.rows() && shape.row_length(rr) >= c; ++rr) {
      best = std::max(best, (rr - r) + (shape.row_length(rr) - c));
    }
    slack[static_cast<std::size_t>(c - 1)] = best;
  }

  BigInt total = 0;
  std::vector<int> row(static_cast<std::size_t>(len));
  std::function<void(int)> place = [&](int c) {
    if (c == len) {
      total += fill_from(shape, r + 1, row);
      return;
    }
    int lo = 1;
    if (c > 0) lo = row[static_cast<std::size_t>(c - 1)] + 1;
    if (r > 1) lo = std::max(lo, above[static_cast<std::size_t>(c)] + 1);
    const int hi = q_ - slack[static_cast<std::size_t>(c)];
    for (int v = lo; v <= hi; ++v) {
      row[static_cast<std::size_t>(c)] = v;
      place(c + 1);
    }
  };
  place(0);
  memo_.emplace(std::move(key), total);
  return total;
}

BigInt count_increasing(const YoungDiagram& shape, int q) { return IncreasingCounter(q)(shape); }

BigInt count_set_valued_standard(const YoungDiagram& shape, int n) {
  return SetValuedCounter()(shape, n);
}

BigInt count_standard(const YoungDiagram& shape) {
  if (shape.empty()) return 1;
  BigInt hooks = 1;
  for (int r = 1; r <= shape.rows(); ++r) {
    for (int c = 1; c <= shape.row_length(r); ++c) hooks *= shape.hook({r, c});
  }
  BigInt f = factorial(static_cast<unsigned>(shape.size()));
  if (f % hooks != 0) throw std::logic_error("count_standard: hook product does not divide n!");
  return f / hooks;
}

BigInt count_semistandard(const YoungDiagram& shape, int q) {
  if (q < 1) throw std::invalid_argument("count_semistandard: q must be positive");
  Rational g = 1;
  for (int r = 1; r <= shape.rows(); ++r) {
    for (int c = 1; c <= shape.row_length(r); ++c) {
      g *= Rational(q + c - r, shape.hook({r, c}));
    }
  }
  if (denominator(g) != 1) throw std::logic_error("count_semistandard: hook-content product is not integral");
  return numerator(g);
}

}  // namespace hecke
