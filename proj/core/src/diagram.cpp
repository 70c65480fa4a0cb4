#include "hecke/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hecke {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("YoungDiagram: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
    }
  }
}

YoungDiagram YoungDiagram::from_row_lengths(std::vector<int> lengths) {
  while (!lengths.empty() && lengths.back() == 0) lengths.pop_back();
  return YoungDiagram(std::move(lengths));
}

YoungDiagram YoungDiagram::staircase(int q) {
  std::vector<int> parts;
  for (int i = q; i >= 1; --i) parts.push_back(i);
  return YoungDiagram(std::move(parts));
}

int YoungDiagram::row_length(int r) const {
  if (r < 1 || r > rows()) return 0;
  return parts_[static_cast<std::size_t>(r - 1)];
}

int YoungDiagram::column_length(int c) const {
  if (c < 1) return 0;
  int h = 0;
  while (h < rows() && parts_[static_cast<std::size_t>(h)] >= c) ++h;
  return h;
}

int YoungDiagram::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool YoungDiagram::contains(const Box& b) const {
  return b.row >= 1 && b.col >= 1 && b.col <= row_length(b.row);
}

bool YoungDiagram::contains(const YoungDiagram& other) const {
  if (other.rows() > rows()) return false;
  for (int r = 1; r <= other.rows(); ++r) {
    if (other.row_length(r) > row_length(r)) return false;
  }
  return true;
}

YoungDiagram YoungDiagram::conjugate() const {
  std::vector<int> c;
  for (int col = 1; col <= first_row(); ++col) c.push_back(column_length(col));
  return YoungDiagram(std::move(c));
}

std::vector<Box> YoungDiagram::corners() const {
  std::vector<Box> out;
  for (int r = 1; r <= rows(); ++r) {
    if (row_length(r + 1) < row_length(r)) out.push_back({r, row_length(r)});
  }
  return out;
}

std::vector<Box> YoungDiagram::addable() const {
  std::vector<Box> out;
  for (int r = 1; r <= rows() + 1; ++r) {
    if (r == 1 || row_length(r - 1) > row_length(r)) out.push_back({r, row_length(r) + 1});
  }
  return out;
}

YoungDiagram YoungDiagram::with_box(const Box& b) const {
  std::vector<int> p = parts_;
  if (b.row == rows() + 1 && b.col == 1) {
    p.push_back(1);
  } else if (b.row >= 1 && b.row <= rows() && b.col == row_length(b.row) + 1) {
    ++p[static_cast<std::size_t>(b.row - 1)];
  } else {
    throw std::invalid_argument("YoungDiagram::with_box: box is not addable");
  }
  return YoungDiagram(std::move(p));  // validates
}

YoungDiagram YoungDiagram::without_box(const Box& b) const {
  if (!contains(b) || b.col != row_length(b.row) || row_length(b.row + 1) >= b.col) {
    throw std::invalid_argument("YoungDiagram::without_box: box is not a corner");
  }
  std::vector<int> p = parts_;
  --p[static_cast<std::size_t>(b.row - 1)];
  return from_row_lengths(std::move(p));
}

int YoungDiagram::hook(const Box& b) const {
  if (!contains(b)) throw std::invalid_argument("YoungDiagram::hook: box outside diagram");
  return (row_length(b.row) - b.col) + (column_length(b.col) - b.row) + 1;
}

std::string YoungDiagram::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<YoungDiagram> partitions_inside(const YoungDiagram& outer, int lo, int hi) {
  std::vector<YoungDiagram> out;
  std::vector<int> parts;
  // Depth-first in lexicographic order: shorter prefixes come first.
  std::function<void(int, int)> extend = [&](int remaining, int cap) {
    const int total = static_cast<int>(std::accumulate(parts.begin(), parts.end(), 0));
    if (total >= lo) out.emplace_back(parts);
    const int r = static_cast<int>(parts.size()) + 1;
    const int limit = std::min({cap, outer.row_length(r), remaining});
    for (int v = 1; v <= limit; ++v) {
      parts.push_back(v);
      extend(remaining - v, v);
      parts.pop_back();
    }
  };
  extend(hi, outer.first_row());
  return out;
}

std::vector<YoungDiagram> partitions_of(int n) {
  if (n < 0) return {};
  return partitions_inside(YoungDiagram(std::vector<int>(static_cast<std::size_t>(n), n)), n, n);
}

}  // namespace hecke
