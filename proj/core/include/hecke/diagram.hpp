#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hecke {

/// A box of a diagram, 1-based (row, column), English orientation.
struct Box {
  int row = 1;
  int col = 1;

  int content() const { return col - row; }

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A partition; parts are weakly decreasing and positive. May be empty.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws std::invalid_argument unless parts are weakly decreasing and positive.
  explicit YoungDiagram(std::vector<int> parts);

  /// Drops trailing zeros before validating.
  static YoungDiagram from_row_lengths(std::vector<int> lengths);

  /// (q, q-1, ..., 1); empty for q = 0.
  static YoungDiagram staircase(int q);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  /// Length of row r (1-based); 0 beyond the last row.
  int row_length(int r) const;
  /// Height of column c (1-based); 0 beyond the first row.
  int column_length(int c) const;
  int first_row() const { return row_length(1); }
  int first_column() const { return rows(); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  bool contains(const Box& b) const;
  bool contains(const YoungDiagram& other) const;

  YoungDiagram conjugate() const;
  /// Removable boxes, top to bottom.
  std::vector<Box> corners() const;
  /// Boxes whose addition yields a partition, top to bottom.
  std::vector<Box> addable() const;
  YoungDiagram with_box(const Box& b) const;
  YoungDiagram without_box(const Box& b) const;

  /// Arm + leg + 1.
  int hook(const Box& b) const;

  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  /// Lexicographic on the parts sequence.
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, lexicographic order.
std::vector<YoungDiagram> partitions_of(int n);

/// All partitions mu contained in outer with lo <= |mu| <= hi, lexicographic order.
std::vector<YoungDiagram> partitions_inside(const YoungDiagram& outer, int lo, int hi);

}  // namespace hecke
