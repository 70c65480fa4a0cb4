#pragma once

#include <string>
#include <vector>

#include "hecke/diagram.hpp"
#include "hecke/word.hpp"

namespace hecke {

using Rows = std::vector<std::vector<int>>;
using SetRows = std::vector<std::vector<std::vector<int>>>;

bool rows_form_shape(const Rows& rows);
/// Strictly increasing along rows and down columns.
bool is_increasing(const Rows& rows);
/// Weakly increasing along rows, strictly down columns, entries in 1..q.
bool is_semistandard(const Rows& rows, int q);
/// Increasing and the entries are exactly 1..|shape|.
bool is_standard(const Rows& rows);
/// Nonempty sets partitioning 1..n with max of a box below min of its right and lower neighbours.
bool is_standard_set_valued(const SetRows& rows, int n);

/// Filling strictly increasing along rows and columns.
class IncreasingTableau {
 public:
  IncreasingTableau() = default;
  /// Throws std::invalid_argument if rows are not an increasing tableau.
  explicit IncreasingTableau(Rows rows);

  const Rows& rows() const { return rows_; }
  YoungDiagram shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  int at(const Box& b) const;
  int max_entry() const;
  const std::vector<int>& first_row() const;

  /// One row per line, entries separated by spaces.
  std::string to_string() const;

  friend bool operator==(const IncreasingTableau&, const IncreasingTableau&) = default;

 private:
  Rows rows_;
};

/// Standard set-valued tableau on labels 1..n.
class SetValuedTableau {
 public:
  SetValuedTableau() = default;
  /// Sets are sorted on construction. Throws std::invalid_argument if not standard set-valued.
  explicit SetValuedTableau(SetRows rows);

  const SetRows& rows() const { return rows_; }
  YoungDiagram shape() const;
  int label_count() const { return n_; }
  const std::vector<int>& at(const Box& b) const;

  /// Rows like "{1}{4}{5}{7}", one per line.
  std::string to_string() const;

  friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;

 private:
  SetRows rows_;
  int n_ = 0;
};

/// Filling of outer/inner; entries of inner boxes are stored as 0.
struct SkewTableau {
  YoungDiagram outer;
  YoungDiagram inner;
  Rows rows;

  int at(const Box& b) const { return rows[b.row - 1][b.col - 1]; }
};

/// Rows read bottom to top, each left to right.
Word reading_word(const IncreasingTableau& t, int alphabet_size = 0);

/// Fills the shape row by row with 1, 2, 3, ...
IncreasingTableau superstandard(const YoungDiagram& shape);

/// Letters w_1..w_n placed from southwest to northeast on the antidiagonal
/// staircase(n)/staircase(n-1): w_j sits in row n+1-j, column j.
SkewTableau antidiagonal_tableau(const Word& w);

}  // namespace hecke
