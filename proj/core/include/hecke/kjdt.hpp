#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/diagram.hpp"
#include "hecke/rng.hpp"
#include "hecke/tableau.hpp"
#include "hecke/word.hpp"

namespace hecke {

/// Filling of a straight shape by two alphabets: underlined labels 1..p and
/// plain labels 1..q. Within each row and column each label occurs at most once.
/// The null tableau is represented by an empty std::optional.
class MixedTableau {
 public:
  /// Cell encoding: plain j is stored as j, underlined i as -i.
  explicit MixedTableau(Rows cells);

  /// Parses the dump format: one row per line, labels separated by spaces,
  /// underlined labels written "_i".
  static MixedTableau parse(const std::string& text);

  /// Underlined A on the inner shape, plain B on the outer skew shape.
  static MixedTableau combine(const IncreasingTableau& a, const SkewTableau& b);

  const Rows& cells() const { return cells_; }
  YoungDiagram shape() const;

  /// Plain cells forming a straight shape at the top left. Throws
  /// std::invalid_argument if they do not.
  IncreasingTableau plain_region() const;
  /// Underlined cells as a skew filling of shape / plain_region shape.
  SkewTableau underlined_region() const;

  std::string dump() const;

  friend bool operator==(const MixedTableau&, const MixedTableau&) = default;

 private:
  Rows cells_;
};

using MaybeMixed = std::optional<MixedTableau>;

/// True iff no label occurs twice in a row or a column.
bool is_mixed_valid(const Rows& cells);

/// switch(_i, j): swaps labels in every side-connected component of size >= 2
/// of the boxes holding _i or j. Null if the result is not a mixed tableau.
MaybeMixed switch_labels(int i, int j, const MaybeMixed& t);

struct SwitchPair {
  int underlined;
  int plain;

  friend bool operator==(const SwitchPair&, const SwitchPair&) = default;
};
using SwitchSequence = std::vector<SwitchPair>;

/// (_p,1)..(_p,q), (_p-1,1)..(_p-1,q), ..., (_1,1)..(_1,q).
SwitchSequence standard_sequence(int p, int q);

/// Every pair once; (i,1..q) in order for each i; (p..1,j) in order for each j.
bool is_viable(const SwitchSequence& s, int p, int q);

/// A uniformly chosen available pair at each step of a topological sort.
SwitchSequence random_viable_sequence(int p, int q, Stream& rng);

MaybeMixed apply_sequence(const SwitchSequence& s, MaybeMixed t);

/// Runs the switches on A (underlined, inner) and B (plain, outer). Throws
/// std::invalid_argument if the sequence is not viable for (max A, max B)
/// and std::runtime_error if a switch yields the null tableau.
MixedTableau k_infusion(const IncreasingTableau& a, const SkewTableau& b, const SwitchSequence& s);

/// Plain region of the infusion of superstandard(staircase(n-1)) through the
/// antidiagonal tableau of w, under the standard sequence.
IncreasingTableau k_rectify(const Word& w);

/// Same with a caller-provided sequence (must be viable).
IncreasingTableau k_rectify(const Word& w, const SwitchSequence& s);

/// Whether switch(_i, r) and switch(_j, s) commute on t. Requires i != j, r != s.
bool check_commutation(int i, int r, int j, int s, const MaybeMixed& t);

}  // namespace hecke
