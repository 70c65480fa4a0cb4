#include "hecke/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

namespace {

template <class R>
bool weakly_decreasing_lengths(const R& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
  }
  return true;
}

template <class R>
YoungDiagram shape_of(const R& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return YoungDiagram(std::move(parts));
}

}  // namespace

bool rows_form_shape(const Rows& rows) { return weakly_decreasing_lengths(rows); }

bool is_increasing(const Rows& rows) {
  if (!rows_form_shape(rows)) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c - 1] >= rows[r][c]) return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
    }
  }
  return true;
}

bool is_semistandard(const Rows& rows, int q) {
  if (!rows_form_shape(rows)) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v < 1 || v > q) return false;
      if (c > 0 && rows[r][c - 1] > v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

bool is_standard(const Rows& rows) {
  if (!is_increasing(rows)) return false;
  std::vector<int> all;
  for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

bool is_standard_set_valued(const SetRows& rows, int n) {
  if (!weakly_decreasing_lengths(rows)) return false;
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  int used = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const auto& s = rows[r][c];
      if (s.empty()) return false;
      for (int v : s) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
        ++used;
      }
      const int lo = *std::min_element(s.begin(), s.end());
      if (c > 0 && *std::max_element(rows[r][c - 1].begin(), rows[r][c - 1].end()) >= lo) return false;
      if (r > 0 && *std::max_element(rows[r - 1][c].begin(), rows[r - 1][c].end()) >= lo) return false;
    }
  }
  return used == n;
}

IncreasingTableau::IncreasingTableau(Rows rows) : rows_(std::move(rows)) {
  if (!is_increasing(rows_)) throw std::invalid_argument("IncreasingTableau: filling is not increasing");
}

YoungDiagram IncreasingTableau::shape() const { return shape_of(rows_); }

int IncreasingTableau::size() const {
  int s = 0;
  for (const auto& r : rows_) s += static_cast<int>(r.size());
  return s;
}

int IncreasingTableau::at(const Box& b) const {
  return rows_.at(static_cast<std::size_t>(b.row - 1)).at(static_cast<std::size_t>(b.col - 1));
}

int IncreasingTableau::max_entry() const {
  int m = 0;
  for (const auto& r : rows_) m = std::max(m, r.back());
  return m;
}

const std::vector<int>& IncreasingTableau::first_row() const {
  static const std::vector<int> none;
  return rows_.empty() ? none : rows_.front();
}

std::string IncreasingTableau::to_string() const {
  std::string out;
  for (const auto& r : rows_) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(r[c]);
    }
    out += '\n';
  }
  return out;
}

SetValuedTableau::SetValuedTableau(SetRows rows) : rows_(std::move(rows)) {
  for (auto& r : rows_) {
    for (auto& s : r) {
      std::sort(s.begin(), s.end());
      n_ += static_cast<int>(s.size());
    }
  }
  if (!is_standard_set_valued(rows_, n_)) {
    throw std::invalid_argument("SetValuedTableau: not a standard set-valued tableau");
  }
}

YoungDiagram SetValuedTableau::shape() const { return shape_of(rows_); }

const std::vector<int>& SetValuedTableau::at(const Box& b) const {
  return rows_.at(static_cast<std::size_t>(b.row - 1)).at(static_cast<std::size_t>(b.col - 1));
}

std::string SetValuedTableau::to_string() const {
  std::string out;
  for (const auto& r : rows_) {
    for (const auto& s : r) {
      out += '{';
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
      }
      out += '}';
    }
    out += '\n';
  }
  return out;
}

Word reading_word(const IncreasingTableau& t, int alphabet_size) {
  std::vector<Letter> letters;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) {
    letters.insert(letters.end(), it->begin(), it->end());
  }
  if (alphabet_size == 0) return Word::from_letters(std::move(letters));
  return Word(std::move(letters), alphabet_size);
}

IncreasingTableau superstandard(const YoungDiagram& shape) {
  Rows rows;
  int next = 1;
  for (int len : shape.parts()) {
    std::vector<int> row;
    for (int c = 0; c < len; ++c) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return IncreasingTableau(std::move(rows));
}

SkewTableau antidiagonal_tableau(const Word& w) {
  const int n = static_cast<int>(w.size());
  SkewTableau t{YoungDiagram::staircase(n), YoungDiagram::staircase(n - 1 > 0 ? n - 1 : 0), {}};
  for (int r = 1; r <= n; ++r) {
    std::vector<int> row(static_cast<std::size_t>(n + 1 - r), 0);
    row.back() = w.at(static_cast<std::size_t>(n + 1 - r));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace hecke
