#include "hecke/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

int hecke_insert_rows(Rows& rows, Letter x, Box& corner) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      // A letter bumped out of the bottom row can always start a new row:
      // a bump from column 0 always replaces, so x exceeds the entry above.
      if (r > 0 && rows[r - 1][0] >= x) throw std::logic_error("hecke_insert: cannot open a new row");
      rows.push_back({x});
      corner = {static_cast<int>(r + 1), 1};
      return 1;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      const std::size_t c = row.size();
      const bool fits = row.back() < x && (r == 0 || (rows[r - 1].size() > c && rows[r - 1][c] < x));
      if (fits) {
        row.push_back(x);
        corner = {static_cast<int>(r + 1), static_cast<int>(c + 1)};
        return 1;
      }
      // Bottom of the column holding the last box of this row.
      std::size_t bottom = r;
      while (bottom + 1 < rows.size() && rows[bottom + 1].size() >= c) ++bottom;
      corner = {static_cast<int>(bottom + 1), static_cast<int>(c)};
      return 0;
    }
    const auto col = static_cast<std::size_t>(it - row.begin());
    const Letter y = *it;
    const bool replace = (col == 0 || row[col - 1] < x) && (r == 0 || rows[r - 1][col] < x);
    if (replace) *it = x;
    x = y;
  }
}

InsertionStep hecke_insert(const IncreasingTableau& t, Letter x) {
  if (x < 1) throw std::invalid_argument("hecke_insert: letters must be positive");
  Rows rows = t.rows();
  Box corner;
  const int flag = hecke_insert_rows(rows, x, corner);
  return {IncreasingTableau(std::move(rows)), corner, flag};
}

HeckePair hecke(const Word& w) {
  Rows p;
  SetRows q;
  int label = 0;
  for (Letter x : w) {
    ++label;
    Box c;
    if (hecke_insert_rows(p, x, c) == 1) {
      if (static_cast<std::size_t>(c.row) > q.size()) q.emplace_back();
      q[static_cast<std::size_t>(c.row - 1)].push_back({label});
    } else {
      q[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)].push_back(label);
    }
  }
  return {IncreasingTableau(std::move(p)), SetValuedTableau(std::move(q))};
}

YoungDiagram heckeshape(const Word& w) {
  Rows p;
  Box c;
  for (Letter x : w) hecke_insert_rows(p, x, c);
  std::vector<int> parts;
  parts.reserve(p.size());
  for (const auto& row : p) parts.push_back(static_cast<int>(row.size()));
  return YoungDiagram(std::move(parts));
}

std::vector<YoungDiagram> heckeshape_history(const Word& w) {
  std::vector<YoungDiagram> out{YoungDiagram()};
  Rows p;
  Box c;
  for (Letter x : w) {
    if (hecke_insert_rows(p, x, c) == 1) {
      out.push_back(out.back().with_box(c));
    } else {
      out.push_back(out.back());
    }
  }
  return out;
}

std::pair<IncreasingTableau, Letter> reverse_hecke(const IncreasingTableau& z, const Box& c, int flag) {
  const YoungDiagram shape = z.shape();
  const auto corners = shape.corners();
  if (std::find(corners.begin(), corners.end(), c) == corners.end()) {
    throw std::invalid_argument("reverse_hecke: box is not a corner");
  }
  if (flag != 0 && flag != 1) throw std::invalid_argument("reverse_hecke: flag must be 0 or 1");
  Rows rows = z.rows();
  auto r = static_cast<std::size_t>(c.row - 1);
  Letter y = rows[r].back();
  if (flag == 1) {
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
  }
  while (r > 0) {
    --r;
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), y);
    if (it == row.begin()) throw std::invalid_argument("reverse_hecke: no smaller entry in the row above");
    --it;
    const auto col = static_cast<std::size_t>(it - row.begin());
    const Letter x = *it;
    const bool right_ok = col + 1 == row.size() || y < row[col + 1];
    const bool below_ok = r + 1 >= rows.size() || rows[r + 1].size() <= col || y < rows[r + 1][col];
    if (right_ok && below_ok) *it = y;
    y = x;
  }
  return {IncreasingTableau(std::move(rows)), y};
}

Word hecke_inverse(const HeckePair& pq, int alphabet_size) {
  if (pq.p.shape() != pq.q.shape()) throw std::invalid_argument("hecke_inverse: P and Q shapes differ");
  const int n = pq.q.label_count();
  IncreasingTableau p = pq.p;
  SetRows q = pq.q.rows();
  std::vector<Letter> letters(static_cast<std::size_t>(n));
  for (int j = n; j >= 1; --j) {
    Box where{0, 0};
    for (std::size_t r = 0; r < q.size() && where.row == 0; ++r) {
      for (std::size_t col = 0; col < q[r].size(); ++col) {
        if (std::find(q[r][col].begin(), q[r][col].end(), j) != q[r][col].end()) {
          where = {static_cast<int>(r + 1), static_cast<int>(col + 1)};
          break;
        }
      }
    }
    if (where.row == 0) throw std::invalid_argument("hecke_inverse: label missing from Q");
    auto& cell = q[static_cast<std::size_t>(where.row - 1)][static_cast<std::size_t>(where.col - 1)];
    if (cell.back() != j) throw std::invalid_argument("hecke_inverse: label is not the largest in its box");
    const int flag = cell.size() == 1 ? 1 : 0;
    cell.pop_back();
    if (flag == 1) {
      auto& qrow = q[static_cast<std::size_t>(where.row - 1)];
      qrow.pop_back();
      if (qrow.empty()) q.pop_back();
    }
    auto [next, x] = reverse_hecke(p, where, flag);
    p = std::move(next);
    letters[static_cast<std::size_t>(j - 1)] = x;
  }
  if (!p.empty()) throw std::invalid_argument("hecke_inverse: P not exhausted");
  if (alphabet_size == 0) alphabet_size = std::max(1, pq.p.max_entry());
  Word w(std::move(letters), alphabet_size);
  const HeckePair again = hecke(w);
  if (again.p != pq.p || again.q != pq.q) throw std::invalid_argument("hecke_inverse: pair is not in the image of hecke");
  return w;
}

Rows rsk_insertion(const Word& w) {
  Rows rows;
  for (Letter x : w) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
      if (it == rows[r].end()) {
        rows[r].push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  return rows;
}

YoungDiagram rsk_shape(const Word& w) {
  std::vector<int> parts;
  for (const auto& row : rsk_insertion(w)) parts.push_back(static_cast<int>(row.size()));
  return YoungDiagram(std::move(parts));
}

YoungDiagram schensted_shape(const Permutation& p) {
  const auto ol = p.one_line();
  return rsk_shape(Word(std::vector<Letter>(ol.begin(), ol.end()), std::max(1, p.degree())));
}

}  // namespace hecke
