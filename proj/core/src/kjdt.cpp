#include "hecke/kjdt.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

bool rows_shaped(const Rows& cells) {
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (cells[r].empty()) return false;
    if (r > 0 && cells[r].size() > cells[r - 1].size()) return false;
  }
  return true;
}

int max_abs(const Rows& cells, bool underlined) {
  int m = 0;
  for (const auto& row : cells) {
    for (int v : row) {
      if (underlined && v < 0) m = std::max(m, -v);
      if (!underlined && v > 0) m = std::max(m, v);
    }
  }
  return m;
}

}  // namespace

bool is_mixed_valid(const Rows& cells) {
  if (!rows_shaped(cells)) return false;
  for (const auto& row : cells) {
    std::set<int> seen;
    for (int v : row) {
      if (v == 0 || !seen.insert(v).second) return false;
    }
  }
  const std::size_t width = cells.empty() ? 0 : cells.front().size();
  for (std::size_t c = 0; c < width; ++c) {
    std::set<int> seen;
    for (std::size_t r = 0; r < cells.size() && cells[r].size() > c; ++r) {
      if (!seen.insert(cells[r][c]).second) return false;
    }
  }
  return true;
}

MixedTableau::MixedTableau(Rows cells) : cells_(std::move(cells)) {
  if (!is_mixed_valid(cells_)) throw std::invalid_argument("MixedTableau: invalid mixed filling");
}

MixedTableau MixedTableau::parse(const std::string& text) {
  Rows cells;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string tok;
    std::vector<int> row;
    while (tokens >> tok) {
      if (tok == "/") break;
      if (tok.front() == '_') {
        row.push_back(-std::stoi(tok.substr(1)));
      } else {
        row.push_back(std::stoi(tok));
      }
    }
    if (!row.empty()) cells.push_back(std::move(row));
  }
  return MixedTableau(std::move(cells));
}

MixedTableau MixedTableau::combine(const IncreasingTableau& a, const SkewTableau& b) {
  if (a.shape() != b.inner) throw std::invalid_argument("k_infusion: inner tableau does not fill the inner shape");
  Rows cells = b.rows;
  for (std::size_t r = 0; r < a.rows().size(); ++r) {
    for (std::size_t c = 0; c < a.rows()[r].size(); ++c) cells[r][c] = -a.rows()[r][c];
  }
  return MixedTableau(std::move(cells));
}

YoungDiagram MixedTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : cells_) parts.push_back(static_cast<int>(row.size()));
  return YoungDiagram(std::move(parts));
}

IncreasingTableau MixedTableau::plain_region() const {
  Rows rows;
  for (const auto& row : cells_) {
    std::vector<int> plain;
    std::size_t c = 0;
    while (c < row.size() && row[c] > 0) plain.push_back(row[c++]);
    for (; c < row.size(); ++c) {
      if (row[c] > 0) throw std::invalid_argument("MixedTableau: plain cells do not form a straight shape");
    }
    if (plain.empty()) break;
    rows.push_back(std::move(plain));
  }
  return IncreasingTableau(std::move(rows));
}

SkewTableau MixedTableau::underlined_region() const {
  const IncreasingTableau inner = plain_region();
  SkewTableau out{shape(), inner.shape(), {}};
  for (const auto& row : cells_) {
    std::vector<int> r;
    for (int v : row) r.push_back(v < 0 ? -v : 0);
    out.rows.push_back(std::move(r));
  }
  return out;
}

std::string MixedTableau::dump() const {
  std::string out;
  for (const auto& row : cells_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      if (row[c] < 0) out += '_';
      out += std::to_string(row[c] < 0 ? -row[c] : row[c]);
    }
    out += '\n';
  }
  return out;
}

MaybeMixed switch_labels(int i, int j, const MaybeMixed& t) {
  if (!t) return std::nullopt;
  Rows cells = t->cells();
  const int under = -i;
  auto in_s = [&](std::size_t r, std::size_t c) {
    return r < cells.size() && c < cells[r].size() && (cells[r][c] == under || cells[r][c] == j);
  };
  std::vector<std::vector<char>> seen(cells.size());
  for (std::size_t r = 0; r < cells.size(); ++r) seen[r].assign(cells[r].size(), 0);

  for (std::size_t r0 = 0; r0 < cells.size(); ++r0) {
    for (std::size_t c0 = 0; c0 < cells[r0].size(); ++c0) {
      if (seen[r0][c0] || !in_s(r0, c0)) continue;
      std::vector<std::pair<std::size_t, std::size_t>> component{{r0, c0}};
      seen[r0][c0] = 1;
      for (std::size_t k = 0; k < component.size(); ++k) {
        const auto [r, c] = component[k];
        const std::pair<std::size_t, std::size_t> nbrs[] = {{r + 1, c}, {r - 1, c}, {r, c + 1}, {r, c - 1}};
        for (const auto& [nr, nc] : nbrs) {
          // Unsigned wrap-around makes r-1 / c-1 at zero fall outside.
          if (in_s(nr, nc) && !seen[nr][nc]) {
            seen[nr][nc] = 1;
            component.emplace_back(nr, nc);
          }
        }
      }
      if (component.size() < 2) continue;
      for (const auto& [r, c] : component) cells[r][c] = cells[r][c] == under ? j : under;
    }
  }
  if (!is_mixed_valid(cells)) return std::nullopt;
  return MixedTableau(std::move(cells));
}

SwitchSequence standard_sequence(int p, int q) {
  SwitchSequence s;
  for (int i = p; i >= 1; --i) {
    for (int j = 1; j <= q; ++j) s.push_back({i, j});
  }
  return s;
}

bool is_viable(const SwitchSequence& s, int p, int q) {
  if (p < 0 || q < 0 || s.size() != static_cast<std::size_t>(p) * static_cast<std::size_t>(q)) return false;
  // next_plain[i]: the plain label expected next for underlined i.
  // next_under[j]: the underlined label expected next for plain j.
  std::vector<int> next_plain(static_cast<std::size_t>(p + 1), 1);
  std::vector<int> next_under(static_cast<std::size_t>(q + 1), p);
  for (const auto& [i, j] : s) {
    if (i < 1 || i > p || j < 1 || j > q) return false;
    if (next_plain[static_cast<std::size_t>(i)] != j) return false;
    if (next_under[static_cast<std::size_t>(j)] != i) return false;
    ++next_plain[static_cast<std::size_t>(i)];
    --next_under[static_cast<std::size_t>(j)];
  }
  return true;
}

SwitchSequence random_viable_sequence(int p, int q, Stream& rng) {
  SwitchSequence s;
  std::vector<int> next_plain(static_cast<std::size_t>(p + 1), 1);
  std::vector<int> next_under(static_cast<std::size_t>(q + 1), p);
  std::vector<SwitchPair> available;
  for (std::size_t total = static_cast<std::size_t>(p) * static_cast<std::size_t>(q); s.size() < total;) {
    available.clear();
    for (int i = 1; i <= p; ++i) {
      const int j = next_plain[static_cast<std::size_t>(i)];
      if (j <= q && next_under[static_cast<std::size_t>(j)] == i) available.push_back({i, j});
    }
    const SwitchPair pick = available[rng.below(available.size())];
    s.push_back(pick);
    ++next_plain[static_cast<std::size_t>(pick.underlined)];
    --next_under[static_cast<std::size_t>(pick.plain)];
  }
  return s;
}

MaybeMixed apply_sequence(const SwitchSequence& s, MaybeMixed t) {
  for (const auto& [i, j] : s) {
    t = switch_labels(i, j, t);
    if (!t) break;
  }
  return t;
}

MixedTableau k_infusion(const IncreasingTableau& a, const SkewTableau& b, const SwitchSequence& s) {
  MixedTableau start = MixedTableau::combine(a, b);
  const int p = max_abs(start.cells(), true);
  const int q = max_abs(start.cells(), false);
  if (!is_viable(s, p, q)) throw std::invalid_argument("k_infusion: switch sequence is not viable");
  MaybeMixed end = apply_sequence(s, std::move(start));
  if (!end) throw std::runtime_error("k_infusion: a switch produced the null tableau");
  return *end;
}

IncreasingTableau k_rectify(const Word& w, const SwitchSequence& s) {
  if (w.empty()) return IncreasingTableau();
  const int n = static_cast<int>(w.size());
  const SkewTableau tw = antidiagonal_tableau(w);
  const IncreasingTableau a = superstandard(YoungDiagram::staircase(n - 1));
  return k_infusion(a, tw, s).plain_region();
}

IncreasingTableau k_rectify(const Word& w) {
  if (w.empty()) return IncreasingTableau();
  const int n = static_cast<int>(w.size());
  const int q = *std::max_element(w.begin(), w.end());
  return k_rectify(w, standard_sequence(n * (n - 1) / 2, q));
}

bool check_commutation(int i, int r, int j, int s, const MaybeMixed& t) {
  if (i == j || r == s) throw std::invalid_argument("check_commutation: requires i != j and r != s");
  return switch_labels(i, r, switch_labels(j, s, t)) == switch_labels(j, s, switch_labels(i, r, t));
}

}  // namespace hecke
