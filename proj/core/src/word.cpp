#include "hecke/word.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hecke/rng.hpp"

namespace hecke {

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 1) throw std::invalid_argument("Word: alphabet size must be >= 1");
  for (Letter l : letters_) {
    if (l < 1 || l > alphabet_size_) {
      throw std::invalid_argument("Word: letter " + std::to_string(l) + " outside 1.." +
                                  std::to_string(alphabet_size_));
    }
  }
}

Word Word::from_letters(std::vector<Letter> letters) {
  const int q = letters.empty() ? 1 : std::max(1, *std::max_element(letters.begin(), letters.end()));
  return Word(std::move(letters), q);
}

Word Word::from_letters(std::initializer_list<Letter> letters) {
  return from_letters(std::vector<Letter>(letters));
}

Word Word::parse(const std::string& text, int alphabet_size) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("Word::parse: bad letter '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("Word::parse: bad letter '" + token + "'");
    letters.push_back(value);
  }
  if (alphabet_size > 0) return Word(std::move(letters), alphabet_size);
  return from_letters(std::move(letters));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > static_cast<int>(one_line_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: one-line notation is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

bool Permutation::has_ascent_at(int i) const {
  return (*this)(i) < (*this)(i + 1);
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= degree()) throw std::out_of_range("Permutation::times_simple: bad index");
  Permutation r = *this;
  std::swap(r.one_line_[static_cast<std::size_t>(i - 1)], r.one_line_[static_cast<std::size_t>(i)]);
  return r;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(one_line_[i]);
  }
  return out;
}

namespace {

// ending[j] = length of the longest subsequence ending at position j whose
// consecutive letters satisfy less(prev, next), for a strict weak order `less`
// or its reflexive closure (strict = false). tails[k] is the smallest possible
// last letter of such a subsequence of length k + 1.
template <typename Less>
std::vector<int> longest_ending_at(std::span<const Letter> w, Less less, bool strict) {
  std::vector<int> ending(w.size());
  std::vector<Letter> tails;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const auto it = strict ? std::lower_bound(tails.begin(), tails.end(), w[j], less)
                           : std::upper_bound(tails.begin(), tails.end(), w[j], less);
    ending[j] = static_cast<int>(it - tails.begin()) + 1;
    if (it == tails.end()) tails.push_back(w[j]);
    else *it = w[j];
  }
  return ending;
}

int max_or_zero(const std::vector<int>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

int lis(const Word& w) {
  return max_or_zero(longest_ending_at(w.letters(), std::less<Letter>(), true));
}

int lds(const Word& w) {
  return max_or_zero(longest_ending_at(w.letters(), std::greater<Letter>(), true));
}

int lwis(const Word& w) {
  return max_or_zero(longest_ending_at(w.letters(), std::less<Letter>(), false));
}

std::map<int, std::size_t> lis_end_positions(const Word& w) {
  const auto ending = longest_ending_at(w.letters(), std::less<Letter>(), true);
  std::map<int, std::size_t> r;
  for (std::size_t j = 0; j < ending.size(); ++j) r[ending[j]] = j + 1;
  return r;
}

Word reverse(const Word& w) {
  std::vector<Letter> letters(w.begin(), w.end());
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters), w.alphabet_size());
}

Word random_word(std::size_t n, int q, Stream& stream) {
  if (q < 1) throw std::invalid_argument("random_word: q must be >= 1");
  std::vector<Letter> letters(n);
  for (auto& l : letters) l = stream.uniform_int(1, q);
  return Word(std::move(letters), q);
}

Word random_word(std::size_t n, int q, std::uint64_t seed) {
  Stream stream(seed, 0);
  return random_word(n, q, stream);
}

Permutation hecke_product(const Word& w) {
  std::vector<int> p(static_cast<std::size_t>(w.alphabet_size() + 1));
  std::iota(p.begin(), p.end(), 1);
  for (Letter i : w) {
    const auto k = static_cast<std::size_t>(i - 1);
    // Demazure product: multiply by s_i only when i is an ascent.
    if (p[k] < p[k + 1]) std::swap(p[k], p[k + 1]);
  }
  return Permutation(std::move(p));
}

long long coxeter_length(const Permutation& p) {
  const auto v = p.one_line();
  long long inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++inversions;
    }
  }
  return inversions;
}

Permutation longest_element(int q) {
  if (q < 1) throw std::invalid_argument("longest_element: q must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(q + 1));
  for (int i = 0; i <= q; ++i) v[static_cast<std::size_t>(i)] = q + 1 - i;
  return Permutation(std::move(v));
}

}  // namespace hecke
