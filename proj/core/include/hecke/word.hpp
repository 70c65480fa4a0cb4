#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hecke {

using Letter = int;

/// A finite word over the alphabet {1, ..., alphabet_size}. The empty word is legal.
class Word {
 public:
  Word() = default;

  /// Throws std::invalid_argument if alphabet_size < 1 or a letter is out of range.
  Word(std::vector<Letter> letters, int alphabet_size);

  /// Alphabet size defaults to the largest letter (1 for the empty word).
  static Word from_letters(std::vector<Letter> letters);
  static Word from_letters(std::initializer_list<Letter> letters);

  /// Parses whitespace- or comma-separated letters, e.g. "5 4 1 3".
  static Word parse(const std::string& text, int alphabet_size = 0);

  std::span<const Letter> letters() const { return letters_; }
  int alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// 1-based access, matching the w_1 ... w_n convention.
  Letter at(std::size_t position) const { return letters_.at(position - 1); }
  Letter operator[](std::size_t index) const { return letters_[index]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 1;
};

/// A permutation in one-line notation, a bijection of {1, ..., m}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int m);

  std::span<const int> one_line() const { return one_line_; }
  int degree() const { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_.at(static_cast<std::size_t>(i - 1)); }

  /// True iff pi(i) < pi(i+1).
  bool has_ascent_at(int i) const;

  /// Right multiplication by the simple transposition s_i = (i i+1).
  Permutation times_simple(int i) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// Longest strictly increasing subsequence, O(n^2) dynamic programming.
int lis(const Word& w);

/// Longest strictly decreasing subsequence.
int lds(const Word& w);

/// Longest weakly increasing subsequence.
int lwis(const Word& w);

/// For each t in 1..lis(w), the largest index r (1-based) such that the longest
/// strictly increasing subsequence ending at w_r has length t. Empty for the empty word.
std::map<int, std::size_t> lis_end_positions(const Word& w);

Word reverse(const Word& w);

/// Uniform word of length n over {1..q}; deterministic in (n, q, seed).
Word random_word(std::size_t n, int q, std::uint64_t seed);

class Stream;
Word random_word(std::size_t n, int q, Stream& stream);

/// Demazure (0-Hecke) product W(w) in S_{q+1}, q = w.alphabet_size().
Permutation hecke_product(const Word& w);

/// Number of inversions.
long long coxeter_length(const Permutation& p);

/// q+1, q, ..., 1 in S_{q+1}.
Permutation longest_element(int q);

/// Calls f on every word of length n over {1..q}, lexicographic order.
template <class F>
void for_each_word(std::size_t n, int q, F&& f) {
  std::vector<Letter> letters(n, 1);
  while (true) {
    f(Word(letters, q));
    std::size_t i = n;
    while (i > 0 && letters[i - 1] == q) letters[--i] = 1;
    if (i == 0) return;
    ++letters[i - 1];
  }
}

}  // namespace hecke
