#include "hecke/patience.hpp"

#include <algorithm>
#include <stdexcept>

#include "hecke/parallel.hpp"
#include "hecke/rng.hpp"

namespace hecke {

PileState play_greedy(const Word& w, Ties ties) {
  PileState s;
  std::vector<Letter> tops;  // weakly increasing left to right
  for (Letter x : w) {
    const auto it = ties == Ties::allowed ? std::lower_bound(tops.begin(), tops.end(), x)
                                          : std::upper_bound(tops.begin(), tops.end(), x);
    const auto k = static_cast<std::size_t>(it - tops.begin());
    if (it == tops.end()) {
      tops.push_back(x);
      s.piles.push_back({x});
    } else {
      *it = x;
      s.piles[k].push_back(x);
    }
  }
  return s;
}

std::vector<Letter> pile_tops(const PileState& s) {
  std::vector<Letter> tops;
  for (const auto& p : s.piles) tops.push_back(p.back());
  return tops;
}

int pile_count(const PileState& s) { return static_cast<int>(s.piles.size()); }

Word sorted_deck(int ranks, int copies) {
  if (ranks < 1 || copies < 1) throw std::invalid_argument("deck: ranks and copies must be positive");
  std::vector<Letter> cards;
  for (int r = 1; r <= ranks; ++r) cards.insert(cards.end(), static_cast<std::size_t>(copies), r);
  return Word(std::move(cards), ranks);
}

Word shuffle_deck(const Word& deck, Stream& rng) {
  std::vector<Letter> cards(deck.begin(), deck.end());
  for (std::size_t i = cards.size(); i > 1; --i) {
    std::swap(cards[i - 1], cards[rng.below(i)]);
  }
  return Word(std::move(cards), deck.alphabet_size());
}

double DeckStats::mean_piles() const {
  return trials ? static_cast<double>(pile_count_total) / static_cast<double>(trials) : 0.0;
}

std::vector<double> DeckStats::mean_pile_sizes() const {
  std::vector<double> out;
  for (auto total : pile_size_totals) out.push_back(static_cast<double>(total) / static_cast<double>(trials));
  return out;
}

namespace {

struct DeckAcc {
  std::map<int, std::uint64_t> histogram;
  std::vector<std::uint64_t> sizes;
  std::uint64_t total = 0;

  void merge(const DeckAcc& o) {
    for (const auto& [k, v] : o.histogram) histogram[k] += v;
    if (o.sizes.size() > sizes.size()) sizes.resize(o.sizes.size(), 0);
    for (std::size_t i = 0; i < o.sizes.size(); ++i) sizes[i] += o.sizes[i];
    total += o.total;
  }
};

}  // namespace

DeckStats deck_simulation(int ranks, int copies, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  const Word deck = sorted_deck(ranks, copies);
  auto acc = parallel_trials<DeckAcc>(trials, threads, [&](std::uint64_t t, DeckAcc& a) {
    Stream rng(seed, t);
    const PileState s = play_greedy(shuffle_deck(deck, rng), Ties::allowed);
    const int count = pile_count(s);
    ++a.histogram[count];
    a.total += static_cast<std::uint64_t>(count);
    if (s.piles.size() > a.sizes.size()) a.sizes.resize(s.piles.size(), 0);
    for (std::size_t i = 0; i < s.piles.size(); ++i) a.sizes[i] += s.piles[i].size();
  });
  DeckStats st;
  st.ranks = ranks;
  st.copies = copies;
  st.trials = trials;
  st.histogram = std::move(acc.histogram);
  st.pile_size_totals = std::move(acc.sizes);
  st.pile_count_total = acc.total;
  return st;
}

}  // namespace hecke
