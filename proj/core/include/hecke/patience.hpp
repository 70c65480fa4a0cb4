#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hecke/word.hpp"

namespace hecke {

enum class Ties { allowed, forbidden };

/// Piles left to right, each listed bottom to top.
struct PileState {
  std::vector<std::vector<Letter>> piles;
};

/// Deals w left to right onto the leftmost pile whose top is >= the card
/// (ties allowed) or > the card (ties forbidden), else onto a new pile on the right.
PileState play_greedy(const Word& w, Ties ties);

std::vector<Letter> pile_tops(const PileState& s);
int pile_count(const PileState& s);

/// Deck with `copies` cards of each rank 1..ranks, in rank order.
Word sorted_deck(int ranks, int copies);
/// Fisher-Yates shuffle of the positions of a deck.
Word shuffle_deck(const Word& deck, Stream& rng);

struct DeckStats {
  int ranks = 0;
  int copies = 0;
  std::uint64_t trials = 0;
  std::map<int, std::uint64_t> histogram;       // pile count -> trials
  std::vector<std::uint64_t> pile_size_totals;  // position (0-based) -> total cards over all trials
  std::uint64_t pile_count_total = 0;

  double mean_piles() const;
  /// Mean size of the pile at each position; trials without that pile count as 0.
  std::vector<double> mean_pile_sizes() const;
};

/// Trial t shuffles with Stream(seed, t) and plays greedy with ties allowed.
DeckStats deck_simulation(int ranks, int copies, std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace hecke
