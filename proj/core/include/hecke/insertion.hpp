#pragma once

#include <utility>
#include <vector>

#include "hecke/diagram.hpp"
#include "hecke/tableau.hpp"
#include "hecke/word.hpp"

namespace hecke {

/// Result (U, c, alpha) of inserting one letter.
struct InsertionStep {
  IncreasingTableau tableau;
  Box corner;
  int flag = 0;  // 1: a box was added at corner; 0: shape unchanged
};

struct HeckePair {
  IncreasingTableau p;
  SetValuedTableau q;

  YoungDiagram shape() const { return p.shape(); }
};

/// Row insertion of x into T. Throws std::invalid_argument if x < 1.
InsertionStep hecke_insert(const IncreasingTableau& t, Letter x);

/// In-place variant used by the fast paths. Rows must form an increasing tableau.
/// Returns the flag; corner receives the 1-based corner box.
int hecke_insert_rows(Rows& rows, Letter x, Box& corner);

HeckePair hecke(const Word& w);

/// Same shape as hecke(w) without building the recording tableau.
YoungDiagram heckeshape(const Word& w);

/// Shape after every prefix: result[j] is the shape after inserting w_1..w_j.
std::vector<YoungDiagram> heckeshape_history(const Word& w);

/// Inverse of one insertion step. Throws std::invalid_argument if c is not a
/// corner of Z or the upward pass finds no smaller entry.
std::pair<IncreasingTableau, Letter> reverse_hecke(const IncreasingTableau& z, const Box& c, int flag);

/// Recovers the word from a (P, Q) pair. Throws std::invalid_argument if the
/// pair is not in the image of hecke.
Word hecke_inverse(const HeckePair& pq, int alphabet_size = 0);

/// Classical RSK row insertion tableau (weak rows, strict columns).
Rows rsk_insertion(const Word& w);
YoungDiagram rsk_shape(const Word& w);
YoungDiagram schensted_shape(const Permutation& p);

}  // namespace hecke
