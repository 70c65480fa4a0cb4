#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "golden.hpp"
#include "hecke/insertion.hpp"
#include "hecke/measures.hpp"
#include "hecke/rng.hpp"
#include "oracles.hpp"

namespace hecke {

namespace {

const Word kWorked = Word::parse("5 4 1 3 4 2 5 1 2 1 4 2 4", 5);

HeckePair hecke_prefix(const Word& w, std::size_t len) {
  std::vector<Letter> v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
  return hecke(Word(v, w.alphabet_size()));
}

}  // namespace

TEST(HeckeInsert, Examples) {
  const auto step = hecke_insert(IncreasingTableau(Rows{{1, 3, 5}, {2, 4, 6}}), 3);
  EXPECT_EQ(step.tableau.rows(), (Rows{{1, 3, 5}, {2, 4, 6}, {6}}));
  EXPECT_EQ(step.flag, 1);
  EXPECT_EQ(step.corner, (Box{3, 1}));

  const auto first = hecke_insert(IncreasingTableau(), 4);
  EXPECT_EQ(first.tableau.rows(), (Rows{{4}}));
  EXPECT_EQ(first.flag, 1);
  EXPECT_EQ(first.corner, (Box{1, 1}));
}

TEST(HeckeInsert, TenthStepOfWorkedExample) {
  // The tenth letter of the worked word is 1: the shape stays put and the
  // recording box (5,1) receives label 10.
  const IncreasingTableau before({{1, 2, 4, 5}, {2, 4}, {3}, {4}, {5}});
  EXPECT_EQ(kWorked.at(10), 1);
  const auto step = hecke_insert(before, 1);
  EXPECT_EQ(step.flag, 0);
  EXPECT_EQ(step.tableau, before);
  EXPECT_EQ(step.corner, (Box{5, 1}));
}

TEST(HeckeInsert, ShapeUnchangedWhenAppendingFails) {
  const auto step = hecke_insert(IncreasingTableau(Rows{{1, 2}, {2}}), 2);
  EXPECT_EQ(step.flag, 0);
  EXPECT_EQ(step.tableau.rows(), (Rows{{1, 2}, {2}}));
  EXPECT_EQ(step.corner, (Box{1, 2}));
  EXPECT_THROW(hecke_insert(IncreasingTableau(), 0), std::invalid_argument);
}

TEST(HeckeInsert, LocalRuleMatchesGlobalValidity) {
  for (int q = 1; q <= 4; ++q) {
    for (int n = 0; n <= 6; ++n) {
      for_each_word(static_cast<std::size_t>(n), q, [&](const Word& w) {
        Rows rows;
        for (Letter x : w) {
          const auto fast = hecke_insert(IncreasingTableau(rows), x);
          const auto slow = oracle::naive_hecke_insert(rows, x);
          ASSERT_EQ(fast.tableau.rows(), slow.rows) << w.to_string();
          ASSERT_EQ(fast.flag, slow.flag) << w.to_string();
          ASSERT_EQ(fast.corner, slow.corner) << w.to_string();
          rows = fast.tableau.rows();
        }
      });
    }
  }
}

TEST(Hecke, WorkedExampleStepByStep) {
  const auto steps = golden::blocks("worked_insertion.txt");
  ASSERT_EQ(steps.size(), 11u);
  for (const auto& [key, body] : steps) {
    const auto len = static_cast<std::size_t>(std::stoi(key.substr(5)));
    const auto pq = hecke_prefix(kWorked, len);
    const std::string expected_p = body.substr(2, body.find("Q\n") - 2);
    const std::string expected_q = body.substr(body.find("Q\n") + 2);
    EXPECT_EQ(pq.p.to_string(), expected_p) << key;
    EXPECT_EQ(pq.q.to_string(), expected_q) << key;
  }
  EXPECT_EQ(heckeshape(kWorked), YoungDiagram({4, 3, 2, 1, 1}));
}

TEST(Hecke, SmallExamples) {
  const auto empty = hecke(Word());
  EXPECT_TRUE(empty.p.empty());
  EXPECT_EQ(empty.q.label_count(), 0);
  EXPECT_EQ(heckeshape(Word::parse("2 1 2 3 2")), YoungDiagram({3, 2}));
  EXPECT_EQ(heckeshape(Word::parse("1 2 3 4 5 6")), YoungDiagram({6}));
  const YoungDiagram s = heckeshape(Word::parse("1 3 4 2 2"));
  EXPECT_EQ(s.first_row(), 3);
  EXPECT_EQ(s.first_column(), 2);
}

TEST(Hecke, GreeneNegativeControl) {
  // The naive strict Greene prediction (3,1,1) is not what the insertion produces.
  EXPECT_NE(heckeshape(Word::parse("2 1 2 3 2")), YoungDiagram({3, 1, 1}));
}

TEST(Hecke, ReverseWordIsNotTransposed) {
  const Word w = Word::parse("1 3 4 2 2");
  const auto p = hecke(w).p;
  const auto r = hecke(reverse(w)).p;
  Rows transposed;
  for (std::size_t c = 0; c < p.rows().front().size(); ++c) {
    std::vector<int> col;
    for (const auto& row : p.rows())
      if (row.size() > c) col.push_back(row[c]);
    transposed.push_back(col);
  }
  EXPECT_NE(r.rows(), transposed);
}

TEST(Hecke, ShapeEncodesLisAndLds) {
  for (int q = 1; q <= 4; ++q) {
    for (int n = 0; n <= 6; ++n) {
      for_each_word(static_cast<std::size_t>(n), q, [&](const Word& w) {
        const YoungDiagram s = heckeshape(w);
        ASSERT_EQ(s.first_row(), oracle::lis(w)) << w.to_string();
        ASSERT_EQ(s.first_column(), oracle::lds(w)) << w.to_string();
      });
    }
  }
  for (std::uint64_t t = 0; t < 2000; ++t) {
    Stream rng(77, t);
    const auto n = static_cast<std::size_t>(rng.uniform_int(0, 60));
    const Word w = random_word(n, rng.uniform_int(1, 10), rng);
    const YoungDiagram s = heckeshape(w);
    ASSERT_EQ(s.first_row(), lis(w)) << w.to_string();
    ASSERT_EQ(s.first_column(), lds(w)) << w.to_string();
  }
}

TEST(Hecke, FirstRowFromLisEndPositions) {
  auto check = [](const Word& w) {
    std::vector<int> expected;
    for (const auto& [t, r] : lis_end_positions(w)) expected.push_back(w.at(r));
    ASSERT_EQ(hecke(w).p.first_row(), expected) << w.to_string();
  };
  for (int q = 1; q <= 4; ++q)
    for (int n = 1; n <= 6; ++n) for_each_word(static_cast<std::size_t>(n), q, check);
  for (std::uint64_t s = 0; s < 500; ++s) check(random_word(40, 8, s));
}

TEST(Hecke, ShapeBounds) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    Stream rng(3, s);
    const int q = rng.uniform_int(1, 7);
    const auto n = static_cast<std::size_t>(rng.uniform_int(0, 40));
    const Word w = random_word(n, q, rng);
    const YoungDiagram shape = heckeshape(w);
    EXPECT_LE(shape.size(), std::min<int>(static_cast<int>(n), q * (q + 1) / 2));
    EXPECT_TRUE(YoungDiagram::staircase(q).contains(shape));
  }
}

TEST(Hecke, HeckeProductPreservedAfterEveryInsertion) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Word w = random_word(20, 6, s);
    Rows rows;
    std::vector<Letter> prefix;
    Box c;
    for (Letter x : w) {
      hecke_insert_rows(rows, x, c);
      prefix.push_back(x);
      ASSERT_EQ(hecke_product(reading_word(IncreasingTableau(rows), 6)), hecke_product(Word(prefix, 6)));
    }
  }
}

TEST(Hecke, ConjugateSymmetryUnderReversal) {
  for (std::uint64_t s = 0; s < 500; ++s) {
    const Word w = random_word(25, 6, s);
    const YoungDiagram lambda = heckeshape(w), mu = heckeshape(reverse(w));
    EXPECT_EQ(lambda.first_row(), mu.first_column());
    EXPECT_EQ(mu.first_row(), lambda.first_column());
  }
}

TEST(Hecke, AgreesWithSchenstedOnPermutations) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      const Word w(p, n);
      const auto pq = hecke(w);
      EXPECT_EQ(pq.p.rows(), rsk_insertion(w));
      for (const auto& row : pq.q.rows())
        for (const auto& cell : row) EXPECT_EQ(cell.size(), 1u);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(ReverseHecke, InvertsEveryForwardStep) {
  for (int q = 1; q <= 4; ++q) {
    for (int n = 0; n <= 6; ++n) {
      for_each_word(static_cast<std::size_t>(n), q, [&](const Word& w) {
        IncreasingTableau t;
        for (Letter x : w) {
          const auto step = hecke_insert(t, x);
          const auto [back, letter] = reverse_hecke(step.tableau, step.corner, step.flag);
          ASSERT_EQ(back, t) << w.to_string();
          ASSERT_EQ(letter, x) << w.to_string();
          t = step.tableau;
        }
      });
    }
  }
}

TEST(ReverseHecke, SingleBoxAndErrors) {
  const auto [t, x] = reverse_hecke(IncreasingTableau(Rows{{3}}), {1, 1}, 1);
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(x, 3);
  EXPECT_THROW(reverse_hecke(IncreasingTableau(Rows{{1, 2}, {3}}), {1, 1}, 1), std::invalid_argument);
}

TEST(HeckeInverse, RoundTripExhaustive) {
  for (int q = 1; q <= 4; ++q) {
    for (int n = 0; n <= 7; ++n) {
      for_each_word(static_cast<std::size_t>(n), q, [&](const Word& w) {
        ASSERT_EQ(hecke_inverse(hecke(w), q), w) << w.to_string();
      });
    }
  }
}

TEST(HeckeInverse, Examples) {
  EXPECT_EQ(hecke_inverse(hecke(kWorked), 5), kWorked);
  const HeckePair single{IncreasingTableau(Rows{{4}}), SetValuedTableau(SetRows{{{1}}})};
  EXPECT_EQ(hecke_inverse(single), Word({4}, 4));
}

TEST(HeckeInverse, RejectsMismatchedShapes) {
  const HeckePair bad{IncreasingTableau(Rows{{1, 2}}), SetValuedTableau(SetRows{{{1}}, {{2}}})};
  EXPECT_THROW(hecke_inverse(bad), std::invalid_argument);
}

TEST(HeckeInverse, ImageIsAllValidPairs) {
  // Count pairs (P, Q) with P increasing over {1..q}, Q standard set-valued on
  // {1..n}, same shape; the bijection says there are exactly q^n of them, and
  // hecke hits q^n distinct ones.
  for (int q = 1; q <= 3; ++q) {
    for (int n = 0; n <= 5; ++n) {
      std::set<std::pair<Rows, SetRows>> image;
      for_each_word(static_cast<std::size_t>(n), q, [&](const Word& w) {
        const auto pq = hecke(w);
        image.insert({pq.p.rows(), pq.q.rows()});
      });
      BigInt valid = 0;
      for (int size = 0; size <= n; ++size) {
        for (const auto& shape : partitions_of(size)) {
          valid += BigInt(oracle::count_increasing(shape, q)) * oracle::count_set_valued(shape, n);
        }
      }
      EXPECT_EQ(BigInt(image.size()), power(static_cast<unsigned>(q), static_cast<unsigned>(n)));
      EXPECT_EQ(valid, power(static_cast<unsigned>(q), static_cast<unsigned>(n))) << "n=" << n << " q=" << q;
    }
  }
}

TEST(Rsk, Shapes) {
  const Word deck = Word::parse("8 2 6 3 4 1 7 10 9");
  EXPECT_EQ(rsk_shape(deck).first_row(), 5);
  EXPECT_EQ(rsk_shape(Word::parse("1 1 1")), YoungDiagram({3}));
  EXPECT_EQ(rsk_shape(Word::parse("2 1 2 3 2")).first_column(), oracle::lds(Word::parse("2 1 2 3 2")));
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Word w = random_word(12, 5, s);
    EXPECT_EQ(rsk_shape(w).first_row(), oracle::lwis(w));
    EXPECT_EQ(rsk_shape(w).first_column(), oracle::lds(w));
  }
  EXPECT_EQ(schensted_shape(Permutation({3, 1, 2})), YoungDiagram({2, 1}));
}

}  // namespace hecke
