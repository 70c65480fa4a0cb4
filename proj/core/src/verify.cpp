#include "hecke/verify.hpp"

#include <chrono>
#include <exception>
#include <map>

#include "hecke/asymptotics.hpp"
#include "hecke/counting.hpp"
#include "hecke/insertion.hpp"
#include "hecke/kjdt.hpp"
#include "hecke/measures.hpp"
#include "hecke/patience.hpp"
#include "hecke/word.hpp"

namespace hecke {

namespace {

std::string where(const Word& w) { return "w = " + w.to_string() + " (q = " + std::to_string(w.alphabet_size()) + ")"; }

// Calls f(w) on every word with 0 <= n <= max_n, 1 <= q <= max_q until it returns false.
template <class F>
bool all_words(int max_n, int max_q, F&& f) {
  bool ok = true;
  for (int q = 1; q <= max_q && ok; ++q) {
    for (int n = 0; n <= max_n && ok; ++n) {
      for_each_word(static_cast<std::size_t>(n), q, [&](const Word& w) {
        if (ok && !f(w)) ok = false;
      });
    }
  }
  return ok;
}

}  // namespace

CheckResult run_check(const std::string& name, const std::function<bool(std::string&)>& fn) {
  CheckResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.passed = fn(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CheckResult check_weight_identity(int max_n, int max_q) {
  return run_check("weight identity q^n = sum d*e", [=](std::string& detail) {
    ExactLimits limits{max_n, max_q};
    for (int q = 1; q <= max_q; ++q) {
      for (int n = 0; n <= max_n; ++n) {
        // exact_plancherel_hecke throws if the weights miss q^n.
        const auto d = exact_plancherel_hecke(n, q, limits);
        if (d.total() != 1) {
          detail = "probabilities do not sum to 1 at n=" + std::to_string(n) + " q=" + std::to_string(q);
          return false;
        }
        if (n == 4 && q == 3) {
          BigInt s = 0;
          std::string terms;
          for (const auto& e : d.entries) {
            if (!terms.empty()) terms += " + ";
            terms += e.left.str() + "*" + e.right.str();
            s += e.left * e.right;
          }
          detail = "(n,q)=(4,3): " + terms + " = " + s.str() + " = 3^4; ";
        }
      }
    }
    detail += "all n<=" + std::to_string(max_n) + ", q<=" + std::to_string(max_q);
    return true;
  });
}

CheckResult check_count_constants() {
  return run_check("tableau counts d^(2,1)(3), e^(2,1)(4), d^(4,2,1)(7), e^(4,2,1)(8)", [](std::string& detail) {
    const YoungDiagram a({2, 1});
    const YoungDiagram b({4, 2, 1});
    const BigInt v[] = {count_increasing(a, 3), count_set_valued_standard(a, 4), count_increasing(b, 7),
                        count_set_valued_standard(b, 8)};
    detail = v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ", " + v[3].str();
    return v[0] == 5 && v[1] == 8 && v[2] == 1337 && v[3] == 452;
  });
}

CheckResult check_lis_lds_shape(int max_n, int max_q) {
  return run_check("first row = LIS, first column = LDS", [=](std::string& detail) {
    std::size_t count = 0;
    const bool ok = all_words(max_n, max_q, [&](const Word& w) {
      ++count;
      const YoungDiagram s = heckeshape(w);
      if (s.first_row() == lis(w) && s.first_column() == lds(w)) return true;
      detail = "mismatch at " + where(w);
      return false;
    });
    if (ok) detail = std::to_string(count) + " words";
    return ok;
  });
}

CheckResult check_first_row(int max_n, int max_q) {
  return run_check("first row of P from LIS end positions", [=](std::string& detail) {
    std::size_t count = 0;
    const bool ok = all_words(max_n, max_q, [&](const Word& w) {
      ++count;
      if (w.empty()) return true;
      std::vector<int> expected;
      for (const auto& [t, r] : lis_end_positions(w)) expected.push_back(w.at(r));
      if (hecke(w).p.first_row() == expected) return true;
      detail = "mismatch at " + where(w);
      return false;
    });
    if (ok) detail = std::to_string(count) + " words";
    return ok;
  });
}

CheckResult check_roundtrip(int max_n, int max_q) {
  return run_check("hecke_inverse(hecke(w)) = w", [=](std::string& detail) {
    std::size_t count = 0;
    const bool ok = all_words(max_n, max_q, [&](const Word& w) {
      ++count;
      if (hecke_inverse(hecke(w), w.alphabet_size()) == w) return true;
      detail = "roundtrip failed at " + where(w);
      return false;
    });
    if (ok) detail = std::to_string(count) + " words";
    return ok;
  });
}

CheckResult check_pushforward(int max_n, int max_q) {
  return run_check("heckeshape tally over all words = exact distribution", [=](std::string& detail) {
    for (int q = 1; q <= max_q; ++q) {
      for (int n = 0; n <= max_n; ++n) {
        std::map<YoungDiagram, BigInt> tally;
        for_each_word(static_cast<std::size_t>(n), q, [&](const Word& w) { tally[heckeshape(w)] += 1; });
        const auto d = exact_plancherel_hecke(n, q, {max_n, max_q});
        if (tally.size() != d.entries.size()) {
          detail = "support differs at n=" + std::to_string(n) + " q=" + std::to_string(q);
          return false;
        }
        for (const auto& e : d.entries) {
          if (tally[e.shape] != e.left * e.right) {
            detail = "weight of " + e.shape.to_string() + " differs at n=" + std::to_string(n) +
                     " q=" + std::to_string(q);
            return false;
          }
        }
      }
    }
    detail = "n<=" + std::to_string(max_n) + ", q<=" + std::to_string(max_q);
    return true;
  });
}

CheckResult check_rectification(int max_n, int max_q) {
  return run_check("K-rectification of T_w = insertion tableau", [=](std::string& detail) {
    std::size_t count = 0;
    const bool ok = all_words(max_n, max_q, [&](const Word& w) {
      ++count;
      if (k_rectify(w) == hecke(w).p) return true;
      detail = "mismatch at " + where(w);
      return false;
    });
    if (ok) detail = std::to_string(count) + " words";
    return ok;
  });
}

CheckResult check_patience(int max_n, int max_q) {
  return run_check("patience tops = first row of P, piles = LIS", [=](std::string& detail) {
    std::size_t count = 0;
    const bool ok = all_words(max_n, max_q, [&](const Word& w) {
      const PileState s = play_greedy(w, Ties::allowed);
      ++count;
      if (pile_tops(s) == hecke(w).p.first_row() && pile_count(s) == lis(w)) return true;
      detail = "mismatch at " + where(w);
      return false;
    });
    if (ok) detail = std::to_string(count) + " words";
    return ok;
  });
}

CheckResult check_markov_sums(int max_size, int max_q) {
  return run_check("growth chain transitions sum to 1", [=](std::string& detail) {
    std::size_t count = 0;
    for (int q = 1; q <= max_q; ++q) {
      for (int size = 0; size <= max_size; ++size) {
        for (const auto& lambda : partitions_of(size)) {
          if (lambda.rows() > q) continue;
          Rational s = 0;
          for (const Box& b : lambda.addable()) s += markov_transition(lambda, lambda.with_box(b), q);
          ++count;
          if (s != 1) {
            detail = "sum is " + s.str() + " at " + lambda.to_string() + " q=" + std::to_string(q);
            return false;
          }
        }
      }
    }
    detail = std::to_string(count) + " shapes";
    return true;
  });
}

CheckResult check_markov_pushforward(int max_n, int max_q) {
  return run_check("growth chain pushes nu_{n,q} to nu_{n+1,q}", [=](std::string& detail) {
    for (int q = 1; q <= max_q; ++q) {
      for (int n = 0; n <= max_n; ++n) {
        const auto now = exact_plancherel_rsk(n, q);
        const auto next = exact_plancherel_rsk(n + 1, q);
        std::map<YoungDiagram, Rational> pushed;
        for (const auto& e : now.entries) {
          for (const Box& b : e.shape.addable()) {
            const YoungDiagram mu = e.shape.with_box(b);
            pushed[mu] += e.probability * markov_transition(e.shape, mu, q);
          }
        }
        for (const auto& e : next.entries) {
          if (pushed[e.shape] != e.probability) {
            detail = "mismatch at " + e.shape.to_string() + " n=" + std::to_string(n) + " q=" + std::to_string(q);
            return false;
          }
        }
        for (const auto& [mu, p] : pushed) {
          if (p != next.probability(mu)) {
            detail = "extra mass at " + mu.to_string();
            return false;
          }
        }
      }
    }
    detail = "n<=" + std::to_string(max_n) + ", q<=" + std::to_string(max_q);
    return true;
  });
}

CheckResult check_worked_insertion() {
  return run_check("worked insertion of 5 4 1 3 4 2 5 1 2 1 4 2 4", [](std::string& detail) {
    const Word w = Word::parse("5 4 1 3 4 2 5 1 2 1 4 2 4", 5);
    const HeckePair pq = hecke(w);
    const IncreasingTableau p({{1, 2, 4, 5}, {2, 4, 5}, {3, 5}, {4}, {5}});
    const SetValuedTableau q({{{1}, {4}, {5}, {7}}, {{2}, {9}, {11, 13}}, {{3}, {12}}, {{6}}, {{8, 10}}});
    const bool ok = pq.p == p && pq.q == q && pq.shape() == YoungDiagram({4, 3, 2, 1, 1}) &&
                    hecke_inverse(pq, 5) == w && lis(w) == 4 && lds(w) == 5;
    detail = "shape " + pq.shape().to_string();
    return ok;
  });
}

CheckResult check_erdos_szekeres(int max_n, int max_q) {
  return run_check("generalized Erdos-Szekeres implication", [=](std::string& detail) {
    std::size_t count = 0;
    const bool ok = all_words(max_n, max_q, [&](const Word& w) {
      const int q = w.alphabet_size();
      for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
          ++count;
          if (!check_es(w, a, b)) {
            detail = "violated at " + where(w) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
            return false;
          }
        }
      }
      return true;
    });
    if (ok) detail = std::to_string(count) + " (word, a, b) triples";
    return ok;
  });
}

std::vector<CheckResult> run_verify(VerifyLevel level) {
  const bool full = level == VerifyLevel::full;
  std::vector<CheckResult> out;
  out.push_back(check_weight_identity(full ? 7 : 5, 4));
  out.push_back(check_count_constants());
  out.push_back(check_worked_insertion());
  out.push_back(check_lis_lds_shape(full ? 6 : 5, 4));
  out.push_back(check_first_row(full ? 6 : 5, 4));
  out.push_back(check_roundtrip(full ? 7 : 5, 4));
  out.push_back(check_pushforward(full ? 6 : 4, 3));
  out.push_back(check_rectification(full ? 6 : 4, full ? 4 : 3));
  out.push_back(check_patience(full ? 7 : 5, 4));
  out.push_back(check_markov_sums(full ? 8 : 6, 5));
  out.push_back(check_markov_pushforward(full ? 7 : 5, 4));
  out.push_back(check_erdos_szekeres(full ? 8 : 6, 4));
  return out;
}

}  // namespace hecke
