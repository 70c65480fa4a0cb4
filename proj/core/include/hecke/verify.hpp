#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hecke {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

enum class VerifyLevel { fast, full };

/// Times fn and turns exceptions into failures. fn returns pass/fail and fills detail.
CheckResult run_check(const std::string& name, const std::function<bool(std::string&)>& fn);

// Exhaustive and exact checks. Ranges are inclusive upper bounds; loops start at n = 0 or 1.
CheckResult check_weight_identity(int max_n, int max_q);
CheckResult check_count_constants();
CheckResult check_lis_lds_shape(int max_n, int max_q);
CheckResult check_first_row(int max_n, int max_q);
CheckResult check_roundtrip(int max_n, int max_q);
CheckResult check_pushforward(int max_n, int max_q);
CheckResult check_rectification(int max_n, int max_q);
CheckResult check_patience(int max_n, int max_q);
CheckResult check_markov_sums(int max_size, int max_q);
CheckResult check_markov_pushforward(int max_n, int max_q);
CheckResult check_worked_insertion();
CheckResult check_erdos_szekeres(int max_n, int max_q);

std::vector<CheckResult> run_verify(VerifyLevel level);

}  // namespace hecke
