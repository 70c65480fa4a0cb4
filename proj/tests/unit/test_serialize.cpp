#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>

#include "hecke/insertion.hpp"
#include "hecke/parallel.hpp"
#include "hecke/serialize.hpp"

namespace hecke {

TEST(Serialize, DiagramRoundTrip) {
  const YoungDiagram d({4, 2, 2, 1});
  EXPECT_EQ(diagram_from_json(to_json(d)), d);
  EXPECT_EQ(diagram_from_json(to_json(YoungDiagram{})), YoungDiagram{});
  EXPECT_THROW(diagram_from_json("[1, 2]"), std::invalid_argument);
}

TEST(Serialize, HeckePairRoundTrip) {
  const HeckePair pq = hecke(Word::parse("5 4 1 3 4 2 5 1 2 1 4 2 4", 5));
  const HeckePair back = hecke_pair_from_json(to_json(pq));
  EXPECT_EQ(back.p, pq.p);
  EXPECT_EQ(back.q, pq.q);
}

TEST(Serialize, Formatting) {
  EXPECT_EQ(format_fixed(0.5), "0.500000");
  EXPECT_EQ(format_fixed(2.0 / 3.0, 3), "0.667");
  EXPECT_EQ(shape_cell(YoungDiagram({4, 3, 2})), "4 3 2");
  const std::string ts = utc_timestamp();
  EXPECT_EQ(ts.size(), 20u);
  EXPECT_EQ(ts.back(), 'Z');
}

TEST(Serialize, ManifestHeaderOmitsTimestamp) {
  RunManifest m{"sweep", {{"n", "100"}, {"k_grid", "1,2"}}, 7, "0.1.0", "2026-01-01T00:00:00Z"};
  EXPECT_EQ(m.csv_header(), "# subcommand=sweep\n# version=0.1.0\n# seed=7\n# n=100\n# k_grid=1,2\n");
  EXPECT_NE(m.to_json().find("2026-01-01T00:00:00Z"), std::string::npos);
}

namespace {

struct Sum {
  std::uint64_t total = 0;
  std::uint64_t count = 0;
  void merge(const Sum& o) {
    total += o.total;
    count += o.count;
  }
};

}  // namespace

TEST(Parallel, ResultIndependentOfThreads) {
  auto body = [](std::uint64_t t, Sum& acc) {
    Stream rng(3, t);
    acc.total += rng.below(1000);
    ++acc.count;
  };
  const Sum one = parallel_trials<Sum>(1000, 1, body);
  for (unsigned threads : {2u, 3u, 8u}) {
    const Sum many = parallel_trials<Sum>(1000, threads, body);
    EXPECT_EQ(many.total, one.total);
    EXPECT_EQ(many.count, 1000u);
  }
  EXPECT_EQ(parallel_trials<Sum>(0, 4, body).count, 0u);
}

TEST(Parallel, PropagatesExceptions) {
  auto body = [](std::uint64_t t, Sum&) {
    if (t == 37) throw std::runtime_error("boom");
  };
  EXPECT_THROW(parallel_trials<Sum>(100, 4, body), std::runtime_error);
}

}  // namespace hecke
