#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("heckesim_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = std::string(HECKESIM_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, SweepIsIndependentOfThreadCount) {
  const fs::path dir = scratch();
  const std::string both = " sweep --n 400 --k-grid 0.5,1,2 --alpha-grid 0.25 --trials 40 --seed 17";
  ASSERT_EQ(run("--threads 1 --out " + (dir / "k1.csv").string() + " sweep --n 400 --k-grid 0.5,1,2 --trials 40 --seed 17"), 0);
  ASSERT_EQ(run("--threads 4 --out " + (dir / "k4.csv").string() + " sweep --n 400 --k-grid 0.5,1,2 --trials 40 --seed 17"), 0);
  ASSERT_EQ(run("--threads 1 --out " + (dir / "a1.csv").string() + " sweep --n 400 --alpha-grid 0.25,0.75 --trials 40 --seed 17"), 0);
  ASSERT_EQ(run("--threads 3 --out " + (dir / "a3.csv").string() + " sweep --n 400 --alpha-grid 0.25,0.75 --trials 40 --seed 17"), 0);
  EXPECT_EQ(run(both), 2);
  const std::string k1 = slurp(dir / "k1.csv");
  EXPECT_FALSE(k1.empty());
  EXPECT_EQ(k1, slurp(dir / "k4.csv"));
  EXPECT_EQ(slurp(dir / "a1.csv"), slurp(dir / "a3.csv"));
  EXPECT_TRUE(fs::exists(dir / "k1.csv.manifest.json"));
  fs::remove_all(dir);
}

TEST(Cli, SampleAndPatienceAreIndependentOfThreadCount) {
  const fs::path dir = scratch();
  ASSERT_EQ(run("--threads 1 --out " + (dir / "s1.csv").string() + " sample --n 50 --q 6 --trials 30 --seed 2"), 0);
  ASSERT_EQ(run("--threads 4 --out " + (dir / "s4.csv").string() + " sample --n 50 --q 6 --trials 30 --seed 2"), 0);
  EXPECT_EQ(slurp(dir / "s1.csv"), slurp(dir / "s4.csv"));
  ASSERT_EQ(run("--threads 1 patience --ranks 13 --copies 4 --trials 200 --seed 5 --out-prefix " + (dir / "p1").string()), 0);
  ASSERT_EQ(run("--threads 2 patience --ranks 13 --copies 4 --trials 200 --seed 5 --out-prefix " + (dir / "p2").string()), 0);
  EXPECT_EQ(slurp(dir / "p1_histogram.csv"), slurp(dir / "p2_histogram.csv"));
  EXPECT_EQ(slurp(dir / "p1_pile_sizes.csv"), slurp(dir / "p2_pile_sizes.csv"));
  EXPECT_FALSE(slurp(dir / "p1_histogram.csv").empty());
  fs::remove_all(dir);
}

TEST(Cli, ExactOutput) {
  const fs::path dir = scratch();
  ASSERT_EQ(run("--out " + (dir / "e.json").string() + " exact --n 4 --q 3"), 0);
  const std::string text = slurp(dir / "e.json");
  EXPECT_NE(text.find("\"denominator\": \"81\""), std::string::npos);
  EXPECT_NE(text.find("\"num\": \"40\""), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("bogus"), 2);
  EXPECT_EQ(run("exact --n 4"), 2);
  EXPECT_EQ(run("exact --n 20 --q 3"), 2);
  EXPECT_EQ(run("sample --n 5 --q 0 --trials 3"), 2);
  EXPECT_EQ(run("verify --level fast"), 0);
}
