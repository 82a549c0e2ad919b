#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

std::string without_seconds(VerificationReport r) {
  r.seconds = 0;
  return to_json_string(r);
}

}  // namespace

TEST(ParallelMap, ResultsInIndexOrder) {
  for (unsigned jobs : {1u, 2u, 3u, 8u}) {
    auto out = parallel_map(1000, jobs, [](std::size_t i) { return i * i; });
    ASSERT_EQ(out.size(), 1000u);
    for (std::size_t i = 0; i < out.size(); ++i) ASSERT_EQ(out[i], i * i);
  }
  EXPECT_TRUE(parallel_map(0, 4, [](std::size_t i) { return i; }).empty());
}

TEST(ParallelMap, EveryIndexRunsOnceUnderImbalance) {
  std::vector<std::atomic<int>> hits(500);
  parallel_map(500, 6, [&](std::size_t i) {
    // Front-loaded work makes the first worker's range slow so others steal.
    if (i < 50) std::this_thread::sleep_for(std::chrono::microseconds(200));
    return ++hits[i];
  });
  for (auto& h : hits) ASSERT_EQ(h.load(), 1);
}

TEST(ParallelMap, PropagatesExceptions) {
  EXPECT_THROW(parallel_map(100, 4,
                            [](std::size_t i) -> int {
                              if (i == 37) throw std::runtime_error("boom");
                              return 0;
                            }),
               std::runtime_error);
}

TEST(Report, JsonSchema) {
  VerificationReport r;
  r.claim = "theorem1";
  r.n = 3;
  r.total = 6;
  r.passed = 5;
  r.failed = 1;
  r.counterexamples = {"132"};
  r.seconds = 0.5;
  EXPECT_EQ(to_json(r).dump(),
            R"({"claim":"theorem1","n":3,"total":6,"passed":5,"failed":1,)"
            R"("counterexamples":["132"],"seconds":0.5})");
  auto back = report_from_json(nlohmann::json::parse(to_json_string(r)));
  EXPECT_EQ(to_json_string(back), to_json_string(r));
  EXPECT_EQ(csv_header(), "claim,n,total,passed,failed,counterexamples,seconds\n");
  EXPECT_EQ(to_csv_row(r), "theorem1,3,6,5,1,\"132\",0.5\n");
}

TEST(Tally, CapsCounterexamplesButKeepsCounts) {
  Tally t;
  for (int k = 0; k < 25; ++k) t.record(false, [&] { return std::to_string(k); });
  t.record(true, [] { return std::string("never"); });
  EXPECT_EQ(t.total, 26u);
  EXPECT_EQ(t.passed, 1u);
  EXPECT_EQ(t.examples.size(), kMaxCounterexamples);
  EXPECT_EQ(t.examples.front(), "0");
}

TEST(VerifyTheorem, SmallCases) {
  auto r1 = verify_theorem_main(1);
  EXPECT_EQ(r1.total, 1u);
  EXPECT_EQ(r1.passed, 1u);
  auto r3 = verify_theorem_main(3);
  EXPECT_EQ(r3.total, 6u);
  EXPECT_EQ(r3.passed, 6u);
  EXPECT_EQ(r3.successes, 4u);
  auto r5 = verify_theorem_main(5, {.jobs = 4});
  EXPECT_EQ(r5.total, 120u);
  EXPECT_EQ(r5.failed, 0u);
  EXPECT_EQ(r5.successes, oracle::count_avoiding_132_312(5));
  EXPECT_EQ(r5.successes, 16u);
  EXPECT_THROW(verify_theorem_main(0), std::invalid_argument);
}

TEST(VerifyTheorem, SuccessesAtNThreeAreTheExpectedPermutations) {
  std::vector<std::string> hits;
  for (const auto& w : all_permutations(3))
    if (complement_delta(w).recognized) hits.push_back(w.to_string());
  EXPECT_EQ(hits, (std::vector<std::string>{"123", "213", "231", "321"}));
}

TEST(VerifyClaims, AllPassAtSmallSizes) {
  for (const auto& [id, fn] : claims()) {
    const std::size_t n = (id == "conj2") ? 4 : (id == "thm1432" ? 2 : 4);
    auto r = fn(n, {.jobs = 2});
    EXPECT_TRUE(r.ok()) << id;
    EXPECT_EQ(r.passed + r.failed, r.total) << id;
    EXPECT_EQ(r.failed == 0, r.counterexamples.empty()) << id;
    EXPECT_GT(r.total, 0u) << id;
  }
}

TEST(VerifyClaims, Counts) {
  EXPECT_EQ(verify_rearrangement_prop(3).total, 25u);
  EXPECT_EQ(verify_rearrangement_prop(1).total, 1u);
  EXPECT_EQ(verify_conjecture_partition(3).total, 36u);
  EXPECT_EQ(verify_conjecture_partition(1).total, 1u);
  EXPECT_EQ(verify_conjecture_1432(4).total, 24u);
  EXPECT_EQ(verify_conjecture_1432(3).total, 0u);
  EXPECT_EQ(verify_1432_theorem(0).total, 1u);
  EXPECT_EQ(verify_basis(3).passed, 1u);
  EXPECT_EQ(verify_involution(3).successes, 4u);
  EXPECT_EQ(verify_methods_agree(3).passed, 6u);
  EXPECT_EQ(verify_code_lemma(6).passed, 720u);
  EXPECT_EQ(verify_extremal_monomials(5).passed, 120u);
}

TEST(VerifyClaims, LongRunGate) {
  EXPECT_THROW(verify_conjecture_partition(7), std::invalid_argument);
  EXPECT_THROW(verify_conjecture_1432(7), std::invalid_argument);
  EXPECT_THROW(verify_conjecture_partition(8, {.long_run = true}),
               std::invalid_argument);
}

TEST(VerifyClaims, ShardingInvariance) {
  for (const auto& [id, fn] : claims()) {
    const std::size_t n = id == "thm1432" ? 2 : 4;
    auto a = fn(n, {.jobs = 1});
    auto b = fn(n, {.jobs = 5});
    EXPECT_EQ(without_seconds(a), without_seconds(b)) << id;
  }
}

TEST(VerifyClaims, CounterexampleOrderIsDeterministic) {
  // A claim that fails for every index must keep the first ten in order.
  for (unsigned jobs : {1u, 7u}) {
    auto t = detail::sweep(100, jobs, [](std::size_t i, Tally& t) {
      t.record(i % 3 != 0, [&] { return std::to_string(i); });
    });
    EXPECT_EQ(t.total, 100u);
    EXPECT_EQ(t.passed, 66u);
    EXPECT_EQ(t.examples, (std::vector<std::string>{"0", "3", "6", "9", "12", "15",
                                                    "18", "21", "24", "27"}));
  }
}

TEST(Checkpoint, ResumesFromSavedProgress) {
  const auto dir = std::filesystem::temp_directory_path() / "schubert-ck-test";
  std::filesystem::remove_all(dir);
  SweepOptions opt{.jobs = 2, .checkpoint_dir = dir};
  std::atomic<int> calls = 0;
  auto body = [&](std::size_t i, Tally& t) {
    ++calls;
    t.record(i != 4, [&] { return std::to_string(i); });
  };
  auto full = detail::batched_sweep("probe", 3, 10, 5, opt, body, 15);
  EXPECT_EQ(full.total, 10u);
  EXPECT_EQ(full.passed, 9u);
  EXPECT_EQ(calls.load(), 10);
  ASSERT_TRUE(std::filesystem::exists(detail::checkpoint_file(dir, "probe", 3)));

  // Pretend the run stopped after six outer indices.
  {
    auto j = nlohmann::json::parse(std::ifstream(detail::checkpoint_file(dir, "probe", 3)));
    EXPECT_EQ(j["next"], 10);
    j["next"] = 6;
    j["total"] = 6;
    j["passed"] = 5;
    j["counterexamples"] = {"4"};
    std::ofstream(detail::checkpoint_file(dir, "probe", 3)) << j.dump();
  }
  calls = 0;
  auto resumed = detail::batched_sweep("probe", 3, 10, 5, opt, body, 15);
  EXPECT_EQ(calls.load(), 4);
  EXPECT_EQ(resumed.total, full.total);
  EXPECT_EQ(resumed.passed, full.passed);
  EXPECT_EQ(resumed.examples, full.examples);
  std::filesystem::remove_all(dir);
}
