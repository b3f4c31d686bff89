#include "property_checks.hpp"

#include <gtest/gtest.h>

namespace {

std::string joined(const std::vector<std::string>& fails) {
  std::string s;
  for (std::size_t i = 0; i < fails.size() && i < 10; ++i) s += fails[i] + "\n";
  return s;
}

class CorpusTest : public ::testing::TestWithParam<std::size_t> {
 protected:
  const props::Case& c() const {
    static const auto all = props::corpus();
    return all[GetParam()];
  }
};

}  // namespace

TEST_P(CorpusTest, EvolutionSoundness) {
  auto fails = props::evolution_soundness(c());
  EXPECT_TRUE(fails.empty()) << joined(fails);
}

TEST_P(CorpusTest, DeadnessSoundness) {
  auto fails = props::deadness_soundness(c());
  EXPECT_TRUE(fails.empty()) << joined(fails);
}

TEST_P(CorpusTest, EliminateMatchesFit) {
  auto fails = props::eliminate_vs_fit(c());
  EXPECT_TRUE(fails.empty()) << joined(fails);
}

TEST_P(CorpusTest, SeriesStreamAndBruteForceAgree) {
  auto fails = props::oracle_agreement(c());
  EXPECT_TRUE(fails.empty()) << joined(fails);
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusTest, ::testing::Range<std::size_t>(0, props::corpus().size()));

TEST(RandomStateTest, EvolutionSoundness) {
  for (auto fails : {props::evolution_soundness_random(fixtures::stern(), "stern", 1, 150),
                     props::evolution_soundness_random(fixtures::stern(sterngf::zpoly({3, -1, 0, 2})), "stern P", 2, 60),
                     props::evolution_soundness_random(fixtures::fibonacci(), "fibonacci", 3, 150),
                     props::evolution_soundness_random(fixtures::challenge(), "challenge", 4, 100),
                     props::evolution_soundness_random(fixtures::challenge_table(), "challenge table", 5, 100)}) {
    EXPECT_TRUE(fails.empty()) << joined(fails);
  }
}

TEST(RandomStateTest, Canonicalization) {
  for (auto fails : {props::canonicalization(fixtures::stern(), "stern", 6, 200),
                     props::canonicalization(fixtures::fibonacci(), "fibonacci", 7, 200),
                     props::canonicalization(fixtures::tribonacci(), "tribonacci", 8, 200)}) {
    EXPECT_TRUE(fails.empty()) << joined(fails);
  }
}

TEST(RandomStateTest, RootValueIsTheCorrelationSum) {
  for (const auto& spec : {fixtures::stern(), fixtures::fibonacci(), fixtures::challenge()}) {
    for (auto a : {std::vector<unsigned>{2}, std::vector<unsigned>{1, 2}, std::vector<unsigned>{1, 0, 0, 1}}) {
      const sterngf::TargetAlpha alpha(a);
      const auto root = sterngf::root_state(alpha, spec.order());
      for (std::size_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(sterngf::state_oracle(spec, root, n), sterngf::u_alpha_oracle(spec, alpha, n));
      }
    }
  }
}

TEST(FitProperty, RandomRoundTrip) {
  auto fails = props::fit_round_trip(77, 150);
  EXPECT_TRUE(fails.empty()) << joined(fails);
}
