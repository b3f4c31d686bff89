#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sterngf;
using fixtures::bigs;

namespace {

const CFiniteSeq kPowers = CFiniteSeq::from_ints({1}, {2});
const CFiniteSeq kFib = CFiniteSeq::from_ints({0, 1}, {1, 1});
const CFiniteSeq kTwoPowPlusOne = CFiniteSeq::from_ints({2, 3}, {3, -2});

CFiniteSeq k_bonacci(std::size_t k) {
  std::vector<std::int64_t> init(k, 0), rec(k, 1);
  init[k - 1] = 1;
  return CFiniteSeq::from_ints(init, rec);
}

std::vector<CFiniteSeq> corpus() {
  return {kPowers, kFib, kTwoPowPlusOne, k_bonacci(3), CFiniteSeq::from_ints({1, 0, -1}, {0, 2, -1}),
          CFiniteSeq::from_ints({3}, {-2})};
}

BigInt dot(const LinForm& b, const std::vector<BigInt>& f, std::size_t n) {
  return evaluate<BigInt>(b.coeffs(), std::span<const BigInt>(f).subspan(n, b.size()));
}

}  // namespace

TEST(CFiniteTest, Terms) {
  EXPECT_EQ(term(kPowers, 5), 32);
  EXPECT_EQ(term(kTwoPowPlusOne, 5), 33);
  EXPECT_EQ(term(kFib, 10), 55);
}

TEST(CFiniteTest, RejectsBadShapes) {
  EXPECT_THROW(CFiniteSeq::from_ints({1}, {}), std::invalid_argument);
  EXPECT_THROW(CFiniteSeq::from_ints({1, 2}, {1}), std::invalid_argument);
  EXPECT_THROW(CFiniteSeq::from_ints({1, 2}, {1, 0}), std::invalid_argument);
}

TEST(CFiniteTest, ReduceShiftExamples) {
  EXPECT_EQ(reduce_shift(kFib, 1), LinForm({0, 1}));
  EXPECT_EQ(reduce_shift(kFib, 2), LinForm({1, 1}));
  EXPECT_EQ(reduce_shift(kFib, 3), LinForm({1, 2}));
}

TEST(CFiniteTest, ReduceShiftIdentity) {
  for (const auto& seq : corpus()) {
    const auto f = seq.terms(60);
    for (std::size_t j = 0; j <= 12; ++j) {
      const LinForm b = reduce_shift(seq, j);
      for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(f[n + j], dot(b, f, n)) << "J=" << j << " n=" << n;
    }
  }
}

TEST(CFiniteTest, ShiftLevelExamples) {
  EXPECT_EQ(shift_level(kPowers, LinForm({1})), LinForm({2}));
  EXPECT_EQ(shift_level(kFib, LinForm({0, 1})), LinForm({1, 1}));
  EXPECT_EQ(shift_level(kTwoPowPlusOne, LinForm({0, 1})), LinForm({-2, 3}));
}

TEST(CFiniteTest, ShiftLevelPreservesValue) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-5, 5);
  for (const auto& seq : corpus()) {
    const auto f = seq.terms(40);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::int64_t> c(seq.order());
      for (auto& x : c) x = d(rng);
      const LinForm b(c), b1 = shift_level(seq, b);
      for (std::size_t n = 1; n <= 30; ++n) EXPECT_EQ(dot(b1, f, n - 1), dot(b, f, n));
    }
  }
}

TEST(CFiniteTest, ShiftLevelIsLinear) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-50, 50);
  for (const auto& seq : corpus()) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> a(seq.order()), c(seq.order());
      for (auto& x : a) x = d(rng);
      for (auto& x : c) x = d(rng);
      EXPECT_EQ(shift_level(seq, LinForm(a) + LinForm(c)), shift_level(seq, LinForm(a)) + shift_level(seq, LinForm(c)));
    }
  }
}

TEST(CFiniteTest, IndicialPoly) {
  EXPECT_EQ(indicial_poly(kPowers), zpoly({-2, 1}));
  EXPECT_EQ(indicial_poly(kFib), zpoly({-1, -1, 1}));
  EXPECT_EQ(indicial_poly(kTwoPowPlusOne), zpoly({2, -3, 1}));
}

TEST(CFiniteTest, PartialSums) {
  const auto s = partial_sums(kPowers).terms(6);
  EXPECT_EQ(s, bigs({0, 1, 3, 7, 15, 31}));
}

TEST(PositivityTest, ConstantMarginIsPositive) {
  // 2*2^n - 2(2^n - 1) = 2
  CFiniteSeq two_pow_n1 = CFiniteSeq::from_ints({2}, {2});
  CFiniteSeq bound = combine(2, partial_sums(kPowers), 0, kPowers);
  CFiniteSeq expr = combine(1, two_pow_n1, -1, bound);
  EXPECT_EQ(expr.terms(5), bigs({2, 2, 2, 2, 2}));
  EXPECT_TRUE(certify_eventually_positive(expr).positive());
}

TEST(PositivityTest, AliveMarginFailsAtZero) {
  // 2(2^n - 1) - 2^n = 2^n - 2
  CFiniteSeq expr = combine(2, partial_sums(kPowers), -1, kPowers);
  EXPECT_EQ(expr.terms(4), bigs({-1, 0, 2, 6}));
  auto v = certify_eventually_positive(expr);
  EXPECT_EQ(v.kind, PositivityVerdict::Kind::NotAlwaysPositive);
  EXPECT_EQ(v.witness, 0u);
}

TEST(PositivityTest, NegativeConstant) {
  auto v = certify_eventually_positive(CFiniteSeq::from_ints({-1}, {1}));
  EXPECT_EQ(v.kind, PositivityVerdict::Kind::NotAlwaysPositive);
  EXPECT_EQ(v.witness, 0u);
}

TEST(PositivityTest, LateSignChangeIsNotCertified) {
  // 1000 - 2^n: positive up to n = 9, negative afterwards
  CFiniteSeq expr = combine(-1, kPowers, 0, kPowers, 1000);
  auto v = certify_eventually_positive(expr, 4);
  EXPECT_NE(v.kind, PositivityVerdict::Kind::PositiveForAll);
}

TEST(PositivityTest, SoundnessSpotCheck) {
  // random integer combinations; a positive verdict must hold far past the horizon
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-6, 6);
  const std::size_t horizon = 8;
  int certified = 0;
  for (const auto& seq : corpus()) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::int64_t> c(seq.order());
      for (auto& x : c) x = d(rng);
      CFiniteSeq h = combine(1, linear_form_sequence(seq, LinForm(c)), 0, seq, d(rng));
      auto v = certify_eventually_positive(h, horizon);
      if (!v.positive()) continue;
      ++certified;
      for (const auto& x : h.terms(10 * horizon + 1)) EXPECT_GT(x, 0);
    }
  }
  EXPECT_GT(certified, 10);
}

TEST(PvTest, KBonacciArePv) {
  for (std::size_t k = 2; k <= 6; ++k) {
    auto v = pv_classify(k_bonacci(k));
    EXPECT_EQ(v.kind, PvVerdict::Kind::Pv) << k << ": " << v.reason;
  }
}

TEST(PvTest, TwoPowPlusOneHasUnitRoot) {
  auto v = pv_classify(kTwoPowPlusOne);
  EXPECT_EQ(v.kind, PvVerdict::Kind::NotPv);
  EXPECT_NE(v.reason.find("root of modulus 1"), std::string::npos);
}

TEST(PvTest, PowersOfTwo) { EXPECT_EQ(pv_classify(kPowers).kind, PvVerdict::Kind::Pv); }

TEST(PvTest, OtherFailures) {
  // X^2 - 4: roots 2 and -2
  EXPECT_EQ(pv_classify(CFiniteSeq::from_ints({1, 2}, {0, 4})).kind, PvVerdict::Kind::NotPv);
  // X^2 + 1 is cyclotomic
  EXPECT_EQ(pv_classify(CFiniteSeq::from_ints({1, 0}, {0, -1})).kind, PvVerdict::Kind::NotPv);
  // X + 3: the dominant root is negative
  EXPECT_EQ(pv_classify(CFiniteSeq::from_ints({1}, {-3})).kind, PvVerdict::Kind::NotPv);
}

TEST(PvTest, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic(1), zpoly({-1, 1}));
  EXPECT_EQ(cyclotomic(2), zpoly({1, 1}));
  EXPECT_EQ(cyclotomic(6), zpoly({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), zpoly({1, 0, -1, 0, 1}));
}
