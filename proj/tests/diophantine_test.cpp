#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include <collatz_sigma/diophantine.hpp>
#include <collatz_sigma/recurrence.hpp>

namespace cs = collatz_sigma;
using cs::BigInt;

namespace {

std::vector<cs::SolutionRecord> all_solutions(std::uint32_t n) {
  std::vector<cs::SolutionRecord> out;
  cs::solution_stream(n).for_each([&](const cs::SolutionRecord& r) { out.push_back(r); });
  return out;
}

BigInt seed_z(std::uint32_t k) { return cs::kInitialZn[k - 1]; }

}  // namespace

TEST(Solve, ListedPairs) {
  EXPECT_EQ(cs::solve_unique(4, {{0, 1, 3, 4}}), std::make_pair(BigInt(59), BigInt(38)));
  EXPECT_EQ(cs::solve_unique(4, {{0, 1, 2, 4}}), std::make_pair(BigInt(7), BigInt(5)));
  EXPECT_EQ(cs::solve_unique(4, {{0, 1, 2, 3}}), std::make_pair(BigInt(15), BigInt(10)));
}

TEST(Solve, RecordsForFourAndSix) {
  auto four = all_solutions(4);
  ASSERT_EQ(four.size(), 3u);
  EXPECT_EQ(four[0].x, 59);
  EXPECT_EQ(four[0].tuple.bits.to_string(), "(1, 1, 0, 1, 1)");
  for (const auto& r : four) EXPECT_EQ(r.sigma_x, 7u);

  auto six = all_solutions(6);
  ASSERT_EQ(six.size(), 15u);
  EXPECT_EQ(six.back().x, 575);
  EXPECT_EQ(six.back().y, 410);

  auto first5 = cs::solution_stream(5, cs::IndexRange{0, 1}).next();
  ASSERT_TRUE(first5);
  EXPECT_EQ(first5->x, 211);
  EXPECT_EQ(first5->y, 202);
}

// Independent oracle: every x below 2^sigma_n that solves the congruence.
TEST(Solve, UniqueAgainstExhaustiveScan) {
  for (std::uint32_t n = 4; n <= 6; ++n) {
    const std::uint64_t sigma = cs::sigma_n(n), mod = std::uint64_t{1} << sigma;
    std::uint64_t p3 = 1;
    for (std::uint32_t i = 0; i < n; ++i) p3 *= 3;
    for (const auto& r : all_solutions(n)) {
      std::uint64_t S = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t t = std::uint64_t{1} << r.alphas[i];
        for (std::uint32_t e = 0; e < n - 1 - i; ++e) t *= 3;
        S += t;
      }
      std::vector<std::uint64_t> found;
      for (std::uint64_t x = 1; x < mod; ++x)
        if ((p3 * x + S) % mod == 0) found.push_back(x);
      ASSERT_EQ(found.size(), 1u) << r.tuple.bits.to_string();
      EXPECT_EQ(r.x, found[0]);
      EXPECT_EQ(r.y, (p3 * found[0] + S) / mod);
    }
  }
}

TEST(Solve, TupleIsTheParityPrefixOfX) {
  for (std::uint32_t n = 4; n <= 8; ++n)
    for (const auto& r : all_solutions(n))
      EXPECT_EQ(cs::parity_word(r.x, cs::m_of(n) + n), r.tuple.bits) << n << " x=" << r.x;
}

TEST(Solve, YIsTermFormulaAndTrajectoryValue) {
  for (std::uint32_t n = 4; n <= 8; ++n)
    for (const auto& r : all_solutions(n)) {
      EXPECT_EQ(cs::term_formula_value(r.x, n, r.alphas), r.y);
      EXPECT_EQ(cs::trajectory(r.x, cs::sigma_n(n)).terms.back(), r.y);
      EXPECT_LT(r.y, r.x);
      EXPECT_GE(r.sigma_x, 4u);
      EXPECT_LE(r.sigma_x, cs::sigma_n(n));
    }
}

TEST(Solve, DistinctXPerN) {
  for (std::uint32_t n = 4; n <= 10; ++n) {
    std::set<BigInt> xs;
    for (const auto& r : all_solutions(n)) xs.insert(r.x);
    EXPECT_EQ(xs.size(), cs::j_of_u64(n)) << n;
  }
}

TEST(Classify, DistributionTable) {
  // Columns n = 4..12; rows sigma = 4,5,7,8,10,12,13,15,16,18,20.
  const std::uint64_t sigmas[] = {4, 5, 7, 8, 10, 12, 13, 15, 16, 18, 20};
  const int table[11][9] = {
      {0, 1, 1, 6, 28, 36, 165, 715, 1001},  {0, 2, 2, 10, 42, 56, 240, 990, 1430},
      {3, 0, 0, 3, 15, 18, 84, 360, 495},    {-1, 7, 0, 7, 28, 35, 147, 588, 840},
      {-1, -1, 12, 0, 12, 12, 60, 252, 336}, {-1, -1, -1, 30, 0, 0, 30, 150, 180},
      {-1, -1, -1, -1, 85, 0, 85, 340, 425}, {-1, -1, -1, -1, -1, 173, 0, 173, 173},
      {-1, -1, -1, -1, -1, -1, 476, 476, 476}, {-1, -1, -1, -1, -1, -1, -1, 961, 0},
      {-1, -1, -1, -1, -1, -1, -1, -1, 2652}};
  const int sums[] = {3, 10, 15, 56, 210, 330, 1287, 5005, 8008};
  for (std::uint32_t n = 4; n <= 12; ++n) {
    auto row = cs::classify(n);
    EXPECT_EQ(row.total, sums[n - 4]);
    for (int s = 0; s < 11; ++s) {
      int want = table[s][n - 4];
      if (want < 0) {
        EXPECT_EQ(row.counts.count(sigmas[s]), 0u) << n << " " << sigmas[s];
      } else {
        EXPECT_EQ(row.at(sigmas[s]), want) << n << " " << sigmas[s];
        EXPECT_EQ(row.counts.count(sigmas[s]), 1u) << "explicit zero expected";
      }
    }
  }
}

TEST(Classify, CountsAreMultiplesOfZ) {
  for (std::uint32_t n = 4; n <= 12; ++n) {
    auto row = cs::classify(n);
    for (std::uint32_t k = 2; k < n; ++k) EXPECT_EQ(row.at(cs::sigma_n(k)) % seed_z(k), 0) << n << " " << k;
    EXPECT_EQ(row.at(cs::sigma_n(n)), seed_z(n));
  }
}

TEST(Classify, ThreadCountDoesNotChangeResults) {
  auto one = cs::solutions(9, std::nullopt, {1, 100'000'000});
  auto four = cs::solutions(9, std::nullopt, {4, 100'000'000});
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    EXPECT_EQ(one[k].x, four[k].x);
    EXPECT_EQ(one[k].tuple, four[k].tuple);
  }
  auto a = cs::classify(10, {1, 100'000'000}), b = cs::classify(10, {3, 100'000'000});
  EXPECT_EQ(a.counts, b.counts);
}

TEST(Classify, BudgetIsEnforced) {
  EXPECT_THROW(cs::classify(5, {1, 9}), cs::BudgetExceeded);
  EXPECT_NO_THROW(cs::classify(5, {1, 10}));
}

TEST(Residues, ListedClasses) {
  auto r4 = cs::residue_classes(4);
  EXPECT_EQ(r4.modulus, 128);
  EXPECT_EQ(r4.members, (std::vector<BigInt>{7, 15, 59}));
  auto r5 = cs::residue_classes(5);
  EXPECT_EQ(r5.modulus, 256);
  EXPECT_EQ(r5.members, (std::vector<BigInt>{39, 79, 95, 123, 175, 199, 219}));
  auto r6 = cs::residue_classes(6);
  EXPECT_EQ(r6.members.size(), 12u);
  EXPECT_EQ(r6.members.front(), 287);
}

TEST(Residues, EnumeratedCountsMatchInitialValues) {
  for (std::uint32_t n = 4; n <= 12; ++n) EXPECT_EQ(cs::zn_by_enumeration(n), seed_z(n)) << n;
}

TEST(Residues, GrowthMoreThanDoubles) {
  for (std::uint32_t n = 7; n <= 12; ++n)
    EXPECT_GT(cs::zn_by_enumeration(n), 2 * cs::zn_by_enumeration(n - 1)) << n;
}

TEST(Residues, EveryRepresentativeHasTheStoppingTime) {
  std::mt19937_64 rng(7);
  for (std::uint32_t n = 4; n <= 8; ++n) {
    auto set = cs::residue_classes(n);
    const auto sigma = cs::sigma_n(n);
    for (const auto& x : set.members)
      for (int k = 0; k < 100; ++k) {
        BigInt s = x + set.modulus * cs::from_u64(rng() >> 24);
        ASSERT_EQ(cs::stopping_time(s, 10 * sigma).sigma, sigma) << s;
      }
  }
}
