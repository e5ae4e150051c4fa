#include <random>

#include <gtest/gtest.h>

#include <collatz_sigma/tuples.hpp>

#include "test_support.hpp"

namespace cs = collatz_sigma;
using cs::BigInt;
using cs::ParityWord;

namespace {

std::vector<cs::BTuple> all_tuples(std::uint32_t n, std::optional<cs::IndexRange> r = std::nullopt) {
  std::vector<cs::BTuple> out;
  cs::tuple_stream(n, r).for_each([&](const cs::BTuple& b) { out.push_back(b); });
  return out;
}

}  // namespace

TEST(Sizes, MAndJ) {
  EXPECT_EQ(cs::m_of(4), 1u);
  EXPECT_EQ(cs::m_of(7), 3u);
  EXPECT_EQ(cs::m_of(13), 7u);
  EXPECT_EQ(cs::j_of(4), 3);
  EXPECT_EQ(cs::j_of(5), 10);
  EXPECT_EQ(cs::j_of(7), 56);
  EXPECT_EQ(cs::j_of(12), 8008);
  EXPECT_EQ(cs::j_of(19), 21474180);
  EXPECT_THROW(cs::j_of(3), cs::InvalidArgument);
  EXPECT_THROW(cs::m_of(1), cs::InvalidArgument);
}

TEST(InitialTuple, ZerosThenOnes) {
  EXPECT_EQ(cs::initial_a_tuple(7).bits, (ParityWord{0, 0, 0, 1, 1, 1, 1, 1}));
  EXPECT_EQ(cs::initial_a_tuple(4).bits, (ParityWord{0, 1, 1}));
  EXPECT_EQ(cs::initial_a_tuple(5).bits, (ParityWord{0, 0, 1, 1, 1}));
}

TEST(NextPermutation, LexicographicSuccessor) {
  auto a = cs::next_permutation(cs::initial_a_tuple(7));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->bits, (ParityWord{0, 0, 1, 0, 1, 1, 1, 1}));
  EXPECT_EQ(cs::next_permutation(ParityWord{0, 1}), (ParityWord{1, 0}));
  EXPECT_FALSE(cs::next_permutation(ParityWord{1, 1, 0}));
}

TEST(BTuple, PrefixesOneOne) {
  auto b = cs::b_from_a(cs::initial_a_tuple(4));
  EXPECT_EQ(b.bits, (ParityWord{1, 1, 0, 1, 1}));
  EXPECT_EQ(cs::alpha_vector(b).entries, (std::vector<std::uint32_t>{0, 1, 3, 4}));
}

TEST(AlphaVector, PositionsOfOnes) {
  cs::BTuple b{4, ParityWord{1, 1, 1, 0, 1}};
  EXPECT_EQ(cs::alpha_vector(b).entries, (std::vector<std::uint32_t>{0, 1, 2, 4}));
  cs::BTuple bad{4, ParityWord{1, 1, 0, 0, 1}};
  EXPECT_THROW(cs::alpha_vector(bad), cs::InvalidArgument);
}

TEST(Unrank, EndsAndBounds) {
  EXPECT_EQ(cs::unrank_a_tuple(7, std::uint64_t{0}), cs::initial_a_tuple(7));
  EXPECT_EQ(cs::unrank_a_tuple(7, std::uint64_t{55}).bits, (ParityWord{1, 1, 1, 1, 1, 0, 0, 0}));
  EXPECT_THROW(cs::unrank_a_tuple(7, std::uint64_t{56}), cs::IndexOutOfRange);
  EXPECT_THROW(cs::unrank_a_tuple(7, BigInt(-1)), cs::IndexOutOfRange);
}

TEST(Unrank, AgreesWithSuccessorChain) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uint32_t n = 4 + rng() % 12;
    std::uint64_t j = cs::j_of_u64(n);
    std::uint64_t i = rng() % (j - 1);
    auto a = cs::unrank_a_tuple(n, i);
    ASSERT_TRUE(cs::is_valid_a_tuple(a));
    auto succ = cs::next_permutation(a);
    ASSERT_TRUE(succ);
    ASSERT_EQ(*succ, cs::unrank_a_tuple(n, i + 1)) << n << " " << i;
    ASSERT_EQ(cs::unrank_a_tuple(n, BigInt(std::to_string(i))), a);
  }
}

TEST(Stream, MatchesListedTuplesForSeven) {
  auto a_rows = cs::testing::fixture_lines("a_tuples_7.txt");
  auto b_rows = cs::testing::fixture_lines("b_tuples_7.txt");
  auto tuples = all_tuples(7);
  ASSERT_EQ(tuples.size(), 56u);
  ASSERT_EQ(a_rows.size(), 56u);
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    EXPECT_EQ(tuples[k].bits.compact(), b_rows[k]) << k;
    EXPECT_EQ(tuples[k].bits.compact().substr(2), a_rows[k]) << k;
  }
  EXPECT_EQ(tuples[27].bits.compact(), "1110101011");
  EXPECT_EQ(tuples[28].bits.compact(), "1110101101");
}

TEST(Stream, LengthIsJAndOrderIsStrict) {
  for (std::uint32_t n = 4; n <= 12; ++n) {
    auto tuples = all_tuples(n);
    ASSERT_EQ(tuples.size(), cs::j_of_u64(n)) << n;
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      const auto& w = tuples[k].bits;
      ASSERT_EQ(w.size(), cs::m_of(n) + n);
      ASSERT_EQ(w.count_ones(), n);
      ASSERT_TRUE(w[0] == 1 && w[1] == 1);
      if (k) ASSERT_LT(tuples[k - 1].bits, w);
    }
  }
}

TEST(Stream, RangesConcatenateToWhole) {
  auto whole = all_tuples(9);
  for (std::size_t parts : {1, 2, 3, 7, 330, 1000}) {
    std::vector<cs::BTuple> joined;
    for (auto r : cs::partition_range({0, whole.size()}, parts)) {
      auto piece = all_tuples(9, r);
      joined.insert(joined.end(), piece.begin(), piece.end());
    }
    EXPECT_EQ(joined, whole) << parts;
  }
}

TEST(Stream, PositionAndBadRanges) {
  auto s = cs::tuple_stream(7, cs::IndexRange{10, 12});
  EXPECT_EQ(s.position(), 10u);
  s.next();
  EXPECT_EQ(s.position(), 11u);
  s.next();
  EXPECT_FALSE(s.next());
  EXPECT_TRUE(all_tuples(7, cs::IndexRange{5, 5}).empty());
  EXPECT_THROW(cs::tuple_stream(7, cs::IndexRange{0, 57}), cs::IndexOutOfRange);
  EXPECT_THROW(cs::tuple_stream(7, cs::IndexRange{9, 3}), cs::IndexOutOfRange);
  EXPECT_THROW(cs::tuple_stream(3), cs::InvalidArgument);
}

TEST(PartitionRange, CoversContiguously) {
  for (std::uint64_t total : {0, 1, 5, 56, 1001})
    for (std::size_t parts : {1, 2, 4, 9, 64}) {
      auto ps = cs::partition_range({3, 3 + total}, parts);
      std::uint64_t at = 3, covered = 0;
      for (auto r : ps) {
        EXPECT_EQ(r.lo, at);
        EXPECT_GT(r.size(), 0u);
        at = r.hi;
        covered += r.size();
      }
      EXPECT_EQ(covered, total);
      EXPECT_LE(ps.size(), parts);
    }
}
