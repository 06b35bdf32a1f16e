#include <gtest/gtest.h>

#include "irregular/diagonals.hpp"
#include "irregular/errors.hpp"
#include "irregular/prefix_sums.hpp"

using namespace irregular;

TEST(IndexToPair, Examples) {
  EXPECT_EQ(index_to_pair(1), (DiagonalPair{1, 1, 0}));
  EXPECT_EQ(index_to_pair(5), (DiagonalPair{2, 2, 2}));
  EXPECT_EQ(index_to_pair(10), (DiagonalPair{4, 1, 3}));
  EXPECT_THROW(index_to_pair(0), DomainError);
}

TEST(PairToIndex, Examples) {
  EXPECT_EQ(pair_to_index(1, 1), 1);
  EXPECT_EQ(pair_to_index(2, 2), 5);
  EXPECT_EQ(pair_to_index(1, 4), 7);
  EXPECT_THROW(pair_to_index(0, 1), DomainError);
  EXPECT_THROW(pair_to_index(i64{1} << 40, i64{1} << 40), OverflowError);
}

TEST(Pairs, Bijection) {
  for (i64 n = 1; n <= 100000; ++n) {
    const DiagonalPair p = index_to_pair(n);
    ASSERT_EQ(p.i + p.j, p.t + 2);
    ASSERT_EQ(p.t, diagonal_of(n));
    ASSERT_EQ(pair_to_index(p.i, p.j), n);
  }
  for (i64 i = 1; i < 200; ++i)
    for (i64 j = 1; i + j <= 200; ++j)
      ASSERT_EQ(index_to_pair(pair_to_index(i, j)), (DiagonalPair{i, j, i + j - 2}));
}

TEST(Pairs, DiagonalAtLargeIndices) {
  const i64 t = 3'000'000'000;
  const i64 first = t * (t + 1) / 2 + 1;
  EXPECT_EQ(diagonal_of(first), t);
  EXPECT_EQ(diagonal_of(first - 1), t - 1);
}

TEST(MergedFirst, Examples) {
  EXPECT_EQ(locate_merged_first(2, 10).radical.block, 2);
  EXPECT_EQ(locate_merged_first(3, 6).radical.block, 1);
  EXPECT_EQ(locate_merged_first(1, 4).radical.block, 3);
  EXPECT_THROW(locate_merged_first(0, 4), DomainError);
}

TEST(MergedSecond, Examples) {
  EXPECT_EQ(locate_merged_second(3, 1).radical.block, 1);
  EXPECT_EQ(locate_merged_second(3, 10).radical.block, 2);
  EXPECT_EQ(locate_merged_second(3, 28).radical.block, 3);
  EXPECT_THROW(locate_merged_second(1, 4), DomainError);
}

TEST(Merged, BothFormsMatchOracle) {
  for (i64 d = 1; d <= 10; ++d) {
    const PartialSumTable first(PartitionSpec(MergedDiagonals{d, true}));
    std::optional<PartialSumTable> second;
    if (d >= 2)
      second.emplace(PartitionSpec(MergedDiagonals{d, false}));
    for (i64 n = 1; n <= 100000; ++n) {
      const auto f = locate_merged_first(d, n);
      const i64 want = first.locate(n).block;
      ASSERT_EQ(f.radical.block, want) << "d=" << d << " n=" << n;
      ASSERT_EQ(f.via_diagonal, want) << "d=" << d << " n=" << n;
      if (second) {
        const auto s = locate_merged_second(d, n);
        const i64 want2 = second->locate(n).block;
        ASSERT_EQ(s.radical.block, want2) << "d=" << d << " n=" << n;
        ASSERT_EQ(s.via_diagonal, want2) << "d=" << d << " n=" << n;
      }
    }
  }
}

TEST(Merged, RegularArrayRegression) {
  // d = 1 is n appearing n times
  i64 n = 1;
  for (i64 k = 1; k <= 300; ++k)
    for (i64 r = 0; r < k; ++r, ++n)
      ASSERT_EQ(locate_merged_first(1, n).radical.block, k);
}
