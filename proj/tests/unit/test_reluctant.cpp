#include <gtest/gtest.h>

#include <random>

#include "irregular/errors.hpp"
#include "irregular/reluctant.hpp"

using namespace irregular;

namespace {

ReluctantSequence make(PartitionSpec beta, i64 q, bool reversed = false) {
  return ReluctantSequence({sequences::naturals(), std::move(beta), q, reversed});
}

std::vector<i64> repeat(const std::vector<i64> &v, int times) {
  std::vector<i64> out;
  for (int k = 0; k < times; ++k)
    out.insert(out.end(), v.begin(), v.end());
  return out;
}

} // namespace

TEST(Omega, Examples) {
  EXPECT_EQ(make(PartitionSpec(Constant{2}), 3).term(10), 4);
  EXPECT_EQ(make(PartitionSpec(Constant{2}), 3, true).term(1), 2);
  EXPECT_EQ(make(PartitionSpec(Constant{1}), 1).term(5), 2);
}

TEST(Omega, RegularReluctantFormulas) {
  // beta all ones, q = 1: m = n - t(t+1)/2 and m' = (t^2+3t+4)/2 - n
  const auto plain = make(PartitionSpec(Constant{1}), 1);
  const auto rev = make(PartitionSpec(Constant{1}), 1, true);
  for (i64 n = 1; n <= 10000; ++n) {
    const i64 t = (isqrt(8 * n - 7) - 1) / 2;
    ASSERT_EQ(plain.term(n), n - t * (t + 1) / 2);
    ASSERT_EQ(rev.term(n), (t * t + 3 * t + 4) / 2 - n);
  }
}

TEST(ZetaLocate, Examples) {
  const auto c = make(PartitionSpec(Constant{2}), 3).locate(7);
  EXPECT_EQ(c.position.block, 2);
  EXPECT_EQ(c.position.offset, 1);
  ASSERT_TRUE(c.closed);
  EXPECT_EQ(c.closed->block, 2);

  const auto l = make(PartitionSpec(Linear{2, 0}), 3).locate(6);
  EXPECT_EQ(l.position.block, 1);
  EXPECT_EQ(l.position.offset, 6);
  ASSERT_TRUE(l.closed);

  const auto g = make(PartitionSpec(Powers{2}), 3).locate(19);
  EXPECT_EQ(g.position.block, 3);
  EXPECT_EQ(g.position.offset, 1);
  ASSERT_TRUE(g.closed);
  EXPECT_EQ(g.closed->block, 3);
}

TEST(ZetaLocate, ClosedFormsAgreeWithOracle) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<i64> small(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    const i64 p = small(rng), q = small(rng);
    for (const auto &beta : {PartitionSpec(Constant{p}), PartitionSpec(Linear{p, 0}),
                             PartitionSpec(Powers{p + 1})}) {
      const auto seq = make(beta, q);
      for (i64 n = 1; n <= 3000; ++n) {
        const auto loc = seq.locate(n);
        ASSERT_TRUE(loc.closed);
        ASSERT_EQ(loc.closed->block, loc.position.block);
      }
      std::uniform_int_distribution<i64> big(1, 1'000'000'000'000);
      for (int k = 0; k < 200; ++k) {
        const auto loc = seq.locate(big(rng));
        ASSERT_EQ(loc.closed->block, loc.position.block);
      }
    }
  }
}

TEST(ZetaTable, PartialSums) {
  const ZetaTable z(PartitionSpec(Constant{2}), 3);
  EXPECT_EQ(z.partial_sum(0), 0);
  EXPECT_EQ(z.row_length(1), 6);
  EXPECT_EQ(z.partial_sum(2), 18);
  for (i64 s = 1; s <= 100; ++s)
    ASSERT_EQ(z.partial_sum(s), z.partial_sum(s - 1) + z.row_length(s));
  EXPECT_FALSE(ZetaTable(PartitionSpec(Quadratic{1, 0, 0}), 2).closed_partial_sum(3));
  EXPECT_THROW(ZetaTable(PartitionSpec(Constant{1}), 0), DomainError);
}

TEST(Row, Examples) {
  EXPECT_EQ(make(PartitionSpec(Constant{2}), 3).row(1),
            (std::vector<i64>{1, 2, 1, 2, 1, 2}));
  EXPECT_EQ(make(PartitionSpec(Linear{2, 0}), 3, true).row(2),
            repeat({6, 5, 4, 3, 2, 1}, 3));
  EXPECT_EQ(make(PartitionSpec(Powers{2}), 3).row(2), repeat({1, 2, 3, 4}, 3));
  EXPECT_THROW(make(PartitionSpec(Geometric{10}), 2).row(9, 1000), ResourceError);
}

TEST(Row, ConcatenatedRowsEqualTermStream) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> small(1, 5);
  for (int trial = 0; trial < 6; ++trial) {
    const i64 p = small(rng), q = small(rng);
    for (bool reversed : {false, true}) {
      for (const auto &beta : {PartitionSpec(Constant{p}), PartitionSpec(Linear{p, 0}),
                               PartitionSpec(Powers{p + 1})}) {
        const auto seq = make(beta, q, reversed);
        std::vector<i64> stream;
        for (i64 k = 1; static_cast<i64>(stream.size()) < 10000; ++k) {
          const auto r = seq.row(k);
          stream.insert(stream.end(), r.begin(), r.end());
        }
        for (i64 n = 1; n <= 10000; ++n)
          ASSERT_EQ(seq.term(n), stream[static_cast<std::size_t>(n - 1)]);
      }
    }
  }
}

TEST(Omega, MirrorWithinOneCopy) {
  for (i64 q : {1, 2, 3}) {
    const auto plain = make(PartitionSpec(Linear{2, 1}), q);
    const auto rev = make(PartitionSpec(Linear{2, 1}), q, true);
    int checked = 0;
    for (i64 n = 1; n <= 20000; ++n) {
      const auto pos = plain.zeta().locate(n);
      const i64 b = plain.zeta().beta().partial_sum(pos.block);
      if ((pos.offset - 1) % b + (pos.offset_from_right - 1) % b != b - 1)
        continue;
      ++checked;
      ASSERT_EQ(plain.source_index(n) + rev.source_index(n), b + 1);
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(Omega, CustomSourcesAndErrors) {
  const ReluctantSequence squares({[](i64 k) { return k * k; },
                                   PartitionSpec(Constant{1}), 1, false});
  EXPECT_EQ(squares.term(6), 9);
  const ReluctantSequence listed({sequences::from_list({5, 7}),
                                  PartitionSpec(Constant{1}), 1, false});
  EXPECT_EQ(listed.term(3), 7);
  EXPECT_THROW(listed.term(6), DomainError);
  EXPECT_EQ(ReluctantSequence({sequences::constant(4), PartitionSpec(Constant{2}), 2,
                               false}).term(11),
            4);
  EXPECT_THROW(ReluctantSequence({{}, PartitionSpec(Constant{1}), 1, false}), DomainError);
}

TEST(Omega, NamedAnchors) {
  // beta = 1, 3, 5, ...: rows 1..k^2
  const auto seq = make(PartitionSpec(Linear{2, -1}), 1);
  EXPECT_EQ(seq.row(3), (std::vector<i64>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
  // beta all ones, q = 2: 1,1, 1,2,1,2, 1,2,3,1,2,3
  const auto twice = make(PartitionSpec(Constant{1}), 2);
  std::vector<i64> got;
  for (i64 n = 1; n <= 12; ++n)
    got.push_back(twice.term(n));
  EXPECT_EQ(got, (std::vector<i64>{1, 1, 1, 2, 1, 2, 1, 2, 3, 1, 2, 3}));
}
