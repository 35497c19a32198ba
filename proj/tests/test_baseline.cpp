#include <gtest/gtest.h>

#include "support.hpp"

using namespace mlink;
using mlink::testing::I64;

namespace {

std::uint64_t binomial(Index n, Index k) {
  std::uint64_t r = 1;
  for (Index i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TEST(DpFull, ConvexSquare) {
  const auto o = gen_convex_square<I64>(6);
  const DpTable<I64> t = dp_full(o, 3);
  EXPECT_EQ(t.value(3, 6), 9);
  const LinkPath<I64> p = t.path(3, 6);
  EXPECT_EQ(p.length, 9);
  EXPECT_EQ(path_length(o, std::span<const Index>(p.nodes)), 9);
  EXPECT_EQ(p.front(), 1);
  EXPECT_EQ(p.back(), 6);
}

TEST(DpFull, LinearTelescopes) {
  for (Index n : {Index{5}, Index{17}}) {
    const auto o = gen_linear<I64>(n);
    const DpTable<I64> t = dp_full(o, n - 1);
    for (Index m = 1; m < n; ++m) EXPECT_EQ(t.value(m, n), n - 1);
  }
}

TEST(DpFull, TwoRowVariantAgrees) {
  const auto o = gen_random_monge<I64>(150, 4);
  const DpTable<I64> t = dp_full(o, 149);
  for (Index m = 1; m < 150; m += 3) {
    std::size_t peak = 0;
    EXPECT_EQ(dp_length(o, m, &peak), t.value(m, 150));
    EXPECT_LE(peak, 5u * 151u);
  }
}

TEST(DpFull, RejectsBudget) {
  const auto o = gen_linear<I64>(6);
  EXPECT_THROW(dp_full(o, 0), PreconditionError);
  EXPECT_THROW(dp_full(o, 6), PreconditionError);
  EXPECT_THROW(dp_length(o, 6), PreconditionError);
  EXPECT_THROW(dp_full(o, 3).value(4, 6), PreconditionError);
}

TEST(BruteForce, ConvexSquareTable) {
  const auto b = brute_force(gen_convex_square<I64>(6));
  const I64 want[] = {25, 13, 9, 7, 5};
  for (Index m = 1; m <= 5; ++m) EXPECT_EQ(b.f(m, 6), ExtendedCost<I64>(want[m - 1]));
  EXPECT_EQ(b.f(6, 6), ExtendedCost<I64>::pos_inf());
  EXPECT_EQ(b.delta(0, 6), ExtendedCost<I64>::neg_inf());
  EXPECT_EQ(b.delta(1, 6), ExtendedCost<I64>(-12));
  EXPECT_EQ(b.delta(2, 6), ExtendedCost<I64>(-4));
  EXPECT_EQ(b.delta(3, 6), ExtendedCost<I64>(-2));
  EXPECT_EQ(b.delta(4, 6), ExtendedCost<I64>(-2));
  EXPECT_EQ(b.delta(5, 6), ExtendedCost<I64>::pos_inf());
  EXPECT_EQ(b.dmin(-2, 6), 3);
  EXPECT_EQ(b.dmax(-2, 6), 5);
  const auto& two = b.optimal_paths(2, 6);
  EXPECT_EQ(two.size(), 2u);
}

TEST(BruteForce, FullPathIsUnique) {
  const auto b = brute_force(gen_random_monge<I64>(4, 2));
  ASSERT_EQ(b.optimal_paths(3, 4).size(), 1u);
  EXPECT_EQ(b.optimal_paths(3, 4).front(), (std::vector<Index>{1, 2, 3, 4}));
}

TEST(BruteForce, EnumeratesEveryPath) {
  const auto b = brute_force(gen_linear<I64>(12));
  for (Index m = 1; m <= 11; ++m) {
    EXPECT_EQ(b.path_count(m, 12), binomial(10, m - 1));
    EXPECT_EQ(b.optimal_paths(m, 12).size(), binomial(10, m - 1));
  }
}

TEST(BruteForce, AgreesWithDp) {
  for (Index n = 2; n <= 12; ++n) {
    for (const auto& inst : mlink::testing::small_instances(n, 10, 10)) {
      const auto b = brute_force(inst.cost);
      const DpTable<I64> t = dp_full(inst.cost, n - 1);
      for (Index m = 1; m < n; ++m)
        for (Index j = m + 1; j <= n; ++j) ASSERT_EQ(b.f(m, j), ExtendedCost<I64>(t.value(m, j))) << inst.name;
    }
  }
}

TEST(BruteForce, RejectsLargeInstances) {
  EXPECT_THROW(brute_force(gen_linear<I64>(15)), PreconditionError);
  EXPECT_NO_THROW(brute_force(gen_linear<I64>(14)));
}
