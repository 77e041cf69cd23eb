#include <gtest/gtest.h>

#include "permeq/errors.hpp"
#include "permeq/notation.hpp"
#include "permeq/ranges.hpp"
#include "test_support.hpp"

using namespace permeq;
using namespace permeq::testing;

namespace {

std::vector<std::size_t> members(const CycleType& t, std::size_t d) {
  return d_range(t, d).members();
}

using V = std::vector<std::size_t>;

}  // namespace

TEST(Ranges, Examples) {
  EXPECT_EQ(members(type_of(Perm::standard_cycle(7)), 1), (V{0, 7}));
  EXPECT_EQ(members(type_of(parse_cycles("(1 2)(3 4 5)", 5)), 1), (V{0, 2, 3, 5}));
  EXPECT_EQ(members(type_of(Perm(3)), 1), (V{0, 1, 2, 3}));
  EXPECT_EQ(members(CycleType({0, 2, 0, 1, 0, 0, 0, 0}), 2), (V{0, 2, 4, 6, 8}));
  EXPECT_EQ(members(CycleType({0, 2, 0, 1, 0, 0, 0, 0}), 4), (V{0, 4}));
  EXPECT_EQ(members(CycleType({0, 2, 0, 1, 0, 0, 0, 0}), 3), (V{0}));
}

TEST(Ranges, Contains) {
  const DRange six = d_range(type_of(Perm::standard_cycle(6)), 1);
  EXPECT_FALSE(contains(six, 3));
  EXPECT_TRUE(contains(six, 0));
  EXPECT_FALSE(contains(six, -6));
  EXPECT_TRUE(contains(d_range(type_of(parse_cycles("(1 2)(3 4 5)", 5)), 1), 5));
}

TEST(Ranges, RejectsBadD) {
  EXPECT_THROW(d_range(type_of(Perm(3)), 0), PreconditionFailed);
  EXPECT_THROW(d_range(type_of(Perm(3)), 4), PreconditionFailed);
}

TEST(Ranges, MatchesSelectorEnumerationForAllPartitionsUpTo8) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& parts : partitions(n)) {
      const CycleType t = type_of(perm_with_lengths(parts));
      for (std::size_t d = 1; d <= n; ++d) {
        std::vector<std::size_t> chosen;
        for (std::size_t len : parts)
          if (len % d == 0)
            chosen.push_back(len);
        const auto sums = naive_subset_sums(chosen);
        const DRange dr = d_range(t, d);
        ASSERT_EQ(dr.members(), V(sums.begin(), sums.end())) << "n=" << n << " d=" << d;
        for (std::size_t m : dr.members())
          ASSERT_EQ(m % d, 0u);
      }
    }
}

TEST(Ranges, DivisorContainmentOnS5Types) {
  for (const auto& parts : partitions(5)) {
    const CycleType t = type_of(perm_with_lengths(parts));
    for (std::size_t d1 = 1; d1 <= 5; ++d1)
      for (std::size_t d2 = d1; d2 <= 5; d2 += d1)
        for (std::size_t m : d_range(t, d2).members())
          ASSERT_TRUE(d_range(t, d1).contains(static_cast<long long>(m)));
  }
}

TEST(Ranges, InvariantSubsetsHaveSizesInRange) {
  for (const Perm& a : all_perms(5)) {
    const CycleType t = type_of(a);
    for (unsigned mask = 1; mask < 32; ++mask) {
      std::vector<Point> h;
      for (Point i = 1; i <= 5; ++i)
        if (mask >> (i - 1) & 1)
          h.push_back(i);
      bool invariant = true;
      for (Point i : h)
        if (!(mask >> (a(i) - 1) & 1))
          invariant = false;
      if (!invariant)
        continue;
      ASSERT_TRUE(d_range(t, 1).contains(static_cast<long long>(h.size())));
      const auto lengths = naive_cycle_lengths(restrict(a, h));
      for (std::size_t d = 2; d <= 5; ++d) {
        bool all = true;
        for (std::size_t len : lengths)
          if (len % d != 0)
            all = false;
        if (all)
          ASSERT_TRUE(d_range(t, d).contains(static_cast<long long>(h.size())));
      }
    }
  }
}
