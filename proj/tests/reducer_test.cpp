#include <gtest/gtest.h>

#include <random>

#include "permeq/errors.hpp"
#include "permeq/notation.hpp"
#include "permeq/reducer.hpp"
#include "test_support.hpp"

using namespace permeq;
using namespace permeq::testing;

namespace {

Perm P(const char* text, std::size_t n) { return parse_cycles(text, n); }

// alpha y beta = y^k evaluated by table composition
bool naive_reduced(const Perm& alpha, const Perm& beta, const Perm& y, int k) {
  return naive_compose(naive_compose(alpha, y), beta) == naive_power(y, k);
}

bool naive_cubic(const CubicEquation& eq, const Perm& x) {
  auto xp = [&](int r) { return r == 1 ? x : naive_inverse(x); };
  Perm lhs = naive_compose(eq.alpha1, xp(eq.r1));
  lhs = naive_compose(lhs, eq.alpha2);
  lhs = naive_compose(lhs, xp(eq.r2));
  lhs = naive_compose(lhs, eq.alpha3);
  lhs = naive_compose(lhs, xp(eq.r3));
  return lhs.is_identity();
}

}  // namespace

TEST(Reducer, Validate) {
  CubicEquation eq{Perm(3), Perm(3), Perm(4), 1, 1, 1};
  EXPECT_THROW(eq.validate(), DegreeMismatch);
  CubicEquation bad{Perm(3), Perm(3), Perm(3), 1, 2, 1};
  EXPECT_THROW(bad.validate(), PreconditionFailed);
}

TEST(Reducer, NormalizeExamples) {
  const Perm a = P("(1 2)", 3), b = P("(2 3)", 3), c = P("(1 2 3)", 3);
  CubicEquation plain{a, b, c, 1, -1, 1};
  const CubicEquation same = normalize(plain);
  EXPECT_EQ(same.r2, -1);
  EXPECT_EQ(same.alpha3, c);

  CubicEquation eq{a, b, c, -1, -1, 1};
  const CubicEquation n = normalize(eq);
  EXPECT_EQ(n.r1, 1);
  EXPECT_EQ(n.r2, 1);
  EXPECT_EQ(n.r3, -1);
  EXPECT_EQ(n.alpha1, a);
  for (const Perm& x : all_perms(3))
    ASSERT_EQ(eq.is_solved_by(x), n.is_solved_by(x.inverse()));
  EXPECT_THROW(reduce(eq), PreconditionFailed);
}

TEST(Reducer, CaseFormulas) {
  const Perm a1 = P("(1 2 3)", 4), a2 = P("(1 4)", 4), a3 = P("(2 3 4)", 4);
  const Perm i1 = naive_inverse(a1), i2 = naive_inverse(a2), i3 = naive_inverse(a3);

  const ReducedForm s1 = reduce({a1, a2, a3, 1, 1, -1});
  EXPECT_EQ(s1.case_tag, ReductionCase::Star1);
  EXPECT_EQ(s1.exponent, 2);
  EXPECT_EQ(s1.alpha, i1);
  EXPECT_EQ(s1.beta, naive_compose(naive_compose(i2, i3), a2));

  const ReducedForm s2 = reduce({a1, a2, a3, 1, -1, 1});
  EXPECT_EQ(s2.case_tag, ReductionCase::Star2);
  EXPECT_EQ(s2.alpha, a2);
  EXPECT_EQ(s2.beta, naive_compose(naive_compose(a1, a3), i1));

  const ReducedForm s3 = reduce({a1, a2, a3, 1, -1, -1});
  EXPECT_EQ(s3.case_tag, ReductionCase::Star3);
  EXPECT_EQ(s3.alpha, a1);
  EXPECT_EQ(s3.beta, naive_compose(naive_compose(a3, a2), i3));

  const ReducedForm s4 = reduce({a1, a2, a3, 1, 1, 1});
  EXPECT_EQ(s4.case_tag, ReductionCase::Star4);
  EXPECT_EQ(s4.exponent, -2);
  EXPECT_EQ(s4.alpha, naive_compose(a1, i3));
  EXPECT_EQ(s4.beta, naive_compose(a2, i3));
  const Perm x = P("(1 3)(2 4)", 4);
  EXPECT_EQ(s4.forward.apply(x), naive_compose(a3, x));

  EXPECT_EQ(to_string(ReductionCase::Star3), "*3");
}

TEST(Reducer, IdentityConstants) {
  const ReducedForm rf = reduce({Perm(3), Perm(3), Perm(3), 1, 1, -1});
  EXPECT_TRUE(rf.alpha.is_identity());
  EXPECT_TRUE(rf.beta.is_identity());
  EXPECT_TRUE(rf.reducible_to_power_conjugate());
  for (const Perm& x : all_perms(3)) {
    EXPECT_EQ(rf.forward.apply(x), x);
    EXPECT_EQ(recover_x(rf, x), x);
    ASSERT_EQ(rf.is_solved_by(x), x == naive_compose(x, x));
  }
}

TEST(Reducer, RecoverTrivialCases) {
  const Perm a = P("(1 2 3)", 3), b = P("(1 2)", 3);
  const ReducedForm s1 = reduce({a, Perm(3), b, 1, 1, -1});
  const ReducedForm s4 = reduce({a, b, Perm(3), 1, 1, 1});
  for (const Perm& y : all_perms(3)) {
    ASSERT_EQ(recover_x(s1, y), y);
    ASSERT_EQ(recover_x(s4, y), y);
  }
}

TEST(Reducer, SoundnessExhaustiveAtDegree4) {
  std::mt19937_64 rng(2024);
  const auto s4 = all_perms(4);
  const int patterns[4][2] = {{1, -1}, {-1, 1}, {-1, -1}, {1, 1}};
  for (const auto& pat : patterns) {
    for (int trial = 0; trial < 20; ++trial) {
      const CubicEquation eq{random_perm(4, rng), random_perm(4, rng),
                             random_perm(4, rng), 1, pat[0], pat[1]};
      const ReducedForm rf = reduce(eq);
      ASSERT_EQ(rf.reducible_to_power_conjugate(),
                naive_reduced(rf.alpha, rf.beta, Perm(4), rf.exponent));
      for (const Perm& x : s4) {
        const Perm y = rf.forward.apply(x);
        ASSERT_EQ(naive_cubic(eq, x), naive_reduced(rf.alpha, rf.beta, y, rf.exponent));
        ASSERT_EQ(eq.is_solved_by(x), naive_cubic(eq, x));
        ASSERT_EQ(recover_x(rf, y), x);
        ASSERT_EQ(rf.backward.apply(y), x);
      }
    }
  }
}

TEST(Reducer, SquareRootExamples) {
  EXPECT_EQ(solve_square_root(Perm(4)), Perm(4));
  const auto z3 = solve_square_root(P("(1 2 3)", 3));
  ASSERT_TRUE(z3);
  EXPECT_EQ(*z3, P("(1 3 2)", 3));
  EXPECT_FALSE(solve_square_root(P("(1 2)", 2)));
  const auto z4 = solve_square_root(P("(1 2)(3 4)", 4));
  ASSERT_TRUE(z4);
  EXPECT_EQ(*z4, P("(1 3 2 4)", 4));
  EXPECT_EQ(naive_compose(*z4, *z4), P("(1 2)(3 4)", 4));
}

TEST(Reducer, SquareRootAgreesWithSearch) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto sn = all_perms(n);
    std::set<Perm> squares;
    for (const Perm& z : sn)
      squares.insert(naive_compose(z, z));
    for (const Perm& s : sn) {
      const auto z = solve_square_root(s);
      ASSERT_EQ(z.has_value(), squares.count(s) == 1) << format_cycles(s);
      if (z)
        ASSERT_EQ(naive_compose(*z, *z), s);
    }
  }
}

TEST(Reducer, Quadratics) {
  const Perm a2 = P("(1 2)", 3);
  auto x0 = solve_conjugacy_quadratic(naive_inverse(a2), a2);
  ASSERT_TRUE(x0);
  auto x = solve_conjugacy_quadratic(naive_inverse(P("(2 3)", 3)), a2);
  ASSERT_TRUE(x);
  EXPECT_EQ(naive_compose(naive_compose(*x, a2), naive_inverse(*x)), P("(2 3)", 3));
  EXPECT_FALSE(solve_conjugacy_quadratic(naive_inverse(P("(1 2 3)", 3)), a2));

  for (const Perm& a : all_perms(3))
    for (const Perm& b : all_perms(3)) {
      auto s = solve_square_quadratic(a, b);
      bool exists = false;
      for (const Perm& c : all_perms(3))
        exists = exists || naive_compose(naive_compose(naive_compose(a, c), b), c).is_identity();
      ASSERT_EQ(s.has_value(), exists);
      if (s)
        ASSERT_TRUE(naive_compose(naive_compose(naive_compose(a, *s), b), *s).is_identity());
    }
}
