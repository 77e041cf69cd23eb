#include <gtest/gtest.h>

#include "permeq/errors.hpp"
#include "permeq/notation.hpp"
#include "test_support.hpp"

using namespace permeq;
using permeq::testing::all_perms;
using permeq::testing::table;

TEST(Notation, ParsesCycles) {
  EXPECT_EQ(parse_cycles("(1 2)(3 4 5)", 5), table({2, 1, 4, 5, 3}));
  EXPECT_EQ(parse_cycles("(1,2)(3,4,5)", 5), table({2, 1, 4, 5, 3}));
  EXPECT_EQ(parse_cycles("  ( 3 1 ) ", 4), table({3, 2, 1, 4}));
  EXPECT_TRUE(parse_cycles("()", 4).is_identity());
  EXPECT_TRUE(parse_cycles("id", 4).is_identity());
  EXPECT_THROW(parse_cycles("", 2), ParseError);
  EXPECT_TRUE(parse_cycles("(5)", 5).is_identity());
}

TEST(Notation, RejectsBadInputWithPosition) {
  try {
    parse_cycles("(1 2)(2 3)", 3);
    FAIL() << "duplicate point accepted";
  } catch (const ParseError& ex) {
    EXPECT_EQ(ex.line(), 1u);
    EXPECT_EQ(ex.column(), 7u);
  }
  try {
    parse_cycles("(1 2)\n(3 9)", 4);
    FAIL() << "out of range point accepted";
  } catch (const ParseError& ex) {
    EXPECT_EQ(ex.line(), 2u);
    EXPECT_EQ(ex.column(), 4u);
  }
  EXPECT_THROW(parse_cycles("(1 2", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 x)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(0 1)", 3), ParseError);
  EXPECT_THROW(parse_cycles("1 2", 3), ParseError);
}

TEST(Notation, LargestPoint) {
  EXPECT_EQ(largest_point("(1 2)(3 7)"), 7u);
  EXPECT_EQ(largest_point("()"), 0u);
}

TEST(Notation, FormatCanonical) {
  EXPECT_EQ(format_cycles(table({2, 1, 4, 5, 3})), "(1 2)(3 4 5)");
  EXPECT_EQ(format_cycles(parse_cycles("(5 3 4)", 6)), "(3 4 5)");
  EXPECT_EQ(format_cycles(parse_cycles("(5 3 4)", 6), true), "(1)(2)(3 4 5)(6)");
  EXPECT_EQ(format_cycles(Perm(3)), "()");
}

TEST(Notation, RoundTripOnS5) {
  for (const Perm& p : all_perms(5)) {
    ASSERT_EQ(parse_cycles(format_cycles(p), 5), p);
    ASSERT_EQ(parse_cycles(format_cycles(p, true), 5), p);
  }
}
