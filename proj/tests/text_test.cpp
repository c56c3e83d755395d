#include <gtest/gtest.h>

#include <random>

#include "cwf/text.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cwf {
namespace {

using testing::expect_error;
using testing::q;

TEST(TextTest, Rationals) {
  EXPECT_EQ(to_string(q(3, 2)), "3/2");
  EXPECT_EQ(to_string(q(-4)), "-4");
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(parse_rational("-7"), q(-7));
  expect_error(ErrorCode::ParseError, [] { parse_rational("1/"); });
  expect_error(ErrorCode::ParseError, [] { parse_rational("x"); });
  expect_error(ErrorCode::ParseError, [] { parse_rational("1/0"); });
}

TEST(TextTest, Forms) {
  EXPECT_EQ(to_string(LinearForm(1, 2)), "z+2");
  EXPECT_EQ(to_string(LinearForm(0, 3)), "3");
  EXPECT_EQ(to_string(LinearForm(2, 0)), "2*z");
  EXPECT_EQ(to_string(LinearForm(1, 0)), "z");
  EXPECT_EQ(parse_form("3*z+4"), LinearForm(3, 4));
  EXPECT_EQ(parse_form("z"), LinearForm(1, 0));
}

TEST(TextTest, Matrices) {
  EXPECT_EQ(to_string(Plft(17, 10, 5, 3)), "[17 10; 5 3]");
  EXPECT_EQ(parse_matrix("[17 10; 5 3]"), Plft(17, 10, 5, 3));
  EXPECT_EQ(parse_matrix("[ 1 0 ;0 1 ]"), Plft::identity());
  EXPECT_EQ(to_function_string(Plft(1, 0, 1, 1)), "(z)/(z+1)");
  EXPECT_EQ(to_label(Plft::identity()), "z");
  EXPECT_EQ(to_label(Plft(1, 0, 1, 1)), "z/(z+1)");
  EXPECT_EQ(to_label(Plft(1, 1, 0, 1)), "z+1");
  expect_error(ErrorCode::ParseError, [] { parse_matrix("[1 2 3 4]"); });
  expect_error(ErrorCode::ZeroDeterminant, [] { parse_matrix("[1 1; 1 1]"); });
  expect_error(ErrorCode::ParseError, [] { parse_matrix("[1 -1; 0 1]"); });
}

TEST(TextTest, ContinuedFractions) {
  const ContinuedFraction cf{{Integer(3), Integer(2), Integer(1), Integer(1)}, Plft::identity()};
  EXPECT_EQ(to_string(cf), "[3, 2, 1, 1; [1 0; 0 1]]");
  const ContinuedFraction back = parse_cf("[3, 2, 1, 1; [1 0; 0 1]]");
  EXPECT_EQ(back.quotients, cf.quotients);
  EXPECT_EQ(back.root, cf.root);
  const ContinuedFraction empty{{}, Plft(2, 0, 1, 1)};
  EXPECT_EQ(to_string(empty), "[; [2 0; 1 1]]");
  EXPECT_EQ(parse_cf("[; [2 0; 1 1]]").root, Plft(2, 0, 1, 1));
}

TEST(TextTest, WordsAndAddresses) {
  EXPECT_EQ(to_string(Word{}), "e");
  EXPECT_EQ(to_string(parse_word("LRR")), "LRR");
  EXPECT_TRUE(parse_word("e").empty());
  EXPECT_EQ(to_string(TreeAddress{3, 5}), "3:5");
  EXPECT_EQ(parse_address("10:1024"), (TreeAddress{10, 1024}));
  expect_error(ErrorCode::ParseError, [] { parse_word("LX"); });
  expect_error(ErrorCode::ParseError, [] { parse_address("3"); });
  EXPECT_EQ(to_string(ChildKind::LeftChild), "left");
  EXPECT_EQ(to_string(ChildKind::Orphan), "orphan");
}

TEST(TextTest, RoundTrips) {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const Plft f = oracle::random_plft(rng, 1000000);
    ASSERT_EQ(parse_matrix(to_string(f)), f);
    long long d = dist(rng);
    if (d == 0) d = 1;
    const ReducedRational x = q(dist(rng), d);
    ASSERT_EQ(parse_rational(to_string(x)), x);
    const Word w = oracle::random_word(rng, 20);
    ASSERT_EQ(parse_word(to_string(w)), w);
    const LinearForm g(Integer(std::abs(dist(rng))), Integer(std::abs(dist(rng)) + 1));
    ASSERT_EQ(parse_form(to_string(g)), g);
  }
}

TEST(TextTest, BigIntegers) {
  const Integer big = parse_integer("123456789012345678901234567890");
  EXPECT_EQ(to_string(ReducedRational(big)), "123456789012345678901234567890");
  expect_error(ErrorCode::ParseError, [] { parse_integer(""); });
  expect_error(ErrorCode::ParseError, [] { parse_integer("12a"); });
}

}  // namespace
}  // namespace cwf
