#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cwf/error.hpp"
#include "cwf/linear_form.hpp"
#include "cwf/rational.hpp"
#include "cwf/treenav.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cwf {
namespace {

using testing::expect_error;
using testing::q;

TEST(ReducedRationalTest, ReducesOnConstruction) {
  const ReducedRational x = q(10, -4);
  EXPECT_EQ(x.num(), -5);
  EXPECT_EQ(x.den(), 2);
  const ReducedRational zero = q(0, -7);
  EXPECT_EQ(zero.num(), 0);
  EXPECT_EQ(zero.den(), 1);
  expect_error(ErrorCode::DivisionByZero, [] { q(1, 0); });
}

TEST(ReducedRationalTest, ArithmeticStaysReduced) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-500, 500);
  for (int i = 0; i < 2000; ++i) {
    long long d1 = dist(rng), d2 = dist(rng);
    if (d1 == 0 || d2 == 0) continue;
    const ReducedRational x = q(dist(rng), d1);
    const ReducedRational y = q(dist(rng), d2);
    for (const ReducedRational& r : {x + y, x - y, x * y}) {
      EXPECT_GE(r.den(), 1);
      EXPECT_EQ(gcd(r.num(), r.den()), 1);
    }
    EXPECT_EQ((x + y) - y, x);
  }
}

TEST(ReducedRationalTest, OrderingAndFloor) {
  EXPECT_LT(q(-3, 2), q(-1));
  EXPECT_GT(q(11, 3), q(3));
  EXPECT_EQ(q(11, 3).floor(), 3);
  EXPECT_EQ(q(-1, 2).floor(), -1);
  EXPECT_EQ(q(-4, 2).floor(), -2);
}

TEST(RationalHeightTest, Examples) {
  EXPECT_EQ(rational_height(q(11, 3)), 11);
  EXPECT_EQ(rational_height(q(1)), 1);
  EXPECT_EQ(rational_height(q(-3, 5)), 5);
  expect_error(ErrorCode::HeightOfZero, [] { rational_height(q(0)); });
}

TEST(RationalHeightTest, ChildrenAreTaller) {
  for (const ReducedRational& x : oracle::positive_rationals(40)) {
    EXPECT_GT(rational_height(rational_left_child(x)), rational_height(x));
    EXPECT_GT(rational_height(rational_right_child(x)), rational_height(x));
  }
}

TEST(LinearFormTest, RejectsNonPositive) {
  expect_error(ErrorCode::ZeroForm, [] { LinearForm(0, 0); });
  expect_error(ErrorCode::NegativeCoefficient, [] { LinearForm(-1, 3); });
}

TEST(FormLeqTest, Examples) {
  EXPECT_TRUE(form_leq(LinearForm(2, 1), LinearForm(3, 2)));
  EXPECT_FALSE(form_leq(LinearForm(2, 1), LinearForm(1, 2)));
  EXPECT_FALSE(form_leq(LinearForm(1, 2), LinearForm(2, 1)));
  EXPECT_TRUE(form_leq(LinearForm(1, 0), LinearForm(1, 0)));
  EXPECT_TRUE(comparable(LinearForm(2, 1), LinearForm(3, 2)));
  EXPECT_FALSE(comparable(LinearForm(2, 1), LinearForm(1, 2)));
  EXPECT_FALSE(comparable(LinearForm(1, 0), LinearForm(1, 0)));
}

TEST(FormLeqTest, IsPartialOrder) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(0, 4);
  auto draw = [&] {
    for (;;) {
      int a = coef(rng), b = coef(rng);
      if (a + b > 0) return LinearForm(a, b);
    }
  };
  for (int i = 0; i < 5000; ++i) {
    const LinearForm f = draw(), g = draw(), h = draw();
    EXPECT_TRUE(form_leq(f, f));
    if (form_leq(f, g) && form_leq(g, f)) EXPECT_EQ(f, g);
    if (form_leq(f, g) && form_leq(g, h)) EXPECT_TRUE(form_leq(f, h));
  }
}

TEST(FormGcdTest, Examples) {
  EXPECT_EQ(form_gcd(LinearForm(10, 6), LinearForm(15, 9)), LinearForm(5, 3));
  EXPECT_EQ(form_gcd(LinearForm(9, 6), LinearForm(15, 9)), LinearForm(0, 3));
  EXPECT_EQ(form_gcd(LinearForm(1, 0), LinearForm(1, 1)), LinearForm(0, 1));
  EXPECT_EQ(form_gcd(LinearForm(0, 6), LinearForm(0, 4)), LinearForm(0, 2));
}

// Exact division in Z[z] of a degree <= 1 polynomial by the gcd.
bool divides(const LinearForm& g, const LinearForm& f) {
  if (g.a() == 0) return f.a() % g.b() == 0 && f.b() % g.b() == 0;
  if (f.a() % g.a() != 0) return false;
  const Integer k = f.a() / g.a();
  return k * g.b() == f.b();
}

TEST(FormGcdTest, DividesBothArguments) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coef(0, 1000);
  std::uniform_int_distribution<int> small(1, 12);
  for (int i = 0; i < 3000; ++i) {
    const int a = coef(rng), b = coef(rng) + 1;
    const LinearForm f(a, b);
    // Every third pair is proportional, which exercises the degree-1 branch.
    const LinearForm g = i % 3 == 0 ? small(rng) * f : LinearForm(coef(rng), coef(rng) + 1);
    const LinearForm h = form_gcd(f, g);
    EXPECT_TRUE(divides(h, f)) << i;
    EXPECT_TRUE(divides(h, g)) << i;
  }
}

TEST(FormEvalTest, Examples) {
  EXPECT_EQ(form_eval(LinearForm(2, 3), q(1)), q(5));
  EXPECT_EQ(form_eval(LinearForm(1, 0), q(7, 2)), q(7, 2));
  EXPECT_EQ(form_eval(LinearForm(3, 1), q(1, 3)), q(2));
}

TEST(IntegerTest, LargeValuesDoNotOverflow) {
  // Alternating R, L from 1 walks through ratios of consecutive Fibonacci
  // numbers: after 100 steps the vertex is F(101)/F(102).
  Word w;
  for (int i = 0; i < 100; ++i) w.push_back(i % 2 ? Step::L : Step::R);
  std::vector<Integer> fib{0, 1};
  while (fib.size() <= 102) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  const ReducedRational x = rational_vertex_at(q(1), w);
  EXPECT_EQ(x.num(), fib[101]);
  EXPECT_EQ(x.den(), fib[102]);
  EXPECT_EQ(x.num(), Integer("573147844013817084101"));
  EXPECT_EQ(rational_locate(x).word, w);
}

}  // namespace
}  // namespace cwf
