#include <gtest/gtest.h>

#include "copsrobbers/bounds.hpp"

namespace {

using namespace copsrobbers;

BoundParams d_only(std::int64_t d) { return {.d = d}; }

TEST(Rational, ArithmeticAndOrder) {
  EXPECT_EQ(Rational(6, -8), Rational(-3, 4));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1) - Rational(2, 5), Rational(3, 5));
  EXPECT_TRUE(Rational(4, 7) < Rational(3, 5));
  EXPECT_EQ(Rational(3, 5).str(), "3/5");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_THROW(Rational(1, 0), PreconditionError);
}

TEST(Logs, CeilingsAreExact) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(3), 2);
  EXPECT_EQ(ceil_log2(4), 2);
  EXPECT_EQ(ceil_log2(5), 3);
  EXPECT_EQ(ceil_log2_ratio(7, 2), 2);  // 7/2 = 3.5 -> 2
  EXPECT_EQ(ceil_log2_ratio(8, 2), 2);
  EXPECT_EQ(ceil_log2_ratio(9, 2), 3);
  EXPECT_EQ(guard_radius(7), 2);
  EXPECT_EQ(guard_radius(6), 1);
  EXPECT_EQ(guard_radius(11), 3);
}

TEST(Evaluate, NamedExponents) {
  EXPECT_EQ(*evaluate("thm7", d_only(4)).exponent, Rational(3, 5));
  EXPECT_EQ(*evaluate("thm7", d_only(4)).exponent, *evaluate("thm5", {}).exponent);
  EXPECT_EQ(*evaluate("thm6", {}).exponent, Rational(4, 7));
  EXPECT_EQ(*evaluate("cor2", d_only(3)).exponent, Rational(2, 3));
  EXPECT_TRUE(*evaluate("thm6", {}).exponent < *evaluate("cor2", d_only(3)).exponent);
  EXPECT_TRUE(evaluate("thm7", d_only(4)).o1);
}

TEST(Evaluate, DigraphBound) {
  auto r = evaluate("thm11", {.n = 8});
  EXPECT_EQ(*r.count, 4);
  EXPECT_FALSE(r.o1);
  EXPECT_EQ(*evaluate("thm11", {.n = 12}).count, 4);
  EXPECT_EQ(*evaluate("thm11", {.n = 13}).count, 5);
}

TEST(Evaluate, CountsAndFirstBound) {
  auto r = evaluate("thm7", {.n = 1000000, .d = 4});
  EXPECT_EQ(*r.count, 3982);  // ceil(10^3.6)
  auto t1 = evaluate("thm1", {.n = 65536});
  EXPECT_FALSE(t1.exponent.has_value());
  EXPECT_DOUBLE_EQ(t1.exponent_value, 0.75);  // 1 - 4/16
  EXPECT_EQ(*t1.count, 4096);
}

TEST(Evaluate, Errors) {
  EXPECT_THROW(evaluate("thm7", {}), PreconditionError);
  EXPECT_THROW(evaluate("thm7", d_only(1)), PreconditionError);
  EXPECT_THROW(evaluate("thm9", {.d = 2, .rho = 2}), PreconditionError);
  EXPECT_THROW(evaluate("thm9", {.d = 4}), PreconditionError);
  EXPECT_THROW(evaluate("thm42", {}), PreconditionError);
  EXPECT_THROW(evaluate("thm11", {.n = 0}), PreconditionError);
}

TEST(Evaluate, GirthVariant) {
  auto r = evaluate("thm9", {.d = 8, .g = 7});
  EXPECT_EQ(*r.params.rho, 2);
  EXPECT_EQ(*r.exponent, Rational(3, 5));  // log(8/2) = 2
}

TEST(Evaluate, SweepsOverDiameter) {
  for (std::int64_t d = 2; d <= 1000000; ++d) {
    auto t7 = *evaluate("thm7", d_only(d)).exponent;
    ASSERT_TRUE(t7 <= *evaluate("cor2", d_only(d)).exponent) << d;
    ASSERT_EQ(*evaluate("thm9", {.d = d, .rho = 1}).exponent, t7) << d;
  }
}

TEST(Schedule, GammaValues) {
  const Rational alpha(2, 5);
  EXPECT_EQ(gamma_schedule(alpha, 0), Rational(0));
  EXPECT_EQ(gamma_schedule(alpha, 1), Rational(1, 10));
  EXPECT_EQ(gamma_schedule(alpha, 2), Rational(3, 20));
  EXPECT_TRUE(gamma_schedule(alpha, 40) < Rational(1, 5));
  EXPECT_TRUE(Rational(1, 5) - gamma_schedule(alpha, 40) < Rational(1, 1000000000));
}

TEST(Schedule, AlphaConditions) {
  EXPECT_TRUE(diameter4_conditions(Rational(2, 5), Rational(1, 5)));
  EXPECT_FALSE(diameter4_conditions(Rational(9, 20), Rational(1, 10)));
  EXPECT_TRUE(diameter3_conditions(Rational(3, 7), Rational(1, 7)));
  EXPECT_FALSE(diameter3_conditions(Rational(1, 2), Rational(0)));
  EXPECT_EQ(general_alpha_limit(1), Rational(2, 5));
}

TEST(Report, Serialisation) {
  auto r = evaluate("thm7", {.n = 1000000, .d = 4});
  auto j = to_json(r);
  EXPECT_EQ(j["exponent"], "3/5");
  EXPECT_EQ(j["o1"], true);
  EXPECT_NE(to_text(r).find("t=3/5 (0.6)"), std::string::npos);
}

}  // namespace
