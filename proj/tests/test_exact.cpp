#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "generators.hpp"
#include "nashgadgets/errors.hpp"
#include "nashgadgets/exact.hpp"
#include "nashgadgets/game.hpp"

using namespace nashgadgets;

namespace {

QuadAlgebraic sqrt6() { return QuadAlgebraic::sqrt_of(6); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kUndecided;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
  EXPECT_EQ(Rational::parse("-2/4"), Rational(-1, 2));
  EXPECT_EQ(code_of([] { Rational::parse("2/-4"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), ErrorCode::kDivideByZero);
  EXPECT_EQ(code_of([] { Rational::parse("1.5"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { Rational(1) / Rational(0); }), ErrorCode::kDivideByZero);
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.375), Rational(3, 8));
  EXPECT_EQ(Rational::from_double(-2.0), Rational(-2));
}

TEST(QuadAlgebraic, SumOfEqualIrrationals) {
  QuadAlgebraic x = QuadAlgebraic(3) - sqrt6();
  QuadAlgebraic s = x + x;
  EXPECT_EQ(s, QuadAlgebraic(6, -2, 6));
  EXPECT_EQ(s.a(), Rational(6));
  EXPECT_EQ(s.b(), Rational(-2));
}

TEST(QuadAlgebraic, CanonicalRendering) {
  QuadAlgebraic x = QuadAlgebraic(1) - QuadAlgebraic(1) / sqrt6();
  EXPECT_EQ(x.str(), "1 - (1/6)*sqrt(6)");
  EXPECT_EQ((QuadAlgebraic(3) - sqrt6()).literal(), "alg 3 -1 6");
  EXPECT_EQ(QuadAlgebraic(Rational(1, 2)).literal(), "1/2");
}

TEST(QuadAlgebraic, ConjugateProduct) {
  QuadAlgebraic p = (QuadAlgebraic(3) - sqrt6()) * (QuadAlgebraic(3) + sqrt6());
  EXPECT_TRUE(p.is_rational());
  EXPECT_EQ(p.rational(), Rational(3));
}

TEST(QuadAlgebraic, Compare) {
  QuadAlgebraic x = QuadAlgebraic(3) - sqrt6();
  EXPECT_EQ(compare(x, QuadAlgebraic(Rational(1, 2))), Ordering::kGreater);
  EXPECT_EQ(compare(x, x), Ordering::kEqual);
  QuadAlgebraic y = QuadAlgebraic(1) - QuadAlgebraic(1) / sqrt6();
  EXPECT_EQ(compare(y, QuadAlgebraic(1)), Ordering::kLess);
}

TEST(QuadAlgebraic, ToFloat) {
  EXPECT_NEAR(to_float(QuadAlgebraic(3) - sqrt6()), 0.5505102572168219, 1e-15);
  EXPECT_EQ(to_float(QuadAlgebraic(Rational(1, 2))), 0.5);
  EXPECT_NEAR(to_float(QuadAlgebraic(1) - QuadAlgebraic(1) / sqrt6()), 0.5917517095361369, 1e-15);
}

TEST(QuadAlgebraic, RadicandCanonicalization) {
  EXPECT_EQ(QuadAlgebraic::sqrt_of(8), QuadAlgebraic(0, 2, 2));
  EXPECT_TRUE(QuadAlgebraic::sqrt_of(Rational(9, 4)).is_rational());
  EXPECT_EQ(QuadAlgebraic::sqrt_of(Rational(1, 2)), QuadAlgebraic(0, Rational(1, 2), 2));
  EXPECT_EQ(QuadAlgebraic::parse_alg("3/1", "-1/1", "6"), QuadAlgebraic(3) - sqrt6());
}

TEST(QuadAlgebraic, MixedRadicandsRejected) {
  EXPECT_EQ(code_of([] { QuadAlgebraic::sqrt_of(2) + QuadAlgebraic::sqrt_of(3); }), ErrorCode::kMixedRadicands);
  EXPECT_EQ(code_of([] { (void)compare(QuadAlgebraic::sqrt_of(2), QuadAlgebraic::sqrt_of(3)); }),
            ErrorCode::kMixedRadicands);
  EXPECT_EQ(code_of([] { QuadAlgebraic(1) / QuadAlgebraic(0); }), ErrorCode::kDivideByZero);
}

TEST(QuadAlgebraic, SqrtInField) {
  QuadAlgebraic x = QuadAlgebraic(5) - QuadAlgebraic(2) * sqrt6();  // (sqrt3 - sqrt2)^2, outside Q(sqrt6)
  EXPECT_FALSE(sqrt_in_field(x).has_value());
  QuadAlgebraic y = QuadAlgebraic(3) - sqrt6();
  auto r = sqrt_in_field(y * y);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, y);
  EXPECT_FALSE(sqrt_in_field(QuadAlgebraic(-1)).has_value());
}

TEST(QuadAlgebraicProperty, FieldAxioms) {
  testgen::Rng rng(11);
  for (int d : {2, 3, 6}) {
    for (int t = 0; t < 200; ++t) {
      QuadAlgebraic a = testgen::quad(rng, d), b = testgen::quad(rng, d), c = testgen::quad(rng, d);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_EQ(a * (QuadAlgebraic(1) / a), QuadAlgebraic(1));
      }
    }
  }
}

TEST(QuadAlgebraicProperty, OrderConsistentWithFloat) {
  testgen::Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    QuadAlgebraic x = testgen::quad(rng, 6), y = testgen::quad(rng, 6);
    double fx = to_float(x), fy = to_float(y);
    if (std::fabs(fx - fy) <= 1e-9) continue;
    EXPECT_EQ(compare(x, y), fx < fy ? Ordering::kLess : Ordering::kGreater);
    EXPECT_EQ(compare(y, x), fx < fy ? Ordering::kGreater : Ordering::kLess);
  }
}

TEST(QuadAlgebraicProperty, LiteralRoundTrip) {
  testgen::Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    QuadAlgebraic x = testgen::quad(rng, 7);
    auto parsed = parse_literals(split_ws(x.literal()));
    ASSERT_EQ(parsed.size(), 1u);
    EXPECT_EQ(parsed[0], x);
  }
}
