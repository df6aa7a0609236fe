#include <gtest/gtest.h>

#include "generators.hpp"
#include "nashgadgets/errors.hpp"
#include "nashgadgets/systems.hpp"

using namespace nashgadgets;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    parse_system(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kUndecided;
}

IntMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m;
  for (auto r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

std::vector<QuadAlgebraic> q(std::initializer_list<Rational> v) { return std::vector<QuadAlgebraic>(v.begin(), v.end()); }

bool all_zero(const std::vector<QuadAlgebraic>& v) {
  return std::all_of(v.begin(), v.end(), [](const QuadAlgebraic& a) { return a.is_zero(); });
}

}  // namespace

TEST(Systems, ParseTerms) {
  auto s = parse_system("qsys 1\nvars 3\neq 2:1:2 -1:0:3 1:0:0\n");
  ASSERT_EQ(s.equations.size(), 1u);
  // 2 x1 x2 - x3 + 1 at (1, 2, 5) is 0.
  EXPECT_TRUE(eval_system(s, q({1, 2, 5}))[0].is_zero());
  auto t = parse_system("qsys 1\nvars 1\neq 2:1:1 -1:0:0\n");
  EXPECT_EQ(eval_system(t, q({Rational(3)}))[0], QuadAlgebraic(17));
  EXPECT_TRUE(eval_system(t, {QuadAlgebraic::sqrt_of(Rational(1, 2))})[0].is_zero());
  EXPECT_EQ(parse_code("qsys 1\nvars 3\neq 1:4:1\n"), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(parse_code("qsys 1\nvars 1\neq 1:1\n"), ErrorCode::kSyntaxError);
  EXPECT_EQ(parse_code("qsys 1\nvars 1\n"), ErrorCode::kSyntaxError);
}

TEST(Systems, FormatRoundTrip) {
  testgen::Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    auto p = testgen::planted_system(rng, testgen::uniform_int(rng, 1, 4), testgen::uniform_int(rng, 1, 4));
    auto back = parse_system(format_system(p.sys));
    EXPECT_EQ(format_system(back), format_system(p.sys));
    auto b = bilinearize_homogenize(p.sys);
    EXPECT_EQ(format_bilinear(parse_bilinear(format_bilinear(b))), format_bilinear(b));
  }
}

TEST(Systems, NormalizeMapsIntoPromiseRegion) {
  EXPECT_EQ(promise_point(q({0})), q({Rational(1, 4), Rational(1, 2)}));
  EXPECT_EQ(promise_point(q({-1, 1})), q({Rational(1, 16), Rational(3, 16), Rational(1, 2)}));
  auto sys = parse_system("qsys 1\nvars 1\neq 1:0:1\n");
  auto norm = normalize_to_promise(sys);
  EXPECT_EQ(norm.var_count, 2);
  EXPECT_TRUE(all_zero(eval_system(norm, promise_point(q({0})))));
}

TEST(Systems, NormalizeKeepsInfeasibility) {
  // x^2 + 1 = 0 stays infeasible: the first equation is positive on the whole image.
  auto norm = normalize_to_promise(parse_system("qsys 1\nvars 1\neq 1:1:1 1:0:0\n"));
  for (int k = 0; k <= 16; ++k) {
    Rational z(k, 16);
    EXPECT_GT(eval_system(norm, q({z, Rational(1, 2)}))[0].sign(), 0);
  }
}

TEST(Systems, AugmentIrrational) {
  auto sys = augment_irrational(parse_system("qsys 1\nvars 1\neq 1:0:1\n"));
  ASSERT_EQ(sys.var_count, 2);
  QuadAlgebraic w = QuadAlgebraic::sqrt_of(Rational(1, 2));
  EXPECT_TRUE(all_zero(eval_system(sys, {QuadAlgebraic(0), w})));
  EXPECT_TRUE(all_zero(eval_system(sys, {QuadAlgebraic(0), -w})));
  for (int k = -4; k <= 4; ++k) EXPECT_FALSE(all_zero(eval_system(sys, q({0, Rational(k, 4)}))));
  auto twice = augment_irrational(sys);
  EXPECT_EQ(twice.var_count, 3);
  EXPECT_EQ(twice.equations.size(), 3u);
}

TEST(Systems, BilinearizeSmallExample) {
  auto b = bilinearize_homogenize(parse_system("qsys 1\nvars 1\neq 1:1:1 -1:0:1\n"));
  ASSERT_EQ(b.matrices.size(), 2u);
  EXPECT_EQ(b.matrices[0], mat({{0, -1}, {0, 0}}));
  EXPECT_EQ(b.matrices[1], mat({{0, 1}, {-1, 0}}));
  for (auto x : {q({1, 0}), q({0, 1})}) EXPECT_TRUE(all_zero(eval_bilinear(b, x, x)));
  EXPECT_FALSE(all_zero(eval_bilinear(b, q({Rational(1, 2), Rational(1, 2)}), q({Rational(1, 2), Rational(1, 2)}))));
}

TEST(Systems, BilinearizeConstantEquation) {
  auto b = bilinearize_homogenize(parse_system("qsys 1\nvars 1\neq 1:0:0\n"));
  EXPECT_EQ(b.matrices[0], mat({{1, 1}, {1, 1}}));
  testgen::Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    auto x = testgen::simplex_point(rng, 2), y = testgen::simplex_point(rng, 2);
    EXPECT_EQ(eval_bilinear(b, x, y)[0], QuadAlgebraic(1));
  }
}

TEST(Systems, BilinearizeZeroSystem) {
  QuadraticSystem zero;
  zero.var_count = 2;
  zero.equations = {{}};
  auto b = bilinearize_homogenize(zero);
  EXPECT_EQ(b.matrices[0], mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  testgen::Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    auto x = testgen::simplex_point(rng, 3);
    EXPECT_TRUE(all_zero(eval_bilinear(b, x, x)));
  }
}

TEST(Systems, EvalBilinear) {
  BilinearSystem b;
  b.dim = 2;
  b.matrices = {mat({{1, 0}, {0, -1}})};
  EXPECT_TRUE(eval_bilinear(b, q({Rational(1, 2), Rational(1, 2)}), q({Rational(1, 2), Rational(1, 2)}))[0].is_zero());
  EXPECT_TRUE(eval_bilinear(b, q({1, 0}), q({0, 1}))[0].is_zero());
  EXPECT_EQ(eval_bilinear(b, q({1, 0}), q({1, 0}))[0], QuadAlgebraic(1));
  try {
    eval_bilinear(b, q({1, 0, 0}), q({1, 0}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
}

TEST(SystemsProperty, CorrespondenceOnPlantedSystems) {
  testgen::Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    int n = testgen::uniform_int(rng, 1, 4), ell = testgen::uniform_int(rng, 1, 4);
    auto p = testgen::planted_system(rng, n, ell);
    ASSERT_TRUE(all_zero(eval_system(p.sys, testgen::as_quad(p.x))));
    auto norm = normalize_to_promise(p.sys);
    auto z = promise_point(testgen::as_quad(p.x));
    ASSERT_TRUE(all_zero(eval_system(norm, z)));
    QuadAlgebraic sum;
    for (const auto& v : z) {
      EXPECT_GT(v.sign(), 0);
      EXPECT_LE(v, QuadAlgebraic(Rational(1, 2)));
      sum += v;
    }
    EXPECT_GE(sum, QuadAlgebraic(Rational(1, 2)));
    EXPECT_LT(sum, QuadAlgebraic(1));

    auto b = bilinearize_homogenize(norm);
    EXPECT_EQ(b.matrices.size(), norm.equations.size() + static_cast<std::size_t>(norm.var_count));
    EXPECT_EQ(b.dim, norm.var_count + 1);
    auto e = simplex_embed(z);
    EXPECT_TRUE(all_zero(eval_bilinear(b, e, e)));

    // Converse direction: the homogenized equations equal the original ones
    // at any simplex point, so a perturbed point fails in both systems alike.
    auto zp = z;
    zp[0] += QuadAlgebraic(Rational(1, 97));
    auto ep = simplex_embed(zp);
    auto orig = eval_system(norm, zp);
    auto bil = eval_bilinear(b, ep, ep);
    for (std::size_t k = 0; k < orig.size(); ++k) EXPECT_EQ(orig[k], bil[k]);
    EXPECT_TRUE(all_zero(std::vector<QuadAlgebraic>(bil.begin() + orig.size(), bil.end())));
  }
}

TEST(SystemsProperty, CouplingForcesEqualBlocks) {
  testgen::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    auto p = testgen::planted_system(rng, 2, 1);
    auto b = bilinearize_homogenize(p.sys);
    auto x = testgen::simplex_point(rng, 3), y = testgen::simplex_point(rng, 3);
    auto v = eval_bilinear(b, x, y);
    bool coupled = all_zero(std::vector<QuadAlgebraic>(v.begin() + 1, v.end()));
    EXPECT_EQ(coupled, x == y);
  }
}
