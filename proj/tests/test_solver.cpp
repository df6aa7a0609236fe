#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "../src/polysolve.hpp"
#include "generators.hpp"
#include "nashgadgets/analysis.hpp"
#include "nashgadgets/errors.hpp"
#include "nashgadgets/gadgets.hpp"

using namespace nashgadgets;
using detail::Poly;

namespace {

MixedProfile pure(const StrategicGame& g, int a) { return pure_as_mixed(g, PureProfile(g.players(), a)); }

bool contains(const std::vector<Equilibrium>& eqs, const MixedProfile& x) {
  return std::any_of(eqs.begin(), eqs.end(), [&](const Equilibrium& e) { return e.profile == x; });
}

Poly var(int n, int v) { return Poly::variable(n, v); }
Poly cst(int n, const QuadAlgebraic& c) { return Poly::constant(n, c); }

bool has_point(const detail::SystemSolution& s, const std::vector<QuadAlgebraic>& p) {
  return std::find(s.points.begin(), s.points.end(), p) != s.points.end();
}

}  // namespace

TEST(Solver, H1EquilibriumSets) {
  auto h0 = build_H1(0);
  auto e0 = find_equilibria(h0);
  EXPECT_EQ(e0.size(), 2u);
  EXPECT_TRUE(contains(e0, pure(h0, 0)));
  EXPECT_TRUE(contains(e0, pure(h0, 1)));
  auto h1 = build_H1(1);
  auto e1 = find_equilibria(h1);
  ASSERT_EQ(e1.size(), 1u);
  EXPECT_EQ(e1[0].profile, pure(h1, 1));
}

TEST(Solver, H2IsUniform) {
  for (int k = 2; k <= 4; ++k) {
    auto h = build_H2(k);
    auto eqs = find_equilibria(h);
    ASSERT_EQ(eqs.size(), 1u) << k;
    Strategy uni(k, QuadAlgebraic(Rational(1, k)));
    EXPECT_EQ(eqs[0].profile[1], uni);
    EXPECT_EQ(eqs[0].profile[2], uni);
    EXPECT_EQ(eqs[0].flag, Exactness::kExact);
  }
}

TEST(Solver, H5IsExactInSqrt6) {
  auto eqs = find_equilibria(build_H5());
  ASSERT_EQ(eqs.size(), 1u);
  const auto& e = eqs[0];
  EXPECT_EQ(e.flag, Exactness::kExact);
  QuadAlgebraic s6 = QuadAlgebraic::sqrt_of(6);
  QuadAlgebraic p23 = QuadAlgebraic(3) - s6;
  EXPECT_EQ(e.profile[0][0], QuadAlgebraic(1) - QuadAlgebraic(1) / s6);
  EXPECT_EQ(e.profile[1][0], p23);
  EXPECT_EQ(e.profile[2][0], p23);
  EXPECT_EQ(e.payoffs, (std::vector<QuadAlgebraic>{QuadAlgebraic(-4) * p23, QuadAlgebraic(2) * p23,
                                                   QuadAlgebraic(2) * p23}));
}

TEST(Solver, BudgetExceeded) {
  SolveOptions o;
  o.budget = 3;
  try {
    find_equilibria(build_H5(), o);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(SolverProperty, RandomGamesYieldVerifiedEquilibria) {
  testgen::Rng rng(51);
  for (int t = 0; t < 25; ++t) {
    auto g = testgen::random_game(rng, {2, 2, 2}, 3, 1);
    bool zero_sum = t % 2 == 0;
    if (zero_sum) {
      for (std::size_t c = 0; c < g.cell_count(); ++c) g.set_payoff(c, 2, -(g.payoff(c, 0) + g.payoff(c, 1)));
    }
    auto eqs = find_equilibria(g);
    EXPECT_FALSE(eqs.empty());
    for (const auto& e : eqs) {
      if (e.flag == Exactness::kExact) {
        EXPECT_EQ(check_NE(g, e.profile).status, VerdictStatus::kYes);
        EXPECT_EQ(e.payoffs, testgen::brute_payoff(g, e.profile));
        if (zero_sum) {
          EXPECT_TRUE((e.payoffs[0] + e.payoffs[1] + e.payoffs[2]).is_zero());
        }
      } else if (zero_sum) {
        EXPECT_NEAR((e.payoffs[0] + e.payoffs[1] + e.payoffs[2]).to_double(), 0.0, 1e-9);
      }
    }
  }
}

TEST(Polysolve, UnivariateRoots) {
  std::vector<QuadAlgebraic> roots;
  ASSERT_TRUE(detail::univariate_roots({-2, 0, 1}, roots));
  ASSERT_EQ(roots.size(), 2u);
  QuadAlgebraic r2 = QuadAlgebraic::sqrt_of(2);
  EXPECT_TRUE(std::find(roots.begin(), roots.end(), r2) != roots.end());
  EXPECT_TRUE(std::find(roots.begin(), roots.end(), -r2) != roots.end());
  roots.clear();
  // (x - 1/2)(x - 1/3)(x + 2)
  ASSERT_TRUE(detail::univariate_roots({Rational(1, 3), Rational(-3, 2), Rational(7, 6), 1}, roots));
  EXPECT_EQ(roots.size(), 3u);
  for (Rational r : {Rational(1, 2), Rational(1, 3), Rational(-2)}) {
    EXPECT_TRUE(std::find(roots.begin(), roots.end(), QuadAlgebraic(r)) != roots.end());
  }
  roots.clear();
  ASSERT_TRUE(detail::univariate_roots({1, 0, 1}, roots));
  EXPECT_TRUE(roots.empty());
}

TEST(Polysolve, LinearSystem) {
  auto s = detail::solve_system({var(2, 0) + var(2, 1) - cst(2, 1), var(2, 0) - var(2, 1)}, 2);
  ASSERT_EQ(s.status, detail::SolveStatus::kFinite);
  ASSERT_EQ(s.points.size(), 1u);
  EXPECT_EQ(s.points[0], (std::vector<QuadAlgebraic>{Rational(1, 2), Rational(1, 2)}));
}

TEST(Polysolve, QuadraticSystem) {
  // x y = 1/2, x = y
  auto s = detail::solve_system({var(2, 0) * var(2, 1) - cst(2, Rational(1, 2)), var(2, 0) - var(2, 1)}, 2);
  ASSERT_EQ(s.status, detail::SolveStatus::kFinite);
  QuadAlgebraic w = QuadAlgebraic::sqrt_of(Rational(1, 2));
  EXPECT_EQ(s.points.size(), 2u);
  EXPECT_TRUE(has_point(s, {w, w}));
  EXPECT_TRUE(has_point(s, {-w, -w}));
}

TEST(Polysolve, DegenerateSystems) {
  EXPECT_EQ(detail::solve_system({var(2, 0) - var(2, 1)}, 2).status, detail::SolveStatus::kPositiveDim);
  auto none = detail::solve_system({cst(1, 1)}, 1);
  EXPECT_EQ(none.status, detail::SolveStatus::kFinite);
  EXPECT_TRUE(none.points.empty());
}

TEST(Polysolve, ContinuedFraction) {
  EXPECT_EQ(detail::continued_fraction(0.333333333333, 1000), Rational(1, 3));
  EXPECT_EQ(detail::continued_fraction(std::acos(-1.0), 200), Rational(355, 113));
}
