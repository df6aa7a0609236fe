#include <gtest/gtest.h>

#include <functional>

#include "generators.hpp"
#include "nashgadgets/analysis.hpp"
#include "nashgadgets/errors.hpp"
#include "nashgadgets/gadgets.hpp"

using namespace nashgadgets;

namespace {

MixedProfile pure(const StrategicGame& g, int a) { return pure_as_mixed(g, PureProfile(g.players(), a)); }

MixedProfile bot_profile(const StrategicGame& g) {
  PureProfile a;
  for (int p = 0; p < g.players(); ++p) a.push_back(g.actions(p) - 1);
  return pure_as_mixed(g, a);
}

BilinearSystem diag_bsys() {
  BilinearSystem b;
  b.dim = 2;
  b.matrices = {{{1, 0}, {0, -1}}};
  return b;
}

MixedProfile lifted(const StrategicGame& g) {
  std::vector<QuadAlgebraic> h{Rational(1, 2), Rational(1, 2)};
  return lift_solution(diag_bsys(), h, h, g);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kUndecided;
}

// Every coalition witness must re-evaluate to its reported gains, with B1
// members strictly and B2 members weakly better off.
void expect_witness(const StrategicGame& g, const MixedProfile& x, const Verdict& v) {
  ASSERT_TRUE(v.coalition.has_value());
  auto base = testgen::brute_payoff(g, x);
  auto now = testgen::brute_payoff(g, v.coalition->profile);
  for (std::size_t t = 0; t < v.coalition->members.size(); ++t) {
    int j = v.coalition->members[t];
    EXPECT_EQ(now[j] - base[j], v.coalition->gains[t]);
    bool strict = std::find(v.B1.begin(), v.B1.end(), j) != v.B1.end();
    if (strict) {
      EXPECT_GT(v.coalition->gains[t].sign(), 0);
    } else {
      EXPECT_GE(v.coalition->gains[t].sign(), 0);
    }
  }
}

}  // namespace

TEST(CheckNE, H1Examples) {
  auto h = build_H1(1);
  EXPECT_EQ(check_NE(h, pure(h, 1)).status, VerdictStatus::kYes);
  Verdict v = check_NE(h, pure(h, 0));
  ASSERT_EQ(v.status, VerdictStatus::kNo);
  ASSERT_TRUE(v.deviation.has_value());
  EXPECT_EQ(v.deviation->player, 1);
  EXPECT_EQ(v.deviation->action, 1);
  EXPECT_EQ(v.deviation->gain, QuadAlgebraic(1));
}

TEST(CheckNE, LiftedG0Profile) {
  auto g0 = build_G0(diag_bsys());
  Verdict v = check_NE(g0, lifted(g0));
  EXPECT_EQ(v.status, VerdictStatus::kYes);
  EXPECT_EQ(v.payoffs, (std::vector<QuadAlgebraic>{0, 0, 0}));
}

TEST(CheckNE, ShapeMismatch) {
  auto h = build_H1(0);
  EXPECT_EQ(code_of([&] { check_NE(h, {{1, 0}, {1, 0}}); }), ErrorCode::kShapeMismatch);
}

TEST(Auxiliary, H1Payoffs) {
  auto h = build_H1(0);
  CoalitionQuery q;
  q.B1 = {0, 1};
  q.B3 = {2};
  auto aux = build_auxiliary_game(h, pure(h, 0), q);
  ASSERT_EQ(aux.players(), 4);
  EXPECT_EQ(aux.action_counts(), (std::vector<int>{2, 2, 1, 2}));
  Rational eps = q.eps;
  EXPECT_EQ(aux.payoff({0, 0, 0, 0}, 3), eps);
  EXPECT_EQ(aux.payoff({0, 0, 0, 1}, 3), eps);
  EXPECT_EQ(aux.payoff({1, 1, 0, 0}, 3), Rational(-2) + eps);
  EXPECT_EQ(aux.payoff({1, 1, 0, 1}, 3), Rational(-1) + eps);
}

TEST(Auxiliary, QueryValidation) {
  auto h = build_H1(0);
  CoalitionQuery empty;
  empty.B3 = {0, 1, 2};
  EXPECT_EQ(code_of([&] { validate_query(h, empty); }), ErrorCode::kEmptyCoalition);
  EXPECT_EQ(code_of([&] { build_auxiliary_game(h, pure(h, 0), empty); }), ErrorCode::kEmptyCoalition);
  CoalitionQuery overlap;
  overlap.B1 = {0, 1};
  overlap.B2 = {1, 2};
  EXPECT_EQ(code_of([&] { validate_query(h, overlap); }), ErrorCode::kBadParameter);
}

TEST(Coalition, H1PairImproves) {
  auto h = build_H1(0);
  CoalitionQuery q;
  q.B1 = {0, 1};
  q.B3 = {2};
  Verdict v = coalition_feasible(h, pure(h, 0), q);
  ASSERT_EQ(v.status, VerdictStatus::kYes);
  EXPECT_EQ(v.coalition->profile, pure_as_mixed(h, {1, 1, 0}));
  EXPECT_EQ(v.coalition->gains, (std::vector<QuadAlgebraic>{2, 1}));
}

TEST(Coalition, H1BotPairCannotImprove) {
  auto h = build_H1(1);
  CoalitionQuery q;
  q.B1 = {0, 1};
  q.B3 = {2};
  Verdict v = coalition_feasible(h, pure(h, 1), q);
  EXPECT_EQ(v.status, VerdictStatus::kNo);
  EXPECT_TRUE(v.exact);
}

TEST(Coalition, SingletonAtEquilibriumIsNo) {
  auto g1 = build_G(GadgetKind::kG1, diag_bsys());
  auto x = lifted(g1);
  ASSERT_EQ(check_NE(g1, x).status, VerdictStatus::kYes);
  for (int i = 0; i < 3; ++i) {
    CoalitionQuery q;
    q.B1 = {i};
    for (int j = 0; j < 3; ++j) {
      if (j != i) q.B3.push_back(j);
    }
    EXPECT_EQ(coalition_feasible(g1, x, q).status, VerdictStatus::kNo) << i;
  }
}

TEST(Pareto, GadgetLemmas) {
  auto h3 = build_H3(0);
  Verdict v = check_pareto(h3, pure(h3, 0));
  ASSERT_EQ(v.status, VerdictStatus::kNo);
  expect_witness(h3, pure(h3, 0), v);
  EXPECT_EQ(v.coalition->profile, pure_as_mixed(h3, {0, 1, 1}));
  EXPECT_EQ(v.coalition->gains, (std::vector<QuadAlgebraic>{1, 1, 1}));
  EXPECT_EQ(check_pareto(h3, pure(h3, 1)).status, VerdictStatus::kYes);
  auto h4 = build_H4(0);
  EXPECT_EQ(check_pareto(h4, pure(h4, 0)).status, VerdictStatus::kYes);
}

TEST(Pareto, ZeroSumProfilesAreOptimal) {
  testgen::Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    auto g = testgen::random_game(rng, {2, 2, 2}, 3, 2);
    for (std::size_t c = 0; c < g.cell_count(); ++c) g.set_payoff(c, 2, -(g.payoff(c, 0) + g.payoff(c, 1)));
    auto x = testgen::random_profile(rng, g);
    EXPECT_EQ(check_pareto(g, x).status, VerdictStatus::kYes);
  }
  auto h = build_H1(1);
  EXPECT_EQ(check_pareto(h, pure(h, 0)).status, VerdictStatus::kYes);
}

TEST(Strong, GadgetLemmas) {
  auto h1 = build_H1(1);
  Verdict yes = check_strong(h1, pure(h1, 1));
  EXPECT_EQ(yes.status, VerdictStatus::kYes);
  EXPECT_TRUE(yes.exact);
  auto h0 = build_H1(0);
  Verdict no = check_strong(h0, pure(h0, 0));
  ASSERT_EQ(no.status, VerdictStatus::kNo);
  expect_witness(h0, pure(h0, 0), no);
  auto h4 = build_H4(0);
  EXPECT_EQ(check_strong(h4, pure(h4, 0)).status, VerdictStatus::kYes);
}

TEST(Strong, LiftedG4Profile) {
  auto g4 = build_G(GadgetKind::kG4, diag_bsys());
  auto x = lifted(g4);
  EXPECT_EQ(check_NE(g4, x).status, VerdictStatus::kYes);
  EXPECT_EQ(check_pareto(g4, x).status, VerdictStatus::kYes);
  EXPECT_EQ(check_strong(g4, x).status, VerdictStatus::kYes);
  auto g3 = build_G(GadgetKind::kG3, diag_bsys());
  auto y = lifted(g3);
  EXPECT_EQ(check_NE(g3, y).status, VerdictStatus::kYes);
  EXPECT_EQ(check_pareto(g3, y).status, VerdictStatus::kNo);
}

TEST(Coalition, TinyBudgetIsUnknown) {
  testgen::Rng rng(44);
  int tried = 0;
  for (int t = 0; t < 200; ++t) {
    auto g = testgen::random_game(rng, {2, 2, 2}, 3, 2);
    auto x = testgen::random_profile(rng, g);
    CoalitionQuery q;
    q.B1 = {0, 1};
    q.B3 = {2};
    Verdict full = coalition_feasible(g, x, q);
    if (full.cells < 3) continue;
    ++tried;
    SearchOptions o;
    o.cell_budget = 2;
    Verdict cut = coalition_feasible(g, x, q, o);
    EXPECT_EQ(cut.status, VerdictStatus::kUnknown);
    EXPECT_TRUE(cut.resolution.has_value());
  }
  EXPECT_GT(tried, 0);
}

TEST(Grid, Examples) {
  auto h0 = build_H1(0);
  CoalitionQuery q;
  q.B1 = {0, 1};
  q.B3 = {2};
  Verdict y = grid_oracle(h0, pure(h0, 0), q, 4);
  ASSERT_EQ(y.status, VerdictStatus::kYes);
  expect_witness(h0, pure(h0, 0), y);
  auto h1 = build_H1(1);
  Verdict n = grid_oracle(h1, pure(h1, 1), q, 64);
  EXPECT_EQ(n.status, VerdictStatus::kNo);
  EXPECT_FALSE(n.exact);
  ASSERT_TRUE(n.resolution.has_value());
  EXPECT_EQ(*n.resolution, Rational(1, 64));
  Verdict v = grid_oracle(h0, pure(h0, 0), q, 1);
  EXPECT_EQ(v.status, VerdictStatus::kYes);
  EXPECT_EQ(v.coalition->profile, pure_as_mixed(h0, {1, 1, 0}));
}

TEST(Conditions, TableRows) {
  auto g1 = build_G(GadgetKind::kG1, diag_bsys());
  auto x = lifted(g1);
  ConditionParams half;
  half.u = Rational(1, 2);
  EXPECT_TRUE(check_condition("in-a-ball", g1, x, half));
  ConditionParams third;
  third.u = Rational(1, 3);
  EXPECT_FALSE(check_condition("in-a-ball", g1, x, third));
  EXPECT_FALSE(check_condition("restricting-supports", g1, bot_profile(g1), {}));
  EXPECT_TRUE(check_condition("restricting-supports", g1, x, {}));
  ConditionParams k0;
  EXPECT_TRUE(check_condition("large-supports", g1, bot_profile(g1), k0));
  ConditionParams k2;
  k2.k = 2;
  EXPECT_TRUE(check_condition("large-supports", g1, x, k2));
  EXPECT_FALSE(check_condition("large-supports", g1, bot_profile(g1), k2));
  EXPECT_TRUE(check_condition("large-payoffs", g1, x, {}));
  EXPECT_FALSE(check_condition("large-payoffs", g1, bot_profile(g1), {}));
  EXPECT_TRUE(check_condition("rational", g1, x, {}));
  EXPECT_FALSE(check_condition("irrational", g1, x, {}));
  EXPECT_TRUE(check_condition("sne:rational", g1, x, {}));
  EXPECT_FALSE(check_condition("sne:rational", g1, pure_as_mixed(g1, {0, 1, 2}), {}));
  std::vector<MixedProfile> eqs{x, bot_profile(g1)};
  EXPECT_TRUE(check_condition("second-ne", g1, x, {}, &eqs));
  std::vector<MixedProfile> only{x};
  EXPECT_FALSE(check_condition("second-ne", g1, x, {}, &only));
  EXPECT_EQ(code_of([&] { check_condition("no-such-row", g1, x, {}); }), ErrorCode::kUnknownProblemId);
  EXPECT_FALSE(condition_ids().empty());
}

TEST(AnalysisProperty, WitnessesVerify) {
  testgen::Rng rng(42);
  for (int t = 0; t < 30; ++t) {
    auto g = testgen::random_game(rng, {2, 2, 2}, 3, 2);
    auto x = testgen::random_profile(rng, g);
    Verdict ne = check_NE(g, x);
    if (ne.status == VerdictStatus::kNo) {
      auto dev = x;
      dev[ne.deviation->player] = Strategy(g.actions(ne.deviation->player), QuadAlgebraic(0));
      dev[ne.deviation->player][ne.deviation->action] = 1;
      int p = ne.deviation->player;
      EXPECT_EQ(testgen::brute_payoff(g, dev)[p] - testgen::brute_payoff(g, x)[p], ne.deviation->gain);
      EXPECT_GT(ne.deviation->gain.sign(), 0);
    }
    Verdict s = check_strong(g, x);
    if (s.status == VerdictStatus::kNo) expect_witness(g, x, s);
  }
}

TEST(AnalysisProperty, VertexBoundOfMultilinearFunctions) {
  testgen::Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    auto g = testgen::random_game(rng, {3, 2, 3}, 5, 3);
    // Sub-region: each player's simplex is cut down to the hull of two or
    // three random points; its vertices are the products of those points.
    std::vector<std::vector<Strategy>> corners(3);
    for (int p = 0; p < 3; ++p) {
      int c = testgen::uniform_int(rng, 2, 3);
      for (int i = 0; i < c; ++i) corners[p].push_back(testgen::simplex_point(rng, g.actions(p), 6));
    }
    std::vector<QuadAlgebraic> vmax(3);
    bool first = true;
    for (const auto& a : corners[0]) {
      for (const auto& b : corners[1]) {
        for (const auto& c : corners[2]) {
          auto u = eval_payoff(g, {a, b, c});
          for (int p = 0; p < 3; ++p) vmax[p] = first ? u[p] : std::max(vmax[p], u[p]);
          first = false;
        }
      }
    }
    for (int s = 0; s < 1000; ++s) {
      MixedProfile x;
      for (int p = 0; p < 3; ++p) {
        auto w = testgen::simplex_point(rng, static_cast<int>(corners[p].size()), 9);
        Strategy mix(g.actions(p));
        for (std::size_t i = 0; i < corners[p].size(); ++i) {
          for (int a = 0; a < g.actions(p); ++a) mix[a] += w[i] * corners[p][i][a];
        }
        x.push_back(mix);
      }
      auto u = eval_payoff(g, x);
      for (int p = 0; p < 3; ++p) ASSERT_LE(u[p], vmax[p]);
    }
  }
}
