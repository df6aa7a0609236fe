#include "suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "nashgadgets/errors.hpp"
#include "nashgadgets/gadgets.hpp"
#include "nashgadgets/symmetrize.hpp"

namespace nashgadgets::cli {

namespace {

using Suite = std::function<void(std::vector<Claim>&, std::mt19937_64&)>;

void claim(std::vector<Claim>& out, std::string name, bool pass, std::string detail = {}) {
  out.push_back({std::move(name), pass, std::move(detail)});
}

MixedProfile pure(const StrategicGame& g, int action) {
  return pure_as_mixed(g, PureProfile(g.players(), action));
}

// Every player on their last action, which is ⊥ in the gadget games.
MixedProfile bot_profile(const StrategicGame& g) {
  PureProfile a;
  for (int p = 0; p < g.players(); ++p) a.push_back(g.actions(p) - 1);
  return pure_as_mixed(g, a);
}

// Enumerated set equals the expected one: same size, every found profile
// matches an expected profile exactly (or within 1e-9 when NUMERIC).
bool same_set(const std::vector<Equilibrium>& found, const std::vector<MixedProfile>& expected, std::string& detail) {
  detail = std::to_string(found.size()) + " found, " + std::to_string(expected.size()) + " expected";
  if (found.size() != expected.size()) return false;
  for (const auto& e : found) {
    bool hit = false;
    for (const auto& x : expected) {
      if (e.flag == Exactness::kExact) {
        hit = hit || e.profile == x;
        continue;
      }
      double d = 0;
      for (std::size_t p = 0; p < x.size(); ++p) {
        for (std::size_t a = 0; a < x[p].size(); ++a) {
          d = std::max(d, std::fabs(e.profile[p][a].to_double() - x[p][a].to_double()));
        }
      }
      hit = hit || d <= 1e-9;
    }
    if (!hit) {
      detail += "; unexpected " + profile_str(e.profile);
      return false;
    }
  }
  return true;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

void h1_suite(std::vector<Claim>& out, std::mt19937_64&) {
  for (int u : {0, 1, 2}) {
    auto g = build_H1(u);
    std::vector<MixedProfile> want{pure(g, 1)};
    if (u == 0) want.insert(want.begin(), pure(g, 0));
    std::string d;
    bool ok = same_set(find_equilibria(g), want, d);
    claim(out, "H1(" + std::to_string(u) + ") equilibria are " + (u == 0 ? "{GGG, ⊥⊥⊥}" : "{⊥⊥⊥}"), ok, d);
  }
  auto g = build_H1(1);
  Verdict v = check_NE(g, pure(g, 0));
  claim(out, "H1(1): GGG is not a Nash equilibrium", v.status == VerdictStatus::kNo,
        v.deviation ? "player " + std::to_string(v.deviation->player + 1) + " gains " + v.deviation->gain.str() : "");
}

void h2_suite(std::vector<Claim>& out, std::mt19937_64&) {
  for (int k = 2; k <= 5; ++k) {
    auto g = build_H2(k);
    Strategy uni(k, QuadAlgebraic(Rational(1, k)));
    std::vector<MixedProfile> want{{Strategy{QuadAlgebraic(1)}, uni, uni}};
    std::string d;
    bool ok = same_set(find_equilibria(g), want, d);
    claim(out, "H2(" + std::to_string(k) + ") has the unique uniform equilibrium", ok, d);
  }
}

void h3_suite(std::vector<Claim>& out, std::mt19937_64&) {
  for (int u : {0, 1}) {
    auto g = build_H3(u);
    std::vector<MixedProfile> want{pure(g, 1)};
    if (u == 0) want.insert(want.begin(), pure(g, 0));
    std::string d;
    claim(out, "H3(" + std::to_string(u) + ") equilibrium set", same_set(find_equilibria(g), want, d), d);
    Verdict p = check_pareto(g, pure(g, 1));
    claim(out, "H3(" + std::to_string(u) + "): ⊥⊥⊥ is Pareto optimal", p.status == VerdictStatus::kYes);
  }
  auto g = build_H3(0);
  Verdict p = check_pareto(g, pure(g, 0));
  bool ok = p.status == VerdictStatus::kNo && p.coalition;
  std::string d;
  if (p.coalition) {
    d = "dominated by " + profile_str(p.coalition->profile);
    auto base = eval_payoff(g, pure(g, 0));
    auto pay = eval_payoff(g, p.coalition->profile);
    for (std::size_t t = 0; t < p.coalition->members.size(); ++t) {
      int j = p.coalition->members[t];
      ok = ok && pay[j] - base[j] == p.coalition->gains[t];
    }
  }
  claim(out, "H3(0): GGG is not Pareto optimal", ok, d);
}

void h4_suite(std::vector<Claim>& out, std::mt19937_64&) {
  for (int u : {0, 1}) {
    auto g = build_H4(u);
    std::vector<MixedProfile> want{pure(g, 1)};
    if (u == 0) want.insert(want.begin(), pure(g, 0));
    std::string d;
    claim(out, "H4(" + std::to_string(u) + ") equilibrium set", same_set(find_equilibria(g), want, d), d);
  }
  auto g = build_H4(0);
  claim(out, "H4(0): GGG is Pareto optimal", check_pareto(g, pure(g, 0)).status == VerdictStatus::kYes);
  claim(out, "H4(0): GGG is a strong equilibrium", check_strong(g, pure(g, 0)).status == VerdictStatus::kYes);
}

void h5_suite(std::vector<Claim>& out, std::mt19937_64&) {
  auto g = build_H5();
  auto eq = find_equilibria(g);
  claim(out, "H5 has a unique equilibrium", eq.size() == 1, std::to_string(eq.size()) + " found");
  if (eq.size() != 1) return;
  const auto& x = eq[0].profile;
  QuadAlgebraic p1 = QuadAlgebraic(1) - QuadAlgebraic(Rational(1, 6)) * QuadAlgebraic::sqrt_of(6);
  QuadAlgebraic p23 = QuadAlgebraic(3) - QuadAlgebraic::sqrt_of(6);
  bool exact = eq[0].flag == Exactness::kExact && x[0][0] == p1 && x[1][0] == p23 && x[2][0] == p23;
  claim(out, "H5: Player 1 plays action 1 with probability 1-1/sqrt(6) = " + fixed(x[0][0].to_double()), exact,
        x[0][0].str());
  claim(out, "H5: Players 2 and 3 play action 1 with probability 3-sqrt(6) = " + fixed(x[1][0].to_double()),
        exact && std::fabs(x[1][0].to_double() - (3 - std::sqrt(6.0))) < 1e-12, x[1][0].str());
  QuadAlgebraic four(4), two(2);
  bool pay = eq[0].payoffs[0] == -four * p23 && eq[0].payoffs[1] == two * p23 && eq[0].payoffs[2] == two * p23;
  claim(out, "H5: payoffs (-4(3-sqrt(6)), 2(3-sqrt(6)), 2(3-sqrt(6)))", pay);
}

Strategy random_simplex_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> w(0, 9);
  std::vector<int> ws(n);
  int total = 0;
  while (total == 0) {
    total = 0;
    for (auto& v : ws) total += (v = w(rng));
  }
  Strategy s;
  for (int v : ws) s.emplace_back(Rational(v, total));
  return s;
}

void g0_identity_suite(std::vector<Claim>& out, std::mt19937_64& rng) {
  int bad = 0, samples = 0;
  for (int inst = 0; inst < 5; ++inst) {
    std::uniform_int_distribution<int> dn(1, 3), dl(1, 3);
    auto planted = plant_system(rng, dn(rng), dl(rng));
    auto bsys = bilinearize_homogenize(planted.sys);
    auto g0 = build_G0(bsys);
    int ell = static_cast<int>(bsys.matrices.size());
    for (int s = 0; s < 40; ++s, ++samples) {
      std::uniform_int_distribution<int> pk(1, ell), ps(0, 1);
      int k = pk(rng);
      int sign = ps(rng) ? 1 : -1;
      Strategy x = random_simplex_point(rng, bsys.dim), y = random_simplex_point(rng, bsys.dim);
      std::string lbl = std::string("(") + (sign > 0 ? "+" : "-") + "," + std::to_string(k) + ")";
      MixedProfile prof{Strategy(g0.actions(0), QuadAlgebraic(0)), x, y};
      prof[0][g0.find_action(0, lbl)] = 1;
      auto u = eval_payoff(g0, prof);
      QuadAlgebraic q = eval_bilinear(bsys, x, y)[k - 1] * QuadAlgebraic(sign);
      if (!(u[0] / QuadAlgebraic(2) == q && -u[1] == q && -u[2] == q)) ++bad;
    }
  }
  claim(out, "G0: u1/2 = -u2 = -u3 = s*q_k(x,y) on " + std::to_string(samples) + " samples", bad == 0,
        std::to_string(bad) + " mismatches");
}

std::vector<QuadAlgebraic> embed_planted(const PlantedSystem& p) {
  std::vector<QuadAlgebraic> x(p.solution.begin(), p.solution.end());
  return simplex_embed(promise_point(x));
}

void g1_suite(std::vector<Claim>& out, std::mt19937_64& rng) {
  int fails = 0;
  std::string first;
  for (int inst = 0; inst < 20; ++inst) {
    std::uniform_int_distribution<int> d(1, 3);
    auto planted = plant_system(rng, d(rng), d(rng));
    auto bsys = bilinearize_homogenize(normalize_to_promise(planted.sys));
    auto g1 = build_G(GadgetKind::kG1, bsys);
    auto z = embed_planted(planted);
    auto x = lift_solution(bsys, z, z, g1);
    Verdict v = check_NE(g1, x);
    bool ok = v.status == VerdictStatus::kYes;
    for (const auto& p : v.payoffs) ok = ok && p.is_zero();
    for (const auto& s : x) {
      for (const auto& a : s) ok = ok && a <= QuadAlgebraic(Rational(1, 2));
    }
    ok = ok && check_NE(g1, bot_profile(g1)).status == VerdictStatus::kYes;
    if (!ok && fails++ == 0) first = format_system(planted.sys);
  }
  claim(out, "G1: lifted planted solutions are equilibria with payoffs (0,0,0), probabilities <= 1/2, and ⊥⊥⊥ is an equilibrium",
        fails == 0, std::to_string(fails) + " failures" + (first.empty() ? "" : "; first:\n" + first));
  for (const char* text : {"qsys 1\nvars 1\neq 1:0:0\n", "qsys 1\nvars 1\neq 1:1:1 1:0:0\n"}) {
    auto g1 = build_G(GadgetKind::kG1, bilinearize_homogenize(parse_system(text)));
    SolveOptions o;
    o.max_support = 2;
    std::string d;
    bool ok = same_set(find_equilibria(g1, o), {bot_profile(g1)}, d);
    claim(out, "G1 of an unsolvable system has only ⊥⊥⊥", ok, d);
  }
}

void strong_suite(std::vector<Claim>& out, std::mt19937_64&) {
  auto h1 = build_H1(1);
  Verdict s = check_strong(h1, pure(h1, 1));
  claim(out, "H1(1): ⊥⊥⊥ is a strong equilibrium (exact)", s.status == VerdictStatus::kYes && s.exact,
        std::to_string(s.cells) + " cells");
  auto h0 = build_H1(0);
  Verdict n = check_strong(h0, pure(h0, 0));
  bool ok = n.status == VerdictStatus::kNo && n.coalition;
  if (ok) {
    auto base = eval_payoff(h0, pure(h0, 0));
    auto pay = eval_payoff(h0, n.coalition->profile);
    for (std::size_t t = 0; t < n.coalition->members.size(); ++t) {
      ok = ok && pay[n.coalition->members[t]] - base[n.coalition->members[t]] == n.coalition->gains[t] &&
           n.coalition->gains[t].sign() > 0;
    }
  }
  claim(out, "H1(0): GGG is not a strong equilibrium", ok,
        n.coalition ? "coalition " + join_ints(n.B1) + " via " + profile_str(n.coalition->profile) : "");
  CoalitionQuery q;
  q.B1 = {0, 1};
  q.B3 = {2};
  Verdict c = coalition_feasible(h1, pure(h1, 1), q);
  claim(out, "H1(1): p1p2+4p2-2p1 > 0, p1p2-4p2+p1 > 0 has no solution on [0,1]^2",
        c.status == VerdictStatus::kNo && c.exact, std::to_string(c.cells) + " cells");
  Verdict gq = grid_oracle(h1, pure(h1, 1), q, 64);
  claim(out, "H1(1): grid scan at 1/64 finds no improving pair", gq.status == VerdictStatus::kNo);
}

struct Pipeline {
  PlantedSystem planted;
  BilinearSystem bsys;
  StrategicGame g0;
  std::vector<QuadAlgebraic> z;
};

Pipeline planted_pipeline(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 2);
  Pipeline p;
  p.planted = plant_system(rng, d(rng), d(rng));
  p.bsys = bilinearize_homogenize(normalize_to_promise(p.planted.sys));
  p.g0 = build_G0(p.bsys);
  p.z = embed_planted(p.planted);
  return p;
}

void symmetric_suite(std::vector<Claim>& out, std::mt19937_64& rng) {
  int fails = 0, asym = 0, d1fails = 0;
  for (int inst = 0; inst < 10; ++inst) {
    auto p = planted_pipeline(rng);
    auto [gplus, info] = build_Gplus(p.g0);
    auto d0 = build_D0(gplus, D0Variant::kRoleSum);
    auto y = lift_symmetric(p.bsys, p.z, d0);
    auto pay = eval_payoff(d0, y);
    bool ok = check_NE(d0, y).status == VerdictStatus::kYes;
    for (const auto& v : pay) ok = ok && v == QuadAlgebraic(info.K);
    fails += ok ? 0 : 1;
    auto d1 = extend_symmetric(d0, info, DVariant::kD1);
    auto d4 = extend_symmetric(d0, info, DVariant::kD4);
    auto dp1 = extend_symmetric(build_D0(build_GplusPrime(p.g0), D0Variant::kRolePrime), info, DVariant::kDPrime1);
    for (const auto* g : {&d0, &d1, &d4, &dp1}) asym += is_symmetric_game(*g) ? 0 : 1;
    auto bot = bot_profile(d1);
    auto bpay = eval_payoff(d1, bot);
    bool bok = check_NE(d1, bot).status == VerdictStatus::kYes;
    for (const auto& v : bpay) bok = bok && v == QuadAlgebraic(info.K + Rational(1));
    d1fails += bok ? 0 : 1;
  }
  claim(out, "D0: symmetric lift is an equilibrium with payoff K = 2M/9", fails == 0, std::to_string(fails) + " failures");
  claim(out, "D0, D1, D4 and D'1 are symmetric games", asym == 0, std::to_string(asym) + " failures");
  claim(out, "D1: ⊥⊥⊥ is an equilibrium with payoff K+1", d1fails == 0, std::to_string(d1fails) + " failures");
}

void nonsymmetric_suite(std::vector<Claim>& out, std::mt19937_64& rng) {
  int fails = 0, bots = 0;
  for (int inst = 0; inst < 10; ++inst) {
    auto p = planted_pipeline(rng);
    auto info = symmetrization_info(p.g0);
    auto dp1 = extend_symmetric(build_D0(build_GplusPrime(p.g0), D0Variant::kRolePrime), info, DVariant::kDPrime1);
    auto x = lift_role_assigned(p.bsys, p.z, dp1);
    Verdict v = check_NE(dp1, x);
    bool ok = v.status == VerdictStatus::kYes && !is_symmetric_profile(x);
    for (const auto& u : v.payoffs) ok = ok && u == QuadAlgebraic(info.M);
    fails += ok ? 0 : 1;
    bots += check_NE(dp1, bot_profile(dp1)).status == VerdictStatus::kYes ? 0 : 1;
  }
  claim(out, "D'1: role-assigned lift is a non-symmetric equilibrium with payoff M", fails == 0,
        std::to_string(fails) + " failures");
  claim(out, "D'1: ⊥⊥⊥ is an equilibrium", bots == 0, std::to_string(bots) + " failures");
}

void irrational_suite(std::vector<Claim>& out, std::mt19937_64& rng) {
  auto bsys = bilinearize_homogenize(augment_irrational(parse_system("qsys 1\nvars 1\neq 1:0:1\n")));
  auto g1 = build_G(GadgetKind::kG1, bsys);
  SolveOptions o;
  o.max_support = 2;
  auto eq = find_equilibria(g1, o);
  int zero_pay = 0, rational = 0;
  for (const auto& e : eq) {
    bool zero = std::all_of(e.payoffs.begin(), e.payoffs.end(), [](const QuadAlgebraic& v) { return v.is_zero(); });
    if (!zero) continue;
    ++zero_pay;
    bool irr = e.flag == Exactness::kExact &&
               std::any_of(e.profile.begin(), e.profile.end(), [](const Strategy& s) {
                 return std::any_of(s.begin(), s.end(), [](const QuadAlgebraic& v) { return !v.is_rational(); });
               });
    rational += irr ? 0 : 1;
  }
  claim(out, "augmented G1: every payoff-0 equilibrium is irrational", zero_pay > 0 && rational == 0,
        std::to_string(zero_pay) + " payoff-0 equilibria, " + std::to_string(rational) + " rational");
  auto p = planted_pipeline(rng);
  auto g5 = build_G(GadgetKind::kG5, p.bsys);
  auto x = lift_solution(p.bsys, p.z, p.z, g5);
  bool rat = std::all_of(x.begin(), x.end(), [](const Strategy& s) {
    return std::all_of(s.begin(), s.end(), [](const QuadAlgebraic& v) { return v.is_rational(); });
  });
  claim(out, "G5: planted solution lifts to a rational equilibrium", rat && check_NE(g5, x).status == VerdictStatus::kYes);
  auto g5n = build_G(GadgetKind::kG5, bilinearize_homogenize(parse_system("qsys 1\nvars 1\neq 1:0:0\n")));
  auto eqn = find_equilibria(g5n, o);
  bool only = eqn.size() == 1 && eqn[0].flag == Exactness::kExact;
  if (only) {
    only = std::any_of(eqn[0].profile.begin(), eqn[0].profile.end(), [](const Strategy& s) {
      return std::any_of(s.begin(), s.end(), [](const QuadAlgebraic& v) { return !v.is_rational(); });
    });
  }
  claim(out, "G5 of an unsolvable system: only the irrational ⊥-equilibrium", only,
        std::to_string(eqn.size()) + " equilibria");
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> r = {
      {"h1", h1_suite},         {"h2", h2_suite},         {"h3", h3_suite},
      {"h4", h4_suite},         {"h5", h5_suite},         {"g0-identity", g0_identity_suite},
      {"g1", g1_suite},         {"strong", strong_suite}, {"symmetric", symmetric_suite},
      {"nonsymmetric", nonsymmetric_suite}, {"irrational", irrational_suite},
  };
  return r;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"h1", "h2",     "h3",        "h4",           "h5",        "g0-identity",
                                                 "g1", "strong", "symmetric", "nonsymmetric", "irrational"};
  return names;
}

SuiteResult run_suite(const std::string& name, unsigned long long seed) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::kBadParameter, "unknown suite " + name);
  SuiteResult r;
  r.suite = name;
  std::mt19937_64 rng(seed);
  auto t0 = std::chrono::steady_clock::now();
  try {
    it->second(r.claims, rng);
  } catch (const Error& e) {
    claim(r.claims, "suite ran without errors", false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace nashgadgets::cli
