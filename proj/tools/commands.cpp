#include "commands.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "nashgadgets/errors.hpp"
#include "nashgadgets/gadgets.hpp"
#include "nashgadgets/symmetrize.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace nashgadgets::cli {

namespace {

using nlohmann::json;

bool is_d_variant(const std::string& g) {
  return g == "d0" || g == "dp0" || g == "d1" || g == "d4" || g == "dp1";
}

BilinearSystem load_bilinear(const RunConfig& cfg) {
  if (cfg.in.empty()) throw Error(ErrorCode::kBadParameter, "--in is required for gadget " + cfg.gadget);
  std::string text = read_file(cfg.in);
  auto first = text.substr(0, text.find('\n'));
  if (split_ws(first).size() > 0 && split_ws(first)[0] == "bsys") {
    if (cfg.normalize || cfg.augment_irrational) {
      throw Error(ErrorCode::kBadParameter, "--normalize and --augment-irrational need a .qsys input");
    }
    return parse_bilinear(text);
  }
  QuadraticSystem sys = parse_system(text);
  if (cfg.augment_irrational) sys = augment_irrational(sys);
  if (cfg.normalize) sys = normalize_to_promise(sys);
  return bilinearize_homogenize(sys);
}

StrategicGame build_d(const std::string& name, const BilinearSystem& bsys) {
  auto g0 = build_G0(bsys);
  auto info = symmetrization_info(g0);
  bool prime = name == "dp0" || name == "dp1";
  auto d0 = prime ? build_D0(build_GplusPrime(g0), D0Variant::kRolePrime)
                  : build_D0(build_Gplus(g0).first, D0Variant::kRoleSum);
  if (name == "d0" || name == "dp0") return d0;
  DVariant v = name == "d1" ? DVariant::kD1 : (name == "d4" ? DVariant::kD4 : DVariant::kDPrime1);
  return extend_symmetric(d0, info, v);
}

std::string counts_str(const StrategicGame& g) {
  std::string s;
  for (int p = 0; p < g.players(); ++p) s += (p ? " " : "") + std::to_string(g.actions(p));
  return s;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& os) {
  if (cfg.gadget.empty()) throw Error(ErrorCode::kBadParameter, "--gadget is required");
  StrategicGame game;
  std::optional<BilinearSystem> bsys;
  if (is_d_variant(cfg.gadget)) {
    bsys = load_bilinear(cfg);
    game = build_d(cfg.gadget, *bsys);
  } else {
    GadgetKind kind = parse_gadget_kind(cfg.gadget);
    if (kind <= GadgetKind::kH5) {
      game = build_H(GadgetId{kind, Rational::parse(cfg.u), cfg.k});
    } else {
      bsys = load_bilinear(cfg);
      game = build_G(kind, *bsys, cfg.simple_bot);
    }
  }
  std::string text = format_game(game);
  bool roundtrip = parse_game(text) == game;
  if (!cfg.bsys_out.empty()) {
    if (!bsys) throw Error(ErrorCode::kBadParameter, "--bsys-out needs a system input");
    write_file(cfg.bsys_out, format_bilinear(*bsys));
  }
  if (cfg.out.empty()) {
    os << text;
    return roundtrip ? 0 : 1;
  }
  write_file(cfg.out, text);
  Report r;
  std::string symmetric_reason;
  bool zero_sum = is_zero_sum(game);
  bool symmetric = is_symmetric_game(game, &symmetric_reason);
  r.line("gadget " + cfg.gadget + ": " + std::to_string(game.players()) + " players, actions " + counts_str(game) +
         ", " + std::to_string(game.cell_count()) + " cells");
  r.line(std::string("zero-sum ") + (zero_sum ? "yes" : "no") + ", symmetric " + (symmetric ? "yes" : "no"));
  r.line(std::string("round-trip ") + (roundtrip ? "ok" : "FAILED") + ", written to " + cfg.out);
  r.record({{"command", "reduce"},
            {"gadget", cfg.gadget},
            {"actions", game.action_counts()},
            {"cells", game.cell_count()},
            {"zero_sum", zero_sum},
            {"symmetric", symmetric},
            {"roundtrip", roundtrip}});
  r.print(os);
  return roundtrip ? 0 : 1;
}

std::vector<int> parse_players(const std::string& text, int m) {
  std::vector<int> out;
  std::string item;
  for (char c : text + ",") {
    if (c != ',') {
      item += c;
      continue;
    }
    if (item.empty()) continue;
    int p = 0;
    try {
      p = std::stoi(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadParameter, "bad player list " + text);
    }
    if (p < 1 || p > m) throw Error(ErrorCode::kIndexOutOfRange, "player " + item + " out of range");
    out.push_back(p - 1);
    item.clear();
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MixedProfile load_profile(const RunConfig& cfg, const StrategicGame& game) {
  if (!cfg.profile.empty() && !cfg.pure.empty()) throw Error(ErrorCode::kBadParameter, "give --profile or --pure, not both");
  if (!cfg.profile.empty()) return parse_profile(read_file(cfg.profile));
  if (cfg.pure.empty()) throw Error(ErrorCode::kBadParameter, "--profile or --pure is required");
  auto labels = split_ws(cfg.pure);
  if (static_cast<int>(labels.size()) != game.players()) {
    throw Error(ErrorCode::kShapeMismatch, "--pure needs one label per player");
  }
  PureProfile a;
  for (int p = 0; p < game.players(); ++p) {
    int idx = game.find_action(p, labels[p]);
    if (idx < 0) throw Error(ErrorCode::kBadParameter, "player " + std::to_string(p + 1) + " has no action " + labels[p]);
    a.push_back(idx);
  }
  return pure_as_mixed(game, a);
}

void describe(Report& r, const StrategicGame& game, const Verdict& v) {
  r.line(std::string("status: ") + status_name(v.status) + (v.exact ? "" : " (resolution-qualified)"));
  if (!v.payoffs.empty()) {
    std::string s = "payoffs:";
    for (const auto& p : v.payoffs) s += " " + p.str();
    r.line(s);
  }
  if (v.deviation) {
    r.line("deviation: player " + std::to_string(v.deviation->player + 1) + " to " +
           game.label(v.deviation->player, v.deviation->action) + " gains " + v.deviation->gain.str());
  }
  if (v.coalition) {
    if (!v.B1.empty() || !v.B2.empty()) r.line("query: B1 " + join_ints(v.B1) + " B2 " + join_ints(v.B2));
    r.line("witness: " + profile_str(v.coalition->profile));
    std::string g = "gains:";
    for (std::size_t t = 0; t < v.coalition->members.size(); ++t) {
      g += " player " + std::to_string(v.coalition->members[t] + 1) + " " + v.coalition->gains[t].str();
    }
    r.line(g);
  }
  if (v.resolution) r.line("resolution: " + v.resolution->str());
  if (v.cells) r.line("cells: " + std::to_string(v.cells));
}

int cmd_check(const RunConfig& cfg, std::ostream& os) {
  if (cfg.in.empty()) throw Error(ErrorCode::kBadParameter, "--in is required");
  StrategicGame game = parse_game(read_file(cfg.in));
  MixedProfile x = load_profile(cfg, game);
  validate_profile(game, x);
  SearchOptions so;
  so.cell_budget = cfg.cell_budget;
  Report r;
  json rec{{"command", "check"}, {"property", cfg.property}};
  int code = 1;
  r.line("property: " + cfg.property);
  r.line("profile: " + profile_str(x));
  const std::string cond = "condition:";
  if (cfg.property.rfind(cond, 0) == 0) {
    std::string id = cfg.property.substr(cond.size());
    ConditionParams params;
    params.u = Rational::parse(cfg.u);
    params.k = cfg.k;
    std::vector<MixedProfile> eqs;
    bool needs_set = id == "second-ne" || id == "sne:second-ne";
    if (needs_set) {
      SolveOptions o;
      o.max_support = cfg.max_support;
      o.seed = cfg.seed;
      for (auto& e : find_equilibria(game, o)) eqs.push_back(e.profile);
    }
    bool value = check_condition(id, game, x, params, needs_set ? &eqs : nullptr, so);
    r.line(std::string("value: ") + (value ? "true" : "false"));
    rec["value"] = value;
    code = value ? 0 : 1;
  } else {
    Verdict v;
    if (cfg.property == "ne") {
      v = check_NE(game, x);
    } else if (cfg.property == "pareto") {
      v = check_pareto(game, x, so);
    } else if (cfg.property == "strong") {
      v = check_strong(game, x, so);
    } else if (cfg.property == "coalition") {
      CoalitionQuery q;
      q.B1 = parse_players(cfg.b1, game.players());
      q.B2 = parse_players(cfg.b2, game.players());
      for (int p = 0; p < game.players(); ++p) {
        if (std::find(q.B1.begin(), q.B1.end(), p) == q.B1.end() && std::find(q.B2.begin(), q.B2.end(), p) == q.B2.end()) {
          q.B3.push_back(p);
        }
      }
      q.eps = Rational::parse(cfg.eps);
      v = cfg.grid > 0 ? grid_oracle(game, x, q, cfg.grid) : coalition_feasible(game, x, q, so);
      v.B1 = q.B1;
      v.B2 = q.B2;
    } else {
      throw Error(ErrorCode::kBadParameter, "unknown property " + cfg.property);
    }
    describe(r, game, v);
    rec.update(verdict_json(v));
    code = v.status == VerdictStatus::kYes ? 0 : 1;
  }
  r.record(rec);
  r.print(os);
  return code;
}

int cmd_solve(const RunConfig& cfg, std::ostream& os) {
  if (cfg.in.empty()) throw Error(ErrorCode::kBadParameter, "--in is required");
  StrategicGame game = parse_game(read_file(cfg.in));
  SolveOptions o;
  o.max_support = cfg.max_support;
  o.tolerance = cfg.tolerance;
  o.seed = cfg.seed;
  o.budget = cfg.budget;
  auto eqs = find_equilibria(game, o);
  Report r;
  r.line(std::to_string(eqs.size()) + " equilibria");
  int i = 0;
  for (const auto& e : eqs) {
    const char* flag = e.flag == Exactness::kExact ? "EXACT" : "NUMERIC";
    r.line("#" + std::to_string(++i) + " " + flag + " " + profile_str(e.profile));
    std::string pay = "   payoffs:";
    for (const auto& p : e.payoffs) pay += " " + p.str();
    r.line(pay);
    json j{{"command", "solve"}, {"index", i}, {"flag", flag}, {"profile", profile_json(e.profile)}};
    json pj = json::array();
    for (const auto& p : e.payoffs) pj.push_back(p.literal());
    j["payoffs"] = pj;
    r.record(j);
  }
  r.print(os);
  return 0;
}

int cmd_lemmas(const RunConfig& cfg, std::ostream& os) {
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(cfg.suite);
  }
  Report r;
  bool all = true;
  for (const auto& n : names) {
    SuiteResult res = run_suite(n, cfg.seed);
    for (const auto& c : res.claims) {
      r.line(std::string(c.pass ? "PASS " : "FAIL ") + n + ": " + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]"));
      r.record({{"command", "lemmas"}, {"suite", n}, {"claim", c.name}, {"pass", c.pass}});
    }
    all = all && res.passed();
  }
  r.line(all ? "all claims hold" : "some claims failed");
  r.print(os);
  return all ? 0 : 1;
}

int cmd_roundtrip(const RunConfig& cfg, std::ostream& os) {
  std::string gadget = cfg.gadget.empty() ? "g1" : cfg.gadget;
  bool sym = gadget == "d0" || gadget == "d1" || gadget == "d4";
  bool role = gadget == "dp0" || gadget == "dp1";
  if (!sym && !role) {
    GadgetKind kind = parse_gadget_kind(gadget);
    if (kind <= GadgetKind::kH5) throw Error(ErrorCode::kBadParameter, "roundtrip needs a G or D gadget");
  }
  if (cfg.max_vars < 1 || cfg.max_equations < 1 || cfg.count < 1) {
    throw Error(ErrorCode::kBadParameter, "--count, --max-vars and --max-equations must be positive");
  }
  std::mt19937_64 rng(cfg.seed);
  Report r;
  int failures = 0;
  for (int i = 0; i < cfg.count; ++i) {
    std::uniform_int_distribution<int> dn(1, cfg.max_vars), dl(1, cfg.max_equations);
    int n = dn(rng), ell = dl(rng);
    auto planted = plant_system(rng, n, ell);
    auto bsys = bilinearize_homogenize(normalize_to_promise(planted.sys));
    std::vector<QuadAlgebraic> x0(planted.solution.begin(), planted.solution.end());
    auto z = simplex_embed(promise_point(x0));
    StrategicGame game;
    MixedProfile x;
    std::vector<QuadAlgebraic> back;
    if (sym || role) {
      game = build_d(gadget, bsys);
      x = sym ? lift_symmetric(bsys, z, game) : lift_role_assigned(bsys, z, game);
      auto proj = project_symmetric(game, x[1]);
      back = proj.conditional[1];
    } else {
      game = build_G(parse_gadget_kind(gadget), bsys);
      x = lift_solution(bsys, z, z, game);
      auto proj = project_profile(game, x);
      if (proj) back = proj->first;
    }
    Verdict v = check_NE(game, x);
    QuadAlgebraic residual(0);
    bool same = back.size() == z.size();
    for (std::size_t t = 0; same && t < z.size(); ++t) {
      QuadAlgebraic d = abs(back[t] - z[t]);
      if (d > residual) residual = d;
    }
    QuadAlgebraic sys_res(0);
    for (const auto& q : eval_system(planted.sys, x0)) {
      if (abs(q) > sys_res) sys_res = abs(q);
    }
    bool ok = v.status == VerdictStatus::kYes && same && residual.is_zero() && sys_res.is_zero();
    failures += ok ? 0 : 1;
    std::string pay;
    for (const auto& p : v.payoffs) pay += " " + p.str();
    r.line("instance " + std::to_string(i + 1) + ": n=" + std::to_string(n) + " l=" + std::to_string(ell) + " actions " +
           counts_str(game) + " NE " + status_name(v.status) + " payoffs" + pay + " projection residual " +
           (same ? residual.str() : "n/a"));
    json pj = json::array();
    for (const auto& p : v.payoffs) pj.push_back(p.literal());
    r.record({{"command", "roundtrip"},
              {"instance", i + 1},
              {"gadget", gadget},
              {"n", n},
              {"equations", ell},
              {"ne", status_name(v.status)},
              {"payoffs", pj},
              {"projection_residual", same ? residual.literal() : "n/a"},
              {"system_residual", sys_res.literal()},
              {"pass", ok}});
  }
  r.line(std::to_string(cfg.count - failures) + "/" + std::to_string(cfg.count) + " instances passed");
  r.print(os);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& os) {
  if (cfg.command == "reduce") return cmd_reduce(cfg, os);
  if (cfg.command == "check") return cmd_check(cfg, os);
  if (cfg.command == "solve") return cmd_solve(cfg, os);
  if (cfg.command == "lemmas") return cmd_lemmas(cfg, os);
  if (cfg.command == "roundtrip") return cmd_roundtrip(cfg, os);
  throw Error(ErrorCode::kBadParameter, "unknown command " + cfg.command);
}

}  // namespace nashgadgets::cli
