#include "nashgadgets/gadgets.hpp"

#include <array>
#include <algorithm>

#include "nashgadgets/errors.hpp"

namespace nashgadgets {

namespace {

using Cell = std::array<Rational, 3>;
// cells[a1][a2][a3], index 0 = G and 1 = ⊥
using Cube = std::array<std::array<std::array<Cell, 2>, 2>, 2>;

StrategicGame from_cube(const Cube& c, const std::string& kind, std::vector<std::string> labels) {
  StrategicGame g({2, 2, 2});
  for (int p = 0; p < 3; ++p) g.set_labels(p, labels);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int d = 0; d < 2; ++d) {
        const Cell& v = c[a][b][d];
        g.set_payoffs({a, b, d}, {v[0], v[1], v[2]});
      }
    }
  }
  g.meta()["kind"] = kind;
  return g;
}

void require_u(const Rational& u) {
  if (u.sign() < 0) throw Error(ErrorCode::kBadParameter, "u must be non-negative");
}

Cell cell(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

int h2_u2(int a2, int a3, int k) {
  if (a2 == a3) return 1;
  if (a2 == (a3 + 1) % k) return -1;
  return 0;
}

void require_g1(const StrategicGame& g1) {
  if (g1.players() != 3) throw Error(ErrorCode::kBadPlayerCount, "G1 games have 3 players");
  for (int p = 0; p < 3; ++p) {
    int n = g1.actions(p);
    if (g1.label(p, n - 1) != kBot) throw Error(ErrorCode::kShapeMismatch, "expected a G1 game with ⊥ as last action");
    for (int a = 0; a + 1 < n; ++a) {
      if (is_bot_label(g1.label(p, a))) throw Error(ErrorCode::kShapeMismatch, "expected a single ⊥ per player");
    }
  }
}

}  // namespace

std::string gadget_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kH1: return "h1";
    case GadgetKind::kH2: return "h2";
    case GadgetKind::kH3: return "h3";
    case GadgetKind::kH4: return "h4";
    case GadgetKind::kH5: return "h5";
    case GadgetKind::kG0: return "g0";
    case GadgetKind::kG1: return "g1";
    case GadgetKind::kG2: return "g2";
    case GadgetKind::kG3: return "g3";
    case GadgetKind::kG4: return "g4";
    case GadgetKind::kG5: return "g5";
  }
  return "?";
}

GadgetKind parse_gadget_kind(const std::string& name) {
  for (auto k : {GadgetKind::kH1, GadgetKind::kH2, GadgetKind::kH3, GadgetKind::kH4, GadgetKind::kH5, GadgetKind::kG0,
                 GadgetKind::kG1, GadgetKind::kG2, GadgetKind::kG3, GadgetKind::kG4, GadgetKind::kG5}) {
    if (gadget_name(k) == name) return k;
  }
  throw Error(ErrorCode::kBadParameter, "unknown gadget '" + name + "'");
}

StrategicGame build_H1(const Rational& u) {
  require_u(u);
  Cube c;
  c[0][0][0] = {2 * u, -u, -u};
  c[0][0][1] = cell(1, -1, 0);
  c[0][1][0] = cell(1, 0, -1);
  c[0][1][1] = cell(-4, 2, 2);
  c[1][0][0] = cell(0, 0, 0);
  c[1][0][1] = cell(2, -3, 1);
  c[1][1][0] = cell(2, 1, -3);
  c[1][1][1] = cell(-2, 1, 1);
  auto g = from_cube(c, "h1", {"G", kBot});
  g.meta()["u"] = u.str();
  return g;
}

StrategicGame build_H3(const Rational& u) {
  require_u(u);
  Cube c;
  c[0][0][0] = {2 * u, -u, -u};
  c[0][0][1] = cell(0, 0, 0);
  c[0][1][0] = cell(0, 0, 0);
  c[0][1][1] = cell(1, 1, 1);
  c[1][0][0] = cell(0, 0, 0);
  c[1][0][1] = cell(1, 1, 1);
  c[1][1][0] = cell(1, 1, 1);
  c[1][1][1] = cell(2, 2, 2);
  auto g = from_cube(c, "h3", {"G", kBot});
  g.meta()["u"] = u.str();
  return g;
}

StrategicGame build_H4(const Rational& u) {
  require_u(u);
  Cube c;
  c[0][0][0] = {2 * u, -u, -u};
  c[0][0][1] = cell(-3, -3, 0);
  c[0][1][0] = cell(-3, 0, -3);
  c[0][1][1] = cell(-2, -2, -2);
  c[1][0][0] = cell(0, -3, -3);
  c[1][0][1] = cell(-2, -2, -2);
  c[1][1][0] = cell(-2, -2, -2);
  c[1][1][1] = cell(-1, -1, -1);
  auto g = from_cube(c, "h4", {"G", kBot});
  g.meta()["u"] = u.str();
  return g;
}

StrategicGame build_H5() {
  Cube c;
  c[0][0][0] = cell(-4, 2, 2);
  c[0][0][1] = cell(-2, 1, 1);
  c[0][1][0] = cell(-2, 1, 1);
  c[0][1][1] = cell(0, 0, 0);
  c[1][0][0] = cell(0, 0, 0);
  c[1][0][1] = cell(-2, 1, 1);
  c[1][1][0] = cell(-2, 1, 1);
  c[1][1][1] = cell(-6, 3, 3);
  return from_cube(c, "h5", {"1", "2"});
}

StrategicGame build_H2(int k) {
  if (k < 2) throw Error(ErrorCode::kBadParameter, "k must be at least 2");
  StrategicGame g({1, k, k});
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  g.set_labels(0, {"-"});
  g.set_labels(1, labels);
  g.set_labels(2, labels);
  for (int a2 = 0; a2 < k; ++a2) {
    for (int a3 = 0; a3 < k; ++a3) {
      int v = h2_u2(a2, a3, k);
      g.set_payoffs({0, a2, a3}, {Rational(0), Rational(v), Rational(-v)});
    }
  }
  g.meta()["kind"] = "h2";
  g.meta()["k"] = std::to_string(k);
  return g;
}

StrategicGame build_H(const GadgetId& id) {
  switch (id.kind) {
    case GadgetKind::kH1: return build_H1(id.u);
    case GadgetKind::kH2: return build_H2(id.k);
    case GadgetKind::kH3: return build_H3(id.u);
    case GadgetKind::kH4: return build_H4(id.u);
    case GadgetKind::kH5: return build_H5();
    default: throw Error(ErrorCode::kBadParameter, "not an H gadget: " + gadget_name(id.kind));
  }
}

StrategicGame build_G0(const BilinearSystem& bsys) {
  validate_bilinear(bsys);
  int ell = static_cast<int>(bsys.matrices.size());
  int dim = bsys.dim;
  StrategicGame g({2 * ell, dim, dim});
  std::vector<std::string> l1, l2, l3;
  for (int k = 1; k <= ell; ++k) {
    l1.push_back("(+," + std::to_string(k) + ")");
    l1.push_back("(-," + std::to_string(k) + ")");
  }
  for (int i = 1; i <= dim; ++i) {
    l2.push_back("x" + std::to_string(i));
    l3.push_back("y" + std::to_string(i));
  }
  g.set_labels(0, l1);
  g.set_labels(1, l2);
  g.set_labels(2, l3);
  for (int k = 0; k < ell; ++k) {
    for (int s = 0; s < 2; ++s) {
      int sign = s == 0 ? 1 : -1;
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          Rational v(mpz_class(sign * bsys.matrices[k][i][j]));
          g.set_payoffs({2 * k + s, i, j}, {2 * v, -v, -v});
        }
      }
    }
  }
  g.meta()["kind"] = "g0";
  g.meta()["dim"] = std::to_string(dim);
  g.meta()["ell"] = std::to_string(ell);
  return g;
}

StrategicGame extend_with_hgadget(const StrategicGame& g0, const StrategicGame& h, bool simple_bot) {
  if (g0.players() != 3 || h.players() != 3) throw Error(ErrorCode::kBadPlayerCount, "gadget extension needs 3 players");
  for (int p = 0; p < 3; ++p) {
    if (h.actions(p) != 2 || h.label(p, 1) != kBot) {
      throw Error(ErrorCode::kShapeMismatch, "H gadget must give every player the actions {G, ⊥}");
    }
  }
  std::vector<int> counts = g0.action_counts();
  for (auto& c : counts) ++c;
  StrategicGame g(counts);
  for (int p = 0; p < 3; ++p) {
    auto ls = g0.labels(p);
    ls.push_back(kBot);
    g.set_labels(p, ls);
  }
  for (std::size_t idx = 0; idx < g.cell_count(); ++idx) {
    PureProfile a = g.profile_at(idx);
    std::array<int, 3> hidx{};
    bool bot = false;
    for (int p = 0; p < 3; ++p) {
      hidx[p] = a[p] == counts[p] - 1 ? 1 : 0;
      bot = bot || hidx[p];
    }
    if (!bot) {
      for (int p = 0; p < 3; ++p) g.set_payoff(idx, p, g0.payoff(a, p));
    } else if (!simple_bot) {
      PureProfile b{hidx[0], hidx[1], hidx[2]};
      for (int p = 0; p < 3; ++p) g.set_payoff(idx, p, h.payoff(b, p));
    }
  }
  g.meta() = g0.meta();
  std::string hk = h.meta_value("kind");
  g.meta()["kind"] = hk == "h3" ? "g3" : (hk == "h4" ? "g4" : "g1");
  if (simple_bot) g.meta()["simple_bot"] = "1";
  return g;
}

StrategicGame build_G2(const StrategicGame& g1) {
  require_g1(g1);
  int k = *std::max_element(g1.action_counts().begin(), g1.action_counts().end());
  std::vector<int> counts = g1.action_counts();
  counts[1] += k - 1;
  counts[2] += k - 1;
  StrategicGame g(counts);
  g.set_labels(0, g1.labels(0));
  for (int p = 1; p < 3; ++p) {
    auto ls = g1.labels(p);
    ls.pop_back();
    for (int i = 0; i < k; ++i) ls.push_back("(" + kBot + "," + std::to_string(i) + ")");
    g.set_labels(p, ls);
  }
  std::vector<int> base = g1.action_counts();
  for (std::size_t idx = 0; idx < g.cell_count(); ++idx) {
    PureProfile a = g.profile_at(idx);
    PureProfile t = a;
    std::array<int, 3> bot_i{-1, -1, -1};
    for (int p = 1; p < 3; ++p) {
      if (a[p] >= base[p] - 1) {
        bot_i[p] = a[p] - (base[p] - 1);
        t[p] = base[p] - 1;
      }
    }
    bool all_bot = a[0] == base[0] - 1 && bot_i[1] >= 0 && bot_i[2] >= 0;
    if (all_bot) {
      int v = h2_u2(bot_i[1], bot_i[2], k);
      g.set_payoffs(a, {Rational(-2), Rational(1 + v), Rational(1 - v)});
    } else {
      for (int p = 0; p < 3; ++p) g.set_payoff(idx, p, g1.payoff(t, p));
    }
  }
  g.meta() = g1.meta();
  g.meta()["kind"] = "g2";
  g.meta()["k"] = std::to_string(k);
  return g;
}

StrategicGame build_G5(const StrategicGame& g1) {
  require_g1(g1);
  StrategicGame h5 = build_H5();
  std::vector<int> base = g1.action_counts();
  std::vector<int> counts = base;
  for (auto& c : counts) ++c;
  StrategicGame g(counts);
  for (int p = 0; p < 3; ++p) {
    auto ls = g1.labels(p);
    ls.pop_back();
    ls.push_back("(" + kBot + ",1)");
    ls.push_back("(" + kBot + ",2)");
    g.set_labels(p, ls);
  }
  Rational sixth(1, 6);
  std::vector<Rational> offset{Rational(-2), Rational(1), Rational(1)};
  for (std::size_t idx = 0; idx < g.cell_count(); ++idx) {
    PureProfile a = g.profile_at(idx);
    PureProfile t = a;
    PureProfile h(3);
    bool all_bot = true;
    for (int p = 0; p < 3; ++p) {
      if (a[p] >= base[p] - 1) {
        h[p] = a[p] - (base[p] - 1);
        t[p] = base[p] - 1;
      } else {
        all_bot = false;
      }
    }
    for (int p = 0; p < 3; ++p) {
      g.set_payoff(idx, p, all_bot ? offset[p] + sixth * h5.payoff(h, p) : g1.payoff(t, p));
    }
  }
  g.meta() = g1.meta();
  g.meta()["kind"] = "g5";
  return g;
}

StrategicGame build_G(GadgetKind kind, const BilinearSystem& bsys, bool simple_bot) {
  StrategicGame g0 = build_G0(bsys);
  switch (kind) {
    case GadgetKind::kG0: return g0;
    case GadgetKind::kG1: return extend_with_hgadget(g0, build_H1(0), simple_bot);
    case GadgetKind::kG2: return build_G2(extend_with_hgadget(g0, build_H1(0)));
    case GadgetKind::kG3: return extend_with_hgadget(g0, build_H3(0), simple_bot);
    case GadgetKind::kG4: return extend_with_hgadget(g0, build_H4(0), simple_bot);
    case GadgetKind::kG5: return build_G5(extend_with_hgadget(g0, build_H1(0)));
    default: throw Error(ErrorCode::kBadParameter, "not a G gadget: " + gadget_name(kind));
  }
}

bool is_bot_label(const std::string& label) {
  return starts_with(label, kBot) || starts_with(label, "(" + kBot);
}

MixedProfile lift_solution(const BilinearSystem& bsys, const std::vector<QuadAlgebraic>& x,
                           const std::vector<QuadAlgebraic>& y, const StrategicGame& target) {
  auto q = eval_bilinear(bsys, x, y);
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (!q[k].is_zero()) {
      throw Error(ErrorCode::kNotASolution, "q" + std::to_string(k + 1) + "(x,y) = " + q[k].str());
    }
  }
  if (target.players() != 3) throw Error(ErrorCode::kBadPlayerCount, "lift targets 3-player games");
  MixedProfile prof(3);
  for (int p = 0; p < 3; ++p) prof[p].assign(target.actions(p), QuadAlgebraic(0));
  std::vector<int> p1;
  for (int a = 0; a < target.actions(0); ++a) {
    const auto& l = target.label(0, a);
    if (starts_with(l, "(+,") || starts_with(l, "(-,")) p1.push_back(a);
  }
  if (p1.size() != 2 * bsys.matrices.size()) throw Error(ErrorCode::kShapeMismatch, "target does not match the system");
  QuadAlgebraic w(Rational(1, static_cast<long>(p1.size())));
  for (int a : p1) prof[0][a] = w;
  for (int i = 1; i <= bsys.dim; ++i) {
    int ax = target.find_action(1, "x" + std::to_string(i));
    int ay = target.find_action(2, "y" + std::to_string(i));
    if (ax < 0 || ay < 0) throw Error(ErrorCode::kShapeMismatch, "target does not match the system");
    prof[1][ax] = x[i - 1];
    prof[2][ay] = y[i - 1];
  }
  return prof;
}

std::optional<std::pair<std::vector<QuadAlgebraic>, std::vector<QuadAlgebraic>>> project_profile(
    const StrategicGame& game, const MixedProfile& x) {
  validate_profile(game, x);
  std::vector<QuadAlgebraic> out[2];
  for (int p = 1; p < 3; ++p) {
    std::string prefix = p == 1 ? "x" : "y";
    QuadAlgebraic mass;
    for (int i = 1;; ++i) {
      int a = game.find_action(p, prefix + std::to_string(i));
      if (a < 0) break;
      out[p - 1].push_back(x[p][a]);
      mass += x[p][a];
    }
    if (mass.is_zero()) return std::nullopt;
    for (auto& v : out[p - 1]) v /= mass;
  }
  return std::make_pair(out[0], out[1]);
}

}  // namespace nashgadgets
