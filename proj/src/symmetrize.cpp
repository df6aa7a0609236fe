#include "nashgadgets/symmetrize.hpp"

#include "nashgadgets/errors.hpp"
#include "nashgadgets/gadgets.hpp"

namespace nashgadgets {

namespace {

void require_g0(const StrategicGame& g0) {
  if (g0.players() != 3) throw Error(ErrorCode::kBadPlayerCount, "symmetrization expects a 3-player game");
}

void annotate(StrategicGame& g, const std::string& kind, const SymmetrizationInfo& info) {
  g.meta()["kind"] = kind;
  g.meta()["M"] = info.M.str();
  g.meta()["K"] = info.K.str();
}

void require_solution(const BilinearSystem& bsys, const std::vector<QuadAlgebraic>& x) {
  auto q = eval_bilinear(bsys, x, x);
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (!q[k].is_zero()) throw Error(ErrorCode::kNotASolution, "q" + std::to_string(k + 1) + "(x,x) = " + q[k].str());
  }
}

// Strategy over the target's actions: block 1 uniform over the G0 actions
// of Player 1, block 2 and 3 following x; each block scaled by its weight.
Strategy block_strategy(const BilinearSystem& bsys, const std::vector<QuadAlgebraic>& x, const StrategicGame& target,
                        const std::array<QuadAlgebraic, 3>& weight) {
  Strategy s(target.actions(0), QuadAlgebraic(0));
  int ell = static_cast<int>(bsys.matrices.size());
  QuadAlgebraic zw = weight[0] / QuadAlgebraic(Rational(2 * ell));
  for (int k = 1; k <= ell; ++k) {
    for (const char* sign : {"+", "-"}) {
      int a = target.find_action(0, "S1:(" + std::string(sign) + "," + std::to_string(k) + ")");
      if (a < 0) throw Error(ErrorCode::kShapeMismatch, "target does not match the system");
      s[a] = zw;
    }
  }
  for (int i = 1; i <= bsys.dim; ++i) {
    int a2 = target.find_action(0, "S2:x" + std::to_string(i));
    int a3 = target.find_action(0, "S3:y" + std::to_string(i));
    if (a2 < 0 || a3 < 0) throw Error(ErrorCode::kShapeMismatch, "target does not match the system");
    s[a2] = weight[1] * x[i - 1];
    s[a3] = weight[2] * x[i - 1];
  }
  return s;
}

}  // namespace

SymmetrizationInfo symmetrization_info(const StrategicGame& g0) {
  require_g0(g0);
  Rational top(0);
  for (std::size_t idx = 0; idx < g0.cell_count(); ++idx) {
    Rational v = abs(g0.payoff(idx, 0));
    if (v > top) top = v;
  }
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), top.num().get_mpz_t(), top.den().get_mpz_t());
  SymmetrizationInfo info;
  info.M = Rational(mpz_class(fl + 1));
  info.K = Rational(2) * info.M / Rational(9);
  return info;
}

std::pair<StrategicGame, SymmetrizationInfo> build_Gplus(const StrategicGame& g0) {
  SymmetrizationInfo info = symmetrization_info(g0);
  StrategicGame g = g0;
  for (std::size_t idx = 0; idx < g.cell_count(); ++idx) {
    Rational u1 = g0.payoff(idx, 0);
    g.set_payoff(idx, 0, u1 + info.M);
    g.set_payoff(idx, 1, info.M - u1);
    g.set_payoff(idx, 2, info.M - u1);
  }
  annotate(g, "gplus", info);
  return {g, info};
}

StrategicGame build_GplusPrime(const StrategicGame& g0) {
  SymmetrizationInfo info = symmetrization_info(g0);
  StrategicGame g = g0;
  for (std::size_t idx = 0; idx < g.cell_count(); ++idx) {
    for (int p = 0; p < 3; ++p) g.set_payoff(idx, p, g0.payoff(idx, p) + info.M);
  }
  annotate(g, "gplusprime", info);
  return g;
}

StrategicGame build_D0(const StrategicGame& gplus, D0Variant variant) {
  require_g0(gplus);
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> origin;  // (block, action within block)
  for (int b = 0; b < 3; ++b) {
    for (int a = 0; a < gplus.actions(b); ++a) {
      labels.push_back("S" + std::to_string(b + 1) + ":" + gplus.label(b, a));
      origin.emplace_back(b, a);
    }
  }
  int n = static_cast<int>(labels.size());
  StrategicGame d({n, n, n});
  for (int p = 0; p < 3; ++p) d.set_labels(p, labels);
  PureProfile role(3);
  for (std::size_t idx = 0; idx < d.cell_count(); ++idx) {
    PureProfile a = d.profile_at(idx);
    int b[3] = {origin[a[0]].first, origin[a[1]].first, origin[a[2]].first};
    if (b[0] == b[1] || b[0] == b[2] || b[1] == b[2]) continue;
    // the player in block r acts as Player r of G+
    for (int i = 0; i < 3; ++i) role[b[i]] = origin[a[i]].second;
    std::size_t gidx = gplus.index(role);
    for (int i = 0; i < 3; ++i) d.set_payoff(idx, i, gplus.payoff(gidx, b[i]));
  }
  d.meta() = gplus.meta();
  d.meta()["kind"] = variant == D0Variant::kRoleSum ? "d0" : "dp0";
  return d;
}

StrategicGame extend_symmetric(const StrategicGame& d0, const SymmetrizationInfo& info, DVariant variant) {
  std::string kind = d0.meta_value("kind");
  bool prime_source = kind == "dp0";
  if (kind != "d0" && kind != "dp0") throw Error(ErrorCode::kBadVariantSource, "source is not a D0 or D'0 game");
  if ((variant == DVariant::kDPrime1) != prime_source) {
    throw Error(ErrorCode::kBadVariantSource, "variant does not match source game " + kind);
  }
  int n = d0.actions(0) + 1;
  StrategicGame d({n, n, n});
  auto labels = d0.labels(0);
  labels.push_back(kBot);
  for (int p = 0; p < 3; ++p) d.set_labels(p, labels);
  const Rational& K = info.K;
  const Rational& M = info.M;
  for (std::size_t idx = 0; idx < d.cell_count(); ++idx) {
    PureProfile a = d.profile_at(idx);
    int bots = 0;
    for (int v : a) bots += v == n - 1 ? 1 : 0;
    for (int p = 0; p < 3; ++p) {
      bool mine = a[p] == n - 1;
      Rational v;
      if (bots == 0) {
        v = d0.payoff(a, p);
      } else if (variant == DVariant::kD1) {
        v = bots == 1 ? K : K + 1;
      } else if (variant == DVariant::kD4) {
        v = bots == 1 ? (mine ? K : K - 3) : (bots == 2 ? K - 2 : K - 1);
      } else {
        v = M + (bots - 1);
      }
      d.set_payoff(idx, p, v);
    }
  }
  d.meta() = d0.meta();
  annotate(d, variant == DVariant::kD1 ? "d1" : (variant == DVariant::kD4 ? "d4" : "dp1"), info);
  return d;
}

MixedProfile lift_symmetric(const BilinearSystem& bsys, const std::vector<QuadAlgebraic>& x,
                            const StrategicGame& target) {
  require_solution(bsys, x);
  QuadAlgebraic third(Rational(1, 3));
  Strategy y = block_strategy(bsys, x, target, {third, third, third});
  return MixedProfile(3, y);
}

MixedProfile lift_role_assigned(const BilinearSystem& bsys, const std::vector<QuadAlgebraic>& x,
                                const StrategicGame& target) {
  require_solution(bsys, x);
  QuadAlgebraic one(1), zero(0);
  MixedProfile prof;
  prof.push_back(block_strategy(bsys, x, target, {one, zero, zero}));
  prof.push_back(block_strategy(bsys, x, target, {zero, one, zero}));
  prof.push_back(block_strategy(bsys, x, target, {zero, zero, one}));
  return prof;
}

int block_of_label(const std::string& label) {
  if (label.size() >= 3 && label[0] == 'S' && label[2] == ':' && label[1] >= '1' && label[1] <= '3') {
    return label[1] - '0';
  }
  return 0;
}

BlockProjection project_symmetric(const StrategicGame& d, const Strategy& y) {
  if (static_cast<int>(y.size()) != d.actions(0)) throw Error(ErrorCode::kShapeMismatch, "strategy length mismatch");
  BlockProjection out;
  for (int a = 0; a < d.actions(0); ++a) {
    int b = block_of_label(d.label(0, a));
    if (b == 0) continue;
    out.conditional[b - 1].push_back(y[a]);
    out.mass[b - 1] += y[a];
  }
  for (int b = 0; b < 3; ++b) {
    out.empty[b] = out.mass[b].is_zero();
    if (out.empty[b]) {
      out.conditional[b].clear();
    } else {
      for (auto& v : out.conditional[b]) v /= out.mass[b];
    }
  }
  return out;
}

}  // namespace nashgadgets
