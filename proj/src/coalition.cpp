#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "nashgadgets/analysis.hpp"
#include "nashgadgets/errors.hpp"

namespace nashgadgets {

namespace {

bool profile_is_rational(const MixedProfile& x) {
  for (const auto& s : x) {
    for (const auto& v : s) {
      if (!v.is_rational()) return false;
    }
  }
  return true;
}

template <typename V>
V convert(const QuadAlgebraic& q);
template <>
Rational convert<Rational>(const QuadAlgebraic& q) { return q.rational(); }
template <>
QuadAlgebraic convert<QuadAlgebraic>(const QuadAlgebraic& q) { return q; }

// Payoffs of the members of B1 ∪ B2 as a dense tensor over the deviators'
// actions, with the fixed players of B3 mixed in.
template <typename V>
struct Reduced {
  std::vector<int> dev;      // deviating players, ascending
  std::vector<int> members;  // B1 then B2
  int nB1 = 0;
  std::vector<int> counts;   // action counts of dev
  std::vector<std::vector<V>> T;  // T[member][dev index]
  std::vector<V> base;            // u_j(x) per member
  std::vector<QuadAlgebraic> base_exact;
};

template <typename V>
Reduced<V> reduce(const StrategicGame& game, const MixedProfile& x, const CoalitionQuery& q) {
  Reduced<V> r;
  r.members = q.B1;
  r.members.insert(r.members.end(), q.B2.begin(), q.B2.end());
  r.nB1 = static_cast<int>(q.B1.size());
  r.dev = r.members;
  std::sort(r.dev.begin(), r.dev.end());
  std::size_t size = 1;
  for (int p : r.dev) {
    r.counts.push_back(game.actions(p));
    size *= game.actions(p);
  }
  std::vector<std::vector<QuadAlgebraic>> acc(r.members.size(), std::vector<QuadAlgebraic>(size));
  std::vector<char> fixed(game.players(), 1);
  for (int p : r.dev) fixed[p] = 0;
  for (std::size_t idx = 0; idx < game.cell_count(); ++idx) {
    PureProfile a = game.profile_at(idx);
    QuadAlgebraic w(1);
    bool zero = false;
    for (int p = 0; p < game.players() && !zero; ++p) {
      if (!fixed[p]) continue;
      if (x[p][a[p]].is_zero()) {
        zero = true;
      } else {
        w *= x[p][a[p]];
      }
    }
    if (zero) continue;
    std::size_t d = 0;
    for (int p : r.dev) d = d * game.actions(p) + a[p];
    for (std::size_t t = 0; t < r.members.size(); ++t) {
      const Rational& u = game.payoff(idx, r.members[t]);
      if (!u.is_zero()) acc[t][d] += w * QuadAlgebraic(u);
    }
  }
  auto pay = eval_payoff(game, x);
  for (std::size_t t = 0; t < r.members.size(); ++t) {
    std::vector<V> row;
    row.reserve(size);
    for (const auto& v : acc[t]) row.push_back(convert<V>(v));
    r.T.push_back(std::move(row));
    r.base_exact.push_back(pay[r.members[t]]);
    r.base.push_back(convert<V>(pay[r.members[t]]));
  }
  return r;
}

// One simplex per deviator: vertices as probability vectors over the
// deviator's pattern actions.
using Simplex = std::vector<std::vector<Rational>>;
using Cell = std::vector<Simplex>;

template <typename V>
struct Pattern {
  std::vector<std::vector<int>> actions;  // per deviator
  std::vector<std::vector<V>> T;          // per member, over pattern indices
};

// Multilinear evaluation: contract the pattern tensor with one point per
// deviator.
template <typename V>
std::vector<V> gains_at(const Reduced<V>& r, const Pattern<V>& pat, const std::vector<const std::vector<Rational>*>& pt) {
  std::vector<V> out;
  std::size_t nd = pat.actions.size();
  for (std::size_t t = 0; t < r.members.size(); ++t) {
    std::vector<V> cur = pat.T[t];
    // contract the last deviator first (row-major layout)
    for (std::size_t k = nd; k-- > 0;) {
      std::size_t s = pat.actions[k].size();
      std::vector<V> next(cur.size() / s);
      const auto& w = *pt[k];
      for (std::size_t i = 0; i < next.size(); ++i) {
        V acc(0);
        for (std::size_t j = 0; j < s; ++j) {
          if (!w[j].is_zero()) acc += V(w[j]) * cur[i * s + j];
        }
        next[i] = acc;
      }
      cur = std::move(next);
    }
    out.push_back(cur[0] - r.base[t]);
  }
  return out;
}

template <typename V>
bool is_witness(const std::vector<V>& g, int nB1) {
  for (std::size_t t = 0; t < g.size(); ++t) {
    int s = g[t].sign();
    if (static_cast<int>(t) < nB1 ? s <= 0 : s < 0) return false;
  }
  return true;
}

// Fourier-Motzkin feasibility of: lambda >= 0, sum over B1 of lambda = 1,
// sum_j lambda_j g_j(v) <= 0 at every vertex v.
template <typename V>
bool lambda_certificate(const std::vector<std::vector<V>>& G, int nB1) {
  std::size_t k = G.empty() ? 0 : G[0].size();
  if (k < 2 || nB1 < 1) return false;
  // variables: lambda_1..lambda_{k-1}; lambda_0 = 1 - sum_{t<nB1, t>0} lambda_t
  std::size_t nv = k - 1;
  struct Ineq {
    std::vector<V> a;
    V b;  // a . lambda <= b
  };
  std::vector<Ineq> rows;
  auto subst = [&](const std::vector<V>& coef, V rhs) {
    // coef over lambda_0..lambda_{k-1}
    Ineq in{std::vector<V>(nv, V(0)), rhs};
    for (std::size_t t = 1; t < k; ++t) {
      in.a[t - 1] = coef[t];
      if (static_cast<int>(t) < nB1) in.a[t - 1] -= coef[0];
    }
    in.b -= coef[0];
    rows.push_back(std::move(in));
  };
  for (const auto& g : G) subst(g, V(0));
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<V> c(k, V(0));
    c[t] = V(-1);
    subst(c, V(0));
  }
  for (std::size_t var = 0; var < nv; ++var) {
    std::vector<Ineq> pos, neg, keep;
    for (auto& r : rows) {
      int s = r.a[var].sign();
      (s > 0 ? pos : (s < 0 ? neg : keep)).push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        V cp = p.a[var], cn = -n.a[var];
        Ineq c{std::vector<V>(nv, V(0)), p.b * cn + n.b * cp};
        for (std::size_t t = 0; t < nv; ++t) c.a[t] = p.a[t] * cn + n.a[t] * cp;
        c.a[var] = V(0);
        keep.push_back(std::move(c));
      }
    }
    rows = std::move(keep);
  }
  for (const auto& r : rows) {
    if (r.b.sign() < 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

Rational linf(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational m(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = abs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

template <typename V>
MixedProfile witness_profile(const StrategicGame& game, const MixedProfile& x, const Reduced<V>& r,
                             const Pattern<V>& pat, const std::vector<const std::vector<Rational>*>& pt) {
  (void)game;
  MixedProfile y = x;
  for (std::size_t k = 0; k < r.dev.size(); ++k) {
    Strategy s(y[r.dev[k]].size(), QuadAlgebraic(0));
    for (std::size_t j = 0; j < pat.actions[k].size(); ++j) s[pat.actions[k][j]] = QuadAlgebraic((*pt[k])[j]);
    y[r.dev[k]] = s;
  }
  return y;
}

template <typename V>
Verdict search(const StrategicGame& game, const MixedProfile& x, const CoalitionQuery& q, const SearchOptions& opts) {
  Reduced<V> r = reduce<V>(game, x, q);
  Verdict out;
  out.B1 = q.B1;
  out.B2 = q.B2;
  std::size_t nd = r.dev.size();
  int cap = static_cast<int>(nd);
  std::vector<std::vector<std::vector<int>>> choices;
  for (std::size_t k = 0; k < nd; ++k) choices.push_back(combinations(r.counts[k], std::min(cap, r.counts[k])));
  bool unknown = false;
  bool eps_used = false;
  Rational worst_unknown(0);
  std::vector<std::size_t> pick(nd, 0);

  auto found = [&](const Pattern<V>& pat, const std::vector<const std::vector<Rational>*>& pt) {
    MixedProfile y = witness_profile(game, x, r, pat, pt);
    auto pay = eval_payoff(game, y);
    CoalitionWitness w;
    w.profile = y;
    w.members = r.members;
    auto claimed = gains_at(r, pat, pt);
    for (std::size_t t = 0; t < r.members.size(); ++t) {
      QuadAlgebraic g = pay[r.members[t]] - r.base_exact[t];
      if (!(g == QuadAlgebraic(claimed[t]))) throw std::logic_error("coalition witness failed re-verification");
      w.gains.push_back(g);
    }
    out.status = VerdictStatus::kYes;
    out.coalition = w;
  };

  while (true) {
    Pattern<V> pat;
    for (std::size_t k = 0; k < nd; ++k) pat.actions.push_back(choices[k][pick[k]]);
    // restrict the reduced tensor to the pattern
    std::size_t psize = 1;
    for (const auto& a : pat.actions) psize *= a.size();
    pat.T.assign(r.members.size(), std::vector<V>(psize));
    for (std::size_t pi = 0; pi < psize; ++pi) {
      std::size_t rem = pi, full = 0, mul = 1;
      std::vector<int> loc(nd);
      for (std::size_t k = nd; k-- > 0;) {
        loc[k] = static_cast<int>(rem % pat.actions[k].size());
        rem /= pat.actions[k].size();
      }
      for (std::size_t k = nd; k-- > 0;) {
        full += pat.actions[k][loc[k]] * mul;
        mul *= r.counts[k];
      }
      for (std::size_t t = 0; t < r.members.size(); ++t) pat.T[t][pi] = r.T[t][full];
    }
    Cell root;
    for (std::size_t k = 0; k < nd; ++k) {
      std::size_t s = pat.actions[k].size();
      Simplex sx;
      for (std::size_t j = 0; j < s; ++j) {
        std::vector<Rational> v(s, Rational(0));
        v[j] = 1;
        sx.push_back(v);
      }
      root.push_back(sx);
    }
    std::vector<Cell> stack{root};
    while (!stack.empty()) {
      if (out.cells >= opts.cell_budget) {
        unknown = true;
        break;
      }
      Cell cell = std::move(stack.back());
      stack.pop_back();
      ++out.cells;
      // enumerate vertex combinations
      std::vector<std::size_t> vi(nd, 0);
      std::vector<std::vector<V>> G;
      std::vector<const std::vector<Rational>*> pt(nd);
      bool done = false;
      while (!done) {
        for (std::size_t k = 0; k < nd; ++k) pt[k] = &cell[k][vi[k]];
        G.push_back(gains_at(r, pat, pt));
        if (is_witness(G.back(), r.nB1)) {
          found(pat, pt);
          return out;
        }
        std::size_t k = nd;
        while (true) {
          if (k == 0) {
            done = true;
            break;
          }
          --k;
          if (++vi[k] < cell[k].size()) break;
          vi[k] = 0;
        }
      }
      std::vector<std::vector<Rational>> centre(nd);
      for (std::size_t k = 0; k < nd; ++k) {
        std::vector<Rational> c(cell[k][0].size(), Rational(0));
        for (const auto& v : cell[k]) {
          for (std::size_t j = 0; j < c.size(); ++j) c[j] += v[j];
        }
        Rational n(static_cast<long>(cell[k].size()));
        for (auto& v : c) v /= n;
        centre[k] = c;
        pt[k] = &centre[k];
      }
      if (is_witness(gains_at(r, pat, pt), r.nB1)) {
        found(pat, pt);
        return out;
      }
      bool pruned = false;
      for (std::size_t t = 0; t < r.members.size() && !pruned; ++t) {
        bool positive = false, nonneg = false;
        for (const auto& g : G) {
          int s = g[t].sign();
          positive = positive || s > 0;
          nonneg = nonneg || s >= 0;
        }
        pruned = static_cast<int>(t) < r.nB1 ? !positive : !nonneg;
      }
      if (pruned || lambda_certificate(G, r.nB1)) continue;
      // longest edge
      Rational best(-1);
      std::size_t bk = 0, ba = 0, bb = 0;
      for (std::size_t k = 0; k < nd; ++k) {
        for (std::size_t a = 0; a < cell[k].size(); ++a) {
          for (std::size_t b = a + 1; b < cell[k].size(); ++b) {
            Rational d = linf(cell[k][a], cell[k][b]);
            if (d > best) {
              best = d;
              bk = k, ba = a, bb = b;
            }
          }
        }
      }
      if (best <= opts.delta_min) {
        bool below = false;
        for (int t = 0; t < r.nB1 && !below; ++t) {
          bool all_small = true;
          for (const auto& g : G) all_small = all_small && g[t] < V(q.eps);
          below = all_small;
        }
        if (below) {
          eps_used = true;
        } else {
          unknown = true;
          if (best > worst_unknown) worst_unknown = best;
        }
        continue;
      }
      std::vector<Rational> mid(cell[bk][ba].size());
      for (std::size_t j = 0; j < mid.size(); ++j) mid[j] = (cell[bk][ba][j] + cell[bk][bb][j]) / Rational(2);
      Cell left = cell, right = std::move(cell);
      left[bk][bb] = mid;
      right[bk][ba] = mid;
      stack.push_back(std::move(right));
      stack.push_back(std::move(left));
    }
    if (out.cells >= opts.cell_budget) break;
    std::size_t k = nd;
    bool more = false;
    while (k-- > 0) {
      if (++pick[k] < choices[k].size()) {
        more = true;
        break;
      }
      pick[k] = 0;
    }
    if (!more) break;
  }
  if (unknown) {
    out.status = VerdictStatus::kUnknown;
    out.resolution = worst_unknown.is_zero() ? opts.delta_min : worst_unknown;
  } else {
    out.status = VerdictStatus::kNo;
    out.exact = !eps_used;
    if (eps_used) out.resolution = q.eps;
  }
  return out;
}

std::vector<int> complement(int m, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int p = 0; p < m; ++p) {
    if (std::find(a.begin(), a.end(), p) == a.end() && std::find(b.begin(), b.end(), p) == b.end()) out.push_back(p);
  }
  return out;
}

}  // namespace

void validate_query(const StrategicGame& game, const CoalitionQuery& q) {
  if (q.B1.empty() && q.B2.empty()) throw Error(ErrorCode::kEmptyCoalition, "B1 and B2 are both empty");
  std::vector<int> seen(game.players(), 0);
  for (const auto* set : {&q.B1, &q.B2, &q.B3}) {
    for (int p : *set) {
      if (p < 0 || p >= game.players()) throw Error(ErrorCode::kIndexOutOfRange, "player index out of range");
      ++seen[p];
    }
  }
  for (int s : seen) {
    if (s != 1) throw Error(ErrorCode::kBadParameter, "B1, B2, B3 must partition the players");
  }
  if (q.eps.sign() <= 0) throw Error(ErrorCode::kBadParameter, "eps must be positive");
}

StrategicGame build_auxiliary_game(const StrategicGame& game, const MixedProfile& x, const CoalitionQuery& q) {
  validate_query(game, q);
  validate_profile(game, x);
  if (!profile_is_rational(x)) throw Error(ErrorCode::kBadParameter, "auxiliary games need a rational profile");
  Reduced<Rational> r = reduce<Rational>(game, x, q);
  int m = game.players();
  std::vector<int> counts(m + 1, 1);
  for (int p : r.dev) counts[p] = game.actions(p);
  counts[m] = static_cast<int>(r.members.size());
  StrategicGame aux(counts);
  for (int p = 0; p < m; ++p) {
    if (counts[p] == game.actions(p) && std::find(r.dev.begin(), r.dev.end(), p) != r.dev.end()) {
      aux.set_labels(p, game.labels(p));
    } else {
      aux.set_labels(p, {"⊥"});
    }
  }
  std::vector<std::string> jl;
  for (int j : r.members) jl.push_back("j" + std::to_string(j + 1));
  aux.set_labels(m, jl);
  for (std::size_t idx = 0; idx < aux.cell_count(); ++idx) {
    PureProfile a = aux.profile_at(idx);
    std::size_t d = 0;
    for (int p : r.dev) d = d * game.actions(p) + a[p];
    int t = a[m];
    Rational v = r.base[t] - r.T[t][d];
    if (t < r.nB1) v += q.eps;
    aux.set_payoff(idx, m, v);
  }
  aux.meta()["kind"] = "auxiliary";
  return aux;
}

Verdict coalition_feasible(const StrategicGame& game, const MixedProfile& x, const CoalitionQuery& q,
                           const SearchOptions& opts) {
  validate_query(game, q);
  validate_profile(game, x);
  if (q.B1.empty()) {
    Verdict v;
    v.status = VerdictStatus::kYes;
    v.B2 = q.B2;
    v.coalition = CoalitionWitness{x, q.B2, std::vector<QuadAlgebraic>(q.B2.size())};
    return v;
  }
  if (profile_is_rational(x)) return search<Rational>(game, x, q, opts);
  return search<QuadAlgebraic>(game, x, q, opts);
}

Verdict check_pareto(const StrategicGame& game, const MixedProfile& x, const SearchOptions& opts) {
  int m = game.players();
  Verdict agg;
  agg.status = VerdictStatus::kYes;
  for (int i = 0; i < m; ++i) {
    CoalitionQuery q;
    q.B1 = {i};
    for (int p = 0; p < m; ++p) {
      if (p != i) q.B2.push_back(p);
    }
    Verdict v = coalition_feasible(game, x, q, opts);
    agg.cells += v.cells;
    if (v.status == VerdictStatus::kYes) {
      v.status = VerdictStatus::kNo;
      v.cells = agg.cells;
      return v;
    }
    if (v.status == VerdictStatus::kUnknown) {
      agg.status = VerdictStatus::kUnknown;
      agg.resolution = v.resolution;
    }
    agg.exact = agg.exact && v.exact;
  }
  return agg;
}

Verdict check_strong(const StrategicGame& game, const MixedProfile& x, const SearchOptions& opts) {
  int m = game.players();
  Verdict agg;
  agg.status = VerdictStatus::kYes;
  for (int size = 1; size <= m; ++size) {
    for (const auto& b1 : combinations(m, size)) {
      CoalitionQuery q;
      q.B1 = b1;
      q.B3 = complement(m, b1, {});
      Verdict v = coalition_feasible(game, x, q, opts);
      agg.cells += v.cells;
      if (v.status == VerdictStatus::kYes) {
        v.status = VerdictStatus::kNo;
        v.cells = agg.cells;
        return v;
      }
      if (v.status == VerdictStatus::kUnknown) {
        agg.status = VerdictStatus::kUnknown;
        agg.resolution = v.resolution;
      }
      agg.exact = agg.exact && v.exact;
    }
  }
  return agg;
}

Verdict grid_oracle(const StrategicGame& game, const MixedProfile& x, const CoalitionQuery& q, int N) {
  validate_query(game, q);
  validate_profile(game, x);
  if (N < 1) throw Error(ErrorCode::kBadParameter, "grid resolution must be positive");
  std::vector<int> dev = q.B1;
  dev.insert(dev.end(), q.B2.begin(), q.B2.end());
  std::sort(dev.begin(), dev.end());
  for (int p : dev) {
    if (game.actions(p) > 3) throw Error(ErrorCode::kBadParameter, "grid oracle supports at most 3 actions per deviator");
  }
  Reduced<QuadAlgebraic> r = reduce<QuadAlgebraic>(game, x, q);
  std::size_t nm = r.members.size(), nd = r.dev.size();
  std::vector<std::vector<double>> T(nm);
  std::vector<double> base(nm);
  for (std::size_t t = 0; t < nm; ++t) {
    for (const auto& v : r.T[t]) T[t].push_back(v.to_double());
    base[t] = r.base[t].to_double();
  }
  // grid points per deviator: compositions of N
  std::vector<std::vector<std::vector<int>>> pts(nd);
  for (std::size_t k = 0; k < nd; ++k) {
    int n = r.counts[k];
    std::vector<int> c(n, 0);
    if (n == 1) {
      pts[k].push_back({N});
      continue;
    }
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        c[i] = left;
        pts[k].push_back(c);
        return;
      }
      for (int v = left; v >= 0; --v) {
        c[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, N);
  }
  Verdict out;
  out.B1 = q.B1;
  out.B2 = q.B2;
  out.margin = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> at(nd, 0);
  std::vector<double> prob;
  while (true) {
    std::vector<double> g(nm);
    for (std::size_t t = 0; t < nm; ++t) {
      std::vector<double> cur = T[t];
      for (std::size_t k = nd; k-- > 0;) {
        const auto& w = pts[k][at[k]];
        std::size_t s = w.size();
        std::vector<double> next(cur.size() / s, 0.0);
        for (std::size_t i = 0; i < next.size(); ++i) {
          for (std::size_t j = 0; j < s; ++j) next[i] += (static_cast<double>(w[j]) / N) * cur[i * s + j];
        }
        cur = std::move(next);
      }
      g[t] = cur[0] - base[t];
    }
    bool b2ok = true;
    for (std::size_t t = r.nB1; t < nm; ++t) b2ok = b2ok && g[t] > -1e-12;
    double mb1 = std::numeric_limits<double>::infinity();
    for (int t = 0; t < r.nB1; ++t) mb1 = std::min(mb1, g[t]);
    if (b2ok) out.margin = std::max(out.margin, mb1);
    if (b2ok && mb1 > 1e-12 && out.status != VerdictStatus::kYes) {
      MixedProfile y = x;
      for (std::size_t k = 0; k < nd; ++k) {
        Strategy s;
        for (int v : pts[k][at[k]]) s.emplace_back(Rational(v, N));
        y[r.dev[k]] = s;
      }
      auto pay = eval_payoff(game, y);
      std::vector<QuadAlgebraic> gains;
      for (std::size_t t = 0; t < nm; ++t) gains.push_back(pay[r.members[t]] - r.base_exact[t]);
      if (is_witness(gains, r.nB1)) {
        out.status = VerdictStatus::kYes;
        out.coalition = CoalitionWitness{y, r.members, gains};
      }
    }
    std::size_t k = nd;
    bool more = false;
    while (k-- > 0) {
      if (++at[k] < pts[k].size()) {
        more = true;
        break;
      }
      at[k] = 0;
    }
    if (!more) break;
  }
  if (out.status != VerdictStatus::kYes) {
    out.status = VerdictStatus::kNo;
    out.exact = false;
    out.resolution = Rational(1, N);
  }
  return out;
}

}  // namespace nashgadgets
