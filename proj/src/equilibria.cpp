#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "nashgadgets/analysis.hpp"
#include "nashgadgets/errors.hpp"
#include "polysolve.hpp"

namespace nashgadgets {

namespace {

using detail::Poly;
using detail::SolveStatus;

constexpr std::size_t kNodeBudget = 4000;
constexpr double kProbFloor = 1e-9;
constexpr double kSlack = 1e-9;

std::vector<std::vector<int>> subsets(int n, int max_size) {
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= max_size; ++s) {
    std::vector<int> c(s);
    for (int i = 0; i < s; ++i) c[i] = i;
    while (true) {
      out.push_back(c);
      int i = s - 1;
      while (i >= 0 && c[i] == n - s + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

// Polynomial model of one support combination: one free variable per
// support action except the last of each mixing player.
struct SupportModel {
  const StrategicGame& game;
  std::vector<std::vector<int>> S;
  int nv = 0;
  std::vector<int> offset;
  std::vector<std::vector<Poly>> X;  // X[i][a], zero outside the support
  std::vector<std::vector<Poly>> U;  // U[i][b]
  std::vector<Poly> E;
  std::vector<Poly> I;

  SupportModel(const StrategicGame& g, std::vector<std::vector<int>> supports) : game(g), S(std::move(supports)) {
    int m = game.players();
    offset.resize(m);
    for (int i = 0; i < m; ++i) {
      offset[i] = nv;
      nv += static_cast<int>(S[i].size()) - 1;
    }
    X.assign(m, {});
    for (int i = 0; i < m; ++i) {
      X[i].assign(game.actions(i), Poly(nv));
      int s = static_cast<int>(S[i].size());
      Poly last = Poly::constant(nv, QuadAlgebraic(1));
      for (int t = 0; t + 1 < s; ++t) {
        Poly v = Poly::variable(nv, offset[i] + t);
        X[i][S[i][t]] = v;
        last -= v;
      }
      X[i][S[i][s - 1]] = last;
    }
    U.assign(m, {});
    for (int i = 0; i < m; ++i) {
      U[i].assign(game.actions(i), Poly(nv));
      PureProfile a(m, 0);
      std::vector<std::size_t> pos(m, 0);
      while (true) {
        Poly w = Poly::constant(nv, QuadAlgebraic(1));
        for (int j = 0; j < m; ++j) {
          if (j == i) continue;
          a[j] = S[j][pos[j]];
          w = w * X[j][a[j]];
        }
        for (int b = 0; b < game.actions(i); ++b) {
          a[i] = b;
          const Rational& u = game.payoff(a, i);
          if (!u.is_zero()) U[i][b] += w * QuadAlgebraic(u);
        }
        int j = m - 1;
        for (; j >= 0; --j) {
          if (j == i) continue;
          if (++pos[j] < S[j].size()) break;
          pos[j] = 0;
        }
        if (j < 0) break;
      }
    }
    for (int i = 0; i < m; ++i) {
      const Poly& ref = U[i][S[i][0]];
      for (std::size_t t = 1; t < S[i].size(); ++t) E.push_back(U[i][S[i][t]] - ref);
      for (int b = 0; b < game.actions(i); ++b) {
        if (std::find(S[i].begin(), S[i].end(), b) == S[i].end()) I.push_back(U[i][b] - ref);
      }
    }
  }

  // False when a constant inequality already rules the support out.
  bool feasible() const {
    for (const auto& p : I) {
      if (p.is_constant() && !p.is_zero() && p.terms().begin()->second.sign() > 0) return false;
    }
    return true;
  }

  MixedProfile profile(const std::vector<QuadAlgebraic>& theta) const {
    MixedProfile x;
    for (int i = 0; i < game.players(); ++i) {
      Strategy s(game.actions(i), QuadAlgebraic(0));
      for (int a : S[i]) s[a] = X[i][a].eval(theta);
      x.push_back(std::move(s));
    }
    return x;
  }

  bool positive(const MixedProfile& x) const {
    for (int i = 0; i < game.players(); ++i) {
      for (int a : S[i]) {
        if (x[i][a].sign() <= 0) return false;
      }
    }
    return true;
  }
};

class Enumerator {
 public:
  Enumerator(const StrategicGame& game, const SolveOptions& opts) : game_(game), opts_(opts) {}

  void support(const SupportModel& model, std::size_t index) {
    if (!model.feasible()) return;
    auto sol = detail::solve_system(model.E, model.nv);
    if (sol.status == SolveStatus::kFinite) {
      for (const auto& pt : sol.points) accept_exact(model, pt);
      return;
    }
    if (sol.status == SolveStatus::kPositiveDim && explore(model)) return;
    numeric(model, index);
  }

  std::vector<Equilibrium> take() { return std::move(found_); }

 private:
  void accept_exact(const SupportModel& model, const std::vector<QuadAlgebraic>& theta) {
    MixedProfile x = model.profile(theta);
    if (!model.positive(x)) return;
    Verdict v = check_NE(game_, x);
    if (v.status != VerdictStatus::kYes) return;
    add(Equilibrium{x, Exactness::kExact, v.payoffs});
  }

  void add(Equilibrium e) {
    for (const auto& f : found_) {
      if (e.flag == Exactness::kExact && f.flag == Exactness::kExact) {
        if (f.profile == e.profile) return;
        continue;
      }
      double d = 0;
      for (std::size_t i = 0; i < e.profile.size(); ++i) {
        for (std::size_t a = 0; a < e.profile[i].size(); ++a) {
          d = std::max(d, std::fabs(e.profile[i][a].to_double() - f.profile[i][a].to_double()));
        }
      }
      if (d <= 1e-9) return;
    }
    found_.push_back(std::move(e));
  }

  // Breadth-first search over sets of tight constraints until the system
  // becomes zero-dimensional. False when some branch stays out of reach.
  bool explore(const SupportModel& model) {
    std::vector<Poly> pool;
    for (const auto& p : model.I) {
      if (!p.is_zero()) pool.push_back(p);
    }
    std::deque<std::vector<int>> queue{{}};
    std::size_t nodes = 0;
    bool complete = true;
    while (!queue.empty()) {
      auto set = std::move(queue.front());
      queue.pop_front();
      int start = set.empty() ? 0 : set.back() + 1;
      if (static_cast<int>(set.size()) >= model.nv) continue;
      for (int c = start; c < static_cast<int>(pool.size()); ++c) {
        if (++nodes > kNodeBudget) return false;
        auto next = set;
        next.push_back(c);
        std::vector<Poly> sys = model.E;
        for (int k : next) sys.push_back(pool[k]);
        auto sol = detail::solve_system(sys, model.nv);
        if (sol.status == SolveStatus::kFinite) {
          for (const auto& pt : sol.points) accept_exact(model, pt);
        } else if (sol.status == SolveStatus::kPositiveDim) {
          queue.push_back(std::move(next));
        } else {
          complete = false;
        }
      }
    }
    return complete;
  }

  void numeric(const SupportModel& model, std::size_t index) {
    int nv = model.nv;
    if (nv == 0) return;
    int ne = static_cast<int>(model.E.size());
    std::vector<std::vector<Poly>> J(ne);
    for (int k = 0; k < ne; ++k) {
      for (int v = 0; v < nv; ++v) J[k].push_back(model.E[k].derivative(v));
    }
    std::mt19937_64 rng(opts_.seed * 0x9E3779B97F4A7C15ULL + index);
    std::uniform_int_distribution<int> eighth(1, 8);
    for (int start = 0; start < std::max(1, opts_.starts); ++start) {
      std::vector<double> th(nv);
      for (int i = 0; i < game_.players(); ++i) {
        int s = static_cast<int>(model.S[i].size());
        if (s < 2) continue;
        std::vector<double> w(s, 1.0);
        if (start > 0) {
          for (auto& x : w) x = eighth(rng);
        }
        double tot = 0;
        for (double x : w) tot += x;
        for (int t = 0; t + 1 < s; ++t) th[model.offset[i] + t] = w[t] / tot;
      }
      if (!levenberg_marquardt(model, J, th)) continue;
      if (!admissible(model, th)) continue;
      std::vector<QuadAlgebraic> snapped;
      for (double v : th) snapped.emplace_back(detail::continued_fraction(v, 1000000));
      MixedProfile xs = model.profile(snapped);
      if (model.positive(xs)) {
        Verdict v = check_NE(game_, xs);
        if (v.status == VerdictStatus::kYes) {
          add(Equilibrium{xs, Exactness::kExact, v.payoffs});
          continue;
        }
      }
      std::vector<QuadAlgebraic> raw;
      for (double v : th) raw.emplace_back(Rational::from_double(v));
      MixedProfile xr = model.profile(raw);
      add(Equilibrium{xr, Exactness::kNumeric, eval_payoff(game_, xr)});
    }
  }

  bool levenberg_marquardt(const SupportModel& model, const std::vector<std::vector<Poly>>& J,
                           std::vector<double>& th) const {
    int nv = model.nv, ne = static_cast<int>(model.E.size());
    auto residual = [&](const std::vector<double>& t) {
      Eigen::VectorXd f(ne);
      for (int k = 0; k < ne; ++k) f[k] = model.E[k].eval(t);
      return f;
    };
    Eigen::VectorXd f = residual(th);
    double mu = 1e-3;
    for (int it = 0; it < 200; ++it) {
      if (ne == 0 || f.cwiseAbs().maxCoeff() < opts_.tolerance * 0.01) break;
      Eigen::MatrixXd jac(ne, nv);
      for (int k = 0; k < ne; ++k) {
        for (int v = 0; v < nv; ++v) jac(k, v) = J[k][v].eval(th);
      }
      Eigen::MatrixXd h = jac.transpose() * jac;
      Eigen::VectorXd g = jac.transpose() * f;
      bool improved = false;
      for (int tries = 0; tries < 30 && !improved; ++tries) {
        Eigen::MatrixXd damped = h;
        for (int v = 0; v < nv; ++v) damped(v, v) += mu * (1.0 + h(v, v));
        Eigen::VectorXd step = damped.ldlt().solve(-g);
        std::vector<double> cand(nv);
        for (int v = 0; v < nv; ++v) cand[v] = th[v] + step[v];
        Eigen::VectorXd fc = residual(cand);
        if (fc.squaredNorm() < f.squaredNorm()) {
          th = cand;
          f = fc;
          mu = std::max(mu / 3, 1e-12);
          improved = true;
        } else {
          mu *= 4;
        }
      }
      if (!improved) break;
    }
    return ne == 0 || f.cwiseAbs().maxCoeff() < opts_.tolerance;
  }

  bool admissible(const SupportModel& model, const std::vector<double>& th) const {
    for (int i = 0; i < game_.players(); ++i) {
      for (int a : model.S[i]) {
        if (model.X[i][a].eval(th) <= kProbFloor) return false;
      }
    }
    for (const auto& p : model.I) {
      if (p.eval(th) > kSlack) return false;
    }
    return true;
  }

  const StrategicGame& game_;
  const SolveOptions& opts_;
  std::vector<Equilibrium> found_;
};

}  // namespace

std::vector<Equilibrium> find_equilibria(const StrategicGame& game, const SolveOptions& opts) {
  if (opts.max_support < 0) throw Error(ErrorCode::kBadParameter, "max support must be non-negative");
  if (!(opts.tolerance > 0)) throw Error(ErrorCode::kBadParameter, "tolerance must be positive");
  int m = game.players();
  std::vector<std::vector<std::vector<int>>> choices;
  double combos = 1;
  for (int i = 0; i < m; ++i) {
    int cap = opts.max_support == 0 ? game.actions(i) : std::min(opts.max_support, game.actions(i));
    choices.push_back(subsets(game.actions(i), cap));
    combos *= static_cast<double>(choices.back().size());
  }
  if (combos > static_cast<double>(opts.budget)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "support combinations " + std::to_string(static_cast<long long>(combos)) + " exceed the budget");
  }
  Enumerator en(game, opts);
  std::vector<std::size_t> pick(m, 0);
  std::size_t index = 0;
  while (true) {
    std::vector<std::vector<int>> S(m);
    for (int i = 0; i < m; ++i) S[i] = choices[i][pick[i]];
    en.support(SupportModel(game, S), index++);
    int i = m - 1;
    for (; i >= 0; --i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i < 0) break;
  }
  return en.take();
}

}  // namespace nashgadgets
