#include <algorithm>
#include <functional>
#include <map>

#include "nashgadgets/analysis.hpp"
#include "nashgadgets/errors.hpp"
#include "nashgadgets/gadgets.hpp"

namespace nashgadgets {

namespace {

struct Context {
  const StrategicGame& game;
  const MixedProfile& x;
  const ConditionParams& params;
  const std::vector<MixedProfile>* equilibria;
  const SearchOptions& opts;
};

std::vector<int> target_set(const Context& c, int p) {
  if (static_cast<std::size_t>(p) < c.params.T.size()) {
    for (int a : c.params.T[p]) {
      if (a < 0 || a >= c.game.actions(p)) throw Error(ErrorCode::kIndexOutOfRange, "T entry out of range");
    }
    return c.params.T[p];
  }
  std::vector<int> out;
  for (int a = 0; a < c.game.actions(p); ++a) {
    if (!is_bot_label(c.game.label(p, a))) out.push_back(a);
  }
  return out;
}

bool decided(const Verdict& v, const std::string& id) {
  if (v.status == VerdictStatus::kUnknown) throw Error(ErrorCode::kUndecided, id + " could not be decided");
  return v.status == VerdictStatus::kYes;
}

QuadAlgebraic total(const std::vector<QuadAlgebraic>& u) {
  QuadAlgebraic s(0);
  for (const auto& v : u) s += v;
  return s;
}

using Predicate = std::function<bool(const Context&)>;

const std::map<std::string, Predicate>& table() {
  static const std::map<std::string, Predicate> t = {
      {"large-payoffs",
       [](const Context& c) {
         for (const auto& v : eval_payoff(c.game, c.x)) {
           if (v < QuadAlgebraic(c.params.u)) return false;
         }
         return true;
       }},
      {"small-payoffs",
       [](const Context& c) {
         for (const auto& v : eval_payoff(c.game, c.x)) {
           if (v > QuadAlgebraic(c.params.u)) return false;
         }
         return true;
       }},
      {"large-total-payoff", [](const Context& c) { return total(eval_payoff(c.game, c.x)) >= QuadAlgebraic(c.params.u); }},
      {"small-total-payoff", [](const Context& c) { return total(eval_payoff(c.game, c.x)) <= QuadAlgebraic(c.params.u); }},
      {"in-a-ball",
       [](const Context& c) {
         for (const auto& s : c.x) {
           for (const auto& v : s) {
             if (v > QuadAlgebraic(c.params.u)) return false;
           }
         }
         return true;
       }},
      {"large-supports",
       [](const Context& c) {
         for (const auto& s : c.x) {
           if (static_cast<int>(support(s).size()) < c.params.k) return false;
         }
         return true;
       }},
      {"small-supports",
       [](const Context& c) {
         for (const auto& s : c.x) {
           if (static_cast<int>(support(s).size()) > c.params.k) return false;
         }
         return true;
       }},
      {"restricting-supports",
       [](const Context& c) {
         for (int p = 0; p < c.game.players(); ++p) {
           for (int a : target_set(c, p)) {
             if (c.x[p][a].is_zero()) return false;
           }
         }
         return true;
       }},
      {"restricted-supports",
       [](const Context& c) {
         for (int p = 0; p < c.game.players(); ++p) {
           auto t = target_set(c, p);
           for (int a : support(c.x[p])) {
             if (std::find(t.begin(), t.end(), a) == t.end()) return false;
           }
         }
         return true;
       }},
      {"irrational",
       [](const Context& c) {
         for (const auto& s : c.x) {
           for (const auto& v : s) {
             if (!v.is_rational()) return true;
           }
         }
         return false;
       }},
      {"rational",
       [](const Context& c) {
         for (const auto& s : c.x) {
           for (const auto& v : s) {
             if (!v.is_rational()) return false;
           }
         }
         return true;
       }},
      {"second-ne",
       [](const Context& c) {
         if (!c.equilibria) throw Error(ErrorCode::kBadParameter, "second-ne needs an enumerated equilibrium set");
         for (const auto& e : *c.equilibria) {
           if (e != c.x) return true;
         }
         return false;
       }},
      {"pareto", [](const Context& c) { return decided(check_pareto(c.game, c.x, c.opts), "pareto"); }},
      {"non-pareto", [](const Context& c) { return !decided(check_pareto(c.game, c.x, c.opts), "non-pareto"); }},
      {"strong", [](const Context& c) { return decided(check_strong(c.game, c.x, c.opts), "strong"); }},
      {"non-strong", [](const Context& c) { return !decided(check_strong(c.game, c.x, c.opts), "non-strong"); }},
      {"symmetric", [](const Context& c) { return is_symmetric_profile(c.x); }},
      {"non-symmetric", [](const Context& c) { return !is_symmetric_profile(c.x); }},
  };
  return t;
}

}  // namespace

std::vector<std::string> condition_ids() {
  std::vector<std::string> out;
  for (const auto& [id, _] : table()) out.push_back(id);
  return out;
}

bool check_condition(const std::string& id, const StrategicGame& game, const MixedProfile& x,
                     const ConditionParams& params, const std::vector<MixedProfile>* equilibria,
                     const SearchOptions& opts) {
  std::string key = id;
  bool symmetric = false;
  if (key.rfind("sne:", 0) == 0) {
    symmetric = true;
    key = key.substr(4);
  }
  auto it = table().find(key);
  if (it == table().end()) throw Error(ErrorCode::kUnknownProblemId, id);
  if (params.k < 0) throw Error(ErrorCode::kBadParameter, "k must be non-negative");
  validate_profile(game, x);
  if (symmetric && !is_symmetric_profile(x)) return false;
  return it->second(Context{game, x, params, equilibria, opts});
}

}  // namespace nashgadgets
