#include "nashgadgets/game.hpp"

#include <algorithm>
#include <numeric>

#include "nashgadgets/errors.hpp"

namespace nashgadgets {

StrategicGame::StrategicGame(std::vector<int> action_counts) : counts_(std::move(action_counts)) {
  if (counts_.size() < 2) throw Error(ErrorCode::kBadPlayerCount, "a game needs at least 2 players");
  cells_ = 1;
  for (int c : counts_) {
    if (c < 1) throw Error(ErrorCode::kBadParameter, "every player needs at least one action");
    cells_ *= static_cast<std::size_t>(c);
  }
  labels_.resize(counts_.size());
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    for (int a = 0; a < counts_[p]; ++a) labels_[p].push_back(std::to_string(a));
  }
  pay_.assign(cells_ * counts_.size(), Rational(0));
}

void StrategicGame::set_labels(int player, std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != actions(player)) {
    throw Error(ErrorCode::kShapeMismatch, "label count differs from action count");
  }
  for (const auto& l : labels) {
    if (l.empty() || std::any_of(l.begin(), l.end(), [](char c) { return c == ' ' || c == '\t' || c == '\n'; })) {
      throw Error(ErrorCode::kBadParameter, "labels must be non-empty and free of whitespace");
    }
  }
  labels_.at(player) = std::move(labels);
}

int StrategicGame::find_action(int player, const std::string& label) const {
  const auto& ls = labels_.at(player);
  auto it = std::find(ls.begin(), ls.end(), label);
  return it == ls.end() ? -1 : static_cast<int>(it - ls.begin());
}

std::size_t StrategicGame::index(const PureProfile& a) const {
  if (a.size() != counts_.size()) throw Error(ErrorCode::kShapeMismatch, "profile length differs from player count");
  std::size_t idx = 0;
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    if (a[p] < 0 || a[p] >= counts_[p]) throw Error(ErrorCode::kIndexOutOfRange, "action index out of range");
    idx = idx * counts_[p] + a[p];
  }
  return idx;
}

PureProfile StrategicGame::profile_at(std::size_t index) const {
  PureProfile a(counts_.size());
  for (std::size_t p = counts_.size(); p-- > 0;) {
    a[p] = static_cast<int>(index % counts_[p]);
    index /= counts_[p];
  }
  return a;
}

std::vector<Rational> StrategicGame::payoffs(const PureProfile& a) const {
  std::size_t idx = index(a);
  return {pay_.begin() + idx * counts_.size(), pay_.begin() + (idx + 1) * counts_.size()};
}

void StrategicGame::set_payoffs(const PureProfile& a, const std::vector<Rational>& u) {
  if (u.size() != counts_.size()) throw Error(ErrorCode::kShapeMismatch, "payoff vector length differs from player count");
  std::size_t idx = index(a);
  std::copy(u.begin(), u.end(), pay_.begin() + idx * counts_.size());
}

std::string StrategicGame::meta_value(const std::string& key) const {
  auto it = meta_.find(key);
  return it == meta_.end() ? std::string() : it->second;
}

bool next_profile(PureProfile& a, const std::vector<int>& counts) {
  for (std::size_t p = counts.size(); p-- > 0;) {
    if (++a[p] < counts[p]) return true;
    a[p] = 0;
  }
  return false;
}

void validate_profile(const StrategicGame& game, const MixedProfile& x) {
  if (static_cast<int>(x.size()) != game.players()) {
    throw Error(ErrorCode::kShapeMismatch, "profile has " + std::to_string(x.size()) + " strategies for " +
                                               std::to_string(game.players()) + " players");
  }
  for (int p = 0; p < game.players(); ++p) {
    if (static_cast<int>(x[p].size()) != game.actions(p)) {
      throw Error(ErrorCode::kShapeMismatch, "strategy of player " + std::to_string(p + 1) + " has wrong length");
    }
    QuadAlgebraic total;
    for (const auto& v : x[p]) {
      if (v.sign() < 0) throw Error(ErrorCode::kBadParameter, "negative probability for player " + std::to_string(p + 1));
      total += v;
    }
    if (!(total == QuadAlgebraic(1))) {
      throw Error(ErrorCode::kBadParameter, "probabilities of player " + std::to_string(p + 1) + " sum to " + total.str());
    }
  }
}

std::vector<int> support(const Strategy& s) {
  std::vector<int> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (!s[a].is_zero()) out.push_back(static_cast<int>(a));
  }
  return out;
}

MixedProfile pure_as_mixed(const StrategicGame& game, const PureProfile& a) {
  MixedProfile x(game.players());
  for (int p = 0; p < game.players(); ++p) {
    x[p].assign(game.actions(p), QuadAlgebraic(0));
    x[p].at(a.at(p)) = QuadAlgebraic(1);
  }
  return x;
}

namespace {

// Visits every combination of support actions of the players in `who`,
// passing the partially filled pure profile and the probability weight.
template <typename F>
void for_each_support_cell(const MixedProfile& x, const std::vector<int>& who,
                           PureProfile& a, F&& visit) {
  std::vector<std::vector<int>> supp;
  for (int p : who) {
    supp.push_back(support(x[p]));
    if (supp.back().empty()) return;
  }
  std::vector<int> pos(who.size(), 0);
  while (true) {
    QuadAlgebraic w(1);
    for (std::size_t t = 0; t < who.size(); ++t) {
      int act = supp[t][pos[t]];
      a[who[t]] = act;
      w *= x[who[t]][act];
    }
    visit(a, w);
    std::size_t t = who.size();
    while (t > 0) {
      --t;
      if (++pos[t] < static_cast<int>(supp[t].size())) break;
      pos[t] = 0;
      if (t == 0) return;
    }
    if (who.empty()) return;
  }
}

}  // namespace

std::vector<QuadAlgebraic> eval_payoff(const StrategicGame& game, const MixedProfile& x) {
  validate_profile(game, x);
  int m = game.players();
  std::vector<QuadAlgebraic> out(m);
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  PureProfile a(m, 0);
  for_each_support_cell(x, all, a, [&](const PureProfile& cell, const QuadAlgebraic& w) {
    std::size_t idx = game.index(cell);
    for (int p = 0; p < m; ++p) {
      const Rational& u = game.payoff(idx, p);
      if (!u.is_zero()) out[p] += w * QuadAlgebraic(u);
    }
  });
  return out;
}

std::vector<QuadAlgebraic> deviation_payoffs(const StrategicGame& game, const MixedProfile& x, int player) {
  validate_profile(game, x);
  int m = game.players();
  std::vector<int> others;
  for (int p = 0; p < m; ++p) {
    if (p != player) others.push_back(p);
  }
  std::vector<QuadAlgebraic> out(game.actions(player));
  PureProfile a(m, 0);
  for_each_support_cell(x, others, a, [&](const PureProfile& cell, const QuadAlgebraic& w) {
    PureProfile b = cell;
    for (int act = 0; act < game.actions(player); ++act) {
      b[player] = act;
      const Rational& u = game.payoff(b, player);
      if (!u.is_zero()) out[act] += w * QuadAlgebraic(u);
    }
  });
  return out;
}

bool is_zero_sum(const StrategicGame& game) {
  for (std::size_t idx = 0; idx < game.cell_count(); ++idx) {
    Rational s;
    for (int p = 0; p < game.players(); ++p) s += game.payoff(idx, p);
    if (!s.is_zero()) return false;
  }
  return true;
}

bool is_symmetric_game(const StrategicGame& game, std::string* reason) {
  int m = game.players();
  for (int p = 1; p < m; ++p) {
    if (game.actions(p) != game.actions(0)) {
      if (reason) *reason = "UnequalActionSets";
      return false;
    }
  }
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  PureProfile b(m);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t idx = 0; idx < game.cell_count(); ++idx) {
      PureProfile a = game.profile_at(idx);
      // player perm[j] takes over the action of player j
      for (int j = 0; j < m; ++j) b[perm[j]] = a[j];
      std::size_t jdx = game.index(b);
      for (int j = 0; j < m; ++j) {
        if (!(game.payoff(jdx, perm[j]) == game.payoff(idx, j))) {
          if (reason) {
            *reason = "payoff of player " + std::to_string(j + 1) + " changes under a player permutation at cell " +
                      std::to_string(idx);
          }
          return false;
        }
      }
    }
  }
  return true;
}

bool is_symmetric_profile(const MixedProfile& x) {
  for (std::size_t p = 1; p < x.size(); ++p) {
    if (x[p] != x[0]) return false;
  }
  return true;
}

StrategicGame transform_payoffs(const StrategicGame& game, const PayoffTransform& t) {
  StrategicGame out = game;
  int m = game.players();
  if (t.kind != TransformKind::kShiftScale) {
    if (m != 3) throw Error(ErrorCode::kBadPlayerCount, "total-payoff transforms need exactly 3 players");
    Rational f = t.kind == TransformKind::kTotalNeg ? Rational(1) : Rational(3);
    for (std::size_t idx = 0; idx < game.cell_count(); ++idx) {
      Rational u1 = game.payoff(idx, 0);
      out.set_payoff(idx, 0, f * u1);
      out.set_payoff(idx, 1, -u1);
      out.set_payoff(idx, 2, -u1);
    }
    return out;
  }
  if (t.alpha.sign() <= 0) throw Error(ErrorCode::kBadParameter, "scale factor must be positive");
  std::vector<int> who = t.players;
  if (who.empty()) {
    who.resize(m);
    std::iota(who.begin(), who.end(), 0);
  }
  for (int p : who) {
    if (p < 0 || p >= m) throw Error(ErrorCode::kIndexOutOfRange, "player index out of range");
  }
  for (std::size_t idx = 0; idx < game.cell_count(); ++idx) {
    for (int p : who) out.set_payoff(idx, p, t.alpha * game.payoff(idx, p) + t.beta);
  }
  return out;
}

}  // namespace nashgadgets
