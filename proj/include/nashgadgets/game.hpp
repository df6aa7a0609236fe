#pragma once

// Finite strategic-form games with exact rational payoffs, mixed profiles
// over a quadratic field, and the simple payoff transforms.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nashgadgets/exact.hpp"

namespace nashgadgets {

using PureProfile = std::vector<int>;
using Strategy = std::vector<QuadAlgebraic>;
using MixedProfile = std::vector<Strategy>;

class StrategicGame {
 public:
  StrategicGame() = default;
  /// All payoffs zero, labels "0", "1", ... per player.
  explicit StrategicGame(std::vector<int> action_counts);

  int players() const { return static_cast<int>(counts_.size()); }
  int actions(int player) const { return counts_.at(player); }
  const std::vector<int>& action_counts() const { return counts_; }
  std::size_t cell_count() const { return cells_; }

  const std::string& label(int player, int action) const { return labels_.at(player).at(action); }
  const std::vector<std::string>& labels(int player) const { return labels_.at(player); }
  void set_labels(int player, std::vector<std::string> labels);
  /// First action of `player` carrying `label`, or -1.
  int find_action(int player, const std::string& label) const;

  /// Row-major index, last player fastest.
  std::size_t index(const PureProfile& a) const;
  PureProfile profile_at(std::size_t index) const;

  const Rational& payoff(std::size_t index, int player) const { return pay_[index * counts_.size() + player]; }
  const Rational& payoff(const PureProfile& a, int player) const { return payoff(index(a), player); }
  std::vector<Rational> payoffs(const PureProfile& a) const;
  void set_payoffs(const PureProfile& a, const std::vector<Rational>& u);
  void set_payoff(std::size_t index, int player, Rational v) { pay_[index * counts_.size() + player] = std::move(v); }

  /// Free-form key/value annotations (gadget kind, M, K) carried through files.
  std::map<std::string, std::string>& meta() { return meta_; }
  const std::map<std::string, std::string>& meta() const { return meta_; }
  std::string meta_value(const std::string& key) const;

  friend bool operator==(const StrategicGame& x, const StrategicGame& y) {
    return x.counts_ == y.counts_ && x.labels_ == y.labels_ && x.pay_ == y.pay_ && x.meta_ == y.meta_;
  }

 private:
  std::vector<int> counts_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<Rational> pay_;
  std::size_t cells_ = 0;
  std::map<std::string, std::string> meta_;
};

/// Odometer over all pure profiles of the given action counts.
bool next_profile(PureProfile& a, const std::vector<int>& counts);

/// Throws ShapeMismatch on wrong shape, BadParameter on negative entries or
/// rows not summing to exactly 1.
void validate_profile(const StrategicGame& game, const MixedProfile& x);

std::vector<int> support(const Strategy& s);
MixedProfile pure_as_mixed(const StrategicGame& game, const PureProfile& a);

/// Exact expected payoff of every player.
std::vector<QuadAlgebraic> eval_payoff(const StrategicGame& game, const MixedProfile& x);
/// Payoff of `player` for each of their pure actions against x_{-player}.
std::vector<QuadAlgebraic> deviation_payoffs(const StrategicGame& game, const MixedProfile& x, int player);

bool is_zero_sum(const StrategicGame& game);
/// `reason` receives an explanation when the answer is false.
bool is_symmetric_game(const StrategicGame& game, std::string* reason = nullptr);
/// All players use the same strategy vector.
bool is_symmetric_profile(const MixedProfile& x);

enum class TransformKind { kTotalNeg, kTotalPos, kShiftScale };

struct PayoffTransform {
  TransformKind kind = TransformKind::kShiftScale;
  Rational alpha = 1;
  Rational beta = 0;
  std::vector<int> players;  // kShiftScale only; empty means everyone
};

StrategicGame transform_payoffs(const StrategicGame& game, const PayoffTransform& t);

// ---- text formats

std::string format_game(const StrategicGame& game);
StrategicGame parse_game(const std::string& text);

std::string format_profile(const MixedProfile& x);
MixedProfile parse_profile(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Whitespace tokenizer used by every line-oriented parser.
std::vector<std::string> split_ws(const std::string& line);

}  // namespace nashgadgets
