#include "nashgadgets/analysis.hpp"

namespace nashgadgets {

const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kYes: return "YES";
    case VerdictStatus::kNo: return "NO";
    case VerdictStatus::kUnknown: return "UNKNOWN";
  }
  return "?";
}

Verdict check_NE(const StrategicGame& game, const MixedProfile& x) {
  Verdict v;
  v.payoffs = eval_payoff(game, x);
  for (int p = 0; p < game.players(); ++p) {
    auto dev = deviation_payoffs(game, x, p);
    for (int a = 0; a < game.actions(p); ++a) {
      QuadAlgebraic gain = dev[a] - v.payoffs[p];
      if (gain.sign() > 0 && (!v.deviation || gain > v.deviation->gain)) {
        v.deviation = DeviationWitness{p, a, gain};
      }
    }
  }
  v.status = v.deviation ? VerdictStatus::kNo : VerdictStatus::kYes;
  return v;
}

}  // namespace nashgadgets
