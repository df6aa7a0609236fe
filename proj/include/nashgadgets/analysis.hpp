#pragma once

// Equilibrium verification: unilateral deviations, coalition improvement by
// branch and bound over products of simplices, Pareto and strong checks,
// decision-table predicates, and a brute-force grid reference.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nashgadgets/game.hpp"

namespace nashgadgets {

enum class VerdictStatus { kYes, kNo, kUnknown };

const char* status_name(VerdictStatus s);

struct DeviationWitness {
  int player = 0;
  int action = 0;
  QuadAlgebraic gain;
};

struct CoalitionWitness {
  MixedProfile profile;
  std::vector<int> members;  // B1 followed by B2, each ascending
  std::vector<QuadAlgebraic> gains;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::kUnknown;
  std::optional<DeviationWitness> deviation;
  std::optional<CoalitionWitness> coalition;
  /// False when a NO relies on the margin eps or a grid resolution.
  bool exact = true;
  /// Final cell diameter (UNKNOWN) or grid step (grid NO).
  std::optional<Rational> resolution;
  std::vector<QuadAlgebraic> payoffs;  // check_NE: payoffs at the profile
  std::vector<int> B1;                 // pareto/strong: query of the witness
  std::vector<int> B2;
  std::size_t cells = 0;               // branch-and-bound cells visited
  double margin = 0;                   // grid oracle: best min B1 gain seen
};

/// YES iff no player has a strictly improving pure deviation. A NO carries
/// the largest gain, ties broken by smallest player then action.
Verdict check_NE(const StrategicGame& game, const MixedProfile& x);

struct CoalitionQuery {
  std::vector<int> B1;  // strict improvers
  std::vector<int> B2;  // weak improvers
  std::vector<int> B3;  // fixed
  Rational eps{1, 1024};
};

struct SearchOptions {
  Rational delta_min{mpz_class(1), mpz_class(1) << 20};
  std::size_t cell_budget = 400000;
};

/// Throws EmptyCoalition when B1 ∪ B2 is empty and BadParameter when the
/// sets do not partition the players.
void validate_query(const StrategicGame& game, const CoalitionQuery& q);

/// (m+1)-player game whose last player picks a member j of B1 ∪ B2 and is
/// paid u_j(x) - u_j(x^a) (+ eps for j in B1). Other players are paid 0.
/// Requires x rational.
StrategicGame build_auxiliary_game(const StrategicGame& game, const MixedProfile& x, const CoalitionQuery& q);

Verdict coalition_feasible(const StrategicGame& game, const MixedProfile& x, const CoalitionQuery& q,
                           const SearchOptions& opts = {});
Verdict check_pareto(const StrategicGame& game, const MixedProfile& x, const SearchOptions& opts = {});
Verdict check_strong(const StrategicGame& game, const MixedProfile& x, const SearchOptions& opts = {});

/// Scans grid points with denominator N on the deviators' simplices; YES with
/// an exactly verified witness or NO at resolution 1/N.
Verdict grid_oracle(const StrategicGame& game, const MixedProfile& x, const CoalitionQuery& q, int N);

struct ConditionParams {
  Rational u = 0;
  int k = 0;
  /// Per-player action subsets; empty means every non-⊥ action.
  std::vector<std::vector<int>> T;
};

/// Known problem ids, e.g. "large-payoffs", "in-a-ball", "restricting-supports".
std::vector<std::string> condition_ids();

/// Evaluates a decision-table condition on x. An "sne:" prefix also demands
/// a symmetric profile. "second-ne" needs the enumerated equilibrium set.
bool check_condition(const std::string& id, const StrategicGame& game, const MixedProfile& x,
                     const ConditionParams& params, const std::vector<MixedProfile>* equilibria = nullptr,
                     const SearchOptions& opts = {});

// ---- equilibrium enumeration

enum class Exactness { kExact, kNumeric };

struct Equilibrium {
  MixedProfile profile;
  Exactness flag = Exactness::kExact;
  std::vector<QuadAlgebraic> payoffs;
};

struct SolveOptions {
  int max_support = 0;          // 0: no bound
  double tolerance = 1e-12;     // residual bound on the numeric path
  std::size_t budget = 2000000; // support combinations
  unsigned long long seed = 1;
  int starts = 24;              // numeric multistarts per support
};

std::vector<Equilibrium> find_equilibria(const StrategicGame& game, const SolveOptions& opts = {});

}  // namespace nashgadgets
