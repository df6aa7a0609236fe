#pragma once

// Hand-rolled generators and small reference evaluators shared by the tests.

#include <random>
#include <vector>

#include "nashgadgets/exact.hpp"
#include "nashgadgets/game.hpp"
#include "nashgadgets/systems.hpp"

namespace testgen {

using nashgadgets::MixedProfile;
using nashgadgets::QuadAlgebraic;
using nashgadgets::Rational;
using nashgadgets::Strategy;

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// p/q with |p/q| <= bound and q in [1, max_den].
inline Rational rational(Rng& rng, int bound, int max_den) {
  int q = uniform_int(rng, 1, max_den);
  return Rational(uniform_int(rng, -bound * q, bound * q), q);
}

inline QuadAlgebraic quad(Rng& rng, int d) {
  return QuadAlgebraic(rational(rng, 5, 7), rational(rng, 5, 7), mpz_class(d));
}

/// Rational point of the standard simplex with `n` coordinates.
inline Strategy simplex_point(Rng& rng, int n, int grain = 12) {
  std::vector<int> w(n);
  int total = 0;
  while (total == 0) {
    total = 0;
    for (auto& v : w) total += (v = uniform_int(rng, 0, grain));
  }
  Strategy s;
  for (int v : w) s.emplace_back(Rational(v, total));
  return s;
}

inline MixedProfile random_profile(Rng& rng, const nashgadgets::StrategicGame& g) {
  MixedProfile x;
  for (int p = 0; p < g.players(); ++p) x.push_back(simplex_point(rng, g.actions(p)));
  return x;
}

inline nashgadgets::StrategicGame random_game(Rng& rng, std::vector<int> counts, int bound, int max_den) {
  nashgadgets::StrategicGame g(counts);
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    for (int p = 0; p < g.players(); ++p) g.set_payoff(c, p, rational(rng, bound, max_den));
  }
  return g;
}

/// Expected payoffs by explicit summation over every pure profile.
inline std::vector<QuadAlgebraic> brute_payoff(const nashgadgets::StrategicGame& g, const MixedProfile& x) {
  std::vector<QuadAlgebraic> out(g.players());
  nashgadgets::PureProfile a(g.players(), 0);
  do {
    QuadAlgebraic w(1);
    for (int p = 0; p < g.players(); ++p) w *= x[p][a[p]];
    if (w.is_zero()) continue;
    for (int p = 0; p < g.players(); ++p) out[p] += w * QuadAlgebraic(g.payoff(a, p));
  } while (nashgadgets::next_profile(a, g.action_counts()));
  return out;
}

struct Planted {
  nashgadgets::QuadraticSystem sys;
  std::vector<Rational> x;
};

/// System with ell equations in n variables that vanishes at a random point
/// of [-1,1]^n. Coefficients are integers; the constant absorbs the value.
inline Planted planted_system(Rng& rng, int n, int ell) {
  Planted out;
  out.sys.var_count = n;
  for (int i = 0; i < n; ++i) out.x.push_back(rational(rng, 1, 5));
  for (int k = 0; k < ell; ++k) {
    std::vector<nashgadgets::Term> eq;
    Rational value;
    do {
      eq.clear();
      value = 0;
      for (int i = 0; i <= n; ++i) {
        for (int j = std::max(i, 1); j <= n; ++j) {
          int c = uniform_int(rng, -4, 4);
          if (c == 0) continue;
          eq.push_back({c, i, j});
          value += Rational(c) * (i ? out.x[i - 1] : Rational(1)) * out.x[j - 1];
        }
      }
    } while (eq.empty());
    for (auto& t : eq) t.c *= value.den();
    if (!value.is_zero()) eq.push_back({mpz_class(-value.num()), 0, 0});
    out.sys.equations.push_back(nashgadgets::canonical_terms(eq));
  }
  return out;
}

/// Direct evaluation of sum_ij a_ij x_i y_j.
inline QuadAlgebraic bilinear_form(const nashgadgets::IntMatrix& a, const Strategy& x, const Strategy& y) {
  QuadAlgebraic s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) s += QuadAlgebraic(Rational(a[i][j])) * x[i] * y[j];
  }
  return s;
}

inline std::vector<QuadAlgebraic> as_quad(const std::vector<Rational>& v) {
  return std::vector<QuadAlgebraic>(v.begin(), v.end());
}

}  // namespace testgen
