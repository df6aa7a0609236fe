#pragma once

// Integer quadratic systems and homogeneous bilinear systems over the
// product of two standard simplices.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nashgadgets/exact.hpp"

namespace nashgadgets {

/// c * x_i * x_j; index 0 stands for an absent factor, so (c,0,0) is a
/// constant and (c,0,j) a linear term. Always i <= j.
struct Term {
  mpz_class c;
  int i = 0;
  int j = 0;
};

struct QuadraticSystem {
  int var_count = 0;
  std::vector<std::vector<Term>> equations;
};

using IntMatrix = std::vector<std::vector<mpz_class>>;

struct BilinearSystem {
  int dim = 0;  // n + 1
  std::vector<IntMatrix> matrices;
};

/// Throws IndexOutOfRange / BadParameter when invariants are violated.
void validate_system(const QuadraticSystem& sys);
void validate_bilinear(const BilinearSystem& bsys);

QuadraticSystem parse_system(const std::string& text);
std::string format_system(const QuadraticSystem& sys);
BilinearSystem parse_bilinear(const std::string& text);
std::string format_bilinear(const BilinearSystem& bsys);

/// Merges duplicate monomials, orders i <= j and drops zero terms.
std::vector<Term> canonical_terms(const std::vector<Term>& terms);

/// Values of every equation at x (x[0] is x_1).
std::vector<QuadAlgebraic> eval_system(const QuadraticSystem& sys, const std::vector<QuadAlgebraic>& x);
/// q_k(x, y) for every matrix.
std::vector<QuadAlgebraic> eval_bilinear(const BilinearSystem& bsys, const std::vector<QuadAlgebraic>& x,
                                         const std::vector<QuadAlgebraic>& y);

/// Substitutes x_i = 8n z_i - 2 and appends 2 z_{n+1} - 1 = 0.
QuadraticSystem normalize_to_promise(const QuadraticSystem& sys);
/// Image of a box point under the normalization map.
std::vector<QuadAlgebraic> promise_point(const std::vector<QuadAlgebraic>& x);
/// Adds a fresh variable w with 2 w^2 - 1 = 0.
QuadraticSystem augment_irrational(const QuadraticSystem& sys);
BilinearSystem bilinearize_homogenize(const QuadraticSystem& sys);
/// z followed by the slack coordinate 1 - sum(z).
std::vector<QuadAlgebraic> simplex_embed(const std::vector<QuadAlgebraic>& z);

}  // namespace nashgadgets
