#pragma once

// Sparse multivariate polynomials over Q(sqrt d) and a small elimination
// solver for the zero-dimensional systems met in support enumeration.

#include <cstddef>
#include <map>
#include <vector>

#include "nashgadgets/exact.hpp"

namespace nashgadgets::detail {

using Monomial = std::vector<int>;

class Poly {
 public:
  explicit Poly(int nvars = 0) : n_(nvars) {}
  static Poly constant(int nvars, const QuadAlgebraic& c);
  static Poly variable(int nvars, int v);

  int nvars() const { return n_; }
  const std::map<Monomial, QuadAlgebraic>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return t_.size(); }
  int degree(int v) const;
  /// Variables with a positive exponent somewhere.
  std::vector<int> variables() const;

  void add_term(const Monomial& m, const QuadAlgebraic& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const QuadAlgebraic& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const QuadAlgebraic& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

  /// Coefficient polynomials of v^0, v^1, ..., v^degree(v).
  std::vector<Poly> split(int v) const;
  Poly substitute(int v, const QuadAlgebraic& value) const;
  Poly derivative(int v) const;
  QuadAlgebraic eval(const std::vector<QuadAlgebraic>& x) const;
  double eval(const std::vector<double>& x) const;
  /// Divides by the leading coefficient.
  void make_monic();

 private:
  int n_;
  std::map<Monomial, QuadAlgebraic> t_;
};

enum class SolveStatus { kFinite, kPositiveDim, kUnsupported };

struct SystemSolution {
  SolveStatus status = SolveStatus::kFinite;
  std::vector<std::vector<QuadAlgebraic>> points;
};

/// Common zeros of `polys` in the real closure, exact when every coordinate
/// stays inside one quadratic field.
SystemSolution solve_system(const std::vector<Poly>& polys, int nvars, std::size_t term_limit = 4000);

/// Real roots of a univariate polynomial (coefficients low to high); false
/// when an exact answer is out of reach.
bool univariate_roots(std::vector<QuadAlgebraic> coeffs, std::vector<QuadAlgebraic>& roots);

/// Best rational approximation with denominator at most max_den.
Rational continued_fraction(double x, long max_den);

}  // namespace nashgadgets::detail
