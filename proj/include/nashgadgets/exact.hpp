#pragma once

// Exact scalars: arbitrary precision rationals and elements a + b*sqrt(d) of
// a single real quadratic extension of the rationals.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace nashgadgets {

class Rational {
 public:
  Rational() = default;
  Rational(int n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n);       // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts `p` or `p/q` with optional leading sign. Throws SyntaxError
  /// (line 0) on malformed text and DivideByZero on q = 0.
  static Rational parse(std::string_view text);
  /// Exact binary value of a finite double.
  static Rational from_double(double x);

  const mpq_class& value() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  /// `p` for integers, `p/q` otherwise.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// a + b*sqrt(d), d a square-free positive integer, or a plain rational with
/// b = 0 and d = 0. Arithmetic between two genuinely irrational values with
/// different radicands is rejected with MixedRadicands.
class QuadAlgebraic {
 public:
  QuadAlgebraic() = default;
  QuadAlgebraic(const Rational& r) : a_(r) {}  // NOLINT(google-explicit-constructor)
  QuadAlgebraic(int n) : a_(n) {}              // NOLINT(google-explicit-constructor)
  QuadAlgebraic(long n) : a_(n) {}             // NOLINT(google-explicit-constructor)
  /// Canonicalizes: square factors of d move into b; d in {0,1} or b = 0
  /// collapse to a rational. Negative d is rejected (real field only).
  QuadAlgebraic(Rational a, Rational b, const mpz_class& d);

  /// sqrt(r) for r >= 0 as an exact element.
  static QuadAlgebraic sqrt_of(const Rational& r);
  /// Parses a single rational literal or the three operands following the
  /// `alg` keyword.
  static QuadAlgebraic parse_alg(std::string_view a, std::string_view b, std::string_view d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const mpz_class& radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  /// Throws BadParameter when the value is irrational.
  const Rational& rational() const;

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  double to_double() const;

  /// Human form such as `1 - (1/6)*sqrt(6)`.
  std::string str() const;
  /// File form: a rational literal or `alg a b d`.
  std::string literal() const;

  QuadAlgebraic operator-() const;
  QuadAlgebraic& operator+=(const QuadAlgebraic& o);
  QuadAlgebraic& operator-=(const QuadAlgebraic& o);
  QuadAlgebraic& operator*=(const QuadAlgebraic& o);
  QuadAlgebraic& operator/=(const QuadAlgebraic& o);

  friend QuadAlgebraic operator+(QuadAlgebraic x, const QuadAlgebraic& y) { return x += y; }
  friend QuadAlgebraic operator-(QuadAlgebraic x, const QuadAlgebraic& y) { return x -= y; }
  friend QuadAlgebraic operator*(QuadAlgebraic x, const QuadAlgebraic& y) { return x *= y; }
  friend QuadAlgebraic operator/(QuadAlgebraic x, const QuadAlgebraic& y) { return x /= y; }

  friend bool operator==(const QuadAlgebraic& x, const QuadAlgebraic& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }
  /// Exact order; throws MixedRadicands for incompatible radicands.
  friend std::strong_ordering operator<=>(const QuadAlgebraic& x, const QuadAlgebraic& y);

  /// Radicand shared by x and y (0 when both rational); throws on mismatch.
  static mpz_class common_radicand(const QuadAlgebraic& x, const QuadAlgebraic& y);

 private:
  Rational a_;
  Rational b_;
  mpz_class d_;  // 0 iff b_ == 0
};

std::ostream& operator<<(std::ostream& os, const QuadAlgebraic& x);

enum class Ordering { kLess, kEqual, kGreater };

Ordering compare(const QuadAlgebraic& x, const QuadAlgebraic& y);
double to_float(const QuadAlgebraic& x);
QuadAlgebraic abs(const QuadAlgebraic& x);

/// Square root inside the field of `x` (or a fresh quadratic field when x is
/// rational). Returns nullopt when the root would need a second radicand or
/// x is negative.
std::optional<QuadAlgebraic> sqrt_in_field(const QuadAlgebraic& x);

/// Square-free part s and cofactor c with n = c^2 * s (n > 0).
void square_free_decompose(const mpz_class& n, mpz_class& square_free, mpz_class& cofactor);

/// Parses a whitespace-tokenized stream of literals (`p/q` or `alg a b d`).
std::vector<QuadAlgebraic> parse_literals(const std::vector<std::string>& tokens, int line = 0);

}  // namespace nashgadgets

template <>
struct std::hash<nashgadgets::Rational> {
  std::size_t operator()(const nashgadgets::Rational& r) const noexcept;
};
