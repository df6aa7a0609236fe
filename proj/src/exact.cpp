#include "nashgadgets/exact.hpp"

#include <cmath>
#include <sstream>

#include "nashgadgets/errors.hpp"

namespace nashgadgets {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMixedRadicands: return "MixedRadicands";
    case ErrorCode::kDivideByZero: return "DivideByZero";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kBadPlayerCount: return "BadPlayerCount";
    case ErrorCode::kNotASolution: return "NotASolution";
    case ErrorCode::kEmptyCoalition: return "EmptyCoalition";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kUnknownProblemId: return "UnknownProblemId";
    case ErrorCode::kBadVariantSource: return "BadVariantSource";
    case ErrorCode::kUndecided: return "Undecided";
  }
  return "Error";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long long n) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
  q_ = mpq_class(static_cast<long>(n));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::kDivideByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kDivideByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw SyntaxError(0, "bad rational literal '" + std::string(text) + "'");
  } else {
    auto dtext = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(dtext, den) ||
        dtext[0] == '-' || dtext[0] == '+') {
      throw SyntaxError(0, "bad rational literal '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::kBadParameter, "non-finite double");
  return Rational(mpq_class(x));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// ------------------------------------------------------------ QuadAlgebraic

void square_free_decompose(const mpz_class& n, mpz_class& square_free, mpz_class& cofactor) {
  if (n <= 0) throw Error(ErrorCode::kBadParameter, "square-free part of non-positive integer");
  mpz_class rest = n;
  cofactor = 1;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    cofactor = root;
    square_free = 1;
    return;
  }
  // Trial division up to the cube root (capped) leaves a cofactor with at
  // most two prime factors, which is either square-free or a perfect square.
  mpz_class limit;
  mpz_root(limit.get_mpz_t(), rest.get_mpz_t(), 3);
  const unsigned long cap = 2000000UL;
  unsigned long lim = limit.fits_ulong_p() ? std::min(limit.get_ui() + 1, cap) : cap;
  mpz_class pp;
  for (unsigned long p = 2; p <= lim && rest > 1; p += (p == 2 ? 1 : 2)) {
    pp = p;
    pp *= p;
    while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t())) {
      rest /= pp;
      cofactor *= p;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      // a single factor p stays in the square-free part
    }
  }
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    cofactor *= root;
    rest = 1;
  }
  square_free = rest;
}

QuadAlgebraic::QuadAlgebraic(Rational a, Rational b, const mpz_class& d) : a_(std::move(a)) {
  if (d < 0) throw Error(ErrorCode::kBadParameter, "negative radicand");
  if (b.is_zero() || d == 0) return;
  mpz_class sf, co;
  square_free_decompose(d, sf, co);
  Rational scaled = b * Rational(co);
  if (sf == 1) {
    a_ += scaled;
    return;
  }
  b_ = scaled;
  d_ = sf;
}

QuadAlgebraic QuadAlgebraic::sqrt_of(const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorCode::kBadParameter, "square root of a negative number");
  if (r.is_zero()) return QuadAlgebraic();
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class pq = r.num() * r.den();
  return QuadAlgebraic(Rational(0), Rational(mpz_class(1), r.den()), pq);
}

QuadAlgebraic QuadAlgebraic::parse_alg(std::string_view a, std::string_view b, std::string_view d) {
  mpz_class dz;
  std::string ds(d);
  if (ds.empty() || dz.set_str(ds, 10) != 0) throw SyntaxError(0, "bad radicand '" + ds + "'");
  return QuadAlgebraic(Rational::parse(a), Rational::parse(b), dz);
}

const Rational& QuadAlgebraic::rational() const {
  if (!is_rational()) throw Error(ErrorCode::kBadParameter, "value " + str() + " is irrational");
  return a_;
}

mpz_class QuadAlgebraic::common_radicand(const QuadAlgebraic& x, const QuadAlgebraic& y) {
  if (x.b_.is_zero()) return y.d_;
  if (y.b_.is_zero()) return x.d_;
  if (x.d_ != y.d_) {
    throw Error(ErrorCode::kMixedRadicands,
                "sqrt(" + x.d_.get_str() + ") and sqrt(" + y.d_.get_str() + ")");
  }
  return x.d_;
}

int QuadAlgebraic::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  int c = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  return sa > 0 ? c : -c;
}

double QuadAlgebraic::to_double() const {
  if (b_.is_zero()) return a_.to_double();
  return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

std::string QuadAlgebraic::str() const {
  if (b_.is_zero()) return a_.str();
  std::ostringstream os;
  Rational mag = abs(b_);
  std::string root = "sqrt(" + d_.get_str() + ")";
  std::string term = mag == Rational(1) ? root
                     : (mag.is_integer() ? mag.str() + "*" + root : "(" + mag.str() + ")*" + root);
  if (a_.is_zero()) {
    os << (b_.sign() < 0 ? "-" : "") << term;
  } else {
    os << a_.str() << (b_.sign() < 0 ? " - " : " + ") << term;
  }
  return os.str();
}

std::string QuadAlgebraic::literal() const {
  if (b_.is_zero()) return a_.str();
  return "alg " + a_.str() + " " + b_.str() + " " + d_.get_str();
}

std::ostream& operator<<(std::ostream& os, const QuadAlgebraic& x) { return os << x.str(); }

QuadAlgebraic QuadAlgebraic::operator-() const {
  QuadAlgebraic r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadAlgebraic& QuadAlgebraic::operator+=(const QuadAlgebraic& o) {
  if (o.b_.is_zero()) {
    a_ += o.a_;
    return *this;
  }
  mpz_class d = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = b_.is_zero() ? mpz_class(0) : d;
  return *this;
}

QuadAlgebraic& QuadAlgebraic::operator-=(const QuadAlgebraic& o) { return *this += -o; }

QuadAlgebraic& QuadAlgebraic::operator*=(const QuadAlgebraic& o) {
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    b_ *= o.a_;
    if (b_.is_zero()) d_ = 0;
    return *this;
  }
  if (b_.is_zero()) {
    Rational a = a_;
    a_ = a * o.a_;
    b_ = a * o.b_;
    d_ = b_.is_zero() ? mpz_class(0) : o.d_;
    return *this;
  }
  mpz_class d = common_radicand(*this, o);
  Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = b_.is_zero() ? mpz_class(0) : d;
  return *this;
}

QuadAlgebraic& QuadAlgebraic::operator/=(const QuadAlgebraic& o) {
  if (o.is_zero()) throw Error(ErrorCode::kDivideByZero, "division by zero");
  if (o.b_.is_zero()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  mpz_class d = common_radicand(*this, o);
  // x / (c + e sqrt d) = x (c - e sqrt d) / (c^2 - e^2 d)
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
  QuadAlgebraic conj;
  conj.a_ = o.a_;
  conj.b_ = -o.b_;
  conj.d_ = d;
  *this *= conj;
  a_ /= norm;
  b_ /= norm;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

std::strong_ordering operator<=>(const QuadAlgebraic& x, const QuadAlgebraic& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Ordering compare(const QuadAlgebraic& x, const QuadAlgebraic& y) {
  int s = (x - y).sign();
  return s < 0 ? Ordering::kLess : (s > 0 ? Ordering::kGreater : Ordering::kEqual);
}

double to_float(const QuadAlgebraic& x) { return x.to_double(); }

QuadAlgebraic abs(const QuadAlgebraic& x) { return x.sign() < 0 ? -x : x; }

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

std::optional<QuadAlgebraic> sqrt_in_field(const QuadAlgebraic& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_rational()) return QuadAlgebraic::sqrt_of(x.a());
  // (p + q sqrt d)^2 = x  =>  p^2 = (a +- sqrt(a^2 - b^2 d)) / 2, q = b / (2p)
  const Rational& a = x.a();
  const Rational& b = x.b();
  Rational d(x.radicand());
  auto s = rational_sqrt(a * a - b * b * d);
  if (!s) return std::nullopt;
  for (const Rational& p2 : {(a + *s) / Rational(2), (a - *s) / Rational(2)}) {
    auto p = rational_sqrt(p2);
    if (!p || p->is_zero()) continue;
    Rational q = b / (Rational(2) * *p);
    QuadAlgebraic root(*p, q, x.radicand());
    if (root.sign() < 0) root = -root;
    if (root * root == x) return root;
  }
  return std::nullopt;
}

std::vector<QuadAlgebraic> parse_literals(const std::vector<std::string>& tokens, int line) {
  std::vector<QuadAlgebraic> out;
  try {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i] == "alg") {
        if (i + 3 >= tokens.size()) throw SyntaxError(line, "truncated alg literal");
        out.push_back(QuadAlgebraic::parse_alg(tokens[i + 1], tokens[i + 2], tokens[i + 3]));
        i += 3;
      } else {
        out.emplace_back(Rational::parse(tokens[i]));
      }
    }
  } catch (const SyntaxError& e) {
    if (e.line() != 0 || line == 0) throw;
    std::string msg = e.what();
    auto pos = msg.find("line 0: ");
    throw SyntaxError(line, pos == std::string::npos ? msg : msg.substr(pos + 8));
  }
  return out;
}

}  // namespace nashgadgets

std::size_t std::hash<nashgadgets::Rational>::operator()(const nashgadgets::Rational& r) const noexcept {
  return std::hash<std::string>()(r.str());
}
