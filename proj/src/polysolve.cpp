#include "polysolve.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "nashgadgets/errors.hpp"

namespace nashgadgets::detail {

Poly Poly::constant(int nvars, const QuadAlgebraic& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int v) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[v] = 1;
  p.add_term(m, QuadAlgebraic(1));
  return p;
}

bool Poly::is_constant() const {
  for (const auto& [m, c] : t_) {
    for (int e : m) {
      if (e != 0) return false;
    }
  }
  return true;
}

int Poly::degree(int v) const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m[v]);
  return d;
}

std::vector<int> Poly::variables() const {
  std::vector<char> seen(n_, 0);
  for (const auto& [m, c] : t_) {
    for (int v = 0; v < n_; ++v) seen[v] = seen[v] || m[v] > 0;
  }
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

void Poly::add_term(const Monomial& m, const QuadAlgebraic& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const QuadAlgebraic& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.n_);
  Monomial m(a.n_);
  for (const auto& [ma, ca] : a.t_) {
    for (const auto& [mb, cb] : b.t_) {
      for (int v = 0; v < a.n_; ++v) m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::vector<Poly> Poly::split(int v) const {
  std::vector<Poly> out(degree(v) + 1, Poly(n_));
  for (const auto& [m, c] : t_) {
    Monomial r = m;
    r[v] = 0;
    out[m[v]].add_term(r, c);
  }
  return out;
}

Poly Poly::substitute(int v, const QuadAlgebraic& value) const {
  Poly out(n_);
  for (const auto& [m, c] : t_) {
    QuadAlgebraic f = c;
    for (int e = 0; e < m[v]; ++e) f *= value;
    Monomial r = m;
    r[v] = 0;
    out.add_term(r, f);
  }
  return out;
}

Poly Poly::derivative(int v) const {
  Poly out(n_);
  for (const auto& [m, c] : t_) {
    if (m[v] == 0) continue;
    Monomial r = m;
    --r[v];
    out.add_term(r, c * QuadAlgebraic(m[v]));
  }
  return out;
}

QuadAlgebraic Poly::eval(const std::vector<QuadAlgebraic>& x) const {
  QuadAlgebraic s(0);
  for (const auto& [m, c] : t_) {
    QuadAlgebraic f = c;
    for (int v = 0; v < n_; ++v) {
      for (int e = 0; e < m[v]; ++e) f *= x[v];
    }
    s += f;
  }
  return s;
}

double Poly::eval(const std::vector<double>& x) const {
  double s = 0;
  for (const auto& [m, c] : t_) {
    double f = c.to_double();
    for (int v = 0; v < n_; ++v) {
      for (int e = 0; e < m[v]; ++e) f *= x[v];
    }
    s += f;
  }
  return s;
}

void Poly::make_monic() {
  if (t_.empty()) return;
  QuadAlgebraic lead = t_.rbegin()->second;
  if (lead == QuadAlgebraic(1)) return;
  QuadAlgebraic inv = QuadAlgebraic(1) / lead;
  for (auto& [m, c] : t_) c *= inv;
}

Rational continued_fraction(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorCode::kBadParameter, "non-finite value");
  long sign = x < 0 ? -1 : 1;
  double r = std::fabs(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(r);
    if (a > 1e15) break;
    mpz_class ai(static_cast<unsigned long>(a));
    mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (q1 == 0) return Rational(0);
  return Rational(mpz_class(sign * p1), q1);
}

namespace {

using UPoly = std::vector<QuadAlgebraic>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly upoly_mod(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    QuadAlgebraic f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    QuadAlgebraic lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

QuadAlgebraic upoly_eval(const UPoly& p, const QuadAlgebraic& x) {
  QuadAlgebraic s(0);
  for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
  return s;
}

// Divides out (X - r).
UPoly deflate(const UPoly& p, const QuadAlgebraic& r) {
  UPoly q(p.size() - 1);
  QuadAlgebraic carry(0);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

void push_unique(std::vector<QuadAlgebraic>& roots, const QuadAlgebraic& r) {
  if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
}

}  // namespace

bool univariate_roots(std::vector<QuadAlgebraic> p, std::vector<QuadAlgebraic>& roots) {
  trim(p);
  if (p.empty()) return false;
  // rational roots of higher degree polynomials by snapping numeric roots
  while (p.size() > 3) {
    bool all_rational = std::all_of(p.begin(), p.end(), [](const QuadAlgebraic& c) { return c.is_rational(); });
    if (!all_rational) return false;
    if (p[0].is_zero()) {
      push_unique(roots, QuadAlgebraic(0));
      p.erase(p.begin());
      continue;
    }
    int n = static_cast<int>(p.size()) - 1;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    double lead = p.back().to_double();
    for (int i = 0; i < n; ++i) {
      comp(0, i) = -p[n - 1 - i].to_double() / lead;
      if (i + 1 < n) comp(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
      auto ev = es.eigenvalues()[i];
      if (std::fabs(ev.imag()) > 1e-6 * (1 + std::fabs(ev.real()))) continue;
      for (long den : {1000L, 1000000L}) {
        Rational cand = continued_fraction(ev.real(), den);
        if (upoly_eval(p, QuadAlgebraic(cand)).is_zero()) {
          push_unique(roots, QuadAlgebraic(cand));
          p = deflate(p, QuadAlgebraic(cand));
          found = true;
          break;
        }
      }
    }
    if (!found) return false;
  }
  if (p.size() == 2) {
    push_unique(roots, -p[0] / p[1]);
  } else if (p.size() == 3) {
    QuadAlgebraic disc = p[1] * p[1] - QuadAlgebraic(4) * p[2] * p[0];
    int s = disc.sign();
    if (s < 0) return true;
    auto sq = sqrt_in_field(disc);
    if (!sq) return false;
    QuadAlgebraic two_a = QuadAlgebraic(2) * p[2];
    push_unique(roots, (-p[1] - *sq) / two_a);
    push_unique(roots, (-p[1] + *sq) / two_a);
  }
  return true;
}

namespace {

class Eliminator {
 public:
  Eliminator(int n, std::size_t limit) : n_(n), limit_(limit) {}

  // Fills only the coordinates listed in `free`.
  SolveStatus run(std::vector<Poly> polys, std::vector<char> free, std::vector<std::vector<QuadAlgebraic>>& out) {
    std::vector<Poly> clean;
    for (auto& p : polys) {
      if (p.is_zero()) continue;
      if (p.is_constant()) return SolveStatus::kFinite;  // nonzero constant: no zeros
      if (p.size() > limit_) return SolveStatus::kUnsupported;
      p.make_monic();
      if (std::find(clean.begin(), clean.end(), p) == clean.end()) clean.push_back(std::move(p));
    }
    if (clean.empty()) {
      if (std::any_of(free.begin(), free.end(), [](char c) { return c != 0; })) return SolveStatus::kPositiveDim;
      out.emplace_back(n_);
      return SolveStatus::kFinite;
    }
    // a univariate polynomial fixes its variable
    for (const auto& p : clean) {
      auto vars = p.variables();
      if (vars.size() != 1) continue;
      int v = vars[0];
      UPoly g;
      for (const auto& q : clean) {
        auto qv = q.variables();
        if (qv.size() != 1 || qv[0] != v) continue;
        UPoly c;
        for (const auto& part : q.split(v)) c.push_back(part.is_zero() ? QuadAlgebraic(0) : part.terms().begin()->second);
        g = g.empty() ? c : upoly_gcd(g, c);
      }
      std::vector<QuadAlgebraic> roots;
      if (!univariate_roots(g, roots)) return SolveStatus::kUnsupported;
      std::sort(roots.begin(), roots.end());
      auto rest_free = free;
      rest_free[v] = 0;
      for (const auto& r : roots) {
        std::vector<Poly> sub;
        for (const auto& q : clean) sub.push_back(q.substitute(v, r));
        std::vector<std::vector<QuadAlgebraic>> pts;
        SolveStatus s = run(std::move(sub), rest_free, pts);
        if (s != SolveStatus::kFinite) return s;
        for (auto& pt : pts) {
          pt[v] = r;
          out.push_back(std::move(pt));
        }
      }
      return SolveStatus::kFinite;
    }
    // otherwise eliminate a variable appearing linearly
    std::size_t best = clean.size();
    int bv = -1;
    for (std::size_t i = 0; i < clean.size(); ++i) {
      for (int v : clean[i].variables()) {
        if (clean[i].degree(v) != 1) continue;
        if (best == clean.size() || clean[i].size() < clean[best].size()) {
          best = i;
          bv = v;
        }
      }
    }
    if (bv < 0) return SolveStatus::kUnsupported;
    auto parts = clean[best].split(bv);
    const Poly& B = parts[0];
    const Poly& A = parts[1];
    std::vector<Poly> others;
    for (std::size_t i = 0; i < clean.size(); ++i) {
      if (i != best) others.push_back(clean[i]);
    }
    SolveStatus status = SolveStatus::kFinite;
    // branch A = B = 0
    if (!A.is_constant()) {
      std::vector<Poly> b1 = others;
      b1.push_back(A);
      b1.push_back(B);
      SolveStatus s = run(std::move(b1), free, out);
      if (s == SolveStatus::kUnsupported) return s;
      if (s == SolveStatus::kPositiveDim) status = s;
    }
    // branch v = -B/A
    std::vector<Poly> b2;
    for (const auto& q : others) {
      auto qs = q.split(bv);
      int d = static_cast<int>(qs.size()) - 1;
      Poly acc(n_);
      Poly negB = B * QuadAlgebraic(-1);
      for (int k = 0; k <= d; ++k) {
        if (qs[k].is_zero()) continue;
        Poly term = qs[k];
        for (int e = 0; e < k; ++e) term = term * negB;
        for (int e = k; e < d; ++e) term = term * A;
        acc += term;
        if (acc.size() > limit_) return SolveStatus::kUnsupported;
      }
      b2.push_back(std::move(acc));
    }
    auto rest_free = free;
    rest_free[bv] = 0;
    std::vector<std::vector<QuadAlgebraic>> pts;
    SolveStatus s = run(std::move(b2), rest_free, pts);
    if (s == SolveStatus::kUnsupported) return s;
    if (s == SolveStatus::kPositiveDim) return s;
    for (auto& pt : pts) {
      QuadAlgebraic a = A.eval(pt);
      if (a.is_zero()) continue;
      pt[bv] = -B.eval(pt) / a;
      out.push_back(std::move(pt));
    }
    return status;
  }

 private:
  int n_;
  std::size_t limit_;
};

}  // namespace

SystemSolution solve_system(const std::vector<Poly>& polys, int nvars, std::size_t term_limit) {
  SystemSolution sol;
  Eliminator e(nvars, term_limit);
  try {
    sol.status = e.run(polys, std::vector<char>(nvars, 1), sol.points);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kMixedRadicands) throw;
    sol.status = SolveStatus::kUnsupported;
  }
  if (sol.status != SolveStatus::kFinite) sol.points.clear();
  // dedupe
  std::vector<std::vector<QuadAlgebraic>> uniq;
  for (auto& p : sol.points) {
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(std::move(p));
  }
  sol.points = std::move(uniq);
  return sol;
}

}  // namespace nashgadgets::detail
