#include "nashgadgets/systems.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "nashgadgets/errors.hpp"
#include "nashgadgets/game.hpp"

namespace nashgadgets {

void validate_system(const QuadraticSystem& sys) {
  if (sys.var_count < 1) throw Error(ErrorCode::kBadParameter, "a system needs at least one variable");
  if (sys.equations.empty()) throw Error(ErrorCode::kBadParameter, "a system needs at least one equation");
  for (const auto& eq : sys.equations) {
    for (const auto& t : eq) {
      if (t.i < 0 || t.j < 0 || t.i > sys.var_count || t.j > sys.var_count) {
        throw Error(ErrorCode::kIndexOutOfRange, "variable index out of range in term " + t.c.get_str() + ":" +
                                                     std::to_string(t.i) + ":" + std::to_string(t.j));
      }
      if (t.i > t.j) throw Error(ErrorCode::kBadParameter, "term indices must satisfy i <= j");
    }
  }
}

void validate_bilinear(const BilinearSystem& bsys) {
  if (bsys.dim < 1) throw Error(ErrorCode::kBadParameter, "dimension must be positive");
  if (bsys.matrices.empty()) throw Error(ErrorCode::kBadParameter, "a bilinear system needs at least one matrix");
  for (const auto& m : bsys.matrices) {
    if (static_cast<int>(m.size()) != bsys.dim) throw Error(ErrorCode::kShapeMismatch, "matrix row count differs from dim");
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != bsys.dim) throw Error(ErrorCode::kShapeMismatch, "matrix column count differs from dim");
    }
  }
}

std::vector<Term> canonical_terms(const std::vector<Term>& terms) {
  std::map<std::pair<int, int>, mpz_class> acc;
  for (const auto& t : terms) {
    int i = std::min(t.i, t.j), j = std::max(t.i, t.j);
    acc[{i, j}] += t.c;
  }
  std::vector<Term> out;
  for (const auto& [ij, c] : acc) {
    if (c != 0) out.push_back(Term{c, ij.first, ij.second});
  }
  return out;
}

namespace {

mpz_class parse_mpz(const std::string& s, int line) {
  mpz_class v;
  std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  bool ok = !t.empty() && (t[0] == '-' ? t.size() > 1 : true);
  for (std::size_t k = (t.size() && t[0] == '-') ? 1 : 0; ok && k < t.size(); ++k) ok = t[k] >= '0' && t[k] <= '9';
  if (!ok || v.set_str(t, 10) != 0) throw SyntaxError(line, "bad integer '" + s + "'");
  return v;
}

int parse_small(const std::string& s, int line) {
  mpz_class v = parse_mpz(s, line);
  if (!v.fits_sint_p()) throw SyntaxError(line, "integer too large '" + s + "'");
  return static_cast<int>(v.get_si());
}

struct LineReader {
  std::istringstream in;
  int line = 0;
  explicit LineReader(const std::string& text) : in(text) {}
  // Next non-empty, non-comment line as tokens; false at end of input.
  bool next(std::vector<std::string>& tok) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line;
      tok = split_ws(raw);
      if (!tok.empty() && tok[0][0] != '#') return true;
    }
    return false;
  }
};

}  // namespace

QuadraticSystem parse_system(const std::string& text) {
  LineReader r(text);
  std::vector<std::string> tok;
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "qsys" || tok[1] != "1") {
    throw SyntaxError(r.line, "expected 'qsys 1' header");
  }
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "vars") throw SyntaxError(r.line, "expected 'vars n'");
  QuadraticSystem sys;
  sys.var_count = parse_small(tok[1], r.line);
  if (sys.var_count < 1) throw SyntaxError(r.line, "vars must be positive");
  while (r.next(tok)) {
    if (tok[0] != "eq") throw SyntaxError(r.line, "expected 'eq'");
    std::vector<Term> eq;
    for (std::size_t k = 1; k < tok.size(); ++k) {
      const std::string& t = tok[k];
      auto c1 = t.find(':');
      auto c2 = c1 == std::string::npos ? std::string::npos : t.find(':', c1 + 1);
      if (c2 == std::string::npos || t.find(':', c2 + 1) != std::string::npos) {
        throw SyntaxError(r.line, "term must read c:i:j, got '" + t + "'");
      }
      Term term{parse_mpz(t.substr(0, c1), r.line), parse_small(t.substr(c1 + 1, c2 - c1 - 1), r.line),
                parse_small(t.substr(c2 + 1), r.line)};
      if (term.i < 0 || term.j < 0 || term.i > sys.var_count || term.j > sys.var_count) {
        throw Error(ErrorCode::kIndexOutOfRange, "line " + std::to_string(r.line) + ": variable index out of range in '" + t + "'");
      }
      if (term.i > term.j) std::swap(term.i, term.j);
      eq.push_back(term);
    }
    sys.equations.push_back(eq);
  }
  if (sys.equations.empty()) throw SyntaxError(r.line, "no equations");
  return sys;
}

std::string format_system(const QuadraticSystem& sys) {
  std::ostringstream os;
  os << "qsys 1\nvars " << sys.var_count << '\n';
  for (const auto& eq : sys.equations) {
    os << "eq";
    for (const auto& t : eq) os << ' ' << t.c.get_str() << ':' << t.i << ':' << t.j;
    os << '\n';
  }
  return os.str();
}

BilinearSystem parse_bilinear(const std::string& text) {
  LineReader r(text);
  std::vector<std::string> tok;
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "bsys" || tok[1] != "1") {
    throw SyntaxError(r.line, "expected 'bsys 1' header");
  }
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "dim") throw SyntaxError(r.line, "expected 'dim n'");
  BilinearSystem b;
  b.dim = parse_small(tok[1], r.line);
  if (b.dim < 1) throw SyntaxError(r.line, "dim must be positive");
  while (r.next(tok)) {
    if (tok.size() != 1 || tok[0] != "mat") throw SyntaxError(r.line, "expected 'mat'");
    IntMatrix m;
    for (int row = 0; row < b.dim; ++row) {
      if (!r.next(tok)) throw SyntaxError(r.line, "truncated matrix");
      if (static_cast<int>(tok.size()) != b.dim) throw SyntaxError(r.line, "matrix row has wrong length");
      std::vector<mpz_class> vals;
      for (const auto& t : tok) vals.push_back(parse_mpz(t, r.line));
      m.push_back(vals);
    }
    b.matrices.push_back(m);
  }
  if (b.matrices.empty()) throw SyntaxError(r.line, "no matrices");
  return b;
}

std::string format_bilinear(const BilinearSystem& bsys) {
  std::ostringstream os;
  os << "bsys 1\ndim " << bsys.dim << '\n';
  for (const auto& m : bsys.matrices) {
    os << "mat\n";
    for (const auto& row : m) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].get_str();
      os << '\n';
    }
  }
  return os.str();
}

std::vector<QuadAlgebraic> eval_system(const QuadraticSystem& sys, const std::vector<QuadAlgebraic>& x) {
  if (static_cast<int>(x.size()) != sys.var_count) throw Error(ErrorCode::kShapeMismatch, "point has wrong dimension");
  std::vector<QuadAlgebraic> out;
  for (const auto& eq : sys.equations) {
    QuadAlgebraic v;
    for (const auto& t : eq) {
      QuadAlgebraic term{Rational(t.c)};
      if (t.i) term *= x[t.i - 1];
      if (t.j) term *= x[t.j - 1];
      v += term;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<QuadAlgebraic> eval_bilinear(const BilinearSystem& bsys, const std::vector<QuadAlgebraic>& x,
                                         const std::vector<QuadAlgebraic>& y) {
  if (static_cast<int>(x.size()) != bsys.dim || static_cast<int>(y.size()) != bsys.dim) {
    throw Error(ErrorCode::kShapeMismatch, "vectors must have length dim");
  }
  std::vector<QuadAlgebraic> out;
  for (const auto& m : bsys.matrices) {
    QuadAlgebraic v;
    for (int i = 0; i < bsys.dim; ++i) {
      if (x[i].is_zero()) continue;
      QuadAlgebraic row;
      for (int j = 0; j < bsys.dim; ++j) {
        if (m[i][j] != 0 && !y[j].is_zero()) row += QuadAlgebraic(Rational(m[i][j])) * y[j];
      }
      v += x[i] * row;
    }
    out.push_back(v);
  }
  return out;
}

QuadraticSystem normalize_to_promise(const QuadraticSystem& sys) {
  validate_system(sys);
  int n = sys.var_count;
  mpz_class A = 8 * n, B = -2;
  QuadraticSystem out;
  out.var_count = n + 1;
  for (const auto& eq : sys.equations) {
    std::vector<Term> terms;
    for (const auto& t : eq) {
      if (t.i == 0 && t.j == 0) {
        terms.push_back({t.c, 0, 0});
      } else if (t.i == 0) {
        terms.push_back({t.c * A, 0, t.j});
        terms.push_back({t.c * B, 0, 0});
      } else {
        terms.push_back({t.c * A * A, t.i, t.j});
        terms.push_back({t.c * A * B, 0, t.i});
        terms.push_back({t.c * A * B, 0, t.j});
        terms.push_back({t.c * B * B, 0, 0});
      }
    }
    out.equations.push_back(canonical_terms(terms));
  }
  out.equations.push_back({Term{2, 0, n + 1}, Term{-1, 0, 0}});
  return out;
}

std::vector<QuadAlgebraic> promise_point(const std::vector<QuadAlgebraic>& x) {
  int n = static_cast<int>(x.size());
  std::vector<QuadAlgebraic> z;
  for (const auto& v : x) z.push_back((v + QuadAlgebraic(2)) / QuadAlgebraic(8 * n));
  z.emplace_back(Rational(1, 2));
  return z;
}

QuadraticSystem augment_irrational(const QuadraticSystem& sys) {
  validate_system(sys);
  QuadraticSystem out = sys;
  out.var_count = sys.var_count + 1;
  int w = out.var_count;
  out.equations.push_back({Term{-1, 0, 0}, Term{2, w, w}});
  return out;
}

BilinearSystem bilinearize_homogenize(const QuadraticSystem& sys) {
  validate_system(sys);
  int n = sys.var_count;
  BilinearSystem b;
  b.dim = n + 1;
  IntMatrix zero(n + 1, std::vector<mpz_class>(n + 1, 0));
  for (const auto& eq : sys.equations) {
    IntMatrix m = zero;
    for (const auto& t : eq) {
      if (t.i == 0 && t.j == 0) {
        for (auto& row : m) {
          for (auto& v : row) v += t.c;
        }
      } else if (t.i == 0) {
        for (auto& v : m[t.j - 1]) v += t.c;
      } else {
        m[t.i - 1][t.j - 1] += t.c;
      }
    }
    b.matrices.push_back(m);
  }
  for (int i = 0; i < n; ++i) {
    IntMatrix m = zero;
    for (int j = 0; j <= n; ++j) {
      m[i][j] += 1;
      m[j][i] -= 1;
    }
    b.matrices.push_back(m);
  }
  return b;
}

std::vector<QuadAlgebraic> simplex_embed(const std::vector<QuadAlgebraic>& z) {
  std::vector<QuadAlgebraic> out = z;
  QuadAlgebraic slack(1);
  for (const auto& v : z) slack -= v;
  out.push_back(slack);
  return out;
}

}  // namespace nashgadgets
