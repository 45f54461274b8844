#include "gaut/ring.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

#include "gaut/diag.hpp"

namespace gaut {

GroupElement GradedPolyRing::degree_of_exp(const Exp& e) const {
  GroupElement d = GroupElement::zero(K);
  for (int i = 0; i < nvars(); ++i) {
    if (e[i] == 0) continue;
    d = add(K, d, smul(K, Int(e[i]), degrees[i]));
  }
  return d;
}

int GradedPolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

int GradedPolyRing::param_index(const std::string& name) const {
  for (size_t i = 0; i < field.params.size(); ++i)
    if (field.params[i] == name) return (int)i;
  return -1;
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct Lexer {
  std::string s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip();
    return s[pos++];
  }
};

class Parser {
 public:
  Parser(const GradedPolyRing& ring, const std::string& text) : ring_(ring) { lx_.s = text; }

  Polynomial run() {
    Polynomial p = expr();
    if (!lx_.eof()) throw parse_error("trailing input in polynomial at '" + rest() + "'");
    return p;
  }

 private:
  const GradedPolyRing& ring_;
  Lexer lx_;

  std::string rest() { return lx_.s.substr(lx_.pos); }

  Polynomial expr() {
    Polynomial acc;
    bool neg = false;
    if (lx_.peek() == '+' || lx_.peek() == '-') neg = lx_.take() == '-';
    acc = term();
    if (neg) acc = -acc;
    while (!lx_.eof() && (lx_.peek() == '+' || lx_.peek() == '-')) {
      bool minus = lx_.take() == '-';
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (!lx_.eof() && (lx_.peek() == '*' || lx_.peek() == '/')) {
      char op = lx_.take();
      Polynomial f = factor();
      if (op == '*') {
        acc = acc * f;
      } else {
        // division only by a nonzero field element
        if (f.is_zero()) throw parse_error("division by zero");
        if (f.total_degree() > 0) throw parse_error("division by a ring variable");
        acc = acc.scaled(f.terms[0].second.inv());
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (!lx_.eof() && lx_.peek() == '^') {
      lx_.take();
      long k = integer();
      if (k < 0) throw parse_error("negative exponent");
      Polynomial r = Polynomial::constant(Scalar(1), ring_.nvars());
      for (long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  long integer() {
    lx_.skip();
    size_t start = lx_.pos;
    if (lx_.pos < lx_.s.size() && (lx_.s[lx_.pos] == '-' || lx_.s[lx_.pos] == '+')) ++lx_.pos;
    while (lx_.pos < lx_.s.size() && std::isdigit((unsigned char)lx_.s[lx_.pos])) ++lx_.pos;
    if (lx_.pos == start) throw parse_error("expected integer");
    return std::stol(lx_.s.substr(start, lx_.pos - start));
  }

  Polynomial atom() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.take();
      Polynomial p = expr();
      if (lx_.peek() != ')') throw parse_error("expected ')'");
      lx_.take();
      return p;
    }
    if (std::isdigit((unsigned char)c)) {
      // rational literal n or n/m
      lx_.skip();
      size_t start = lx_.pos;
      while (lx_.pos < lx_.s.size() && std::isdigit((unsigned char)lx_.s[lx_.pos])) ++lx_.pos;
      Int num(lx_.s.substr(start, lx_.pos - start));
      return Polynomial::constant(Scalar(Rat(num)), ring_.nvars());
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      lx_.skip();
      size_t start = lx_.pos;
      while (lx_.pos < lx_.s.size() &&
             (std::isalnum((unsigned char)lx_.s[lx_.pos]) || lx_.s[lx_.pos] == '_'))
        ++lx_.pos;
      std::string name = lx_.s.substr(start, lx_.pos - start);
      int v = ring_.var_index(name);
      if (v >= 0) return Polynomial::variable(v, ring_.nvars());
      int p = ring_.param_index(name);
      if (p >= 0) {
        Scalar s = Scalar::from_poly(ParamPoly::param(p, (int)ring_.field.params.size()));
        return Polynomial::constant(s, ring_.nvars());
      }
      throw parse_error("unknown identifier '" + name + "'");
    }
    throw parse_error(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Polynomial parse_polynomial(const GradedPolyRing& ring, const std::string& text) {
  return Parser(ring, text).run();
}

std::string monomial_str(const GradedPolyRing& ring, const Exp& e) {
  std::string s;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string poly_str(const GradedPolyRing& ring, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms) {
    std::string cs = t.second.str(ring.field.params);
    bool neg = cs.size() && cs[0] == '-';
    if (first) {
      if (neg) {
        os << "-";
        cs = cs.substr(1);
      }
    } else {
      if (neg) {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    std::string mono = monomial_str(ring, t.first);
    if (mono == "1") {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else {
      os << cs << "*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// exact dense linear algebra

ScalarMat ScalarMat::identity(int n) {
  ScalarMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMat ScalarMat::operator*(const ScalarMat& o) const {
  assert(cols == o.rows);
  ScalarMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Scalar& v = (*this)(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        if (o(k, j).is_zero()) continue;
        r(i, j) += v * o(k, j);
      }
    }
  return r;
}

std::vector<int> ScalarMat::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (!(*this)(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < cols; ++j) std::swap((*this)(p, j), (*this)(row, j));
    Scalar inv = (*this)(row, col).inv();
    for (int j = col; j < cols; ++j) (*this)(row, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || (*this)(r, col).is_zero()) continue;
      Scalar f = (*this)(r, col);
      for (int j = col; j < cols; ++j) (*this)(r, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int ScalarMat::rank() const {
  ScalarMat m = *this;
  return (int)m.rref().size();
}

bool ScalarMat::invert(ScalarMat& out) const {
  assert(rows == cols);
  ScalarMat aug(rows, 2 * cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols + i) = Scalar(1);
  }
  auto piv = aug.rref();
  if ((int)piv.size() != rows) return false;
  for (int i = 0; i < rows; ++i)
    if (piv[i] != i) return false;
  out = ScalarMat(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = aug(i, cols + j);
  return true;
}

}  // namespace gaut
