#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace gaut {

using Int = mpz_class;
using Rat = mpq_class;

// Ground field descriptor: Q when params is empty, otherwise the rational
// function field Q(a_1,...,a_m) with exact fraction arithmetic.
struct CoefficientField {
  std::vector<std::string> params;
  bool is_rationals() const { return params.empty(); }
  bool operator==(const CoefficientField& o) const { return params == o.params; }
};

// Sparse polynomial in the field parameters, exponent vectors of length m.
// Terms are kept sorted descending in graded-lex order and carry no zeros.
class ParamPoly {
 public:
  using Exp = std::vector<int>;
  std::vector<std::pair<Exp, Rat>> terms;

  ParamPoly() = default;
  explicit ParamPoly(const Rat& c) {
    if (c != 0) terms.push_back({Exp{}, c});
  }
  static ParamPoly param(int index, int nparams) {
    (void)nparams;
    ParamPoly p;
    Exp e(index + 1, 0);  // canonical: no trailing zeros
    e[index] = 1;
    p.terms.push_back({e, Rat(1)});
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    for (int e : terms[0].first)
      if (e) return false;
    return true;
  }
  Rat constant_value() const { return terms.empty() ? Rat(0) : terms[0].second; }
  int total_degree() const;

  bool operator==(const ParamPoly& o) const { return terms == o.terms; }
  bool operator<(const ParamPoly& o) const { return terms < o.terms; }

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly scaled(const Rat& c) const;

  // exact division; aborts if not divisible (callers guarantee it)
  ParamPoly divexact(const ParamPoly& d) const;

  void normalize_sort();
  std::string str(const std::vector<std::string>& params) const;
};

ParamPoly param_gcd(const ParamPoly& a, const ParamPoly& b);

// Element of the coefficient field: a reduced fraction num/den of parameter
// polynomials.  With no parameters both are constants and this is plain Q.
class Scalar {
 public:
  ParamPoly num, den;

  Scalar() : num(), den(Rat(1)) {}
  Scalar(int v) : num(Rat(v)), den(Rat(1)) {}
  Scalar(const Rat& v) : num(v), den(Rat(1)) {}
  Scalar(ParamPoly n, ParamPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }
  static Scalar from_poly(ParamPoly p) {
    Scalar s;
    s.num = std::move(p);
    s.den = ParamPoly(Rat(1));
    return s;
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num == den; }
  bool is_constant() const { return num.is_constant() && den.is_constant(); }
  Rat rational_value() const;  // requires is_constant()

  bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const {
    if (num < o.num) return true;
    if (o.num < num) return false;
    return den < o.den;
  }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inv() const;

  std::string str(const std::vector<std::string>& params) const;

 private:
  void reduce();
};

}  // namespace gaut
