#pragma once

#include <string>
#include <vector>

#include "gaut/scalar.hpp"

namespace gaut {

// Exponent vector; fixed length = number of ring variables.
using Exp = std::vector<int>;

int exp_degree(const Exp& e);
Exp exp_add(const Exp& a, const Exp& b);
bool exp_divides(const Exp& a, const Exp& b);  // a | b componentwise
Exp exp_sub(const Exp& a, const Exp& b);
Exp exp_lcm(const Exp& a, const Exp& b);
bool exp_disjoint(const Exp& a, const Exp& b);

// global storage order: graded lex, used for canonical term lists and printing
bool grlex_greater(const Exp& a, const Exp& b);

// Sparse multivariate polynomial over the coefficient field.  Terms are kept
// sorted descending in the global graded-lex order with no zero coefficients.
class Polynomial {
 public:
  std::vector<std::pair<Exp, Scalar>> terms;

  Polynomial() = default;
  static Polynomial zero() { return {}; }
  static Polynomial constant(const Scalar& c, int nvars);
  static Polynomial monomial(const Exp& e, const Scalar& c);
  static Polynomial variable(int i, int nvars);

  bool is_zero() const { return terms.empty(); }
  int total_degree() const;
  size_t size() const { return terms.size(); }

  Scalar coeff(const Exp& e) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  bool operator==(const Polynomial& o) const { return terms == o.terms; }

  void normalize_sort();

  // substitute variable i by the given polynomial (same nvars)
  Polynomial substitute(int var, const Polynomial& value, int nvars) const;
  // simultaneous substitution: variable i -> images[i]
  static Polynomial compose(const Polynomial& f, const std::vector<Polynomial>& images, int nvars_out);
  // reinterpret in a ring with a different variable count via an index map
  // (old var i -> new var map[i]; map[i] < 0 demands the variable is absent)
  Polynomial remap(const std::vector<int>& map, int nvars_out) const;
};

}  // namespace gaut
