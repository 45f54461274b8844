#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaut/abelian.hpp"
#include "gaut/poly.hpp"

namespace gaut {

// K-graded polynomial ring S = F[T_1..T_r] with degree map delta(e_i) = deg T_i.
struct GradedPolyRing {
  CoefficientField field;
  std::vector<std::string> vars;
  AbelianGroup K;
  std::vector<GroupElement> degrees;

  int nvars() const { return (int)vars.size(); }
  GroupElement degree_of_exp(const Exp& e) const;
  int var_index(const std::string& name) const;  // -1 if absent
  int param_index(const std::string& name) const;
};

struct Ideal {
  std::vector<Polynomial> gens;
  bool is_zero() const {
    for (const auto& g : gens)
      if (!g.is_zero()) return false;
    return true;
  }
};

// expression grammar: T1*T2 + T3^2 - 2/3*T4, parameters by name, ( ) allowed
Polynomial parse_polynomial(const GradedPolyRing& ring, const std::string& text);
std::string poly_str(const GradedPolyRing& ring, const Polynomial& p);
std::string monomial_str(const GradedPolyRing& ring, const Exp& e);

// Dense matrix over the coefficient field with exact row reduction.
class ScalarMat {
 public:
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  ScalarMat() = default;
  ScalarMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
  static ScalarMat identity(int n);

  Scalar& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
  const Scalar& operator()(int i, int j) const { return a[(size_t)i * cols + j]; }

  ScalarMat operator*(const ScalarMat& o) const;

  // in-place reduced row echelon form; returns pivot columns
  std::vector<int> rref();
  int rank() const;
  bool invert(ScalarMat& out) const;
};

}  // namespace gaut
