#pragma once

#include <vector>

#include "gaut/scalar.hpp"

namespace gaut {

// Dense integer matrix over GMP integers.  Row-major.
class IntMat {
 public:
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Int(0)) {}
  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  Int& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
  const Int& operator()(int i, int j) const { return a[(size_t)i * cols + j]; }

  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator<(const IntMat& o) const;

  IntMat operator*(const IntMat& o) const;
  IntMat transposed() const;
  std::vector<Int> apply(const std::vector<Int>& v) const;

  Int det() const;                 // Bareiss, square only
  bool inverse(IntMat& out) const; // exact inverse when det = +-1
  std::string str() const;
};

struct SmithResult {
  IntMat U, D, V;  // U*M*V = D, D diagonal with d_i | d_{i+1}
  IntMat Vinv;     // V^{-1}, tracked alongside
  int rank = 0;
};

SmithResult smith_normal_form(const IntMat& M);

// One integer solution of M x = b, or false.
bool solve_integer(const IntMat& M, const std::vector<Int>& b, std::vector<Int>& x);

// Basis of the integer kernel lattice {x : M x = 0}, as columns.
std::vector<std::vector<Int>> kernel_lattice(const IntMat& M);

// Saturation of the lattice spanned by the given vectors (as the set of
// integer points in its Q-span), plus the index [L^sat : L] and the torsion
// invariants of Z^n / L.
struct LatticeInfo {
  int rank = 0;
  Int sat_index = 1;                  // product of invariant factors
  std::vector<Int> invariant_factors; // the d_i > 1 of Z^n / L (torsion part)
  // generators of tors(Z^n / L): vectors g with order(g mod L) = factor
  std::vector<std::vector<Int>> torsion_generators;
};
LatticeInfo lattice_info(const std::vector<std::vector<Int>>& gens, int n);

std::vector<Int> primitive(const std::vector<Int>& v);  // divide by gcd, first nonzero > 0 kept as-is

}  // namespace gaut
