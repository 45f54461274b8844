#include "gaut/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace gaut {

bool IntMat::operator<(const IntMat& o) const {
  if (rows != o.rows) return rows < o.rows;
  if (cols != o.cols) return cols < o.cols;
  return a < o.a;
}

IntMat IntMat::operator*(const IntMat& o) const {
  assert(cols == o.rows);
  IntMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols; ++j) r(i, j) += v * o(k, j);
    }
  return r;
}

IntMat IntMat::transposed() const {
  IntMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
  assert((int)v.size() == cols);
  std::vector<Int> r(rows, Int(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

Int IntMat::det() const {
  assert(rows == cols);
  int n = rows;
  if (n == 0) return 1;
  // fraction-free Bareiss
  IntMat m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num / prev;
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

bool IntMat::inverse(IntMat& out) const {
  assert(rows == cols);
  Int d = det();
  if (d != 1 && d != -1) return false;
  int n = rows;
  // adjugate via cofactors on small matrices; n stays tiny here (<= ~8)
  out = IntMat(n, n);
  if (n == 0) return true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc) = (*this)(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = minor.det();
      if ((i + j) % 2) cof = -cof;
      out(j, i) = cof * d;  // d = 1/d since d = +-1
    }
  return true;
}

std::string IntMat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

SmithResult smith_normal_form(const IntMat& M) {
  SmithResult res;
  int m = M.rows, n = M.cols;
  res.D = M;
  res.U = IntMat::identity(m);
  res.V = IntMat::identity(n);
  res.Vinv = IntMat::identity(n);
  IntMat& D = res.D;
  IntMat& U = res.U;
  IntMat& V = res.V;
  IntMat& W = res.Vinv;

  auto swap_rows = [&](int i, int j) {
    for (int c = 0; c < n; ++c) std::swap(D(i, c), D(j, c));
    for (int c = 0; c < m; ++c) std::swap(U(i, c), U(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < m; ++r) std::swap(D(r, i), D(r, j));
    for (int r = 0; r < n; ++r) std::swap(V(r, i), V(r, j));
    for (int c = 0; c < n; ++c) std::swap(W(i, c), W(j, c));
  };
  auto addmul_row = [&](int dst, int src, const Int& c) {
    for (int k = 0; k < n; ++k) D(dst, k) += c * D(src, k);
    for (int k = 0; k < m; ++k) U(dst, k) += c * U(src, k);
  };
  // col_dst += c * col_src is right-multiplication by an elementary matrix;
  // its inverse acts on W = V^{-1} as row_src -= c * row_dst
  auto addmul_col = [&](int dst, int src, const Int& c) {
    for (int k = 0; k < m; ++k) D(k, dst) += c * D(k, src);
    for (int k = 0; k < n; ++k) V(k, dst) += c * V(k, src);
    for (int k = 0; k < n; ++k) W(src, k) -= c * W(dst, k);
  };
  auto negate_row = [&](int i) {
    for (int k = 0; k < n; ++k) D(i, k) = -D(i, k);
    for (int k = 0; k < m; ++k) U(i, k) = -U(i, k);
  };

  int t = 0;
  int lim = std::min(m, n);
  while (t < lim) {
    // pivot: smallest nonzero |entry| in the remaining block
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (D(i, j) != 0) {
          Int v = abs(D(i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);
    bool clean = true;
    for (int i = t + 1; i < m; ++i)
      if (D(i, t) != 0) {
        Int q = D(i, t) / D(t, t);
        if (q != 0) addmul_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
    for (int j = t + 1; j < n; ++j)
      if (D(t, j) != 0) {
        Int q = D(t, j) / D(t, t);
        if (q != 0) addmul_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
    if (!clean) continue;  // remainders became new smaller pivots
    // divisibility: D(t,t) must divide everything below-right
    bool again = false;
    for (int i = t + 1; i < m && !again; ++i)
      for (int j = t + 1; j < n && !again; ++j)
        if (D(i, j) % D(t, t) != 0) {
          addmul_row(t, i, Int(1));
          again = true;
        }
    if (again) continue;
    if (D(t, t) < 0) negate_row(t);
    ++t;
  }
  res.rank = t;
  return res;
}

bool solve_integer(const IntMat& M, const std::vector<Int>& b, std::vector<Int>& x) {
  assert((int)b.size() == M.rows);
  SmithResult s = smith_normal_form(M);
  std::vector<Int> c = s.U.apply(b);
  std::vector<Int> y(M.cols, Int(0));
  for (int i = 0; i < std::min(M.rows, M.cols); ++i) {
    const Int& d = s.D(i, i);
    if (d == 0) {
      if (c[i] != 0) return false;
    } else {
      if (c[i] % d != 0) return false;
      y[i] = c[i] / d;
    }
  }
  for (int i = std::min(M.rows, M.cols); i < M.rows; ++i)
    if (c[i] != 0) return false;
  x = s.V.apply(y);
  return true;
}

std::vector<std::vector<Int>> kernel_lattice(const IntMat& M) {
  SmithResult s = smith_normal_form(M);
  std::vector<std::vector<Int>> out;
  for (int j = 0; j < M.cols; ++j) {
    bool zero_col = j >= std::min(M.rows, M.cols) || s.D(j, j) == 0;
    if (!zero_col) continue;
    std::vector<Int> v(M.cols);
    for (int i = 0; i < M.cols; ++i) v[i] = s.V(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

LatticeInfo lattice_info(const std::vector<std::vector<Int>>& gens, int n) {
  LatticeInfo info;
  IntMat M((int)gens.size(), n);
  for (int i = 0; i < (int)gens.size(); ++i)
    for (int j = 0; j < n; ++j) M(i, j) = gens[i][j];
  SmithResult s = smith_normal_form(M);
  info.rank = s.rank;
  // L = row space of M = span{ d_i * w_i } where w_i are the rows of V^{-1},
  // a basis of Z^n.  Hence Z^n / L = sum_i Z/d_i (+ free part) with the class
  // of w_i generating the i-th cyclic factor.
  for (int i = 0; i < s.rank; ++i) {
    const Int& d = s.D(i, i);
    if (d > 1) {
      info.sat_index *= d;
      info.invariant_factors.push_back(d);
      std::vector<Int> g(n);
      for (int c = 0; c < n; ++c) g[c] = s.Vinv(i, c);
      info.torsion_generators.push_back(std::move(g));
    }
  }
  return info;
}

std::vector<Int> primitive(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  std::vector<Int> r = v;
  if (g > 1)
    for (Int& x : r) x /= g;
  return r;
}

}  // namespace gaut
