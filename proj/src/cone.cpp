#include "gaut/cone.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "gaut/diag.hpp"

namespace gaut {

namespace {

using RatVec = std::vector<Rat>;
using RatMatD = std::vector<RatVec>;

// reduced row echelon over Q; returns pivot columns
std::vector<int> rref_q(RatMatD& m) {
  std::vector<int> piv;
  if (m.empty()) return piv;
  int rows = (int)m.size(), cols = (int)m[0].size();
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = col; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

// kernel basis of the row system m (as vectors of length cols)
std::vector<RatVec> kernel_q(RatMatD m, int cols) {
  std::vector<int> piv = rref_q(m);
  std::vector<bool> is_piv(cols, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<RatVec> out;
  for (int free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Int> to_primitive(const RatVec& v) {
  Int lcm_den(1);
  for (const Rat& x : v) lcm_den = lcm(lcm_den, Int(x.get_den()));
  std::vector<Int> w;
  w.reserve(v.size());
  for (const Rat& x : v) w.push_back(Int(x.get_num()) * (lcm_den / Int(x.get_den())));
  Int g(0);
  for (const Int& x : w) g = gcd(g, x);
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

RatVec to_rat(const std::vector<Int>& v) {
  RatVec r;
  r.reserve(v.size());
  for (const Int& x : v) r.push_back(Rat(x));
  return r;
}

Rat dot(const std::vector<Int>& a, const RatVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int doti(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// orthonormal-free span handling: basis of the linear hull of the vectors
// (integer, primitive rows) and its orthogonal complement
void span_and_complement(int dim, const std::vector<std::vector<Int>>& vecs,
                         std::vector<std::vector<Int>>& span_basis,
                         std::vector<std::vector<Int>>& complement) {
  IntMat M((int)vecs.size(), dim);
  for (int i = 0; i < (int)vecs.size(); ++i)
    for (int j = 0; j < dim; ++j) M(i, j) = vecs[i][j];
  complement = kernel_lattice(M);  // {x : <v,x> = 0 for all v}
  // span basis: saturated row space = kernel of the complement matrix
  IntMat C((int)complement.size(), dim);
  for (int i = 0; i < (int)complement.size(); ++i)
    for (int j = 0; j < dim; ++j) C(i, j) = complement[i][j];
  span_basis = kernel_lattice(C);
}

// Extreme-ray-spanned facets of a POINTED cone inside its span.  Input rays
// expressed in span coordinates (dimension s); returns primitive normals.
std::vector<std::vector<Int>> facet_scan(int s, const std::vector<std::vector<Int>>& rays) {
  std::set<std::vector<Int>> out;
  int n = (int)rays.size();
  if (s == 0) return {};
  if (n == 0) return {};
  // iterate subsets of size s-1
  std::vector<int> comb(std::max(0, s - 1));
  for (int i = 0; i < s - 1; ++i) comb[i] = i;
  auto handle = [&]() {
    RatMatD m;
    for (int idx : comb) m.push_back(to_rat(rays[idx]));
    auto ker = kernel_q(m, s);
    if ((int)ker.size() != 1) return;
    std::vector<Int> h = to_primitive(ker[0]);
    int pos = 0, neg = 0;
    for (const auto& r : rays) {
      Int v = doti(h, r);
      if (v > 0) ++pos;
      if (v < 0) ++neg;
    }
    if (pos && neg) return;
    if (neg) for (Int& x : h) x = -x;
    if (!pos && !neg && s > 1) return;  // degenerate
    out.insert(h);
  };
  if (s == 1) {
    handle();
  } else if (n >= s - 1) {
    while (true) {
      handle();
      int pos = s - 2;
      while (pos >= 0 && comb[pos] == n - (s - 1) + pos) --pos;
      if (pos < 0) break;
      ++comb[pos];
      for (int i = pos + 1; i < s - 1; ++i) comb[i] = comb[i - 1] + 1;
    }
  }
  return std::vector<std::vector<Int>>(out.begin(), out.end());
}

// keep only extreme rays: r is extreme iff it is not in the cone spanned by
// the others' tight set... at this scale the support test suffices:
// r extreme iff the set of facets tight at r has rank s-1
std::vector<std::vector<Int>> extract_extreme(int s, const std::vector<std::vector<Int>>& cand,
                                              const std::vector<std::vector<Int>>& facets) {
  std::set<std::vector<Int>> out;
  for (const auto& r : cand) {
    bool zero = true;
    for (const Int& x : r)
      if (x != 0) zero = false;
    if (zero) continue;
    RatMatD tight;
    for (const auto& h : facets)
      if (doti(h, r) == 0) tight.push_back(to_rat(h));
    RatMatD m = tight;
    if (s == 1 || (int)rref_q(m).size() == s - 1) out.insert(primitive(r));
  }
  return std::vector<std::vector<Int>>(out.begin(), out.end());
}

std::vector<Int> lift_normal(const std::vector<std::vector<Int>>& span_basis,
                             const std::vector<Int>& n_span, int dim) {
  // h = B G^{-1} n with B the span basis as columns; stays inside the span
  int s = (int)span_basis.size();
  RatMatD g(s, RatVec(s + 1, Rat(0)));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) g[i][j] = Rat(doti(span_basis[i], span_basis[j]));
    g[i][s] = Rat(n_span[i]);
  }
  auto piv = rref_q(g);
  (void)piv;
  RatVec h(dim, Rat(0));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < dim; ++j) h[j] += g[i][s] * Rat(span_basis[i][j]);
  return to_primitive(h);
}

}  // namespace

RationalCone cone_from_rays(int dim, const std::vector<std::vector<Int>>& rays_in) {
  RationalCone c;
  c.dim = dim;
  std::set<std::vector<Int>> uniq;
  for (const auto& r : rays_in) {
    bool zero = true;
    for (const Int& x : r)
      if (x != 0) zero = false;
    if (!zero) uniq.insert(primitive(r));
  }
  std::vector<std::vector<Int>> rays(uniq.begin(), uniq.end());
  if (rays.empty()) {
    c.equations = kernel_lattice(IntMat(0, dim));  // all of Z^d as equations
    return c;
  }

  std::vector<std::vector<Int>> span_basis;
  span_and_complement(dim, rays, span_basis, c.equations);
  int s = (int)span_basis.size();

  // coordinates of the rays in the span basis
  std::vector<std::vector<Int>> rs;
  for (const auto& r : rays) {
    RatMatD m(s, RatVec(s + 1, Rat(0)));
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) m[i][j] = Rat(doti(span_basis[i], span_basis[j]));
      m[i][s] = Rat(doti(span_basis[i], r));
    }
    rref_q(m);
    RatVec y(s);
    for (int i = 0; i < s; ++i) y[i] = m[i][s];
    rs.push_back(to_primitive(y));
  }

  auto facets_span = facet_scan(s, rs);
  // pointedness: a pointed cone's facet normals positively span the dual;
  // the sum of all normals must be strictly positive on every ray
  {
    std::vector<Int> total(s, Int(0));
    for (const auto& h : facets_span)
      for (int i = 0; i < s; ++i) total[i] += h[i];
    for (const auto& r : rs)
      if (doti(total, r) <= 0)
        throw grading_error("NonPointedCone", "cone_from_rays requires a pointed cone");
  }
  auto extremal = extract_extreme(s, rs, facets_span);
  // map back to ambient coordinates
  std::set<std::vector<Int>> rset, fset;
  for (const auto& y : extremal) {
    RatVec x(dim, Rat(0));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < dim; ++j) x[j] += Rat(y[i]) * Rat(span_basis[i][j]);
    rset.insert(to_primitive(x));
  }
  for (const auto& n : facets_span) fset.insert(lift_normal(span_basis, n, dim));
  c.rays.assign(rset.begin(), rset.end());
  c.facets.assign(fset.begin(), fset.end());
  return c;
}

RationalCone cone_from_inequalities(int dim, const std::vector<std::vector<Int>>& H,
                                    const std::vector<std::vector<Int>>& E) {
  // restrict to the solution space of E
  IntMat Em((int)E.size(), dim);
  for (int i = 0; i < (int)E.size(); ++i)
    for (int j = 0; j < dim; ++j) Em(i, j) = E[i][j];
  auto basis = kernel_lattice(Em);  // x = B y
  int s = (int)basis.size();

  // inequalities in y-coordinates
  std::vector<std::vector<Int>> Hy;
  for (const auto& h : H) {
    std::vector<Int> row(s, Int(0));
    for (int i = 0; i < s; ++i) row[i] = doti(h, basis[i]);
    Hy.push_back(std::move(row));
  }
  // drop zero rows
  std::vector<std::vector<Int>> Hy2;
  for (auto& h : Hy) {
    bool zero = true;
    for (const Int& x : h)
      if (x != 0) zero = false;
    if (!zero) Hy2.push_back(primitive(h));
  }
  // lineality of {y : Hy >= 0} must vanish for a pointed result
  {
    IntMat Hm((int)Hy2.size(), s);
    for (int i = 0; i < (int)Hy2.size(); ++i)
      for (int j = 0; j < s; ++j) Hm(i, j) = Hy2[i][j];
    if (!kernel_lattice(Hm).empty() && s > 0)
      throw grading_error("NonPointedCone", "halfspace system has lineality");
  }
  // rays of {y : Hy >= 0} = facets of cone(rows of Hy)
  auto ray_normals = facet_scan(s, Hy2);
  // also the candidates from the facet scan are rays; filter genuine ones:
  // keep y with H y >= 0 (facet_scan already orients) -- verify
  std::vector<std::vector<Int>> rays_y;
  for (const auto& y : ray_normals) {
    bool ok = true;
    for (const auto& h : Hy2)
      if (doti(h, y) < 0) {
        ok = false;
        break;
      }
    if (ok) rays_y.push_back(y);
  }
  std::vector<std::vector<Int>> rays_x;
  for (const auto& y : rays_y) {
    std::vector<Int> x(dim, Int(0));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < dim; ++j) x[j] += y[i] * basis[i][j];
    rays_x.push_back(primitive(x));
  }
  if (rays_x.empty()) {
    RationalCone c;
    c.dim = dim;
    c.equations = kernel_lattice(IntMat(0, dim));
    return c;
  }
  return cone_from_rays(dim, rays_x);
}

RationalCone cone_intersect(const RationalCone& a, const RationalCone& b) {
  assert(a.dim == b.dim);
  std::vector<std::vector<Int>> H, E;
  for (const auto& h : a.facets) H.push_back(h);
  for (const auto& h : b.facets) H.push_back(h);
  for (const auto& e : a.equations) E.push_back(e);
  for (const auto& e : b.equations) E.push_back(e);
  return cone_from_inequalities(a.dim, H, E);
}

bool cone_contains(const RationalCone& c, const std::vector<Rat>& x) {
  for (const auto& e : c.equations)
    if (dot(e, x) != 0) return false;
  for (const auto& h : c.facets)
    if (dot(h, x) < 0) return false;
  return true;
}

bool cone_contains_int(const RationalCone& c, const std::vector<Int>& x) {
  return cone_contains(c, to_rat(x));
}

int cone_dim(const RationalCone& c) { return c.dim - (int)c.equations.size(); }

PointednessResult pointedness(int dim, const std::vector<std::vector<Int>>& vectors) {
  PointednessResult res;
  int n = (int)vectors.size();
  // rank of the span
  int s;
  {
    RatMatD m;
    for (const auto& v : vectors) m.push_back(to_rat(v));
    RatMatD mm = m;
    s = (int)rref_q(mm).size();
  }
  // positive circuit search over subsets of size <= s+1 (Caratheodory bound
  // for minimal nonnegative dependencies)
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int size = 1; size <= std::min(n, s + 1); ++size) {
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      RatMatD m;
      for (int i : comb) m.push_back(to_rat(vectors[i]));
      // dependencies among the chosen vectors: kernel of the transpose system
      RatMatD tr(dim, RatVec(size, Rat(0)));
      for (int c = 0; c < size; ++c)
        for (int r = 0; r < dim; ++r) tr[r][c] = Rat(vectors[comb[c]][r]);
      auto ker = kernel_q(tr, size);
      if (ker.size() == 1) {
        bool all_pos = true, all_neg = true;
        for (const Rat& x : ker[0]) {
          if (x <= 0) all_pos = false;
          if (x >= 0) all_neg = false;
        }
        if (all_pos || all_neg) {
          res.pointed = false;
          res.circuit.assign(n, Rat(0));
          for (int i = 0; i < size; ++i)
            res.circuit[comb[i]] = all_pos ? ker[0][i] : -ker[0][i];
          return res;
        }
      }
      int pos = size - 1;
      while (pos >= 0 && comb[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++comb[pos];
      for (int i = pos + 1; i < size; ++i) comb[i] = comb[i - 1] + 1;
    }
  }
  // pointed: a strict functional exists; build it from the facet normals
  res.pointed = true;
  RationalCone c = cone_from_rays(dim, vectors);
  std::vector<Int> u(dim, Int(0));
  for (const auto& h : c.facets)
    for (int j = 0; j < dim; ++j) u[j] += h[j];
  // strictness sanity
  for (const auto& v : vectors) {
    bool zero = true;
    for (const Int& x : v)
      if (x != 0) zero = false;
    if (!zero) assert(doti(u, v) > 0);
  }
  res.functional = u;
  return res;
}

}  // namespace gaut
