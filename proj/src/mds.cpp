#include "gaut/mds.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace gaut {

bool is_a_face(const GradedPolyRing& S, const Ideal& I, const std::vector<int>& gamma,
               const Budget& budget) {
  int r = S.nvars();
  std::vector<char> in_gamma(r, 0);
  for (int i : gamma) in_gamma[i] = 1;
  // I_gamma: specialize T_i = 0 off gamma, expressed in the gamma variables
  std::vector<int> map(r, -1);
  int ng = 0;
  for (int i = 0; i < r; ++i)
    if (in_gamma[i]) map[i] = ng++;
  std::vector<Polynomial> gens;
  bool unit_ideal = false;
  for (const auto& g : I.gens) {
    Polynomial spec;
    for (const auto& t : g.terms) {
      bool keep = true;
      for (int i = 0; i < r && keep; ++i)
        if (t.first[i] && !in_gamma[i]) keep = false;
      if (keep) spec.terms.push_back(t);
    }
    spec.normalize_sort();
    if (!spec.is_zero()) {
      if (spec.total_degree() == 0) unit_ideal = true;
      gens.push_back(spec.remap(map, ng));
    }
  }
  if (unit_ideal) return false;
  if (gens.empty()) return true;
  Polynomial prod = Polynomial::constant(Scalar(1), ng);
  for (int i = 0; i < ng; ++i) prod = prod * Polynomial::variable(i, ng);
  std::vector<Polynomial> sat = saturate(gens, ng, prod, budget);
  return is_solvable(sat, budget);
}

RationalCone orbit_cone(const GradedPolyRing& S, const std::vector<int>& gamma) {
  std::vector<std::vector<Int>> rays;
  for (int i : gamma) rays.push_back(S.degrees[i].free_part);
  if (rays.empty()) {
    RationalCone zero;
    zero.dim = S.K.free_rank;
    zero.equations = kernel_lattice(IntMat(0, S.K.free_rank));
    return zero;
  }
  return cone_from_rays(S.K.free_rank, rays);
}

RationalCone git_cone(const CoxInput& in, const Budget& budget) {
  const GradedPolyRing& S = in.ring;
  int r = S.nvars();
  bool zero_free = true;
  for (const Int& x : in.ample.free_part)
    if (x != 0) zero_free = false;
  if (zero_free) throw empty_chamber("ample class has zero free part");
  if ((std::int64_t)1 << r > budget.max_afaces)
    throw budget_exceeded("a-face enumeration 2^r exceeds the budget");

  std::vector<Rat> w;
  for (const Int& x : in.ample.free_part) w.push_back(Rat(x));

  std::vector<std::vector<Int>> facet_rows, eq_rows;
  std::map<std::set<std::vector<Int>>, RationalCone> cone_cache;
  bool found_any = false;
  for (std::int64_t mask = 0; mask < ((std::int64_t)1 << r); ++mask) {
    std::vector<int> gamma;
    for (int i = 0; i < r; ++i)
      if (mask & ((std::int64_t)1 << i)) gamma.push_back(i);
    // combinatorial pre-filter: w must lie in the orbit cone
    std::set<std::vector<Int>> key;
    for (int i : gamma) key.insert(primitive(S.degrees[i].free_part));
    RationalCone oc;
    auto it = cone_cache.find(key);
    if (it != cone_cache.end()) {
      oc = it->second;
    } else {
      bool all_zero = true;
      for (auto& k : key)
        for (auto& x : k)
          if (x != 0) all_zero = false;
      if (key.empty() || all_zero) {
        oc.dim = S.K.free_rank;
        oc.equations = kernel_lattice(IntMat(0, S.K.free_rank));
      } else {
        oc = cone_from_rays(S.K.free_rank, std::vector<std::vector<Int>>(key.begin(), key.end()));
      }
      cone_cache.emplace(std::move(key), oc);
    }
    if (!cone_contains(oc, w)) continue;
    if (!is_a_face(S, in.ideal, gamma, budget)) continue;
    found_any = true;
    for (const auto& h : oc.facets) facet_rows.push_back(h);
    for (const auto& e : oc.equations) eq_rows.push_back(e);
  }
  if (!found_any) throw empty_chamber("the ample class lies in no orbit cone of an a-face");
  RationalCone lambda = cone_from_inequalities(S.K.free_rank, facet_rows, eq_rows);
  if (!cone_contains(lambda, w))
    throw empty_chamber("chamber intersection does not contain the ample class");
  return lambda;
}

std::vector<GroupHom> sigma_of_lambda(const GradedPolyRing& S, const RationalCone& lambda,
                                      const std::vector<GroupHom>& auts) {
  std::vector<GroupHom> out;
  std::set<std::vector<Int>> rays(lambda.rays.begin(), lambda.rays.end());
  for (const GroupHom& s : auts) {
    std::set<std::vector<Int>> img;
    for (const auto& ray : lambda.rays) img.insert(primitive(s.B.apply(ray)));
    if (img == rays) out.push_back(s);
  }
  return out;
}

AutHatX aut_hat_x(const CoxInput& in, const Budget& budget,
                  const std::optional<RationalCone>& user_chamber) {
  AutHatX res;
  res.chamber = user_chamber ? *user_chamber : git_cone(in, budget);
  std::vector<GroupElement> omega;
  for (const auto& d : in.ring.degrees) omega.push_back(d);
  std::vector<GroupHom> auts = enumerate_aut_stabilizing(in.ring.K, omega);
  res.sigma = sigma_of_lambda(in.ring, res.chamber, auts);
  res.rep = quot_rep(in.ring, in.ideal, res.sigma, budget);
  return res;
}

bool subgroup_member(const AbelianGroup& K, const std::vector<GroupElement>& gens,
                     const GroupElement& w) {
  int k = K.free_rank, t = K.torsion_rank();
  IntMat M(k + t, (int)gens.size() + t);
  for (int c = 0; c < (int)gens.size(); ++c) {
    for (int i = 0; i < k; ++i) M(i, c) = gens[c].free_part[i];
    for (int i = 0; i < t; ++i) M(k + i, c) = gens[c].torsion_part[i];
  }
  for (int i = 0; i < t; ++i) M(k + i, (int)gens.size() + i) = Int(K.torsion_orders[i]);
  std::vector<Int> b, x;
  for (int i = 0; i < k; ++i) b.push_back(w.free_part[i]);
  for (int i = 0; i < t; ++i) b.push_back(w.torsion_part[i]);
  return solve_integer(M, b, x);
}

namespace {

// precomputed solvability test for "w lies in the subgroup generated by the
// given elements": one Smith form, then divisibility checks per query
struct SubgroupTester {
  IntMat U, D;
  int rows = 0, cols = 0;

  static SubgroupTester build(const AbelianGroup& K, const std::vector<GroupElement>& gens) {
    int k = K.free_rank, t = K.torsion_rank();
    IntMat M(k + t, (int)gens.size() + t);
    for (int c = 0; c < (int)gens.size(); ++c) {
      for (int i = 0; i < k; ++i) M(i, c) = gens[c].free_part[i];
      for (int i = 0; i < t; ++i) M(k + i, c) = gens[c].torsion_part[i];
    }
    for (int i = 0; i < t; ++i) M(k + i, (int)gens.size() + i) = Int(K.torsion_orders[i]);
    SmithResult s = smith_normal_form(M);
    SubgroupTester st;
    st.U = s.U;
    st.D = s.D;
    st.rows = M.rows;
    st.cols = M.cols;
    return st;
  }

  bool contains(const std::vector<Int>& b) const {
    std::vector<Int> c = U.apply(b);
    int lim = std::min(rows, cols);
    for (int i = 0; i < rows; ++i) {
      if (i < lim && D(i, i) != 0) {
        if (c[i] % D(i, i) != 0) return false;
      } else if (c[i] != 0) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace

std::vector<Exp> hilbert_basis(const GradedPolyRing& S,
                               const std::vector<GroupElement>& kprime_gens,
                               const Budget& budget) {
  int r = S.nvars();
  int k = S.K.free_rank;
  // functionals vanishing on the free span of K' give the cone equations
  std::vector<std::vector<Int>> kfree;
  for (const auto& g : kprime_gens) kfree.push_back(g.free_part);
  IntMat G((int)kfree.size(), k);
  for (int i = 0; i < (int)kfree.size(); ++i)
    for (int j = 0; j < k; ++j) G(i, j) = kfree[i][j];
  std::vector<std::vector<Int>> comp = kernel_lattice(G);
  std::vector<std::vector<Int>> eqs;
  for (const auto& f : comp) {
    std::vector<Int> row(r, Int(0));
    for (int v = 0; v < r; ++v) {
      Int s(0);
      for (int i = 0; i < k; ++i) s += f[i] * S.degrees[v].free_part[i];
      row[v] = s;
    }
    eqs.push_back(std::move(row));
  }
  std::vector<std::vector<Int>> ineqs;
  for (int v = 0; v < r; ++v) {
    std::vector<Int> row(r, Int(0));
    row[v] = 1;
    ineqs.push_back(std::move(row));
  }
  RationalCone C = cone_from_inequalities(r, ineqs, eqs);

  SubgroupTester tester = SubgroupTester::build(S.K, kprime_gens);
  int kt = S.K.free_rank + S.K.torsion_rank();
  auto member = [&](const Exp& nu) {
    GroupElement d = S.degree_of_exp(nu);
    std::vector<Int> b;
    b.reserve(kt);
    for (const Int& x : d.free_part) b.push_back(x);
    for (const Int& x : d.torsion_part) b.push_back(x);
    return tester.contains(b);
  };

  // box bound: sum of the extreme rays scaled into the monoid
  std::vector<long> box(r, 0);
  for (const auto& ray : C.rays) {
    Exp base(r, 0);
    for (int v = 0; v < r; ++v) base[v] = (int)ray[v].get_si();
    Exp scaled = base;
    long kk = 1;
    const long kmax = 1000000;
    while (!member(scaled)) {
      ++kk;
      if (kk > kmax) throw budget_exceeded("ray scaling in the Hilbert basis computation");
      for (int v = 0; v < r; ++v) scaled[v] = base[v] * (int)kk;
    }
    for (int v = 0; v < r; ++v) box[v] += scaled[v];
  }

  // enumerate the monoid points in the box, pruning on the equation rows
  int ne = (int)eqs.size();
  // per-suffix bounds of each equation row over the remaining box choices
  std::vector<std::vector<Int>> suf_min(ne, std::vector<Int>(r + 1, Int(0)));
  std::vector<std::vector<Int>> suf_max(ne, std::vector<Int>(r + 1, Int(0)));
  for (int e = 0; e < ne; ++e)
    for (int v = r - 1; v >= 0; --v) {
      Int lo(0), hi(0);
      if (eqs[e][v] > 0)
        hi = eqs[e][v] * Int(box[v]);
      else
        lo = eqs[e][v] * Int(box[v]);
      suf_min[e][v] = suf_min[e][v + 1] + lo;
      suf_max[e][v] = suf_max[e][v + 1] + hi;
    }

  std::vector<Exp> points;
  Exp cur(r, 0);
  std::vector<Int> partial(ne, Int(0));
  long nodes = 0;
  std::function<void(int)> scan = [&](int v) {
    if (++nodes > 20000000) throw budget_exceeded("Hilbert basis enumeration too large");
    for (int e = 0; e < ne; ++e)
      if (partial[e] + suf_min[e][v] > 0 || partial[e] + suf_max[e][v] < 0) return;
    if (v == r) {
      if (exp_degree(cur) > 0 && member(cur)) points.push_back(cur);
      return;
    }
    for (int e2 = 0; e2 <= (int)box[v]; ++e2) {
      cur[v] = e2;
      if (e2) {
        for (int e = 0; e < ne; ++e) partial[e] += eqs[e][v];
      }
      scan(v + 1);
    }
    for (int e = 0; e < ne; ++e) partial[e] -= eqs[e][v] * Int(box[v]);
    cur[v] = 0;
  };
  scan(0);
  std::sort(points.begin(), points.end(), [](const Exp& a, const Exp& b) {
    if (exp_degree(a) != exp_degree(b)) return exp_degree(a) < exp_degree(b);
    return a < b;
  });
  // irreducibility filter in increasing degree
  std::vector<Exp> basis;
  for (const Exp& nu : points) {
    bool reducible = false;
    for (const Exp& mu : basis) {
      if (mu == nu || !exp_divides(mu, nu)) continue;
      Exp diff = exp_sub(nu, mu);
      if (exp_degree(diff) > 0 && member(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(nu);
  }
  (void)budget;
  return basis;
}

VeronesePresentation veronese(const GradedPolyRing& S, const Ideal& I,
                              const std::vector<GroupElement>& kprime_gens,
                              const Budget& budget) {
  VeronesePresentation vp;
  vp.generators = hilbert_basis(S, kprime_gens, budget);
  std::vector<Polynomial> images;
  for (const Exp& mu : vp.generators) images.push_back(Polynomial::monomial(mu, Scalar(1)));
  vp.relations = ring_map_preimage(images, I.gens, S.nvars(), budget);
  vp.yring.field = S.field;
  vp.yring.K = S.K;
  for (size_t j = 0; j < vp.generators.size(); ++j) {
    vp.yring.vars.push_back("Y" + std::to_string(j + 1));
    vp.yring.degrees.push_back(S.degree_of_exp(vp.generators[j]));
  }
  return vp;
}

std::vector<Polynomial> h_lattice_ideal(const AbelianGroup& K,
                                        const std::vector<GroupElement>& column_degrees,
                                        const Budget& budget) {
  int k = (int)column_degrees.size();
  int fr = K.free_rank, t = K.torsion_rank();
  // kernel of Z^k -> K, e_j -> u_j, via the extended integer system
  IntMat M(fr + t, k + t);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < fr; ++i) M(i, j) = column_degrees[j].free_part[i];
    for (int i = 0; i < t; ++i) M(fr + i, j) = column_degrees[j].torsion_part[i];
  }
  for (int i = 0; i < t; ++i) M(fr + i, k + i) = Int(K.torsion_orders[i]);
  std::vector<std::vector<Int>> big_kernel = kernel_lattice(M);
  std::vector<std::vector<Int>> lattice;
  for (const auto& v : big_kernel) lattice.push_back(std::vector<Int>(v.begin(), v.begin() + k));

  // binomials of a lattice basis on the diagonal entries, saturated
  int ke = k * k;
  std::vector<Polynomial> gens;
  for (const auto& lam : lattice) {
    Exp plus(k, 0), minus(k, 0);
    bool nonzero = false;
    for (int j = 0; j < k; ++j) {
      long c = lam[j].get_si();
      if (c > 0) plus[j] = (int)c;
      if (c < 0) minus[j] = (int)-c;
      if (c) nonzero = true;
    }
    if (!nonzero) continue;
    gens.push_back(Polynomial::monomial(plus, Scalar(1)) - Polynomial::monomial(minus, Scalar(1)));
  }
  Polynomial prod = Polynomial::constant(Scalar(1), k);
  for (int j = 0; j < k; ++j) prod = prod * Polynomial::variable(j, k);
  std::vector<Polynomial> sat = gens.empty() ? gens : saturate(gens, k, prod, budget);

  // lift to the k x k entry ring: diagonal variables carry the torus part,
  // off-diagonal entries vanish on H
  std::vector<int> diag_map(k);
  for (int j = 0; j < k; ++j) diag_map[j] = j * k + j;
  std::vector<Polynomial> out;
  for (const auto& g : sat) out.push_back(g.remap(diag_map, ke));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) out.push_back(Polynomial::variable(i * k + j, ke));
  return out;
}

bool caut_equals_h(const GradedPolyRing& S, const Ideal& I, const Budget& budget) {
  QuotientRep q = quot_rep(S, I, {identity_hom(S.K)}, budget);
  const MatrixGroupDescription& G = q.group;
  assert(G.cosets.size() == 1);
  int k = G.rep.n;
  std::vector<GroupElement> cols;
  for (int j = 0; j < k; ++j) cols.push_back(S.degree_of_exp(G.rep.basis[j]));

  bool diagonal_pattern = true;
  for (auto& [r, c] : G.cosets[0].pattern)
    if (r != c) diagonal_pattern = false;

  if (diagonal_pattern) {
    // compare on the diagonal coordinates only; the off-diagonal entries
    // vanish on both sides by construction
    std::vector<int> map(k * k, -1);
    for (int j = 0; j < k; ++j) map[j * k + j] = j;
    std::vector<Polynomial> caut;
    for (const auto& g : G.cosets[0].gens) caut.push_back(g.remap(map, k));
    // diagonal part of the H lattice ideal, before lifting
    IntMat M(S.K.free_rank + S.K.torsion_rank(), k + S.K.torsion_rank());
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < S.K.free_rank; ++i) M(i, j) = cols[j].free_part[i];
      for (int i = 0; i < S.K.torsion_rank(); ++i)
        M(S.K.free_rank + i, j) = cols[j].torsion_part[i];
    }
    for (int i = 0; i < S.K.torsion_rank(); ++i)
      M(S.K.free_rank + i, k + i) = Int(S.K.torsion_orders[i]);
    std::vector<Polynomial> h;
    for (const auto& v : kernel_lattice(M)) {
      Exp plus(k, 0), minus(k, 0);
      bool nonzero = false;
      for (int j = 0; j < k; ++j) {
        long c = v[j].get_si();
        if (c > 0) plus[j] = (int)c;
        if (c < 0) minus[j] = (int)-c;
        if (c) nonzero = true;
      }
      if (nonzero)
        h.push_back(Polynomial::monomial(plus, Scalar(1)) -
                    Polynomial::monomial(minus, Scalar(1)));
    }
    Polynomial prod = Polynomial::constant(Scalar(1), k);
    for (int j = 0; j < k; ++j) prod = prod * Polynomial::variable(j, k);
    std::vector<Polynomial> caut_sat = caut.empty() ? caut : saturate(caut, k, prod, budget);
    std::vector<Polynomial> h_sat = h.empty() ? h : saturate(h, k, prod, budget);
    auto gb_caut = groebner(caut_sat, MonomialOrder::grevlex(), budget);
    auto gb_h = groebner(h_sat, MonomialOrder::grevlex(), budget);
    return gb_caut.elements == gb_h.elements;
  }

  // general route in the full entry ring
  int ke = k * k;
  std::vector<Polynomial> caut = G.cosets[0].gens;
  {
    std::vector<char> allowed(ke, 0);
    for (auto& [r, c] : G.cosets[0].pattern) allowed[r * k + c] = 1;
    for (int v = 0; v < ke; ++v)
      if (!allowed[v]) caut.push_back(Polynomial::variable(v, ke));
  }
  std::vector<Polynomial> h = h_lattice_ideal(S.K, cols, budget);
  Polynomial det;
  {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
      int inv = 0;
      for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
          if (idx[x] > idx[y]) ++inv;
      Polynomial term = Polynomial::constant(Scalar(inv % 2 ? -1 : 1), ke);
      for (int c = 0; c < k; ++c) term = term * Polynomial::variable(idx[c] * k + c, ke);
      det = det + term;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  std::vector<Polynomial> caut_sat = saturate(caut, ke, det, budget);
  std::vector<Polynomial> h_sat = saturate(h, ke, det, budget);
  auto gb_caut = groebner(caut_sat, MonomialOrder::grevlex(), budget);
  auto gb_h = groebner(h_sat, MonomialOrder::grevlex(), budget);
  for (const auto& g : gb_caut.elements)
    if (!membership(g, gb_h)) return false;
  for (const auto& g : gb_h.elements)
    if (!membership(g, gb_caut)) return false;
  return true;
}

namespace {

// order of the image of pi0(H) inside the component group of the unit coset
long h_pi0_image_order(const MatrixGroupDescription& G, const Budget& budget) {
  (void)budget;
  const AbelianGroup& K = G.ring.K;
  long torsion_total = 1;
  for (long n : K.torsion_orders) torsion_total *= n;
  if (torsion_total == 1) return 1;

  // unit coset lattice in the pattern coordinates
  for (const Coset& c : G.cosets) {
    if (!c.unit_coset) continue;
    std::vector<int> vars;
    for (auto& [r, cc] : c.pattern) vars.push_back(r * G.rep.n + cc);
    std::sort(vars.begin(), vars.end());
    std::vector<int> map(G.rep.n * G.rep.n, -1);
    for (size_t i = 0; i < vars.size(); ++i) map[vars[i]] = (int)i;
    std::vector<std::vector<Int>> lattice;
    for (const auto& g : c.gens) {
      Polynomial rg = g.remap(map, (int)vars.size());
      if (rg.terms.size() != 2) return 1;  // conservatively: no identification
      std::vector<Int> lam(vars.size());
      for (size_t i = 0; i < vars.size(); ++i)
        lam[i] = Int(rg.terms[0].first[i] - rg.terms[1].first[i]);
      lattice.push_back(std::move(lam));
    }
    LatticeInfo li = lattice_info(lattice, (int)vars.size());
    if (li.torsion_generators.empty()) return 1;
    // map each torsion class generator through the column degrees
    int t = K.torsion_rank();
    std::vector<std::vector<Int>> images;
    for (const auto& gvec : li.torsion_generators) {
      GroupElement img = GroupElement::zero(K);
      for (size_t e = 0; e < vars.size(); ++e) {
        int col = vars[e] % G.rep.n;
        GroupElement u = G.ring.degree_of_exp(G.rep.basis[col]);
        img = add(K, img, smul(K, gvec[e], u));
      }
      for (const Int& x : img.free_part) assert(x == 0);
      images.push_back(img.torsion_part);
    }
    // order of the subgroup of the torsion part generated by the images
    std::vector<std::vector<Int>> gens = images;
    for (int i = 0; i < t; ++i) {
      std::vector<Int> rel(t, Int(0));
      rel[i] = Int(K.torsion_orders[i]);
      gens.push_back(std::move(rel));
    }
    LatticeInfo sub = lattice_info(gens, t);
    long idx = sub.sat_index.get_si();  // |Z^t / Lambda|
    return torsion_total / idx;
  }
  return 1;
}

}  // namespace

AutXResult aut_x(const CoxInput& in, const Budget& budget,
                 const std::optional<RationalCone>& user_chamber) {
  AutXResult res;
  res.hat = aut_hat_x(in, budget, user_chamber);
  const MatrixGroupDescription& G = res.hat.rep.group;
  res.dim_aut_hat = group_dimension(G, budget);
  res.dim_aut_x = res.dim_aut_hat - in.ring.K.free_rank;
  res.hat_components = component_count(G, budget);
  if (res.hat_components.known) {
    res.h_pi0_image = h_pi0_image_order(G, budget);
    res.components = res.hat_components.count / res.h_pi0_image;
    res.components_known = true;
  }

  // Hopf presentation of O(Aut(X)): localize at det, take the degree-zero
  // Veronese of the descended group's coordinate ring
  int k = G.rep.n;
  int ke = k * k;

  // union ideal: intersection of the per-coset vanishing ideals
  std::vector<Polynomial> union_ideal;
  bool first = true;
  for (const Coset& c : G.cosets) {
    std::vector<int> vars;
    for (auto& [r, cc] : c.pattern) vars.push_back(r * k + cc);
    std::sort(vars.begin(), vars.end());
    std::vector<int> map(ke, -1);
    for (size_t i = 0; i < vars.size(); ++i) map[vars[i]] = (int)i;
    std::vector<Polynomial> restricted;
    for (const auto& g : c.gens) restricted.push_back(g.remap(map, (int)vars.size()));
    Polynomial prod = Polynomial::constant(Scalar(1), (int)vars.size());
    for (const auto& d : c.block_determinants(G.rep, ke)) prod = prod * d.remap(map, (int)vars.size());
    std::vector<Polynomial> sat = saturate(restricted, (int)vars.size(), prod, budget);
    std::vector<int> back(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) back[i] = vars[i];
    std::vector<Polynomial> full;
    for (const auto& g : sat) full.push_back(g.remap(back, ke));
    std::vector<char> allowed(ke, 0);
    for (int v : vars) allowed[v] = 1;
    for (int v = 0; v < ke; ++v)
      if (!allowed[v]) full.push_back(Polynomial::variable(v, ke));
    if (first) {
      union_ideal = full;
      first = false;
    } else {
      union_ideal = intersect_ideals(union_ideal, full, ke, budget);
    }
  }

  // live variables: entries not vanishing identically on the group
  GroebnerBasis union_gb = groebner(union_ideal, MonomialOrder::grevlex(), budget);
  std::vector<char> dead(ke, 0);
  for (int v = 0; v < ke; ++v)
    if (membership(Polynomial::variable(v, ke), union_gb)) dead[v] = 1;

  // determinant reduced modulo the dead entries
  Polynomial det;
  {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
      bool alive = true;
      for (int c = 0; c < k && alive; ++c)
        if (dead[idx[c] * k + c]) alive = false;
      if (alive) {
        int inv = 0;
        for (int x = 0; x < k; ++x)
          for (int y = x + 1; y < k; ++y)
            if (idx[x] > idx[y]) ++inv;
        Polynomial term = Polynomial::constant(Scalar(inv % 2 ? -1 : 1), ke);
        for (int c = 0; c < k; ++c) term = term * Polynomial::variable(idx[c] * k + c, ke);
        det = det + term;
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
  }

  // restriction to the live variables plus the inverse determinant
  std::vector<int> live;
  for (int v = 0; v < ke; ++v)
    if (!dead[v]) live.push_back(v);
  int nl = (int)live.size();
  std::vector<int> lmap(ke, -1);
  for (int i = 0; i < nl; ++i) lmap[live[i]] = i;

  auto kill_dead = [&](const Polynomial& p) {
    Polynomial q;
    for (const auto& t : p.terms) {
      bool alive = true;
      for (int v = 0; v < ke && alive; ++v)
        if (t.first[v] && dead[v]) alive = false;
      if (alive) q.terms.push_back(t);
    }
    q.normalize_sort();
    return q.remap(lmap, nl + 1);  // one extra slot for Dinv
  };

  GradedPolyRing L;  // the localized coordinate ring's ambient polynomial ring
  L.field = in.ring.field;
  L.K = in.ring.K;
  GroupElement det_deg = GroupElement::zero(L.K);
  for (int j = 0; j < k; ++j)
    det_deg = add(L.K, det_deg, in.ring.degree_of_exp(G.rep.basis[j]));
  for (int v : live) {
    int i = v / k, j = v % k;
    L.vars.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    L.degrees.push_back(in.ring.degree_of_exp(G.rep.basis[j]));
  }
  L.vars.push_back("Dinv");
  L.degrees.push_back(neg(L.K, det_deg));

  std::vector<Polynomial> lgens;
  for (const auto& g : union_gb.elements) {
    Polynomial q = kill_dead(g);
    if (!q.is_zero()) lgens.push_back(q);
  }
  Polynomial det_live = kill_dead(det);
  lgens.push_back(Polynomial::variable(nl, nl + 1) * det_live -
                  Polynomial::constant(Scalar(1), nl + 1));

  // degree-zero Veronese of the localized ring
  VeronesePresentation vp = veronese(L, Ideal{lgens}, {}, budget);
  res.hopf.yring = vp.yring;
  res.hopf.relations = vp.relations;
  for (const Exp& mu : vp.generators) res.hopf.generator_monomials.push_back(monomial_str(L, mu));

  // the identity matrix gives a point of the presentation
  {
    std::vector<Scalar> point(nl + 1);
    for (int i = 0; i < nl; ++i) {
      int v = live[i];
      point[i] = Scalar(v / k == v % k ? 1 : 0);
    }
    // evaluate det at the identity
    Scalar detv;
    for (const auto& t : det_live.terms) {
      Scalar m = t.second;
      for (int v = 0; v < nl; ++v)
        for (int e = 0; e < t.first[v]; ++e) m *= point[v];
      detv += m;
    }
    point[nl] = detv.inv();
    std::vector<Scalar> ypoint;
    for (const Exp& mu : vp.generators) {
      Scalar m(1);
      for (int v = 0; v < nl + 1; ++v)
        for (int e = 0; e < mu[v]; ++e) m *= point[v];
      ypoint.push_back(m);
    }
    res.hopf.identity_point_ok = true;
    for (const auto& rel : vp.relations) {
      Scalar val;
      for (const auto& t : rel.terms) {
        Scalar m = t.second;
        for (size_t v = 0; v < ypoint.size(); ++v)
          for (int e = 0; e < t.first[v]; ++e) m *= ypoint[v];
        val += m;
      }
      if (!val.is_zero()) res.hopf.identity_point_ok = false;
    }
  }
  return res;
}

}  // namespace gaut
