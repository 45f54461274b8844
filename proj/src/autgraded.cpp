#include "gaut/autgraded.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace gaut {

int RepBasis::block_of(const GroupElement& w) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].degree == w) return (int)i;
  return -1;
}

int RepBasis::block_of_index(int idx) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (idx >= blocks[i].offset && idx < blocks[i].offset + blocks[i].dim()) return (int)i;
  return -1;
}

int RepBasis::index_of(const Exp& m) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == m) return (int)i;
  return -1;
}

RepBasis build_rep_basis(const GradedPolyRing& S) {
  ensure_effective_pointed(S);
  RepBasis rep;
  for (const GroupElement& w : generator_degrees(S)) {
    RepBlock b;
    b.degree = w;
    b.monomials = monomial_basis(S, w);
    b.offset = rep.n;
    rep.n += b.dim();
    for (const Exp& m : b.monomials) rep.basis.push_back(m);
    rep.blocks.push_back(std::move(b));
  }
  return rep;
}

GradedPolyRing entry_ring(const GradedPolyRing& S, const RepBasis& rep) {
  GradedPolyRing E;
  E.field = S.field;
  E.K = S.K;
  int n = rep.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      E.vars.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      E.degrees.push_back(S.degree_of_exp(rep.basis[j]));  // deg a_ij = u_j
    }
  return E;
}

namespace {

inline int evar(int n, int i, int j) { return i * n + j; }

// polynomial in S-monomial keys with entry-ring coefficients
using SymPoly = std::map<Exp, Polynomial>;

SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  for (const auto& [ma, pa] : a)
    for (const auto& [mb, pb] : b) {
      Polynomial prod = pa * pb;
      if (prod.is_zero()) continue;
      Exp key = exp_add(ma, mb);
      auto it = r.find(key);
      if (it == r.end())
        r.emplace(std::move(key), std::move(prod));
      else {
        it->second = it->second + prod;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

}  // namespace

std::vector<Polynomial> admissibility_equations(const GradedPolyRing& S, const RepBasis& rep) {
  int n = rep.n;
  int ne = n * n;
  std::set<Polynomial, bool (*)(const Polynomial&, const Polynomial&)> eqs(
      [](const Polynomial& a, const Polynomial& b) { return a.terms < b.terms; });
  for (int q1 = 0; q1 < n; ++q1)
    for (int q2 = q1; q2 < n; ++q2) {
      GroupElement w = add(S.K, S.degree_of_exp(rep.basis[q1]), S.degree_of_exp(rep.basis[q2]));
      int blk = rep.block_of(w);
      if (blk < 0) continue;
      Exp prod_mono = exp_add(rep.basis[q1], rep.basis[q2]);
      int q0 = rep.index_of(prod_mono);
      assert(q0 >= 0);
      // coefficients of (A.b_q1)(A.b_q2) - A.(b_q1 b_q2) per S-monomial
      std::map<Exp, Polynomial> coeff;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          Exp mono = exp_add(rep.basis[i], rep.basis[k]);
          Polynomial c = Polynomial::variable(evar(n, i, q1), ne) *
                         Polynomial::variable(evar(n, k, q2), ne);
          auto it = coeff.find(mono);
          if (it == coeff.end())
            coeff.emplace(std::move(mono), std::move(c));
          else
            it->second = it->second + c;
        }
      for (int q = 0; q < n; ++q) {
        Polynomial c = -Polynomial::variable(evar(n, q, q0), ne);
        auto it = coeff.find(rep.basis[q]);
        if (it == coeff.end())
          coeff.emplace(rep.basis[q], std::move(c));
        else
          it->second = it->second + c;
      }
      for (auto& [mono, poly] : coeff)
        if (!poly.is_zero()) eqs.insert(poly);
    }
  return std::vector<Polynomial>(eqs.begin(), eqs.end());
}

std::vector<int> block_permutation(const RepBasis& rep, const AbelianGroup& K,
                                   const GroupHom& sigma) {
  std::vector<int> perm(rep.blocks.size());
  for (size_t i = 0; i < rep.blocks.size(); ++i) {
    GroupElement img = apply(K, sigma, rep.blocks[i].degree);
    int j = rep.block_of(img);
    if (j < 0)
      throw grading_error("BlockDimMismatch", "sigma does not permute the generator degrees");
    if (rep.blocks[j].dim() != rep.blocks[i].dim())
      throw grading_error("BlockDimMismatch", "block dimensions differ along sigma");
    perm[i] = j;
  }
  return perm;
}

IntMat permuting_matrix(const RepBasis& rep, const std::vector<int>& perm) {
  IntMat B(rep.n, rep.n);
  for (size_t i = 0; i < rep.blocks.size(); ++i) {
    int src = rep.blocks[i].offset;
    int dst = rep.blocks[perm[i]].offset;
    for (int k = 0; k < rep.blocks[i].dim(); ++k) B(dst + k, src + k) = 1;
  }
  return B;
}

std::vector<Polynomial> Coset::block_determinants(const RepBasis& rep, int nvars) const {
  // determinant of each target-block submatrix along the pattern
  std::vector<Polynomial> dets;
  int n = rep.n;
  for (size_t i = 0; i < rep.blocks.size(); ++i) {
    int src = rep.blocks[i].offset;
    int dst = rep.blocks[block_perm[i]].offset;
    int d = rep.blocks[i].dim();
    // Leibniz expansion; block dims stay tiny
    std::vector<int> idx(d);
    for (int k = 0; k < d; ++k) idx[k] = k;
    Polynomial det;
    do {
      int inv = 0;
      for (int x = 0; x < d; ++x)
        for (int y = x + 1; y < d; ++y)
          if (idx[x] > idx[y]) ++inv;
      Polynomial term = Polynomial::constant(Scalar(inv % 2 ? -1 : 1), nvars);
      for (int k = 0; k < d; ++k)
        term = term * Polynomial::variable(evar(n, dst + idx[k], src + k), nvars);
      det = det + term;
    } while (std::next_permutation(idx.begin(), idx.end()));
    dets.push_back(det);
  }
  return dets;
}

namespace {

Coset make_coset(const GradedPolyRing& S, const RepBasis& rep, const GroupHom& sigma,
                 const std::vector<Polynomial>& admissibility) {
  Coset c;
  c.sigma = sigma;
  c.block_perm = block_permutation(rep, S.K, sigma);
  c.unit_coset = sigma == identity_hom(S.K);
  int n = rep.n;
  std::vector<char> allowed(n * n, 0);
  for (size_t i = 0; i < rep.blocks.size(); ++i) {
    int src = rep.blocks[i].offset;
    int dst = rep.blocks[c.block_perm[i]].offset;
    for (int col = 0; col < rep.blocks[i].dim(); ++col)
      for (int row = 0; row < rep.blocks[c.block_perm[i]].dim(); ++row) {
        allowed[evar(n, dst + row, src + col)] = 1;
        c.pattern.push_back({dst + row, src + col});
      }
  }
  std::sort(c.pattern.begin(), c.pattern.end());
  // specialize the admissibility equations to the pattern
  for (const Polynomial& eq : admissibility) {
    Polynomial spec;
    for (const auto& t : eq.terms) {
      bool keep = true;
      for (int v = 0; v < n * n && keep; ++v)
        if (t.first[v] && !allowed[v]) keep = false;
      if (keep) spec.terms.push_back(t);
    }
    spec.normalize_sort();
    if (!spec.is_zero()) c.gens.push_back(spec);
  }
  std::sort(c.gens.begin(), c.gens.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.terms < b.terms; });
  c.gens.erase(std::unique(c.gens.begin(), c.gens.end()), c.gens.end());
  return c;
}

bool sigma_less(const GroupHom& a, const GroupHom& b) { return a < b; }

}  // namespace

MatrixGroupDescription aut_ks(const GradedPolyRing& S, const std::vector<GroupHom>& sigma) {
  MatrixGroupDescription G;
  G.ring = S;
  G.rep = build_rep_basis(S);
  G.entries = entry_ring(S, G.rep);
  std::vector<Polynomial> adm = admissibility_equations(S, G.rep);
  std::vector<GroupHom> sigmas = sigma;
  std::sort(sigmas.begin(), sigmas.end(), sigma_less);
  sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());
  for (const GroupHom& s : sigmas) G.cosets.push_back(make_coset(S, G.rep, s, adm));
  return G;
}

namespace {

// expansion of the substitution action of a pattern matrix on a polynomial:
// h(phi(T_1),...,phi(T_r)) as a map S-monomial -> entry-ring polynomial
SymPoly substitution_action(const GradedPolyRing& S, const RepBasis& rep, const Coset& c,
                            const Polynomial& h) {
  int n = rep.n;
  int ne = n * n;
  int r = S.nvars();
  std::vector<char> allowed(ne, 0);
  for (auto& [row, col] : c.pattern) allowed[evar(n, row, col)] = 1;

  // images of the variables
  std::vector<SymPoly> phi(r);
  for (int v = 0; v < r; ++v) {
    Exp ev(r, 0);
    ev[v] = 1;
    int q = rep.index_of(ev);
    assert(q >= 0);
    for (int row = 0; row < n; ++row) {
      if (!allowed[evar(n, row, q)]) continue;
      phi[v][rep.basis[row]] = Polynomial::variable(evar(n, row, q), ne);
    }
  }

  SymPoly acc;
  for (const auto& t : h.terms) {
    SymPoly piece;
    piece[Exp(r, 0)] = Polynomial::constant(t.second, ne);
    for (int v = 0; v < r; ++v)
      for (int k = 0; k < t.first[v]; ++k) piece = sym_mul(piece, phi[v]);
    for (auto& [mono, poly] : piece) {
      auto it = acc.find(mono);
      if (it == acc.end())
        acc.emplace(mono, poly);
      else {
        it->second = it->second + poly;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return acc;
}

struct TargetComponent {
  std::vector<Exp> space;   // monomial basis of S_u
  ScalarMat rows;           // RREF rows of the target subspace
  std::vector<int> pivots;
};

// linear forms vanishing on the row space, applied to the coordinates of
// T.h: one generator per free column f, of the form
//   sum_r R(r,f) x_{pivot_r}  -  x_f
std::vector<Polynomial> stabilizer_equations(const TargetComponent& tc,
                                             const std::vector<Polynomial>& coords, int ne) {
  std::vector<char> is_pivot(tc.space.size(), 0);
  for (int p : tc.pivots) is_pivot[p] = 1;
  std::vector<Polynomial> out;
  for (int f = 0; f < (int)tc.space.size(); ++f) {
    if (is_pivot[f]) continue;
    Polynomial eq;
    for (int r = 0; r < tc.rows.rows; ++r) {
      const Scalar& c = tc.rows(r, f);
      if (!c.is_zero()) eq = eq + coords[tc.pivots[r]].scaled(c);
    }
    eq = eq - coords[f];
    if (!eq.is_zero()) out.push_back(eq);
    (void)ne;
  }
  return out;
}

MatrixGroupDescription stab_like(const GradedPolyRing& S, const Ideal& I_source,
                                 const Ideal& I_target, const std::vector<GroupHom>& sigma,
                                 bool drop_nonstabilizing) {
  std::vector<GroupElement> omega_src = ideal_generator_degrees(S, I_source);
  std::vector<GroupElement> omega_tgt = ideal_generator_degrees(S, I_target);
  std::vector<GroupHom> kept;
  for (const GroupHom& s : sigma) {
    bool ok = true;
    std::set<GroupElement> img;
    for (const auto& u : omega_src) img.insert(apply(S.K, s, u));
    if (drop_nonstabilizing) {
      std::set<GroupElement> want(omega_tgt.begin(), omega_tgt.end());
      for (const auto& u : img)
        if (!want.count(u)) ok = false;
    }
    if (ok) kept.push_back(s);
  }
  MatrixGroupDescription G = aut_ks(S, kept);
  int ne = G.rep.n * G.rep.n;

  // source components: a basis h_1..h_l of I_W per source degree
  std::map<GroupElement, ComponentBasis> source_comp;
  for (const auto& u : omega_src) source_comp.emplace(u, ideal_component(S, I_source, u));
  // target components cache (degrees sigma(u))
  std::map<GroupElement, TargetComponent> target_comp;
  auto target_of = [&](const GroupElement& u) -> const TargetComponent& {
    auto it = target_comp.find(u);
    if (it != target_comp.end()) return it->second;
    ComponentBasis cb = ideal_component(S, I_target, u);
    TargetComponent tc;
    tc.space = cb.space_basis;
    tc.rows = cb.rows;
    // pivots of the RREF rows
    for (int r = 0; r < cb.rows.rows; ++r)
      for (int c = 0; c < cb.rows.cols; ++c)
        if (!cb.rows(r, c).is_zero()) {
          tc.pivots.push_back(c);
          break;
        }
    return target_comp.emplace(u, std::move(tc)).first->second;
  };

  for (Coset& c : G.cosets) {
    for (const auto& [u, comp] : source_comp) {
      GroupElement tu = apply(S.K, c.sigma, u);
      const TargetComponent& tc = target_of(tu);
      for (const Polynomial& h : comp.polys) {
        SymPoly img = substitution_action(S, G.rep, c, h);
        // coordinates in the monomial basis of S_{sigma(u)}
        std::vector<Polynomial> coords(tc.space.size());
        for (auto& [mono, poly] : img) {
          int pos = -1;
          for (size_t i = 0; i < tc.space.size(); ++i)
            if (tc.space[i] == mono) pos = (int)i;
          assert(pos >= 0);
          coords[pos] = poly;
        }
        for (Polynomial& eq : stabilizer_equations(tc, coords, ne)) c.gens.push_back(eq);
      }
    }
    std::sort(c.gens.begin(), c.gens.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.terms < b.terms; });
    c.gens.erase(std::unique(c.gens.begin(), c.gens.end()), c.gens.end());
  }
  return G;
}

}  // namespace

MatrixGroupDescription stab_ideal(const GradedPolyRing& S, const Ideal& I,
                                  const std::vector<GroupHom>& sigma) {
  return stab_like(S, I, I, sigma, true);
}

MatrixGroupDescription transporter(const GradedPolyRing& S, const Ideal& I1, const Ideal& I2,
                                   const std::vector<GroupHom>& sigma) {
  return stab_like(S, I1, I2, sigma, false);
}

std::optional<std::vector<Polynomial>> MatrixGroupDescription::combined_ideal(
    size_t max_cosets) const {
  if (cosets.empty() || cosets.size() > max_cosets) return std::nullopt;
  int ne = rep.n * rep.n;
  // full ideal per coset: equations plus off-pattern entry vanishing
  std::vector<std::vector<Polynomial>> full;
  for (const Coset& c : cosets) {
    std::vector<char> allowed(ne, 0);
    for (auto& [row, col] : c.pattern) allowed[row * rep.n + col] = 1;
    std::vector<Polynomial> f = c.gens;
    for (int v = 0; v < ne; ++v)
      if (!allowed[v]) f.push_back(Polynomial::variable(v, ne));
    full.push_back(std::move(f));
  }
  std::vector<Polynomial> prod = full[0];
  for (size_t k = 1; k < full.size(); ++k) {
    std::vector<Polynomial> next;
    for (const auto& a : prod)
      for (const auto& b : full[k]) {
        Polynomial p = a * b;
        if (!p.is_zero()) next.push_back(p);
      }
    prod = std::move(next);
  }
  std::sort(prod.begin(), prod.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.terms < b.terms; });
  prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
  return prod;
}

// ---------------------------------------------------------------------------
// pattern restriction and the binomial fast path

namespace {

struct RestrictedCoset {
  std::vector<int> vars;            // global entry-var indices, sorted
  std::vector<Polynomial> gens;     // in the restricted ring
  std::vector<Polynomial> dets;     // block determinants, restricted
  bool all_blocks_one_dim = true;
};

RestrictedCoset restrict_coset(const MatrixGroupDescription& G, const Coset& c) {
  RestrictedCoset rc;
  int n = G.rep.n;
  int ne = n * n;
  for (auto& [row, col] : c.pattern) rc.vars.push_back(row * n + col);
  std::sort(rc.vars.begin(), rc.vars.end());
  std::vector<int> map(ne, -1);
  for (size_t i = 0; i < rc.vars.size(); ++i) map[rc.vars[i]] = (int)i;
  for (const auto& g : c.gens) rc.gens.push_back(g.remap(map, (int)rc.vars.size()));
  for (const auto& d : c.block_determinants(G.rep, ne))
    rc.dets.push_back(d.remap(map, (int)rc.vars.size()));
  for (const auto& b : G.rep.blocks)
    if (b.dim() > 1) rc.all_blocks_one_dim = false;
  return rc;
}

struct BinomialData {
  bool is_binomial = false;   // every generator has <= 2 terms, none a unit
  bool consistent = false;    // torus solution set nonempty
  std::vector<std::vector<Int>> lattice;  // exponent lattice generators
  int nvars = 0;
};

BinomialData binomial_classify(const RestrictedCoset& rc) {
  BinomialData bd;
  bd.nvars = (int)rc.vars.size();
  std::vector<std::vector<Int>> lattice;
  std::vector<Scalar> ratios;
  for (const auto& g : rc.gens) {
    if (g.terms.size() > 2) return bd;
    if (g.terms.size() == 1) {
      // a monomial generator kills the torus part
      bd.is_binomial = true;
      bd.consistent = false;
      return bd;
    }
    if (g.terms.empty()) continue;
    const auto& [e1, c1] = g.terms[0];
    const auto& [e2, c2] = g.terms[1];
    std::vector<Int> lam(bd.nvars);
    for (int i = 0; i < bd.nvars; ++i) lam[i] = Int(e1[i] - e2[i]);
    lattice.push_back(std::move(lam));
    ratios.push_back(-(c2 / c1));  // x^{e1-e2} = -c2/c1 on the torus
  }
  bd.is_binomial = true;
  bd.lattice = lattice;
  // consistency: for every integer relation among the exponents the
  // corresponding product of ratios must be 1
  if (lattice.empty()) {
    bd.consistent = true;
    return bd;
  }
  IntMat M(bd.nvars, (int)lattice.size());
  for (int j = 0; j < (int)lattice.size(); ++j)
    for (int i = 0; i < bd.nvars; ++i) M(i, j) = lattice[j][i];
  bd.consistent = true;
  for (const auto& rel : kernel_lattice(M)) {
    Scalar prod(1);
    for (size_t j = 0; j < rel.size(); ++j) {
      if (rel[j] == 0) continue;
      Scalar base = rel[j] > 0 ? ratios[j] : ratios[j].inv();
      Int e = abs(rel[j]);
      for (Int k(0); k < e; ++k) prod *= base;
    }
    if (!prod.is_one()) {
      bd.consistent = false;
      break;
    }
  }
  return bd;
}

int lattice_rank(const std::vector<std::vector<Int>>& gens, int n) {
  if (gens.empty()) return 0;
  IntMat M((int)gens.size(), n);
  for (int i = 0; i < (int)gens.size(); ++i)
    for (int j = 0; j < n; ++j) M(i, j) = gens[i][j];
  return smith_normal_form(M).rank;
}

}  // namespace

GammaGroup gamma_group(const GradedPolyRing& S, const Ideal& I, const Budget& budget) {
  std::vector<GroupElement> omega;
  for (const auto& d : S.degrees) omega.push_back(d);
  std::vector<GroupHom> auts = enumerate_aut_stabilizing(S.K, omega);

  // keep sigma with permutable blocks and stabilized Omega_I
  std::vector<GroupElement> omega_i = ideal_generator_degrees(S, I);
  RepBasis rep = build_rep_basis(S);
  std::vector<GroupHom> candidates;
  for (const GroupHom& s : auts) {
    try {
      block_permutation(rep, S.K, s);
    } catch (const Diagnostic&) {
      continue;
    }
    std::set<GroupElement> want(omega_i.begin(), omega_i.end()), got;
    for (const auto& u : omega_i) got.insert(apply(S.K, s, u));
    if (got == want) candidates.push_back(s);
  }

  MatrixGroupDescription G = stab_ideal(S, I, candidates);

  GammaGroup gamma;
  gamma.K = S.K;
  for (const Coset& c : G.cosets) {
    RestrictedCoset rc = restrict_coset(G, c);
    bool solvable;
    BinomialData bd = rc.all_blocks_one_dim ? binomial_classify(rc) : BinomialData{};
    if (rc.all_blocks_one_dim && bd.is_binomial) {
      solvable = bd.consistent;
    } else {
      // saturate by the block determinants, then test 1 not in the ideal
      std::vector<Polynomial> gens = rc.gens;
      Polynomial det_prod = Polynomial::constant(Scalar(1), (int)rc.vars.size());
      for (const auto& d : rc.dets) det_prod = det_prod * d;
      gens = saturate(gens, (int)rc.vars.size(), det_prod, budget);
      solvable = is_solvable(gens, budget);
    }
    if (solvable) gamma.elements.push_back(c.sigma);
  }
  // multiplication table
  int m = (int)gamma.elements.size();
  gamma.table.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      GroupHom prod = compose(S.K, gamma.elements[i], gamma.elements[j]);
      for (int k = 0; k < m; ++k)
        if (gamma.elements[k] == prod) gamma.table[i][j] = k;
      assert(gamma.table[i][j] >= 0);
    }
  for (int i = 0; i < m && gamma.abelian; ++i)
    for (int j = 0; j < m && gamma.abelian; ++j)
      if (gamma.table[i][j] != gamma.table[j][i]) gamma.abelian = false;
  return gamma;
}

int group_dimension(const MatrixGroupDescription& G, const Budget& budget) {
  int best = -1;
  for (const Coset& c : G.cosets) {
    RestrictedCoset rc = restrict_coset(G, c);
    int dim;
    BinomialData bd = rc.all_blocks_one_dim ? binomial_classify(rc) : BinomialData{};
    if (rc.all_blocks_one_dim && bd.is_binomial) {
      if (!bd.consistent) continue;
      dim = (int)rc.vars.size() - lattice_rank(bd.lattice, (int)rc.vars.size());
    } else {
      std::vector<Polynomial> gens = rc.gens;
      Polynomial det_prod = Polynomial::constant(Scalar(1), (int)rc.vars.size());
      for (const auto& d : rc.dets) det_prod = det_prod * d;
      gens = saturate(gens, (int)rc.vars.size(), det_prod, budget);
      if (!is_solvable(gens, budget)) continue;
      dim = ideal_dimension(gens, (int)rc.vars.size(), budget);
    }
    best = std::max(best, dim);
  }
  return best;
}

ComponentCount component_count(const MatrixGroupDescription& G, const Budget& budget) {
  (void)budget;
  ComponentCount cc;
  cc.known = true;
  for (const Coset& c : G.cosets) {
    RestrictedCoset rc = restrict_coset(G, c);
    std::ostringstream line;
    line << "coset " << (c.unit_coset ? "id" : "sigma") << ": ";
    if (rc.gens.empty()) {
      cc.count += 1;
      line << "no equations, 1 component";
      if (c.unit_coset) {
        cc.unit_lattice.clear();
        cc.unit_pattern_size = (int)rc.vars.size();
      }
    } else if (rc.all_blocks_one_dim) {
      BinomialData bd = binomial_classify(rc);
      if (!bd.is_binomial) {
        cc.known = false;
        line << "non-binomial equations, component count unknown";
      } else if (!bd.consistent) {
        line << "empty (inconsistent binomial system)";
      } else {
        LatticeInfo li = lattice_info(bd.lattice, bd.nvars);
        cc.count += li.sat_index.get_si();
        line << li.sat_index.get_str() << " components (lattice index)";
        if (c.unit_coset) {
          cc.unit_lattice = bd.lattice;
          cc.unit_pattern_size = bd.nvars;
        }
      }
    } else {
      cc.known = false;
      line << "blocks of dimension > 1 with equations, component count unknown";
    }
    cc.certificate.push_back(line.str());
  }
  return cc;
}

// ---------------------------------------------------------------------------
// quotient representation

QuotientRep quot_rep(const GradedPolyRing& S, const Ideal& I, const std::vector<GroupHom>& sigma,
                     const Budget& budget) {
  QuotientRep qr;
  MatrixGroupDescription stab = stab_ideal(S, I, sigma);
  int n = stab.rep.n;
  int ne = n * n;

  // I_V = sum of the components I_{w} over the generator degrees
  std::vector<ComponentBasis> comps;
  bool trivial = true;
  for (const auto& b : stab.rep.blocks) {
    comps.push_back(ideal_component(S, I, b.degree));
    if (comps.back().dim() > 0) trivial = false;
  }
  if (trivial) {
    qr.group = std::move(stab);
    qr.identical_to_stab = true;
    qr.complement.resize(n);
    for (int i = 0; i < n; ++i) qr.complement[i] = i;
    return qr;
  }

  // complement basis: non-pivot monomials blockwise; projection data
  std::vector<int> complement;              // V-basis indices kept
  std::map<int, std::map<int, Scalar>> proj;  // V-index -> complement expansion
  for (size_t bi = 0; bi < stab.rep.blocks.size(); ++bi) {
    const RepBlock& blk = stab.rep.blocks[bi];
    const ComponentBasis& cb = comps[bi];
    std::vector<int> pivots;
    for (int r = 0; r < cb.rows.rows; ++r)
      for (int c = 0; c < cb.rows.cols; ++c)
        if (!cb.rows(r, c).is_zero()) {
          pivots.push_back(c);
          break;
        }
    std::vector<char> is_piv(blk.dim(), 0);
    for (int p : pivots) is_piv[p] = 1;
    for (int k = 0; k < blk.dim(); ++k)
      if (!is_piv[k]) complement.push_back(blk.offset + k);
    for (int r = 0; r < cb.rows.rows; ++r) {
      // b_{pivot_r} = - sum over free columns of R(r,f) b_f  (mod I)
      auto& row = proj[blk.offset + pivots[r]];
      for (int f = 0; f < blk.dim(); ++f) {
        if (is_piv[f] || cb.rows(r, f).is_zero()) continue;
        row[blk.offset + f] = -cb.rows(r, f);
      }
    }
  }
  int k = (int)complement.size();
  std::vector<int> comp_pos(n, -1);
  for (int i = 0; i < k; ++i) comp_pos[complement[i]] = i;

  // quotient rep basis: the complement monomials inherit their degrees
  GradedPolyRing QS = S;  // same ring; only the representation changes
  RepBasis qrep;
  {
    std::vector<GroupElement> seen;
    for (int idx : complement) {
      GroupElement w = S.degree_of_exp(stab.rep.basis[idx]);
      int b = -1;
      for (size_t i = 0; i < qrep.blocks.size(); ++i)
        if (qrep.blocks[i].degree == w) b = (int)i;
      if (b < 0) {
        RepBlock nb;
        nb.degree = w;
        qrep.blocks.push_back(nb);
        b = (int)qrep.blocks.size() - 1;
      }
      qrep.blocks[b].monomials.push_back(stab.rep.basis[idx]);
    }
    int off = 0;
    for (auto& b : qrep.blocks) {
      b.offset = off;
      off += b.dim();
      for (const auto& m : b.monomials) qrep.basis.push_back(m);
    }
    qrep.n = off;
  }
  assert(qrep.n == k);

  MatrixGroupDescription out;
  out.ring = QS;
  out.rep = qrep;
  out.entries = entry_ring(S, qrep);
  int ke = k * k;

  // new index of each complement monomial in the quotient basis
  std::vector<int> new_index(n, -1);
  for (int i = 0; i < n; ++i)
    if (comp_pos[i] >= 0) new_index[i] = out.rep.index_of(stab.rep.basis[i]);

  for (const Coset& c : stab.cosets) {
    Coset nc;
    nc.sigma = c.sigma;
    nc.block_perm = block_permutation(out.rep, S.K, c.sigma);
    nc.unit_coset = c.unit_coset;
    int kk = out.rep.n;
    std::vector<char> allowed(kk * kk, 0);
    for (size_t i = 0; i < out.rep.blocks.size(); ++i) {
      int src = out.rep.blocks[i].offset;
      int dst = out.rep.blocks[nc.block_perm[i]].offset;
      for (int col = 0; col < out.rep.blocks[i].dim(); ++col)
        for (int row = 0; row < out.rep.blocks[nc.block_perm[i]].dim(); ++row) {
          allowed[(dst + row) * kk + (src + col)] = 1;
          nc.pattern.push_back({dst + row, src + col});
        }
    }
    std::sort(nc.pattern.begin(), nc.pattern.end());

    // projected matrix entries: abar_{ij} = (P M E)_{ij} as linear forms in
    // the big entry variables
    // E: complement j -> V index complement[j]; P: V index -> complement rows
    // build the image ideal by elimination of the n^2 variables
    std::vector<Polynomial> big;  // ring: n^2 old vars then k^2 new vars
    int total = ne + ke;
    // coset ideal, saturated by the block determinants within the pattern
    {
      RestrictedCoset rc = restrict_coset(stab, c);
      std::vector<Polynomial> sat_gens = rc.gens;
      Polynomial det_prod = Polynomial::constant(Scalar(1), (int)rc.vars.size());
      for (const auto& d : rc.dets) det_prod = det_prod * d;
      sat_gens = saturate(sat_gens, (int)rc.vars.size(), det_prod, budget);
      // lift back to the big ring
      std::vector<int> back((int)rc.vars.size());
      for (size_t i = 0; i < rc.vars.size(); ++i) back[i] = rc.vars[i];
      for (const auto& g : sat_gens) big.push_back(g.remap(back, total));
      // off-pattern vars vanish
      std::vector<char> allowed_big(ne, 0);
      for (auto& [row, col] : c.pattern) allowed_big[row * n + col] = 1;
      for (int v = 0; v < ne; ++v)
        if (!allowed_big[v]) big.push_back(Polynomial::variable(v, total));
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        // (P M E)_{ij} = P_i . (column of M at complement[j])
        Polynomial entry;
        int vj = complement[j];
        for (int p = 0; p < n; ++p) {
          // coefficient of complement row i in the projection of e_p
          Scalar coef;
          if (comp_pos[p] == i)
            coef = Scalar(1);
          else if (proj.count(p)) {
            auto it = proj.at(p).find(complement[i]);
            if (it != proj.at(p).end()) coef = it->second;
          }
          if (coef.is_zero()) continue;
          entry = entry + Polynomial::variable(evar(n, p, vj), total).scaled(coef);
        }
        Polynomial abar = Polynomial::variable(ne + new_index[complement[i]] * kk +
                                                   new_index[complement[j]],
                                               total);
        big.push_back(abar - entry);
      }
    std::vector<int> kill;
    for (int v = 0; v < ne; ++v) kill.push_back(v);
    std::vector<Polynomial> elim = eliminate(big, total, kill, budget);
    // contract to the k^2 entry variables
    std::vector<char> allowed_new(ke, 0);
    for (auto& [row, col] : nc.pattern) allowed_new[row * kk + col] = 1;
    for (auto& g : elim) {
      Polynomial h;
      for (auto& t : g.terms) {
        Exp e(t.first.begin() + ne, t.first.end());
        h.terms.push_back({std::move(e), t.second});
      }
      h.normalize_sort();
      // keep equations inside the pattern; off-pattern vanishing is
      // represented by the pattern itself
      bool off_pattern_var = false;
      if (h.terms.size() == 1 && exp_degree(h.terms[0].first) == 1) {
        for (int v = 0; v < ke; ++v)
          if (h.terms[0].first[v] && !allowed_new[v]) off_pattern_var = true;
      }
      if (!h.is_zero() && !off_pattern_var) nc.gens.push_back(std::move(h));
    }
    std::sort(nc.gens.begin(), nc.gens.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.terms < b.terms; });
    nc.gens.erase(std::unique(nc.gens.begin(), nc.gens.end()), nc.gens.end());
    out.cosets.push_back(std::move(nc));
  }

  qr.group = std::move(out);
  qr.complement = complement;
  return qr;
}

// ---------------------------------------------------------------------------

PermutationSymmetries extract_permutation_symmetries(const GradedPolyRing& S, const Ideal& I,
                                                     const Budget& budget) {
  PermutationSymmetries ps;
  int r = S.nvars();
  std::vector<GroupElement> omega;
  for (const auto& d : S.degrees) omega.push_back(d);
  std::vector<GroupHom> auts = enumerate_aut_stabilizing(S.K, omega);

  // variable classes by degree
  std::vector<GroupElement> degs = generator_degrees(S);
  std::vector<std::vector<int>> cls(degs.size());
  for (int v = 0; v < r; ++v)
    for (size_t d = 0; d < degs.size(); ++d)
      if (S.degrees[v] == degs[d]) cls[d].push_back(v);

  // membership components of I at the degrees sigma(deg g)
  std::map<GroupElement, ComponentBasis> comp;
  auto comp_of = [&](const GroupElement& u) -> const ComponentBasis& {
    auto it = comp.find(u);
    if (it != comp.end()) return it->second;
    return comp.emplace(u, ideal_component(S, I, u)).first->second;
  };
  auto in_component = [&](const Polynomial& f, const GroupElement& u) {
    const ComponentBasis& cb = comp_of(u);
    // reduce the coordinate vector against the RREF rows
    std::vector<Scalar> v(cb.space_basis.size());
    for (const auto& t : f.terms) {
      int pos = -1;
      for (size_t i = 0; i < cb.space_basis.size(); ++i)
        if (cb.space_basis[i] == t.first) pos = (int)i;
      if (pos < 0) return false;
      v[pos] = t.second;
    }
    for (int row = 0; row < cb.rows.rows; ++row) {
      int pc = -1;
      for (int c = 0; c < cb.rows.cols; ++c)
        if (!cb.rows(row, c).is_zero()) {
          pc = c;
          break;
        }
      if (!v[pc].is_zero()) {
        Scalar f2 = v[pc];
        for (int c = 0; c < cb.rows.cols; ++c) v[c] -= f2 * cb.rows(row, c);
      }
    }
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  };

  std::set<std::vector<int>> found;
  for (const GroupHom& s : auts) {
    // class image map
    std::vector<int> cls_img(degs.size(), -1);
    bool ok = true;
    for (size_t d = 0; d < degs.size() && ok; ++d) {
      GroupElement img = apply(S.K, s, degs[d]);
      int j = -1;
      for (size_t e = 0; e < degs.size(); ++e)
        if (degs[e] == img) j = (int)e;
      if (j < 0 || cls[j].size() != cls[d].size()) ok = false;
      cls_img[d] = j;
    }
    if (!ok) continue;
    // enumerate within-class bijections
    double combos = 1;
    for (auto& cl : cls)
      for (size_t i = 2; i <= cl.size(); ++i) combos *= (double)i;
    if (combos > 1e5) throw budget_exceeded("too many within-block permutations");

    std::vector<std::vector<std::vector<int>>> class_maps;  // per class: list of bijections
    for (size_t d = 0; d < degs.size(); ++d) {
      std::vector<int> perm(cls[d].size());
      for (size_t i = 0; i < perm.size(); ++i) perm[i] = (int)i;
      std::vector<std::vector<int>> maps;
      do maps.push_back(perm);
      while (std::next_permutation(perm.begin(), perm.end()));
      class_maps.push_back(std::move(maps));
    }
    std::vector<size_t> pick(degs.size(), 0);
    while (true) {
      std::vector<int> pi(r, -1);
      for (size_t d = 0; d < degs.size(); ++d)
        for (size_t i = 0; i < cls[d].size(); ++i)
          pi[cls[d][i]] = cls[cls_img[d]][class_maps[d][pick[d]][i]];
      // test: pi(g) lies in I for every generator
      bool sym = true;
      std::vector<Polynomial> images(r);
      for (int v = 0; v < r; ++v) images[v] = Polynomial::variable(pi[v], r);
      for (const auto& g : I.gens) {
        if (g.is_zero()) continue;
        auto dg = degree_of(S, g);
        Polynomial img = Polynomial::compose(g, images, r);
        GroupElement du = apply(S.K, s, *dg);
        if (!in_component(img, du)) {
          sym = false;
          break;
        }
      }
      if (sym) found.insert(pi);
      // odometer
      size_t d = 0;
      while (d < pick.size()) {
        if (++pick[d] < class_maps[d].size()) break;
        pick[d] = 0;
        ++d;
      }
      if (d == pick.size()) break;
    }
  }
  (void)budget;
  ps.perms.assign(found.begin(), found.end());

  // closure status
  auto contains = [&](const std::vector<int>& p) { return found.count(p) > 0; };
  ps.closed_under_composition = true;
  ps.closed_under_inverse = true;
  for (const auto& p : ps.perms) {
    std::vector<int> inv(r);
    for (int i = 0; i < r; ++i) inv[p[i]] = i;
    if (!contains(inv)) ps.closed_under_inverse = false;
    for (const auto& q : ps.perms) {
      std::vector<int> pq(r);
      for (int i = 0; i < r; ++i) pq[i] = p[q[i]];
      if (!contains(pq)) ps.closed_under_composition = false;
    }
  }
  return ps;
}

DimBound dim_bound(const GradedPolyRing& S, const Ideal& I) {
  DimBound db;
  for (const GroupElement& w : generator_degrees(S)) {
    long dim_sw = (long)monomial_basis(S, w).size();
    long dim_iw = ideal_component(S, I, w).dim();
    long d = dim_sw - dim_iw;
    db.algebra_bound += d * d;
  }
  db.mds_bound = db.algebra_bound - S.K.free_rank;
  return db;
}

bool entry_ideals_homogeneous(const MatrixGroupDescription& G) {
  for (const Coset& c : G.cosets)
    for (const Polynomial& g : c.gens)
      if (!degree_of(G.entries, g)) return false;
  return true;
}

Scalar evaluate_entry_poly(const Polynomial& p, const ScalarMat& M) {
  Scalar acc;
  int n = M.rows;
  for (const auto& t : p.terms) {
    Scalar v = t.second;
    for (int var = 0; var < (int)t.first.size(); ++var)
      for (int k = 0; k < t.first[var]; ++k) v *= M(var / n, var % n);
    acc += v;
  }
  return acc;
}

std::string describe(const MatrixGroupDescription& G) {
  std::ostringstream os;
  os << "ambient GL(" << G.rep.n << ")\n";
  os << "blocks:";
  for (const auto& b : G.rep.blocks) os << " " << b.degree.str() << "(dim " << b.dim() << ")";
  os << "\n";
  for (size_t ci = 0; ci < G.cosets.size(); ++ci) {
    const Coset& c = G.cosets[ci];
    os << "coset " << (ci + 1) << (c.unit_coset ? " [unit]" : "") << " basis image (";
    // basis index image under the permuting matrix
    std::vector<int> img(G.rep.n);
    for (size_t i = 0; i < G.rep.blocks.size(); ++i)
      for (int kk = 0; kk < G.rep.blocks[i].dim(); ++kk)
        img[G.rep.blocks[i].offset + kk] = G.rep.blocks[c.block_perm[i]].offset + kk;
    for (int i = 0; i < G.rep.n; ++i) os << (i ? "," : "") << img[i] + 1;
    os << ")\n";
    if (c.gens.empty()) {
      os << "  no equations\n";
    } else {
      for (const auto& g : c.gens) os << "  " << poly_str(G.entries, g) << "\n";
    }
  }
  return os.str();
}

}  // namespace gaut
