#include "gaut/graded.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "gaut/diag.hpp"

namespace gaut {

std::optional<GroupElement> degree_of(const GradedPolyRing& ring, const Polynomial& f) {
  if (f.is_zero()) return GroupElement::zero(ring.K);  // degree 0 by convention
  std::optional<GroupElement> deg;
  for (const auto& t : f.terms) {
    GroupElement d = ring.degree_of_exp(t.first);
    if (!deg)
      deg = d;
    else if (!(*deg == d))
      return std::nullopt;
  }
  return deg;
}

GradingCheck check_effective_pointed(const GradedPolyRing& ring) {
  GradingCheck res;
  // effectiveness: the degrees generate K
  res.effective = generates_group(ring.K, ring.degrees);
  if (!res.effective) {
    res.witness = "variable degrees generate a proper subgroup of the grading group";
    return res;
  }
  // pointedness: strictly positive functional on the free parts
  std::vector<std::vector<Int>> free_parts;
  for (const auto& d : ring.degrees) free_parts.push_back(d.free_part);
  PointednessResult p = pointedness(ring.K.free_rank, free_parts);
  res.pointed = p.pointed;
  if (!p.pointed) {
    // the circuit scaled to integers names a degree-zero monomial witness
    Int lcm_den(1);
    for (const Rat& c : p.circuit) lcm_den = lcm(lcm_den, Int(c.get_den()));
    std::string mono;
    for (int i = 0; i < ring.nvars(); ++i) {
      Rat c = p.circuit[i] * Rat(lcm_den);
      if (c == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.vars[i];
      if (c != 1) mono += "^" + Rat(abs(c)).get_num().get_str();
    }
    res.witness = mono;
    return res;
  }
  res.functional = p.functional;
  return res;
}

std::vector<Int> ensure_effective_pointed(const GradedPolyRing& ring) {
  GradingCheck c = check_effective_pointed(ring);
  if (!c.effective) throw non_effective_grading(c.witness);
  if (!c.pointed) throw non_pointed_grading("degree-zero monomial " + c.witness);
  return c.functional;
}

namespace {

Int dot_int(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void basis_dfs(const GradedPolyRing& ring, const std::vector<Int>& values,
               const std::vector<Int>& u, int var, Int budget,
               std::vector<Int> free_rest, std::vector<Int> tors_rest, Exp& cur,
               std::vector<Exp>& out) {
  int r = ring.nvars();
  if (var == r) {
    if (budget != 0) return;
    for (const Int& x : free_rest)
      if (x != 0) return;
    for (size_t i = 0; i < tors_rest.size(); ++i)
      if (tors_rest[i] % Int(ring.K.torsion_orders[i]) != 0) return;
    out.push_back(cur);
    return;
  }
  Int maxe = budget / values[var];
  for (Int e(0); e <= maxe; ++e) {
    cur[var] = (int)e.get_si();
    std::vector<Int> fr = free_rest, tr = tors_rest;
    for (int i = 0; i < ring.K.free_rank; ++i) fr[i] -= e * ring.degrees[var].free_part[i];
    for (int i = 0; i < ring.K.torsion_rank(); ++i) tr[i] -= e * ring.degrees[var].torsion_part[i];
    basis_dfs(ring, values, u, var + 1, budget - e * values[var], fr, tr, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exp> monomial_basis(const GradedPolyRing& ring, const GroupElement& w) {
  std::vector<Int> u = ensure_effective_pointed(ring);
  std::vector<Int> values;
  for (const auto& d : ring.degrees) values.push_back(dot_int(u, d.free_part));
  Int budget = dot_int(u, w.free_part);
  std::vector<Exp> out;
  if (budget < 0) return out;
  Exp cur(ring.nvars(), 0);
  basis_dfs(ring, values, u, 0, budget, w.free_part, w.torsion_part, cur, out);
  std::sort(out.begin(), out.end(), grlex_greater);
  return out;
}

ComponentBasis ideal_component(const GradedPolyRing& ring, const Ideal& I, const GroupElement& w) {
  ComponentBasis cb;
  cb.space_basis = monomial_basis(ring, w);
  std::vector<Polynomial> products;
  for (const auto& g : I.gens) {
    if (g.is_zero()) continue;
    auto dg = degree_of(ring, g);
    if (!dg) throw grading_error("NotHomogeneous", "ideal generator is not homogeneous");
    GroupElement c = sub(ring.K, w, *dg);
    for (const Exp& m : monomial_basis(ring, c))
      products.push_back(Polynomial::monomial(m, Scalar(1)) * g);
  }
  // coordinates in the monomial basis of S_w
  std::map<Exp, int> index;
  for (size_t i = 0; i < cb.space_basis.size(); ++i) index[cb.space_basis[i]] = (int)i;
  ScalarMat m((int)products.size(), (int)cb.space_basis.size());
  for (int r = 0; r < (int)products.size(); ++r)
    for (const auto& t : products[r].terms) {
      auto it = index.find(t.first);
      assert(it != index.end());
      m(r, it->second) = t.second;
    }
  auto piv = m.rref();
  cb.rows = ScalarMat((int)piv.size(), m.cols);
  for (int r = 0; r < (int)piv.size(); ++r)
    for (int c = 0; c < m.cols; ++c) cb.rows(r, c) = m(r, c);
  for (int r = 0; r < cb.rows.rows; ++r) {
    Polynomial p;
    for (int c = 0; c < cb.rows.cols; ++c)
      if (!cb.rows(r, c).is_zero()) p.terms.push_back({cb.space_basis[c], cb.rows(r, c)});
    p.normalize_sort();
    cb.polys.push_back(std::move(p));
  }
  return cb;
}

std::vector<GroupElement> generator_degrees(const GradedPolyRing& ring) {
  std::vector<GroupElement> out;
  for (const auto& d : ring.degrees)
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  return out;
}

bool degree_less(const GradedPolyRing& ring, const GroupElement& lo, const GroupElement& hi) {
  if (lo == hi) return false;
  GroupElement diff = sub(ring.K, hi, lo);
  return !monomial_basis(ring, diff).empty();
}

std::vector<GroupElement> ideal_generator_degrees(const GradedPolyRing& ring, const Ideal& I) {
  std::vector<GroupElement> cand;
  for (const auto& g : I.gens) {
    if (g.is_zero()) continue;
    auto d = degree_of(ring, g);
    if (!d) throw grading_error("NotHomogeneous", "ideal generator is not homogeneous");
    if (std::find(cand.begin(), cand.end(), *d) == cand.end()) cand.push_back(*d);
  }
  std::vector<GroupElement> out;
  for (const auto& w : cand) {
    ComponentBasis full = ideal_component(ring, I, w);
    // span of the strictly smaller candidate components pushed up to degree w
    std::vector<Polynomial> sub_products;
    for (const auto& w2 : cand) {
      if (!degree_less(ring, w2, w)) continue;
      ComponentBasis lower = ideal_component(ring, I, w2);
      GroupElement c = sub(ring.K, w, w2);
      for (const Exp& m : monomial_basis(ring, c))
        for (const auto& h : lower.polys)
          sub_products.push_back(Polynomial::monomial(m, Scalar(1)) * h);
    }
    std::map<Exp, int> index;
    for (size_t i = 0; i < full.space_basis.size(); ++i) index[full.space_basis[i]] = (int)i;
    ScalarMat m((int)sub_products.size(), (int)full.space_basis.size());
    for (int r = 0; r < (int)sub_products.size(); ++r)
      for (const auto& t : sub_products[r].terms) m(r, index.at(t.first)) = t.second;
    if (full.dim() > m.rank()) out.push_back(w);
  }
  return out;
}

MinimalPresentation minimalize_presentation(const GradedPolyRing& ring_in, const Ideal& I_in) {
  MinimalPresentation mp;
  mp.ring = ring_in;
  mp.ideal = I_in;
  mp.kept.resize(ring_in.nvars());
  for (int i = 0; i < ring_in.nvars(); ++i) mp.kept[i] = i;

  bool changed = true;
  while (changed) {
    changed = false;
    int r = mp.ring.nvars();
    for (int i = 0; i < r && !changed; ++i) {
      ComponentBasis cb = ideal_component(mp.ring, mp.ideal, mp.ring.degrees[i]);
      Exp ei(r, 0);
      ei[i] = 1;
      // an element of I_{q_i} with nonzero coefficient on the monomial T_i
      int row = -1, col = -1;
      for (size_t c = 0; c < cb.space_basis.size(); ++c)
        if (cb.space_basis[c] == ei) col = (int)c;
      if (col < 0) continue;
      for (int rr = 0; rr < cb.rows.rows; ++rr)
        if (!cb.rows(rr, col).is_zero()) {
          row = rr;
          break;
        }
      if (row < 0) continue;
      // solve T_i = -(rest)/c and substitute
      Polynomial f = cb.polys[row];
      Scalar c = f.coeff(ei);
      Polynomial rest = f - Polynomial::monomial(ei, c);
      Polynomial value = rest.scaled(-(c.inv()));
      std::vector<Polynomial> new_gens;
      for (const auto& g : mp.ideal.gens) {
        Polynomial h = g.substitute(i, value, r);
        if (!h.is_zero()) new_gens.push_back(h);
      }
      // drop the variable
      std::vector<int> map(r);
      for (int v = 0, nv = 0; v < r; ++v) map[v] = v == i ? -1 : nv++;
      GradedPolyRing nr;
      nr.field = mp.ring.field;
      nr.K = mp.ring.K;
      for (int v = 0; v < r; ++v) {
        if (v == i) continue;
        nr.vars.push_back(mp.ring.vars[v]);
        nr.degrees.push_back(mp.ring.degrees[v]);
      }
      std::vector<Polynomial> remapped;
      for (auto& g : new_gens) remapped.push_back(g.remap(map, r - 1));
      mp.eliminated.push_back(mp.ring.vars[i]);
      mp.kept.erase(mp.kept.begin() + i);
      mp.ring = std::move(nr);
      mp.ideal.gens = std::move(remapped);
      changed = true;
    }
  }
  return mp;
}

}  // namespace gaut
