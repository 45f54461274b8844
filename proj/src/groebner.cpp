#include "gaut/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>

namespace gaut {

bool MonomialOrder::greater(const Exp& a, const Exp& b) const {
  switch (kind) {
    case Lex: {
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
      return false;
    }
    case Block: {
      auto cmp_masked = [&](bool masked) -> int {
        int da = 0, db = 0;
        for (size_t i = 0; i < a.size(); ++i)
          if ((bool)elim[i] == masked) {
            da += a[i];
            db += b[i];
          }
        if (da != db) return da > db ? 1 : -1;
        for (size_t i = a.size(); i-- > 0;)
          if ((bool)elim[i] == masked && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
      };
      int c = cmp_masked(true);
      if (c) return c > 0;
      return cmp_masked(false) > 0;
    }
    case Grevlex:
    default: {
      int da = exp_degree(a), db = exp_degree(b);
      if (da != db) return da > db;
      for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    }
  }
}

namespace {

// engine representation: terms sorted descending in the active order
struct GPoly {
  std::vector<std::pair<Exp, Scalar>> t;
  int sugar = 0;

  bool zero() const { return t.empty(); }
  const Exp& lt() const { return t[0].first; }
  const Scalar& lc() const { return t[0].second; }
};

GPoly to_gpoly(const Polynomial& p, const MonomialOrder& ord) {
  GPoly g;
  g.t = p.terms;
  std::sort(g.t.begin(), g.t.end(),
            [&](const auto& x, const auto& y) { return ord.greater(x.first, y.first); });
  g.sugar = p.total_degree();
  return g;
}

Polynomial from_gpoly(const GPoly& g) {
  Polynomial p;
  p.terms = g.t;
  p.normalize_sort();
  return p;
}

bool all_constant(const GPoly& g) {
  for (const auto& t : g.t)
    if (!t.second.is_constant()) return false;
  return true;
}

// content normalization: integer-primitive over Q, monic otherwise
void normalize(GPoly& g) {
  if (g.zero()) return;
  if (all_constant(g)) {
    Int num_gcd(0), den_lcm(1);
    for (const auto& t : g.t) {
      Rat c = t.second.rational_value();
      num_gcd = gcd(num_gcd, Int(c.get_num()));
      den_lcm = lcm(den_lcm, Int(c.get_den()));
    }
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    if (g.lc().rational_value() * scale < 0) scale = -scale;
    if (scale != 1) {
      Scalar s{Rat(scale)};
      for (auto& t : g.t) t.second *= s;
    }
  } else {
    Scalar inv = g.lc().inv();
    if (!inv.is_one())
      for (auto& t : g.t) t.second *= inv;
  }
}

void make_monic(GPoly& g) {
  if (g.zero()) return;
  Scalar inv = g.lc().inv();
  if (!inv.is_one())
    for (auto& t : g.t) t.second *= inv;
}

GPoly sub_mul(const GPoly& f, const Scalar& c, const Exp& m, const GPoly& g,
              const MonomialOrder& ord) {
  // f - c * x^m * g, merge sorted
  GPoly r;
  r.sugar = std::max(f.sugar, g.sugar + exp_degree(m));
  r.t.reserve(f.t.size() + g.t.size());
  size_t i = 0, j = 0;
  while (i < f.t.size() && j < g.t.size()) {
    Exp gm = exp_add(g.t[j].first, m);
    if (f.t[i].first == gm) {
      Scalar v = f.t[i].second - c * g.t[j].second;
      if (!v.is_zero()) r.t.push_back({f.t[i].first, v});
      ++i, ++j;
    } else if (ord.greater(f.t[i].first, gm)) {
      r.t.push_back(f.t[i++]);
    } else {
      r.t.push_back({std::move(gm), -(c * g.t[j].second)});
      ++j;
    }
  }
  while (i < f.t.size()) r.t.push_back(f.t[i++]);
  while (j < g.t.size()) {
    r.t.push_back({exp_add(g.t[j].first, m), -(c * g.t[j].second)});
    ++j;
  }
  return r;
}

// full normal form of f against basis (leading and tail reduction)
GPoly reduce_full(GPoly f, const std::vector<GPoly>& basis, const MonomialOrder& ord) {
  GPoly out;
  out.sugar = f.sugar;
  while (!f.zero()) {
    bool reduced = false;
    for (const GPoly& g : basis) {
      if (g.zero()) continue;
      if (exp_divides(g.lt(), f.lt())) {
        Exp m = exp_sub(f.lt(), g.lt());
        Scalar c = f.lc() / g.lc();
        f = sub_mul(f, c, m, g, ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.t.push_back(f.t[0]);
      f.t.erase(f.t.begin());
    }
  }
  return out;
}

struct Pair {
  int i, j;
  Exp lcm;
  int sugar;
};

}  // namespace

bool GroebnerBasis::trivial() const {
  return elements.size() == 1 && elements[0].total_degree() == 0 && !elements[0].is_zero();
}

GroebnerBasis groebner(const std::vector<Polynomial>& gens_in, const MonomialOrder& ord,
                       const Budget& budget) {
  // deterministic input ordering
  std::vector<Polynomial> gens;
  for (const auto& g : gens_in)
    if (!g.is_zero()) gens.push_back(g);
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
    return a.terms < b.terms;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<GPoly> basis;
  std::vector<Pair> pairs;
  auto add_pairs = [&](int idx) {
    for (int i = 0; i < idx; ++i) {
      if (basis[i].zero()) continue;
      Pair p;
      p.i = i;
      p.j = idx;
      p.lcm = exp_lcm(basis[i].lt(), basis[idx].lt());
      p.sugar = exp_degree(p.lcm);
      pairs.push_back(std::move(p));
    }
  };

  for (const auto& g : gens) {
    GPoly gp = to_gpoly(g, ord);
    normalize(gp);
    basis.push_back(std::move(gp));
    add_pairs((int)basis.size() - 1);
  }

  std::int64_t processed = 0;
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm != b.lcm) return !ord.greater(a.lcm, b.lcm);
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  while (!pairs.empty()) {
    // sugar selection with deterministic ties
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (pair_less(pairs[k], pairs[best])) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);

    const GPoly &f = basis[p.i], &g = basis[p.j];
    if (f.zero() || g.zero()) continue;
    // product criterion
    if (exp_disjoint(f.lt(), g.lt())) continue;
    // chain criterion: some basis element's lead divides the lcm and both
    // subsidiary pairs have strictly smaller lcm
    {
      bool skip = false;
      for (int k = 0; k < (int)basis.size() && !skip; ++k) {
        if (k == p.i || k == p.j || basis[k].zero()) continue;
        if (!exp_divides(basis[k].lt(), p.lcm)) continue;
        Exp l1 = exp_lcm(basis[k].lt(), f.lt());
        Exp l2 = exp_lcm(basis[k].lt(), g.lt());
        if (l1 != p.lcm && l2 != p.lcm) skip = true;
      }
      if (skip) continue;
    }

    if (++processed > budget.max_pairs) throw budget_exceeded("Groebner pair limit");
    if (exp_degree(p.lcm) > budget.max_degree) throw budget_exceeded("Groebner degree limit");

    // S-polynomial
    Exp mf = exp_sub(p.lcm, f.lt());
    Exp mg = exp_sub(p.lcm, g.lt());
    GPoly s;
    s.sugar = std::max(f.sugar + exp_degree(mf), g.sugar + exp_degree(mg));
    {
      GPoly left;
      left.t.reserve(f.t.size());
      for (const auto& t : f.t) left.t.push_back({exp_add(t.first, mf), t.second / f.lc()});
      left.sugar = s.sugar;
      s = sub_mul(left, g.lc().inv(), mg, g, ord);
      s.sugar = left.sugar;
    }
    GPoly r = reduce_full(std::move(s), basis, ord);
    if (r.zero()) continue;
    normalize(r);
    basis.push_back(std::move(r));
    add_pairs((int)basis.size() - 1);
  }

  // interreduce to the unique reduced basis
  for (int i = 0; i < (int)basis.size(); ++i) {
    if (basis[i].zero()) continue;
    for (int j = 0; j < (int)basis.size(); ++j) {
      if (i == j || basis[j].zero()) continue;
      if (exp_divides(basis[j].lt(), basis[i].lt())) {
        if (basis[j].lt() == basis[i].lt() && j > i) continue;
        basis[i].t.clear();
        break;
      }
    }
  }
  std::vector<GPoly> kept;
  for (auto& b : basis)
    if (!b.zero()) kept.push_back(std::move(b));
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<GPoly> others;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = reduce_full(std::move(kept[i]), others, ord);
    make_monic(kept[i]);
  }
  // the tail reduction cannot kill a member (leads are minimal), but guard
  std::vector<GPoly> final_basis;
  for (auto& k : kept)
    if (!k.zero()) final_basis.push_back(std::move(k));
  std::sort(final_basis.begin(), final_basis.end(),
            [&](const GPoly& a, const GPoly& b) { return ord.greater(a.lt(), b.lt()); });

  GroebnerBasis gb;
  gb.order = ord;
  for (auto& b : final_basis) gb.elements.push_back(from_gpoly(b));
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  std::vector<GPoly> basis;
  for (const auto& g : gb.elements) basis.push_back(to_gpoly(g, gb.order));
  GPoly r = reduce_full(to_gpoly(f, gb.order), basis, gb.order);
  return from_gpoly(r);
}

bool membership(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

bool membership(const Polynomial& f, const std::vector<Polynomial>& gens, const Budget& budget) {
  if (f.is_zero()) return true;
  return membership(f, groebner(gens, MonomialOrder::grevlex(), budget));
}

namespace {

std::vector<Polynomial> lift_exps(const std::vector<Polynomial>& gens, int nvars, int extra) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial h = g;
    for (auto& t : h.terms) t.first.resize(nvars + extra, 0);
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, int nvars,
                                  const std::vector<int>& kill, const Budget& budget) {
  std::vector<char> mask(nvars, 0);
  for (int k : kill) mask[k] = 1;
  GroebnerBasis gb = groebner(gens, MonomialOrder::block(mask), budget);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements) {
    bool pure = true;
    for (const auto& t : g.terms)
      for (int i = 0; i < nvars && pure; ++i)
        if (t.first[i] && mask[i]) pure = false;
    if (pure) kept.push_back(g);
  }
  return kept;
}

std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, int nvars,
                                 const Polynomial& f, const Budget& budget) {
  // I + <1 - t f> in K[T, t], then eliminate t
  std::vector<Polynomial> big = lift_exps(gens, nvars, 1);
  Polynomial tf = Polynomial::variable(nvars, nvars + 1) * lift_exps({f}, nvars, 1)[0];
  big.push_back(Polynomial::constant(Scalar(1), nvars + 1) - tf);
  std::vector<Polynomial> elim = eliminate(big, nvars + 1, {nvars}, budget);
  // drop the extra variable from the exponent vectors
  std::vector<Polynomial> out;
  for (auto& g : elim) {
    Polynomial h;
    for (auto& t : g.terms) {
      Exp e(t.first.begin(), t.first.end() - 1);
      h.terms.push_back({std::move(e), t.second});
    }
    h.normalize_sort();
    out.push_back(std::move(h));
  }
  return out;
}

bool is_solvable(const std::vector<Polynomial>& gens, const Budget& budget) {
  GroebnerBasis gb = groebner(gens, MonomialOrder::grevlex(), budget);
  return !gb.trivial();
}

int ideal_dimension(const std::vector<Polynomial>& gens, int nvars, const Budget& budget) {
  GroebnerBasis gb = groebner(gens, MonomialOrder::grevlex(), budget);
  if (gb.trivial()) return -1;
  // supports of the leading monomials
  std::set<std::vector<int>> supp_set;
  for (const auto& g : gb.elements) {
    std::vector<int> s;
    for (int i = 0; i < nvars; ++i)
      if (g.terms[0].first[i]) s.push_back(i);
    supp_set.insert(s);
  }
  std::vector<std::vector<int>> supports(supp_set.begin(), supp_set.end());
  // drop supersets
  std::vector<std::vector<int>> minimal;
  for (const auto& s : supports) {
    bool keep = true;
    for (const auto& t : supports) {
      if (t == s) continue;
      if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(s);
  }
  // minimum vertex cover of the support hypergraph by branch and bound
  std::function<int(size_t, std::set<int>&)> cover = [&](size_t idx, std::set<int>& hit) -> int {
    while (idx < minimal.size()) {
      bool covered = false;
      for (int v : minimal[idx])
        if (hit.count(v)) covered = true;
      if (!covered) break;
      ++idx;
    }
    if (idx == minimal.size()) return 0;
    int best = nvars + 1;
    for (int v : minimal[idx]) {
      hit.insert(v);
      best = std::min(best, 1 + cover(idx + 1, hit));
      hit.erase(v);
    }
    return best;
  };
  std::set<int> hit;
  int c = cover(0, hit);
  return nvars - c;
}

std::vector<Polynomial> intersect_ideals(const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b, int nvars,
                                         const Budget& budget) {
  // t*a + (1-t)*b in K[T, t], eliminate t
  std::vector<Polynomial> big;
  Polynomial t = Polynomial::variable(nvars, nvars + 1);
  Polynomial one_minus_t = Polynomial::constant(Scalar(1), nvars + 1) - t;
  for (const auto& g : lift_exps(a, nvars, 1)) big.push_back(t * g);
  for (const auto& g : lift_exps(b, nvars, 1)) big.push_back(one_minus_t * g);
  std::vector<Polynomial> elim = eliminate(big, nvars + 1, {nvars}, budget);
  std::vector<Polynomial> out;
  for (auto& g : elim) {
    Polynomial h;
    for (auto& tt : g.terms) {
      Exp e(tt.first.begin(), tt.first.end() - 1);
      h.terms.push_back({std::move(e), tt.second});
    }
    h.normalize_sort();
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Polynomial> ring_map_preimage(const std::vector<Polynomial>& images,
                                          const std::vector<Polynomial>& ideal_gens, int nvars_T,
                                          const Budget& budget) {
  int s = (int)images.size();
  int total = nvars_T + s;
  // graph ideal <Y_j - g_j(T)> + I in K[T, Y], T-block eliminated
  std::vector<Polynomial> big = lift_exps(ideal_gens, nvars_T, s);
  for (int j = 0; j < s; ++j) {
    Polynomial yj = Polynomial::variable(nvars_T + j, total);
    big.push_back(yj - lift_exps({images[j]}, nvars_T, s)[0]);
  }
  std::vector<int> kill;
  for (int i = 0; i < nvars_T; ++i) kill.push_back(i);
  std::vector<Polynomial> elim = eliminate(big, total, kill, budget);
  // contract to the Y variables
  std::vector<Polynomial> out;
  for (auto& g : elim) {
    Polynomial h;
    for (auto& t : g.terms) {
      Exp e(t.first.begin() + nvars_T, t.first.end());
      h.terms.push_back({std::move(e), t.second});
    }
    h.normalize_sort();
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace gaut
