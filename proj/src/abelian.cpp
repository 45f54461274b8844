#include "gaut/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "gaut/diag.hpp"

namespace gaut {

GroupElement GroupElement::zero(const AbelianGroup& K) {
  GroupElement e;
  e.free_part.assign(K.free_rank, Int(0));
  e.torsion_part.assign(K.torsion_rank(), Int(0));
  return e;
}

void GroupElement::reduce(const AbelianGroup& K) {
  for (int i = 0; i < K.torsion_rank(); ++i) {
    Int n(K.torsion_orders[i]);
    Int r = torsion_part[i] % n;
    if (r < 0) r += n;
    torsion_part[i] = r;
  }
}

bool GroupElement::is_zero() const {
  for (const Int& x : free_part)
    if (x != 0) return false;
  for (const Int& x : torsion_part)
    if (x != 0) return false;
  return true;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const Int& x : free_part) {
    if (!first) os << ",";
    os << x.get_str();
    first = false;
  }
  for (const Int& x : torsion_part) {
    if (!first) os << ",";
    os << x.get_str() << "~";
    first = false;
  }
  os << ")";
  return os.str();
}

GroupElement add(const AbelianGroup& K, const GroupElement& a, const GroupElement& b) {
  GroupElement r = a;
  for (int i = 0; i < K.free_rank; ++i) r.free_part[i] += b.free_part[i];
  for (int i = 0; i < K.torsion_rank(); ++i) r.torsion_part[i] += b.torsion_part[i];
  r.reduce(K);
  return r;
}

GroupElement sub(const AbelianGroup& K, const GroupElement& a, const GroupElement& b) {
  return add(K, a, neg(K, b));
}

GroupElement neg(const AbelianGroup& K, const GroupElement& a) {
  GroupElement r = a;
  for (Int& x : r.free_part) x = -x;
  for (Int& x : r.torsion_part) x = -x;
  r.reduce(K);
  return r;
}

GroupElement smul(const AbelianGroup& K, const Int& c, const GroupElement& a) {
  GroupElement r = a;
  for (Int& x : r.free_part) x *= c;
  for (Int& x : r.torsion_part) x *= c;
  r.reduce(K);
  return r;
}

GroupHom identity_hom(const AbelianGroup& K) {
  GroupHom h;
  h.B = IntMat::identity(K.free_rank);
  h.C = IntMat(K.torsion_rank(), K.free_rank);
  h.D = IntMat::identity(K.torsion_rank());
  return h;
}

std::string GroupHom::str() const {
  std::ostringstream os;
  os << "B=\n" << B.str();
  if (C.rows) os << "C=\n" << C.str() << "D=\n" << D.str();
  return os.str();
}

bool is_well_defined(const GroupHom& h, const AbelianGroup& K) {
  int t = K.torsion_rank();
  if (h.B.rows != K.free_rank || h.B.cols != K.free_rank) return false;
  if (h.C.rows != t || (t && h.C.cols != K.free_rank)) return false;
  if (h.D.rows != t || h.D.cols != t) return false;
  for (int j = 0; j < t; ++j) {
    Int nj(K.torsion_orders[j]);
    for (int i = 0; i < t; ++i) {
      Int ni(K.torsion_orders[i]);
      if ((nj * h.D(i, j)) % ni != 0) return false;
    }
  }
  return true;
}

namespace {

// torsion map surjective (hence bijective): D x = e_j solvable mod the orders
bool torsion_bijective(const IntMat& D, const AbelianGroup& K) {
  int t = K.torsion_rank();
  if (t == 0) return true;
  IntMat M(t, 2 * t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) M(i, j) = D(i, j);
    M(i, t + i) = Int(K.torsion_orders[i]);
  }
  for (int j = 0; j < t; ++j) {
    std::vector<Int> b(t, Int(0)), x;
    b[j] = 1;
    if (!solve_integer(M, b, x)) return false;
  }
  return true;
}

}  // namespace

bool is_automorphism(const GroupHom& h, const AbelianGroup& K) {
  if (!is_well_defined(h, K)) return false;
  if (K.free_rank) {
    Int d = h.B.det();
    if (d != 1 && d != -1) return false;
  }
  return torsion_bijective(h.D, K);
}

GroupElement apply(const AbelianGroup& K, const GroupHom& h, const GroupElement& w) {
  if ((int)w.free_part.size() != K.free_rank || (int)w.torsion_part.size() != K.torsion_rank())
    throw shape_mismatch("element does not match group shape");
  GroupElement r;
  r.free_part = h.B.apply(w.free_part);
  r.torsion_part.assign(K.torsion_rank(), Int(0));
  for (int i = 0; i < K.torsion_rank(); ++i) {
    for (int j = 0; j < K.free_rank; ++j) r.torsion_part[i] += h.C(i, j) * w.free_part[j];
    for (int j = 0; j < K.torsion_rank(); ++j) r.torsion_part[i] += h.D(i, j) * w.torsion_part[j];
  }
  r.reduce(K);
  return r;
}

namespace {

void reduce_hom(GroupHom& h, const AbelianGroup& K) {
  for (int i = 0; i < K.torsion_rank(); ++i) {
    Int n(K.torsion_orders[i]);
    for (int j = 0; j < h.C.cols; ++j) {
      Int r = h.C(i, j) % n;
      if (r < 0) r += n;
      h.C(i, j) = r;
    }
    for (int j = 0; j < h.D.cols; ++j) {
      Int r = h.D(i, j) % n;
      if (r < 0) r += n;
      h.D(i, j) = r;
    }
  }
}

}  // namespace

GroupHom compose(const AbelianGroup& K, const GroupHom& h1, const GroupHom& h2) {
  if (h1.B.cols != h2.B.rows) throw shape_mismatch("hom composition shapes differ");
  GroupHom r;
  r.B = h1.B * h2.B;
  r.D = h1.D * h2.D;
  r.C = IntMat(K.torsion_rank(), K.free_rank);
  if (K.torsion_rank()) {
    IntMat c1b2 = h1.C * h2.B;
    IntMat d1c2 = h1.D * h2.C;
    for (int i = 0; i < r.C.rows; ++i)
      for (int j = 0; j < r.C.cols; ++j) r.C(i, j) = c1b2(i, j) + d1c2(i, j);
  }
  reduce_hom(r, K);
  return r;
}

GroupHom invert(const AbelianGroup& K, const GroupHom& h) {
  if (!is_automorphism(h, K)) throw shape_mismatch("invert requires an automorphism");
  GroupHom r;
  if (!h.B.inverse(r.B)) throw shape_mismatch("free block not unimodular");
  int t = K.torsion_rank();
  r.D = IntMat(t, t);
  IntMat M(t, 2 * t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) M(i, j) = h.D(i, j);
    M(i, t + i) = Int(K.torsion_orders[i]);
  }
  for (int j = 0; j < t; ++j) {
    std::vector<Int> b(t, Int(0)), x;
    b[j] = 1;
    bool ok = solve_integer(M, b, x);
    assert(ok);
    (void)ok;
    for (int i = 0; i < t; ++i) r.D(i, j) = x[i];
  }
  // psi^{-1}(x,s) = (B^{-1}x, D^{-1}(s - C B^{-1} x))
  r.C = IntMat(t, K.free_rank);
  if (t && K.free_rank) {
    IntMat cb = h.C * r.B;
    IntMat dc = r.D * cb;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < K.free_rank; ++j) r.C(i, j) = -dc(i, j);
  }
  reduce_hom(r, K);
  return r;
}

bool generates_group(const AbelianGroup& K, const std::vector<GroupElement>& gens) {
  int k = K.free_rank, t = K.torsion_rank();
  if (k + t == 0) return true;
  IntMat M(k + t, (int)gens.size() + t);
  for (int c = 0; c < (int)gens.size(); ++c) {
    for (int i = 0; i < k; ++i) M(i, c) = gens[c].free_part[i];
    for (int i = 0; i < t; ++i) M(k + i, c) = gens[c].torsion_part[i];
  }
  for (int i = 0; i < t; ++i) M(k + i, (int)gens.size() + i) = Int(K.torsion_orders[i]);
  SmithResult s = smith_normal_form(M);
  if (s.rank < k + t) return false;
  for (int i = 0; i < k + t; ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

namespace {

using Vec = std::vector<Int>;

struct FreePartData {
  std::vector<Vec> elems;          // distinct free parts, sorted
  std::vector<int> multiplicity;   // distinct Omega elements sharing it
  std::vector<std::vector<Int>> profile;  // GL(Z)-invariant per element
};

// rational solve basis * x = v, basis given as columns; k small
bool rat_solve(const std::vector<Vec>& basis, const Vec& v, std::vector<Rat>& out) {
  int k = (int)basis.size();
  std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k + 1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = Rat(basis[j][i]);
    m[i][k] = Rat(v[i]);
  }
  for (int c = 0; c < k; ++c) {
    int p = -1;
    for (int r = c; r < k; ++r)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) return false;
    std::swap(m[c], m[p]);
    for (int r = 0; r < k; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (int j = c; j <= k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  out.assign(k, Rat(0));
  for (int i = 0; i < k; ++i) out[i] = m[i][k] / m[i][i];
  return true;
}

}  // namespace

std::vector<GroupHom> enumerate_aut_stabilizing(const AbelianGroup& K,
                                                const std::vector<GroupElement>& omega_in) {
  // Omega as a set of distinct degrees
  std::set<GroupElement> oset(omega_in.begin(), omega_in.end());
  std::vector<GroupElement> omega(oset.begin(), oset.end());
  if (!generates_group(K, omega))
    throw non_effective_grading("degree set does not generate the grading group");

  int k = K.free_rank, t = K.torsion_rank();

  // ---- free-part candidates B -------------------------------------------
  FreePartData F;
  {
    std::map<Vec, int> mult;
    for (const auto& w : omega) mult[w.free_part]++;
    for (auto& [v, m] : mult) {
      F.elems.push_back(v);
      F.multiplicity.push_back(m);
    }
  }
  int nf = (int)F.elems.size();

  std::vector<IntMat> b_candidates;
  if (k == 0) {
    b_candidates.push_back(IntMat(0, 0));
  } else {
    // GL(Z)-invariant profile: multiplicity plus the multiset of |det| over
    // all k-subsets containing the element
    F.profile.assign(nf, {});
    {
      std::vector<int> idx(k);
      std::vector<int> stack;
      // iterate k-subsets of [0,nf)
      std::vector<int> comb(k);
      for (int i = 0; i < k; ++i) comb[i] = i;
      if (nf >= k) {
        while (true) {
          IntMat M(k, k);
          for (int j = 0; j < k; ++j)
            for (int i = 0; i < k; ++i) M(i, j) = F.elems[comb[j]][i];
          Int d = abs(M.det());
          for (int j = 0; j < k; ++j) F.profile[comb[j]].push_back(d);
          int pos = k - 1;
          while (pos >= 0 && comb[pos] == nf - k + pos) --pos;
          if (pos < 0) break;
          ++comb[pos];
          for (int i = pos + 1; i < k; ++i) comb[i] = comb[i - 1] + 1;
        }
      }
      for (auto& p : F.profile) std::sort(p.begin(), p.end());
    }
    auto same_class = [&](int i, int j) {
      return F.multiplicity[i] == F.multiplicity[j] && F.profile[i] == F.profile[j];
    };

    // deterministic spanning basis of Q^k from F
    std::vector<int> basis_idx;
    {
      std::vector<Vec> chosen;
      for (int i = 0; i < nf && (int)basis_idx.size() < k; ++i) {
        chosen.push_back(F.elems[i]);
        IntMat M((int)chosen.size(), k);
        for (int r = 0; r < (int)chosen.size(); ++r)
          for (int c = 0; c < k; ++c) M(r, c) = chosen[r][c];
        if (smith_normal_form(M).rank == (int)chosen.size())
          basis_idx.push_back(i);
        else
          chosen.pop_back();
      }
      if ((int)basis_idx.size() < k)
        throw non_effective_grading("free parts of the degree set do not span");
    }
    std::vector<Vec> basis;
    for (int i : basis_idx) basis.push_back(F.elems[i]);

    // rational coordinates of every free part in the chosen basis
    std::vector<std::vector<Rat>> coords(nf);
    for (int i = 0; i < nf; ++i) {
      bool ok = rat_solve(basis, F.elems[i], coords[i]);
      assert(ok);
      (void)ok;
    }

    std::set<IntMat> found;
    std::vector<int> img(k, -1);
    std::vector<bool> used(nf, false);

    auto try_complete = [&]() {
      // B * basis_j = elems[img_j]; solve columnwise over Q, demand Z entries
      std::vector<Vec> imgs;
      for (int j = 0; j < k; ++j) imgs.push_back(F.elems[img[j]]);
      IntMat B(k, k);
      for (int row = 0; row < k; ++row) {
        // row of B: solve <row, basis_j> = imgs[j][row] -> transpose system
        std::vector<Vec> cols;  // basis vectors as the matrix of the system
        Vec rhs(k);
        for (int j = 0; j < k; ++j) rhs[j] = imgs[j][row];
        std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k + 1));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) m[i][j] = Rat(basis[i][j]);
          m[i][k] = Rat(rhs[i]);
        }
        for (int c = 0; c < k; ++c) {
          int p = -1;
          for (int r = c; r < k; ++r)
            if (m[r][c] != 0) {
              p = r;
              break;
            }
          if (p < 0) return;
          std::swap(m[c], m[p]);
          for (int r = 0; r < k; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int j2 = c; j2 <= k; ++j2) m[r][j2] -= f * m[c][j2];
          }
        }
        for (int c = 0; c < k; ++c) {
          Rat v = m[c][k] / m[c][c];
          if (v.get_den() != 1) return;
          B(row, c) = v.get_num();
        }
      }
      Int d = B.det();
      if (d != 1 && d != -1) return;
      // B must permute the multiset of free parts
      std::map<Vec, int> want;
      for (int i = 0; i < nf; ++i) want[F.elems[i]] = F.multiplicity[i];
      for (int i = 0; i < nf; ++i) {
        Vec im = B.apply(F.elems[i]);
        auto it = want.find(im);
        if (it == want.end() || it->second != F.multiplicity[i]) return;
      }
      found.insert(B);
    };

    std::function<void(int)> rec = [&](int level) {
      if (level == k) {
        try_complete();
        return;
      }
      int src = basis_idx[level];
      for (int cand = 0; cand < nf; ++cand) {
        if (used[cand] || !same_class(src, cand)) continue;
        img[level] = cand;
        used[cand] = true;
        // prune: every element supported on the assigned prefix must map
        // into the free-part set respecting multiplicity classes
        bool ok = true;
        for (int e = 0; e < nf && ok; ++e) {
          bool supported = true;
          for (int j = level + 1; j < k; ++j)
            if (coords[e][j] != 0) {
              supported = false;
              break;
            }
          if (!supported) continue;
          // image = sum coords[e][j] * elems[img[j]]
          Vec image(k, Int(0));
          bool integral = true;
          Rat den_acc(1);
          std::vector<Rat> acc(k, Rat(0));
          for (int j = 0; j <= level; ++j) {
            if (coords[e][j] == 0) continue;
            for (int c = 0; c < k; ++c) acc[c] += coords[e][j] * Rat(F.elems[img[j]][c]);
          }
          for (int c = 0; c < k; ++c) {
            if (acc[c].get_den() != 1) {
              integral = false;
              break;
            }
            image[c] = acc[c].get_num();
          }
          if (!integral) {
            ok = false;
            break;
          }
          int found_at = -1;
          for (int f2 = 0; f2 < nf; ++f2)
            if (F.elems[f2] == image) {
              found_at = f2;
              break;
            }
          if (found_at < 0 || !same_class(e, found_at)) ok = false;
        }
        if (ok) rec(level + 1);
        used[cand] = false;
        img[level] = -1;
      }
    };
    rec(0);
    b_candidates.assign(found.begin(), found.end());
  }

  // ---- torsion extension enumeration ------------------------------------
  std::set<GroupHom> result;
  std::set<GroupElement> target(omega.begin(), omega.end());

  // entry value lists: C(i,j) in [0,n_i); D(i,j) multiples of n_i/gcd(n_i,n_j)
  auto torsion_entry_values = [&](int i, int j, bool isD) {
    std::vector<Int> vals;
    long ni = K.torsion_orders[i];
    if (!isD) {
      for (long v = 0; v < ni; ++v) vals.push_back(Int(v));
    } else {
      long nj = K.torsion_orders[j];
      long g = std::__gcd(ni, nj);
      long step = ni / g;
      for (long v = 0; v < ni; v += step) vals.push_back(Int(v));
    }
    return vals;
  };

  // enumeration budget guard
  {
    double combos = 1;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < k; ++j) combos *= (double)K.torsion_orders[i];
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        combos *= (double)std::__gcd(K.torsion_orders[i], K.torsion_orders[j]);
    if (combos * (double)std::max<size_t>(1, b_candidates.size()) > 2e7)
      throw budget_exceeded("torsion block enumeration too large");
  }

  for (const IntMat& B : b_candidates) {
    std::vector<std::pair<std::pair<int, int>, bool>> slots;  // (i,j), isD
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < k; ++j) slots.push_back({{i, j}, false});
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) slots.push_back({{i, j}, true});

    GroupHom h;
    h.B = B;
    h.C = IntMat(t, k);
    h.D = IntMat(t, t);

    std::function<void(size_t)> rec2 = [&](size_t s) {
      if (s == slots.size()) {
        if (!is_automorphism(h, K)) return;
        std::set<GroupElement> image;
        for (const auto& w : omega) image.insert(apply(K, h, w));
        if (image == target) result.insert(h);
        return;
      }
      auto [ij, isD] = slots[s];
      for (const Int& v : torsion_entry_values(ij.first, ij.second, isD)) {
        (isD ? h.D : h.C)(ij.first, ij.second) = v;
        rec2(s + 1);
      }
    };
    rec2(0);
  }

  return std::vector<GroupHom>(result.begin(), result.end());
}

}  // namespace gaut
