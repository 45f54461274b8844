#pragma once

#include <string>
#include <vector>

#include "gaut/intmat.hpp"

namespace gaut {

// The grading group K = Z^k (+) Z/n_1 (+) ... (+) Z/n_t, torsion orders >= 2,
// stored in the user-given decomposition.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<long> torsion_orders;

  int torsion_rank() const { return (int)torsion_orders.size(); }
  int total_rank() const { return free_rank + torsion_rank(); }
  bool operator==(const AbelianGroup& o) const {
    return free_rank == o.free_rank && torsion_orders == o.torsion_orders;
  }
};

// Element of K; torsion entries always reduced to [0, n_i).
struct GroupElement {
  std::vector<Int> free_part;
  std::vector<Int> torsion_part;

  static GroupElement zero(const AbelianGroup& K);
  void reduce(const AbelianGroup& K);
  bool is_zero() const;
  bool operator==(const GroupElement& o) const {
    return free_part == o.free_part && torsion_part == o.torsion_part;
  }
  bool operator<(const GroupElement& o) const {
    if (free_part != o.free_part) return free_part < o.free_part;
    return torsion_part < o.torsion_part;
  }
  std::string str() const;
};

GroupElement add(const AbelianGroup& K, const GroupElement& a, const GroupElement& b);
GroupElement sub(const AbelianGroup& K, const GroupElement& a, const GroupElement& b);
GroupElement neg(const AbelianGroup& K, const GroupElement& a);
GroupElement smul(const AbelianGroup& K, const Int& c, const GroupElement& a);

// Endomorphism of K in block form [[B,0],[C,D]]: B free->free, C free->torsion,
// D torsion->torsion.  Torsion rows of C,D are stored reduced mod n_row.
struct GroupHom {
  IntMat B, C, D;

  bool operator==(const GroupHom& o) const { return B == o.B && C == o.C && D == o.D; }
  bool operator<(const GroupHom& o) const {
    if (!(B == o.B)) return B < o.B;
    if (!(C == o.C)) return C < o.C;
    return D < o.D;
  }
  std::string str() const;
};

GroupHom identity_hom(const AbelianGroup& K);

// well-definedness: n_j * D(i,j) = 0 mod n_i for all torsion columns j
bool is_well_defined(const GroupHom& h, const AbelianGroup& K);

bool is_automorphism(const GroupHom& h, const AbelianGroup& K);

GroupElement apply(const AbelianGroup& K, const GroupHom& h, const GroupElement& w);
GroupHom compose(const AbelianGroup& K, const GroupHom& h1, const GroupHom& h2);  // h1 after h2
GroupHom invert(const AbelianGroup& K, const GroupHom& h);

// Whether the given elements generate K as a group.
bool generates_group(const AbelianGroup& K, const std::vector<GroupElement>& gens);

// All automorphisms psi of K with psi(Omega) = Omega (Omega a set of distinct
// elements).  Throws NonEffectiveGrading if Omega does not generate K.
// Output sorted canonically.
std::vector<GroupHom> enumerate_aut_stabilizing(const AbelianGroup& K,
                                                const std::vector<GroupElement>& omega);

}  // namespace gaut
