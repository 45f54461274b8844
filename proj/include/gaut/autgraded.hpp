#pragma once

#include <optional>

#include "gaut/graded.hpp"
#include "gaut/groebner.hpp"

namespace gaut {

// Faithful representation data: one block per generator degree, each block a
// monomial basis of the homogeneous component, concatenated in the order the
// degrees first occur among the variables.
struct RepBlock {
  GroupElement degree;
  std::vector<Exp> monomials;
  int offset = 0;
  int dim() const { return (int)monomials.size(); }
};

struct RepBasis {
  std::vector<RepBlock> blocks;
  std::vector<Exp> basis;  // concatenation of the block bases
  int n = 0;

  int block_of(const GroupElement& w) const;  // -1 when absent
  int block_of_index(int idx) const;
  int index_of(const Exp& m) const;  // -1 when absent
};

RepBasis build_rep_basis(const GradedPolyRing& S);

// the entry polynomial ring F[a_i_j] with the column grading deg a_ij = u_j
GradedPolyRing entry_ring(const GradedPolyRing& S, const RepBasis& rep);

// equations cutting out the S-admissible matrices in the full entry ring
std::vector<Polynomial> admissibility_equations(const GradedPolyRing& S, const RepBasis& rep);

// one closed coset of the matrix-group description
struct Coset {
  GroupHom sigma;
  std::vector<int> block_perm;               // source block -> target block
  std::vector<std::pair<int, int>> pattern;  // (row, col) positions free
  std::vector<Polynomial> gens;              // ideal in the entry ring
  bool unit_coset = false;                   // sigma = id

  std::vector<Polynomial> block_determinants(const RepBasis& rep, int nvars) const;
};

struct MatrixGroupDescription {
  GradedPolyRing ring;  // the graded ring the group acts on (S or quotient data)
  RepBasis rep;
  GradedPolyRing entries;  // entry ring with the column grading
  std::vector<Coset> cosets;

  int ambient() const { return rep.n; }
  // the product ideal describing the union of cosets (only sensible for a
  // handful of cosets; empty optional otherwise)
  std::optional<std::vector<Polynomial>> combined_ideal(size_t max_cosets = 4) const;
};

// canonical permuting matrix per sigma; throws BlockDimMismatch when a block
// dimension disagrees with its image block
std::vector<int> block_permutation(const RepBasis& rep, const AbelianGroup& K,
                                   const GroupHom& sigma);
IntMat permuting_matrix(const RepBasis& rep, const std::vector<int>& perm);

// Aut_{K,Sigma}(S) as a union of cosets in GL(n)
MatrixGroupDescription aut_ks(const GradedPolyRing& S, const std::vector<GroupHom>& sigma);

// Stab_I(Aut_{K,Sigma}(S)); sigma entries not stabilizing Omega_I are dropped
MatrixGroupDescription stab_ideal(const GradedPolyRing& S, const Ideal& I,
                                  const std::vector<GroupHom>& sigma);

// transporter {g : g . I1 contained in I2} (closed subset, not a subgroup)
MatrixGroupDescription transporter(const GradedPolyRing& S, const Ideal& I1, const Ideal& I2,
                                   const std::vector<GroupHom>& sigma);

// Aut_{K,Sigma}(R) in GL(k) via the projection V -> V/I_V
struct QuotientRep {
  MatrixGroupDescription group;      // description in GL(k)
  std::vector<int> complement;       // indices of V-basis monomials kept
  bool identical_to_stab = false;    // all I_{q_i} = 0 path
};
QuotientRep quot_rep(const GradedPolyRing& S, const Ideal& I, const std::vector<GroupHom>& sigma,
                     const Budget& budget = {});

// the component group Gamma: sigma with a realizable coset
struct GammaGroup {
  AbelianGroup K;
  std::vector<GroupHom> elements;
  std::vector<std::vector<int>> table;  // table[i][j] = index of el_i * el_j
  bool abelian = true;
  long order() const { return (long)elements.size(); }
};
GammaGroup gamma_group(const GradedPolyRing& S, const Ideal& I, const Budget& budget = {});

int group_dimension(const MatrixGroupDescription& G, const Budget& budget = {});

struct ComponentCount {
  bool known = false;
  long count = 0;
  std::vector<std::string> certificate;  // one line per coset
  // lattice data of the unit coset, for descent computations
  std::vector<std::vector<Int>> unit_lattice;
  int unit_pattern_size = 0;
};
ComponentCount component_count(const MatrixGroupDescription& G, const Budget& budget = {});

struct PermutationSymmetries {
  std::vector<std::vector<int>> perms;  // images, 0-indexed
  bool closed_under_composition = false;
  bool closed_under_inverse = false;
};
PermutationSymmetries extract_permutation_symmetries(const GradedPolyRing& S, const Ideal& I,
                                                     const Budget& budget = {});

struct DimBound {
  long algebra_bound = 0;  // sum of dim(R_w)^2
  long mds_bound = 0;      // minus rank(K_Q)
};
DimBound dim_bound(const GradedPolyRing& S, const Ideal& I);

// Remark-grading invariant: every coset ideal is K-homogeneous for the
// column grading of the entry ring
bool entry_ideals_homogeneous(const MatrixGroupDescription& G);

// evaluate an entry-ring polynomial at a concrete matrix
Scalar evaluate_entry_poly(const Polynomial& p, const ScalarMat& M);

// serialization used by the CLI (one coset per paragraph)
std::string describe(const MatrixGroupDescription& G);

}  // namespace gaut
