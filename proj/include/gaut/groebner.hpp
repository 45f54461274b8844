#pragma once

#include "gaut/diag.hpp"
#include "gaut/poly.hpp"

namespace gaut {

// Term orders: grevlex default, lex, and block/elimination orders with a
// designated eliminated-variable set compared first.
struct MonomialOrder {
  enum Kind { Grevlex, Lex, Block } kind = Grevlex;
  std::vector<char> elim;  // Block: 1 = eliminated variable

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Lex, {}}; }
  static MonomialOrder block(const std::vector<char>& elim_mask) { return {Block, elim_mask}; }

  bool greater(const Exp& a, const Exp& b) const;
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;  // reduced: monic, interreduced, sorted
  bool trivial() const;              // basis = {1}
};

GroebnerBasis groebner(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                       const Budget& budget = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool membership(const Polynomial& f, const GroebnerBasis& gb);
bool membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                const Budget& budget = {});

// I intersected with the subring on the complement of kill (indices)
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, int nvars,
                                  const std::vector<int>& kill, const Budget& budget = {});

// saturation I : f^infinity via the extra-variable trick
std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, int nvars,
                                 const Polynomial& f, const Budget& budget = {});

bool is_solvable(const std::vector<Polynomial>& gens, const Budget& budget = {});

// Krull dimension of V(I) from the initial ideal; -1 for the empty variety
int ideal_dimension(const std::vector<Polynomial>& gens, int nvars, const Budget& budget = {});

std::vector<Polynomial> intersect_ideals(const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b, int nvars,
                                         const Budget& budget = {});

// preimage of I under the ring map Y_j -> images[j] (polynomials in T),
// returned in the Y-variables only
std::vector<Polynomial> ring_map_preimage(const std::vector<Polynomial>& images,
                                          const std::vector<Polynomial>& ideal_gens, int nvars_T,
                                          const Budget& budget = {});

}  // namespace gaut
