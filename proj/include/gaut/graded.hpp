#pragma once

#include <optional>

#include "gaut/cone.hpp"
#include "gaut/ring.hpp"

namespace gaut {

// common degree of all terms, or nullopt when terms disagree (NotHomogeneous)
std::optional<GroupElement> degree_of(const GradedPolyRing& ring, const Polynomial& f);

struct GradingCheck {
  bool effective = false;
  bool pointed = false;
  std::string witness;             // names the offending monomial / quotient
  std::vector<Int> functional;     // strictly positive on all variable degrees
};
GradingCheck check_effective_pointed(const GradedPolyRing& ring);
// throws NonEffectiveGrading / NonPointedGrading
std::vector<Int> ensure_effective_pointed(const GradedPolyRing& ring);

// all monomials of degree w, descending graded-lex; empty when S_w = 0
std::vector<Exp> monomial_basis(const GradedPolyRing& ring, const GroupElement& w);

// row-reduced basis of I_w inside the monomial basis of S_w
struct ComponentBasis {
  std::vector<Exp> space_basis;        // monomial basis of S_w
  ScalarMat rows;                      // RREF coordinate rows of I_w
  std::vector<Polynomial> polys;       // the same rows as polynomials
  int dim() const { return rows.rows; }
};
ComponentBasis ideal_component(const GradedPolyRing& ring, const Ideal& I, const GroupElement& w);

// distinct variable degrees in order of first occurrence (Omega_S; requires a
// minimal presentation for the Omega_R reading)
std::vector<GroupElement> generator_degrees(const GradedPolyRing& ring);

// the unique ideal generator degree set Omega_I
std::vector<GroupElement> ideal_generator_degrees(const GradedPolyRing& ring, const Ideal& I);

struct MinimalPresentation {
  GradedPolyRing ring;
  Ideal ideal;
  std::vector<std::string> eliminated;
  std::vector<int> kept;  // indices into the original variable list
};
MinimalPresentation minimalize_presentation(const GradedPolyRing& ring, const Ideal& I);

// true iff w' < w in the weight-monoid order (w = w' + nonzero monoid element)
bool degree_less(const GradedPolyRing& ring, const GroupElement& lo, const GroupElement& hi);

}  // namespace gaut
