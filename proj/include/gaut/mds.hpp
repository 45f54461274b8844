#pragma once

#include <optional>

#include "gaut/autgraded.hpp"
#include "gaut/cone.hpp"

namespace gaut {

struct CoxInput {
  GradedPolyRing ring;
  Ideal ideal;
  GroupElement ample;
};

// face gamma of the orthant meets the total coordinate space
bool is_a_face(const GradedPolyRing& S, const Ideal& I, const std::vector<int>& gamma,
               const Budget& budget = {});

RationalCone orbit_cone(const GradedPolyRing& S, const std::vector<int>& gamma);

// GIT chamber of the ample class: intersection of all orbit cones of a-faces
// containing it; throws EmptyChamber
RationalCone git_cone(const CoxInput& in, const Budget& budget = {});

// the subgroup of Aut(Omega_S) whose free parts map the chamber onto itself
std::vector<GroupHom> sigma_of_lambda(const GradedPolyRing& S, const RationalCone& lambda,
                                      const std::vector<GroupHom>& auts);

struct AutHatX {
  RationalCone chamber;
  std::vector<GroupHom> sigma;
  QuotientRep rep;  // Aut_H(X-hat) inside GL(k)
};
AutHatX aut_hat_x(const CoxInput& in, const Budget& budget = {},
                  const std::optional<RationalCone>& user_chamber = std::nullopt);

// subgroup membership in K
bool subgroup_member(const AbelianGroup& K, const std::vector<GroupElement>& gens,
                     const GroupElement& w);

// minimal Hilbert basis of { nu >= 0 : delta(nu) in K' }
std::vector<Exp> hilbert_basis(const GradedPolyRing& S,
                               const std::vector<GroupElement>& kprime_gens,
                               const Budget& budget = {});

struct VeronesePresentation {
  std::vector<Exp> generators;     // the monomials T^{mu_j}
  GradedPolyRing yring;            // K-graded ring in Y_1..Y_s
  std::vector<Polynomial> relations;
};
VeronesePresentation veronese(const GradedPolyRing& S, const Ideal& I,
                              const std::vector<GroupElement>& kprime_gens,
                              const Budget& budget = {});

// the ideal describing the characteristic quasitorus H inside GL(k), where
// column j of the entry grading has degree u_j
std::vector<Polynomial> h_lattice_ideal(const AbelianGroup& K,
                                        const std::vector<GroupElement>& column_degrees,
                                        const Budget& budget = {});

// CAut_K(R) = H comparison after saturating by the determinant
bool caut_equals_h(const GradedPolyRing& S, const Ideal& I, const Budget& budget = {});

struct HopfAlgebraPresentation {
  std::vector<std::string> generator_monomials;  // degree-zero monomials, printed
  GradedPolyRing yring;                          // ring of the Y variables
  std::vector<Polynomial> relations;
  bool identity_point_ok = false;  // the identity matrix satisfies the relations
};

struct AutXResult {
  AutHatX hat;
  int dim_aut_hat = -1;
  int dim_aut_x = -1;
  ComponentCount hat_components;
  bool components_known = false;
  long components = 0;        // of Aut(X)
  long h_pi0_image = 1;       // order of the image of pi0(H)
  HopfAlgebraPresentation hopf;
};
AutXResult aut_x(const CoxInput& in, const Budget& budget = {},
                 const std::optional<RationalCone>& user_chamber = std::nullopt);

}  // namespace gaut
