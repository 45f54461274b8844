#pragma once

#include <optional>
#include <vector>

#include "gaut/intmat.hpp"

namespace gaut {

// Polyhedral cone in Q^d with both descriptions maintained: primitive integer
// extreme rays, primitive facet normals, and span equations (orthogonal
// complement of the linear hull).  Rays and facets are kept sorted.
struct RationalCone {
  int dim = 0;
  std::vector<std::vector<Int>> rays;
  std::vector<std::vector<Int>> facets;
  std::vector<std::vector<Int>> equations;

  bool operator==(const RationalCone& o) const {
    return dim == o.dim && rays == o.rays && equations == o.equations;
  }
};

// Requires the generated cone to be pointed (all our cones are subsets of a
// pointed weight cone or of an orthant).
RationalCone cone_from_rays(int dim, const std::vector<std::vector<Int>>& rays);

// {x : H x >= 0 rowwise, E x = 0 rowwise}; requires the result pointed.
RationalCone cone_from_inequalities(int dim, const std::vector<std::vector<Int>>& H,
                                    const std::vector<std::vector<Int>>& E);

RationalCone cone_intersect(const RationalCone& a, const RationalCone& b);

bool cone_contains(const RationalCone& c, const std::vector<Rat>& x);
bool cone_contains_int(const RationalCone& c, const std::vector<Int>& x);

int cone_dim(const RationalCone& c);

// A strictly positive rational functional on a finite vector set, when one
// exists (the set then spans a pointed cone); otherwise a "positive circuit"
// witness: nonzero lambda >= 0 with sum lambda_i v_i = 0, minimal support.
struct PointednessResult {
  bool pointed = false;
  std::vector<Int> functional;       // strict on every nonzero v_i when pointed
  std::vector<Rat> circuit;          // else: the witness combination
};
PointednessResult pointedness(int dim, const std::vector<std::vector<Int>>& vectors);

}  // namespace gaut
