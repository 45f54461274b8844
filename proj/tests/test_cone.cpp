#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaut/cone.hpp"
#include "gaut/diag.hpp"

using namespace gaut;

namespace {
std::vector<Int> iv(std::vector<long> v) {
  std::vector<Int> r;
  for (long x : v) r.push_back(Int(x));
  return r;
}
}  // namespace

TEST_CASE("cone from rays: quadrant") {
  RationalCone c = cone_from_rays(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})});
  CHECK(c.rays.size() == 2);  // (1,1) is not extreme
  CHECK(c.facets.size() == 2);
  CHECK(cone_contains_int(c, iv({3, 5})));
  CHECK_FALSE(cone_contains_int(c, iv({-1, 2})));
  CHECK(cone_dim(c) == 2);
}

TEST_CASE("cone from rays: lower dimensional") {
  RationalCone c = cone_from_rays(3, {iv({1, 1, 0}), iv({2, 2, 0})});
  CHECK(c.rays.size() == 1);
  CHECK(c.equations.size() == 2);
  CHECK(cone_dim(c) == 1);
  CHECK(cone_contains_int(c, iv({5, 5, 0})));
  CHECK_FALSE(cone_contains_int(c, iv({-1, -1, 0})));
  CHECK_FALSE(cone_contains_int(c, iv({1, 1, 1})));
}

TEST_CASE("non-pointed input rejected") {
  CHECK_THROWS_AS(cone_from_rays(2, {iv({1, 0}), iv({-1, 0})}), Diagnostic);
}

TEST_CASE("intersection") {
  RationalCone a = cone_from_rays(2, {iv({1, 0}), iv({1, 1})});
  RationalCone b = cone_from_rays(2, {iv({1, 1}), iv({0, 1})});
  RationalCone c = cone_intersect(a, b);
  REQUIRE(c.rays.size() == 1);
  CHECK(c.rays[0] == iv({1, 1}));

  // chamber-style intersection: between rays (1,1) and (1,0)
  RationalCone d = cone_intersect(cone_from_rays(2, {iv({1, 1}), iv({1, -1})}),
                                  cone_from_rays(2, {iv({1, 1}), iv({1, 0})}));
  REQUIRE(d.rays.size() == 2);
  CHECK(d.rays == std::vector<std::vector<Int>>{iv({1, 0}), iv({1, 1})});
}

TEST_CASE("cone from inequalities") {
  // x >= 0, y >= 0, x - y >= 0: the wedge between (1,0) and (1,1)
  RationalCone c = cone_from_inequalities(2, {iv({1, 0}), iv({0, 1}), iv({1, -1})}, {});
  REQUIRE(c.rays.size() == 2);
  CHECK(c.rays == std::vector<std::vector<Int>>{iv({1, 0}), iv({1, 1})});

  // with an equation: x + y + z = 0 intersected with x,y >= 0 forces pointed
  RationalCone e = cone_from_inequalities(
      3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, {iv({1, 1, -1})});
  // rays: (1,0,1) and (0,1,1)
  CHECK(e.rays.size() == 2);
}

TEST_CASE("pointedness decision and witnesses") {
  auto p = pointedness(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})});
  CHECK(p.pointed);
  // functional strictly positive on all three
  for (auto v : {iv({1, 0}), iv({0, 1}), iv({1, 1})}) {
    Int s(0);
    for (size_t i = 0; i < v.size(); ++i) s += p.functional[i] * v[i];
    CHECK(s > 0);
  }

  auto q = pointedness(2, {iv({1, 0}), iv({-1, 1}), iv({0, -1})});
  CHECK_FALSE(q.pointed);
  // circuit: nonneg combo summing to zero
  Rat sx(0), sy(0);
  std::vector<std::vector<Int>> vs = {iv({1, 0}), iv({-1, 1}), iv({0, -1})};
  for (int i = 0; i < 3; ++i) {
    CHECK(q.circuit[i] >= 0);
    sx += q.circuit[i] * Rat(vs[i][0]);
    sy += q.circuit[i] * Rat(vs[i][1]);
  }
  CHECK(sx == 0);
  CHECK(sy == 0);

  // zero vector alone is a circuit
  CHECK_FALSE(pointedness(2, {iv({0, 0})}).pointed);
}
