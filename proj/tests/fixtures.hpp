#pragma once

// Rings and ideals used across the test suites (the running examples of the
// computations this library implements).

#include <string>
#include <vector>

#include "gaut/ring.hpp"

namespace gaut::fixtures {

inline GroupElement ge(const AbelianGroup& K, std::vector<long> fp, std::vector<long> tp = {}) {
  GroupElement e;
  for (long v : fp) e.free_part.push_back(Int(v));
  for (long v : tp) e.torsion_part.push_back(Int(v));
  while ((int)e.torsion_part.size() < K.torsion_rank()) e.torsion_part.push_back(Int(0));
  e.reduce(K);
  return e;
}

inline GradedPolyRing ring_from_columns(int free_rank, std::vector<long> torsion,
                                        const std::vector<std::vector<long>>& cols,
                                        std::vector<std::string> params = {}) {
  GradedPolyRing S;
  S.field.params = std::move(params);
  S.K.free_rank = free_rank;
  S.K.torsion_orders = std::move(torsion);
  for (size_t i = 0; i < cols.size(); ++i) {
    S.vars.push_back("T" + std::to_string(i + 1));
    std::vector<long> fp(cols[i].begin(), cols[i].begin() + free_rank);
    std::vector<long> tp(cols[i].begin() + free_rank, cols[i].end());
    S.degrees.push_back(ge(S.K, fp, tp));
  }
  return S;
}

// A3 2A1 log del Pezzo surface: K = Z^2 + Z/2, one relation
inline GradedPolyRing a32a1_ring() {
  return ring_from_columns(2, {2},
                           {{1, 1, 1}, {1, -1, 1}, {1, 0, 1}, {1, 0, 0}, {1, 1, 0}});
}
inline Ideal a32a1_ideal(const GradedPolyRing& S) {
  return Ideal{{parse_polynomial(S, "T1*T2 + T3^2 + T4^2")}};
}

// Pluecker ideal of G(2,5), Z^5-graded
inline GradedPolyRing g25_ring() {
  return ring_from_columns(5, {},
                           {{1, 1, 0, 0, 0},
                            {1, 0, 1, 1, 0},
                            {1, 0, 1, 0, 1},
                            {1, 0, 0, 1, 1},
                            {0, 1, 0, 0, -1},
                            {0, 1, 0, -1, 0},
                            {0, 1, -1, 0, 0},
                            {0, 0, 1, 0, 0},
                            {0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 1}});
}
inline Ideal g25_ideal(const GradedPolyRing& S) {
  return Ideal{{parse_polynomial(S, "T5*T10 - T6*T9 + T7*T8"),
                parse_polynomial(S, "T1*T9 - T2*T7 + T4*T5"),
                parse_polynomial(S, "T1*T8 - T2*T6 + T3*T5"),
                parse_polynomial(S, "T1*T10 - T3*T7 + T4*T6"),
                parse_polynomial(S, "T2*T10 - T3*T9 + T4*T8")}};
}

// blow-up of P^3 in six points: 12 variables, Z^7, two relations
inline GradedPolyRing blowup_ring() {
  return ring_from_columns(
      7, {},
      {{1, 0, 0, 0, -1, 0, 0},
       {1, -1, 1, 0, -1, -1, 1},
       {1, -1, 0, 1, -1, -1, 1},
       {1, -1, 0, 0, 0, 0, 0},
       {1, -1, 1, 1, -1, -1, 0},
       {1, 0, 0, 0, 0, -1, 0},
       {0, 1, 0, 0, 0, 0, 0},
       {0, 0, 1, 0, 0, 0, 0},
       {0, 0, 0, 1, 0, 0, 0},
       {0, 0, 0, 0, 1, 0, 0},
       {0, 0, 0, 0, 0, 1, 0},
       {0, 0, 0, 0, 0, 0, 1}});
}
inline Ideal blowup_ideal(const GradedPolyRing& S) {
  return Ideal{{parse_polynomial(S, "T3*T8 - T5*T12 - T2*T9"),
                parse_polynomial(S, "T4*T7 - T6*T11 - T1*T10")}};
}

// D4 cubic surface resolutions R_lambda, 10 variables, Z^7
inline GradedPolyRing d4_ring() {
  return ring_from_columns(7, {},
                           {{1, -1, -1, -1, 0, 0, 0},
                            {0, 1, 0, 0, -1, 0, 0},
                            {0, 0, 1, 0, 0, -1, 0},
                            {0, 0, 0, 1, 0, 0, -1},
                            {0, 0, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 0, 1},
                            {1, -1, 0, 0, -1, 0, 0},
                            {1, 0, -1, 0, 0, -1, 0},
                            {1, 0, 0, -1, 0, 0, -1}});
}
inline Ideal d4_ideal(const GradedPolyRing& S, long lambda) {
  std::string rel = "T2*T5^2*T8 + T3*T6^2*T9 + T4*T7^2*T10";
  if (lambda != 0) rel += " - " + std::to_string(lambda) + "*T1*T2*T3*T4*T5*T6*T7";
  return Ideal{{parse_polynomial(S, rel)}};
}

// 2A2 cubic surface (reconstructed data): K = Z^3, 7 variables, parameter a
inline GradedPolyRing cubic2a2_ring() {
  return ring_from_columns(3, {},
                           {{1, 1, 0},
                            {1, 0, 1},
                            {1, 0, -1},
                            {1, -1, 0},
                            {1, 0, 0},
                            {1, 2, 3},
                            {1, -2, -3}},
                           {"a"});
}
inline Ideal cubic2a2_ideal(const GradedPolyRing& S) {
  return Ideal{{parse_polynomial(S, "T1*T4 + T2*T3 + (a-1)*T5^2 - a*T6*T7")}};
}

}  // namespace gaut::fixtures
