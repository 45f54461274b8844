#pragma once

#include <stdexcept>
#include <string>
#include <cstdint>

namespace gaut {

// Exit-code families used by the CLI (see README): 2 parse, 3 grading,
// 4 budget, 5 empty chamber.
enum class DiagCode : int {
  Ok = 0,
  Parse = 2,
  Grading = 3,
  Budget = 4,
  EmptyChamber = 5,
};

class Diagnostic : public std::runtime_error {
 public:
  Diagnostic(DiagCode code, std::string tag, std::string message)
      : std::runtime_error(tag + ": " + message), code_(code), tag_(std::move(tag)) {}
  DiagCode code() const { return code_; }
  const std::string& tag() const { return tag_; }

 private:
  DiagCode code_;
  std::string tag_;
};

inline Diagnostic parse_error(const std::string& msg) {
  return Diagnostic(DiagCode::Parse, "ParseError", msg);
}
inline Diagnostic non_effective_grading(const std::string& witness) {
  return Diagnostic(DiagCode::Grading, "NonEffectiveGrading", witness);
}
inline Diagnostic non_pointed_grading(const std::string& witness) {
  return Diagnostic(DiagCode::Grading, "NonPointedGrading", witness);
}
inline Diagnostic grading_error(const std::string& tag, const std::string& msg) {
  return Diagnostic(DiagCode::Grading, tag, msg);
}
inline Diagnostic budget_exceeded(const std::string& what) {
  return Diagnostic(DiagCode::Budget, "BudgetExceeded", what);
}
inline Diagnostic empty_chamber(const std::string& msg) {
  return Diagnostic(DiagCode::EmptyChamber, "EmptyChamber", msg);
}
inline Diagnostic shape_mismatch(const std::string& msg) {
  return Diagnostic(DiagCode::Grading, "ShapeMismatch", msg);
}

// Hard resource limits for Groebner-type computations.  Exceeding one is a
// reported error, never a silent truncation.
struct Budget {
  std::int64_t max_pairs = 200000;   // S-pairs processed per basis
  int max_degree = 64;               // total degree of any S-polynomial
  std::int64_t max_afaces = 4096;    // 2^r cap for a-face enumeration
};

}  // namespace gaut
