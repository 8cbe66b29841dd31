#pragma once

#include <string>
#include <vector>

#include "orbibraid/words.hpp"

namespace orbibraid {

/// One defining relation of an orbifold braid group, as a pair of words.
struct OrbifoldRelation {
  std::string name;  // "R1(1,3)", "R4L", "R6L", ...
  std::vector<BraidLetter> lhs, rhs;
};

/// Finite presentation of Z_n(L): braid relations among the sigma_i, loop
/// letters commuting with distant crossings, the four-braid relation at
/// each occupied side, commuting loop letters, and tau^p = 1 at cones.
struct OrbifoldPresentation {
  OrbifoldSignature sig;
  std::vector<OrbifoldRelation> relations;

  /// sigma_1..sigma_{n-1}, then tL, then tR (present letters only).
  int generator_count() const;
};

OrbifoldPresentation orbifold_presentation(const OrbifoldSignature& sig);

}  // namespace orbibraid
