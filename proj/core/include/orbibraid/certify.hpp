#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbibraid/presentation.hpp"
#include "orbibraid/words.hpp"

namespace orbibraid {

/// One replayable rewrite step.  An apply step names a consequence of one
/// defining relation: rotate the relator (or its inverse) by `rotation`,
/// split it after `split` letters, and substitute prefix -> inverse of the
/// remainder at `position`.  Torsion/free reduction runs after every
/// apply; an explicit reduce step just reduces.
struct CertStep {
  enum class Kind { apply, reduce };
  Kind kind = Kind::reduce;
  int relation = 0;
  bool inverted = false;
  int rotation = 0;
  int split = 0;
  int position = 0;
};

/// A machine-checkable proof that a word represents the identity:
/// replaying the steps from the input word ends at the empty word.
struct Certificate {
  std::vector<CertStep> steps;
  size_t size() const { return steps.size(); }
};

std::string to_string(const CertStep& s, const OrbifoldPresentation& p);
std::string to_string(const Certificate& c, const OrbifoldPresentation& p);

/// Rebuild the substitution named by an apply step.  Throws on indices
/// that name no valid consequence (wrong relation id, empty relator, bad
/// rotation or split).
struct RewriteRule {
  std::vector<BraidLetter> from, to;
  CertStep descriptor;
};
RewriteRule make_rule(const OrbifoldPresentation& p, const CertStep& step);

/// Replay a certificate.  Returns the final word; throws
/// std::invalid_argument when a step is malformed or does not apply.
BraidWord replay_certificate(const BraidWord& w, const Certificate& cert,
                             const OrbifoldPresentation& p);

/// True iff replay reaches the empty word.
bool check_certificate(const BraidWord& w, const Certificate& cert,
                       const OrbifoldPresentation& p);

struct SearchLimits {
  long forward_nodes = 60000;      // forward expansions
  long forward_store = 400000;     // forward states kept
  long backward_nodes = 1500;      // backward expansions
  long backward_store = 120000;    // backward states kept
  int backward_length_margin = 2;  // backward words may exceed |w| by this
  int rule_growth = 0;             // allow rules lengthening a word by this much
};

/// Bounded bidirectional search for a triviality certificate of w: a
/// forward rewrite search from free_reduce(w) meets a backward insertion
/// search growing from the empty word; each side explores at most
/// max_depth steps.  Absence of a certificate is not a proof of
/// nontriviality.  Deterministic for fixed (word, depth, limits).
std::optional<Certificate> find_triviality_certificate(const BraidWord& w, int max_depth,
                                                       const SearchLimits& limits = {});

}  // namespace orbibraid
