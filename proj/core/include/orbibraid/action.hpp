#pragma once

#include <string>
#include <vector>

#include "orbibraid/presentation.hpp"
#include "orbibraid/words.hpp"

namespace orbibraid {

/// The fundamental group of the orbifold minus the strand basepoints:
/// a free product  <aL | aL^pL> * F(x_1..x_n) * <aR | aR^pR>  with the
/// loop factors present per signature (punctures give infinite cyclic
/// factors).  Generator ids: 0 = aL, 1..n = x_i, n+1 = aR.
class FPGroup {
 public:
  explicit FPGroup(const OrbifoldSignature& sig);

  const OrbifoldSignature& signature() const { return sig_; }
  int strand_count() const { return sig_.strands; }
  bool has_aL() const { return sig_.left.has_value(); }
  bool has_aR() const { return sig_.right.has_value(); }
  int aL() const { return 0; }
  int x(int i) const { return i; }  // 1-based strand index
  int aR() const { return sig_.strands + 1; }
  /// 0 = infinite order, else the cone order.
  int torsion(int gen) const;
  std::vector<int> generators() const;  // present ids, canonical order
  std::string gen_name(int gen) const;

 private:
  OrbifoldSignature sig_;
};

/// Word in syllable normal form: adjacent syllables from distinct
/// factors, torsion exponents in 1..p-1, no zero exponents.
struct FPSyllable {
  int gen = 0;
  long exp = 0;
  bool operator==(const FPSyllable&) const = default;
};

struct FPWord {
  std::vector<FPSyllable> syllables;
  bool operator==(const FPWord&) const = default;
  bool empty() const { return syllables.empty(); }
};

FPWord fp_normal_form(const FPGroup& g, const FPWord& w);
FPWord fp_mul(const FPGroup& g, const FPWord& a, const FPWord& b);
FPWord fp_inverse(const FPGroup& g, const FPWord& w);
FPWord fp_gen(int gen, long exp = 1);
/// c w c^-1
FPWord fp_conj(const FPGroup& g, const FPWord& c, const FPWord& w);
std::string to_string(const FPGroup& g, const FPWord& w);
FPWord parse_fp_word(const FPGroup& g, const std::string& text);

/// Canonical representative of the conjugacy class: cyclically reduced,
/// minimal rotation.  Two words are conjugate iff these agree (standard
/// conjugacy theorem for free products of cyclic groups).
FPWord conjugacy_class_rep(const FPGroup& g, const FPWord& w);
bool fp_conjugate(const FPGroup& g, const FPWord& u, const FPWord& v);

/// Images of every generator; braid letters act on the left first, so
/// compose(a, b) applies a and then b.
struct BraidAction {
  std::vector<FPWord> images;  // indexed by generator id

  const FPWord& image(int gen) const { return images.at(gen); }
};

BraidAction identity_action(const FPGroup& g);
FPWord act(const FPGroup& g, const BraidAction& a, const FPWord& w);
BraidAction compose(const FPGroup& g, const BraidAction& first, const BraidAction& second);
bool action_equal(const FPGroup& g, const BraidAction& a, const BraidAction& b);

/// The letter actions: sigma_i is the standard half-twist
/// (x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i); a loop letter is the full
/// twist of the special point with its neighboring strand, acting as
/// conjugation by (aL x_1) resp. (x_n aR) on that pair's generators.
/// Verified at construction: images of x_i are conjugates of some
/// x_{pi(i)}, loop generators map to conjugates of themselves, and the
/// boundary product aL x_1 ... x_n aR is preserved.
BraidAction generator_action(const FPGroup& g, const BraidLetter& l);

BraidAction braid_action(const FPGroup& g, const BraidWord& w);

/// The class of the action modulo per-generator conjugation: the tuple of
/// conjugacy classes of the generator images.  This is the finest
/// quotient in which every defining relation acts trivially (the torsion
/// relation composes to a pair conjugation, inner only on the factor it
/// moves), so it is a sound invariant: distinct outclasses imply distinct
/// elements of Z_n(L).
struct OutClass {
  std::vector<FPWord> class_reps;  // per generator, canonical form
  std::string key;                 // serialized, for comparison
  bool operator==(const OutClass& o) const { return key == o.key; }
};

OutClass braid_to_outclass(const FPGroup& g, const BraidWord& w);

struct ActionRelationCheck {
  std::string name;
  bool exact = false;          // both sides compose to the same automorphism
  bool class_trivial = false;  // relator action fixes every generator's class
};

struct ActionReport {
  std::vector<ActionRelationCheck> relations;
  bool ok = true;  // torsion relations class-trivial, all others exact
};

/// Build gate: every presentation relation must act trivially in the
/// outclass sense (and exactly, except for the torsion relations).
ActionReport verify_action_relations(const OrbifoldSignature& sig);

}  // namespace orbibraid
