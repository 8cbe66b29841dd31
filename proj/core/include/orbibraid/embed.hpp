#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbibraid/certify.hpp"
#include "orbibraid/coxeter.hpp"
#include "orbibraid/garside.hpp"
#include "orbibraid/words.hpp"

namespace orbibraid {

/// The generator-image table of one row: Artin generators of the diagram
/// mapped to words in the orbifold braid group of the row's signature.
struct EmbeddingSpec {
  CoxeterDiagram diagram;
  OrbifoldSignature signature;
  std::vector<BraidWord> images;  // images[i-1] is the image of generator i

  const BraidWord& image(int gen) const { return images.at(gen - 1); }
};

EmbeddingSpec table1_embedding(Family family, int rank);

/// Multiplicative extension of the generator images, free-reduced.
BraidWord apply_embedding(const EmbeddingSpec& spec, const ArtinWord& w);

/// Value in the row's quotient group: trivial (A, B, Ct), Z/2 (D: left
/// parity; Bt: right parity), Z (At: left exponent sum) or Z/2 x Z/2 (Dt).
struct QuotientClass {
  long left = 0;
  long right = 0;
  bool left_is_integer = false;  // At row

  bool is_trivial() const { return left == 0 && right == 0; }
  bool operator==(const QuotientClass&) const = default;
};

QuotientClass quotient_class(const BraidWord& w, Family family);

struct RelationCheck {
  std::string name;
  bool certified = false;
  size_t certificate_steps = 0;
  Certificate certificate;
};

struct VerifyReport {
  std::string row;
  int depth = 0;
  std::vector<RelationCheck> relations;
  bool all_certified = true;
};

/// Certify image(lhs) . image(rhs)^-1 trivial for every defining relation.
VerifyReport verify_embedding(const EmbeddingSpec& spec, int max_depth,
                              const SearchLimits& limits = {});

enum class Side { left, right };

/// Same letters over the signature where the named puncture became a cone
/// point of order 2 (then tau^2 = 1 applies).
BraidWord fill_puncture(const BraidWord& w, Side side);
/// Delete the named side's loop letters; the point becomes an ordinary one.
BraidWord erase_point(const BraidWord& w, Side side);

/// Z_n(k) = A(D_n) x| Z/2: scan the word left to right, tracking the
/// parity of loop letters seen; sigma_1 emits g_1 or g_2 depending on the
/// parity, sigma_i (i >= 2) emits g_{i+1}.  The word equals
/// image(word) . tau^parity in Z_n(k).
struct ZkRetraction {
  int parity = 0;
  ArtinWord word;
};
ZkRetraction retract_Zk(const BraidWord& w);

/// Z_n(K) analogue with two independent parities (n >= 3): sigma_1 toggles
/// between G_1/G_2 on the left parity, sigma_{n-1} between G_n/G_{n+1} on
/// the right parity.
struct ZKRetraction {
  int parity_left = 0;
  int parity_right = 0;
  ArtinWord word;
};
ZKRetraction retract_ZK(const BraidWord& w);

/// Equality in Z_n(k) decided through the retraction and the D_n Garside
/// normal form.
bool zk_equal(const BraidWord& u, const BraidWord& v, const GarsideContext& dn);

struct GeneratorHit {
  int generator = 0;        // D_n generator index
  bool found = false;
  std::string witness;      // At word whose image retracts to it
  size_t witness_length = 0;
};

struct SurjectionReport {
  bool images_in_kernel = false;  // every At generator image has trivial class
  std::vector<GeneratorHit> hits;
  bool surjective = true;
};

/// Composite At_{n-1} -> Z_n(C^x) -> Z_n(k) -> A(D_n): verifies the image
/// lands in the Artin subgroup and hits every D_n generator.
SurjectionReport surjection_check_Atilde_to_D(int n);

struct RetractionReport {
  bool fixes_subdiagram = false;   // erased images of g_1..g_{n-1} are the g_i
  bool affine_to_conjugate = false;  // erased g_0 image is conjugate of a generator
  bool weyl_descends = false;      // forgetting translations = erasing the point
  bool ok() const { return fixes_subdiagram && affine_to_conjugate && weyl_descends; }
};

/// The puncture-erasing map restricted to the At embedding retracts onto
/// the A_{n-1} copy inside it.
RetractionReport retraction_check_Atilde_to_A(int n);

struct Thm22Report {
  bool z_not_in_artin = false;  // quotient class of z is nontrivial
  bool z_central = false;       // z commutes with every h_i and with tau
  bool z_squared_is_delta_squared = false;
  bool ok() const { return z_not_in_artin && z_central && z_squared_is_delta_squared; }
};

/// z = tau . Delta generates the center extension of A(D_n) inside Z_n(k)
/// for odd n: central, z^2 = Delta^2, z outside the Artin subgroup.
Thm22Report thm22_isomorphism_check(int n);

}  // namespace orbibraid
