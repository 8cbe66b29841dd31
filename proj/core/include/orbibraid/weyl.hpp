#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbibraid/coxeter.hpp"
#include "orbibraid/words.hpp"

namespace orbibraid {

/// Element of the hyperoctahedral group 2^n : S_n, acting on R^n by
/// e_i |-> sign_i * e_{pi(i)}.  Products compose left-to-right: (a * b)
/// applies a first, then b, matching braid word concatenation.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(int n);
  SignedPermutation(std::vector<int> perm, std::vector<int> sign);

  static SignedPermutation identity(int n);
  static SignedPermutation transposition(int n, int i, int j);  // 1-based
  static SignedPermutation flip(int n, int i);                  // negate e_i

  int n() const { return static_cast<int>(perm_.size()); }
  int perm(int i) const { return perm_[i - 1] + 1; }  // 1-based image
  int sign(int i) const { return sign_[i - 1]; }      // sign on e_i

  SignedPermutation then(const SignedPermutation& next) const;
  SignedPermutation inverse() const;
  bool is_identity() const;

  /// Image of an integer vector under the linear action.
  std::vector<int64_t> apply(const std::vector<int64_t>& x) const;

  int flip_count() const;

  bool operator==(const SignedPermutation&) const = default;
  bool operator<(const SignedPermutation& o) const;

  /// Signed one-line notation "[2 -1 3]": entry i is sign * image index,
  /// i.e. the coefficient pattern of e_i's image.
  std::string to_string() const;

 private:
  std::vector<int> perm_;  // 0-based internally
  std::vector<int> sign_;
};

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);

/// Affine transformation x |-> P(x) + v of Z^n.  Composition is again
/// left-to-right: (a * b)(x) = b(a(x)).
struct AffineWeylElement {
  SignedPermutation linear;
  std::vector<int64_t> translation;

  static AffineWeylElement identity(int n);
  AffineWeylElement then(const AffineWeylElement& next) const;
  AffineWeylElement inverse() const;
  std::vector<int64_t> apply(const std::vector<int64_t>& x) const;
  bool is_identity() const;
  bool operator==(const AffineWeylElement&) const = default;
  std::string to_string() const;
};

AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b);

/// How a puncture loop letter lifts to the Weyl level.  The reflection
/// lift (x_1 |-> -x_1 resp. x_n |-> 1-x_n) matches the squaring covering
/// used by the B row; the At row's exponential covering winds, so its
/// left puncture lifts to the translation x_1 |-> x_1 + 1.
enum class PunctureLift { reflection, translation };

/// Multiplicative extension of the letter images: sigma_i to the
/// transposition (i,i+1), loop letters to the reflection/translation
/// fixed by the side's covering.  Cone letters always reflect.
AffineWeylElement weyl_image(const BraidWord& w,
                             PunctureLift left_lift = PunctureLift::reflection);

/// Same, for signatures with no right point and non-winding left lift;
/// throws if the image needs a translation part.
SignedPermutation weyl_image_finite(const BraidWord& w);

/// Number of positive roots of the family's root system sent negative.
/// Throws if P does not lie in the family's reflection group.
int length(const SignedPermutation& P, Family family);

/// W(D_n) inside 2^n : S_n = even number of sign flips.
bool in_D_subgroup(const SignedPermutation& P);
/// D_n root lattice = integer vectors of even coordinate sum.
bool in_lambda(const std::vector<int64_t>& v);

/// Longest element of W(A_{n-1}), W(B_n), W(D_n) (rank = subscript).
SignedPermutation longest_element(Family family, int rank);

/// Image in the row's quotient (table third column), computed at the Weyl
/// level and mapped to loop-letter parities by evaluation on the loop
/// generators.  Values as in QuotientClass: trivial rows yield all-zero.
struct WeylCosetClass {
  int left = 0;       // Z/2 parity, or the Z value for the At row
  int right = 0;      // Z/2 parity
  bool left_is_integer = false;
  bool operator==(const WeylCosetClass&) const = default;
};

WeylCosetClass coset_class_via_weyl(const BraidWord& w, Family family);

}  // namespace orbibraid
