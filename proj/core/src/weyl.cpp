#include "orbibraid/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbibraid {

SignedPermutation::SignedPermutation(int n) : perm_(n), sign_(n, 1) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> sign)
    : perm_(std::move(perm)), sign_(std::move(sign)) {
  if (perm_.size() != sign_.size()) throw std::invalid_argument("perm/sign size mismatch");
}

SignedPermutation SignedPermutation::identity(int n) { return SignedPermutation(n); }

SignedPermutation SignedPermutation::transposition(int n, int i, int j) {
  SignedPermutation p(n);
  std::swap(p.perm_[i - 1], p.perm_[j - 1]);
  return p;
}

SignedPermutation SignedPermutation::flip(int n, int i) {
  SignedPermutation p(n);
  p.sign_[i - 1] = -1;
  return p;
}

SignedPermutation SignedPermutation::then(const SignedPermutation& next) const {
  const int n = this->n();
  SignedPermutation r(n);
  for (int i = 0; i < n; ++i) {
    r.perm_[i] = next.perm_[perm_[i]];
    r.sign_[i] = sign_[i] * next.sign_[perm_[i]];
  }
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  const int n = this->n();
  SignedPermutation r(n);
  for (int i = 0; i < n; ++i) {
    r.perm_[perm_[i]] = i;
    r.sign_[perm_[i]] = sign_[i];
  }
  return r;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (perm_[i] != i || sign_[i] != 1) return false;
  return true;
}

std::vector<int64_t> SignedPermutation::apply(const std::vector<int64_t>& x) const {
  std::vector<int64_t> y(x.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) y[perm_[i]] += sign_[i] * x[i];
  return y;
}

int SignedPermutation::flip_count() const {
  return static_cast<int>(std::count(sign_.begin(), sign_.end(), -1));
}

bool SignedPermutation::operator<(const SignedPermutation& o) const {
  if (perm_ != o.perm_) return perm_ < o.perm_;
  return sign_ < o.sign_;
}

std::string SignedPermutation::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ' ';
    s += std::to_string(sign_[i] * (perm_[i] + 1));
  }
  return s + "]";
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  return a.then(b);
}

AffineWeylElement AffineWeylElement::identity(int n) {
  return {SignedPermutation::identity(n), std::vector<int64_t>(n, 0)};
}

AffineWeylElement AffineWeylElement::then(const AffineWeylElement& next) const {
  AffineWeylElement r;
  r.linear = linear.then(next.linear);
  r.translation = next.linear.apply(translation);
  for (size_t i = 0; i < r.translation.size(); ++i) r.translation[i] += next.translation[i];
  return r;
}

AffineWeylElement AffineWeylElement::inverse() const {
  AffineWeylElement r;
  r.linear = linear.inverse();
  r.translation = r.linear.apply(translation);
  for (auto& t : r.translation) t = -t;
  return r;
}

std::vector<int64_t> AffineWeylElement::apply(const std::vector<int64_t>& x) const {
  auto y = linear.apply(x);
  for (size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
  return y;
}

bool AffineWeylElement::is_identity() const {
  return linear.is_identity() &&
         std::all_of(translation.begin(), translation.end(), [](int64_t t) { return t == 0; });
}

std::string AffineWeylElement::to_string() const {
  std::string s = linear.to_string() + " + (";
  for (size_t i = 0; i < translation.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(translation[i]);
  }
  return s + ")";
}

AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
  return a.then(b);
}

namespace {

AffineWeylElement letter_image(const OrbifoldSignature& sig, const BraidLetter& l,
                               PunctureLift left_lift) {
  const int n = sig.strands;
  AffineWeylElement e = AffineWeylElement::identity(n);
  switch (l.kind) {
    case LetterKind::sigma:
      e.linear = SignedPermutation::transposition(n, l.index, l.index + 1);
      break;
    case LetterKind::loop_left:
      if (sig.left->kind == PointKind::puncture && left_lift == PunctureLift::translation) {
        e.translation[0] = 1;  // winding lift x_1 |-> x_1 + 1
      } else {
        e.linear = SignedPermutation::flip(n, 1);  // x_1 |-> -x_1
      }
      break;
    case LetterKind::loop_right:
      // x_n |-> 1 - x_n: the deck transformation at the branch point 1/2
      e.linear = SignedPermutation::flip(n, n);
      e.translation[n - 1] = 1;
      break;
  }
  if (l.sign < 0) e = e.inverse();
  return e;
}

}  // namespace

AffineWeylElement weyl_image(const BraidWord& w, PunctureLift left_lift) {
  AffineWeylElement acc = AffineWeylElement::identity(w.sig.strands);
  for (const auto& l : w.letters) acc = acc.then(letter_image(w.sig, l, left_lift));
  return acc;
}

SignedPermutation weyl_image_finite(const BraidWord& w) {
  auto e = weyl_image(w, PunctureLift::reflection);
  for (int64_t t : e.translation)
    if (t != 0) throw std::invalid_argument("weyl image has a translation part");
  return e.linear;
}

namespace {

// positive roots: A: e_j - e_i (i<j); D: e_j +- e_i (i<j); B: those plus e_i
std::vector<std::vector<int64_t>> positive_roots(Family family, int n) {
  std::vector<std::vector<int64_t>> roots;
  auto root = [&](int i, int j, int si, int sj) {
    std::vector<int64_t> r(n, 0);
    r[i] = si;
    r[j] = sj;
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(root(i, j, -1, 1));  // e_j - e_i
      if (family != Family::A) roots.push_back(root(i, j, 1, 1));
    }
  if (family == Family::B)
    for (int i = 0; i < n; ++i) {
      std::vector<int64_t> r(n, 0);
      r[i] = 1;
      roots.push_back(r);
    }
  return roots;
}

// positivity: last nonzero coordinate positive (e_j - e_i, e_j + e_i, e_i)
bool is_negative_root(const std::vector<int64_t>& r) {
  for (auto it = r.rbegin(); it != r.rend(); ++it) {
    if (*it < 0) return true;
    if (*it > 0) return false;
  }
  return false;
}

}  // namespace

int length(const SignedPermutation& P, Family family) {
  const int n = P.n();
  switch (family) {
    case Family::A:
      if (P.flip_count() != 0)
        throw std::invalid_argument("element not in W(A): has sign flips");
      break;
    case Family::D:
      if (!in_D_subgroup(P))
        throw std::invalid_argument("element not in W(D): odd flip count");
      break;
    case Family::B:
      break;
    default:
      throw std::invalid_argument("length: spherical families only");
  }
  int count = 0;
  for (const auto& r : positive_roots(family, n))
    if (is_negative_root(P.apply(r))) ++count;
  return count;
}

bool in_D_subgroup(const SignedPermutation& P) { return P.flip_count() % 2 == 0; }

bool in_lambda(const std::vector<int64_t>& v) {
  int64_t s = std::accumulate(v.begin(), v.end(), int64_t{0});
  return ((s % 2) + 2) % 2 == 0;
}

SignedPermutation longest_element(Family family, int rank) {
  switch (family) {
    case Family::A: {
      // reversal of rank+1 strands
      const int n = rank + 1;
      std::vector<int> perm(n), sign(n, 1);
      for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
      return {perm, sign};
    }
    case Family::B: {
      std::vector<int> perm(rank), sign(rank, -1);
      std::iota(perm.begin(), perm.end(), 0);
      return {perm, sign};
    }
    case Family::D: {
      std::vector<int> perm(rank), sign(rank, -1);
      std::iota(perm.begin(), perm.end(), 0);
      if (rank % 2 == 1) sign[0] = 1;  // -id is odd for odd rank
      return {perm, sign};
    }
    default:
      throw std::invalid_argument("longest_element: spherical families only");
  }
}

WeylCosetClass coset_class_via_weyl(const BraidWord& w, Family family) {
  WeylCosetClass c;
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::Ct:
      return c;  // trivial quotient
    case Family::D: {
      auto P = weyl_image_finite(w);
      c.left = P.flip_count() % 2;
      return c;
    }
    case Family::At: {
      auto e = weyl_image(w, PunctureLift::translation);
      int64_t s = std::accumulate(e.translation.begin(), e.translation.end(), int64_t{0});
      c.left = static_cast<int>(s);
      c.left_is_integer = true;
      return c;
    }
    case Family::Bt: {
      auto e = weyl_image(w);
      int64_t s = std::accumulate(e.translation.begin(), e.translation.end(), int64_t{0});
      c.right = static_cast<int>(((s % 2) + 2) % 2);  // lattice-coset parity
      return c;
    }
    case Family::Dt: {
      // tau_L evaluates to (1,0) and tau_R to (0,1) under this map
      auto e = weyl_image(w);
      int64_t s = std::accumulate(e.translation.begin(), e.translation.end(), int64_t{0});
      int sv = static_cast<int>(((s % 2) + 2) % 2);
      int fp = e.linear.flip_count() % 2;
      c.left = (fp + sv) % 2;
      c.right = sv;
      return c;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace orbibraid
