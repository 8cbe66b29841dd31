#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbibraid/coxeter.hpp"
#include "orbibraid/weyl.hpp"

namespace orbibraid {

struct GarsideNF;
class GarsideContext;
GarsideNF normal_form(const ArtinWord& w, const GarsideContext& ctx);

/// Garside structure of the spherical Artin groups A_{n-1}, B_n, D_n.
/// Simples are Weyl elements (every element of W left-divides the longest
/// element), the fundamental element corresponds to w_0, and words are
/// canonicalized into Delta-power times a left-greedy factor sequence.
/// Supported ranks are <= 8; larger ranks raise an error.
class GarsideContext {
 public:
  GarsideContext(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int generator_count() const { return gens_; }
  int dimension() const { return dim_; }

  const SignedPermutation& generator(int i) const;  // 1-based
  const SignedPermutation& w0() const { return w0_; }
  int length(const SignedPermutation& u) const;
  SignedPermutation tau(const SignedPermutation& u) const;  // Delta-conjugation

 private:
  Family family_;
  int rank_, gens_, dim_;
  std::vector<SignedPermutation> gen_;
  SignedPermutation w0_;
  int max_len_;

  friend struct GarsideNF;
  friend GarsideNF normal_form(const ArtinWord&, const GarsideContext&);
};

/// Delta^inf times left-greedy simples, none trivial and none Delta.
struct GarsideNF {
  int inf = 0;
  std::vector<SignedPermutation> factors;

  bool operator==(const GarsideNF&) const = default;
  std::string to_string() const;  // "D^k . [..] | [..]"
};

/// Positive word whose normal form is Delta: (g_1...g_n)^{n-1} for D_n,
/// (g_1...g_n)^n for B_n, and the standard half-twist cascade for A_{n-1}.
ArtinWord delta_word(Family family, int rank);

inline GarsideNF normal_form(const ArtinWord& w, Family family, int rank) {
  return normal_form(w, GarsideContext(family, rank));
}

bool garside_equal(const ArtinWord& u, const ArtinWord& v, const GarsideContext& ctx);
inline bool garside_equal(const ArtinWord& u, const ArtinWord& v, Family family, int rank) {
  GarsideContext ctx(family, rank);
  return garside_equal(u, v, ctx);
}

/// The unique j with Delta g_i Delta^-1 = g_j; throws if the conjugate is
/// not a generator (cannot happen for the supported families).
int conj_by_delta(int i, Family family, int rank);

/// Commutation with every generator plus any extra words supplied.
bool is_central(const ArtinWord& w, Family family, int rank,
                const std::vector<ArtinWord>& extra = {});

}  // namespace orbibraid
