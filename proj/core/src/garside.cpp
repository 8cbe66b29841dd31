#include "orbibraid/garside.hpp"

#include <algorithm>
#include <sstream>

namespace orbibraid {

namespace {

SignedPermutation reflection_sum(int n, int i, int j) {
  // reflection in e_i + e_j: e_i |-> -e_j, e_j |-> -e_i
  std::vector<int> perm(n), sign(n, 1);
  for (int k = 0; k < n; ++k) perm[k] = k;
  std::swap(perm[i - 1], perm[j - 1]);
  sign[i - 1] = -1;
  sign[j - 1] = -1;
  return {perm, sign};
}

}  // namespace

GarsideContext::GarsideContext(Family family, int rank) : family_(family), rank_(rank) {
  if (family != Family::A && family != Family::B && family != Family::D)
    throw std::invalid_argument("Garside structure: spherical families A, B, D only");
  if (rank > 8) throw std::invalid_argument("Garside structure: rank > 8 not supported");
  CoxeterDiagram d(family, rank);  // validates the rank condition
  gens_ = d.nodes();
  dim_ = family == Family::A ? rank + 1 : rank;
  switch (family) {
    case Family::A:
      for (int i = 1; i <= gens_; ++i)
        gen_.push_back(SignedPermutation::transposition(dim_, i, i + 1));
      break;
    case Family::B:
      gen_.push_back(SignedPermutation::flip(dim_, 1));
      for (int i = 2; i <= gens_; ++i)
        gen_.push_back(SignedPermutation::transposition(dim_, i - 1, i));
      break;
    case Family::D:
      gen_.push_back(reflection_sum(dim_, 1, 2));
      gen_.push_back(SignedPermutation::transposition(dim_, 1, 2));
      for (int i = 3; i <= gens_; ++i)
        gen_.push_back(SignedPermutation::transposition(dim_, i - 1, i));
      break;
    default:
      break;
  }
  w0_ = longest_element(family, rank);
  max_len_ = length(w0_);
}

const SignedPermutation& GarsideContext::generator(int i) const {
  if (i < 1 || i > gens_) throw std::invalid_argument("generator index out of range");
  return gen_[i - 1];
}

int GarsideContext::length(const SignedPermutation& u) const {
  return orbibraid::length(u, family_);
}

SignedPermutation GarsideContext::tau(const SignedPermutation& u) const {
  return w0_.then(u).then(w0_);
}

std::string GarsideNF::to_string() const {
  std::ostringstream out;
  out << "D^" << inf;
  for (const auto& f : factors) out << " . " << f.to_string();
  return out.str();
}

ArtinWord delta_word(Family family, int rank) {
  ArtinWord w;
  switch (family) {
    case Family::D:
      for (int rep = 0; rep < rank - 1; ++rep)
        for (int i = 1; i <= rank; ++i) w.letters.push_back({i, 1});
      break;
    case Family::B:
      for (int rep = 0; rep < rank; ++rep)
        for (int i = 1; i <= rank; ++i) w.letters.push_back({i, 1});
      break;
    case Family::A:
      for (int i = 1; i <= rank; ++i)
        for (int j = i; j >= 1; --j) w.letters.push_back({j, 1});
      break;
    default:
      throw std::invalid_argument("delta_word: spherical families only");
  }
  return w;
}

namespace {

// s starts b: removing s from the front of b keeps lengths additive
bool starts(const GarsideContext& ctx, const SignedPermutation& s,
            const SignedPermutation& b, int len_b) {
  return ctx.length(s.then(b)) == len_b - 1;
}

// s finishes a
bool finishes(const GarsideContext& ctx, const SignedPermutation& a, int len_a,
              const SignedPermutation& s) {
  return ctx.length(a.then(s)) == len_a - 1;
}

}  // namespace

GarsideNF normal_form(const ArtinWord& w, const GarsideContext& ctx) {
  const int max_len = ctx.length(ctx.w0());
  GarsideNF nf;
  std::vector<SignedPermutation> fs;
  for (const auto& l : w.letters) {
    if (l.gen < 1 || l.gen > ctx.generator_count())
      throw std::invalid_argument("artin word: generator out of range");
    const auto& g = ctx.generator(l.gen);
    if (l.sign > 0) {
      fs.push_back(g);
    } else {
      // g^-1 = Delta^-1 . (left complement of g); the Delta^-1 moves to
      // the front, twisting everything already collected.
      nf.inf -= 1;
      for (auto& f : fs) f = ctx.tau(f);
      fs.push_back(ctx.w0().then(g.inverse()));
    }
  }

  std::vector<int> len(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) len[i] = ctx.length(fs[i]);

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = fs.size(); i-- > 1;) {
      auto& a = fs[i - 1];
      auto& b = fs[i];
      if (len[i] == 0) continue;
      bool moved = true;
      while (moved && len[i] > 0) {
        moved = false;
        for (int s = 1; s <= ctx.generator_count(); ++s) {
          if (len[i - 1] == max_len) break;
          const auto& gs = ctx.generator(s);
          if (starts(ctx, gs, b, len[i]) && !finishes(ctx, a, len[i - 1], gs)) {
            a = a.then(gs);
            b = gs.then(b);
            ++len[i - 1];
            --len[i];
            moved = true;
            changed = true;
          }
        }
      }
    }
    // absorb trivial and full factors
    std::vector<SignedPermutation> kept;
    std::vector<int> kept_len;
    for (size_t i = 0; i < fs.size(); ++i) {
      if (len[i] == 0) {
        changed = true;
        continue;
      }
      if (len[i] == max_len) {
        nf.inf += 1;
        for (auto& f : kept) f = ctx.tau(f);
        changed = true;
        continue;
      }
      kept.push_back(fs[i]);
      kept_len.push_back(len[i]);
    }
    fs = std::move(kept);
    len = std::move(kept_len);
  }
  nf.factors = std::move(fs);
  return nf;
}

bool garside_equal(const ArtinWord& u, const ArtinWord& v, const GarsideContext& ctx) {
  return normal_form(u, ctx) == normal_form(v, ctx);
}

int conj_by_delta(int i, Family family, int rank) {
  GarsideContext ctx(family, rank);
  ArtinWord d = delta_word(family, rank);
  ArtinWord w = artin_concat(artin_concat(d, ArtinWord{{{i, 1}}}), artin_inverse(d));
  GarsideNF nf = normal_form(w, ctx);
  for (int j = 1; j <= ctx.generator_count(); ++j) {
    if (nf == normal_form(ArtinWord{{{j, 1}}}, ctx)) return j;
  }
  throw std::runtime_error("conjugate of generator by Delta is not a generator");
}

bool is_central(const ArtinWord& w, Family family, int rank,
                const std::vector<ArtinWord>& extra) {
  GarsideContext ctx(family, rank);
  std::vector<ArtinWord> test;
  for (int i = 1; i <= ctx.generator_count(); ++i) test.push_back(ArtinWord{{{i, 1}}});
  test.insert(test.end(), extra.begin(), extra.end());
  for (const auto& g : test) {
    if (!garside_equal(artin_concat(w, g), artin_concat(g, w), ctx)) return false;
  }
  return true;
}

}  // namespace orbibraid
