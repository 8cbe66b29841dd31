#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "orbibraid/garside.hpp"

using namespace orbibraid;

namespace {

ArtinWord parse(int gens, const std::string& s) { return parse_artin_word(gens, s); }

// Independent oracle: equivalence closure of positive words under the
// defining relations applied as substring rewrites.
std::set<std::string> rewriting_closure(const CoxeterDiagram& d, const ArtinWord& start) {
  auto pres = artin_presentation(d);
  auto key = [](const ArtinWord& w) {
    std::string s;
    for (auto& l : w.letters) s += static_cast<char>('0' + l.gen);
    return s;
  };
  std::set<std::string> seen{key(start)};
  std::queue<ArtinWord> todo;
  todo.push(start);
  while (!todo.empty()) {
    ArtinWord w = todo.front();
    todo.pop();
    for (const auto& rel : pres.relations) {
      for (const auto& [from, to] :
           {std::pair(rel.lhs, rel.rhs), std::pair(rel.rhs, rel.lhs)}) {
        for (size_t pos = 0; pos + from.letters.size() <= w.letters.size(); ++pos) {
          bool match = true;
          for (size_t k = 0; k < from.letters.size(); ++k)
            if (!(w.letters[pos + k] == from.letters[k])) match = false;
          if (!match) continue;
          ArtinWord next;
          next.letters.assign(w.letters.begin(), w.letters.begin() + pos);
          next.letters.insert(next.letters.end(), to.letters.begin(), to.letters.end());
          next.letters.insert(next.letters.end(), w.letters.begin() + pos + from.letters.size(),
                              w.letters.end());
          if (seen.insert(key(next)).second) todo.push(next);
        }
      }
    }
  }
  return seen;
}

}  // namespace

TEST_SUITE("garside") {

TEST_CASE("braid relation in A2") {
  CHECK(garside_equal(parse(2, "g1 g2 g1"), parse(2, "g2 g1 g2"), Family::A, 2));
  CHECK(!garside_equal(parse(2, "g1"), parse(2, "g2"), Family::A, 2));
}

TEST_CASE("four-braid relation in B2, commutation in D2") {
  CHECK(garside_equal(parse(2, "g1 g2 g1 g2"), parse(2, "g2 g1 g2 g1"), Family::B, 2));
  CHECK(garside_equal(parse(2, "g1 g2"), parse(2, "g2 g1"), Family::D, 2));
  CHECK(!garside_equal(parse(2, "g1"), parse(2, "g2"), Family::D, 2));
}

TEST_CASE("empty word and inverses") {
  GarsideContext ctx(Family::D, 3);
  GarsideNF nf = normal_form(ArtinWord{}, ctx);
  CHECK(nf.inf == 0);
  CHECK(nf.factors.empty());
  CHECK(garside_equal(parse(3, "g1 g1'"), ArtinWord{}, ctx));
  CHECK(garside_equal(parse(3, "g2' g1' g1 g2"), ArtinWord{}, ctx));
  CHECK(!garside_equal(parse(3, "g1'"), ArtinWord{}, ctx));
}

TEST_CASE("delta words normalize to a bare Delta") {
  for (int n = 2; n <= 6; ++n) {
    GarsideNF nf = normal_form(delta_word(Family::D, n), Family::D, n);
    CHECK(nf.inf == 1);
    CHECK(nf.factors.empty());
  }
  for (int n = 2; n <= 5; ++n) {
    GarsideNF nf = normal_form(delta_word(Family::B, n), Family::B, n);
    CHECK(nf.inf == 1);
    CHECK(nf.factors.empty());
  }
  for (int m = 1; m <= 5; ++m) {
    GarsideNF nf = normal_form(delta_word(Family::A, m), Family::A, m);
    CHECK(nf.inf == 1);
    CHECK(nf.factors.empty());
  }
}

TEST_CASE("A2 delta is the unique length-3 positive word class") {
  // brute force: the only positive words of length 3 mapping to w_0 are
  // g1g2g1 and g2g1g2, and they are equal
  GarsideContext ctx(Family::A, 2);
  CHECK(garside_equal(delta_word(Family::A, 2), parse(2, "g1 g2 g1"), ctx));
  CHECK(garside_equal(delta_word(Family::A, 2), parse(2, "g2 g1 g2"), ctx));
}

TEST_CASE("g1 squared is two left-greedy factors") {
  GarsideContext ctx(Family::A, 2);
  GarsideNF nf = normal_form(parse(2, "g1 g1"), ctx);
  CHECK(nf.inf == 0);
  REQUIRE(nf.factors.size() == 2);
  CHECK(nf.factors[0] == ctx.generator(1));
  CHECK(nf.factors[1] == ctx.generator(1));
}

TEST_CASE("Weyl image of the D_n fundamental element matches the sign pattern") {
  for (int n = 2; n <= 6; ++n) {
    GarsideContext ctx(Family::D, n);
    ArtinWord d = delta_word(Family::D, n);
    SignedPermutation img = SignedPermutation::identity(n);
    for (const auto& l : d.letters) img = img.then(ctx.generator(l.gen));
    // e_1 -> (-1)^(n-1) e_1, e_j -> -e_j for j >= 2
    for (int i = 1; i <= n; ++i) {
      CHECK(img.perm(i) == i);
      CHECK(img.sign(i) == (i == 1 ? (n % 2 == 1 ? 1 : -1) : -1));
    }
    CHECK(length(img, Family::D) == n * (n - 1));
  }
}

TEST_CASE("conjugation by Delta") {
  CHECK(conj_by_delta(1, Family::D, 5) == 2);
  CHECK(conj_by_delta(2, Family::D, 5) == 1);
  CHECK(conj_by_delta(1, Family::D, 4) == 1);
  CHECK(conj_by_delta(2, Family::D, 4) == 2);
  for (int n = 3; n <= 6; ++n)
    for (int i = 3; i <= n; ++i) CHECK(conj_by_delta(i, Family::D, n) == i);
  // A_{n-1}: Delta conjugation is the diagram flip
  CHECK(conj_by_delta(1, Family::A, 3) == 3);
  CHECK(conj_by_delta(2, Family::A, 3) == 2);
  // B_n: Delta is central
  for (int i = 1; i <= 3; ++i) CHECK(conj_by_delta(i, Family::B, 3) == i);
}

TEST_CASE("centrality of Delta and Delta squared") {
  ArtinWord d5 = delta_word(Family::D, 5);
  CHECK(is_central(artin_concat(d5, d5), Family::D, 5));
  CHECK(!is_central(d5, Family::D, 5));
  CHECK(is_central(delta_word(Family::D, 4), Family::D, 4));
  CHECK(is_central(delta_word(Family::B, 3), Family::B, 3));
}

TEST_CASE("normal form is invariant under applying defining relations") {
  std::mt19937 rng(4242);
  for (auto [family, rank] : {std::pair(Family::D, 4), std::pair(Family::B, 3),
                              std::pair(Family::A, 3)}) {
    GarsideContext ctx(family, rank);
    auto pres = artin_presentation(CoxeterDiagram(family, rank));
    for (int trial = 0; trial < 60; ++trial) {
      ArtinWord w;
      for (int k = 0; k < 8; ++k)
        w.letters.push_back({static_cast<int>(rng() % ctx.generator_count()) + 1,
                             rng() % 2 ? 1 : -1});
      // inject a relation: w . lhs . rhs^-1 at a random spot
      const auto& rel = pres.relations[rng() % pres.relations.size()];
      ArtinWord noise = artin_concat(rel.lhs, artin_inverse(rel.rhs));
      size_t cut = rng() % (w.letters.size() + 1);
      ArtinWord v;
      v.letters.assign(w.letters.begin(), w.letters.begin() + cut);
      v.letters.insert(v.letters.end(), noise.letters.begin(), noise.letters.end());
      v.letters.insert(v.letters.end(), w.letters.begin() + cut, w.letters.end());
      CHECK(normal_form(w, ctx) == normal_form(v, ctx));
    }
  }
}

TEST_CASE("oracle equivalence on short positive words in A2 and B2") {
  for (auto [family, rank] : {std::pair(Family::A, 2), std::pair(Family::B, 2)}) {
    CoxeterDiagram d(family, rank);
    GarsideContext ctx(family, rank);
    // enumerate all positive words of length <= 5 on two letters
    std::vector<ArtinWord> words;
    for (int len = 0; len <= 5; ++len) {
      for (int mask = 0; mask < (1 << len); ++mask) {
        ArtinWord w;
        for (int k = 0; k < len; ++k) w.letters.push_back({(mask >> k & 1) + 1, 1});
        words.push_back(w);
      }
    }
    for (size_t i = 0; i < words.size(); ++i) {
      auto closure = rewriting_closure(d, words[i]);
      for (size_t j = 0; j < words.size(); ++j) {
        std::string kj;
        for (auto& l : words[j].letters) kj += static_cast<char>('0' + l.gen);
        bool oracle_equal = closure.count(kj) > 0;
        bool garside = garside_equal(words[i], words[j], ctx);
        CHECK(oracle_equal == garside);
      }
    }
  }
}

TEST_CASE("diagram automorphism invariance for D") {
  std::mt19937 rng(11);
  GarsideContext ctx(Family::D, 4);
  auto swap12 = [](const ArtinWord& w) {
    ArtinWord out;
    for (auto l : w.letters)
      out.letters.push_back({l.gen == 1 ? 2 : l.gen == 2 ? 1 : l.gen, l.sign});
    return out;
  };
  for (int t = 0; t < 50; ++t) {
    ArtinWord u, v;
    for (int k = 0; k < 7; ++k) {
      u.letters.push_back({static_cast<int>(rng() % 4) + 1, rng() % 2 ? 1 : -1});
      v.letters.push_back({static_cast<int>(rng() % 4) + 1, rng() % 2 ? 1 : -1});
    }
    CHECK(garside_equal(u, v, ctx) == garside_equal(swap12(u), swap12(v), ctx));
  }
}

TEST_CASE("rank limit is an explicit error") {
  CHECK_THROWS_AS(GarsideContext(Family::D, 9), std::invalid_argument);
  CHECK_THROWS_AS(GarsideContext(Family::Dt, 4), std::invalid_argument);
}

}  // TEST_SUITE
