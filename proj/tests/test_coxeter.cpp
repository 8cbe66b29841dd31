#include <doctest.h>

#include <set>

#include "orbibraid/coxeter.hpp"

using namespace orbibraid;

TEST_SUITE("coxeter") {

TEST_CASE("A3 is a path with single bonds") {
  CoxeterDiagram d = classical_diagram(Family::A, 3);
  CHECK(d.nodes() == 3);
  CHECK(d.label(1, 2) == 3);
  CHECK(d.label(2, 3) == 3);
  CHECK(d.label(1, 3) == 2);
}

TEST_CASE("D2 has two unjoined nodes") {
  CoxeterDiagram d = classical_diagram(Family::D, 2);
  CHECK(d.nodes() == 2);
  CHECK(d.label(1, 2) == 2);
}

TEST_CASE("Ct2 is a path with two double bonds") {
  CoxeterDiagram d = classical_diagram(Family::Ct, 2);
  CHECK(d.nodes() == 3);
  CHECK(d.label(1, 2) == 4);
  CHECK(d.label(2, 3) == 4);
  CHECK(d.label(1, 3) == 2);
}

TEST_CASE("Bt diagram: double bond at node 1, fork at the far end") {
  CoxeterDiagram d = classical_diagram(Family::Bt, 4);
  CHECK(d.nodes() == 5);
  CHECK(d.label(1, 2) == 4);
  CHECK(d.label(2, 3) == 3);
  CHECK(d.label(3, 4) == 3);
  CHECK(d.label(3, 5) == 3);
  CHECK(d.label(4, 5) == 2);
}

TEST_CASE("Dt4 is the star with four leaves") {
  CoxeterDiagram d = classical_diagram(Family::Dt, 4);
  CHECK(d.nodes() == 5);
  for (int leaf : {1, 2, 4, 5}) CHECK(d.label(leaf, 3) == 3);
  CHECK(d.label(1, 2) == 2);
  CHECK(d.label(4, 5) == 2);
}

TEST_CASE("rank conditions follow the table") {
  CHECK_THROWS_WITH_AS(classical_diagram(Family::D, 1), doctest::Contains("D_n"),
                       std::invalid_argument);
  CHECK_THROWS(classical_diagram(Family::Dt, 2));
  CHECK_THROWS(classical_diagram(Family::Bt, 2));
  CHECK_THROWS(classical_diagram(Family::At, 1));
  CHECK_THROWS(classical_diagram(Family::A, 0));
  CHECK_NOTHROW(classical_diagram(Family::At, 2));  // triangle, 3 strands
  CHECK_NOTHROW(classical_diagram(Family::Ct, 2));
}

TEST_CASE("diagram text syntax") {
  CHECK(parse_diagram("D4").name() == "D4");
  CHECK(parse_diagram("Dt5").family() == Family::Dt);
  CHECK(parse_diagram("C3").family() == Family::B);  // B = C
  CHECK_THROWS(parse_diagram("E8"));
  CHECK_THROWS(parse_diagram("D"));
}

TEST_CASE("json export lists labeled edges") {
  CHECK(classical_diagram(Family::D, 3).to_json() ==
        "{\"family\":\"D\",\"n\":3,\"edges\":[[1,3,3],[2,3,3]]}");
}

TEST_CASE("presentations per bond label") {
  auto pres = artin_presentation(classical_diagram(Family::A, 2));
  REQUIRE(pres.relations.size() == 1);
  CHECK(to_string(pres.relations[0].lhs) == "g1 g2 g1");
  CHECK(to_string(pres.relations[0].rhs) == "g2 g1 g2");

  pres = artin_presentation(classical_diagram(Family::D, 2));
  REQUIRE(pres.relations.size() == 1);
  CHECK(to_string(pres.relations[0].lhs) == "g1 g2");
  CHECK(to_string(pres.relations[0].rhs) == "g2 g1");

  pres = artin_presentation(classical_diagram(Family::B, 2));
  REQUIRE(pres.relations.size() == 1);
  CHECK(to_string(pres.relations[0].lhs) == "g1 g2 g1 g2");
  CHECK(to_string(pres.relations[0].rhs) == "g2 g1 g2 g1");
}

TEST_CASE("one relation per node pair") {
  for (auto f : {Family::A, Family::B, Family::D, Family::At, Family::Bt, Family::Ct,
                 Family::Dt}) {
    for (int rank = 2; rank <= 5; ++rank) {
      CoxeterDiagram d(f, std::max(rank, f == Family::Bt || f == Family::Dt ? 3 : rank));
      auto pres = artin_presentation(d);
      int N = d.nodes();
      CHECK(static_cast<int>(pres.relations.size()) == N * (N - 1) / 2);
    }
  }
}

TEST_CASE("A3 and D3 are isomorphic in exactly two ways, center to center") {
  auto isos = diagram_isomorphisms(classical_diagram(Family::A, 3),
                                   classical_diagram(Family::D, 3));
  REQUIRE(isos.size() == 2);
  for (const auto& iso : isos) CHECK(iso[1] == 3);  // center of A3 is node 2, of D3 node 3
}

TEST_CASE("At3 and Dt3 are isomorphic 4-cycles") {
  auto isos = diagram_isomorphisms(classical_diagram(Family::At, 3),
                                   classical_diagram(Family::Dt, 3));
  CHECK(!isos.empty());
}

TEST_CASE("A2 and B2 are not isomorphic") {
  CHECK(diagram_isomorphisms(classical_diagram(Family::A, 2),
                             classical_diagram(Family::B, 2))
            .empty());
}

TEST_CASE("identity is always an isomorphism of a diagram with itself") {
  auto d = classical_diagram(Family::D, 4);
  auto isos = diagram_isomorphisms(d, d);
  bool has_identity = false;
  for (const auto& iso : isos) {
    bool id = true;
    for (int i = 0; i < d.nodes(); ++i) id = id && iso[i] == i + 1;
    has_identity = has_identity || id;
  }
  CHECK(has_identity);
  CHECK(isos.size() == 6);  // D4 is a three-leaf star; S3 permutes the leaves
}

TEST_CASE("isomorphic diagrams give identical presentations after relabeling") {
  auto d1 = classical_diagram(Family::A, 3);
  auto d2 = classical_diagram(Family::D, 3);
  auto isos = diagram_isomorphisms(d1, d2);
  REQUIRE(!isos.empty());
  const auto& iso = isos[0];
  auto p1 = artin_presentation(d1);
  auto p2 = artin_presentation(d2);
  // relabel p1's relations through iso and compare as multisets of pairs
  auto relabel = [&](const ArtinWord& w) {
    ArtinWord out;
    for (auto l : w.letters) out.letters.push_back({iso[l.gen - 1], l.sign});
    return out;
  };
  auto key = [](const ArtinWord& a, const ArtinWord& b) {
    std::string s = to_string(a) + "=" + to_string(b);
    std::string t = to_string(b) + "=" + to_string(a);
    return s < t ? s : t;
  };
  std::multiset<std::string> k1, k2;
  for (const auto& r : p1.relations) k1.insert(key(relabel(r.lhs), relabel(r.rhs)));
  for (const auto& r : p2.relations) k2.insert(key(r.lhs, r.rhs));
  CHECK(k1 == k2);
}

}  // TEST_SUITE
