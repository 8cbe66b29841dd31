#pragma once

#include <array>
#include <string>
#include <vector>

#include "orbibraid/words.hpp"

namespace orbibraid {

/// The classical families and their affine versions.  "At" etc. spell the
/// tilde families in ASCII, as in the CLI syntax ("Dt5" = affine D_5).
enum class Family { A, B, D, At, Bt, Ct, Dt };

bool is_affine(Family f);
std::string family_name(Family f);                 // "A", "Bt", ...
Family parse_family(const std::string& name);

/// Labeled Coxeter diagram of one of the seven families.  Nodes are
/// numbered 1..N following the paper's generator labels; rank is the
/// subscript (family X_n), so affine diagrams have n+1 nodes.
/// Edge labels m(i,j): 2 = unjoined, 3 = single bond, 4 = double bond.
class CoxeterDiagram {
 public:
  CoxeterDiagram(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int nodes() const { return nodes_; }
  int label(int i, int j) const;  // 1-based; i != j

  /// Strand count of the orbifold braid group this diagram's row embeds in.
  int strands() const;
  /// The orbifold of this diagram's row.
  OrbifoldSignature signature() const;

  std::vector<std::array<int, 3>> edges() const;  // {i, j, m} with m >= 3
  std::string name() const;                       // "D4", "Dt5"
  std::string to_json() const;

  bool operator==(const CoxeterDiagram&) const = default;

 private:
  Family family_;
  int rank_;
  int nodes_;
  std::vector<int> m_;  // nodes_ x nodes_, row-major

  void set_label(int i, int j, int m);
};

/// Throws std::invalid_argument naming the violated table row when the
/// family's rank condition fails.
CoxeterDiagram classical_diagram(Family family, int rank);

/// Diagram text syntax: "D4", "Dt5", "A3", ...
CoxeterDiagram parse_diagram(const std::string& text);

struct ArtinLetter {
  int gen = 1;   // 1..generator_count
  int sign = 1;  // +-1
  bool operator==(const ArtinLetter&) const = default;
};

struct ArtinWord {
  std::vector<ArtinLetter> letters;
  bool operator==(const ArtinWord&) const = default;
  size_t size() const { return letters.size(); }
};

ArtinWord artin_inverse(const ArtinWord& w);
ArtinWord artin_concat(const ArtinWord& a, const ArtinWord& b);
ArtinWord artin_free_reduce(const ArtinWord& w);
std::string to_string(const ArtinWord& w);  // "g1 g2 g1'"
ArtinWord parse_artin_word(int generator_count, const std::string& text);

/// One relation per node pair: gh=hg (m=2), ghg=hgh (m=3), ghgh=hghg (m=4).
struct ArtinRelation {
  ArtinWord lhs, rhs;
  int node_i = 0, node_j = 0;  // the unordered pair that produced it
  bool operator==(const ArtinRelation&) const = default;
};

struct ArtinPresentation {
  int generator_count = 0;
  std::vector<ArtinRelation> relations;
};

ArtinPresentation artin_presentation(const CoxeterDiagram& d);

/// Node bijections d1 -> d2 preserving m, found by exhaustive search.
/// maps[k] is 1-based: node i of d1 goes to maps[k][i-1] of d2.
std::vector<std::vector<int>> diagram_isomorphisms(const CoxeterDiagram& d1,
                                                   const CoxeterDiagram& d2);

}  // namespace orbibraid
