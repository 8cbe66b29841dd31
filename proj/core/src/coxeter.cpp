#include "orbibraid/coxeter.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace orbibraid {

bool is_affine(Family f) {
  return f == Family::At || f == Family::Bt || f == Family::Ct || f == Family::Dt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::At: return "At";
    case Family::Bt: return "Bt";
    case Family::Ct: return "Ct";
    case Family::Dt: return "Dt";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "B" || name == "C") return Family::B;
  if (name == "D") return Family::D;
  if (name == "At") return Family::At;
  if (name == "Bt") return Family::Bt;
  if (name == "Ct") return Family::Ct;
  if (name == "Dt") return Family::Dt;
  throw std::invalid_argument("unknown family: " + name +
                              " (expected A, B, D, At, Bt, Ct or Dt)");
}

namespace {

// Rank conditions from the table's "condition" column, stated on the
// diagram subscript.  The table indexes the A and At rows by strand count
// n with diagram A_{n-1}, so those translate to subscript >= 1 resp. >= 2.
void check_condition(Family f, int rank) {
  auto fail = [&](const std::string& row, const std::string& cond) {
    throw std::invalid_argument(family_name(f) + std::to_string(rank) +
                                " violates the " + row + " row condition " + cond);
  };
  switch (f) {
    case Family::A:
      if (rank < 1) fail("A_{n-1} (n>1)", "rank >= 1");
      break;
    case Family::B:
      if (rank < 2) fail("B_n (n>1)", "rank >= 2");
      break;
    case Family::D:
      if (rank < 2) fail("D_n (n>1)", "rank >= 2");
      break;
    case Family::At:
      if (rank < 2) fail("At_{n-1} (n>2)", "rank >= 2");
      break;
    case Family::Bt:
      if (rank < 3) fail("Bt_n (n>2)", "rank >= 3");
      break;
    case Family::Ct:
      if (rank < 2) fail("Ct_n (n>1)", "rank >= 2");
      break;
    case Family::Dt:
      if (rank < 3) fail("Dt_n (n>2)", "rank >= 3");
      break;
  }
}

}  // namespace

CoxeterDiagram::CoxeterDiagram(Family family, int rank) : family_(family), rank_(rank) {
  check_condition(family, rank);
  nodes_ = is_affine(family) ? rank + 1 : rank;
  m_.assign(static_cast<size_t>(nodes_) * nodes_, 2);
  const int n = rank_;
  switch (family_) {
    case Family::A:
      for (int i = 1; i < n; ++i) set_label(i, i + 1, 3);
      break;
    case Family::B:
      // double bond at the short-root node, which is generator 1
      set_label(1, 2, 4);
      for (int i = 2; i < n; ++i) set_label(i, i + 1, 3);
      break;
    case Family::D:
      if (n >= 3) {
        set_label(1, 3, 3);
        set_label(2, 3, 3);
        for (int i = 3; i < n; ++i) set_label(i, i + 1, 3);
      }
      // D_2: two unjoined nodes
      break;
    case Family::At:
      // cycle: path 1..n plus the affine node n+1 joined to both ends
      for (int i = 1; i < n; ++i) set_label(i, i + 1, 3);
      set_label(1, n + 1, 3);
      set_label(n, n + 1, 3);
      break;
    case Family::Bt:
      set_label(1, 2, 4);
      for (int i = 2; i < n; ++i) set_label(i, i + 1, 3);
      set_label(n - 1, n + 1, 3);  // affine fork partner of node n
      break;
    case Family::Ct:
      set_label(1, 2, 4);
      for (int i = 2; i < n; ++i) set_label(i, i + 1, 3);
      set_label(n, n + 1, 4);
      break;
    case Family::Dt:
      if (n == 3) {
        // 4-cycle 1-3-2-4-1
        set_label(1, 3, 3);
        set_label(2, 3, 3);
        set_label(1, 4, 3);
        set_label(2, 4, 3);
      } else {
        set_label(1, 3, 3);
        set_label(2, 3, 3);
        for (int i = 3; i < n - 1; ++i) set_label(i, i + 1, 3);
        set_label(n - 1, n, 3);
        set_label(n - 1, n + 1, 3);
      }
      break;
  }
}

void CoxeterDiagram::set_label(int i, int j, int m) {
  m_[(i - 1) * nodes_ + (j - 1)] = m;
  m_[(j - 1) * nodes_ + (i - 1)] = m;
}

int CoxeterDiagram::label(int i, int j) const {
  if (i < 1 || j < 1 || i > nodes_ || j > nodes_ || i == j)
    throw std::invalid_argument("bad node pair");
  return m_[(i - 1) * nodes_ + (j - 1)];
}

int CoxeterDiagram::strands() const {
  switch (family_) {
    case Family::A:
    case Family::At: return rank_ + 1;
    default: return rank_;
  }
}

OrbifoldSignature CoxeterDiagram::signature() const {
  const int n = strands();
  switch (family_) {
    case Family::A: return {n, std::nullopt, std::nullopt};
    case Family::B: return {n, puncture(), std::nullopt};
    case Family::D: return {n, cone(2), std::nullopt};
    case Family::At: return {n, puncture(), std::nullopt};
    case Family::Bt: return {n, puncture(), cone(2)};
    case Family::Ct: return {n, puncture(), puncture()};
    case Family::Dt: return {n, cone(2), cone(2)};
  }
  throw std::logic_error("unreachable");
}

std::vector<std::array<int, 3>> CoxeterDiagram::edges() const {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= nodes_; ++i)
    for (int j = i + 1; j <= nodes_; ++j)
      if (label(i, j) >= 3) out.push_back({i, j, label(i, j)});
  return out;
}

std::string CoxeterDiagram::name() const { return family_name(family_) + std::to_string(rank_); }

std::string CoxeterDiagram::to_json() const {
  std::ostringstream out;
  out << "{\"family\":\"" << family_name(family_) << "\",\"n\":" << rank_ << ",\"edges\":[";
  bool first = true;
  for (const auto& e : edges()) {
    if (!first) out << ",";
    first = false;
    out << "[" << e[0] << "," << e[1] << "," << e[2] << "]";
  }
  out << "]}";
  return out.str();
}

CoxeterDiagram classical_diagram(Family family, int rank) { return {family, rank}; }

CoxeterDiagram parse_diagram(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && !std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == 0 || i == text.size())
    throw std::invalid_argument("bad diagram name: " + text + " (expected e.g. D4 or Dt5)");
  Family f = parse_family(text.substr(0, i));
  int rank = std::stoi(text.substr(i));
  return classical_diagram(f, rank);
}

ArtinWord artin_inverse(const ArtinWord& w) {
  ArtinWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->gen, -it->sign});
  return out;
}

ArtinWord artin_concat(const ArtinWord& a, const ArtinWord& b) {
  ArtinWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

ArtinWord artin_free_reduce(const ArtinWord& w) {
  ArtinWord out;
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen &&
        out.letters.back().sign == -l.sign)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

std::string to_string(const ArtinWord& w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += "g" + std::to_string(w.letters[i].gen);
    if (w.letters[i].sign < 0) s += "'";
  }
  return s;
}

ArtinWord parse_artin_word(int generator_count, const std::string& text) {
  ArtinWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok.size() > 1 && tok.back() == '\'') {
      sign = -1;
      tok.pop_back();
    }
    if (tok.size() < 2 || tok[0] != 'g') throw std::invalid_argument("bad letter: " + tok);
    int gen = std::stoi(tok.substr(1));
    if (gen < 1 || gen > generator_count)
      throw std::invalid_argument("generator out of range: " + tok);
    w.letters.push_back({gen, sign});
  }
  return w;
}

ArtinPresentation artin_presentation(const CoxeterDiagram& d) {
  ArtinPresentation p;
  p.generator_count = d.nodes();
  for (int i = 1; i <= d.nodes(); ++i) {
    for (int j = i + 1; j <= d.nodes(); ++j) {
      int m = d.label(i, j);
      ArtinRelation r;
      r.node_i = i;
      r.node_j = j;
      for (int k = 0; k < m; ++k) {
        r.lhs.letters.push_back({k % 2 == 0 ? i : j, 1});
        r.rhs.letters.push_back({k % 2 == 0 ? j : i, 1});
      }
      p.relations.push_back(std::move(r));
    }
  }
  return p;
}

std::vector<std::vector<int>> diagram_isomorphisms(const CoxeterDiagram& d1,
                                                   const CoxeterDiagram& d2) {
  std::vector<std::vector<int>> result;
  if (d1.nodes() != d2.nodes()) return result;
  const int n = d1.nodes();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = i + 1; j <= n && ok; ++j)
        if (d1.label(i, j) != d2.label(perm[i - 1], perm[j - 1])) ok = false;
    if (ok) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace orbibraid
