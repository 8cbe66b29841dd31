#include "orbibraid/action.hpp"

#include <algorithm>
#include <sstream>

namespace orbibraid {

FPGroup::FPGroup(const OrbifoldSignature& sig) : sig_(sig) { sig_.validate(); }

int FPGroup::torsion(int gen) const {
  const std::optional<SpecialPoint>* pt = nullptr;
  if (gen == 0) pt = &sig_.left;
  else if (gen == sig_.strands + 1) pt = &sig_.right;
  else if (gen >= 1 && gen <= sig_.strands) return 0;
  else throw std::invalid_argument("unknown generator id");
  if (!pt->has_value()) throw std::invalid_argument("generator not present in signature");
  return (*pt)->kind == PointKind::cone ? (*pt)->order : 0;
}

std::vector<int> FPGroup::generators() const {
  std::vector<int> out;
  if (has_aL()) out.push_back(0);
  for (int i = 1; i <= sig_.strands; ++i) out.push_back(i);
  if (has_aR()) out.push_back(sig_.strands + 1);
  return out;
}

std::string FPGroup::gen_name(int gen) const {
  if (gen == 0) return "aL";
  if (gen == sig_.strands + 1) return "aR";
  return "x" + std::to_string(gen);
}

namespace {

long norm_exp(const FPGroup& g, int gen, long e) {
  int p = g.torsion(gen);
  if (p > 0) {
    e %= p;
    if (e < 0) e += p;
  }
  return e;
}

void push_syllable(const FPGroup& g, std::vector<FPSyllable>& out, int gen, long exp) {
  if (!out.empty() && out.back().gen == gen) {
    long e = norm_exp(g, gen, out.back().exp + exp);
    out.pop_back();
    if (e != 0) out.push_back({gen, e});
    return;
  }
  long e = norm_exp(g, gen, exp);
  if (e != 0) out.push_back({gen, e});
}

}  // namespace

FPWord fp_normal_form(const FPGroup& g, const FPWord& w) {
  FPWord out;
  for (const auto& s : w.syllables) {
    // pushing may expose a new merge with the previous syllable
    if (!out.syllables.empty() && out.syllables.back().gen == s.gen) {
      push_syllable(g, out.syllables, s.gen, s.exp);
    } else {
      long e = norm_exp(g, s.gen, s.exp);
      if (e != 0) out.syllables.push_back({s.gen, e});
    }
    // a vanished syllable can make its neighbors adjacent; fix the tail
    while (out.syllables.size() >= 2) {
      auto& a = out.syllables[out.syllables.size() - 2];
      auto& b = out.syllables.back();
      if (a.gen != b.gen) break;
      long e = norm_exp(g, a.gen, a.exp + b.exp);
      out.syllables.pop_back();
      out.syllables.pop_back();
      if (e != 0) out.syllables.push_back({a.gen, e});
    }
  }
  return out;
}

FPWord fp_mul(const FPGroup& g, const FPWord& a, const FPWord& b) {
  FPWord c;
  c.syllables = a.syllables;
  c.syllables.insert(c.syllables.end(), b.syllables.begin(), b.syllables.end());
  return fp_normal_form(g, c);
}

FPWord fp_inverse(const FPGroup& g, const FPWord& w) {
  FPWord out;
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    out.syllables.push_back({it->gen, -it->exp});
  return fp_normal_form(g, out);
}

FPWord fp_gen(int gen, long exp) { return FPWord{{{gen, exp}}}; }

FPWord fp_conj(const FPGroup& g, const FPWord& c, const FPWord& w) {
  return fp_mul(g, fp_mul(g, c, w), fp_inverse(g, c));
}

std::string to_string(const FPGroup& g, const FPWord& w) {
  if (w.syllables.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.syllables.size(); ++i) {
    if (i) s += ' ';
    s += g.gen_name(w.syllables[i].gen);
    long e = w.syllables[i].exp;
    if (e == -1) s += "'";
    else if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

FPWord parse_fp_word(const FPGroup& g, const std::string& text) {
  FPWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      exp = std::stol(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    } else if (tok.size() > 1 && tok.back() == '\'') {
      exp = -1;
      tok.pop_back();
    }
    int gen;
    if (tok == "aL") gen = g.aL();
    else if (tok == "aR") gen = g.aR();
    else if (tok.size() >= 2 && tok[0] == 'x') gen = std::stoi(tok.substr(1));
    else throw std::invalid_argument("bad fp letter: " + tok);
    g.torsion(gen);  // validates presence
    w.syllables.push_back({gen, exp});
  }
  return fp_normal_form(g, w);
}

FPWord conjugacy_class_rep(const FPGroup& g, const FPWord& w) {
  FPWord u = fp_normal_form(g, w);
  // cyclic reduction: merge matching first/last syllables into the tail
  while (u.syllables.size() >= 2 && u.syllables.front().gen == u.syllables.back().gen) {
    FPSyllable head = u.syllables.front();
    FPSyllable tail = u.syllables.back();
    u.syllables.erase(u.syllables.begin());
    u.syllables.pop_back();
    long e = norm_exp(g, head.gen, tail.exp + head.exp);
    if (e != 0) u.syllables.push_back({head.gen, e});
  }
  if (u.syllables.size() <= 1) return u;
  // minimal rotation
  auto serialize = [&](const std::vector<FPSyllable>& ss) {
    std::string key;
    for (const auto& s : ss) key += std::to_string(s.gen) + ":" + std::to_string(s.exp) + ";";
    return key;
  };
  std::vector<FPSyllable> best = u.syllables;
  std::string best_key = serialize(best);
  std::vector<FPSyllable> rot = u.syllables;
  for (size_t k = 1; k < u.syllables.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    std::string key = serialize(rot);
    if (key < best_key) {
      best_key = key;
      best = rot;
    }
  }
  return FPWord{best};
}

bool fp_conjugate(const FPGroup& g, const FPWord& u, const FPWord& v) {
  return conjugacy_class_rep(g, u) == conjugacy_class_rep(g, v);
}

BraidAction identity_action(const FPGroup& g) {
  BraidAction a;
  a.images.resize(g.strand_count() + 2);
  for (int gen : g.generators()) a.images[gen] = fp_gen(gen);
  return a;
}

FPWord act(const FPGroup& g, const BraidAction& a, const FPWord& w) {
  FPWord out;
  for (const auto& s : w.syllables) {
    FPWord img = a.image(s.gen);
    if (s.exp < 0) img = fp_inverse(g, img);
    long reps = s.exp < 0 ? -s.exp : s.exp;
    for (long k = 0; k < reps; ++k) out = fp_mul(g, out, img);
  }
  return out;
}

BraidAction compose(const FPGroup& g, const BraidAction& first, const BraidAction& second) {
  BraidAction out;
  out.images.resize(first.images.size());
  for (int gen : g.generators()) out.images[gen] = act(g, second, first.image(gen));
  return out;
}

bool action_equal(const FPGroup& g, const BraidAction& a, const BraidAction& b) {
  for (int gen : g.generators())
    if (!(a.image(gen) == b.image(gen))) return false;
  return true;
}

namespace {

void check_letter_action(const FPGroup& g, const BraidAction& a) {
  // x images conjugate to x's, loop generators to themselves
  for (int gen : g.generators()) {
    FPWord rep = conjugacy_class_rep(g, a.image(gen));
    if (rep.syllables.size() != 1 || rep.syllables[0].exp != 1)
      throw std::logic_error("letter action image is not a conjugated generator");
    int target = rep.syllables[0].gen;
    bool is_x = gen >= 1 && gen <= g.strand_count();
    bool target_x = target >= 1 && target <= g.strand_count();
    if (is_x != target_x || (!is_x && target != gen))
      throw std::logic_error("letter action mixes loop and strand generators");
  }
  // boundary product preserved exactly
  FPWord boundary, image;
  for (int gen : g.generators()) boundary = fp_mul(g, boundary, fp_gen(gen));
  image = act(g, a, boundary);
  if (!(image == boundary)) throw std::logic_error("letter action moves the boundary product");
}

}  // namespace

BraidAction generator_action(const FPGroup& g, const BraidLetter& l) {
  BraidAction a = identity_action(g);
  const int n = g.strand_count();
  auto conj_pair = [&](int u, int v, bool inverse) {
    // conjugate the generators u, v by (u v) resp. its inverse
    FPWord c = fp_mul(g, fp_gen(u), fp_gen(v));
    if (inverse) c = fp_inverse(g, c);
    a.images[u] = fp_conj(g, c, fp_gen(u));
    a.images[v] = fp_conj(g, c, fp_gen(v));
  };
  switch (l.kind) {
    case LetterKind::sigma: {
      int i = l.index;
      if (l.sign > 0) {
        a.images[i] = fp_mul(g, fp_mul(g, fp_gen(i), fp_gen(i + 1)), fp_gen(i, -1));
        a.images[i + 1] = fp_gen(i);
      } else {
        a.images[i] = fp_gen(i + 1);
        a.images[i + 1] = fp_mul(g, fp_mul(g, fp_gen(i + 1, -1), fp_gen(i)), fp_gen(i + 1));
      }
      break;
    }
    case LetterKind::loop_left:
      conj_pair(g.aL(), g.x(1), l.sign < 0);
      break;
    case LetterKind::loop_right:
      conj_pair(g.x(n), g.aR(), l.sign < 0);
      break;
  }
  check_letter_action(g, a);
  return a;
}

BraidAction braid_action(const FPGroup& g, const BraidWord& w) {
  w.validate();
  BraidAction acc = identity_action(g);
  for (const auto& l : w.letters) acc = compose(g, acc, generator_action(g, l));
  return acc;
}

OutClass braid_to_outclass(const FPGroup& g, const BraidWord& w) {
  BraidAction a = braid_action(g, w);
  OutClass out;
  out.class_reps.resize(a.images.size());
  std::string key;
  for (int gen : g.generators()) {
    out.class_reps[gen] = conjugacy_class_rep(g, a.image(gen));
    key += g.gen_name(gen) + "->";
    for (const auto& s : out.class_reps[gen].syllables)
      key += std::to_string(s.gen) + ":" + std::to_string(s.exp) + ",";
    key += "|";
  }
  out.key = std::move(key);
  return out;
}

ActionReport verify_action_relations(const OrbifoldSignature& sig) {
  FPGroup g(sig);
  OrbifoldPresentation pres = orbifold_presentation(sig);
  ActionReport report;
  for (const auto& rel : pres.relations) {
    ActionRelationCheck check;
    check.name = rel.name;
    BraidAction lhs = braid_action(g, {sig, rel.lhs});
    BraidAction rhs = braid_action(g, {sig, rel.rhs});
    check.exact = action_equal(g, lhs, rhs);
    check.class_trivial = true;
    for (int gen : g.generators()) {
      if (!fp_conjugate(g, lhs.image(gen), rhs.image(gen))) check.class_trivial = false;
    }
    bool torsion_relation = rel.name.rfind("R6", 0) == 0;
    if (!(torsion_relation ? check.class_trivial : check.exact)) report.ok = false;
    report.relations.push_back(std::move(check));
  }
  return report;
}

}  // namespace orbibraid
