#include "orbibraid/certify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace orbibraid {

namespace {

using Letters = std::vector<BraidLetter>;

// For order-2 cones the inverse loop is the loop itself; rewriting rule
// sides this way keeps them matchable against reduced words.
BraidLetter normalize_letter(const OrbifoldSignature& sig, BraidLetter l) {
  if (l.sign < 0 && l.kind != LetterKind::sigma) {
    const auto& pt = l.kind == LetterKind::loop_left ? sig.left : sig.right;
    if (pt && pt->kind == PointKind::cone && pt->order == 2) l.sign = 1;
  }
  return l;
}

Letters normalize_letters(const OrbifoldSignature& sig, Letters ls) {
  for (auto& l : ls) l = normalize_letter(sig, l);
  return ls;
}

Letters invert_letters(const Letters& ls) {
  Letters out;
  out.reserve(ls.size());
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(it->inverse());
  return out;
}

// relator lhs . rhs^-1 of a relation, sign-normalized, not reduced
Letters relator_of(const OrbifoldPresentation& p, int relation, bool inverted) {
  if (relation < 0 || relation >= static_cast<int>(p.relations.size()))
    throw std::invalid_argument("certificate names an unknown relation");
  const auto& r = p.relations[relation];
  Letters rel = r.lhs;
  Letters inv = invert_letters(r.rhs);
  rel.insert(rel.end(), inv.begin(), inv.end());
  if (inverted) rel = invert_letters(rel);
  return normalize_letters(p.sig, rel);
}

int encode_letter(const BraidLetter& l) {
  int kind = l.kind == LetterKind::sigma ? 0 : (l.kind == LetterKind::loop_left ? 1 : 2);
  return (kind << 9) | (l.index << 1) | (l.sign > 0 ? 1 : 0);
}

Letters reduce_letters(const OrbifoldSignature& sig, Letters ls) {
  return free_reduce({sig, std::move(ls)}).letters;
}

bool is_reduced_letters(const OrbifoldSignature& sig, const Letters& ls) {
  return reduce_letters(sig, ls) == ls;
}

// can a follow b without the pair reducing (valid check when cone orders <= 2)
bool join_ok(const OrbifoldSignature& sig, const BraidLetter& a, const BraidLetter& b) {
  return free_reduce({sig, {a, b}}).letters.size() == 2;
}

Letters splice(const Letters& w, int pos, size_t cut, const Letters& repl) {
  Letters out(w.begin(), w.begin() + pos);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + pos + cut, w.end());
  return out;
}

}  // namespace

RewriteRule make_rule(const OrbifoldPresentation& p, const CertStep& step) {
  Letters rel = relator_of(p, step.relation, step.inverted);
  const int L = static_cast<int>(rel.size());
  if (L == 0) throw std::invalid_argument("certificate step on an empty relator");
  if (step.rotation < 0 || step.rotation >= L)
    throw std::invalid_argument("certificate rotation out of range");
  if (step.split < 0 || step.split > L)
    throw std::invalid_argument("certificate split out of range");
  std::rotate(rel.begin(), rel.begin() + step.rotation, rel.end());
  RewriteRule rule;
  rule.from.assign(rel.begin(), rel.begin() + step.split);
  rule.to = normalize_letters(p.sig, invert_letters(Letters(rel.begin() + step.split, rel.end())));
  rule.descriptor = step;
  return rule;
}

std::string to_string(const CertStep& s, const OrbifoldPresentation& p) {
  if (s.kind == CertStep::Kind::reduce) return "reduce";
  std::ostringstream out;
  out << p.relations[s.relation].name << (s.inverted ? "~" : "") << " rot " << s.rotation
      << " split " << s.split << " at " << s.position;
  return out.str();
}

std::string to_string(const Certificate& c, const OrbifoldPresentation& p) {
  std::string out;
  for (size_t i = 0; i < c.steps.size(); ++i) {
    if (i) out += "; ";
    out += to_string(c.steps[i], p);
  }
  return out;
}

BraidWord replay_certificate(const BraidWord& w, const Certificate& cert,
                             const OrbifoldPresentation& p) {
  BraidWord cur = free_reduce(w);
  for (const auto& step : cert.steps) {
    if (step.kind == CertStep::Kind::reduce) {
      cur = free_reduce(cur);
      continue;
    }
    RewriteRule rule = make_rule(p, step);
    if (step.position < 0 ||
        step.position + rule.from.size() > cur.letters.size())
      throw std::invalid_argument("certificate step position out of range");
    for (size_t k = 0; k < rule.from.size(); ++k)
      if (!(cur.letters[step.position + k] == rule.from[k]))
        throw std::invalid_argument("certificate step does not match the word");
    Letters next(cur.letters.begin(), cur.letters.begin() + step.position);
    next.insert(next.end(), rule.to.begin(), rule.to.end());
    next.insert(next.end(), cur.letters.begin() + step.position + rule.from.size(),
                cur.letters.end());
    cur.letters = std::move(next);
    cur = free_reduce(cur);
  }
  return cur;
}

bool check_certificate(const BraidWord& w, const Certificate& cert,
                       const OrbifoldPresentation& p) {
  return replay_certificate(w, cert, p).letters.empty();
}

namespace {

struct LetterTrie {
  struct Node {
    std::map<int, int> next;
    std::vector<int> ids_here;
  };
  std::vector<Node> nodes{1};

  void add(const Letters& word, int id) {
    int cur = 0;
    for (const auto& l : word) {
      int code = encode_letter(l);
      auto it = nodes[cur].next.find(code);
      if (it == nodes[cur].next.end()) {
        nodes.push_back({});
        it = nodes[cur].next.emplace(code, static_cast<int>(nodes.size()) - 1).first;
      }
      cur = it->second;
    }
    nodes[cur].ids_here.push_back(id);
  }

  // visit(id, pos, match_len) for every stored word matching w at pos
  template <typename F>
  void scan(const Letters& w, int pos, F&& visit) const {
    int cur = 0;
    for (int k = pos; k <= static_cast<int>(w.size()); ++k) {
      for (int id : nodes[cur].ids_here) visit(id, pos, k - pos);
      if (k == static_cast<int>(w.size())) break;
      auto it = nodes[cur].next.find(encode_letter(w[k]));
      if (it == nodes[cur].next.end()) break;
      cur = it->second;
    }
  }
};

struct CompiledRules {
  std::vector<RewriteRule> rules;
  std::vector<bool> counted;        // braid-type rules count toward depth;
                                    // commutation shuffles are bookkeeping
  LetterTrie from_trie;             // forward matching
  LetterTrie to_trie;               // backward matching, nonempty to only
  std::vector<int> empty_to_rules;  // full-relator deletions
};

CompiledRules compile_rules(const OrbifoldPresentation& p, int rule_growth) {
  CompiledRules out;
  std::set<std::pair<std::string, std::string>> seen;
  for (int rel = 0; rel < static_cast<int>(p.relations.size()); ++rel) {
    for (bool inverted : {false, true}) {
      Letters relator = relator_of(p, rel, inverted);
      BraidWord reduced = free_reduce({p.sig, relator});
      if (reduced.letters.empty() && relator.size() <= 2) continue;  // torsion relators
      const int L = static_cast<int>(relator.size());
      // growth of a split-k rule is L - 2k; keep it within rule_growth
      const int min_split = std::max(1, (L - rule_growth + 1) / 2);
      for (int rot = 0; rot < L; ++rot) {
        for (int split = min_split; split <= L; ++split) {
          CertStep step;
          step.kind = CertStep::Kind::apply;
          step.relation = rel;
          step.inverted = inverted;
          step.rotation = rot;
          step.split = split;
          RewriteRule rule = make_rule(p, step);
          if (rule.from == rule.to) continue;
          if (!is_reduced_letters(p.sig, rule.from)) continue;
          auto key = std::pair(word_key(rule.from), word_key(rule.to));
          if (!seen.insert(key).second) continue;
          out.rules.push_back(rule);
        }
      }
    }
  }
  for (int i = 0; i < static_cast<int>(out.rules.size()); ++i) {
    out.from_trie.add(out.rules[i].from, i);
    if (out.rules[i].to.empty())
      out.empty_to_rules.push_back(i);
    else
      out.to_trie.add(out.rules[i].to, i);
  }
  return out;
}

struct NodeInfo {
  Letters word;
  int depth = 0;
  std::string parent;
  CertStep step;  // step that produced this node (forward) / leads to parent (backward)
};

std::vector<BraidLetter> signed_alphabet(const OrbifoldSignature& sig) {
  std::vector<BraidLetter> out;
  for (int i = 1; i <= sig.strands - 1; ++i) {
    out.push_back(sigma(i, 1));
    out.push_back(sigma(i, -1));
  }
  if (sig.left) {
    out.push_back(loopL(1));
    if (!(sig.left->kind == PointKind::cone && sig.left->order == 2)) out.push_back(loopL(-1));
  }
  if (sig.right) {
    out.push_back(loopR(1));
    if (!(sig.right->kind == PointKind::cone && sig.right->order == 2)) out.push_back(loopR(-1));
  }
  return out;
}

}  // namespace

std::optional<Certificate> find_triviality_certificate(const BraidWord& w, int max_depth,
                                                       const SearchLimits& limits) {
  w.validate();
  OrbifoldPresentation pres = orbifold_presentation(w.sig);
  CompiledRules sys = compile_rules(pres, limits.rule_growth);
  const auto& sig = w.sig;

  BraidWord start = free_reduce(w);
  Certificate base;
  base.steps.push_back({});  // leading reduce marker
  if (start.letters.empty()) return base;
  if (max_depth <= 0) return std::nullopt;

  const size_t len_cap =
      start.letters.size() + static_cast<size_t>(limits.backward_length_margin);
  const std::vector<BraidLetter> alphabet = signed_alphabet(sig);

  std::unordered_map<std::string, NodeInfo> backward;
  std::unordered_map<std::string, NodeInfo> forward;
  const std::string start_key = word_key(start.letters);

  auto build_certificate = [&](const std::string& meet_key) {
    Certificate cert = base;
    std::vector<CertStep> fwd_steps;
    for (std::string k = meet_key; k != start_key;) {
      const auto& info = forward[k];
      fwd_steps.push_back(info.step);
      k = info.parent;
    }
    std::reverse(fwd_steps.begin(), fwd_steps.end());
    for (auto& s : fwd_steps) cert.steps.push_back(s);
    for (std::string k = meet_key; !k.empty();) {
      const auto& info = backward[k];
      cert.steps.push_back(info.step);
      k = info.parent;
    }
    return cert;
  };

  // Weighted best-first forward rewrite search; meets the backward set
  // when one was built.  Returns the meeting key.
  auto run_forward = [&](long budget) -> std::optional<std::string> {
    forward.clear();
    using PqItem = std::tuple<long, size_t, int, std::string>;  // f, len, depth, key
    std::set<PqItem> pq;
    forward.emplace(start_key, NodeInfo{start.letters, 0, "", {}});
    pq.insert({static_cast<long>(start.letters.size()) * 4, start.letters.size(), 0,
               start_key});
    if (backward.count(start_key)) return start_key;
    long expanded = 0;
    while (!pq.empty()) {
      auto [f, len, depth, key] = *pq.begin();
      pq.erase(pq.begin());
      if (++expanded > budget) break;
      Letters cur = forward[key].word;
      if (depth >= max_depth) continue;
      std::optional<std::string> found;
      for (int pos = 0; pos < static_cast<int>(cur.size()) && !found; ++pos) {
        sys.from_trie.scan(cur, pos, [&](int rid, int p, int) {
          if (found) return;
          const auto& rule = sys.rules[rid];
          Letters next = reduce_letters(sig, splice(cur, p, rule.from.size(), rule.to));
          std::string nk = word_key(next);
          if (forward.count(nk)) return;
          if (static_cast<long>(forward.size()) >= limits.forward_store && !next.empty())
            return;
          CertStep step = rule.descriptor;
          step.position = p;
          forward.emplace(nk, NodeInfo{next, depth + 1, key, step});
          if (next.empty() || backward.count(nk)) {
            found = nk;
            return;
          }
          if (depth + 1 < max_depth)
            pq.insert({static_cast<long>(next.size()) * 4 + (depth + 1), next.size(),
                       depth + 1, nk});
        });
      }
      if (found) return found;
    }
    return std::nullopt;
  };

  // phase 1: pure forward with a modest budget settles the common cases
  const long phase1 = std::min<long>(limits.forward_nodes, 6000);
  if (auto meet = run_forward(phase1)) return build_certificate(*meet);

  // ---- backward: grow provably-trivial words from the empty word ----
  backward.emplace("", NodeInfo{});
  {
    std::vector<std::string> frontier{""};
    long expanded = 0;
    bool out_of_budget = false;
    for (int depth = 1; depth <= max_depth && !frontier.empty() && !out_of_budget;
         ++depth) {
      std::vector<std::string> next_frontier;
      for (const auto& key : frontier) {
        if (++expanded > limits.backward_nodes ||
            static_cast<long>(backward.size()) > limits.backward_store) {
          out_of_budget = true;
          break;
        }
        Letters t = backward[key].word;
        auto consider = [&](const Letters& z, int rule_id, int pos) {
          const auto& rule = sys.rules[rule_id];
          if (static_cast<long>(backward.size()) > limits.backward_store) return;
          // boundary prefilter: the replacement must join its neighbors
          if (!rule.from.empty()) {
            if (pos > 0 && !join_ok(sig, z[pos - 1], rule.from.front())) return;
            size_t after = pos + rule.to.size();
            if (after < z.size() && !join_ok(sig, rule.from.back(), z[after])) return;
          }
          Letters cand = splice(z, pos, rule.to.size(), rule.from);
          if (cand.size() > len_cap) return;
          if (!is_reduced_letters(sig, cand)) return;
          std::string ck = word_key(cand);
          if (backward.count(ck)) return;
          CertStep step = rule.descriptor;
          step.position = pos;
          backward.emplace(ck, NodeInfo{cand, depth, key, step});
          next_frontier.push_back(ck);
        };
        // inverse rule applications on t itself
        for (int pos = 0; pos <= static_cast<int>(t.size()); ++pos) {
          for (int rid : sys.empty_to_rules) consider(t, rid, pos);
          if (pos < static_cast<int>(t.size()))
            sys.to_trie.scan(t, pos, [&](int rid, int p, int mlen) {
              if (static_cast<size_t>(mlen) == sys.rules[rid].to.size()) consider(t, rid, p);
            });
        }
        // one cancelling pair inserted, then an inverse application across it
        for (int q = 0; q <= static_cast<int>(t.size()); ++q) {
          for (const auto& l : alphabet) {
            Letters z = t;
            z.insert(z.begin() + q, {l, normalize_letter(sig, l.inverse())});
            for (int pos = std::max(0, q - 7); pos <= q + 1 && pos < static_cast<int>(z.size());
                 ++pos) {
              sys.to_trie.scan(z, pos, [&](int rid, int p, int mlen) {
                const int to_len = static_cast<int>(sys.rules[rid].to.size());
                if (mlen != to_len) return;
                if (p + to_len <= q || p > q + 1) return;  // must overlap the pair
                consider(z, rid, p);
              });
            }
          }
        }
      }
      frontier = std::move(next_frontier);
    }
  }

  // phase 2: full forward budget against the backward set
  if (auto meet = run_forward(limits.forward_nodes)) return build_certificate(*meet);
  return std::nullopt;
}

}  // namespace orbibraid
