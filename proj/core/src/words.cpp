#include "orbibraid/words.hpp"

#include <algorithm>
#include <sstream>

namespace orbibraid {

void OrbifoldSignature::validate() const {
  if (strands < 1) throw std::invalid_argument("signature: strand count must be >= 1");
  for (const auto& pt : {left, right}) {
    if (pt && pt->kind == PointKind::cone && pt->order < 2)
      throw std::invalid_argument("signature: cone order must be >= 2");
  }
  if (left && right && strands < 2)
    throw std::invalid_argument("signature: two special points require >= 2 strands");
}

void BraidWord::validate() const {
  sig.validate();
  for (const auto& l : letters) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    switch (l.kind) {
      case LetterKind::sigma:
        if (l.index < 1 || l.index > sig.strands - 1)
          throw std::invalid_argument("sigma index out of range for signature");
        break;
      case LetterKind::loop_left:
        if (!sig.left) throw std::invalid_argument("tL used but no left special point");
        break;
      case LetterKind::loop_right:
        if (!sig.right) throw std::invalid_argument("tR used but no right special point");
        break;
    }
  }
}

namespace {

// Stack entry: either a single sigma letter or a merged run of same-side loops.
struct Run {
  bool is_loop;
  BraidLetter sigma_letter;  // when !is_loop
  LetterKind loop_side;      // when is_loop
  long exp;                  // when is_loop
};

const SpecialPoint& side_point(const OrbifoldSignature& sig, LetterKind side) {
  return side == LetterKind::loop_left ? *sig.left : *sig.right;
}

}  // namespace

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Run> stack;
  auto normalize_exp = [&](LetterKind side, long e) -> long {
    const auto& pt = side_point(w.sig, side);
    if (pt.kind == PointKind::cone) {
      e %= pt.order;
      if (e < 0) e += pt.order;
    }
    return e;
  };
  for (const auto& l : w.letters) {
    if (l.kind == LetterKind::sigma) {
      if (!stack.empty() && !stack.back().is_loop &&
          stack.back().sigma_letter.kind == LetterKind::sigma &&
          stack.back().sigma_letter.index == l.index &&
          stack.back().sigma_letter.sign == -l.sign) {
        stack.pop_back();
      } else {
        stack.push_back({false, l, LetterKind::sigma, 0});
      }
    } else {
      if (!stack.empty() && stack.back().is_loop && stack.back().loop_side == l.kind) {
        stack.back().exp = normalize_exp(l.kind, stack.back().exp + l.sign);
        if (stack.back().exp == 0) stack.pop_back();
      } else {
        long e = normalize_exp(l.kind, l.sign);
        if (e != 0) stack.push_back({true, {}, l.kind, e});
      }
    }
  }
  BraidWord out{w.sig, {}};
  for (const auto& r : stack) {
    if (!r.is_loop) {
      out.letters.push_back(r.sigma_letter);
    } else {
      long e = r.exp;
      int s = e > 0 ? 1 : -1;
      for (long k = 0; k < (e > 0 ? e : -e); ++k)
        out.letters.push_back({r.loop_side, 0, s});
    }
  }
  return out;
}

BraidWord invert(const BraidWord& w) {
  BraidWord out{w.sig, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(it->inverse());
  return free_reduce(out);
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (!(a.sig == b.sig)) throw std::invalid_argument("concat: signatures differ");
  BraidWord out{a.sig, a.letters};
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b, const BraidWord& c) {
  return concat(concat(a, b), c);
}

std::string to_string(const BraidLetter& l) {
  std::string s;
  switch (l.kind) {
    case LetterKind::sigma: s = "s" + std::to_string(l.index); break;
    case LetterKind::loop_left: s = "tL"; break;
    case LetterKind::loop_right: s = "tR"; break;
  }
  if (l.sign < 0) s += "'";
  return s;
}

std::string to_string(const BraidWord& w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w.letters[i]);
  }
  return s;
}

BraidWord parse_word(const OrbifoldSignature& sig, const std::string& text) {
  BraidWord w{sig, {}};
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok.size() > 1 && tok.back() == '\'') {
      sign = -1;
      tok.pop_back();
    }
    if (tok == "tL") {
      w.letters.push_back(loopL(sign));
    } else if (tok == "tR") {
      w.letters.push_back(loopR(sign));
    } else if (tok.size() >= 2 && tok[0] == 's') {
      size_t pos = 0;
      int idx = std::stoi(tok.substr(1), &pos);
      if (pos + 1 != tok.size()) throw std::invalid_argument("bad letter: " + tok);
      w.letters.push_back(sigma(idx, sign));
    } else {
      throw std::invalid_argument("bad letter: " + tok);
    }
  }
  w.validate();
  return w;
}

std::string to_string(const OrbifoldSignature& sig) {
  auto pt = [](const SpecialPoint& p) {
    return p.kind == PointKind::puncture ? std::string("puncture")
                                         : "cone" + std::to_string(p.order);
  };
  std::string s = "n=" + std::to_string(sig.strands);
  if (sig.left) s += ";left=" + pt(*sig.left);
  if (sig.right) s += ";right=" + pt(*sig.right);
  return s;
}

OrbifoldSignature parse_signature(const std::string& text) {
  OrbifoldSignature sig;
  sig.strands = 0;
  std::istringstream in(text);
  std::string field;
  auto parse_point = [](const std::string& v) -> SpecialPoint {
    if (v == "puncture") return puncture();
    if (v.rfind("cone", 0) == 0) return cone(std::stoi(v.substr(4)));
    throw std::invalid_argument("bad special point: " + v);
  };
  while (std::getline(in, field, ';')) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad signature field: " + field);
    std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "n") sig.strands = std::stoi(val);
    else if (key == "left") sig.left = parse_point(val);
    else if (key == "right") sig.right = parse_point(val);
    else throw std::invalid_argument("bad signature key: " + key);
  }
  sig.validate();
  return sig;
}

bool lex_less(const std::vector<BraidLetter>& a, const std::vector<BraidLetter>& b) {
  auto rank = [](const BraidLetter& l) {
    int kind = l.kind == LetterKind::sigma ? 0 : (l.kind == LetterKind::loop_left ? 1 : 2);
    return std::tuple(kind, l.index, l.sign);
  };
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](const BraidLetter& x, const BraidLetter& y) {
                                        return rank(x) < rank(y);
                                      });
}

std::string word_key(const std::vector<BraidLetter>& letters) {
  std::string key;
  key.reserve(letters.size() * 2);
  for (const auto& l : letters) {
    char c;
    switch (l.kind) {
      case LetterKind::sigma: c = static_cast<char>('a' + l.index); break;
      case LetterKind::loop_left: c = 'L'; break;
      default: c = 'R'; break;
    }
    key.push_back(c);
    key.push_back(l.sign > 0 ? '+' : '-');
  }
  return key;
}

}  // namespace orbibraid
