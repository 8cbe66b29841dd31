#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbibraid {

/// A marked point of the plane orbifold, sitting on one side of the strands.
/// A puncture is a removed point (loops around it have infinite order); a
/// cone point of order p makes a loop around it have order p.
enum class PointKind { puncture, cone };

struct SpecialPoint {
  PointKind kind = PointKind::puncture;
  int order = 0;  // cone order p >= 2; unused for punctures

  bool operator==(const SpecialPoint&) const = default;
};

inline SpecialPoint puncture() { return {PointKind::puncture, 0}; }
inline SpecialPoint cone(int p) { return {PointKind::cone, p}; }

/// n strands in the plane, with at most one special point on each side.
/// Every row of the classical/affine family table is one of these.
struct OrbifoldSignature {
  int strands = 1;
  std::optional<SpecialPoint> left;
  std::optional<SpecialPoint> right;

  bool operator==(const OrbifoldSignature&) const = default;
  void validate() const;
  bool has_left() const { return left.has_value(); }
  bool has_right() const { return right.has_value(); }
};

enum class LetterKind { sigma, loop_left, loop_right };

/// One braid letter: sigma(i) is the positive crossing of strands i,i+1
/// (strand i in front); loop_left / loop_right is one positive
/// (counterclockwise) loop of the outermost strand around that side's point.
struct BraidLetter {
  LetterKind kind = LetterKind::sigma;
  int index = 1;  // sigma only; 1..n-1
  int sign = 1;   // +1 or -1

  bool operator==(const BraidLetter&) const = default;
  BraidLetter inverse() const { return {kind, index, -sign}; }
};

inline BraidLetter sigma(int i, int sign = 1) { return {LetterKind::sigma, i, sign}; }
inline BraidLetter loopL(int sign = 1) { return {LetterKind::loop_left, 0, sign}; }
inline BraidLetter loopR(int sign = 1) { return {LetterKind::loop_right, 0, sign}; }

struct BraidWord {
  OrbifoldSignature sig;
  std::vector<BraidLetter> letters;

  bool operator==(const BraidWord&) const = default;
  size_t size() const { return letters.size(); }
  void validate() const;
};

/// Cancel adjacent inverse pairs and reduce runs of cone loops into the
/// exponent range 0..p-1 (so tau^-1 becomes tau^(p-1)).  Idempotent.
BraidWord free_reduce(const BraidWord& w);

/// Reverse with flipped signs, then free_reduce.
BraidWord invert(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b, const BraidWord& c);

/// Word syntax: whitespace-separated letters "s3", "s3'", "tL", "tR'".
std::string to_string(const BraidLetter& l);
std::string to_string(const BraidWord& w);
BraidWord parse_word(const OrbifoldSignature& sig, const std::string& text);

/// Signature syntax: "n=4;left=cone2;right=puncture" (sides optional).
std::string to_string(const OrbifoldSignature& sig);
OrbifoldSignature parse_signature(const std::string& text);

/// Total order used for deterministic tie-breaking in searches.
bool lex_less(const std::vector<BraidLetter>& a, const std::vector<BraidLetter>& b);

/// Compact key for hashing reduced words.
std::string word_key(const std::vector<BraidLetter>& letters);

}  // namespace orbibraid
