#include "orbibraid/presentation.hpp"

namespace orbibraid {

int OrbifoldPresentation::generator_count() const {
  return (sig.strands - 1) + (sig.left ? 1 : 0) + (sig.right ? 1 : 0);
}

OrbifoldPresentation orbifold_presentation(const OrbifoldSignature& sig) {
  sig.validate();
  OrbifoldPresentation p;
  p.sig = sig;
  const int n = sig.strands;
  auto word = [](std::initializer_list<BraidLetter> ls) {
    return std::vector<BraidLetter>(ls);
  };

  // (R1) distant crossings commute
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      p.relations.push_back({"R1(" + std::to_string(i) + "," + std::to_string(j) + ")",
                             word({sigma(i), sigma(j)}), word({sigma(j), sigma(i)})});
  // (R2) adjacent crossings braid
  for (int i = 1; i <= n - 2; ++i)
    p.relations.push_back({"R2(" + std::to_string(i) + ")",
                           word({sigma(i), sigma(i + 1), sigma(i)}),
                           word({sigma(i + 1), sigma(i), sigma(i + 1)})});
  // (R3) loop letters commute with crossings away from their side
  if (sig.left)
    for (int i = 2; i <= n - 1; ++i)
      p.relations.push_back({"R3L(" + std::to_string(i) + ")",
                             word({loopL(), sigma(i)}), word({sigma(i), loopL()})});
  if (sig.right)
    for (int i = 1; i <= n - 2; ++i)
      p.relations.push_back({"R3R(" + std::to_string(i) + ")",
                             word({loopR(), sigma(i)}), word({sigma(i), loopR()})});
  // (R4) the four-braid relation at each occupied side
  if (sig.left && n >= 2)
    p.relations.push_back({"R4L",
                           word({sigma(1), loopL(), sigma(1), loopL()}),
                           word({loopL(), sigma(1), loopL(), sigma(1)})});
  if (sig.right && n >= 2)
    p.relations.push_back({"R4R",
                           word({sigma(n - 1), loopR(), sigma(n - 1), loopR()}),
                           word({loopR(), sigma(n - 1), loopR(), sigma(n - 1)})});
  // (R5) the two loop letters commute
  if (sig.left && sig.right)
    p.relations.push_back({"R5", word({loopL(), loopR()}), word({loopR(), loopL()})});
  // (R6) cone loops have finite order
  if (sig.left && sig.left->kind == PointKind::cone) {
    OrbifoldRelation r;
    r.name = "R6L";
    for (int k = 0; k < sig.left->order; ++k) r.lhs.push_back(loopL());
    p.relations.push_back(std::move(r));
  }
  if (sig.right && sig.right->kind == PointKind::cone) {
    OrbifoldRelation r;
    r.name = "R6R";
    for (int k = 0; k < sig.right->order; ++k) r.lhs.push_back(loopR());
    p.relations.push_back(std::move(r));
  }
  return p;
}

}  // namespace orbibraid
