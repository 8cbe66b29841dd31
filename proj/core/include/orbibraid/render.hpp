#pragma once

#include <string>

#include "orbibraid/words.hpp"

namespace orbibraid {

/// Fixed layout constants; pictures are for inspection, not typesetting.
struct RenderOptions {
  double slot_height = 36;     // vertical space per letter
  double strand_spacing = 28;  // horizontal space between strands
  double point_gap = 34;       // space between a special point and the strands
  double margin = 18;
  double stroke = 1.6;
  double heavy_stroke = 4.0;
  bool labels = true;
};

/// Strands over a downward time axis, special points as heavy vertical
/// lines labeled with the cone order or an infinity sign, crossings with
/// over/under gaps.
std::string render_svg(const BraidWord& w, const RenderOptions& options = {});

/// Three text rows per letter on a fixed character grid.
std::string render_ascii(const BraidWord& w);

}  // namespace orbibraid
