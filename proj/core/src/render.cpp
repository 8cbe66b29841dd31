#include "orbibraid/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace orbibraid {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string point_label(const SpecialPoint& p) {
  return p.kind == PointKind::puncture ? "\xE2\x88\x9E" : std::to_string(p.order);
}

}  // namespace

std::string render_svg(const BraidWord& w, const RenderOptions& opt) {
  w.validate();
  const int n = w.sig.strands;
  const int slots = static_cast<int>(w.letters.size());
  const double x_left_pt = opt.margin;
  const double x_first = opt.margin + (w.sig.left ? opt.point_gap : 0);
  const double x_right_pt = x_first + (n - 1) * opt.strand_spacing +
                            (w.sig.right ? opt.point_gap : 0);
  const double width = x_right_pt + opt.margin;
  const double height = 2 * opt.margin + std::max(1, slots) * opt.slot_height;
  auto strand_x = [&](int pos) { return x_first + (pos - 1) * opt.strand_spacing; };

  // polyline per strand; loops and crossings emit curved segments split
  // into back parts (behind a heavy line or under a crossing) and front
  std::vector<int> at(n + 1);  // strand sitting at each position
  for (int i = 1; i <= n; ++i) at[i] = i;
  std::vector<std::string> back_paths, front_paths;
  std::vector<double> cur_y(n + 1, opt.margin);  // per position
  std::ostringstream verticals;                  // straight runs
  auto vertical = [&](int pos, double y0, double y1) {
    if (y1 <= y0) return;
    verticals << "  <line x1=\"" << fmt(strand_x(pos)) << "\" y1=\"" << fmt(y0)
              << "\" x2=\"" << fmt(strand_x(pos)) << "\" y2=\"" << fmt(y1)
              << "\" class=\"strand\"/>\n";
  };

  double y = opt.margin;
  for (const auto& l : w.letters) {
    double y0 = y, y1 = y + opt.slot_height;
    if (l.kind == LetterKind::sigma) {
      int i = l.index;
      for (int pos = 1; pos <= n; ++pos)
        if (pos != i && pos != i + 1) vertical(pos, cur_y[pos], y1), cur_y[pos] = y1;
      vertical(i, cur_y[i], y0);
      vertical(i + 1, cur_y[i + 1], y0);
      cur_y[i] = cur_y[i + 1] = y1;
      double xa = strand_x(i), xb = strand_x(i + 1);
      std::string down = "M " + fmt(xa) + " " + fmt(y0) + " C " + fmt(xa) + " " +
                         fmt(y0 + opt.slot_height / 2) + ", " + fmt(xb) + " " +
                         fmt(y0 + opt.slot_height / 2) + ", " + fmt(xb) + " " + fmt(y1);
      std::string up = "M " + fmt(xb) + " " + fmt(y0) + " C " + fmt(xb) + " " +
                       fmt(y0 + opt.slot_height / 2) + ", " + fmt(xa) + " " +
                       fmt(y0 + opt.slot_height / 2) + ", " + fmt(xa) + " " + fmt(y1);
      // positive crossing: the strand moving right passes in front
      if (l.sign > 0) {
        back_paths.push_back(up);
        front_paths.push_back(down);
      } else {
        back_paths.push_back(down);
        front_paths.push_back(up);
      }
      std::swap(at[i], at[i + 1]);
    } else {
      bool left = l.kind == LetterKind::loop_left;
      int pos = left ? 1 : n;
      for (int p = 1; p <= n; ++p)
        if (p != pos) vertical(p, cur_y[p], y1), cur_y[p] = y1;
      vertical(pos, cur_y[pos], y0);
      cur_y[pos] = y1;
      double xs = strand_x(pos);
      double xp = left ? x_left_pt : x_right_pt;
      double xo = left ? xp - opt.point_gap * 0.35 : xp + opt.point_gap * 0.35;
      double ym = y0 + opt.slot_height / 2;
      // out to the far side of the point, around it, and back
      std::string outward = "M " + fmt(xs) + " " + fmt(y0) + " C " + fmt(xs) + " " +
                            fmt(ym) + ", " + fmt(xo) + " " + fmt(y0) + ", " + fmt(xo) +
                            " " + fmt(ym);
      std::string inward = "M " + fmt(xo) + " " + fmt(ym) + " C " + fmt(xo) + " " +
                           fmt(y1) + ", " + fmt(xs) + " " + fmt(ym) + ", " + fmt(xs) +
                           " " + fmt(y1);
      // positive loop: behind on the way out, in front coming back
      if (l.sign > 0) {
        back_paths.push_back(outward);
        front_paths.push_back(inward);
      } else {
        back_paths.push_back(inward);
        front_paths.push_back(outward);
      }
    }
    y = y1;
  }
  if (slots == 0) y += opt.slot_height;
  for (int pos = 1; pos <= n; ++pos) vertical(pos, cur_y[pos], y);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
      << fmt(height) << "\">\n";
  out << "  <style>.strand{stroke:#000;fill:none;stroke-width:" << fmt(opt.stroke)
      << "}.casing{stroke:#fff;fill:none;stroke-width:" << fmt(opt.stroke * 3.5)
      << "}.heavy{stroke:#000;stroke-width:" << fmt(opt.heavy_stroke)
      << "}.lbl{font:12px sans-serif}</style>\n";
  for (const auto& p : back_paths) out << "  <path d=\"" << p << "\" class=\"strand\"/>\n";
  auto heavy_line = [&](double x, const SpecialPoint& pt) {
    out << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(opt.margin / 2) << "\" x2=\""
        << fmt(x) << "\" y2=\"" << fmt(height - opt.margin / 2) << "\" class=\"heavy\"/>\n";
    if (opt.labels)
      out << "  <text x=\"" << fmt(x + 4) << "\" y=\"" << fmt(opt.margin)
          << "\" class=\"lbl\">" << point_label(pt) << "</text>\n";
  };
  if (w.sig.left) heavy_line(x_left_pt, *w.sig.left);
  if (w.sig.right) heavy_line(x_right_pt, *w.sig.right);
  out << verticals.str();
  for (const auto& p : front_paths) {
    out << "  <path d=\"" << p << "\" class=\"casing\"/>\n";
    out << "  <path d=\"" << p << "\" class=\"strand\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const BraidWord& w) {
  w.validate();
  const int n = w.sig.strands;
  const int colw = 4;
  const int left_cols = w.sig.left ? colw : 0;
  auto strand_col = [&](int pos) { return left_cols + (pos - 1) * colw + 1; };
  const int width = left_cols + (n - 1) * colw + 2 + (w.sig.right ? colw : 0);
  const int right_col = width - 1;

  std::vector<std::string> rows;
  auto blank_row = [&]() {
    std::string r(width + 1, ' ');
    if (w.sig.left) r[0] = '#';
    if (w.sig.right) r[right_col] = '#';
    return r;
  };
  // header with point labels
  {
    std::string r(width + 1, ' ');
    auto put = [&](int col, const std::string& s) {
      for (size_t k = 0; k < s.size() && col + k <= static_cast<size_t>(width); ++k)
        r[col + k] = s[k];
    };
    if (w.sig.left)
      put(0, w.sig.left->kind == PointKind::puncture ? "oo" : std::to_string(w.sig.left->order));
    if (w.sig.right)
      put(right_col - 1,
          w.sig.right->kind == PointKind::puncture ? "oo" : std::to_string(w.sig.right->order));
    rows.push_back(r);
  }

  for (const auto& l : w.letters) {
    std::string r0 = blank_row(), r1 = blank_row(), r2 = blank_row();
    for (int p = 1; p <= n; ++p) r0[strand_col(p)] = r1[strand_col(p)] = r2[strand_col(p)] = '|';
    if (l.kind == LetterKind::sigma) {
      int a = strand_col(l.index), b = strand_col(l.index + 1);
      int mid = (a + b) / 2;
      r0[a] = ' '; r0[b] = ' '; r1[a] = ' '; r1[b] = ' '; r2[a] = ' '; r2[b] = ' ';
      r0[a + 1] = '\\';
      r0[b - 1] = '/';
      r1[mid] = l.sign > 0 ? '\\' : '/';
      r2[a + 1] = '/';
      r2[b - 1] = '\\';
    } else {
      bool left = l.kind == LetterKind::loop_left;
      int c = strand_col(left ? 1 : n);
      int pt = left ? 0 : right_col;
      int step = left ? -1 : 1;
      r0[c] = ' '; r1[c] = ' '; r2[c] = ' ';
      r0[c + step] = left ? '/' : '\\';
      r1[pt - step] = l.sign > 0 ? (left ? '(' : ')') : (left ? '<' : '>');
      r2[c + step] = left ? '\\' : '/';
    }
    rows.push_back(r0);
    rows.push_back(r1);
    rows.push_back(r2);
  }
  if (w.letters.empty()) {
    std::string r = blank_row();
    for (int p = 1; p <= n; ++p) r[strand_col(p)] = '|';
    rows.push_back(r);
  }

  std::string out;
  for (auto& r : rows) {
    while (!r.empty() && r.back() == ' ') r.pop_back();
    out += r;
    out += '\n';
  }
  return out;
}

}  // namespace orbibraid
