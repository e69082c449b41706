#include "orthocap/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace orthocap {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Fixed stroke palette for multi-level contours.
const char* kPalette[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756",
                          "#72b7b2", "#b279a2", "#eeca3b", "#9d755d",
                          "#bab0ac", "#2f2f2f"};

}  // namespace

SvgCanvas::SvgCanvas(Rect world, int pixel_width) : world_(world) {
  world_.require_nonempty();
  if (pixel_width < 16) throw std::invalid_argument("canvas too small");
  width_px_ = pixel_width;
  scale_ = pixel_width / world_.width();
  height_px_ = static_cast<int>(std::lround(world_.height() * scale_));
}

Vec2 SvgCanvas::to_px(Vec2 world) const {
  return {(world.x - world_.xlo) * scale_,
          (world_.yhi - world.y) * scale_};
}

void SvgCanvas::line(Vec2 a, Vec2 b, const std::string& stroke, double width) {
  const Vec2 pa = to_px(a), pb = to_px(b);
  body_.push_back("<line x1=\"" + fmt(pa.x) + "\" y1=\"" + fmt(pa.y) +
                  "\" x2=\"" + fmt(pb.x) + "\" y2=\"" + fmt(pb.y) +
                  "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) +
                  "\"/>");
}

void SvgCanvas::polyline(const std::vector<Vec2>& pts,
                         const std::string& stroke, double width) {
  if (pts.size() < 2) return;
  std::string d = "<polyline fill=\"none\" stroke=\"" + stroke +
                  "\" stroke-width=\"" + fmt(width) + "\" points=\"";
  for (const Vec2& p : pts) {
    const Vec2 px = to_px(p);
    d += fmt(px.x) + "," + fmt(px.y) + " ";
  }
  d += "\"/>";
  body_.push_back(std::move(d));
}

void SvgCanvas::polygon(const std::vector<Vec2>& pts, const std::string& stroke,
                        const std::string& fill, double width) {
  if (pts.size() < 3) return;
  std::string d = "<polygon fill=\"" + fill + "\" stroke=\"" + stroke +
                  "\" stroke-width=\"" + fmt(width) + "\" points=\"";
  for (const Vec2& p : pts) {
    const Vec2 px = to_px(p);
    d += fmt(px.x) + "," + fmt(px.y) + " ";
  }
  d += "\"/>";
  body_.push_back(std::move(d));
}

void SvgCanvas::circle(Vec2 center, double radius, const std::string& stroke,
                       const std::string& fill, double width) {
  const Vec2 c = to_px(center);
  body_.push_back("<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) +
                  "\" r=\"" + fmt(scale_px(radius)) + "\" stroke=\"" + stroke +
                  "\" fill=\"" + fill + "\" stroke-width=\"" + fmt(width) +
                  "\"/>");
}

void SvgCanvas::ellipse(const EllipseBoundary& e, const std::string& stroke,
                        double width) {
  const Vec2 c = to_px(e.center);
  // SVG rotation is clockwise in screen space, matching the flipped y axis.
  const double angle_deg = -e.angle * 180.0 / kPi;
  body_.push_back("<ellipse cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) +
                  "\" rx=\"" + fmt(scale_px(e.semi_major)) + "\" ry=\"" +
                  fmt(scale_px(e.semi_minor)) + "\" transform=\"rotate(" +
                  fmt(angle_deg) + " " + fmt(c.x) + " " + fmt(c.y) +
                  ")\" stroke=\"" + stroke + "\" fill=\"none\" stroke-width=\"" +
                  fmt(width) + "\"/>");
}

void SvgCanvas::dot(Vec2 center, double pixel_radius, const std::string& fill) {
  const Vec2 c = to_px(center);
  body_.push_back("<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) +
                  "\" r=\"" + fmt(pixel_radius) + "\" fill=\"" + fill + "\"/>");
}

void SvgCanvas::cell(Vec2 center, double w, double h, const std::string& fill) {
  const Vec2 tl = to_px({center.x - 0.5 * w, center.y + 0.5 * h});
  body_.push_back("<rect x=\"" + fmt(tl.x) + "\" y=\"" + fmt(tl.y) +
                  "\" width=\"" + fmt(scale_px(w)) + "\" height=\"" +
                  fmt(scale_px(h)) + "\" fill=\"" + fill + "\"/>");
}

std::vector<std::pair<Vec2, Vec2>> contour_segments(const Grid2D& grid,
                                                    double level) {
  std::vector<std::pair<Vec2, Vec2>> segments;
  // Linear interpolation along a cell edge between corner values a and b.
  auto lerp = [&](Vec2 pa, double a, Vec2 pb, double b) {
    const double t = (level - a) / (b - a);
    return Vec2{pa.x + t * (pb.x - pa.x), pa.y + t * (pb.y - pa.y)};
  };

  for (int i = 0; i + 1 < grid.rows; ++i) {
    for (int j = 0; j + 1 < grid.cols; ++j) {
      const Vec2 p00 = grid.world_point(i, j);
      const Vec2 p10 = grid.world_point(i, j + 1);
      const Vec2 p01 = grid.world_point(i + 1, j);
      const Vec2 p11 = grid.world_point(i + 1, j + 1);
      const double v00 = grid.at(i, j), v10 = grid.at(i, j + 1);
      const double v01 = grid.at(i + 1, j), v11 = grid.at(i + 1, j + 1);

      int mask = 0;
      if (v00 >= level) mask |= 1;
      if (v10 >= level) mask |= 2;
      if (v11 >= level) mask |= 4;
      if (v01 >= level) mask |= 8;
      if (mask == 0 || mask == 15) continue;

      // Edge crossings: bottom (00-10), right (10-11), top (01-11),
      // left (00-01).
      const Vec2 eb = lerp(p00, v00, p10, v10);
      const Vec2 er = lerp(p10, v10, p11, v11);
      const Vec2 et = lerp(p01, v01, p11, v11);
      const Vec2 el = lerp(p00, v00, p01, v01);

      switch (mask) {
        case 1: case 14: segments.push_back({el, eb}); break;
        case 2: case 13: segments.push_back({eb, er}); break;
        case 3: case 12: segments.push_back({el, er}); break;
        case 4: case 11: segments.push_back({er, et}); break;
        case 6: case 9:  segments.push_back({eb, et}); break;
        case 7: case 8:  segments.push_back({el, et}); break;
        case 5: case 10: {
          // Saddle; disambiguate with the cell-center average.
          const double center = 0.25 * (v00 + v10 + v01 + v11);
          const bool center_high = center >= level;
          if ((mask == 5) == center_high) {
            segments.push_back({el, et});
            segments.push_back({eb, er});
          } else {
            segments.push_back({el, eb});
            segments.push_back({er, et});
          }
          break;
        }
        default: break;
      }
    }
  }
  return segments;
}

void SvgCanvas::contours(const Grid2D& grid, int n_levels) {
  const auto [lo, hi] = grid.min_max();
  if (!(hi > lo) || n_levels < 1) return;  // constant field: nothing to draw
  for (int k = 0; k < n_levels; ++k) {
    const double level = lo + (hi - lo) * (k + 1.0) / (n_levels + 1.0);
    const auto segs = contour_segments(grid, level);
    const std::string color = kPalette[k % 10];
    for (const auto& [a, b] : segs) line(a, b, color, 0.8);
  }
}

void SvgCanvas::region_mask(const RegionMask& mask, const std::string& fill) {
  for (int i2 = -mask.half_ny; i2 <= mask.half_ny; ++i2)
    for (int i1 = -mask.half_nx; i1 <= mask.half_nx; ++i1)
      if (mask.cell(i1, i2))
        cell(mask.cell_point(i1, i2), mask.dx, mask.dy, fill);
}

void SvgCanvas::circles(const std::vector<Circle>& cs,
                        const std::string& stroke, bool mark_centers) {
  for (const Circle& c : cs) {
    circle(c.center, c.radius, stroke);
    if (mark_centers) dot(c.center, 2.0, "#d62728");
  }
}

void SvgCanvas::segments(const std::vector<BoundarySegment>& segs,
                         const std::string& stroke, double width) {
  for (const BoundarySegment& s : segs) line(s.a, s.b, stroke, width);
}

std::string SvgCanvas::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width_px_) + "\" height=\"" + std::to_string(height_px_) +
         "\" viewBox=\"0 0 " + std::to_string(width_px_) + " " +
         std::to_string(height_px_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const std::string& el : body_) {
    out += el;
    out += '\n';
  }
  out += "</svg>\n";
  return out;
}

void SvgCanvas::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << str();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace orthocap
