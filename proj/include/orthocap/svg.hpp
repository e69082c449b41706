#pragma once

#include <string>
#include <vector>

#include "orthocap/grid.hpp"
#include "orthocap/ortho.hpp"
#include "orthocap/partition.hpp"

namespace orthocap {

/// Deterministic SVG canvas over a world rectangle; y points up in world
/// coordinates and is flipped for the SVG viewport. Numbers are printed with
/// %.6g so identical inputs render byte-identical files.
class SvgCanvas {
 public:
  SvgCanvas(Rect world, int pixel_width = 800);

  void line(Vec2 a, Vec2 b, const std::string& stroke, double width = 1.0);
  void polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                double width = 1.0);
  void polygon(const std::vector<Vec2>& pts, const std::string& stroke,
               const std::string& fill = "none", double width = 1.0);
  void circle(Vec2 center, double radius, const std::string& stroke,
              const std::string& fill = "none", double width = 1.0);
  void ellipse(const EllipseBoundary& e, const std::string& stroke,
               double width = 1.0);
  void dot(Vec2 center, double pixel_radius, const std::string& fill);
  /// Filled world-rect cell (used for masks and label rasters).
  void cell(Vec2 center, double w, double h, const std::string& fill);

  /// Contour lines of the grid at n_levels evenly spaced levels (marching
  /// squares). Constant grids draw nothing.
  void contours(const Grid2D& grid, int n_levels = 10);

  /// Convenience overlays.
  void region_mask(const RegionMask& mask, const std::string& fill);
  void circles(const std::vector<Circle>& cs, const std::string& stroke,
               bool mark_centers = true);
  void segments(const std::vector<BoundarySegment>& segs,
                const std::string& stroke, double width = 1.5);

  std::string str() const;
  void save(const std::string& path) const;

 private:
  Vec2 to_px(Vec2 world) const;
  double scale_px(double world_len) const { return world_len * scale_; }

  Rect world_;
  int width_px_;
  int height_px_;
  double scale_;
  std::vector<std::string> body_;
};

/// Marching-squares segments of one level set, in grid world coordinates.
std::vector<std::pair<Vec2, Vec2>> contour_segments(const Grid2D& grid,
                                                    double level);

}  // namespace orthocap
