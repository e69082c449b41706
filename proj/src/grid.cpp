#include "orthocap/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace orthocap {

Grid2D::Grid2D(int rows_, int cols_, double value, double spacing_,
               Vec2 origin_)
    : rows(rows_),
      cols(cols_),
      spacing(spacing_),
      origin(origin_),
      data(static_cast<size_t>(rows_) * cols_, value) {
  if (rows_ < 1 || cols_ < 1)
    throw std::invalid_argument("grid dimensions must be positive");
}

std::pair<double, double> Grid2D::min_max() const {
  auto [lo, hi] = std::minmax_element(data.begin(), data.end());
  return {*lo, *hi};
}

void Grid2D::validate() const {
  if (rows < 2 || cols < 2)
    throw std::invalid_argument("grid must be at least 2x2");
  if (!(spacing > 0.0)) throw std::invalid_argument("grid spacing must be > 0");
  if (data.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("grid data size does not match dimensions");
  for (double v : data)
    if (!std::isfinite(v))
      throw std::invalid_argument("grid contains non-finite values");
}

HeightField mean_smooth(const HeightField& field, int n) {
  field.validate();
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("smoothing window must be a positive odd integer");
  if (n == 1) return field;

  const int half = n / 2;
  const int rows = field.rows, cols = field.cols;
  HeightField out = field;

  // Row-then-column separable pass; replicate padding clamps indices.
  Grid2D tmp = field;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      double sum = 0.0;
      for (int k = -half; k <= half; ++k)
        sum += field.at(i, std::clamp(j + k, 0, cols - 1));
      tmp.at(i, j) = sum / n;
    }
  }
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      double sum = 0.0;
      for (int k = -half; k <= half; ++k)
        sum += tmp.at(std::clamp(i + k, 0, rows - 1), j);
      out.at(i, j) = sum / n;
    }
  }
  return out;
}

std::pair<Grid2D, Grid2D> numerical_gradient(const HeightField& field) {
  field.validate();
  const int rows = field.rows, cols = field.cols;
  const double inv = 1.0 / field.spacing;
  Grid2D gx(rows, cols, 0.0, field.spacing, field.origin);
  Grid2D gy(rows, cols, 0.0, field.spacing, field.origin);

  for (int i = 0; i < rows; ++i) {
    gx.at(i, 0) = (field.at(i, 1) - field.at(i, 0)) * inv;
    for (int j = 1; j < cols - 1; ++j)
      gx.at(i, j) = (field.at(i, j + 1) - field.at(i, j - 1)) * 0.5 * inv;
    gx.at(i, cols - 1) = (field.at(i, cols - 1) - field.at(i, cols - 2)) * inv;
  }
  for (int j = 0; j < cols; ++j) {
    gy.at(0, j) = (field.at(1, j) - field.at(0, j)) * inv;
    for (int i = 1; i < rows - 1; ++i)
      gy.at(i, j) = (field.at(i + 1, j) - field.at(i - 1, j)) * 0.5 * inv;
    gy.at(rows - 1, j) = (field.at(rows - 1, j) - field.at(rows - 2, j)) * inv;
  }
  return {std::move(gx), std::move(gy)};
}

}  // namespace orthocap
