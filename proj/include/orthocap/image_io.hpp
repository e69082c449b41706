#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthocap/grid.hpp"

namespace orthocap {

/// Decodes a DEM raster into a heightfield with elevations in [0, 255].
/// Supported payloads: PGM P2 (ASCII), PGM P5 (binary, maxval 255) and
/// 8-bit PNG (grayscale, gray+alpha, RGB or RGBA; color is reduced by the
/// BT.601 luminance 0.299 R + 0.587 G + 0.114 B, alpha is ignored).
/// Throws std::runtime_error on malformed input or unsupported bit depth.
HeightField decode_dem(const std::vector<uint8_t>& payload);

/// decode_dem on the contents of a file.
HeightField load_dem(const std::string& path);

/// Writes a field as PGM (maxval 255); values are rounded and clamped to
/// [0, 255]. `binary` selects P5 over P2.
void write_pgm(const HeightField& field, const std::string& path,
               bool binary = true);

/// Writes a field as an indexed-looking grayscale PGM where each distinct
/// integer label maps to a palette gray level. Labels < 0 map to 0.
void write_label_pgm(const std::vector<int>& labels, int rows, int cols,
                     const std::string& path);

/// Minimal PNG writers used by tests and tooling (8-bit, no interlace).
void write_png_gray(const std::vector<uint8_t>& pixels, int width, int height,
                    const std::string& path);
void write_png_rgb(const std::vector<uint8_t>& pixels, int width, int height,
                   const std::string& path);

std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::string& contents);

}  // namespace orthocap
