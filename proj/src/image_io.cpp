#include "orthocap/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orthocap {

namespace {

// BT.601 luminance weights for RGB reduction.
constexpr double kLumR = 0.299, kLumG = 0.587, kLumB = 0.114;

struct ByteReader {
  const std::vector<uint8_t>& buf;
  size_t pos = 0;

  bool eof() const { return pos >= buf.size(); }
  int peek() const { return eof() ? -1 : buf[pos]; }
  int get() { return eof() ? -1 : buf[pos++]; }

  // Skips whitespace and '#' comment lines per the PNM grammar.
  void skip_space_and_comments() {
    while (!eof()) {
      int c = peek();
      if (std::isspace(c)) {
        ++pos;
      } else if (c == '#') {
        while (!eof() && get() != '\n') {
        }
      } else {
        break;
      }
    }
  }

  int next_int() {
    skip_space_and_comments();
    if (eof() || !std::isdigit(peek()))
      throw std::runtime_error("malformed PGM header: expected integer");
    long v = 0;
    while (!eof() && std::isdigit(peek())) {
      v = v * 10 + (get() - '0');
      if (v > 1 << 24) throw std::runtime_error("malformed PGM header: value overflow");
    }
    return static_cast<int>(v);
  }
};

HeightField decode_pgm(const std::vector<uint8_t>& payload, bool binary) {
  ByteReader rd{payload};
  rd.pos = 2;  // past magic
  const int cols = rd.next_int();
  const int rows = rd.next_int();
  const int maxval = rd.next_int();
  if (rows <= 0 || cols <= 0) throw std::runtime_error("zero-size PGM image");
  if (maxval != 255)
    throw std::runtime_error("unsupported PGM bit depth (maxval must be 255)");

  HeightField field(rows, cols);
  if (binary) {
    if (rd.eof() || !std::isspace(rd.peek()))
      throw std::runtime_error("malformed PGM header: missing separator");
    rd.get();  // single whitespace byte before raster
    const size_t need = static_cast<size_t>(rows) * cols;
    if (payload.size() - rd.pos < need)
      throw std::runtime_error("truncated PGM raster");
    for (size_t k = 0; k < need; ++k)
      field.data[k] = static_cast<double>(payload[rd.pos + k]);
  } else {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        int v = rd.next_int();
        if (v > maxval) throw std::runtime_error("PGM sample exceeds maxval");
        field.at(i, j) = static_cast<double>(v);
      }
  }
  return field;
}

struct PngReadCtx {
  const std::vector<uint8_t>* buf;
  size_t pos;
};

void png_read_from_memory(png_structp png, png_bytep out, png_size_t n) {
  auto* ctx = static_cast<PngReadCtx*>(png_get_io_ptr(png));
  if (ctx->pos + n > ctx->buf->size())
    png_error(png, "unexpected end of PNG stream");
  std::memcpy(out, ctx->buf->data() + ctx->pos, n);
  ctx->pos += n;
}

HeightField decode_png(const std::vector<uint8_t>& payload) {
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("failed to initialize PNG reader");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("failed to initialize PNG reader");
  }

  std::vector<std::vector<uint8_t>> rows;
  int width = 0, height = 0, channels = 0;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("malformed PNG payload");
  }

  PngReadCtx ctx{&payload, 0};
  png_set_read_fn(png, &ctx, png_read_from_memory);
  png_read_info(png, info);

  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);
  if (bit_depth != 8 || color_type == PNG_COLOR_TYPE_PALETTE) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("unsupported PNG bit depth (need 8-bit gray or RGB)");
  }

  width = static_cast<int>(png_get_image_width(png, info));
  height = static_cast<int>(png_get_image_height(png, info));
  if (width <= 0 || height <= 0) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("zero-size PNG image");
  }
  channels = png_get_channels(png, info);

  rows.assign(height, std::vector<uint8_t>(static_cast<size_t>(width) * channels));
  std::vector<png_bytep> row_ptrs(height);
  for (int i = 0; i < height; ++i) row_ptrs[i] = rows[i].data();
  png_read_image(png, row_ptrs.data());
  png_destroy_read_struct(&png, &info, nullptr);

  HeightField field(height, width);
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      const uint8_t* px = &rows[i][static_cast<size_t>(j) * channels];
      double v;
      switch (channels) {
        case 1:
        case 2:  // gray (+alpha)
          v = px[0];
          break;
        case 3:
        case 4:  // RGB(A)
          v = kLumR * px[0] + kLumG * px[1] + kLumB * px[2];
          break;
        default:
          throw std::runtime_error("unsupported PNG channel layout");
      }
      field.at(i, j) = v;
    }
  }
  return field;
}

}  // namespace

HeightField decode_dem(const std::vector<uint8_t>& payload) {
  if (payload.size() < 8) throw std::runtime_error("image payload too small");
  if (payload[0] == 'P' && payload[1] == '2') return decode_pgm(payload, false);
  if (payload[0] == 'P' && payload[1] == '5') return decode_pgm(payload, true);
  static const uint8_t kPngSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (std::memcmp(payload.data(), kPngSig, 8) == 0) return decode_png(payload);
  throw std::runtime_error("unrecognized image format (want PGM P2/P5 or PNG)");
}

HeightField load_dem(const std::string& path) {
  return decode_dem(read_file_bytes(path));
}

void write_pgm(const HeightField& field, const std::string& path, bool binary) {
  field.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << (binary ? "P5" : "P2") << "\n"
      << field.cols << " " << field.rows << "\n255\n";
  auto quantize = [](double v) {
    return static_cast<int>(std::lround(std::fmin(std::fmax(v, 0.0), 255.0)));
  };
  if (binary) {
    std::vector<uint8_t> raster(field.data.size());
    for (size_t k = 0; k < field.data.size(); ++k)
      raster[k] = static_cast<uint8_t>(quantize(field.data[k]));
    out.write(reinterpret_cast<const char*>(raster.data()),
              static_cast<std::streamsize>(raster.size()));
  } else {
    for (int i = 0; i < field.rows; ++i) {
      for (int j = 0; j < field.cols; ++j)
        out << quantize(field.at(i, j)) << (j + 1 < field.cols ? ' ' : '\n');
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_label_pgm(const std::vector<int>& labels, int rows, int cols,
                     const std::string& path) {
  if (rows < 1 || cols < 1 || labels.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("label raster dimensions mismatch");
  int max_label = 0;
  for (int v : labels) max_label = std::max(max_label, v);
  // Spread labels over the gray range; unassigned stays black.
  HeightField img(rows, cols);
  const double scale = max_label > 0 ? 215.0 / max_label : 0.0;
  for (size_t k = 0; k < labels.size(); ++k)
    img.data[k] = labels[k] < 0 ? 0.0 : 40.0 + scale * labels[k];
  write_pgm(img, path, true);
}

namespace {

void png_write_to_file(const std::vector<uint8_t>& pixels, int width,
                       int height, int color_type, int channels,
                       const std::string& path) {
  if (width <= 0 || height <= 0 ||
      pixels.size() != static_cast<size_t>(width) * height * channels)
    throw std::invalid_argument("PNG pixel buffer dimensions mismatch");
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + path);
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    std::fclose(fp);
    throw std::runtime_error("PNG write failed: " + path);
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int i = 0; i < height; ++i)
    png_write_row(png, const_cast<png_bytep>(
                           pixels.data() + static_cast<size_t>(i) * width * channels));
  png_write_end(png, info);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

}  // namespace

void write_png_gray(const std::vector<uint8_t>& pixels, int width, int height,
                    const std::string& path) {
  png_write_to_file(pixels, width, height, PNG_COLOR_TYPE_GRAY, 1, path);
}

void write_png_rgb(const std::vector<uint8_t>& pixels, int width, int height,
                   const std::string& path) {
  png_write_to_file(pixels, width, height, PNG_COLOR_TYPE_RGB, 3, path);
}

std::vector<uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return bytes;
}

void write_file_bytes(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace orthocap
