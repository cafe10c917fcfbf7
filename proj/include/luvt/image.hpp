#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "luvt/common.hpp"

namespace luvt {

/// 8-bit grayscale raster, row-major, origin top-left, x right, y down.
struct ImageU8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int x, int y) const { return pixels[std::size_t(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return pixels[std::size_t(y) * width + x]; }
};

/// Single-channel float raster in [0,1], same coordinate convention.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<float> v;

  float at(int x, int y) const { return v[std::size_t(y) * width + x]; }
  float& at(int x, int y) { return v[std::size_t(y) * width + x]; }
};

inline GrayImage to_gray(const ImageU8& img) {
  GrayImage g{img.width, img.height, {}};
  g.v.resize(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    g.v[i] = float(img.pixels[i]) / 255.0f;
  return g;
}

// ---------------------------------------------------------------------------
// PGM (P5) binary I/O
// ---------------------------------------------------------------------------

namespace detail {

// Reads one whitespace-delimited header token, skipping '#' comments.
// Tracks line numbers so parse errors can point at the offending line.
inline std::string pgm_token(std::istream& in, const std::string& path, int& line) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '\n') ++line;
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      if (c == '\n') ++line;
      continue;
    }
    if (!std::isspace(c)) {
      tok.push_back(char(c));
      break;
    }
  }
  while ((c = in.get()) != EOF && !std::isspace(c)) tok.push_back(char(c));
  if (c == '\n') ++line;  // the single whitespace after the token
  if (tok.empty())
    throw ParseError("pgm: unexpected end of header in " + path + " at line " +
                     std::to_string(line));
  return tok;
}

inline int pgm_int(std::istream& in, const std::string& path, int& line,
                   const char* what) {
  std::string tok = pgm_token(in, path, line);
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("pgm: bad " + std::string(what) + " '" + tok + "' in " +
                     path + " at line " + std::to_string(line));
  }
}

}  // namespace detail

inline ImageU8 read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("pgm: cannot open file: " + path);
  int line = 1;
  std::string magic = detail::pgm_token(in, path, line);
  if (magic != "P5")
    throw ParseError("pgm: expected magic P5, got '" + magic + "' in " + path +
                     " at line 1");
  int w = detail::pgm_int(in, path, line, "width");
  int h = detail::pgm_int(in, path, line, "height");
  int maxval = detail::pgm_int(in, path, line, "maxval");
  if (w <= 0 || h <= 0)
    throw ParseError("pgm: non-positive dimensions in " + path);
  if (maxval != 255)
    throw ParseError("pgm: unsupported maxval " + std::to_string(maxval) +
                     " in " + path + " (only 255)");
  ImageU8 img{w, h, {}};
  img.pixels.resize(std::size_t(w) * h);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          std::streamsize(img.pixels.size()));
  if (std::size_t(in.gcount()) != img.pixels.size())
    throw ParseError("pgm: truncated pixel data in " + path);
  return img;
}

inline void write_pgm(const ImageU8& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("pgm: cannot open file for writing: " + path);
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            std::streamsize(img.pixels.size()));
  if (!out) throw ParseError("pgm: write failed: " + path);
}

// ---------------------------------------------------------------------------
// Area-average resampling
// ---------------------------------------------------------------------------

/// Resamples a row-major double grid by exact area averaging: each output
/// cell is the integral of the input over the corresponding rectangle divided
/// by its area. Handles non-integer scale ratios (e.g. 160 -> 64).
inline std::vector<double> area_resample(const std::vector<double>& src,
                                         int sw, int sh, int dw, int dh) {
  if (sw <= 0 || sh <= 0 || dw <= 0 || dh <= 0)
    throw ValidationError("area_resample: non-positive dimensions");
  std::vector<double> dst(std::size_t(dw) * dh, 0.0);
  const double rx = double(sw) / dw;
  const double ry = double(sh) / dh;
  for (int oy = 0; oy < dh; ++oy) {
    const double y0 = oy * ry, y1 = (oy + 1) * ry;
    const int iy0 = int(y0), iy1 = std::min(sh - 1, int(std::ceil(y1)) - 1);
    for (int ox = 0; ox < dw; ++ox) {
      const double x0 = ox * rx, x1 = (ox + 1) * rx;
      const int ix0 = int(x0), ix1 = std::min(sw - 1, int(std::ceil(x1)) - 1);
      double acc = 0.0;
      for (int iy = iy0; iy <= iy1; ++iy) {
        const double wy = std::min<double>(iy + 1, y1) - std::max<double>(iy, y0);
        const double* row = src.data() + std::size_t(iy) * sw;
        for (int ix = ix0; ix <= ix1; ++ix) {
          const double wx = std::min<double>(ix + 1, x1) - std::max<double>(ix, x0);
          acc += wx * wy * row[ix];
        }
      }
      dst[std::size_t(oy) * dw + ox] = acc / (rx * ry);
    }
  }
  return dst;
}

/// Area-average resize for float images in [0,1].
inline GrayImage resize_area(const GrayImage& img, int dw, int dh) {
  if (img.width == dw && img.height == dh) return img;
  std::vector<double> src(img.v.begin(), img.v.end());
  std::vector<double> dst = area_resample(src, img.width, img.height, dw, dh);
  GrayImage out{dw, dh, {}};
  out.v.resize(dst.size());
  for (std::size_t i = 0; i < dst.size(); ++i) out.v[i] = float(dst[i]);
  return out;
}

}  // namespace luvt
