#include "stainalign/raster.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

namespace stainalign {

namespace {

// Skips whitespace and '#' comment lines between PNM header tokens.
int next_header_int(std::istream& in, const std::filesystem::path& path) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  if (c == EOF || !std::isdigit(c))
    throw FormatError("malformed PNM header in " + path.string());
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    c = in.get();
  }
  return value;
}

}  // namespace

RasterImage read_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());

  char p = 0, kind = 0;
  in.get(p);
  in.get(kind);
  if (p != 'P' || (kind != '5' && kind != '6'))
    throw FormatError("unsupported PNM magic in " + path.string());
  const int channels = kind == '6' ? 3 : 1;

  const int width = next_header_int(in, path);
  const int height = next_header_int(in, path);
  const int maxval = next_header_int(in, path);
  if (maxval != 255)
    throw FormatError("only maxval 255 supported: " + path.string());
  if (width <= 0 || height <= 0)
    throw FormatError("degenerate dimensions in " + path.string());

  RasterImage image(width, height, channels);
  in.read(reinterpret_cast<char*>(image.data.data()),
          static_cast<std::streamsize>(image.data.size()));
  if (static_cast<std::size_t>(in.gcount()) != image.data.size())
    throw FormatError("truncated pixel data in " + path.string());
  return image;
}

void write_pnm(const RasterImage& image, const std::filesystem::path& path) {
  if (image.channels != 1 && image.channels != 3)
    throw InvalidInputError("write_pnm: channel count must be 1 or 3");
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out << (image.channels == 3 ? "P6\n" : "P5\n")
        << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.data.data()),
              static_cast<std::streamsize>(image.data.size()));
    if (!out) throw FormatError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

RasterImage rgb_to_gray(const RasterImage& image) {
  if (image.channels != 3)
    throw InvalidInputError("rgb_to_gray: input must have 3 channels");
  RasterImage gray(image.width, image.height, 1);
  const std::size_t n = static_cast<std::size_t>(image.width) * image.height;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = image.data[3 * i];
    const double g = image.data[3 * i + 1];
    const double b = image.data[3 * i + 2];
    long v = std::lround(0.299 * r + 0.587 * g + 0.114 * b);
    if (v < 0) v = 0;
    if (v > 255) v = 255;
    gray.data[i] = static_cast<std::uint8_t>(v);
  }
  return gray;
}

std::array<std::uint32_t, 256> gray_histogram(const RasterImage& gray) {
  if (gray.channels != 1)
    throw InvalidInputError("gray_histogram: input must be single-channel");
  std::array<std::uint32_t, 256> hist{};
  for (std::uint8_t v : gray.data) ++hist[v];
  return hist;
}

RasterImage equalize_gray(const RasterImage& gray) {
  if (gray.channels != 1)
    throw InvalidInputError("equalize_gray: input must be single-channel");
  const auto hist = gray_histogram(gray);
  const std::uint64_t total = gray.data.size();

  std::array<std::uint64_t, 256> cdf{};
  std::uint64_t running = 0;
  for (int v = 0; v < 256; ++v) {
    running += hist[v];
    cdf[v] = running;
  }
  std::uint64_t cdf_min = 0;
  for (int v = 0; v < 256; ++v) {
    if (hist[v] > 0) {
      cdf_min = cdf[v];
      break;
    }
  }
  RasterImage out = gray;
  if (total == 0 || cdf_min == total) return out;  // constant image: identity

  const double denom = static_cast<double>(total - cdf_min);
  std::array<std::uint8_t, 256> lut{};
  for (int v = 0; v < 256; ++v) {
    const double scaled = 255.0 * (static_cast<double>(cdf[v]) - cdf_min) / denom;
    long mapped = std::lround(scaled);
    if (mapped < 0) mapped = 0;
    if (mapped > 255) mapped = 255;
    lut[v] = static_cast<std::uint8_t>(mapped);
  }
  for (std::uint8_t& v : out.data) v = lut[v];
  return out;
}

RasterImage downsample_mean(const RasterImage& image, int factor) {
  if (factor < 1) throw InvalidInputError("downsample_mean: factor must be >= 1");
  if (factor == 1) return image;
  const int out_w = (image.width + factor - 1) / factor;
  const int out_h = (image.height + factor - 1) / factor;
  RasterImage out(out_w, out_h, image.channels);
  for (int oy = 0; oy < out_h; ++oy) {
    const int y0 = oy * factor;
    const int y1 = std::min(y0 + factor, image.height);
    for (int ox = 0; ox < out_w; ++ox) {
      const int x0 = ox * factor;
      const int x1 = std::min(x0 + factor, image.width);
      const std::uint64_t count = static_cast<std::uint64_t>(x1 - x0) * (y1 - y0);
      for (int c = 0; c < image.channels; ++c) {
        std::uint64_t sum = 0;
        for (int y = y0; y < y1; ++y)
          for (int x = x0; x < x1; ++x) sum += image.at(x, y, c);
        out.at(ox, oy, c) =
            static_cast<std::uint8_t>((sum + count / 2) / count);
      }
    }
  }
  return out;
}

}  // namespace stainalign
