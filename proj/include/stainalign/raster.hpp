#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "stainalign/error.hpp"

namespace stainalign {

// 8-bit raster image, row-major, interleaved channels. Channel count is 1
// (gray) or 3 (RGB).
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;

  RasterImage() = default;
  RasterImage(int w, int h, int c, std::uint8_t fill = 0)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * h * c, fill) {}

  bool empty() const { return width <= 0 || height <= 0; }

  std::uint8_t at(int x, int y, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t& at(int x, int y, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
};

// Reads a binary PPM (P6, RGB) or PGM (P5, gray) file with maxval 255.
RasterImage read_pnm(const std::filesystem::path& path);

// Writes P6 for 3-channel images, P5 for 1-channel. Atomic (temp + rename).
void write_pnm(const RasterImage& image, const std::filesystem::path& path);

// Rec.601 luma: gray = round(0.299 R + 0.587 G + 0.114 B), clamped to [0,255].
RasterImage rgb_to_gray(const RasterImage& image);

// Global histogram equalization of a grayscale image.
RasterImage equalize_gray(const RasterImage& gray);

// Box-mean downsample by an integer factor; partial border blocks average
// over the pixels they actually cover.
RasterImage downsample_mean(const RasterImage& image, int factor);

std::array<std::uint32_t, 256> gray_histogram(const RasterImage& gray);

}  // namespace stainalign
