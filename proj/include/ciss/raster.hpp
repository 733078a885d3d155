#pragma once

#include <cstdint>
#include <vector>

#include "ciss/schedule.hpp"

namespace ciss {

// RGB image, values in [0, 1], channel-last row-major storage.
struct Image {
  int height = 0;
  int width = 0;
  std::vector<double> data;  // height * width * 3

  static Image zeros(int h, int w);

  int pixels() const { return height * width; }

  double at(int y, int x, int c) const {
    return data[static_cast<std::size_t>((y * width + x) * 3 + c)];
  }
  double& at(int y, int x, int c) {
    return data[static_cast<std::size_t>((y * width + x) * 3 + c)];
  }
};

// Per-pixel class ids.
struct LabelRaster {
  int height = 0;
  int width = 0;
  std::vector<ClassId> ids;  // height * width

  static LabelRaster filled(int h, int w, ClassId value);

  int pixels() const { return height * width; }

  ClassId at(int y, int x) const {
    return ids[static_cast<std::size_t>(y * width + x)];
  }
  ClassId& at(int y, int x) {
    return ids[static_cast<std::size_t>(y * width + x)];
  }

  bool operator==(const LabelRaster&) const = default;
};

// Binary per-pixel saliency, 1 = salient.
struct SaliencyMask {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> values;  // height * width

  static SaliencyMask zeros(int h, int w);

  int pixels() const { return height * width; }

  std::uint8_t at(int y, int x) const {
    return values[static_cast<std::size_t>(y * width + x)];
  }
  std::uint8_t& at(int y, int x) {
    return values[static_cast<std::size_t>(y * width + x)];
  }
};

// Throws ShapeError if the two rasters disagree in height/width.
void require_same_shape(int ah, int aw, int bh, int bw, const char* context);

}  // namespace ciss
