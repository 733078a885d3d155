#include "ciss/raster.hpp"

#include <string>

#include "ciss/error.hpp"

namespace ciss {

Image Image::zeros(int h, int w) {
  Image img;
  img.height = h;
  img.width = w;
  img.data.assign(static_cast<std::size_t>(h) * w * 3, 0.0);
  return img;
}

LabelRaster LabelRaster::filled(int h, int w, ClassId value) {
  LabelRaster r;
  r.height = h;
  r.width = w;
  r.ids.assign(static_cast<std::size_t>(h) * w, value);
  return r;
}

SaliencyMask SaliencyMask::zeros(int h, int w) {
  SaliencyMask m;
  m.height = h;
  m.width = w;
  m.values.assign(static_cast<std::size_t>(h) * w, 0);
  return m;
}

void require_same_shape(int ah, int aw, int bh, int bw, const char* context) {
  if (ah != bh || aw != bw)
    throw ShapeError(std::string(context) + ": shape mismatch " +
                     std::to_string(ah) + "x" + std::to_string(aw) + " vs " +
                     std::to_string(bh) + "x" + std::to_string(bw));
}

}  // namespace ciss
