#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "ciss/raster.hpp"

namespace ciss {

// Flat binary raster container: little-endian header
//   u32 magic 'RAST', u32 height, u32 width, u32 channels, u32 dtype
// followed by a row-major (y, x, channel) payload. dtype codes below.
enum class RasterDtype : std::uint32_t { kU8 = 0, kI32 = 1, kF64 = 2 };

inline constexpr std::uint32_t kRasterMagic = 0x54534152;  // "RAST"

void write_image(const std::string& path, const Image& img);
Image read_image(const std::string& path);

void write_labels(const std::string& path, const LabelRaster& labels);
LabelRaster read_labels(const std::string& path);

void write_saliency(const std::string& path, const SaliencyMask& mask);
SaliencyMask read_saliency(const std::string& path);

// Little-endian primitive writer used by the raster and checkpoint formats.
class BinWriter {
 public:
  explicit BinWriter(const std::string& path);
  void u8(std::uint8_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void i32(std::int32_t v);
  void f64(double v);
  void bytes(const void* data, std::size_t n);
  void close();

 private:
  std::ofstream out_;
  std::string path_;
};

// Bounds-checked reader; throws IoError on short reads.
class BinReader {
 public:
  explicit BinReader(const std::string& path);
  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  std::int32_t i32();
  double f64();
  void bytes(void* data, std::size_t n);

 private:
  std::ifstream in_;
  std::string path_;
};

}  // namespace ciss
