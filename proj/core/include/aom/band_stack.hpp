#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aom/sensor_profile.hpp"

namespace aom {

// A C x H x W multispectral image. Pixels are channel-major, row-major within
// a plane, always finite f32. channel_indices are the global per-profile band
// indices of the planes, in plane order.
struct BandStack {
  SensorProfile profile;
  std::vector<int> channel_indices;
  int height = 0;
  int width = 0;
  std::vector<float> pixels;  // size = C * H * W
  double resolution_m = 0.0;

  int channels() const { return static_cast<int>(channel_indices.size()); }
  size_t plane_size() const { return static_cast<size_t>(height) * width; }

  float* plane(int c) { return pixels.data() + static_cast<size_t>(c) * plane_size(); }
  const float* plane(int c) const { return pixels.data() + static_cast<size_t>(c) * plane_size(); }

  float at(int c, int y, int x) const {
    return pixels[static_cast<size_t>(c) * plane_size() + static_cast<size_t>(y) * width + x];
  }

  // Plane position of a global channel index; throws if not present.
  int plane_of(int channel_index) const;

  void validate() const;  // shape/finiteness/index invariants

  bool operator==(const BandStack&) const = default;
};

// Binary band-stack container, magic "AOMB" (see README for the exact
// layout). Writes are whole-file atomic: temp file then rename.
void save_band_stack(const BandStack& stack, const std::string& path);
BandStack load_band_stack(const std::string& path);

// Keeps planes in `keep` order; global indices are preserved, not renumbered.
BandStack select_bands(const BandStack& stack, const std::vector<int>& keep);

// Bilinear resampling, half-pixel centers. Output H = round(H * factor) and
// likewise W; resolution_m is divided by factor.
BandStack resample_stack(const BandStack& stack, double factor);

}  // namespace aom
