#pragma once

#include <string>
#include <vector>

namespace aom {

// Declared band layout of an optical instrument. Channel indices are global
// per profile and never renumbered: a 3-band subset of Sentinel-2 keeps the
// indices it had in the full profile, which is what lets the tokenizer assign
// the right spectral encoding to a partial stack.
struct SensorProfile {
  std::string sensor_id;
  int band_count = 0;
  std::vector<int> channel_indices;
  std::vector<std::string> band_names;
  std::vector<double> central_wavelengths_nm;
  std::vector<double> nominal_gsd_m;

  void validate() const;  // throws std::invalid_argument on any broken invariant

  // Sentinel-2: 13 bands indexed 0..12 (B1..B12 incl. B8A).
  static const SensorProfile& sentinel2();

  // Profile lookup by sensor_id, used when loading band-stack files. Unknown
  // ids get a generic synthesized profile covering the given channels.
  static SensorProfile resolve(const std::string& sensor_id,
                               const std::vector<int>& channel_indices);
  static void register_profile(const SensorProfile& profile);

  double wavelength_for_index(int channel_index) const;  // throws if unknown

  bool operator==(const SensorProfile&) const = default;
};

}  // namespace aom
