#include "aom/sensor_profile.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace aom {

void SensorProfile::validate() const {
  const size_t n = static_cast<size_t>(band_count);
  if (band_count <= 0) throw std::invalid_argument("sensor profile: band_count must be positive");
  if (channel_indices.size() != n || band_names.size() != n ||
      central_wavelengths_nm.size() != n || nominal_gsd_m.size() != n) {
    throw std::invalid_argument("sensor profile '" + sensor_id +
                                "': per-band lists must all have band_count entries");
  }
  std::set<int> seen;
  for (int idx : channel_indices) {
    if (idx < 0) throw std::invalid_argument("sensor profile: channel indices must be >= 0");
    if (!seen.insert(idx).second)
      throw std::invalid_argument("sensor profile: duplicate channel index " + std::to_string(idx));
  }
  for (double wl : central_wavelengths_nm)
    if (!(wl > 0)) throw std::invalid_argument("sensor profile: wavelengths must be positive");
  for (double g : nominal_gsd_m)
    if (!(g > 0)) throw std::invalid_argument("sensor profile: GSDs must be positive");
}

const SensorProfile& SensorProfile::sentinel2() {
  static const SensorProfile p = [] {
    SensorProfile s;
    s.sensor_id = "sentinel2";
    s.band_count = 13;
    s.channel_indices = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    s.band_names = {"B01", "B02", "B03", "B04", "B05", "B06", "B07",
                    "B08", "B8A", "B09", "B10", "B11", "B12"};
    s.central_wavelengths_nm = {443, 490, 560, 665, 705, 740, 783,
                                842, 865, 945, 1375, 1610, 2190};
    s.nominal_gsd_m = {60, 10, 10, 10, 20, 20, 20, 10, 20, 60, 60, 20, 20};
    s.validate();
    return s;
  }();
  return p;
}

namespace {
std::map<std::string, SensorProfile>& registry() {
  static std::map<std::string, SensorProfile> reg = {
      {SensorProfile::sentinel2().sensor_id, SensorProfile::sentinel2()}};
  return reg;
}
std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

void SensorProfile::register_profile(const SensorProfile& profile) {
  profile.validate();
  std::lock_guard<std::mutex> lock(registry_mutex());
  registry()[profile.sensor_id] = profile;
}

SensorProfile SensorProfile::resolve(const std::string& sensor_id,
                                     const std::vector<int>& channel_indices) {
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(sensor_id);
    if (it != registry().end()) return it->second;
  }
  // Unknown instrument: synthesize a profile that covers exactly the stack's
  // channels. Wavelengths are placeholders; wavelength-mode encoding on such
  // a profile is only as meaningful as these values.
  SensorProfile p;
  p.sensor_id = sensor_id;
  p.band_count = static_cast<int>(channel_indices.size());
  p.channel_indices = channel_indices;
  for (int idx : channel_indices) {
    p.band_names.push_back("band" + std::to_string(idx));
    p.central_wavelengths_nm.push_back(400.0 + 100.0 * idx);
    p.nominal_gsd_m.push_back(10.0);
  }
  p.validate();
  return p;
}

double SensorProfile::wavelength_for_index(int channel_index) const {
  for (size_t i = 0; i < channel_indices.size(); ++i)
    if (channel_indices[i] == channel_index) return central_wavelengths_nm[i];
  throw std::invalid_argument("profile '" + sensor_id + "' has no channel " +
                              std::to_string(channel_index));
}

}  // namespace aom
