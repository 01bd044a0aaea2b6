#pragma once

#include <algorithm>
#include <cmath>

namespace aom {

// Repo-wide resampling convention: bilinear interpolation with half-pixel
// centers and edge clamping ("bilinear-halfpixel-v1"). Data resampling,
// positional-encoding interpolation and the kernel resize matrix all go
// through these two functions so the conventions cannot drift apart.

struct AxisSample {
  int lo;
  int hi;
  double frac;  // weight of hi; lo gets (1 - frac)
};

inline AxisSample axis_sample(int n_in, int n_out, int o) {
  const double scale = static_cast<double>(n_out) / static_cast<double>(n_in);
  double src = (o + 0.5) / scale - 0.5;
  src = std::clamp(src, 0.0, static_cast<double>(n_in - 1));
  const int lo = static_cast<int>(std::floor(src));
  const int hi = std::min(lo + 1, n_in - 1);
  return {lo, hi, src - lo};
}

// Resizes one row-major plane. Interpolation arithmetic runs in double and
// is rounded to T once per output pixel, so a double-precision evaluation of
// the same expression reproduces the T path exactly.
template <class T>
void resize_plane(const T* src, int h_in, int w_in, T* dst, int h_out, int w_out) {
  for (int y = 0; y < h_out; ++y) {
    const AxisSample ys = axis_sample(h_in, h_out, y);
    const T* row_lo = src + static_cast<size_t>(ys.lo) * w_in;
    const T* row_hi = src + static_cast<size_t>(ys.hi) * w_in;
    for (int x = 0; x < w_out; ++x) {
      const AxisSample xs = axis_sample(w_in, w_out, x);
      const double top = (1.0 - xs.frac) * static_cast<double>(row_lo[xs.lo]) +
                         xs.frac * static_cast<double>(row_lo[xs.hi]);
      const double bot = (1.0 - xs.frac) * static_cast<double>(row_hi[xs.lo]) +
                         xs.frac * static_cast<double>(row_hi[xs.hi]);
      dst[static_cast<size_t>(y) * w_out + x] =
          static_cast<T>((1.0 - ys.frac) * top + ys.frac * bot);
    }
  }
}

}  // namespace aom
