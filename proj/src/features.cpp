/*
 * HSV histogram features
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "wce/colorspace.hpp"
#include "wce/error.hpp"

namespace wce {

int hsv_bin(double h, double s, double v) {
  int hb = std::min(static_cast<int>(h / 36.0), 9);
  int sb = std::min(static_cast<int>(s * 10.0), 9);
  int vb = std::min(static_cast<int>(v * 10.0), 9);
  return hb * 100 + sb * 10 + vb;
}

ColorFeature hsv_histogram(const Frame& frame, const FeatureParams& params) {
  if (frame.empty() || frame.pixel_count() == 0)
    throw Error("hsv_histogram: empty frame");

  std::array<std::uint32_t, 1000> counts{};
  std::size_t counted = 0;
  std::size_t n = frame.pixel_count();
  bool masking = params.mask_dark_threshold > 0.0;

  for (int pass = 0; pass < 2; ++pass) {
    bool apply_mask = masking && pass == 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint8_t* px = frame.pixels.data() + 3 * i;
      HsvPixel hsv = rgb_to_hsv(px[0], px[1], px[2]);
      if (apply_mask && hsv.v < params.mask_dark_threshold) continue;
      ++counts[hsv_bin(hsv.h, hsv.s, hsv.v)];
      ++counted;
    }
    if (counted > 0) break;
    counts.fill(0);
  }

  ColorFeature q;
  double total = static_cast<double>(counted);
  for (int i = 0; i < 1000; ++i) q.bins[i] = counts[i] / total;
  return q;
}

double feature_distance(const ColorFeature& q1, const ColorFeature& q2) {
  double acc = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double d = q1.bins[i] - q2.bins[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace wce
