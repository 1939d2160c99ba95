/*
 * HSV histogram features
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_FEATURES_HPP
#define WCE_FEATURES_HPP

#include <array>

#include "wce/image.hpp"

namespace wce {

struct FeatureParams {
  // Pixels with v below this are excluded from the histogram; 0 disables.
  // If every pixel falls below the threshold the full frame is counted.
  double mask_dark_threshold = 0.0;
};

// Joint 10x10x10 HSV histogram, L1-normalized.
struct ColorFeature {
  std::array<double, 1000> bins{};
};

// Joint bin index: h_bin*100 + s_bin*10 + v_bin, 10 intervals per channel.
int hsv_bin(double h, double s, double v);

ColorFeature hsv_histogram(const Frame& frame, const FeatureParams& params = {});

// Euclidean distance between feature vectors.
double feature_distance(const ColorFeature& q1, const ColorFeature& q2);

}  // namespace wce

#endif
