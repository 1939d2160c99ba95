/*
 * Color conversions and Gaussian filtering
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_COLORSPACE_HPP
#define WCE_COLORSPACE_HPP

#include <cstdint>
#include <vector>

#include "wce/image.hpp"

namespace wce {

// Hexcone HSV. h in [0,360), s and v in [0,1]; h = 0 for achromatic input.
struct HsvPixel {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

// CIELAB, D65 white point. L in [0,100].
struct LabPixel {
  double l = 0.0;
  double a = 0.0;
  double b = 0.0;
};

HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// sRGB (gamma 2.4 piecewise) -> XYZ -> CIELAB.
LabPixel rgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Rec. 601 luma on 8-bit inputs; range [0,255].
double rgb_to_luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Normalized 1-D Gaussian taps, length 2*radius+1.
std::vector<double> gaussian_taps(int radius, double sigma);

// Separable Gaussian blur, kernel radius ceil(3*sigma), edge replication.
// Output dimensions equal input dimensions. Throws on sigma <= 0.
ScalarField gaussian_filter(const ScalarField& field, double sigma);

// Per-channel Lab planes of a frame, in L, a, b order.
void lab_planes(const Frame& frame, ScalarField& l, ScalarField& a,
                ScalarField& b);

}  // namespace wce

#endif
