/*
 * Color conversions and Gaussian filtering
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/colorspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "wce/error.hpp"

namespace wce {

namespace {

const std::array<double, 256>& srgb_linear_table() {
  static const std::array<double, 256> table = [] {
    std::array<double, 256> t{};
    for (int i = 0; i < 256; ++i) {
      double c = i / 255.0;
      t[i] = c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
    }
    return t;
  }();
  return table;
}

double lab_f(double t) {
  constexpr double eps = 216.0 / 24389.0;
  constexpr double kappa = 24389.0 / 27.0;
  return t > eps ? std::cbrt(t) : (kappa * t + 16.0) / 116.0;
}

}  // namespace

HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  int maxc = std::max({static_cast<int>(r), static_cast<int>(g),
                       static_cast<int>(b)});
  int minc = std::min({static_cast<int>(r), static_cast<int>(g),
                       static_cast<int>(b)});
  int delta = maxc - minc;

  HsvPixel out;
  out.v = maxc / 255.0;
  out.s = maxc == 0 ? 0.0 : static_cast<double>(delta) / maxc;
  if (delta != 0) {
    if (maxc == r) {
      out.h = 60.0 * (static_cast<int>(g) - static_cast<int>(b)) / delta;
      if (out.h < 0.0) out.h += 360.0;
    } else if (maxc == g) {
      out.h = 60.0 * (static_cast<int>(b) - static_cast<int>(r)) / delta + 120.0;
    } else {
      out.h = 60.0 * (static_cast<int>(r) - static_cast<int>(g)) / delta + 240.0;
    }
  }
  return out;
}

LabPixel rgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const auto& lin = srgb_linear_table();
  double rl = lin[r];
  double gl = lin[g];
  double bl = lin[b];

  double x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
  double y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
  double z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;

  double fx = lab_f(x / 0.95047);
  double fy = lab_f(y);
  double fz = lab_f(z / 1.08883);

  LabPixel out;
  out.l = 116.0 * fy - 16.0;
  out.a = 500.0 * (fx - fy);
  out.b = 200.0 * (fy - fz);
  return out;
}

double rgb_to_luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

std::vector<double> gaussian_taps(int radius, double sigma) {
  if (radius < 0) throw Error("gaussian_taps: radius must be >= 0");
  if (sigma <= 0.0) throw Error("gaussian_taps: sigma must be > 0");
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    taps[i + radius] = w;
    sum += w;
  }
  for (double& w : taps) w /= sum;
  return taps;
}

ScalarField gaussian_filter(const ScalarField& field, double sigma) {
  if (sigma <= 0.0) throw Error("gaussian_filter: sigma must be > 0");
  int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps = gaussian_taps(radius, sigma);

  int w = field.width;
  int h = field.height;
  ScalarField tmp(w, h);
  ScalarField out(w, h);

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int t = -radius; t <= radius; ++t) {
        int xx = std::clamp(x + t, 0, w - 1);
        acc += taps[t + radius] * field.at(xx, y);
      }
      tmp.at(x, y) = acc;
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int t = -radius; t <= radius; ++t) {
        int yy = std::clamp(y + t, 0, h - 1);
        acc += taps[t + radius] * tmp.at(x, yy);
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

void lab_planes(const Frame& frame, ScalarField& l, ScalarField& a,
                ScalarField& b) {
  l = ScalarField(frame.width, frame.height);
  a = ScalarField(frame.width, frame.height);
  b = ScalarField(frame.width, frame.height);
  std::size_t n = frame.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* px = frame.pixels.data() + 3 * i;
    LabPixel lab = rgb_to_lab(px[0], px[1], px[2]);
    l.values[i] = lab.l;
    a.values[i] = lab.a;
    b.values[i] = lab.b;
  }
}

}  // namespace wce
