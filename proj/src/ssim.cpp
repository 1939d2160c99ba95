/*
 * Structural similarity of grayscale blocks
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/ssim.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wce/colorspace.hpp"
#include "wce/error.hpp"

namespace wce {

namespace {

// Separable weighted convolution over valid positions. The result has
// dimensions (w - 2r) x (h - 2r).
ScalarField conv_valid(const ScalarField& f, const std::vector<double>& taps) {
  int radius = static_cast<int>(taps.size() / 2);
  int ow = f.width - 2 * radius;
  int oh = f.height - 2 * radius;
  ScalarField rows(ow, f.height);
  for (int y = 0; y < f.height; ++y)
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int t = 0; t < static_cast<int>(taps.size()); ++t)
        acc += taps[t] * f.at(x + t, y);
      rows.at(x, y) = acc;
    }
  ScalarField out(ow, oh);
  for (int y = 0; y < oh; ++y)
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int t = 0; t < static_cast<int>(taps.size()); ++t)
        acc += taps[t] * rows.at(x, y + t);
      out.at(x, y) = acc;
    }
  return out;
}

ScalarField product_field(const ScalarField& a, const ScalarField& b) {
  ScalarField out(a.width, a.height);
  for (std::size_t i = 0; i < out.size(); ++i)
    out.values[i] = a.values[i] * b.values[i];
  return out;
}

}  // namespace

SsimAggregate parse_ssim_aggregate(const std::string& name) {
  if (name == "mean") return SsimAggregate::mean;
  if (name == "min") return SsimAggregate::min;
  throw Error("unknown ssim aggregate: " + name);
}

const char* ssim_aggregate_name(SsimAggregate aggregate) {
  return aggregate == SsimAggregate::mean ? "mean" : "min";
}

double mssim(const ScalarField& a, const ScalarField& b, const SsimParams& p) {
  if (a.width != b.width || a.height != b.height)
    throw Error("mssim: block dimensions differ");
  if (p.window < 1 || p.window % 2 == 0)
    throw Error("mssim: window must be odd and >= 1");
  if (p.window > a.width || p.window > a.height)
    throw Error("mssim: window larger than block");
  if (p.k1 <= 0.0 || p.k2 <= 0.0) throw Error("mssim: k1 and k2 must be > 0");

  int radius = p.window / 2;
  std::vector<double> taps = gaussian_taps(radius, p.window_sigma);

  ScalarField mu_a = conv_valid(a, taps);
  ScalarField mu_b = conv_valid(b, taps);
  ScalarField raw_aa = conv_valid(product_field(a, a), taps);
  ScalarField raw_bb = conv_valid(product_field(b, b), taps);
  ScalarField raw_ab = conv_valid(product_field(a, b), taps);

  double c1 = (p.k1 * p.l) * (p.k1 * p.l);
  double c2 = (p.k2 * p.l) * (p.k2 * p.l);

  double total = 0.0;
  std::size_t count = mu_a.size();
  for (std::size_t i = 0; i < count; ++i) {
    double ma = mu_a.values[i];
    double mb = mu_b.values[i];
    double va = raw_aa.values[i] - ma * ma;
    double vb = raw_bb.values[i] - mb * mb;
    double vab = raw_ab.values[i] - ma * mb;
    double num = (2.0 * ma * mb + c1) * (2.0 * vab + c2);
    double den = (ma * ma + mb * mb + c1) * (va + vb + c2);
    total += num / den;
  }
  return total / static_cast<double>(count);
}

double block_dissimilarity(const SalientBlocks& a, const SalientBlocks& b,
                           const SsimParams& p) {
  if (a.blocks.size() != b.blocks.size() || a.blocks.empty())
    throw Error("block_dissimilarity: block count mismatch");
  double agg = 0.0;
  bool first = true;
  for (std::size_t j = 0; j < a.blocks.size(); ++j) {
    double s = mssim(a.blocks[j], b.blocks[j], p);
    if (p.aggregate == SsimAggregate::mean) {
      agg += s;
    } else {
      agg = first ? s : std::min(agg, s);
    }
    first = false;
  }
  if (p.aggregate == SsimAggregate::mean)
    agg /= static_cast<double>(a.blocks.size());
  return 1.0 - agg;
}

}  // namespace wce
