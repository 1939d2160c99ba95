/*
 * Structural similarity of grayscale blocks
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_SSIM_HPP
#define WCE_SSIM_HPP

#include <string>

#include "wce/image.hpp"
#include "wce/saliency.hpp"

namespace wce {

enum class SsimAggregate { mean, min };

SsimAggregate parse_ssim_aggregate(const std::string& name);
const char* ssim_aggregate_name(SsimAggregate aggregate);

struct SsimParams {
  int window = 11;
  double window_sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double l = 255.0;
  SsimAggregate aggregate = SsimAggregate::mean;
};

// Mean of local SSIM over sliding Gaussian-weighted windows; valid window
// positions only. Identical inputs score exactly 1.0.
double mssim(const ScalarField& a, const ScalarField& b, const SsimParams& p);

// Dissimilarity of two salient block sets: 1 minus the aggregated per-block
// MSSIM (arithmetic mean by default, minimum when configured).
double block_dissimilarity(const SalientBlocks& a, const SalientBlocks& b,
                           const SsimParams& p);

}  // namespace wce

#endif
