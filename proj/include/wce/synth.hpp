/*
 * Synthetic sequence generator
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_SYNTH_HPP
#define WCE_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wce/frameio.hpp"
#include "wce/image.hpp"

namespace wce {

// scenes x repeats striped color frames with optional per-pixel Gaussian
// noise and a per-repeat horizontal drift, plus high-contrast outlier frames
// ("lesions") spliced in at evenly spaced positions. Scene colors are chosen
// so that noise never moves a pixel out of its HSV histogram bin: repeats of
// one scene are identical to the clustering stage and only the SSIM stage
// can tell them apart.
struct SynthParams {
  int scenes = 50;
  int repeats = 200;
  int lesions = 20;
  double noise = 0.5;  // Gaussian sigma in 8-bit channel units
  int drift = 0;       // horizontal pattern shift per repeat, pixels
  int width = 240;
  int height = 240;
  std::uint64_t seed = 7;
  std::string format = "bmp";  // bmp, png, or jpg

  long total_frames() const {
    return static_cast<long>(scenes) * repeats + lesions;
  }
};

struct SyntheticCase {
  std::vector<Frame> frames;
  AnnotationSet annotations;
};

// Whole case in memory; meant for tests at small sizes.
SyntheticCase generate_synthetic(const SynthParams& params);

// Stream frames to a directory as zero-padded image files and write the
// matching annotations.json. Returns the annotations.
AnnotationSet write_synthetic(const SynthParams& params,
                              const std::string& dir_path);

}  // namespace wce

#endif
