/*
 * Screening pipeline
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_PIPELINE_HPP
#define WCE_PIPELINE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wce/config.hpp"
#include "wce/frameio.hpp"
#include "wce/saliency.hpp"

namespace wce {

// Dissimilarity scorer for frame pairs within one span of a sequence.
// Decoded frames, salient block coordinates, and pair scores are memoized so
// repeated walks over the same span (different thresholds, different cluster
// cuts) never recompute them. Not safe for concurrent use; screening runs one
// scorer per window.
class PairScorer {
 public:
  PairScorer(const FrameSequence& frames, std::size_t begin, std::size_t end,
             const ScreenParams& params);

  // T for (base, candidate): one minus the aggregated MSSIM over the base
  // frame's salient blocks, extracted from both frames.
  double dissimilarity(std::size_t base_pos, std::size_t cand_pos);

  const Frame& frame(std::size_t pos);

 private:
  const FrameSequence& frames_;
  std::size_t begin_;
  ScreenParams params_;
  std::vector<std::shared_ptr<const Frame>> slots_;
  std::vector<std::optional<BlockCoords>> coords_;
  std::unordered_map<std::uint64_t, double> pair_t_;
};

// Walk one cluster in chronological order and keep its keyframes. The first
// member is always kept. In adjacent mode each member is compared against its
// predecessor; in reference mode against the most recent keyframe. A
// dissimilarity above t_ssim keeps the candidate. positions index into the
// scorer's sequence and must be ascending.
std::vector<long> screen_cluster(const std::vector<std::size_t>& positions,
                                 const FrameSequence& frames,
                                 PairScorer& scorer,
                                 const ScreenParams& params);

// Convenience entry over seq_ids with a self-contained scorer. Throws on an
// empty cluster or a member missing from the sequence.
std::vector<long> screen_cluster(const std::vector<long>& cluster,
                                 const FrameSequence& frames,
                                 const ScreenParams& params);

// HSV histogram rows for frames [begin, end) of the sequence.
std::vector<std::vector<double>> window_features(const FrameSequence& frames,
                                                 std::size_t begin,
                                                 std::size_t end,
                                                 const FeatureParams& params);

// Window the sequence, cluster each window on HSV histograms, cut at
// t1 * max merge height, and screen every cluster. Windows run in parallel
// when threads allows; the result does not depend on the thread count.
ScreeningResult screen_sequence(const FrameSequence& frames,
                                const ScreenParams& params, int threads = 1);

// Minutes of viewing time at the given playback rate. Throws on rate <= 0.
double estimate_play_time(long frame_count, double rate_frames_per_minute);

}  // namespace wce

#endif
