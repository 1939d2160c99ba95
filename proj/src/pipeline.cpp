/*
 * Screening pipeline
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/pipeline.hpp"

#include <algorithm>

#include "wce/error.hpp"
#include "wce/features.hpp"
#include "wce/hcluster.hpp"
#include "wce/parallel.hpp"
#include "wce/ssim.hpp"

namespace wce {

PairScorer::PairScorer(const FrameSequence& frames, std::size_t begin,
                       std::size_t end, const ScreenParams& params)
    : frames_(frames), begin_(begin), params_(params), slots_(end - begin),
      coords_(end - begin) {}

const Frame& PairScorer::frame(std::size_t pos) {
  auto& slot = slots_[pos - begin_];
  if (!slot) slot = frames_.load(pos);
  return *slot;
}

double PairScorer::dissimilarity(std::size_t base_pos, std::size_t cand_pos) {
  std::uint64_t key = static_cast<std::uint64_t>(base_pos - begin_) * slots_.size() +
                      (cand_pos - begin_);
  auto hit = pair_t_.find(key);
  if (hit != pair_t_.end()) return hit->second;

  const Frame& base = frame(base_pos);
  const Frame& cand = frame(cand_pos);
  auto& where = coords_[base_pos - begin_];
  if (!where) {
    BinaryMask mask = binarize(saliency_map(base, params_.saliency.sigma));
    where = top_blocks(mask, params_.saliency.block_size,
                       params_.saliency.top_k);
  }
  double t = block_dissimilarity(extract_blocks(base, *where),
                                 extract_blocks(cand, *where), params_.ssim);
  pair_t_.emplace(key, t);
  return t;
}

std::vector<long> screen_cluster(const std::vector<std::size_t>& positions,
                                 const FrameSequence& frames,
                                 PairScorer& scorer,
                                 const ScreenParams& params) {
  if (positions.empty()) throw Error("cannot screen an empty cluster");
  std::vector<long> kept;
  kept.push_back(frames.seq_id(positions[0]));
  std::size_t base = positions[0];
  for (std::size_t i = 1; i < positions.size(); ++i) {
    std::size_t cand = positions[i];
    if (scorer.dissimilarity(base, cand) > params.t_ssim) {
      kept.push_back(frames.seq_id(cand));
      base = cand;
    } else if (params.compare_mode == CompareMode::adjacent) {
      base = cand;
    }
  }
  return kept;
}

namespace {

std::size_t position_of(const FrameSequence& frames, long seq_id) {
  const std::vector<long>& ids = frames.seq_ids();
  auto it = std::lower_bound(ids.begin(), ids.end(), seq_id);
  if (it == ids.end() || *it != seq_id)
    throw Error("cluster member " + std::to_string(seq_id) +
                " is not in the sequence");
  return static_cast<std::size_t>(it - ids.begin());
}

std::vector<long> screen_window(const FrameSequence& frames, std::size_t begin,
                                std::size_t end, const ScreenParams& params) {
  PairScorer scorer(frames, begin, end, params);

  std::vector<std::vector<double>> histograms;
  histograms.reserve(end - begin);
  std::vector<long> seq_ids;
  seq_ids.reserve(end - begin);
  for (std::size_t pos = begin; pos < end; ++pos) {
    ColorFeature feature = hsv_histogram(scorer.frame(pos), params.features);
    histograms.emplace_back(feature.bins.begin(), feature.bins.end());
    seq_ids.push_back(frames.seq_id(pos));
  }

  Dendrogram tree =
      build_dendrogram(histograms, seq_ids, params.cluster.linkage);

  std::vector<long> kept;
  for (const std::vector<long>& cluster : cut_dendrogram(tree, params.t1)) {
    std::vector<std::size_t> positions;
    positions.reserve(cluster.size());
    for (long id : cluster) positions.push_back(position_of(frames, id));
    std::vector<long> part = screen_cluster(positions, frames, scorer, params);
    kept.insert(kept.end(), part.begin(), part.end());
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

std::vector<long> screen_cluster(const std::vector<long>& cluster,
                                 const FrameSequence& frames,
                                 const ScreenParams& params) {
  params.validate();
  if (cluster.empty()) throw Error("cannot screen an empty cluster");

  std::vector<std::size_t> positions;
  positions.reserve(cluster.size());
  for (long id : cluster) positions.push_back(position_of(frames, id));
  std::sort(positions.begin(), positions.end());

  PairScorer scorer(frames, positions.front(), positions.back() + 1, params);
  return screen_cluster(positions, frames, scorer, params);
}

std::vector<std::vector<double>> window_features(const FrameSequence& frames,
                                                 std::size_t begin,
                                                 std::size_t end,
                                                 const FeatureParams& params) {
  std::vector<std::vector<double>> rows;
  rows.reserve(end - begin);
  for (std::size_t pos = begin; pos < end; ++pos) {
    ColorFeature feature = hsv_histogram(*frames.load(pos), params);
    rows.emplace_back(feature.bins.begin(), feature.bins.end());
  }
  return rows;
}

ScreeningResult screen_sequence(const FrameSequence& frames,
                                const ScreenParams& params, int threads) {
  params.validate();
  if (frames.empty()) throw Error("cannot screen an empty sequence");

  std::vector<std::pair<std::size_t, std::size_t>> windows =
      window_partition(frames.size(), params.cluster.window_n);
  std::vector<std::vector<long>> per_window(windows.size());
  parallel_for(windows.size(), threads, [&](std::size_t w) {
    per_window[w] =
        screen_window(frames, windows[w].first, windows[w].second, params);
  });

  ScreeningResult result;
  result.total_frames = static_cast<long>(frames.size());
  result.t1 = params.t1;
  result.t_ssim = params.t_ssim;
  result.window_n = params.cluster.window_n;
  for (const std::vector<long>& part : per_window)
    result.keyframe_ids.insert(result.keyframe_ids.end(), part.begin(),
                               part.end());
  std::sort(result.keyframe_ids.begin(), result.keyframe_ids.end());
  return result;
}

double estimate_play_time(long frame_count, double rate_frames_per_minute) {
  if (rate_frames_per_minute <= 0.0)
    throw Error("play rate must be > 0 frames per minute");
  if (frame_count < 0) throw Error("frame count must be >= 0");
  return static_cast<double>(frame_count) / rate_frames_per_minute;
}

}  // namespace wce
