/*
 * Saliency maps and salient block selection
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wce/colorspace.hpp"
#include "wce/error.hpp"

namespace wce {

std::size_t BinaryMask::count() const {
  std::size_t n = 0;
  for (std::uint8_t b : bits) n += b;
  return n;
}

ScalarField saliency_map_lab(const ScalarField& l, const ScalarField& a,
                             const ScalarField& b, double sigma) {
  if (l.width != a.width || l.width != b.width || l.height != a.height ||
      l.height != b.height)
    throw Error("saliency_map: channel dimensions differ");
  ScalarField lg = gaussian_filter(l, sigma);
  ScalarField ag = gaussian_filter(a, sigma);
  ScalarField bg = gaussian_filter(b, sigma);

  ScalarField out(l.width, l.height);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double sl = l.values[i] - lg.values[i];
    double sa = a.values[i] - ag.values[i];
    double sb = b.values[i] - bg.values[i];
    out.values[i] = std::sqrt(sl * sl + sa * sa + sb * sb);
  }
  return out;
}

ScalarField saliency_map(const Frame& frame, double sigma) {
  if (frame.empty()) throw Error("saliency_map: empty frame");
  ScalarField l, a, b;
  lab_planes(frame, l, a, b);
  return saliency_map_lab(l, a, b, sigma);
}

BinaryMask binarize(const ScalarField& map) {
  if (map.size() == 0) throw Error("binarize: empty map");
  double n = static_cast<double>(map.size());
  double mean = 0.0;
  for (double v : map.values) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : map.values) var += (v - mean) * (v - mean);
  var /= n;
  double threshold = mean + std::sqrt(var);

  BinaryMask mask;
  mask.width = map.width;
  mask.height = map.height;
  mask.threshold_used = threshold;
  mask.bits.resize(map.size());
  for (std::size_t i = 0; i < map.size(); ++i)
    mask.bits[i] = map.values[i] > threshold ? 1 : 0;
  return mask;
}

BlockCoords top_blocks(const BinaryMask& mask, int block_size, int k) {
  if (block_size < 1) throw Error("top_blocks: block_size must be >= 1");
  if (k < 1) throw Error("top_blocks: k must be >= 1");
  int tiles_x = mask.width / block_size;
  int tiles_y = mask.height / block_size;
  long total = static_cast<long>(tiles_x) * tiles_y;
  if (total < k)
    throw Error("top_blocks: block grid has " + std::to_string(total) +
                " tiles, need " + std::to_string(k));

  std::vector<long> counts(static_cast<std::size_t>(total), 0);
  for (int ty = 0; ty < tiles_y; ++ty)
    for (int tx = 0; tx < tiles_x; ++tx) {
      long c = 0;
      for (int y = ty * block_size; y < (ty + 1) * block_size; ++y)
        for (int x = tx * block_size; x < (tx + 1) * block_size; ++x)
          c += mask.bits[static_cast<std::size_t>(y) * mask.width + x];
      counts[static_cast<std::size_t>(ty) * tiles_x + tx] = c;
    }

  std::vector<int> order(counts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (counts[a] != counts[b]) return counts[a] > counts[b];
    return a < b;
  });

  BlockCoords out;
  out.blocks.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    int tile = order[static_cast<std::size_t>(i)];
    int tx = tile % tiles_x;
    int ty = tile / tiles_x;
    out.blocks.push_back({tx * block_size, ty * block_size,
                          (tx + 1) * block_size, (ty + 1) * block_size});
  }
  return out;
}

SalientBlocks extract_blocks(const Frame& frame, const BlockCoords& coords) {
  SalientBlocks out;
  out.blocks.reserve(coords.blocks.size());
  for (const BlockRect& r : coords.blocks) {
    if (r.x1 < 0 || r.y1 < 0 || r.x2 > frame.width || r.y2 > frame.height ||
        r.x1 >= r.x2 || r.y1 >= r.y2)
      throw Error("extract_blocks: rectangle out of frame bounds");
    ScalarField block(r.x2 - r.x1, r.y2 - r.y1);
    for (int y = r.y1; y < r.y2; ++y)
      for (int x = r.x1; x < r.x2; ++x) {
        const std::uint8_t* px = frame.rgb(x, y);
        block.at(x - r.x1, y - r.y1) = rgb_to_luma(px[0], px[1], px[2]);
      }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace wce
