/*
 * Saliency maps and salient block selection
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_SALIENCY_HPP
#define WCE_SALIENCY_HPP

#include <cstdint>
#include <vector>

#include "wce/image.hpp"

namespace wce {

struct SaliencyParams {
  double sigma = 1.0;
  int block_size = 40;
  int top_k = 3;
};

struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // 0/1, row-major
  double threshold_used = 0.0;

  std::size_t count() const;
};

// Half-open pixel rectangle.
struct BlockRect {
  int x1 = 0;
  int y1 = 0;
  int x2 = 0;
  int y2 = 0;

  bool operator==(const BlockRect& o) const {
    return x1 == o.x1 && y1 == o.y1 && x2 == o.x2 && y2 == o.y2;
  }
};

struct BlockCoords {
  std::vector<BlockRect> blocks;  // descending salient count, raster tie-break
};

struct SalientBlocks {
  std::vector<ScalarField> blocks;  // luma values in [0,255]
};

// Per-pixel deviation between the Lab channels and their blurred versions,
// combined with the Euclidean norm.
ScalarField saliency_map(const Frame& frame, double sigma);
ScalarField saliency_map_lab(const ScalarField& l, const ScalarField& a,
                             const ScalarField& b, double sigma);

// Threshold at mean plus population standard deviation, strict comparison.
BinaryMask binarize(const ScalarField& map);

// Non-overlapping block_size tiles anchored at (0,0); trailing partial tiles
// are dropped. Returns the k tiles with the highest salient-pixel counts,
// ties resolved in raster order. Throws when the grid holds fewer than k.
BlockCoords top_blocks(const BinaryMask& mask, int block_size, int k);

// Copy each rectangle out of the frame as a luma block.
SalientBlocks extract_blocks(const Frame& frame, const BlockCoords& coords);

}  // namespace wce

#endif
