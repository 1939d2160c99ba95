/*
 * Image codecs and header probing
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_IMAGEIO_HPP
#define WCE_IMAGEIO_HPP

#include <string>

#include "wce/image.hpp"

namespace wce {

struct ImageInfo {
  int width = 0;
  int height = 0;
};

// Decode a PNG/JPEG/BMP file into an RGB frame.
Frame read_image(const std::string& path, long seq_id);

// Encode a frame; the format is chosen by the file extension.
void write_image(const Frame& frame, const std::string& path);

// Read image dimensions from the file header without decoding pixels.
ImageInfo probe_image(const std::string& path);

// Write a scalar field as 8-bit grayscale; values are rounded and clamped
// to [0,255].
void write_gray_image(const ScalarField& field, const std::string& path);

}  // namespace wce

#endif
