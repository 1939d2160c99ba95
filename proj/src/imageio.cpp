/*
 * Image codecs and header probing
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/imageio.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>

#include "wce/error.hpp"

namespace wce {

namespace {

std::uint32_t be32(const unsigned char* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) |
         static_cast<std::uint32_t>(p[3]);
}

std::int32_t le32(const unsigned char* p) {
  return static_cast<std::int32_t>(
      static_cast<std::uint32_t>(p[0]) |
      (static_cast<std::uint32_t>(p[1]) << 8) |
      (static_cast<std::uint32_t>(p[2]) << 16) |
      (static_cast<std::uint32_t>(p[3]) << 24));
}

std::uint16_t be16(const unsigned char* p) {
  return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}

ImageInfo probe_jpeg(std::ifstream& in, const std::string& path) {
  // Walk the marker segments until a start-of-frame header.
  while (in) {
    int byte = in.get();
    if (byte != 0xFF) continue;
    int marker = in.get();
    while (marker == 0xFF) marker = in.get();
    if (marker < 0) break;
    if (marker == 0xD8 || (marker >= 0xD0 && marker <= 0xD7) || marker == 0x01)
      continue;
    unsigned char lenbuf[2];
    if (!in.read(reinterpret_cast<char*>(lenbuf), 2)) break;
    int seg_len = (lenbuf[0] << 8) | lenbuf[1];
    if (seg_len < 2) break;
    bool sof = (marker >= 0xC0 && marker <= 0xCF) && marker != 0xC4 &&
               marker != 0xC8 && marker != 0xCC;
    if (sof) {
      unsigned char body[5];
      if (!in.read(reinterpret_cast<char*>(body), 5)) break;
      ImageInfo info;
      info.height = be16(body + 1);
      info.width = be16(body + 3);
      if (info.width <= 0 || info.height <= 0) break;
      return info;
    }
    in.seekg(seg_len - 2, std::ios::cur);
  }
  throw Error("probe_image: no frame header in " + path);
}

}  // namespace

Frame read_image(const std::string& path, long seq_id) {
  cv::Mat bgr = cv::imread(path, cv::IMREAD_COLOR);
  if (bgr.empty()) throw Error("read_image: failed to decode " + path);

  Frame frame(seq_id, bgr.cols, bgr.rows);
  for (int y = 0; y < bgr.rows; ++y) {
    const unsigned char* row = bgr.ptr<unsigned char>(y);
    std::uint8_t* out = frame.rgb(0, y);
    for (int x = 0; x < bgr.cols; ++x) {
      out[3 * x] = row[3 * x + 2];
      out[3 * x + 1] = row[3 * x + 1];
      out[3 * x + 2] = row[3 * x];
    }
  }
  return frame;
}

void write_image(const Frame& frame, const std::string& path) {
  if (frame.empty()) throw Error("write_image: empty frame");
  cv::Mat bgr(frame.height, frame.width, CV_8UC3);
  for (int y = 0; y < frame.height; ++y) {
    unsigned char* row = bgr.ptr<unsigned char>(y);
    const std::uint8_t* in = frame.rgb(0, y);
    for (int x = 0; x < frame.width; ++x) {
      row[3 * x] = in[3 * x + 2];
      row[3 * x + 1] = in[3 * x + 1];
      row[3 * x + 2] = in[3 * x];
    }
  }
  if (!cv::imwrite(path, bgr))
    throw Error("write_image: failed to write " + path);
}

ImageInfo probe_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("probe_image: cannot open " + path);

  unsigned char head[26] = {0};
  in.read(reinterpret_cast<char*>(head), sizeof(head));
  std::streamsize got = in.gcount();

  if (got >= 24 && head[0] == 0x89 && head[1] == 'P' && head[2] == 'N' &&
      head[3] == 'G') {
    ImageInfo info;
    info.width = static_cast<int>(be32(head + 16));
    info.height = static_cast<int>(be32(head + 20));
    if (info.width <= 0 || info.height <= 0)
      throw Error("probe_image: bad png header in " + path);
    return info;
  }
  if (got >= 26 && head[0] == 'B' && head[1] == 'M') {
    ImageInfo info;
    info.width = le32(head + 18);
    info.height = std::abs(le32(head + 22));
    if (info.width <= 0 || info.height <= 0)
      throw Error("probe_image: bad bmp header in " + path);
    return info;
  }
  if (got >= 2 && head[0] == 0xFF && head[1] == 0xD8) {
    in.clear();
    in.seekg(2);
    return probe_jpeg(in, path);
  }
  throw Error("probe_image: unsupported or corrupt file " + path);
}

void write_gray_image(const ScalarField& field, const std::string& path) {
  cv::Mat gray(field.height, field.width, CV_8UC1);
  for (int y = 0; y < field.height; ++y) {
    unsigned char* row = gray.ptr<unsigned char>(y);
    for (int x = 0; x < field.width; ++x) {
      long v = std::lround(field.at(x, y));
      row[x] = static_cast<unsigned char>(std::clamp(v, 0L, 255L));
    }
  }
  if (!cv::imwrite(path, gray))
    throw Error("write_gray_image: failed to write " + path);
}

}  // namespace wce
