/*
 * Sequence, annotation, and manifest I/O
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_FRAMEIO_HPP
#define WCE_FRAMEIO_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "wce/image.hpp"

namespace wce {

// An ordered frame source. File-backed sequences record paths at load time
// and decode lazily on access; in-memory sequences hold the frames directly.
class FrameSequence {
 public:
  static FrameSequence from_frames(std::vector<Frame> frames,
                                   std::string source = "<memory>");
  static FrameSequence from_files(std::vector<long> seq_ids,
                                  std::vector<std::string> paths, int width,
                                  int height, std::string source);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  long seq_id(std::size_t pos) const { return ids_[pos]; }
  const std::vector<long>& seq_ids() const { return ids_; }
  int width() const { return width_; }
  int height() const { return height_; }
  const std::string& source_path() const { return source_; }

  // Decode (or fetch) the frame at a position. File-backed loads are not
  // cached here; callers hold the pointer for as long as they need it.
  std::shared_ptr<const Frame> load(std::size_t pos) const;

 private:
  std::string source_;
  int width_ = 0;
  int height_ = 0;
  std::vector<long> ids_;
  std::vector<std::string> paths_;
  std::vector<std::shared_ptr<const Frame>> frames_;
};

// Scan a directory for files matching a glob pattern, order them by the
// numeric portion of the filename, and validate a shared resolution from the
// image headers.
FrameSequence load_sequence(const std::string& dir_path,
                            const std::string& pattern);

struct Lesion {
  std::string lesion_id;
  std::string cest_category;
  std::set<long> frame_ids;
};

struct AnnotationSet {
  std::vector<Lesion> lesions;
  long total_frames = 0;
};

AnnotationSet load_annotations(const std::string& path);
void save_annotations(const AnnotationSet& annotations,
                      const std::string& path);

struct ScreeningResult {
  std::vector<long> keyframe_ids;  // ascending, unique
  long total_frames = 0;
  double t1 = 0.48;
  double t_ssim = 0.03;
  int window_n = 64;
};

// Written through a temp file and renamed, so a partial manifest never
// appears at the target path.
void write_manifest(const ScreeningResult& result, const std::string& path);
ScreeningResult read_manifest(const std::string& path);

}  // namespace wce

#endif
