/*
 * Sequence, annotation, and manifest I/O
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/frameio.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <utility>

#include "wce/error.hpp"
#include "wce/imageio.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace wce {

namespace {

// Numeric id = last contiguous digit run in the file stem.
long filename_seq_id(const fs::path& p) {
  std::string stem = p.stem().string();
  int end = -1;
  for (int i = static_cast<int>(stem.size()) - 1; i >= 0; --i) {
    if (std::isdigit(static_cast<unsigned char>(stem[i]))) {
      end = i;
      break;
    }
  }
  if (end < 0)
    throw Error("load_sequence: no numeric id in filename " +
                p.filename().string());
  int begin = end;
  while (begin > 0 &&
         std::isdigit(static_cast<unsigned char>(stem[begin - 1])))
    --begin;
  return std::stol(stem.substr(begin, end - begin + 1));
}

void validate_result(const ScreeningResult& result, const std::string& where) {
  if (result.total_frames < 0)
    throw Error(where + ": negative total_frames");
  if (result.total_frames > 0 && result.keyframe_ids.empty())
    throw Error(where + ": empty keyframe set for a non-empty sequence");
  for (std::size_t i = 0; i < result.keyframe_ids.size(); ++i) {
    if (result.keyframe_ids[i] < 0)
      throw Error(where + ": negative keyframe id");
    if (i > 0 && result.keyframe_ids[i] <= result.keyframe_ids[i - 1])
      throw Error(where + ": keyframe ids must be strictly increasing");
  }
}

ordered_json parse_json_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw Error(std::string(what) + ": cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string(what) + ": malformed JSON in " + path + ": " +
                e.what());
  }
  return j;
}

}  // namespace

FrameSequence FrameSequence::from_frames(std::vector<Frame> frames,
                                         std::string source) {
  FrameSequence seq;
  seq.source_ = std::move(source);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Frame& f = frames[i];
    if (f.empty()) throw Error("FrameSequence: empty frame");
    if (i == 0) {
      seq.width_ = f.width;
      seq.height_ = f.height;
    } else {
      if (f.width != seq.width_ || f.height != seq.height_)
        throw Error("FrameSequence: mixed resolutions");
      if (f.seq_id <= frames[i - 1].seq_id)
        throw Error("FrameSequence: seq ids must be strictly increasing");
    }
    seq.ids_.push_back(f.seq_id);
  }
  for (Frame& f : frames)
    seq.frames_.push_back(std::make_shared<const Frame>(std::move(f)));
  return seq;
}

FrameSequence FrameSequence::from_files(std::vector<long> seq_ids,
                                        std::vector<std::string> paths,
                                        int width, int height,
                                        std::string source) {
  if (seq_ids.size() != paths.size())
    throw Error("FrameSequence: id/path count mismatch");
  for (std::size_t i = 1; i < seq_ids.size(); ++i)
    if (seq_ids[i] <= seq_ids[i - 1])
      throw Error("FrameSequence: seq ids must be strictly increasing");
  FrameSequence seq;
  seq.source_ = std::move(source);
  seq.width_ = width;
  seq.height_ = height;
  seq.ids_ = std::move(seq_ids);
  seq.paths_ = std::move(paths);
  return seq;
}

std::shared_ptr<const Frame> FrameSequence::load(std::size_t pos) const {
  if (pos >= ids_.size()) throw Error("FrameSequence: position out of range");
  if (!frames_.empty()) return frames_[pos];
  Frame f = read_image(paths_[pos], ids_[pos]);
  if (f.width != width_ || f.height != height_)
    throw Error("FrameSequence: decoded size differs from header for " +
                paths_[pos]);
  return std::make_shared<const Frame>(std::move(f));
}

FrameSequence load_sequence(const std::string& dir_path,
                            const std::string& pattern) {
  fs::path dir(dir_path);
  if (!fs::is_directory(dir))
    throw Error("load_sequence: missing directory " + dir_path);

  std::vector<std::pair<long, fs::path>> found;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (fnmatch(pattern.c_str(), name.c_str(), 0) != 0) continue;
    found.emplace_back(filename_seq_id(entry.path()), entry.path());
  }
  if (found.empty())
    throw Error("load_sequence: no frames matched " + pattern + " in " +
                dir_path);

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < found.size(); ++i)
    if (found[i].first == found[i - 1].first)
      throw Error("load_sequence: duplicate frame id " +
                  std::to_string(found[i].first) + " from " +
                  found[i].second.filename().string());

  int width = 0;
  int height = 0;
  std::vector<long> ids;
  std::vector<std::string> paths;
  for (const auto& [id, path] : found) {
    ImageInfo info = probe_image(path.string());
    if (ids.empty()) {
      width = info.width;
      height = info.height;
    } else if (info.width != width || info.height != height) {
      throw Error("load_sequence: mixed resolutions, " +
                  path.filename().string() + " is " +
                  std::to_string(info.width) + "x" +
                  std::to_string(info.height) + ", expected " +
                  std::to_string(width) + "x" + std::to_string(height));
    }
    ids.push_back(id);
    paths.push_back(path.string());
  }
  return FrameSequence::from_files(std::move(ids), std::move(paths), width,
                                   height, dir_path);
}

AnnotationSet load_annotations(const std::string& path) {
  ordered_json j = parse_json_file(path, "load_annotations");
  AnnotationSet out;
  try {
    out.total_frames = j.at("total_frames").get<long>();
    for (const auto& lj : j.at("lesions")) {
      Lesion lesion;
      lesion.lesion_id = lj.at("lesion_id").get<std::string>();
      lesion.cest_category = lj.at("cest_category").get<std::string>();
      for (const auto& id : lj.at("frame_ids"))
        lesion.frame_ids.insert(id.get<long>());
      out.lesions.push_back(std::move(lesion));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("load_annotations: bad schema in " + path + ": " + e.what());
  }
  if (out.total_frames < 0)
    throw Error("load_annotations: negative total_frames in " + path);
  for (const Lesion& lesion : out.lesions) {
    if (lesion.frame_ids.empty())
      throw Error("load_annotations: lesion " + lesion.lesion_id +
                  " has no frame ids");
    for (long id : lesion.frame_ids)
      if (id < 0 || id >= out.total_frames)
        throw Error("load_annotations: frame id " + std::to_string(id) +
                    " out of range for lesion " + lesion.lesion_id);
  }
  return out;
}

void save_annotations(const AnnotationSet& annotations,
                      const std::string& path) {
  ordered_json j;
  j["total_frames"] = annotations.total_frames;
  j["lesions"] = ordered_json::array();
  for (const Lesion& lesion : annotations.lesions) {
    ordered_json lj;
    lj["lesion_id"] = lesion.lesion_id;
    lj["cest_category"] = lesion.cest_category;
    lj["frame_ids"] = lesion.frame_ids;
    j["lesions"].push_back(std::move(lj));
  }
  std::ofstream out(path);
  if (!out) throw Error("save_annotations: cannot write " + path);
  out << j.dump(2) << "\n";
}

void write_manifest(const ScreeningResult& result, const std::string& path) {
  validate_result(result, "write_manifest");
  ordered_json j;
  j["total_frames"] = result.total_frames;
  j["params"] = {{"t1", result.t1},
                 {"t_ssim", result.t_ssim},
                 {"window_n", result.window_n}};
  j["keyframe_ids"] = result.keyframe_ids;

  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("write_manifest: cannot write " + tmp);
    out << j.dump(2) << "\n";
    if (!out) throw Error("write_manifest: write failed for " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("write_manifest: cannot replace " + path + ": " +
                ec.message());
  }
}

ScreeningResult read_manifest(const std::string& path) {
  ordered_json j = parse_json_file(path, "read_manifest");
  ScreeningResult result;
  try {
    result.total_frames = j.at("total_frames").get<long>();
    const auto& params = j.at("params");
    result.t1 = params.at("t1").get<double>();
    result.t_ssim = params.at("t_ssim").get<double>();
    result.window_n = params.at("window_n").get<int>();
    result.keyframe_ids = j.at("keyframe_ids").get<std::vector<long>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error("read_manifest: bad schema in " + path + ": " + e.what());
  }
  validate_result(result, "read_manifest");
  return result;
}

}  // namespace wce
