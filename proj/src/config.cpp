/*
 * Screening parameters and config file handling
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/config.hpp"

#include <cstddef>
#include <fstream>
#include <stdexcept>

#include "wce/error.hpp"

namespace wce {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error("invalid value for " + key + ": " + value);
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error("invalid value for " + key + ": " + value);
  }
}

}  // namespace

CompareMode parse_compare_mode(const std::string& name) {
  if (name == "adjacent") return CompareMode::adjacent;
  if (name == "reference") return CompareMode::reference;
  throw Error("unknown compare mode: " + name);
}

const char* compare_mode_name(CompareMode mode) {
  return mode == CompareMode::adjacent ? "adjacent" : "reference";
}

void ScreenParams::validate() const {
  if (!(t1 > 0.0 && t1 <= 1.0))
    throw Error("screen.t1 must be in (0,1]");
  if (t_ssim < 0.0) throw Error("screen.t_ssim must be >= 0");
  if (play_rate <= 0.0) throw Error("screen.play_rate must be > 0");
  if (cluster.window_n < 1) throw Error("cluster.window_n must be >= 1");
  if (features.mask_dark_threshold < 0.0 ||
      features.mask_dark_threshold > 1.0)
    throw Error("features.mask_dark_threshold must be in [0,1]");
  if (saliency.sigma <= 0.0) throw Error("saliency.sigma must be > 0");
  if (saliency.block_size < 1) throw Error("saliency.block_size must be >= 1");
  if (saliency.top_k < 1) throw Error("saliency.k must be >= 1");
  if (ssim.window < 1 || ssim.window % 2 == 0)
    throw Error("ssim.window must be odd and >= 1");
  if (ssim.window > saliency.block_size)
    throw Error("ssim.window must be <= saliency.block_size");
  if (ssim.window_sigma <= 0.0) throw Error("ssim.sigma must be > 0");
  if (ssim.k1 <= 0.0) throw Error("ssim.k1 must be > 0");
  if (ssim.k2 <= 0.0) throw Error("ssim.k2 must be > 0");
  if (ssim.l <= 0.0) throw Error("ssim.l must be > 0");
}

void apply_config_value(ScreenParams& params, const std::string& key,
                        const std::string& value) {
  if (key == "screen.t1") {
    params.t1 = parse_double(key, value);
  } else if (key == "screen.t_ssim") {
    params.t_ssim = parse_double(key, value);
  } else if (key == "screen.compare_mode") {
    try {
      params.compare_mode = parse_compare_mode(value);
    } catch (const Error&) {
      throw Error("invalid value for " + key + ": " + value);
    }
  } else if (key == "screen.play_rate") {
    params.play_rate = parse_double(key, value);
  } else if (key == "cluster.window_n") {
    params.cluster.window_n = parse_int(key, value);
  } else if (key == "cluster.linkage") {
    try {
      params.cluster.linkage = parse_linkage(value);
    } catch (const Error&) {
      throw Error("invalid value for " + key + ": " + value);
    }
  } else if (key == "features.mask_dark_threshold") {
    params.features.mask_dark_threshold = parse_double(key, value);
  } else if (key == "saliency.sigma") {
    params.saliency.sigma = parse_double(key, value);
  } else if (key == "saliency.block_size") {
    params.saliency.block_size = parse_int(key, value);
  } else if (key == "saliency.k") {
    params.saliency.top_k = parse_int(key, value);
  } else if (key == "ssim.window") {
    params.ssim.window = parse_int(key, value);
  } else if (key == "ssim.sigma") {
    params.ssim.window_sigma = parse_double(key, value);
  } else if (key == "ssim.k1") {
    params.ssim.k1 = parse_double(key, value);
  } else if (key == "ssim.k2") {
    params.ssim.k2 = parse_double(key, value);
  } else if (key == "ssim.l") {
    params.ssim.l = parse_double(key, value);
  } else if (key == "ssim.aggregate") {
    try {
      params.ssim.aggregate = parse_ssim_aggregate(value);
    } catch (const Error&) {
      throw Error("invalid value for " + key + ": " + value);
    }
  } else {
    throw Error("unknown config key: " + key);
  }
}

ScreenParams load_config_file(const std::string& path,
                              const ScreenParams& base) {
  std::ifstream in(path);
  if (!in) throw Error("load_config_file: cannot open " + path);

  ScreenParams params = base;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    std::size_t eq = text.find('=');
    if (eq == std::string::npos)
      throw Error("load_config_file: " + path + ":" +
                  std::to_string(line_no) + ": expected key = value");
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty())
      throw Error("load_config_file: " + path + ":" +
                  std::to_string(line_no) + ": expected key = value");
    apply_config_value(params, key, value);
  }
  return params;
}

}  // namespace wce
