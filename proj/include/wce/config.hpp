/*
 * Screening parameters and config file handling
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_CONFIG_HPP
#define WCE_CONFIG_HPP

#include <string>

#include "wce/features.hpp"
#include "wce/hcluster.hpp"
#include "wce/saliency.hpp"
#include "wce/ssim.hpp"

namespace wce {

enum class CompareMode { adjacent, reference };

CompareMode parse_compare_mode(const std::string& name);
const char* compare_mode_name(CompareMode mode);

struct ClusterParams {
  int window_n = 64;
  Linkage linkage = Linkage::average;
};

struct ScreenParams {
  double t1 = 0.48;
  double t_ssim = 0.03;
  CompareMode compare_mode = CompareMode::adjacent;
  double play_rate = 984.1;  // frames per minute
  ClusterParams cluster;
  FeatureParams features;
  SaliencyParams saliency;
  SsimParams ssim;

  // Throws naming the offending dotted config key.
  void validate() const;
};

// Apply one dotted key/value pair (the config file grammar and the CLI
// override path share this). Unknown keys and unparsable values throw.
void apply_config_value(ScreenParams& params, const std::string& key,
                        const std::string& value);

// Flat "key = value" file with '#' comments and blank lines.
ScreenParams load_config_file(const std::string& path,
                              const ScreenParams& base);

}  // namespace wce

#endif
