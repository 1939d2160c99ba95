/*
 * Screening quality metrics and parameter sweep
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_METRICS_HPP
#define WCE_METRICS_HPP

#include <map>
#include <string>
#include <vector>

#include "wce/config.hpp"
#include "wce/frameio.hpp"

namespace wce {

struct MetricsReport {
  double er_rate = 0.0;
  double abnormal_recall = 1.0;
  long sd = 0;
  long k = 0;
  std::map<std::string, int> per_lesion_recall;  // lesion_id -> 0/1
  double play_time_original_min = 0.0;
  double play_time_screened_min = 0.0;
};

// Fraction of frames screened out: 1 - n_key/n_total. Requires
// 0 < n_key <= n_total.
double er_rate(long n_key, long n_total);

// Mean over readers of (1 - cluster_count/n_total).
double subjective_reduction_ratio(const std::vector<long>& doctor_cluster_counts,
                                  long n_total);

// Per-lesion hit indicator: a lesion counts as found when any of its frames
// survives screening. No lesions means nothing can be missed (recall 1.0).
// Fills sd, k, abnormal_recall, and per_lesion_recall.
MetricsReport abnormal_recall(const AnnotationSet& annotations,
                              const ScreeningResult& result);

// Full report for a screening run: recall fields plus er_rate and play-time
// estimates. Requires matching total_frames on both inputs.
MetricsReport evaluate_screening(const AnnotationSet& annotations,
                                 const ScreeningResult& result,
                                 double play_rate);

std::string report_json(const MetricsReport& report);

struct SweepRow {
  double t1 = 0.0;
  double t_ssim = 0.0;
  double er_rate = 0.0;
  double abnormal_recall = 0.0;
};

struct SweepTable {
  std::vector<SweepRow> rows;  // t1-major, then t_ssim, in grid order
};

// Screen the sequence at every (t1, t_ssim) grid point. Histograms,
// dendrograms, salient block coordinates, and pair scores are computed once
// per window and shared across the whole grid.
SweepTable sweep(const FrameSequence& frames, const AnnotationSet& annotations,
                 const std::vector<double>& t1_grid,
                 const std::vector<double>& t_ssim_grid,
                 const ScreenParams& params, int threads = 1);

std::vector<double> default_t1_grid();      // 0.18 to 0.88, step 0.10
std::vector<double> default_t_ssim_grid();  // 0.03 to 0.12, step 0.03

// CSV with header t1,t_ssim,er_rate,abnormal_recall; six decimals.
std::string sweep_csv(const SweepTable& table);
void write_sweep_csv(const SweepTable& table, const std::string& path);

}  // namespace wce

#endif
