/*
 * Screening quality metrics and parameter sweep
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "wce/error.hpp"
#include "wce/hcluster.hpp"
#include "wce/parallel.hpp"
#include "wce/pipeline.hpp"

namespace wce {

double er_rate(long n_key, long n_total) {
  if (n_total <= 0) throw Error("er_rate needs a positive frame total");
  if (n_key <= 0) throw Error("er_rate needs a positive keyframe count");
  if (n_key > n_total)
    throw Error("keyframe count " + std::to_string(n_key) +
                " exceeds frame total " + std::to_string(n_total));
  return 1.0 - static_cast<double>(n_key) / static_cast<double>(n_total);
}

double subjective_reduction_ratio(const std::vector<long>& doctor_cluster_counts,
                                  long n_total) {
  if (doctor_cluster_counts.empty())
    throw Error("subjective_reduction_ratio needs at least one reader");
  if (n_total <= 0)
    throw Error("subjective_reduction_ratio needs a positive frame total");
  double sum = 0.0;
  for (long count : doctor_cluster_counts) {
    if (count < 0 || count > n_total)
      throw Error("cluster count " + std::to_string(count) +
                  " outside [0, " + std::to_string(n_total) + "]");
    sum += 1.0 - static_cast<double>(count) / static_cast<double>(n_total);
  }
  return sum / static_cast<double>(doctor_cluster_counts.size());
}

MetricsReport abnormal_recall(const AnnotationSet& annotations,
                              const ScreeningResult& result) {
  MetricsReport report;
  report.k = static_cast<long>(annotations.lesions.size());
  for (const Lesion& lesion : annotations.lesions) {
    if (report.per_lesion_recall.count(lesion.lesion_id))
      throw Error("duplicate lesion id: " + lesion.lesion_id);
    int hit = 0;
    for (long id : lesion.frame_ids) {
      if (id < 0 || id >= result.total_frames)
        throw Error("lesion " + lesion.lesion_id + " references frame " +
                    std::to_string(id) + " outside the screened sequence");
      if (std::binary_search(result.keyframe_ids.begin(),
                             result.keyframe_ids.end(), id)) {
        hit = 1;
        break;
      }
    }
    report.per_lesion_recall[lesion.lesion_id] = hit;
    report.sd += hit;
  }
  report.abnormal_recall =
      report.k == 0 ? 1.0
                    : static_cast<double>(report.sd) /
                          static_cast<double>(report.k);
  return report;
}

MetricsReport evaluate_screening(const AnnotationSet& annotations,
                                 const ScreeningResult& result,
                                 double play_rate) {
  if (annotations.total_frames != result.total_frames)
    throw Error("annotation covers " +
                std::to_string(annotations.total_frames) +
                " frames but the manifest covers " +
                std::to_string(result.total_frames));
  MetricsReport report = abnormal_recall(annotations, result);
  report.er_rate = er_rate(static_cast<long>(result.keyframe_ids.size()),
                           result.total_frames);
  report.play_time_original_min =
      estimate_play_time(result.total_frames, play_rate);
  report.play_time_screened_min = estimate_play_time(
      static_cast<long>(result.keyframe_ids.size()), play_rate);
  return report;
}

std::string report_json(const MetricsReport& report) {
  nlohmann::ordered_json doc;
  doc["er_rate"] = report.er_rate;
  doc["abnormal_recall"] = report.abnormal_recall;
  doc["sd"] = report.sd;
  doc["k"] = report.k;
  doc["per_lesion_recall"] = nlohmann::ordered_json::object();
  for (const auto& [lesion_id, hit] : report.per_lesion_recall)
    doc["per_lesion_recall"][lesion_id] = hit;
  doc["play_time_original_min"] = report.play_time_original_min;
  doc["play_time_screened_min"] = report.play_time_screened_min;
  return doc.dump(2);
}

namespace {

void check_grid(const std::vector<double>& grid, const char* name) {
  if (grid.empty())
    throw Error(std::string("sweep needs a non-empty ") + name + " grid");
  std::set<double> seen(grid.begin(), grid.end());
  if (seen.size() != grid.size())
    throw Error(std::string("duplicate value in ") + name + " grid");
}

}  // namespace

SweepTable sweep(const FrameSequence& frames, const AnnotationSet& annotations,
                 const std::vector<double>& t1_grid,
                 const std::vector<double>& t_ssim_grid,
                 const ScreenParams& params, int threads) {
  check_grid(t1_grid, "t1");
  check_grid(t_ssim_grid, "t_ssim");
  if (frames.empty()) throw Error("cannot sweep an empty sequence");
  if (annotations.total_frames != static_cast<long>(frames.size()))
    throw Error("annotation covers " +
                std::to_string(annotations.total_frames) +
                " frames but the sequence has " +
                std::to_string(frames.size()));
  for (double t1 : t1_grid)
    for (double t_ssim : t_ssim_grid) {
      ScreenParams point = params;
      point.t1 = t1;
      point.t_ssim = t_ssim;
      point.validate();
    }

  std::vector<std::pair<std::size_t, std::size_t>> windows =
      window_partition(frames.size(), params.cluster.window_n);
  std::size_t points = t1_grid.size() * t_ssim_grid.size();

  // kept[point][window]: keyframes of one window at one grid point.
  std::vector<std::vector<std::vector<long>>> kept(
      points, std::vector<std::vector<long>>(windows.size()));

  parallel_for(windows.size(), threads, [&](std::size_t w) {
    std::size_t begin = windows[w].first;
    std::size_t end = windows[w].second;

    std::vector<std::vector<double>> histograms =
        window_features(frames, begin, end, params.features);
    std::vector<long> seq_ids(frames.seq_ids().begin() + begin,
                              frames.seq_ids().begin() + end);
    Dendrogram tree =
        build_dendrogram(histograms, seq_ids, params.cluster.linkage);
    PairScorer scorer(frames, begin, end, params);

    for (std::size_t i = 0; i < t1_grid.size(); ++i) {
      std::vector<std::vector<std::size_t>> clusters;
      for (const std::vector<long>& cluster :
           cut_dendrogram(tree, t1_grid[i])) {
        std::vector<std::size_t> positions;
        positions.reserve(cluster.size());
        for (long id : cluster)
          positions.push_back(
              begin + static_cast<std::size_t>(
                          std::lower_bound(seq_ids.begin(), seq_ids.end(),
                                           id) -
                          seq_ids.begin()));
        clusters.push_back(std::move(positions));
      }
      for (std::size_t j = 0; j < t_ssim_grid.size(); ++j) {
        ScreenParams point = params;
        point.t1 = t1_grid[i];
        point.t_ssim = t_ssim_grid[j];
        std::vector<long>& slot = kept[i * t_ssim_grid.size() + j][w];
        for (const std::vector<std::size_t>& positions : clusters) {
          std::vector<long> part =
              screen_cluster(positions, frames, scorer, point);
          slot.insert(slot.end(), part.begin(), part.end());
        }
        std::sort(slot.begin(), slot.end());
      }
    }
  });

  SweepTable table;
  table.rows.reserve(points);
  for (std::size_t i = 0; i < t1_grid.size(); ++i) {
    for (std::size_t j = 0; j < t_ssim_grid.size(); ++j) {
      ScreeningResult result;
      result.total_frames = static_cast<long>(frames.size());
      result.t1 = t1_grid[i];
      result.t_ssim = t_ssim_grid[j];
      result.window_n = params.cluster.window_n;
      for (const std::vector<long>& part : kept[i * t_ssim_grid.size() + j])
        result.keyframe_ids.insert(result.keyframe_ids.end(), part.begin(),
                                   part.end());
      std::sort(result.keyframe_ids.begin(), result.keyframe_ids.end());

      SweepRow row;
      row.t1 = t1_grid[i];
      row.t_ssim = t_ssim_grid[j];
      row.er_rate = er_rate(static_cast<long>(result.keyframe_ids.size()),
                            result.total_frames);
      row.abnormal_recall = abnormal_recall(annotations, result).abnormal_recall;
      table.rows.push_back(row);
    }
  }
  return table;
}

std::vector<double> default_t1_grid() {
  return {0.18, 0.28, 0.38, 0.48, 0.58, 0.68, 0.78, 0.88};
}

std::vector<double> default_t_ssim_grid() { return {0.03, 0.06, 0.09, 0.12}; }

std::string sweep_csv(const SweepTable& table) {
  std::string out = "t1,t_ssim,er_rate,abnormal_recall\n";
  char line[128];
  for (const SweepRow& row : table.rows) {
    std::snprintf(line, sizeof(line), "%.6f,%.6f,%.6f,%.6f\n", row.t1,
                  row.t_ssim, row.er_rate, row.abnormal_recall);
    out += line;
  }
  return out;
}

void write_sweep_csv(const SweepTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << sweep_csv(table);
  if (!out.flush()) throw Error("failed writing " + path);
}

}  // namespace wce
