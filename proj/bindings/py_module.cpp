/*
 * Python bindings for the screening library
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "wce/config.hpp"
#include "wce/frameio.hpp"
#include "wce/metrics.hpp"
#include "wce/pipeline.hpp"
#include "wce/synth.hpp"

namespace py = pybind11;

namespace {

// Options arrive as a {dotted.key: value} dict; values are converted
// through str() so floats and ints can be passed naturally.
wce::ScreenParams params_from(const py::dict& options) {
  wce::ScreenParams params;
  for (auto item : options) {
    std::string key = py::cast<std::string>(py::str(item.first));
    std::string value = py::cast<std::string>(py::str(item.second));
    wce::apply_config_value(params, key, value);
  }
  params.validate();
  return params;
}

py::dict result_dict(const wce::ScreeningResult& result) {
  py::dict d;
  d["keyframe_ids"] = result.keyframe_ids;
  d["total_frames"] = result.total_frames;
  d["t1"] = result.t1;
  d["t_ssim"] = result.t_ssim;
  d["window_n"] = result.window_n;
  return d;
}

py::dict report_dict(const wce::MetricsReport& report) {
  py::dict d;
  d["er_rate"] = report.er_rate;
  d["abnormal_recall"] = report.abnormal_recall;
  d["sd"] = report.sd;
  d["k"] = report.k;
  py::dict per;
  for (const auto& [lesion_id, hit] : report.per_lesion_recall)
    per[py::str(lesion_id)] = hit;
  d["per_lesion_recall"] = per;
  d["play_time_original_min"] = report.play_time_original_min;
  d["play_time_screened_min"] = report.play_time_screened_min;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Redundant-frame screening for capsule endoscopy sequences";
  m.attr("__version__") = "1.0.0";

  m.def(
      "screen_directory",
      [](const std::string& input_dir, const std::string& pattern,
         const py::dict& options, int threads, const std::string& manifest) {
        wce::ScreenParams params = params_from(options);
        wce::ScreeningResult result;
        {
          py::gil_scoped_release release;
          wce::FrameSequence frames = wce::load_sequence(input_dir, pattern);
          result = wce::screen_sequence(frames, params, threads);
          if (!manifest.empty()) wce::write_manifest(result, manifest);
        }
        return result_dict(result);
      },
      py::arg("input_dir"), py::arg("pattern") = "*.png",
      py::arg("options") = py::dict(), py::arg("threads") = 0,
      py::arg("manifest") = "",
      "Screen a frame directory; returns the kept frame ids and the "
      "parameters used. Writes a manifest when a path is given.");

  m.def(
      "evaluate",
      [](const std::string& manifest, const std::string& annotations,
         double play_rate) {
        wce::MetricsReport report;
        {
          py::gil_scoped_release release;
          wce::ScreeningResult result = wce::read_manifest(manifest);
          wce::AnnotationSet truth = wce::load_annotations(annotations);
          report = wce::evaluate_screening(truth, result, play_rate);
        }
        return report_dict(report);
      },
      py::arg("manifest"), py::arg("annotations"),
      py::arg("play_rate") = 984.1,
      "Score a manifest against an annotation file.");

  m.def(
      "sweep_directory",
      [](const std::string& input_dir, const std::string& pattern,
         const std::string& annotations, std::vector<double> t1_grid,
         std::vector<double> t_ssim_grid, const py::dict& options, int threads,
         const std::string& csv) {
        wce::ScreenParams params = params_from(options);
        if (t1_grid.empty()) t1_grid = wce::default_t1_grid();
        if (t_ssim_grid.empty()) t_ssim_grid = wce::default_t_ssim_grid();
        wce::SweepTable table;
        {
          py::gil_scoped_release release;
          wce::FrameSequence frames = wce::load_sequence(input_dir, pattern);
          wce::AnnotationSet truth;
          if (!annotations.empty())
            truth = wce::load_annotations(annotations);
          else
            truth.total_frames = static_cast<long>(frames.size());
          table = wce::sweep(frames, truth, t1_grid, t_ssim_grid, params,
                             threads);
          if (!csv.empty()) wce::write_sweep_csv(table, csv);
        }
        py::list rows;
        for (const wce::SweepRow& row : table.rows) {
          py::dict d;
          d["t1"] = row.t1;
          d["t_ssim"] = row.t_ssim;
          d["er_rate"] = row.er_rate;
          d["abnormal_recall"] = row.abnormal_recall;
          rows.append(d);
        }
        return rows;
      },
      py::arg("input_dir"), py::arg("pattern") = "*.png",
      py::arg("annotations") = "", py::arg("t1_grid") = std::vector<double>{},
      py::arg("t_ssim_grid") = std::vector<double>{},
      py::arg("options") = py::dict(), py::arg("threads") = 0,
      py::arg("csv") = "",
      "Scan a t1 x t_ssim grid over one sequence; returns one row per "
      "grid point. Writes a CSV when a path is given.");

  m.def(
      "synthesize",
      [](const std::string& out_dir, int scenes, int repeats, int lesions,
         double noise, int drift, int width, int height,
         unsigned long long seed, const std::string& format) {
        wce::SynthParams p;
        p.scenes = scenes;
        p.repeats = repeats;
        p.lesions = lesions;
        p.noise = noise;
        p.drift = drift;
        p.width = width;
        p.height = height;
        p.seed = seed;
        p.format = format;
        wce::AnnotationSet annotations;
        {
          py::gil_scoped_release release;
          annotations = wce::write_synthetic(p, out_dir);
        }
        py::list lesion_list;
        for (const wce::Lesion& lesion : annotations.lesions) {
          py::dict d;
          d["lesion_id"] = lesion.lesion_id;
          d["cest_category"] = lesion.cest_category;
          d["frame_ids"] = std::vector<long>(lesion.frame_ids.begin(),
                                             lesion.frame_ids.end());
          lesion_list.append(d);
        }
        py::dict out;
        out["total_frames"] = annotations.total_frames;
        out["lesions"] = lesion_list;
        return out;
      },
      py::arg("out_dir"), py::arg("scenes") = 50, py::arg("repeats") = 200,
      py::arg("lesions") = 20, py::arg("noise") = 0.5, py::arg("drift") = 0,
      py::arg("width") = 240, py::arg("height") = 240, py::arg("seed") = 7,
      py::arg("format") = "bmp",
      "Write a synthetic sequence plus annotations; returns the ground "
      "truth that was generated.");

  m.def("er_rate", &wce::er_rate, py::arg("n_key"), py::arg("n_total"),
        "Fraction of frames screened out: 1 - n_key/n_total.");

  m.def("subjective_reduction_ratio", &wce::subjective_reduction_ratio,
        py::arg("keep_counts"), py::arg("n_total"),
        "Mean reduction over per-reader keep counts.");

  m.def("estimate_play_time", &wce::estimate_play_time,
        py::arg("frame_count"), py::arg("play_rate") = 984.1,
        "Minutes needed to review frame_count frames at play_rate.");
}
