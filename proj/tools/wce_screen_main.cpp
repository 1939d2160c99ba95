/*
 * wce_screen command-line tool
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wce/config.hpp"
#include "wce/error.hpp"
#include "wce/frameio.hpp"
#include "wce/hcluster.hpp"
#include "wce/imageio.hpp"
#include "wce/metrics.hpp"
#include "wce/pipeline.hpp"
#include "wce/saliency.hpp"
#include "wce/synth.hpp"

namespace {

// Parameter sources for one command, applied in precedence order:
// built-in defaults, then the config file, then explicit flags.
struct ParamOpts {
  std::string config_path;
  std::vector<std::string> overrides;  // key=value pairs from --set

  double t1 = 0.0;
  double t_ssim = 0.0;
  double play_rate = 0.0;
  int window_n = 0;
  std::string compare_mode;
  std::string linkage;

  CLI::Option* t1_opt = nullptr;
  CLI::Option* t_ssim_opt = nullptr;
  CLI::Option* play_rate_opt = nullptr;
  CLI::Option* window_opt = nullptr;
  CLI::Option* compare_opt = nullptr;
  CLI::Option* linkage_opt = nullptr;
};

void add_param_options(CLI::App* cmd, ParamOpts& opts) {
  cmd->add_option("--config", opts.config_path,
                  "Config file with key = value lines");
  cmd->add_option("--set", opts.overrides,
                  "Extra parameter as key=value (repeatable)");
  opts.t1_opt =
      cmd->add_option("--t1", opts.t1, "Dendrogram cut ratio in (0,1]");
  opts.t_ssim_opt = cmd->add_option("--t-ssim", opts.t_ssim,
                                    "Keyframe dissimilarity threshold");
  opts.play_rate_opt = cmd->add_option("--play-rate", opts.play_rate,
                                       "Playback rate, frames per minute");
  opts.window_opt =
      cmd->add_option("--window-n", opts.window_n, "Clustering window size");
  opts.compare_opt = cmd->add_option("--compare-mode", opts.compare_mode,
                                     "adjacent or reference");
  opts.linkage_opt = cmd->add_option("--linkage", opts.linkage,
                                     "average, single, or complete");
}

wce::ScreenParams resolve_params(const ParamOpts& opts) {
  wce::ScreenParams params;
  if (!opts.config_path.empty())
    params = wce::load_config_file(opts.config_path, params);
  for (const std::string& entry : opts.overrides) {
    std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw wce::Error("--set expects key=value, got: " + entry);
    std::string key = entry.substr(0, eq);
    std::string value = entry.substr(eq + 1);
    while (!key.empty() && key.back() == ' ') key.pop_back();
    while (!value.empty() && value.front() == ' ') value.erase(0, 1);
    wce::apply_config_value(params, key, value);
  }
  if (opts.t1_opt->count()) params.t1 = opts.t1;
  if (opts.t_ssim_opt->count()) params.t_ssim = opts.t_ssim;
  if (opts.play_rate_opt->count()) params.play_rate = opts.play_rate;
  if (opts.window_opt->count()) params.cluster.window_n = opts.window_n;
  if (opts.compare_opt->count())
    params.compare_mode = wce::parse_compare_mode(opts.compare_mode);
  if (opts.linkage_opt->count())
    params.cluster.linkage = wce::parse_linkage(opts.linkage);
  params.validate();
  return params;
}

int resolve_thread_count(const CLI::Option* threads_opt, int flag_value) {
  if (threads_opt && threads_opt->count()) return flag_value;
  const char* env = std::getenv("WCE_SCREEN_THREADS");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    int value = std::stoi(env, &used);
    if (used != std::string(env).size() || value < 0)
      throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw wce::Error(std::string("WCE_SCREEN_THREADS must be a non-negative "
                                 "integer, got: ") +
                     env);
  }
}

std::vector<double> parse_grid(const std::string& text, const char* name) {
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      double value = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      grid.push_back(value);
    } catch (const std::exception&) {
      throw wce::Error(std::string("bad ") + name + " grid entry: " + item);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return grid;
}

// Split command execution so parameter problems exit 2 and runtime
// failures exit 1.
int run_command(const std::function<void()>& resolve,
                const std::function<void()>& run) {
  try {
    resolve();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

nlohmann::ordered_json blocks_json(const wce::BlockCoords& coords) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const wce::BlockRect& rect : coords.blocks) {
    nlohmann::ordered_json entry;
    entry["x1"] = rect.x1;
    entry["y1"] = rect.y1;
    entry["x2"] = rect.x2;
    entry["y2"] = rect.y2;
    list.push_back(entry);
  }
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Redundant-frame screening for capsule endoscopy sequences"};
  app.require_subcommand(1);

  // screen
  auto* screen = app.add_subcommand("screen", "Screen a frame directory");
  std::string screen_input, screen_pattern = "*.png", screen_out;
  int screen_threads = 0;
  screen->add_option("--input", screen_input, "Frame directory")->required();
  screen->add_option("--pattern", screen_pattern,
                     "Filename glob (default *.png)");
  screen->add_option("--out", screen_out, "Manifest path")->required();
  auto* screen_threads_opt = screen->add_option(
      "--threads", screen_threads, "Worker threads, 0 = all cores");
  ParamOpts screen_params_opts;
  add_param_options(screen, screen_params_opts);

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score a manifest");
  std::string eval_manifest, eval_annotations;
  double eval_play_rate = 984.1;
  evaluate->add_option("--manifest", eval_manifest, "Manifest path")
      ->required();
  evaluate->add_option("--annotations", eval_annotations, "Annotation path")
      ->required();
  evaluate->add_option("--play-rate", eval_play_rate,
                       "Playback rate, frames per minute");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Grid-scan t1 and t_ssim");
  std::string sweep_input, sweep_pattern = "*.png", sweep_annotations;
  std::string sweep_out, sweep_t1_text, sweep_t_ssim_text;
  int sweep_threads = 0;
  sweep_cmd->add_option("--input", sweep_input, "Frame directory")->required();
  sweep_cmd->add_option("--pattern", sweep_pattern,
                        "Filename glob (default *.png)");
  sweep_cmd->add_option("--annotations", sweep_annotations,
                        "Annotation path (optional)");
  sweep_cmd->add_option("--out", sweep_out, "CSV output path")->required();
  sweep_cmd->add_option("--t1-grid", sweep_t1_text,
                        "Comma-separated t1 values");
  sweep_cmd->add_option("--t-ssim-grid", sweep_t_ssim_text,
                        "Comma-separated t_ssim values");
  auto* sweep_threads_opt = sweep_cmd->add_option(
      "--threads", sweep_threads, "Worker threads, 0 = all cores");
  ParamOpts sweep_params_opts;
  add_param_options(sweep_cmd, sweep_params_opts);

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic sequence");
  wce::SynthParams synth_params;
  std::string synth_out_dir;
  synth->add_option("--out-dir", synth_out_dir, "Output directory")
      ->required();
  synth->add_option("--scenes", synth_params.scenes, "Scene count");
  synth->add_option("--repeats", synth_params.repeats, "Frames per scene");
  synth->add_option("--lesions", synth_params.lesions,
                    "Outlier frames to splice in");
  synth->add_option("--noise", synth_params.noise,
                    "Gaussian noise sigma, channel units");
  synth->add_option("--drift", synth_params.drift,
                    "Horizontal pattern shift per repeat, pixels");
  synth->add_option("--width", synth_params.width, "Frame width");
  synth->add_option("--height", synth_params.height, "Frame height");
  synth->add_option("--seed", synth_params.seed, "Generator seed");
  synth->add_option("--format", synth_params.format, "bmp, png, or jpg");

  // saliency --dump
  auto* saliency_cmd =
      app.add_subcommand("saliency", "Dump saliency internals for one frame");
  std::string saliency_image, saliency_prefix;
  saliency_cmd
      ->add_option("--dump", saliency_image, "Image to analyze")
      ->required();
  saliency_cmd->add_option("--out-prefix", saliency_prefix,
                           "Output path prefix (default: input basename)");
  ParamOpts saliency_params_opts;
  add_param_options(saliency_cmd, saliency_params_opts);

  // cluster --dump
  auto* cluster_cmd =
      app.add_subcommand("cluster", "Dump the dendrogram for a directory");
  bool cluster_dump = false;
  std::string cluster_input, cluster_pattern = "*.png", cluster_out;
  cluster_cmd->add_flag("--dump", cluster_dump, "Emit dendrogram JSON")
      ->required();
  cluster_cmd->add_option("--input", cluster_input, "Frame directory")
      ->required();
  cluster_cmd->add_option("--pattern", cluster_pattern,
                          "Filename glob (default *.png)");
  cluster_cmd->add_option("--out", cluster_out,
                          "Output path (default: stdout)");
  ParamOpts cluster_params_opts;
  add_param_options(cluster_cmd, cluster_params_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (screen->parsed()) {
    wce::ScreenParams params;
    int threads = 0;
    return run_command(
        [&] {
          params = resolve_params(screen_params_opts);
          threads = resolve_thread_count(screen_threads_opt, screen_threads);
        },
        [&] {
          wce::FrameSequence frames =
              wce::load_sequence(screen_input, screen_pattern);
          wce::ScreeningResult result =
              wce::screen_sequence(frames, params, threads);
          wce::write_manifest(result, screen_out);

          long n_key = static_cast<long>(result.keyframe_ids.size());
          std::printf("frames: %ld\n", result.total_frames);
          std::printf("keyframes: %ld\n", n_key);
          std::printf("er_rate: %.6f\n",
                      wce::er_rate(n_key, result.total_frames));
          std::printf("play_time_original_min: %.2f\n",
                      wce::estimate_play_time(result.total_frames,
                                              params.play_rate));
          std::printf("play_time_screened_min: %.2f\n",
                      wce::estimate_play_time(n_key, params.play_rate));
        });
  }

  if (evaluate->parsed()) {
    return run_command(
        [&] {
          if (eval_play_rate <= 0.0)
            throw wce::Error("screen.play_rate must be > 0");
        },
        [&] {
          wce::ScreeningResult result = wce::read_manifest(eval_manifest);
          wce::AnnotationSet annotations =
              wce::load_annotations(eval_annotations);
          wce::MetricsReport report =
              wce::evaluate_screening(annotations, result, eval_play_rate);
          std::printf("%s\n", wce::report_json(report).c_str());
        });
  }

  if (sweep_cmd->parsed()) {
    wce::ScreenParams params;
    int threads = 0;
    std::vector<double> t1_grid, t_ssim_grid;
    return run_command(
        [&] {
          params = resolve_params(sweep_params_opts);
          threads = resolve_thread_count(sweep_threads_opt, sweep_threads);
          t1_grid = sweep_t1_text.empty() ? wce::default_t1_grid()
                                          : parse_grid(sweep_t1_text, "t1");
          t_ssim_grid = sweep_t_ssim_text.empty()
                            ? wce::default_t_ssim_grid()
                            : parse_grid(sweep_t_ssim_text, "t_ssim");
        },
        [&] {
          wce::FrameSequence frames =
              wce::load_sequence(sweep_input, sweep_pattern);
          wce::AnnotationSet annotations;
          if (!sweep_annotations.empty())
            annotations = wce::load_annotations(sweep_annotations);
          else
            annotations.total_frames = static_cast<long>(frames.size());
          wce::SweepTable table = wce::sweep(frames, annotations, t1_grid,
                                             t_ssim_grid, params, threads);
          wce::write_sweep_csv(table, sweep_out);
          std::printf("wrote %zu rows to %s\n", table.rows.size(),
                      sweep_out.c_str());
        });
  }

  if (synth->parsed()) {
    return run_command([] {},
                       [&] {
                         wce::AnnotationSet annotations =
                             wce::write_synthetic(synth_params, synth_out_dir);
                         std::printf("wrote %ld frames to %s\n",
                                     annotations.total_frames,
                                     synth_out_dir.c_str());
                         std::printf("lesions: %zu\n",
                                     annotations.lesions.size());
                       });
  }

  if (saliency_cmd->parsed()) {
    wce::ScreenParams params;
    return run_command(
        [&] { params = resolve_params(saliency_params_opts); },
        [&] {
          std::string prefix = saliency_prefix;
          if (prefix.empty()) {
            std::filesystem::path p(saliency_image);
            prefix = (p.parent_path() / p.stem()).string();
          }
          wce::Frame frame = wce::read_image(saliency_image, 0);
          wce::ScalarField map =
              wce::saliency_map(frame, params.saliency.sigma);

          double peak = 0.0;
          for (double v : map.values) peak = std::max(peak, v);
          wce::ScalarField scaled = map;
          if (peak > 0.0)
            for (double& v : scaled.values) v = v * 255.0 / peak;
          wce::write_gray_image(scaled, prefix + "_map.png");

          wce::BinaryMask mask = wce::binarize(map);
          wce::ScalarField mask_field(mask.width, mask.height);
          for (std::size_t i = 0; i < mask.bits.size(); ++i)
            mask_field.values[i] = mask.bits[i] ? 255.0 : 0.0;
          wce::write_gray_image(mask_field, prefix + "_mask.png");

          wce::BlockCoords coords =
              wce::top_blocks(mask, params.saliency.block_size,
                              params.saliency.top_k);
          nlohmann::ordered_json doc;
          doc["image"] = saliency_image;
          doc["threshold"] = mask.threshold_used;
          doc["block_size"] = params.saliency.block_size;
          doc["k"] = params.saliency.top_k;
          doc["blocks"] = blocks_json(coords);
          std::ofstream out(prefix + "_blocks.json");
          if (!out)
            throw wce::Error("cannot open " + prefix +
                             "_blocks.json for writing");
          out << doc.dump(2) << "\n";
          std::printf("wrote %s_map.png, %s_mask.png, %s_blocks.json\n",
                      prefix.c_str(), prefix.c_str(), prefix.c_str());
        });
  }

  if (cluster_cmd->parsed()) {
    wce::ScreenParams params;
    return run_command(
        [&] { params = resolve_params(cluster_params_opts); },
        [&] {
          wce::FrameSequence frames =
              wce::load_sequence(cluster_input, cluster_pattern);
          std::vector<std::vector<double>> features = wce::window_features(
              frames, 0, frames.size(), params.features);
          wce::Dendrogram tree = wce::build_dendrogram(
              features, frames.seq_ids(), params.cluster.linkage);

          nlohmann::ordered_json doc;
          doc["leaves"] = tree.leaves;
          doc["merges"] = nlohmann::ordered_json::array();
          for (const wce::Merge& merge : tree.merges) {
            nlohmann::ordered_json entry;
            entry["left"] = merge.left;
            entry["right"] = merge.right;
            entry["height"] = merge.height;
            doc["merges"].push_back(entry);
          }
          doc["max_height"] = tree.max_height();
          doc["t1"] = params.t1;
          doc["clusters"] = wce::cut_dendrogram(tree, params.t1);

          std::string text = doc.dump(2);
          if (cluster_out.empty()) {
            std::printf("%s\n", text.c_str());
          } else {
            std::ofstream out(cluster_out);
            if (!out)
              throw wce::Error("cannot open " + cluster_out + " for writing");
            out << text << "\n";
          }
        });
  }

  return 0;
}
