/*
 * Synthetic generator tests
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "wce/error.hpp"
#include "wce/features.hpp"
#include "wce/frameio.hpp"
#include "wce/metrics.hpp"
#include "wce/pipeline.hpp"
#include "wce/synth.hpp"

using namespace wce;
namespace fs = std::filesystem;

namespace {

SynthParams small_case() {
  SynthParams p;
  p.scenes = 3;
  p.repeats = 12;
  p.lesions = 2;
  p.width = 120;
  p.height = 40;
  p.seed = 99;
  return p;
}

int one_hot_bin(const ColorFeature& feature) {
  int bin = -1;
  for (int i = 0; i < 1000; ++i) {
    if (feature.bins[i] == 0.0) continue;
    if (feature.bins[i] != 1.0) return -1;
    if (bin >= 0) return -1;
    bin = i;
  }
  return bin;
}

}  // namespace

TEST_CASE("synthetic cases have the contracted shape") {
  SynthParams p = small_case();
  SyntheticCase data = generate_synthetic(p);
  REQUIRE(data.frames.size() == 38);
  CHECK(data.annotations.total_frames == 38);
  CHECK(data.annotations.lesions.size() == 2);
  for (std::size_t i = 0; i < data.frames.size(); ++i) {
    CHECK(data.frames[i].seq_id == static_cast<long>(i));
    CHECK(data.frames[i].width == 120);
    CHECK(data.frames[i].height == 40);
  }
}

TEST_CASE("lesion positions follow the even-spacing rule") {
  SynthParams p = small_case();
  SyntheticCase data = generate_synthetic(p);
  long total = p.total_frames();
  for (int j = 0; j < p.lesions; ++j) {
    long expected = (static_cast<long>(j + 1) * total) / (p.lesions + 1);
    REQUIRE(data.annotations.lesions[j].frame_ids.size() == 1);
    CHECK(*data.annotations.lesions[j].frame_ids.begin() == expected);
  }
  CHECK(data.annotations.lesions[0].lesion_id == "L1");
  CHECK(data.annotations.lesions[1].lesion_id == "L2");
}

TEST_CASE("generation is deterministic in the seed") {
  SyntheticCase a = generate_synthetic(small_case());
  SyntheticCase b = generate_synthetic(small_case());
  REQUIRE(a.frames.size() == b.frames.size());
  for (std::size_t i = 0; i < a.frames.size(); ++i)
    CHECK(a.frames[i].pixels == b.frames[i].pixels);

  SynthParams other = small_case();
  other.seed = 100;
  SyntheticCase c = generate_synthetic(other);
  bool any_difference = false;
  for (std::size_t i = 0; i < a.frames.size(); ++i)
    any_difference = any_difference || a.frames[i].pixels != c.frames[i].pixels;
  CHECK(any_difference);
}

TEST_CASE("zero noise makes repeats identical") {
  SynthParams p = small_case();
  p.noise = 0.0;
  p.lesions = 0;
  SyntheticCase data = generate_synthetic(p);
  for (int scene = 0; scene < p.scenes; ++scene) {
    const Frame& first = data.frames[scene * p.repeats];
    for (int repeat = 1; repeat < p.repeats; ++repeat)
      CHECK(data.frames[scene * p.repeats + repeat].pixels == first.pixels);
  }
}

TEST_CASE("noise never moves a pixel out of its histogram bin") {
  SynthParams p = small_case();
  p.lesions = 0;
  SyntheticCase noisy = generate_synthetic(p);
  FeatureParams feature_params;
  for (int scene = 0; scene < p.scenes; ++scene) {
    int want = -1;
    for (int repeat = 0; repeat < p.repeats; ++repeat) {
      const Frame& frame = noisy.frames[scene * p.repeats + repeat];
      int bin = one_hot_bin(hsv_histogram(frame, feature_params));
      REQUIRE(bin >= 0);
      if (repeat == 0)
        want = bin;
      else
        CHECK(bin == want);
    }
  }
}

TEST_CASE("noise respects the three-sigma clamp") {
  SynthParams noisy = small_case();
  noisy.lesions = 0;
  SynthParams clean = noisy;
  clean.noise = 0.0;
  SyntheticCase a = generate_synthetic(noisy);
  SyntheticCase b = generate_synthetic(clean);
  int amplitude = static_cast<int>(std::ceil(3.0 * noisy.noise));
  int max_delta = 0;
  bool any_nonzero = false;
  for (std::size_t i = 0; i < a.frames.size(); ++i)
    for (std::size_t j = 0; j < a.frames[i].pixels.size(); ++j) {
      int delta = std::abs(static_cast<int>(a.frames[i].pixels[j]) -
                           static_cast<int>(b.frames[i].pixels[j]));
      max_delta = std::max(max_delta, delta);
      any_nonzero = any_nonzero || delta != 0;
    }
  CHECK(max_delta <= amplitude);
  CHECK(any_nonzero);
}

TEST_CASE("lesion frames are achromatic outliers with a bright disc") {
  SynthParams p = small_case();
  SyntheticCase data = generate_synthetic(p);
  for (const Lesion& lesion : data.annotations.lesions) {
    const Frame& frame = data.frames[*lesion.frame_ids.begin()];
    bool bright = false, dark = false;
    for (std::size_t i = 0; i < frame.pixels.size(); i += 3) {
      CHECK(frame.pixels[i] == frame.pixels[i + 1]);
      CHECK(frame.pixels[i] == frame.pixels[i + 2]);
      bright = bright || frame.pixels[i] == 242;
      dark = dark || frame.pixels[i] == 18;
    }
    CHECK(bright);
    CHECK(dark);
  }
}

TEST_CASE("drift shifts pixels but not histograms") {
  SynthParams p = small_case();
  p.lesions = 0;
  p.noise = 0.0;
  p.drift = 2;
  p.repeats = 8;
  SyntheticCase data = generate_synthetic(p);
  FeatureParams feature_params;
  ColorFeature first = hsv_histogram(data.frames[0], feature_params);
  bool pixels_move = false;
  for (int repeat = 1; repeat < p.repeats; ++repeat) {
    ColorFeature histogram = hsv_histogram(data.frames[repeat], feature_params);
    CHECK(histogram.bins == first.bins);
    pixels_move =
        pixels_move || data.frames[repeat].pixels != data.frames[0].pixels;
  }
  CHECK(pixels_move);
}

TEST_CASE("write_synthetic round trips through the file system") {
  fs::path dir = fs::temp_directory_path() / "wce_tests" / "synth_dir";
  fs::remove_all(dir);

  SynthParams p = small_case();
  AnnotationSet written = write_synthetic(p, dir.string());
  CHECK(written.total_frames == 38);

  FrameSequence seq = load_sequence(dir.string(), "*.bmp");
  REQUIRE(seq.size() == 38);
  SyntheticCase reference = generate_synthetic(p);
  for (std::size_t i = 0; i < seq.size(); ++i)
    CHECK(seq.load(i)->pixels == reference.frames[i].pixels);

  AnnotationSet loaded =
      load_annotations((dir / "annotations.json").string());
  CHECK(loaded.total_frames == 38);
  CHECK(loaded.lesions.size() == 2);
}

TEST_CASE("synth validates its parameters") {
  SynthParams p = small_case();
  p.scenes = 0;
  CHECK_THROWS_AS(generate_synthetic(p), Error);
  p = small_case();
  p.repeats = 0;
  CHECK_THROWS_AS(generate_synthetic(p), Error);
  p = small_case();
  p.lesions = -1;
  CHECK_THROWS_AS(generate_synthetic(p), Error);
  p = small_case();
  p.lesions = p.scenes * p.repeats + 1;
  CHECK_THROWS_AS(generate_synthetic(p), Error);
  p = small_case();
  p.noise = -0.5;
  CHECK_THROWS_AS(generate_synthetic(p), Error);
  p = small_case();
  p.format = "tiff";
  CHECK_THROWS_AS(generate_synthetic(p), Error);
  p = small_case();
  p.width = 4;
  CHECK_THROWS_AS(generate_synthetic(p), Error);
}

TEST_CASE("screening a synthetic case keeps every lesion") {
  SynthParams p;
  p.scenes = 4;
  p.repeats = 24;
  p.lesions = 3;
  p.width = 120;
  p.height = 40;
  p.seed = 41;
  SyntheticCase data = generate_synthetic(p);
  FrameSequence seq = FrameSequence::from_frames(data.frames);

  ScreenParams params;
  params.cluster.window_n = 16;
  ScreeningResult result = screen_sequence(seq, params);
  MetricsReport report =
      evaluate_screening(data.annotations, result, params.play_rate);
  CHECK(report.abnormal_recall == 1.0);
  CHECK(report.er_rate >= 0.5);
}
