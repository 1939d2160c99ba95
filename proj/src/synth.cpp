/*
 * Synthetic sequence generator
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>

#include "wce/colorspace.hpp"
#include "wce/error.hpp"
#include "wce/features.hpp"
#include "wce/imageio.hpp"

namespace wce {

namespace {

using Rgb = std::array<std::uint8_t, 3>;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t frame_seed(std::uint64_t seed, long index) {
  return mix64(seed + (static_cast<std::uint64_t>(index) + 1) *
                          0x9E3779B97F4A7C15ULL);
}

// Standard normal draws in pairs; the spare is handed out before the next
// pair is generated, so draw order is part of the frame's byte contract.
class GaussSource {
 public:
  explicit GaussSource(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = unit_open();
    double u2 = unit_open();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 6.283185307179586 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double unit_open() {
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

Rgb hsv_to_rgb_u8(double h, double s, double v) {
  double c = v * s;
  double hp = h / 60.0;
  double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r = 0.0, g = 0.0, b = 0.0;
  if (hp < 1.0) {
    r = c, g = x;
  } else if (hp < 2.0) {
    r = x, g = c;
  } else if (hp < 3.0) {
    g = c, b = x;
  } else if (hp < 4.0) {
    g = x, b = c;
  } else if (hp < 5.0) {
    r = x, b = c;
  } else {
    r = c, b = x;
  }
  double m = v - c;
  auto channel = [&](double value) {
    return static_cast<std::uint8_t>(std::llround((value + m) * 255.0));
  };
  return {channel(r), channel(g), channel(b)};
}

int rgb_bin(const Rgb& color) {
  HsvPixel hsv = rgb_to_hsv(color[0], color[1], color[2]);
  return hsv_bin(hsv.h, hsv.s, hsv.v);
}

// True when every color within the +-amplitude channel cube stays in the
// same histogram bin as the center.
bool bin_stable(const Rgb& color, int amplitude) {
  int want = rgb_bin(color);
  for (int dr = -amplitude; dr <= amplitude; ++dr)
    for (int dg = -amplitude; dg <= amplitude; ++dg)
      for (int db = -amplitude; db <= amplitude; ++db) {
        Rgb probe = {
            static_cast<std::uint8_t>(std::clamp(color[0] + dr, 0, 255)),
            static_cast<std::uint8_t>(std::clamp(color[1] + dg, 0, 255)),
            static_cast<std::uint8_t>(std::clamp(color[2] + db, 0, 255))};
        if (rgb_bin(probe) != want) return false;
      }
  return true;
}

struct ScenePaint {
  Rgb base;
  Rgb stripe;  // same histogram bin as base; may equal base
};

std::vector<ScenePaint> build_palette(int amplitude) {
  const std::array<std::pair<int, int>, 5> sv_bins = {
      {{5, 7}, {7, 5}, {6, 8}, {8, 6}, {5, 9}}};
  std::vector<ScenePaint> palette;
  for (const auto& [s_bin, v_bin] : sv_bins) {
    for (int h_bin = 0; h_bin < 10 && palette.size() < 64; ++h_bin) {
      double h = 36.0 * h_bin + 18.0;
      double s = 0.1 * s_bin + 0.05;
      double v = 0.1 * v_bin + 0.05;
      Rgb base = hsv_to_rgb_u8(h, s, v);
      if (!bin_stable(base, amplitude)) continue;
      Rgb stripe = hsv_to_rgb_u8(h, s, v + 0.03);
      if (rgb_bin(stripe) != rgb_bin(base) || !bin_stable(stripe, amplitude))
        stripe = base;
      palette.push_back({base, stripe});
    }
  }
  if (palette.size() < 2)
    throw Error("noise amplitude too large for a stable scene palette");
  return palette;
}

constexpr int kStripeWidth = 8;
constexpr std::uint8_t kLesionDark = 18;
constexpr std::uint8_t kLesionBright = 242;

Frame scene_frame(const SynthParams& p, const ScenePaint& paint, long index,
                  long repeat) {
  Frame frame(index, p.width, p.height);
  long shift = static_cast<long>(repeat) * p.drift;
  for (int y = 0; y < p.height; ++y) {
    std::uint8_t* row = frame.rgb(0, y);
    for (int x = 0; x < p.width; ++x) {
      const Rgb& color =
          ((x + shift) / kStripeWidth) % 2 == 0 ? paint.base : paint.stripe;
      row[3 * x] = color[0];
      row[3 * x + 1] = color[1];
      row[3 * x + 2] = color[2];
    }
  }
  if (p.noise > 0.0) {
    int amplitude = static_cast<int>(std::ceil(3.0 * p.noise));
    GaussSource gauss(frame_seed(p.seed, index));
    for (std::uint8_t& channel : frame.pixels) {
      long delta = std::llround(gauss.next() * p.noise);
      delta = std::clamp<long>(delta, -amplitude, amplitude);
      channel = static_cast<std::uint8_t>(
          std::clamp<long>(channel + delta, 0, 255));
    }
  }
  return frame;
}

Frame lesion_frame(const SynthParams& p, long index, int ordinal) {
  Frame frame(index, p.width, p.height);
  for (std::uint8_t& channel : frame.pixels) channel = kLesionDark;

  int radius = std::max(2, std::min(p.width, p.height) / 6);
  int margin = radius + 2;
  int span_x = std::max(1, p.width - 2 * margin);
  int span_y = std::max(1, p.height - 2 * margin);
  int cx = margin + (ordinal * 53) % span_x;
  int cy = margin + (ordinal * 97) % span_y;

  for (int y = std::max(0, cy - radius); y < std::min(p.height, cy + radius + 1);
       ++y) {
    for (int x = std::max(0, cx - radius);
         x < std::min(p.width, cx + radius + 1); ++x) {
      long dx = x - cx, dy = y - cy;
      if (dx * dx + dy * dy <= static_cast<long>(radius) * radius) {
        std::uint8_t* px = frame.rgb(x, y);
        px[0] = px[1] = px[2] = kLesionBright;
      }
    }
  }
  return frame;
}

void validate_params(const SynthParams& p) {
  if (p.scenes < 1) throw Error("synth needs at least one scene");
  if (p.repeats < 1) throw Error("synth needs at least one repeat per scene");
  if (p.lesions < 0) throw Error("synth lesion count must be >= 0");
  if (p.lesions > p.scenes * p.repeats)
    throw Error("synth lesion count exceeds the scene frame count");
  if (p.noise < 0.0) throw Error("synth noise must be >= 0");
  if (p.drift < 0) throw Error("synth drift must be >= 0");
  if (p.width < 8 || p.height < 8)
    throw Error("synth frames must be at least 8x8");
  if (p.format != "bmp" && p.format != "png" && p.format != "jpg")
    throw Error("synth format must be bmp, png, or jpg");
}

std::set<long> lesion_positions(const SynthParams& p) {
  long total = p.total_frames();
  std::set<long> positions;
  for (int j = 0; j < p.lesions; ++j) {
    long pos = (static_cast<long>(j + 1) * total) / (p.lesions + 1);
    while (positions.count(pos)) pos = (pos + 1) % total;
    positions.insert(pos);
  }
  return positions;
}

const char* category_for(int ordinal) {
  static const char* kCategories[] = {"bleeding", "vascular", "inflammatory",
                                      "polypoid"};
  return kCategories[ordinal % 4];
}

AnnotationSet annotations_for(const SynthParams& p,
                              const std::set<long>& positions) {
  AnnotationSet set;
  set.total_frames = p.total_frames();
  int ordinal = 0;
  for (long pos : positions) {
    Lesion lesion;
    lesion.lesion_id = "L" + std::to_string(ordinal + 1);
    lesion.cest_category = category_for(ordinal);
    lesion.frame_ids = {pos};
    set.lesions.push_back(std::move(lesion));
    ++ordinal;
  }
  return set;
}

// Drives frame generation in sequence order, calling sink for every frame.
AnnotationSet run_synthesis(const SynthParams& p,
                            const std::function<void(Frame&&)>& sink) {
  validate_params(p);
  int amplitude =
      p.noise > 0.0 ? static_cast<int>(std::ceil(3.0 * p.noise)) : 0;
  std::vector<ScenePaint> palette = build_palette(amplitude);
  std::set<long> positions = lesion_positions(p);

  long total = p.total_frames();
  long scene_slot = 0;
  int lesion_ordinal = 0;
  std::set<long>::const_iterator next_lesion = positions.begin();
  for (long index = 0; index < total; ++index) {
    if (next_lesion != positions.end() && *next_lesion == index) {
      sink(lesion_frame(p, index, lesion_ordinal));
      ++lesion_ordinal;
      ++next_lesion;
    } else {
      long scene = scene_slot / p.repeats;
      long repeat = scene_slot % p.repeats;
      sink(scene_frame(p, palette[scene % palette.size()], index, repeat));
      ++scene_slot;
    }
  }
  return annotations_for(p, positions);
}

}  // namespace

SyntheticCase generate_synthetic(const SynthParams& params) {
  SyntheticCase result;
  result.frames.reserve(static_cast<std::size_t>(params.total_frames()));
  result.annotations = run_synthesis(
      params, [&](Frame&& frame) { result.frames.push_back(std::move(frame)); });
  return result;
}

AnnotationSet write_synthetic(const SynthParams& params,
                              const std::string& dir_path) {
  namespace fs = std::filesystem;
  fs::create_directories(dir_path);
  AnnotationSet annotations = run_synthesis(params, [&](Frame&& frame) {
    char name[32];
    std::snprintf(name, sizeof(name), "%06ld.%s", frame.seq_id,
                  params.format.c_str());
    write_image(frame, (fs::path(dir_path) / name).string());
  });
  save_annotations(annotations, (fs::path(dir_path) / "annotations.json").string());
  return annotations;
}

}  // namespace wce
