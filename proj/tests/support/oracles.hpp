/*
 * Brute-force reference implementations used only by tests
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_TEST_ORACLES_HPP
#define WCE_TEST_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "wce/colorspace.hpp"
#include "wce/features.hpp"
#include "wce/hcluster.hpp"
#include "wce/image.hpp"

namespace oracle {

// Inverse hexcone HSV for round-trip checks; exact on integer inputs.
inline std::array<int, 3> hsv_inverse(double h, double s, double v) {
  long maxc = std::llround(v * 255.0);
  long delta = std::llround(s * maxc);
  long minc = maxc - delta;
  double hp = h / 60.0;
  int k = static_cast<int>(hp);
  double f = hp - k;
  long rise = std::llround(f * delta);
  long fall = std::llround((1.0 - f) * delta);
  long r = 0, g = 0, b = 0;
  switch (k) {
    case 0: r = maxc; g = minc + rise; b = minc; break;
    case 1: r = minc + fall; g = maxc; b = minc; break;
    case 2: r = minc; g = maxc; b = minc + rise; break;
    case 3: r = minc; g = minc + fall; b = maxc; break;
    case 4: r = minc + rise; g = minc; b = maxc; break;
    default: r = maxc; g = minc; b = minc + fall; break;
  }
  return {static_cast<int>(r), static_cast<int>(g), static_cast<int>(b)};
}

// Per-pixel counting histogram with its own binning arithmetic.
inline std::array<double, 1000> histogram(const wce::Frame& frame) {
  std::array<long, 1000> counts{};
  for (std::size_t i = 0; i < frame.pixel_count(); ++i) {
    const std::uint8_t* px = frame.pixels.data() + 3 * i;
    wce::HsvPixel hsv = wce::rgb_to_hsv(px[0], px[1], px[2]);
    int hb = static_cast<int>(std::floor(hsv.h / 36.0));
    int sb = static_cast<int>(std::floor(hsv.s * 10.0));
    int vb = static_cast<int>(std::floor(hsv.v * 10.0));
    hb = std::min(std::max(hb, 0), 9);
    sb = std::min(std::max(sb, 0), 9);
    vb = std::min(std::max(vb, 0), 9);
    counts[hb * 100 + sb * 10 + vb] += 1;
  }
  std::array<double, 1000> bins{};
  for (int i = 0; i < 1000; ++i)
    bins[i] = counts[i] / static_cast<double>(frame.pixel_count());
  return bins;
}

inline double l2(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc);
}

// Naive agglomerative clustering: every step recomputes every pair distance
// from the leaf matrix. Member loops run with the lower-first-member cluster
// outermost, ascending, mirroring the production summation order by
// definition rather than by shared code.
struct NaiveTree {
  std::vector<long> leaves;
  std::vector<wce::Merge> merges;
};

inline double naive_cluster_distance(const std::vector<double>& base,
                                     std::size_t n, const std::vector<int>& a,
                                     const std::vector<int>& b,
                                     wce::Linkage linkage) {
  const std::vector<int>& lo = a.front() < b.front() ? a : b;
  const std::vector<int>& hi = a.front() < b.front() ? b : a;
  if (linkage == wce::Linkage::average) {
    double sum = 0.0;
    for (std::size_t i = 0; i < lo.size(); ++i)
      for (std::size_t j = 0; j < hi.size(); ++j)
        sum += base[static_cast<std::size_t>(lo[i]) * n + hi[j]];
    return sum / static_cast<double>(a.size() * b.size());
  }
  double best = linkage == wce::Linkage::single
                    ? std::numeric_limits<double>::infinity()
                    : -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lo.size(); ++i)
    for (std::size_t j = 0; j < hi.size(); ++j) {
      double d = base[static_cast<std::size_t>(lo[i]) * n + hi[j]];
      best = linkage == wce::Linkage::single ? std::min(best, d)
                                             : std::max(best, d);
    }
  return best;
}

inline NaiveTree naive_build(const std::vector<double>& base,
                             const std::vector<long>& seq_ids,
                             wce::Linkage linkage) {
  std::size_t n = seq_ids.size();
  struct Live {
    std::vector<int> members;
    int node;
  };
  std::vector<Live> live;
  for (std::size_t i = 0; i < n; ++i)
    live.push_back({{static_cast<int>(i)}, static_cast<int>(i)});

  NaiveTree tree;
  tree.leaves = seq_ids;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    double best_d = 0.0;
    int best_lo = -1, best_hi = -1;
    std::size_t pa = 0, pb = 0;
    for (std::size_t i = 0; i < live.size(); ++i)
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        double d = naive_cluster_distance(base, n, live[i].members,
                                          live[j].members, linkage);
        int lo = std::min(live[i].members.front(), live[j].members.front());
        int hi = std::max(live[i].members.front(), live[j].members.front());
        if (best_lo < 0 || d < best_d ||
            (d == best_d && (lo < best_lo || (lo == best_lo && hi < best_hi)))) {
          best_d = d;
          best_lo = lo;
          best_hi = hi;
          pa = i;
          pb = j;
        }
      }
    if (live[pb].members.front() < live[pa].members.front()) std::swap(pa, pb);
    wce::Merge m;
    m.left = live[pa].node;
    m.right = live[pb].node;
    m.height = best_d;
    tree.merges.push_back(m);

    Live merged;
    merged.members = live[pa].members;
    merged.members.insert(merged.members.end(), live[pb].members.begin(),
                          live[pb].members.end());
    std::sort(merged.members.begin(), merged.members.end());
    merged.node = static_cast<int>(n + step);
    live.erase(live.begin() + std::max(pa, pb));
    live.erase(live.begin() + std::min(pa, pb));
    live.push_back(merged);
  }
  return tree;
}

// Partition by replaying merges in order and applying those under the cut.
inline std::vector<std::vector<long>> naive_cut(const NaiveTree& tree,
                                                double t1) {
  std::size_t n = tree.leaves.size();
  double max_h = 0.0;
  for (const auto& m : tree.merges) max_h = std::max(max_h, m.height);
  if (max_h == 0.0) return {tree.leaves};
  double threshold = t1 * max_h;

  std::map<int, std::vector<int>> groups;  // group id -> leaf indices
  std::vector<int> node_group(n + tree.merges.size());
  for (std::size_t i = 0; i < n; ++i) {
    groups[static_cast<int>(i)] = {static_cast<int>(i)};
    node_group[i] = static_cast<int>(i);
  }
  for (std::size_t k = 0; k < tree.merges.size(); ++k) {
    const auto& m = tree.merges[k];
    int gl = node_group[m.left];
    int gr = node_group[m.right];
    node_group[n + k] = gl;
    if (m.height < threshold && gl != gr) {
      auto& dst = groups[gl];
      auto& src = groups[gr];
      dst.insert(dst.end(), src.begin(), src.end());
      std::sort(dst.begin(), dst.end());
      groups.erase(gr);
      for (auto& g : node_group)
        if (g == gr) g = gl;
    }
  }

  std::vector<std::vector<long>> out;
  std::vector<std::pair<int, std::vector<int>>> ordered(groups.begin(),
                                                        groups.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) {
              return a.second.front() < b.second.front();
            });
  for (const auto& [gid, members] : ordered) {
    std::vector<long> ids;
    for (int leaf : members) ids.push_back(tree.leaves[leaf]);
    out.push_back(ids);
  }
  return out;
}

// Sliding-window MSSIM with explicit 2-D weights and two-pass moments.
inline double mssim(const wce::ScalarField& a, const wce::ScalarField& b,
                    int window, double sigma, double k1, double k2, double l) {
  int radius = window / 2;
  std::vector<double> w2d(static_cast<std::size_t>(window) * window);
  double wsum = 0.0;
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx) {
      double w = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
      w2d[static_cast<std::size_t>(dy + radius) * window + (dx + radius)] = w;
      wsum += w;
    }
  for (double& w : w2d) w /= wsum;

  double c1 = (k1 * l) * (k1 * l);
  double c2 = (k2 * l) * (k2 * l);
  double total = 0.0;
  long count = 0;
  for (int y = radius; y < a.height - radius; ++y)
    for (int x = radius; x < a.width - radius; ++x) {
      double mu_a = 0.0, mu_b = 0.0;
      for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx) {
          double w = w2d[static_cast<std::size_t>(dy + radius) * window +
                         (dx + radius)];
          mu_a += w * a.at(x + dx, y + dy);
          mu_b += w * b.at(x + dx, y + dy);
        }
      double va = 0.0, vb = 0.0, vab = 0.0;
      for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx) {
          double w = w2d[static_cast<std::size_t>(dy + radius) * window +
                         (dx + radius)];
          double da = a.at(x + dx, y + dy) - mu_a;
          double db = b.at(x + dx, y + dy) - mu_b;
          va += w * da * da;
          vb += w * db * db;
          vab += w * da * db;
        }
      double ssim = ((2.0 * mu_a * mu_b + c1) * (2.0 * vab + c2)) /
                    ((mu_a * mu_a + mu_b * mu_b + c1) * (va + vb + c2));
      total += ssim;
      ++count;
    }
  return total / count;
}

// Direct evaluation of the saliency definition: per-channel Lab conversion,
// dense 2-D Gaussian blur with replicated edges, per-pixel deviation norm.
inline wce::ScalarField saliency(const wce::Frame& frame, double sigma) {
  int w = frame.width, h = frame.height;
  wce::ScalarField lp(w, h), ap(w, h), bp(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::uint8_t* px = frame.rgb(x, y);
      wce::LabPixel lab = wce::rgb_to_lab(px[0], px[1], px[2]);
      lp.at(x, y) = lab.l;
      ap.at(x, y) = lab.a;
      bp.at(x, y) = lab.b;
    }

  int radius = static_cast<int>(std::ceil(3.0 * sigma));
  int window = 2 * radius + 1;
  std::vector<double> w2d(static_cast<std::size_t>(window) * window);
  double wsum = 0.0;
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx) {
      double g = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
      w2d[static_cast<std::size_t>(dy + radius) * window + (dx + radius)] = g;
      wsum += g;
    }
  for (double& g : w2d) g /= wsum;

  auto blur_at = [&](const wce::ScalarField& f, int x, int y) {
    double acc = 0.0;
    for (int dy = -radius; dy <= radius; ++dy)
      for (int dx = -radius; dx <= radius; ++dx) {
        int xx = std::clamp(x + dx, 0, w - 1);
        int yy = std::clamp(y + dy, 0, h - 1);
        acc += w2d[static_cast<std::size_t>(dy + radius) * window +
                   (dx + radius)] *
               f.at(xx, yy);
      }
    return acc;
  };

  wce::ScalarField out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double sl = lp.at(x, y) - blur_at(lp, x, y);
      double sa = ap.at(x, y) - blur_at(ap, x, y);
      double sb = bp.at(x, y) - blur_at(bp, x, y);
      out.at(x, y) = std::sqrt(sl * sl + sa * sa + sb * sb);
    }
  return out;
}

inline wce::Frame random_frame(std::mt19937& rng, int w, int h, long seq = 0) {
  wce::Frame f(seq, w, h);
  std::uniform_int_distribution<int> dist(0, 255);
  for (auto& px : f.pixels) px = static_cast<std::uint8_t>(dist(rng));
  return f;
}

}  // namespace oracle

#endif
