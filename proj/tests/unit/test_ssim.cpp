/*
 * Structural similarity tests
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wce/error.hpp"
#include "wce/ssim.hpp"

using namespace wce;

namespace {

ScalarField random_block(std::mt19937& rng, int w, int h) {
  std::uniform_int_distribution<int> value(0, 255);
  ScalarField block(w, h);
  for (double& v : block.values) v = value(rng);
  return block;
}

}  // namespace

TEST_CASE("mssim of identical blocks is exactly one") {
  std::mt19937 rng(501);
  SsimParams p;
  for (int c = 0; c < 20; ++c) {
    ScalarField block = random_block(rng, 40, 40);
    CHECK(mssim(block, block, p) == 1.0);
  }
  ScalarField tiny = random_block(rng, 11, 11);
  CHECK(mssim(tiny, tiny, p) == 1.0);
}

TEST_CASE("mssim of constant blocks matches the closed form") {
  SsimParams p;
  ScalarField a(40, 40, 100.0);
  ScalarField b(40, 40, 110.0);
  double got = mssim(a, b, p);
  CHECK(got == doctest::Approx(0.9954764441).epsilon(1e-9));
  CHECK(std::abs(got - 0.995477) < 1e-6);
}

TEST_CASE("mssim matches the double-loop oracle") {
  std::mt19937 rng(502);
  SsimParams p;
  for (int c = 0; c < 40; ++c) {
    int w = 11 + c % 3 + (c % 5) * 6;
    int h = 11 + c % 4 + (c % 3) * 10;
    ScalarField a = random_block(rng, w, h);
    ScalarField b = random_block(rng, w, h);
    double got = mssim(a, b, p);
    double expected =
        oracle::mssim(a, b, p.window, p.window_sigma, p.k1, p.k2, p.l);
    CHECK(got == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("mssim is symmetric and bounded by one") {
  std::mt19937 rng(503);
  SsimParams p;
  for (int c = 0; c < 30; ++c) {
    ScalarField a = random_block(rng, 24, 24);
    ScalarField b = random_block(rng, 24, 24);
    b.values[0] = a.values[0] == 0.0 ? 1.0 : a.values[0] - 1.0;
    double ab = mssim(a, b, p);
    CHECK(ab == mssim(b, a, p));
    CHECK(ab < 1.0);
  }
}

TEST_CASE("mssim drops when one pixel changes") {
  std::mt19937 rng(504);
  SsimParams p;
  ScalarField a = random_block(rng, 20, 20);
  ScalarField b = a;
  b.at(10, 10) += 40.0;
  CHECK(mssim(a, b, p) < 1.0);
}

TEST_CASE("mssim validates dimensions and window") {
  SsimParams p;
  ScalarField a(20, 20, 0.0);
  ScalarField b(21, 20, 0.0);
  CHECK_THROWS_AS(mssim(a, b, p), Error);

  ScalarField small(8, 8, 0.0);
  CHECK_THROWS_AS(mssim(small, small, p), Error);

  SsimParams even = p;
  even.window = 10;
  CHECK_THROWS_AS(mssim(a, a, even), Error);
}

TEST_CASE("block dissimilarity is zero for identical sets") {
  std::mt19937 rng(505);
  SalientBlocks set;
  for (int j = 0; j < 3; ++j) set.blocks.push_back(random_block(rng, 40, 40));
  SsimParams p;
  CHECK(block_dissimilarity(set, set, p) == 0.0);
}

TEST_CASE("block dissimilarity of constant sets matches the closed form") {
  SsimParams p;
  SalientBlocks a, b;
  for (int j = 0; j < 3; ++j) {
    a.blocks.emplace_back(40, 40, 100.0);
    b.blocks.emplace_back(40, 40, 110.0);
  }
  double got = block_dissimilarity(a, b, p);
  CHECK(got == doctest::Approx(1.0 - 0.9954764441).epsilon(1e-6));
  CHECK(std::abs(got - 0.004523) < 1e-6);
}

TEST_CASE("block dissimilarity equals one minus the mean of mssim") {
  std::mt19937 rng(506);
  SsimParams p;
  SalientBlocks a, b;
  for (int j = 0; j < 3; ++j) {
    a.blocks.push_back(random_block(rng, 40, 40));
    b.blocks.push_back(random_block(rng, 40, 40));
  }
  double sum = 0.0;
  for (int j = 0; j < 3; ++j) sum += mssim(a.blocks[j], b.blocks[j], p);
  CHECK(block_dissimilarity(a, b, p) ==
        doctest::Approx(1.0 - sum / 3.0).epsilon(1e-12));

  SsimParams pmin = p;
  pmin.aggregate = SsimAggregate::min;
  double worst = 1.0;
  for (int j = 0; j < 3; ++j)
    worst = std::min(worst, mssim(a.blocks[j], b.blocks[j], p));
  CHECK(block_dissimilarity(a, b, pmin) ==
        doctest::Approx(1.0 - worst).epsilon(1e-12));
}

TEST_CASE("block dissimilarity validates block sets") {
  std::mt19937 rng(507);
  SsimParams p;
  SalientBlocks a, b;
  a.blocks.push_back(random_block(rng, 40, 40));
  CHECK_THROWS_AS(block_dissimilarity(a, b, p), Error);
  b.blocks.push_back(random_block(rng, 20, 40));
  CHECK_THROWS_AS(block_dissimilarity(a, b, p), Error);
}

TEST_CASE("dissimilarity trends upward with noise amplitude") {
  SsimParams p;
  ScalarField base(40, 40);
  for (int y = 0; y < 40; ++y)
    for (int x = 0; x < 40; ++x)
      base.at(x, y) = 120.0 + 60.0 * std::sin(x * 0.35) * std::cos(y * 0.2);

  std::vector<double> trend;
  for (int level = 0; level < 20; ++level) {
    double amplitude = 1.0 + 2.5 * level;
    double total = 0.0;
    int seeds = 8;
    for (int s = 0; s < seeds; ++s) {
      std::mt19937 rng(600 + 37 * s);
      std::uniform_real_distribution<double> noise(-amplitude, amplitude);
      ScalarField noisy = base;
      for (double& v : noisy.values)
        v = std::clamp(v + noise(rng), 0.0, 255.0);
      SalientBlocks a, b;
      a.blocks.push_back(base);
      b.blocks.push_back(noisy);
      total += block_dissimilarity(a, b, p);
    }
    trend.push_back(total / seeds);
  }
  for (std::size_t i = 1; i < trend.size(); ++i)
    CHECK(trend[i] >= trend[i - 1] - 1e-4);
  CHECK(trend.back() > trend.front());
}

TEST_CASE("aggregate names round trip") {
  CHECK(parse_ssim_aggregate("mean") == SsimAggregate::mean);
  CHECK(parse_ssim_aggregate("min") == SsimAggregate::min);
  CHECK(parse_ssim_aggregate(ssim_aggregate_name(SsimAggregate::min)) ==
        SsimAggregate::min);
  CHECK_THROWS_AS(parse_ssim_aggregate("median"), Error);
}
