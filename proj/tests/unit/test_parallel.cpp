/*
 * Parallel helper tests
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <doctest.h>

#include <atomic>
#include <vector>

#include "wce/error.hpp"
#include "wce/parallel.hpp"

using namespace wce;

TEST_CASE("resolve threads") {
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(0) >= 1);
  CHECK(resolve_threads(-2) >= 1);
}

TEST_CASE("parallel for covers every index exactly once") {
  for (int threads : {1, 2, 7}) {
    std::vector<int> hits(1000, 0);
    std::atomic<long> sum{0};
    parallel_for(hits.size(), threads, [&](std::size_t i) {
      hits[i] += 1;
      sum += static_cast<long>(i);
    });
    for (int h : hits) CHECK(h == 1);
    CHECK(sum.load() == 999L * 1000 / 2);
  }
}

TEST_CASE("parallel for result slots are deterministic across thread counts") {
  auto run = [](int threads) {
    std::vector<double> out(257, 0.0);
    parallel_for(out.size(), threads, [&](std::size_t i) {
      out[i] = 0.5 * static_cast<double>(i) + 1.0 / (1.0 + i);
    });
    return out;
  };
  CHECK(run(1) == run(6));
}

TEST_CASE("parallel for propagates the first worker exception") {
  for (int threads : {1, 4}) {
    CHECK_THROWS_AS(
        parallel_for(100, threads,
                     [&](std::size_t i) {
                       if (i == 13) throw Error("boom");
                     }),
        Error);
  }
}

TEST_CASE("parallel for on zero items is a no-op") {
  bool touched = false;
  parallel_for(0, 4, [&](std::size_t) { touched = true; });
  CHECK_FALSE(touched);
}
