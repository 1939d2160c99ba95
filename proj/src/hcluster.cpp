/*
 * Agglomerative clustering
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wce/hcluster.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "wce/error.hpp"

namespace wce {

namespace {

struct Cluster {
  std::vector<int> members;  // leaf indices, ascending
};

// Linkage distance between two clusters, recomputed from the leaf-level
// matrix. Member loops run in a fixed order (cluster with the smaller first
// member outermost, members ascending) so that repeated evaluations are
// bitwise identical.
double cluster_distance(const std::vector<double>& base, std::size_t n,
                        const Cluster& a, const Cluster& b, Linkage linkage) {
  const Cluster& lo = a.members.front() < b.members.front() ? a : b;
  const Cluster& hi = a.members.front() < b.members.front() ? b : a;

  switch (linkage) {
    case Linkage::average: {
      double acc = 0.0;
      for (int i : lo.members)
        for (int j : hi.members)
          acc += base[static_cast<std::size_t>(i) * n + j];
      return acc / (static_cast<double>(lo.members.size()) *
                    static_cast<double>(hi.members.size()));
    }
    case Linkage::single: {
      double best = std::numeric_limits<double>::infinity();
      for (int i : lo.members)
        for (int j : hi.members)
          best = std::min(best, base[static_cast<std::size_t>(i) * n + j]);
      return best;
    }
    case Linkage::complete: {
      double best = -std::numeric_limits<double>::infinity();
      for (int i : lo.members)
        for (int j : hi.members)
          best = std::max(best, base[static_cast<std::size_t>(i) * n + j]);
      return best;
    }
  }
  throw Error("cluster_distance: bad linkage");
}

std::vector<int> merge_members(const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Linkage parse_linkage(const std::string& name) {
  if (name == "average") return Linkage::average;
  if (name == "single") return Linkage::single;
  if (name == "complete") return Linkage::complete;
  throw Error("unknown linkage: " + name);
}

const char* linkage_name(Linkage linkage) {
  switch (linkage) {
    case Linkage::average: return "average";
    case Linkage::single: return "single";
    case Linkage::complete: return "complete";
  }
  return "unknown";
}

double Dendrogram::max_height() const {
  double d = 0.0;
  for (const Merge& m : merges) d = std::max(d, m.height);
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> window_partition(
    std::size_t frame_count, int n) {
  if (n < 1) throw Error("window_partition: n must be >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t step = static_cast<std::size_t>(n);
  for (std::size_t begin = 0; begin < frame_count; begin += step)
    spans.emplace_back(begin, std::min(begin + step, frame_count));
  return spans;
}

Dendrogram build_dendrogram_from_distances(const std::vector<double>& distances,
                                           const std::vector<long>& seq_ids,
                                           Linkage linkage) {
  std::size_t n = seq_ids.size();
  if (n == 0) throw Error("build_dendrogram: empty input");
  for (std::size_t i = 1; i < n; ++i)
    if (seq_ids[i] <= seq_ids[i - 1])
      throw Error("build_dendrogram: seq ids must be strictly increasing");
  if (distances.size() != n * n)
    throw Error("build_dendrogram: distance matrix size mismatch");

  Dendrogram tree;
  tree.leaves = seq_ids;
  if (n == 1) return tree;

  // Slot s holds the cluster whose node reference is s: 0..n-1 leaves,
  // n+k the result of merge k.
  std::size_t slot_count = 2 * n - 1;
  std::vector<Cluster> clusters(slot_count);
  std::vector<char> alive(slot_count, 0);
  std::vector<std::vector<double>> dist(slot_count);
  for (std::size_t s = 0; s < slot_count; ++s) dist[s].resize(slot_count, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    clusters[i].members = {static_cast<int>(i)};
    alive[i] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = cluster_distance(distances, n, clusters[i], clusters[j],
                                  linkage);
      dist[i][j] = d;
      dist[j][i] = d;
    }

  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), 0);
  tree.merges.reserve(n - 1);

  for (std::size_t step = 0; step + 1 < n; ++step) {
    double best_d = std::numeric_limits<double>::infinity();
    int best_lo = -1;
    int best_hi = -1;
    std::size_t best_a = 0;
    std::size_t best_b = 0;

    for (std::size_t ai = 0; ai < active.size(); ++ai)
      for (std::size_t bi = ai + 1; bi < active.size(); ++bi) {
        std::size_t a = active[ai];
        std::size_t b = active[bi];
        double d = dist[a][b];
        int ma = clusters[a].members.front();
        int mb = clusters[b].members.front();
        int lo = std::min(ma, mb);
        int hi = std::max(ma, mb);
        if (best_lo < 0 || d < best_d ||
            (d == best_d && (lo < best_lo || (lo == best_lo && hi < best_hi)))) {
          best_d = d;
          best_lo = lo;
          best_hi = hi;
          best_a = a;
          best_b = b;
        }
      }

    std::size_t left = best_a;
    std::size_t right = best_b;
    if (clusters[right].members.front() < clusters[left].members.front())
      std::swap(left, right);

    std::size_t slot = n + step;
    clusters[slot].members =
        merge_members(clusters[left].members, clusters[right].members);
    alive[left] = 0;
    alive[right] = 0;
    alive[slot] = 1;

    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](std::size_t s) {
                                  return s == left || s == right;
                                }),
                 active.end());
    for (std::size_t s : active) {
      double d = cluster_distance(distances, n, clusters[slot], clusters[s],
                                  linkage);
      dist[slot][s] = d;
      dist[s][slot] = d;
    }
    active.push_back(slot);

    tree.merges.push_back({static_cast<int>(left), static_cast<int>(right),
                           best_d});
  }
  return tree;
}

Dendrogram build_dendrogram(const std::vector<std::vector<double>>& features,
                            const std::vector<long>& seq_ids,
                            Linkage linkage) {
  std::size_t n = features.size();
  if (n == 0) throw Error("build_dendrogram: empty input");
  if (seq_ids.size() != n)
    throw Error("build_dendrogram: feature/seq id count mismatch");
  for (std::size_t i = 1; i < n; ++i)
    if (features[i].size() != features[0].size())
      throw Error("build_dendrogram: feature length mismatch");

  std::vector<double> base(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < features[i].size(); ++k) {
        double d = features[i][k] - features[j][k];
        acc += d * d;
      }
      double d = std::sqrt(acc);
      base[i * n + j] = d;
      base[j * n + i] = d;
    }
  return build_dendrogram_from_distances(base, seq_ids, linkage);
}

std::vector<std::vector<long>> cut_dendrogram(const Dendrogram& tree,
                                              double t1) {
  if (t1 <= 0.0) throw Error("cut_dendrogram: t1 must be > 0");
  std::size_t n = tree.leaves.size();
  if (n == 0) throw Error("cut_dendrogram: empty tree");

  double max_h = tree.max_height();
  if (max_h == 0.0) {
    std::vector<long> all(tree.leaves);
    return {all};
  }
  double threshold = t1 * max_h;

  // Union-find over leaves; merge nodes carry a representative leaf.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<int> rep(n + tree.merges.size());
  std::iota(rep.begin(), rep.begin() + n, 0);
  for (std::size_t k = 0; k < tree.merges.size(); ++k) {
    const Merge& m = tree.merges[k];
    int rl = rep[m.left];
    int rr = rep[m.right];
    rep[n + k] = rl;
    if (m.height < threshold) parent[find(rr)] = find(rl);
  }

  std::vector<int> root_to_cluster(n, -1);
  std::vector<std::vector<long>> out;
  for (std::size_t i = 0; i < n; ++i) {
    int r = find(static_cast<int>(i));
    if (root_to_cluster[r] < 0) {
      root_to_cluster[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[root_to_cluster[r]].push_back(tree.leaves[i]);
  }
  return out;
}

}  // namespace wce
