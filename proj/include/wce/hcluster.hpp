/*
 * Agglomerative clustering
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_HCLUSTER_HPP
#define WCE_HCLUSTER_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace wce {

enum class Linkage { average, single, complete };

Linkage parse_linkage(const std::string& name);
const char* linkage_name(Linkage linkage);

// Node references: 0..n-1 are leaves, n+k is the cluster formed by merge k.
struct Merge {
  int left = 0;
  int right = 0;
  double height = 0.0;
};

struct Dendrogram {
  std::vector<long> leaves;  // seq_ids, strictly increasing
  std::vector<Merge> merges;

  double max_height() const;
};

// Consecutive [begin, end) index chunks of size n; the final chunk may be
// shorter. Throws on n < 1.
std::vector<std::pair<std::size_t, std::size_t>> window_partition(
    std::size_t frame_count, int n);

// distances is a row-major full square matrix over the leaves.
// At each step the two clusters at minimal linkage distance are merged and
// the merge height records that distance. Ties are broken by the smaller
// minimum member seq_id, then by the other cluster's minimum member seq_id.
// The left child of a merge is the cluster with the smaller minimum member.
Dendrogram build_dendrogram_from_distances(const std::vector<double>& distances,
                                           const std::vector<long>& seq_ids,
                                           Linkage linkage);

// Convenience entry: Euclidean distances over arbitrary-length vectors.
Dendrogram build_dendrogram(const std::vector<std::vector<double>>& features,
                            const std::vector<long>& seq_ids, Linkage linkage);

// Remove merges with height >= t1 * D (D = max merge height) and return the
// connected components as sorted member lists, ordered by first member.
// D = 0 yields a single cluster. Throws on t1 <= 0.
std::vector<std::vector<long>> cut_dendrogram(const Dendrogram& tree,
                                              double t1);

}  // namespace wce

#endif
