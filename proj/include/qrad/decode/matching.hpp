// Copyright 2026 The qrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRAD_DECODE_MATCHING_HPP_
#define QRAD_DECODE_MATCHING_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qrad::decode {

struct WeightedEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::int64_t weight = 0;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm with dual
/// variables, O(n^3)). With max_cardinality set, the maximum weight is taken over the
/// maximum-cardinality matchings only. Returns the mate of every vertex, -1 if single.
std::vector<std::int64_t> max_weight_matching(std::uint32_t num_vertices, std::span<const WeightedEdge> edges,
                                              bool max_cardinality);

/// Detection events plus optional edges to a virtual boundary. Boundary copies are
/// added internally, and padded so the expanded node count is even.
class DecodingGraph {
 public:
  static constexpr std::int64_t kNoEdge = -1;

  explicit DecodingGraph(std::uint32_t num_nodes);

  std::uint32_t num_nodes() const { return n_; }
  void set_edge(std::uint32_t u, std::uint32_t v, std::int64_t weight);
  void set_boundary(std::uint32_t u, std::int64_t weight);
  std::int64_t edge(std::uint32_t u, std::uint32_t v) const { return weights_[u * n_ + v]; }
  std::int64_t boundary(std::uint32_t u) const { return boundary_[u]; }

 private:
  std::uint32_t n_;
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> boundary_;
};

struct Matching {
  static constexpr std::int64_t kBoundary = -1;

  /// partner[u] is the node matched with u, or kBoundary.
  std::vector<std::int64_t> partner;
  std::int64_t cost = 0;

  /// (u, partner) with u < partner, then boundary matches as (u, kBoundary); ascending.
  std::vector<std::pair<std::uint32_t, std::int64_t>> pairs() const;
};

/// Minimum-weight perfect matching of every node, to another node or to the boundary.
/// Throws std::runtime_error if no perfect matching exists.
Matching mwpm(const DecodingGraph& graph);

}  // namespace qrad::decode

#endif  // QRAD_DECODE_MATCHING_HPP_
