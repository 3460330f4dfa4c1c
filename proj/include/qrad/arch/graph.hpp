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

#ifndef QRAD_ARCH_GRAPH_HPP_
#define QRAD_ARCH_GRAPH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qrad::arch {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Undirected, connected, unit-weight qubit connectivity graph.
class ArchitectureGraph {
 public:
  /// Throws std::invalid_argument on self-loops, duplicate edges, out-of-range
  /// endpoints, or a disconnected graph.
  ArchitectureGraph(std::string name, std::uint32_t num_nodes, std::vector<Edge> edges);

  const std::string& name() const { return name_; }
  std::uint32_t num_nodes() const { return num_nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adjacency_.at(v); }
  std::uint32_t degree(std::uint32_t v) const { return static_cast<std::uint32_t>(neighbors(v).size()); }
  bool has_edge(std::uint32_t a, std::uint32_t b) const;

  /// Hop count between two nodes.
  int distance(std::uint32_t a, std::uint32_t b) const;

  /// Adjacency-list text: header `name n_nodes`, then `u v` per line.
  std::string to_adjacency_text() const;
  static ArchitectureGraph from_adjacency_text(std::string_view text);

 private:
  std::string name_;
  std::uint32_t num_nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<int> distances_;  // row-major all-pairs BFS distances
};

ArchitectureGraph linear_graph(std::uint32_t n);
ArchitectureGraph mesh_graph(std::uint32_t rows, std::uint32_t cols);
ArchitectureGraph complete_graph(std::uint32_t n);
ArchitectureGraph preset_graph(std::string_view name);
ArchitectureGraph load_graph_file(const std::string& path);

/// Names of the bundled device presets, lowercase.
std::vector<std::string> preset_names();

/// Builds a graph from `linear:N`, `mesh:R,C`, `complete:N`, `preset:NAME`,
/// a bare preset name, or `file:PATH`.
ArchitectureGraph build_graph(std::string_view spec);

/// BFS hop count; a == b gives 0.
int shortest_distance(const ArchitectureGraph& graph, std::uint32_t a, std::uint32_t b);

std::uint32_t count_nodes_with_degree_at_least(const ArchitectureGraph& graph, std::uint32_t degree);

}  // namespace qrad::arch

#endif  // QRAD_ARCH_GRAPH_HPP_
