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

#include "qrad/arch/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qrad::arch {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& preset_texts();
}  // namespace detail

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::uint32_t> parse_uint_list(std::string_view text, std::string_view what) {
  std::vector<std::uint32_t> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad parameter '" + std::string(tok) + "' in " + std::string(what));
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace

ArchitectureGraph::ArchitectureGraph(std::string name, std::uint32_t num_nodes, std::vector<Edge> edges)
    : name_(std::move(name)), num_nodes_(num_nodes), adjacency_(num_nodes) {
  if (num_nodes == 0) throw std::invalid_argument("architecture graph needs at least one node");
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a >= num_nodes || b >= num_nodes) {
      throw std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) + " outside " +
                                  std::to_string(num_nodes) + " nodes");
    }
    if (a == b) throw std::invalid_argument("self-loop on node " + std::to_string(a));
    Edge e = std::minmax(a, b);
    if (!seen.insert(e).second) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
    }
    edges_.push_back(e);
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  distances_.assign(static_cast<std::size_t>(num_nodes) * num_nodes, -1);
  for (std::uint32_t s = 0; s < num_nodes; ++s) {
    int* row = &distances_[static_cast<std::size_t>(s) * num_nodes];
    std::deque<std::uint32_t> queue{s};
    row[s] = 0;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto w : adjacency_[v]) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
    if (std::find(row, row + num_nodes, -1) != row + num_nodes) {
      throw std::invalid_argument("architecture graph '" + name_ + "' is disconnected");
    }
  }
}

bool ArchitectureGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
  if (a >= num_nodes_ || b >= num_nodes_) return false;
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

int ArchitectureGraph::distance(std::uint32_t a, std::uint32_t b) const {
  if (a >= num_nodes_ || b >= num_nodes_) throw std::out_of_range("node outside architecture graph");
  return distances_[static_cast<std::size_t>(a) * num_nodes_ + b];
}

std::string ArchitectureGraph::to_adjacency_text() const {
  std::string out = name_ + " " + std::to_string(num_nodes_) + "\n";
  for (auto [a, b] : edges_) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

ArchitectureGraph ArchitectureGraph::from_adjacency_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::string name;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> name >> n) || n <= 0) {
        throw std::invalid_argument("adjacency line " + std::to_string(line_no) + ": expected header 'name n_nodes'");
      }
      continue;
    }
    long long a = -1, b = -1;
    if (!(fields >> a >> b) || a < 0 || b < 0) {
      throw std::invalid_argument("adjacency line " + std::to_string(line_no) + ": expected 'u v'");
    }
    edges.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  }
  if (n < 0) throw std::invalid_argument("adjacency text has no header line");
  return ArchitectureGraph(name, static_cast<std::uint32_t>(n), std::move(edges));
}

ArchitectureGraph linear_graph(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("linear graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return ArchitectureGraph("linear" + std::to_string(n), n, std::move(edges));
}

ArchitectureGraph mesh_graph(std::uint32_t rows, std::uint32_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("mesh dimensions must be positive");
  std::vector<Edge> edges;
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      const std::uint32_t v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return ArchitectureGraph("mesh" + std::to_string(rows) + "x" + std::to_string(cols), rows * cols, std::move(edges));
}

ArchitectureGraph complete_graph(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return ArchitectureGraph("complete" + std::to_string(n), n, std::move(edges));
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::preset_texts()) names.emplace_back(name);
  return names;
}

ArchitectureGraph preset_graph(std::string_view name) {
  const std::string key = lowercase(name);
  for (const auto& [preset, text] : detail::preset_texts()) {
    if (preset == key) return ArchitectureGraph::from_adjacency_text(text);
  }
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown architecture preset '" + std::string(name) + "' (available: " + known + ")");
}

ArchitectureGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open adjacency file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ArchitectureGraph::from_adjacency_text(buf.str());
}

ArchitectureGraph build_graph(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string kind = lowercase(spec.substr(0, colon));
  const std::string_view params = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "file") return load_graph_file(std::string(params));
  if (kind == "preset") return preset_graph(params);
  if (kind == "linear" || kind == "complete" || kind == "mesh") {
    const auto values = parse_uint_list(params, spec);
    if (kind == "mesh") {
      if (values.size() != 2) throw std::invalid_argument("mesh needs two parameters, e.g. mesh:5,6");
      return mesh_graph(values[0], values[1]);
    }
    if (values.size() != 1) throw std::invalid_argument(kind + " needs one parameter, e.g. " + kind + ":10");
    return kind == "linear" ? linear_graph(values[0]) : complete_graph(values[0]);
  }
  if (colon == std::string_view::npos) return preset_graph(kind);
  throw std::invalid_argument("unknown architecture kind '" + kind + "'");
}

int shortest_distance(const ArchitectureGraph& graph, std::uint32_t a, std::uint32_t b) {
  return graph.distance(a, b);
}

std::uint32_t count_nodes_with_degree_at_least(const ArchitectureGraph& graph, std::uint32_t degree) {
  std::uint32_t count = 0;
  for (std::uint32_t v = 0; v < graph.num_nodes(); ++v) count += graph.degree(v) >= degree ? 1 : 0;
  return count;
}

}  // namespace qrad::arch
