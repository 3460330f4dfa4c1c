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

#include "qrad/arch/subgraphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qrad::arch {
namespace {

struct Induced {
  std::vector<std::uint32_t> nodes;              // local -> global
  std::vector<std::vector<std::uint32_t>> adj;   // local adjacency
};

Induced induce(const ArchitectureGraph& graph, std::span<const std::uint32_t> allowed) {
  Induced g;
  if (allowed.empty()) {
    for (std::uint32_t v = 0; v < graph.num_nodes(); ++v) g.nodes.push_back(v);
  } else {
    g.nodes.assign(allowed.begin(), allowed.end());
    std::sort(g.nodes.begin(), g.nodes.end());
    g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  }
  std::vector<std::int64_t> local(graph.num_nodes(), -1);
  for (std::uint32_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes[i] >= graph.num_nodes()) throw std::out_of_range("subgraph node outside architecture");
    local[g.nodes[i]] = i;
  }
  g.adj.resize(g.nodes.size());
  for (std::uint32_t i = 0; i < g.nodes.size(); ++i) {
    for (auto n : graph.neighbors(g.nodes[i])) {
      if (local[n] >= 0) g.adj[i].push_back(static_cast<std::uint32_t>(local[n]));
    }
    std::sort(g.adj[i].begin(), g.adj[i].end());
  }
  return g;
}

// ESU (Wernicke 2006): every connected k-subset is produced exactly once, rooted at its
// smallest vertex. Stops once `limit` sets have been collected.
class Esu {
 public:
  Esu(const Induced& g, std::uint32_t k, std::size_t limit) : g_(g), k_(k), limit_(limit) {}

  std::vector<NodeSet> run() {
    for (std::uint32_t v = 0; v < g_.nodes.size() && out_.size() < limit_; ++v) {
      std::vector<std::uint32_t> ext;
      for (auto u : g_.adj[v]) {
        if (u > v) ext.push_back(u);
      }
      sub_ = {v};
      extend(ext, v);
    }
    return std::move(out_);
  }

 private:
  bool in_closed_neighborhood(std::uint32_t u) const {
    for (auto s : sub_) {
      if (s == u || std::binary_search(g_.adj[s].begin(), g_.adj[s].end(), u)) return true;
    }
    return false;
  }

  void extend(std::vector<std::uint32_t> ext, std::uint32_t root) {
    if (sub_.size() == k_) {
      NodeSet set;
      for (auto s : sub_) set.push_back(g_.nodes[s]);
      std::sort(set.begin(), set.end());
      out_.push_back(std::move(set));
      return;
    }
    while (!ext.empty() && out_.size() < limit_) {
      const auto w = ext.back();
      ext.pop_back();
      auto next = ext;
      for (auto u : g_.adj[w]) {
        if (u > root && !in_closed_neighborhood(u) && std::find(next.begin(), next.end(), u) == next.end()) {
          next.push_back(u);
        }
      }
      sub_.push_back(w);
      extend(std::move(next), root);
      sub_.pop_back();
    }
  }

  const Induced& g_;
  std::uint32_t k_;
  std::size_t limit_;
  std::vector<std::uint32_t> sub_;
  std::vector<NodeSet> out_;
};

}  // namespace

std::vector<NodeSet> enumerate_connected_subgraphs(const ArchitectureGraph& graph, std::uint32_t k,
                                                   std::size_t max_samples, RandomStream& rng,
                                                   std::span<const std::uint32_t> allowed) {
  const Induced g = induce(graph, allowed);
  if (k < 1 || k > g.nodes.size()) {
    throw std::invalid_argument("subgraph size k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(g.nodes.size()) + "]");
  }
  if (max_samples == 0) return {};

  auto found = Esu(g, k, max_samples + 1).run();
  if (found.size() <= max_samples) {
    std::sort(found.begin(), found.end());
    return found;
  }

  std::set<NodeSet> seen;
  std::uniform_int_distribution<std::size_t> pick_start(0, g.nodes.size() - 1);
  const std::size_t max_attempts = 50 * max_samples + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && seen.size() < max_samples; ++attempt) {
    std::vector<std::uint32_t> members{static_cast<std::uint32_t>(pick_start(rng))};
    while (members.size() < k) {
      std::vector<std::uint32_t> frontier;
      for (auto m : members) {
        for (auto u : g.adj[m]) {
          if (std::find(members.begin(), members.end(), u) == members.end()) frontier.push_back(u);
        }
      }
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
      if (frontier.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
      members.push_back(frontier[pick(rng)]);
    }
    if (members.size() != k) continue;
    NodeSet set;
    for (auto m : members) set.push_back(g.nodes[m]);
    std::sort(set.begin(), set.end());
    seen.insert(std::move(set));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace qrad::arch
