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

#include "qrad/arch/router.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "qrad/sim/random.hpp"

namespace qrad::arch {
namespace {

using sim::Circuit;
using sim::Gate;

constexpr std::size_t kLookahead = 20;
constexpr double kLookaheadWeight = 0.5;
constexpr double kDecayStep = 0.001;
constexpr int kDecayReset = 5;
constexpr int kLayoutTrials = 8;
constexpr int kRefinementPasses = 2;

int eccentricity(const ArchitectureGraph& g, std::uint32_t v) {
  int e = 0;
  for (std::uint32_t u = 0; u < g.num_nodes(); ++u) e = std::max(e, g.distance(v, u));
  return e;
}

// Unweighted BFS eccentricities within the connected component of each vertex.
std::vector<int> interaction_eccentricity(const std::vector<std::set<std::uint32_t>>& adj) {
  const auto n = adj.size();
  std::vector<int> ecc(n, 0);
  std::vector<int> dist(n);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto v = queue[head];
      ecc[s] = std::max(ecc[s], dist[v]);
      for (auto w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return ecc;
}

struct Dag {
  std::vector<std::vector<std::size_t>> successors;
  std::vector<int> pending;  // unexecuted predecessor count
};

Dag build_dag(const Circuit& circuit) {
  const auto& gates = circuit.gates();
  Dag dag{std::vector<std::vector<std::size_t>>(gates.size()), std::vector<int>(gates.size(), 0)};
  std::vector<std::size_t> last(circuit.num_qubits(), RoutingResult::kInserted);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    std::uint32_t qs[2] = {g.q0, g.q1};
    const int k = g.num_operands();
    for (int j = 0; j < k; ++j) {
      auto& prev = last[qs[j]];
      if (prev != RoutingResult::kInserted) {
        // Both operands may share the same predecessor; count it once.
        if (dag.successors[prev].empty() || dag.successors[prev].back() != i) {
          dag.successors[prev].push_back(i);
          ++dag.pending[i];
        }
      }
      prev = i;
    }
  }
  return dag;
}

class Router {
 public:
  Router(const Circuit& circuit, const ArchitectureGraph& graph, std::vector<std::uint32_t> layout,
         std::uint64_t seed)
      : circuit_(circuit), graph_(graph), dag_(build_dag(circuit)), rng_(seed), l2p_(std::move(layout)) {
    p2l_.assign(graph.num_nodes(), kFree);
    for (std::uint32_t l = 0; l < l2p_.size(); ++l) p2l_[l2p_[l]] = l;
    decay_.assign(graph.num_nodes(), 1.0);
    for (std::size_t i = 0; i < dag_.pending.size(); ++i) {
      if (dag_.pending[i] == 0) front_.push_back(i);
    }
  }

  RoutingResult run() {
    RoutingResult result;
    result.circuit = Circuit(graph_.num_nodes(), circuit_.num_slots());
    result.layout.initial = l2p_;
    int swaps_since_progress = 0;
    int swaps_since_decay_reset = 0;
    const int stall_limit = 3 * graph_.num_nodes() + 10;

    while (!front_.empty()) {
      if (execute_ready(result)) {
        swaps_since_progress = 0;
        swaps_since_decay_reset = 0;
        std::fill(decay_.begin(), decay_.end(), 1.0);
        continue;
      }
      if (swaps_since_progress >= stall_limit) {
        force_progress(result);
        swaps_since_progress = 0;
        continue;
      }
      const auto [a, b] = choose_swap();
      apply_swap(result, a, b);
      ++swaps_since_progress;
      if (++swaps_since_decay_reset >= kDecayReset) {
        swaps_since_decay_reset = 0;
        std::fill(decay_.begin(), decay_.end(), 1.0);
      } else {
        decay_[a] += kDecayStep;
        decay_[b] += kDecayStep;
      }
    }
    result.layout.final = l2p_;
    return result;
  }

 private:
  static constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();

  bool adjacent(const Gate& g) const {
    return g.num_operands() == 1 || graph_.has_edge(l2p_[g.q0], l2p_[g.q1]);
  }

  // Emits every front gate that can run under the current mapping, repeatedly.
  bool execute_ready(RoutingResult& result) {
    bool progressed = false;
    bool again = true;
    while (again) {
      again = false;
      std::vector<std::size_t> next;
      for (auto gi : front_) {
        const auto& g = circuit_.gates()[gi];
        if (!adjacent(g)) {
          next.push_back(gi);
          continue;
        }
        emit(result, g, gi);
        progressed = again = true;
        for (auto s : dag_.successors[gi]) {
          if (--dag_.pending[s] == 0) next.push_back(s);
        }
      }
      std::sort(next.begin(), next.end());
      front_ = std::move(next);
    }
    return progressed;
  }

  void emit(RoutingResult& result, const Gate& g, std::size_t source) {
    Gate out = g;
    out.q0 = l2p_[g.q0];
    if (g.num_operands() == 2) out.q1 = l2p_[g.q1];
    result.circuit.append(out);
    result.source_gate.push_back(source);
  }

  void apply_swap(RoutingResult& result, std::uint32_t a, std::uint32_t b) {
    result.circuit.swap(a, b);
    result.source_gate.push_back(RoutingResult::kInserted);
    ++result.swaps;
    std::swap(p2l_[a], p2l_[b]);
    if (p2l_[a] != kFree) l2p_[p2l_[a]] = a;
    if (p2l_[b] != kFree) l2p_[p2l_[b]] = b;
  }

  std::vector<std::size_t> extended_set() const {
    std::vector<std::size_t> out;
    std::vector<int> pending = dag_.pending;
    std::vector<std::size_t> layer = front_;
    while (!layer.empty() && out.size() < kLookahead) {
      std::vector<std::size_t> next;
      for (auto gi : layer) {
        for (auto s : dag_.successors[gi]) {
          if (--pending[s] != 0) continue;
          next.push_back(s);
          if (circuit_.gates()[s].num_operands() == 2 && out.size() < kLookahead) out.push_back(s);
        }
      }
      layer = std::move(next);
    }
    return out;
  }

  double gate_distance(std::size_t gi, std::uint32_t a, std::uint32_t b) const {
    const auto& g = circuit_.gates()[gi];
    auto where = [&](std::uint32_t l) {
      const auto p = l2p_[l];
      return p == a ? b : (p == b ? a : p);
    };
    return graph_.distance(where(g.q0), where(g.q1));
  }

  std::pair<std::uint32_t, std::uint32_t> choose_swap() {
    std::vector<std::size_t> front2;
    for (auto gi : front_) {
      if (circuit_.gates()[gi].num_operands() == 2) front2.push_back(gi);
    }
    const auto extended = extended_set();

    std::set<std::pair<std::uint32_t, std::uint32_t>> candidates;
    for (auto gi : front2) {
      const auto& g = circuit_.gates()[gi];
      for (auto l : {g.q0, g.q1}) {
        const auto p = l2p_[l];
        for (auto n : graph_.neighbors(p)) candidates.insert({std::min(p, n), std::max(p, n)});
      }
    }

    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ties;
    for (const auto& [a, b] : candidates) {
      double front_cost = 0;
      for (auto gi : front2) front_cost += gate_distance(gi, a, b);
      front_cost /= static_cast<double>(front2.size());
      double ext_cost = 0;
      for (auto gi : extended) ext_cost += gate_distance(gi, a, b);
      if (!extended.empty()) ext_cost /= static_cast<double>(extended.size());
      const double score = std::max(decay_[a], decay_[b]) * (front_cost + kLookaheadWeight * ext_cost);
      if (score < best - 1e-12) {
        best = score;
        ties.assign(1, {a, b});
      } else if (score <= best + 1e-12) {
        ties.push_back({a, b});
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
    return ties[pick(rng_)];
  }

  // Walks the first blocked two-qubit gate's control toward its target.
  void force_progress(RoutingResult& result) {
    for (auto gi : front_) {
      const auto& g = circuit_.gates()[gi];
      if (g.num_operands() != 2) continue;
      auto p = l2p_[g.q0];
      const auto t = l2p_[g.q1];
      while (!graph_.has_edge(p, t)) {
        std::uint32_t step = p;
        for (auto n : graph_.neighbors(p)) {
          if (graph_.distance(n, t) < graph_.distance(step, t)) step = n;
        }
        apply_swap(result, p, step);
        p = step;
      }
      return;
    }
  }

  const Circuit& circuit_;
  const ArchitectureGraph& graph_;
  Dag dag_;
  RandomStream rng_;
  std::vector<std::uint32_t> l2p_;
  std::vector<std::uint32_t> p2l_;  // kFree where no logical qubit sits
  std::vector<double> decay_;
  std::vector<std::size_t> front_;
};

}  // namespace

std::vector<std::uint32_t> Layout::mapping_at(const sim::Circuit& routed, std::size_t position) const {
  std::vector<std::uint32_t> l2p = initial;
  std::vector<std::uint32_t> p2l(routed.num_qubits(), std::numeric_limits<std::uint32_t>::max());
  for (std::uint32_t l = 0; l < l2p.size(); ++l) p2l[l2p[l]] = l;
  const auto& gates = routed.gates();
  for (std::size_t i = 0; i < std::min(position, gates.size()); ++i) {
    if (gates[i].kind != sim::GateKind::SWAP) continue;
    const auto a = gates[i].q0;
    const auto b = gates[i].q1;
    std::swap(p2l[a], p2l[b]);
    if (p2l[a] < l2p.size()) l2p[p2l[a]] = a;
    if (p2l[b] < l2p.size()) l2p[p2l[b]] = b;
  }
  return l2p;
}

std::size_t RoutingResult::two_qubit_gates() const {
  return static_cast<std::size_t>(std::count_if(circuit.gates().begin(), circuit.gates().end(),
                                                [](const sim::Gate& g) { return g.num_operands() == 2; }));
}

std::vector<std::uint32_t> initial_placement(const sim::Circuit& circuit, const ArchitectureGraph& graph) {
  const auto n = circuit.num_qubits();
  if (n > graph.num_nodes()) {
    throw std::invalid_argument("circuit needs " + std::to_string(n) + " qubits but architecture '" + graph.name() +
                                "' has " + std::to_string(graph.num_nodes()));
  }
  std::vector<std::set<std::uint32_t>> adj(n);
  for (const auto& g : circuit.gates()) {
    if (g.num_operands() == 2) {
      adj[g.q0].insert(g.q1);
      adj[g.q1].insert(g.q0);
    }
  }
  const auto logical_ecc = interaction_eccentricity(adj);

  std::vector<int> phys_ecc(graph.num_nodes());
  for (std::uint32_t v = 0; v < graph.num_nodes(); ++v) phys_ecc[v] = eccentricity(graph, v);

  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> l2p(n, kUnset);
  std::vector<bool> used(graph.num_nodes(), false);

  auto place = [&](std::uint32_t l) {
    std::uint32_t best = kUnset;
    long best_cost = std::numeric_limits<long>::max();
    bool any_neighbor = false;
    for (auto m : adj[l]) any_neighbor |= l2p[m] != kUnset;
    for (std::uint32_t p = 0; p < graph.num_nodes(); ++p) {
      if (used[p]) continue;
      long cost = 0;
      if (any_neighbor) {
        for (auto m : adj[l]) {
          if (l2p[m] != kUnset) cost += graph.distance(p, l2p[m]);
        }
      } else {
        // Seed of a new component: prefer well-connected, central nodes.
        cost = -static_cast<long>(graph.degree(p)) * 1000 + phys_ecc[p];
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = p;
      }
    }
    l2p[l] = best;
    used[best] = true;
  };

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
    return logical_ecc[a] < logical_ecc[b];
  });
  for (auto seed : order) {
    if (l2p[seed] != kUnset) continue;
    std::vector<std::uint32_t> queue{seed};
    place(seed);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto m : adj[queue[head]]) {
        if (l2p[m] != kUnset) continue;
        place(m);
        queue.push_back(m);
      }
    }
  }
  return l2p;
}

RoutingResult transpile(const sim::Circuit& circuit, const ArchitectureGraph& graph, std::uint64_t seed) {
  circuit.validate();
  const auto placed = initial_placement(circuit, graph);

  // Same gates in reverse order; only the interaction structure matters for layout search.
  Circuit reversed(circuit.num_qubits(), circuit.num_slots());
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) reversed.append(*it);

  std::optional<RoutingResult> best;
  for (int trial = 0; trial < kLayoutTrials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(trial));
    RandomStream rng(trial_seed);
    std::vector<std::uint32_t> layout = placed;
    if (trial > 0) {
      std::vector<std::uint32_t> nodes(graph.num_nodes());
      std::iota(nodes.begin(), nodes.end(), 0u);
      std::shuffle(nodes.begin(), nodes.end(), rng);
      layout.assign(nodes.begin(), nodes.begin() + circuit.num_qubits());
    }
    // Forward/backward passes: each pass starts where the previous one ended, pulling
    // the initial layout toward one that suits the whole circuit.
    for (int pass = 0; pass < kRefinementPasses; ++pass) {
      layout = Router(circuit, graph, layout, derive_seed(trial_seed, 2 * pass)).run().layout.final;
      layout = Router(reversed, graph, layout, derive_seed(trial_seed, 2 * pass + 1)).run().layout.final;
    }
    auto routed = Router(circuit, graph, layout, trial_seed).run();
    if (!best || routed.swaps < best->swaps) best = std::move(routed);
  }
  return std::move(*best);
}

std::vector<std::string> validate_routing(const sim::Circuit& circuit, const ArchitectureGraph& graph) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const auto& g = circuit.gates()[i];
    if (g.num_operands() != 2) continue;
    if (g.q0 >= graph.num_nodes() || g.q1 >= graph.num_nodes()) {
      out.push_back("gate " + std::to_string(i) + " (" + sim::format_gate(g) + "): qubit outside architecture");
    } else if (!graph.has_edge(g.q0, g.q1)) {
      out.push_back("gate " + std::to_string(i) + " (" + sim::format_gate(g) + "): no edge " + std::to_string(g.q0) +
                    "-" + std::to_string(g.q1));
    }
  }
  return out;
}

}  // namespace qrad::arch
