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


#include "oracles.hpp"

#include <limits>
#include <vector>

namespace qrad::testing {

std::int64_t brute_force_matching_cost(const decode::DecodingGraph& graph) {
  const std::uint32_t n = graph.num_nodes();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::int64_t> best(std::size_t{1} << n, kInf);
  best[0] = 0;
  // best[mask] covers the nodes in mask; extend from the lowest node not yet covered.
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (best[mask] >= kInf) continue;
    std::uint32_t u = 0;
    while (mask & (1u << u)) ++u;
    const std::uint32_t with_u = mask | (1u << u);
    if (graph.boundary(u) != decode::DecodingGraph::kNoEdge)
      best[with_u] = std::min(best[with_u], best[mask] + graph.boundary(u));
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (mask & (1u << v) || graph.edge(u, v) == decode::DecodingGraph::kNoEdge) continue;
      const std::uint32_t next = with_u | (1u << v);
      best[next] = std::min(best[next], best[mask] + graph.edge(u, v));
    }
  }
  return best[full] >= kInf ? -1 : best[full];
}

decode::DecodingGraph random_decoding_graph(RandomStream& rng, std::uint32_t max_nodes, double edge_density,
                                            double boundary_density, std::int64_t max_weight) {
  const auto n = static_cast<std::uint32_t>(rng() % (max_nodes + 1));
  decode::DecodingGraph g(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    if (uniform01(rng) < boundary_density) g.set_boundary(u, static_cast<std::int64_t>(rng() % (max_weight + 1)));
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (uniform01(rng) < edge_density) g.set_edge(u, v, static_cast<std::int64_t>(rng() % (max_weight + 1)));
    }
  }
  return g;
}

sim::Circuit random_clifford_circuit(RandomStream& rng, std::uint32_t max_qubits, std::uint32_t num_gates,
                                     std::uint32_t max_measurements) {
  const auto n = 1 + static_cast<std::uint32_t>(rng() % max_qubits);
  const auto m = 1 + static_cast<std::uint32_t>(rng() % max_measurements);
  sim::Circuit c(n, m);
  std::uint32_t slot = 0;
  for (std::uint32_t i = 0; i < num_gates; ++i) {
    const auto q = static_cast<std::uint32_t>(rng() % n);
    auto other = static_cast<std::uint32_t>(rng() % n);
    const int pick = static_cast<int>(rng() % 10);
    if (pick <= 1) c.h(q);
    else if (pick == 2) c.s(q);
    else if (pick == 3) c.x(q);
    else if (pick == 4) c.y(q);
    else if (pick == 5) c.z(q);
    else if (pick <= 7 && n > 1) {
      if (other == q) other = (q + 1) % n;
      if (pick == 6) c.cnot(q, other);
      else c.swap(q, other);
    } else if (pick == 8 && slot < m) {
      c.measure(q, slot++);
    } else {
      c.reset(q);
    }
  }
  // Every slot gets written so records have no dead bits.
  for (; slot < m; ++slot) c.measure(static_cast<std::uint32_t>(rng() % n), slot);
  return c;
}

sim::Circuit insert_gate(const sim::Circuit& circuit, std::size_t position, const sim::Gate& gate) {
  sim::Circuit out(circuit.num_qubits(), circuit.num_slots());
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i <= gates.size(); ++i) {
    if (i == position) out.append(gate);
    if (i < gates.size()) out.append(gates[i]);
  }
  return out;
}

std::map<sim::Record, double> sampled_distribution(const sim::Circuit& circuit, std::uint64_t seed, std::size_t shots) {
  std::map<sim::Record, double> out;
  RandomStream rng(seed);
  for (std::size_t i = 0; i < shots; ++i) out[sim::run_shot(circuit, rng)] += 1.0;
  for (auto& [rec, w] : out) w /= static_cast<double>(shots);
  return out;
}

}  // namespace qrad::testing
