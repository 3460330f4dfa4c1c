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

#ifndef QRAD_ARCH_ROUTER_HPP_
#define QRAD_ARCH_ROUTER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qrad/arch/graph.hpp"
#include "qrad/sim/circuit.hpp"

namespace qrad::arch {

/// Logical-to-physical assignment of a routed circuit. The running permutation at any
/// position is recovered by replaying the SWAPs of the routed circuit from `initial`.
struct Layout {
  std::vector<std::uint32_t> initial;  // logical -> physical before the first gate
  std::vector<std::uint32_t> final;    // logical -> physical after the last gate

  /// Logical -> physical just before routed gate `position`.
  std::vector<std::uint32_t> mapping_at(const sim::Circuit& routed, std::size_t position) const;
};

struct RoutingResult {
  sim::Circuit circuit;  // over physical nodes; classical slots unchanged
  Layout layout;
  std::size_t swaps = 0;
  /// For every routed gate, the index of the source gate, or kInserted for SWAPs.
  std::vector<std::size_t> source_gate;

  static constexpr std::size_t kInserted = static_cast<std::size_t>(-1);

  std::size_t two_qubit_gates() const;
};

/// Breadth-first placement over the interaction graph, seeded at the best-connected
/// logical qubit and the best-connected physical node.
std::vector<std::uint32_t> initial_placement(const sim::Circuit& circuit, const ArchitectureGraph& graph);

/// Maps the circuit onto the graph, inserting SWAPs so that every two-qubit gate acts
/// on an edge. Several initial layouts are tried, each refined by forward and backward
/// passes, and the one needing the fewest SWAPs is kept. Deterministic for a fixed seed.
RoutingResult transpile(const sim::Circuit& circuit, const ArchitectureGraph& graph, std::uint64_t seed);

/// One message per two-qubit gate that does not sit on an edge (or is out of range).
std::vector<std::string> validate_routing(const sim::Circuit& circuit, const ArchitectureGraph& graph);

}  // namespace qrad::arch

#endif  // QRAD_ARCH_ROUTER_HPP_
