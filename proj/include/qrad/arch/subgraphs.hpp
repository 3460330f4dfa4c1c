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

#ifndef QRAD_ARCH_SUBGRAPHS_HPP_
#define QRAD_ARCH_SUBGRAPHS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qrad/arch/graph.hpp"
#include "qrad/sim/random.hpp"

namespace qrad::arch {

using NodeSet = std::vector<std::uint32_t>;  // sorted ascending

/// Connected induced subgraphs with exactly k nodes, restricted to `allowed` (all nodes
/// when empty). Exhaustive when there are at most max_samples of them; otherwise up to
/// max_samples distinct ones drawn by random connected growth. Sorted lexicographically.
std::vector<NodeSet> enumerate_connected_subgraphs(const ArchitectureGraph& graph, std::uint32_t k,
                                                   std::size_t max_samples, RandomStream& rng,
                                                   std::span<const std::uint32_t> allowed = {});

}  // namespace qrad::arch

#endif  // QRAD_ARCH_SUBGRAPHS_HPP_
