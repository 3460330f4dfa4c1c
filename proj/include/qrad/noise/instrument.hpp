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

#ifndef QRAD_NOISE_INSTRUMENT_HPP_
#define QRAD_NOISE_INSTRUMENT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qrad/arch/graph.hpp"
#include "qrad/noise/channels.hpp"
#include "qrad/sim/circuit.hpp"
#include "qrad/sim/executor.hpp"
#include "qrad/sim/random.hpp"

namespace qrad::noise {

enum class Channel : std::uint8_t { DEPOLARIZE_1, DEPOLARIZE_2, RESET_WITH_PROB };

/// A stochastic error inserted right after gate `position`.
struct ErrorSite {
  std::size_t position = 0;
  Channel channel = Channel::DEPOLARIZE_1;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;  // DEPOLARIZE_2 only
  double probability = 0.0;
};

/// A circuit with error sites attached. Sites are resolved independently on every shot.
class NoisyCircuit {
 public:
  NoisyCircuit(sim::Circuit circuit, std::vector<ErrorSite> sites);

  const sim::Circuit& circuit() const { return circuit_; }
  const std::vector<ErrorSite>& sites() const { return sites_; }

  /// Sites following gate `position`, in application order.
  std::span<const ErrorSite> sites_after(std::size_t position) const;

  /// Resolves every site into concrete gates (Paulis and RESETs) for one shot.
  sim::Circuit sample(RandomStream& rng) const;

  /// Runs one shot, resolving sites on the fly. Equivalent in distribution to
  /// run_shot(sample(rng)) but without materializing the circuit.
  sim::Record run_shot(RandomStream& rng) const;

  std::size_t count_sites(Channel channel) const;
  std::size_t count_nonzero_sites() const;
  std::size_t count_reset_sites_on(std::uint32_t qubit) const;

 private:
  sim::Circuit circuit_;
  std::vector<ErrorSite> sites_;
  std::vector<std::size_t> offsets_;  // sites_ index range per gate position
};

/// Reset probability of every physical node for a radiation fault in time bin `bin`.
std::vector<double> radiation_reset_probabilities(const RadiationFaultConfig& fault, const arch::ArchitectureGraph& arch,
                                                  int bin);

/// Probability-1 resets on the listed nodes, zero elsewhere (non-spreading erasure).
std::vector<double> erasure_reset_probabilities(std::span<const std::uint32_t> erased, std::uint32_t num_nodes);

/// Attaches a depolarizing site (arity of the gate, probability p) after every unitary
/// gate, and a reset site after every gate on each qubit whose physical location has a
/// nonzero entry in `reset_by_physical`. `layout[q]` is the physical node of circuit qubit q.
NoisyCircuit instrument_circuit(const sim::Circuit& circuit, const IntrinsicNoiseConfig& intrinsic,
                                std::span<const double> reset_by_physical, std::span<const std::uint32_t> layout);

/// Intrinsic noise plus an optional radiation fault evaluated in time bin `bin`.
NoisyCircuit instrument_circuit(const sim::Circuit& circuit, const IntrinsicNoiseConfig& intrinsic,
                                const std::optional<RadiationFaultConfig>& fault,
                                std::span<const std::uint32_t> layout, const arch::ArchitectureGraph& arch, int bin);

/// Identity layout for circuits already expressed on physical qubits.
std::vector<std::uint32_t> identity_layout(std::uint32_t num_qubits);

}  // namespace qrad::noise

#endif  // QRAD_NOISE_INSTRUMENT_HPP_
