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

#include "qrad/noise/instrument.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "qrad/sim/tableau.hpp"

namespace qrad::noise {

namespace {

void apply_pauli(sim::Tableau& t, Pauli p, std::uint32_t q) {
  switch (p) {
    case Pauli::I: break;
    case Pauli::X: t.x(q); break;
    case Pauli::Y: t.y(q); break;
    case Pauli::Z: t.z(q); break;
  }
}

void append_pauli(sim::Circuit& c, Pauli p, std::uint32_t q) {
  switch (p) {
    case Pauli::I: break;
    case Pauli::X: c.x(q); break;
    case Pauli::Y: c.y(q); break;
    case Pauli::Z: c.z(q); break;
  }
}

bool fires(double probability, RandomStream& rng) {
  if (probability <= 0.0) return false;
  if (probability >= 1.0) return true;
  return uniform01(rng) < probability;
}

}  // namespace

NoisyCircuit::NoisyCircuit(sim::Circuit circuit, std::vector<ErrorSite> sites)
    : circuit_(std::move(circuit)), sites_(std::move(sites)), offsets_(circuit_.size() + 1, 0) {
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    const ErrorSite& s = sites_[i];
    if (s.position >= circuit_.size()) throw std::out_of_range("error site after a nonexistent gate");
    if (i > 0 && s.position < sites_[i - 1].position) throw std::invalid_argument("error sites must be ordered");
    if (!(s.probability >= 0.0 && s.probability <= 1.0)) throw std::invalid_argument("site probability outside [0,1]");
    if (s.q0 >= circuit_.num_qubits() || (s.channel == Channel::DEPOLARIZE_2 && s.q1 >= circuit_.num_qubits())) {
      throw std::out_of_range("error site on a qubit outside the register");
    }
    if (s.channel == Channel::DEPOLARIZE_2 && s.q0 == s.q1) {
      throw std::invalid_argument("two-qubit depolarize site needs two distinct qubits");
    }
    ++offsets_[s.position + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
}

std::span<const ErrorSite> NoisyCircuit::sites_after(std::size_t position) const {
  return std::span<const ErrorSite>(sites_).subspan(offsets_[position], offsets_[position + 1] - offsets_[position]);
}

sim::Circuit NoisyCircuit::sample(RandomStream& rng) const {
  sim::Circuit out(circuit_.num_qubits(), circuit_.num_slots());
  for (std::size_t pos = 0; pos < circuit_.size(); ++pos) {
    out.append(circuit_.gates()[pos]);
    for (const ErrorSite& s : sites_after(pos)) {
      switch (s.channel) {
        case Channel::DEPOLARIZE_1:
          append_pauli(out, sample_depolarize(s.probability, 1, rng)[0], s.q0);
          break;
        case Channel::DEPOLARIZE_2: {
          auto ps = sample_depolarize(s.probability, 2, rng);
          append_pauli(out, ps[0], s.q0);
          append_pauli(out, ps[1], s.q1);
          break;
        }
        case Channel::RESET_WITH_PROB:
          if (fires(s.probability, rng)) out.reset(s.q0);
          break;
      }
    }
  }
  return out;
}

sim::Record NoisyCircuit::run_shot(RandomStream& rng) const {
  sim::Record record(circuit_.num_slots(), 0);
  sim::Tableau t(circuit_.num_qubits());
  const auto& gates = circuit_.gates();
  for (std::size_t pos = 0; pos < gates.size(); ++pos) {
    const sim::Gate& g = gates[pos];
    if (auto bit = t.apply(g, rng); bit && g.slot) record[*g.slot] = *bit ? 1 : 0;
    for (std::size_t i = offsets_[pos]; i < offsets_[pos + 1]; ++i) {
      const ErrorSite& s = sites_[i];
      if (s.probability <= 0.0) continue;
      switch (s.channel) {
        case Channel::DEPOLARIZE_1:
          apply_pauli(t, sample_depolarize(s.probability, 1, rng)[0], s.q0);
          break;
        case Channel::DEPOLARIZE_2: {
          auto ps = sample_depolarize(s.probability, 2, rng);
          apply_pauli(t, ps[0], s.q0);
          apply_pauli(t, ps[1], s.q1);
          break;
        }
        case Channel::RESET_WITH_PROB:
          if (fires(s.probability, rng)) t.reset(s.q0, rng);
          break;
      }
    }
  }
  return record;
}

std::size_t NoisyCircuit::count_sites(Channel channel) const {
  std::size_t n = 0;
  for (const auto& s : sites_) n += s.channel == channel ? 1 : 0;
  return n;
}

std::size_t NoisyCircuit::count_nonzero_sites() const {
  std::size_t n = 0;
  for (const auto& s : sites_) n += s.probability > 0.0 ? 1 : 0;
  return n;
}

std::size_t NoisyCircuit::count_reset_sites_on(std::uint32_t qubit) const {
  std::size_t n = 0;
  for (const auto& s : sites_) n += (s.channel == Channel::RESET_WITH_PROB && s.q0 == qubit) ? 1 : 0;
  return n;
}

std::vector<double> radiation_reset_probabilities(const RadiationFaultConfig& fault, const arch::ArchitectureGraph& arch,
                                                  int bin) {
  fault.validate();
  if (fault.root_qubit >= arch.num_nodes()) {
    throw std::invalid_argument("root qubit " + std::to_string(fault.root_qubit) + " is not a node of " + arch.name());
  }
  std::vector<double> probs(arch.num_nodes());
  for (std::uint32_t v = 0; v < arch.num_nodes(); ++v) {
    probs[v] = fault_intensity(bin, arch.distance(fault.root_qubit, v), fault);
  }
  return probs;
}

std::vector<double> erasure_reset_probabilities(std::span<const std::uint32_t> erased, std::uint32_t num_nodes) {
  std::vector<double> probs(num_nodes, 0.0);
  for (auto v : erased) {
    if (v >= num_nodes) throw std::invalid_argument("erased node outside the architecture graph");
    probs[v] = 1.0;
  }
  return probs;
}

NoisyCircuit instrument_circuit(const sim::Circuit& circuit, const IntrinsicNoiseConfig& intrinsic,
                                std::span<const double> reset_by_physical, std::span<const std::uint32_t> layout) {
  intrinsic.validate();
  if (layout.size() < circuit.num_qubits()) {
    throw std::invalid_argument("layout covers " + std::to_string(layout.size()) + " of " +
                                std::to_string(circuit.num_qubits()) + " circuit qubits");
  }
  auto reset_prob = [&](std::uint32_t q) {
    const std::uint32_t phys = layout[q];
    if (reset_by_physical.empty()) return 0.0;
    if (phys >= reset_by_physical.size()) throw std::invalid_argument("layout maps outside the architecture graph");
    return reset_by_physical[phys];
  };
  const bool with_resets = !reset_by_physical.empty();
  const double p = intrinsic.physical_error_rate;
  std::vector<ErrorSite> sites;
  sites.reserve(circuit.size() * 3);
  for (std::size_t pos = 0; pos < circuit.size(); ++pos) {
    const sim::Gate& g = circuit.gates()[pos];
    if (sim::is_unitary(g.kind)) {
      if (g.num_operands() == 2) {
        sites.push_back({pos, Channel::DEPOLARIZE_2, g.q0, g.q1, p});
      } else {
        sites.push_back({pos, Channel::DEPOLARIZE_1, g.q0, 0, p});
      }
    }
    if (with_resets) {
      sites.push_back({pos, Channel::RESET_WITH_PROB, g.q0, 0, reset_prob(g.q0)});
      if (g.num_operands() == 2) sites.push_back({pos, Channel::RESET_WITH_PROB, g.q1, 0, reset_prob(g.q1)});
    }
  }
  return NoisyCircuit(circuit, std::move(sites));
}

NoisyCircuit instrument_circuit(const sim::Circuit& circuit, const IntrinsicNoiseConfig& intrinsic,
                                const std::optional<RadiationFaultConfig>& fault,
                                std::span<const std::uint32_t> layout, const arch::ArchitectureGraph& arch, int bin) {
  if (!fault) return instrument_circuit(circuit, intrinsic, std::span<const double>{}, layout);
  for (std::uint32_t q = 0; q < circuit.num_qubits(); ++q) {
    if (q >= layout.size() || layout[q] >= arch.num_nodes()) {
      throw std::invalid_argument("layout does not place every circuit qubit on the architecture graph");
    }
  }
  const auto probs = radiation_reset_probabilities(*fault, arch, bin);
  return instrument_circuit(circuit, intrinsic, probs, layout);
}

std::vector<std::uint32_t> identity_layout(std::uint32_t num_qubits) {
  std::vector<std::uint32_t> layout(num_qubits);
  std::iota(layout.begin(), layout.end(), 0u);
  return layout;
}

}  // namespace qrad::noise
