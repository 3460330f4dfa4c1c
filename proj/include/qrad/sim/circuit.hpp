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

#ifndef QRAD_SIM_CIRCUIT_HPP_
#define QRAD_SIM_CIRCUIT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qrad::sim {

enum class GateKind : std::uint8_t { H, X, Y, Z, S, CNOT, SWAP, MEASURE_Z, RESET };

/// Number of qubit operands taken by a gate kind.
int arity(GateKind kind);

/// True for the Clifford unitaries; false for MEASURE_Z and RESET.
bool is_unitary(GateKind kind);

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_name(std::string_view name);

struct Gate {
  GateKind kind = GateKind::H;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;  // second operand (CNOT target, SWAP partner); unused otherwise
  std::optional<std::uint32_t> slot;  // classical slot, MEASURE_Z only

  static Gate single(GateKind kind, std::uint32_t q);
  static Gate cnot(std::uint32_t control, std::uint32_t target);
  static Gate swap(std::uint32_t a, std::uint32_t b);
  static Gate measure(std::uint32_t q, std::uint32_t slot);
  static Gate reset(std::uint32_t q);

  int num_operands() const { return arity(kind); }
  bool touches(std::uint32_t q) const { return q0 == q || (num_operands() == 2 && q1 == q); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over a fixed qubit register and classical record.
class Circuit {
 public:
  Circuit() = default;
  Circuit(std::uint32_t num_qubits, std::uint32_t num_slots) : num_qubits_(num_qubits), num_slots_(num_slots) {}

  std::uint32_t num_qubits() const { return num_qubits_; }
  std::uint32_t num_slots() const { return num_slots_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Appends a gate after checking operands and slot against the register sizes.
  void append(const Gate& gate);

  void h(std::uint32_t q) { append(Gate::single(GateKind::H, q)); }
  void x(std::uint32_t q) { append(Gate::single(GateKind::X, q)); }
  void y(std::uint32_t q) { append(Gate::single(GateKind::Y, q)); }
  void z(std::uint32_t q) { append(Gate::single(GateKind::Z, q)); }
  void s(std::uint32_t q) { append(Gate::single(GateKind::S, q)); }
  void cnot(std::uint32_t c, std::uint32_t t) { append(Gate::cnot(c, t)); }
  void swap(std::uint32_t a, std::uint32_t b) { append(Gate::swap(a, b)); }
  void measure(std::uint32_t q, std::uint32_t slot) { append(Gate::measure(q, slot)); }
  void reset(std::uint32_t q) { append(Gate::reset(q)); }

  /// Full structural check, including that no slot is written twice.
  void validate() const;

  /// One gate per line: `KIND q[,q2][->slot]`.
  std::string dump() const;
  static Circuit parse_dump(std::string_view text, std::uint32_t num_qubits, std::uint32_t num_slots);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::uint32_t num_qubits_ = 0;
  std::uint32_t num_slots_ = 0;
  std::vector<Gate> gates_;
};

std::string format_gate(const Gate& gate);

}  // namespace qrad::sim

#endif  // QRAD_SIM_CIRCUIT_HPP_
