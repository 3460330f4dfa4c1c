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

#include "qrad/sim/circuit.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qrad::sim {

namespace {

constexpr std::array<std::string_view, 9> kNames = {"H", "X", "Y", "Z", "S", "CNOT", "SWAP", "MEASURE_Z", "RESET"};

std::uint32_t parse_index(std::string_view text, std::size_t line_no) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("circuit dump line " + std::to_string(line_no) + ": bad index '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

int arity(GateKind kind) { return (kind == GateKind::CNOT || kind == GateKind::SWAP) ? 2 : 1; }

bool is_unitary(GateKind kind) { return kind != GateKind::MEASURE_Z && kind != GateKind::RESET; }

std::string_view gate_name(GateKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> parse_gate_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

Gate Gate::single(GateKind kind, std::uint32_t q) {
  if (arity(kind) != 1 || kind == GateKind::MEASURE_Z) {
    throw std::invalid_argument("Gate::single: " + std::string(gate_name(kind)) + " is not a plain one-qubit gate");
  }
  return Gate{kind, q, 0, std::nullopt};
}

Gate Gate::cnot(std::uint32_t control, std::uint32_t target) {
  if (control == target) throw std::invalid_argument("CNOT operands must differ");
  return Gate{GateKind::CNOT, control, target, std::nullopt};
}

Gate Gate::swap(std::uint32_t a, std::uint32_t b) {
  if (a == b) throw std::invalid_argument("SWAP operands must differ");
  return Gate{GateKind::SWAP, a, b, std::nullopt};
}

Gate Gate::measure(std::uint32_t q, std::uint32_t slot) { return Gate{GateKind::MEASURE_Z, q, 0, slot}; }

Gate Gate::reset(std::uint32_t q) { return Gate{GateKind::RESET, q, 0, std::nullopt}; }

void Circuit::append(const Gate& gate) {
  if (gate.q0 >= num_qubits_ || (gate.num_operands() == 2 && gate.q1 >= num_qubits_)) {
    throw std::out_of_range("gate " + format_gate(gate) + " has an operand outside a " +
                            std::to_string(num_qubits_) + "-qubit register");
  }
  if (gate.num_operands() == 2 && gate.q0 == gate.q1) {
    throw std::invalid_argument("two-qubit gate with repeated operand: " + format_gate(gate));
  }
  if ((gate.kind == GateKind::MEASURE_Z) != gate.slot.has_value()) {
    throw std::invalid_argument("classical slot must be present exactly on MEASURE_Z");
  }
  if (gate.slot && *gate.slot >= num_slots_) {
    throw std::out_of_range("gate " + format_gate(gate) + " writes past " + std::to_string(num_slots_) + " slots");
  }
  gates_.push_back(gate);
}

void Circuit::validate() const {
  std::vector<bool> written(num_slots_, false);
  for (const Gate& g : gates_) {
    if (g.q0 >= num_qubits_ || (g.num_operands() == 2 && g.q1 >= num_qubits_)) {
      throw std::out_of_range("operand out of range in " + format_gate(g));
    }
    if ((g.kind == GateKind::MEASURE_Z) != g.slot.has_value()) {
      throw std::invalid_argument("slot annotation mismatch in " + format_gate(g));
    }
    if (g.slot) {
      if (*g.slot >= num_slots_) throw std::out_of_range("slot out of range in " + format_gate(g));
      if (written[*g.slot]) throw std::invalid_argument("slot " + std::to_string(*g.slot) + " written twice");
      written[*g.slot] = true;
    }
  }
}

std::string format_gate(const Gate& gate) {
  std::string out(gate_name(gate.kind));
  out += ' ';
  out += std::to_string(gate.q0);
  if (gate.num_operands() == 2) {
    out += ',';
    out += std::to_string(gate.q1);
  }
  if (gate.slot) {
    out += "->";
    out += std::to_string(*gate.slot);
  }
  return out;
}

std::string Circuit::dump() const {
  std::string out;
  for (const Gate& g : gates_) {
    out += format_gate(g);
    out += '\n';
  }
  return out;
}

Circuit Circuit::parse_dump(std::string_view text, std::uint32_t num_qubits, std::uint32_t num_slots) {
  Circuit circuit(num_qubits, num_slots);
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    auto space = line.find(' ');
    if (space == std::string_view::npos) {
      throw std::invalid_argument("circuit dump line " + std::to_string(line_no) + ": missing operands");
    }
    auto kind = parse_gate_name(line.substr(0, space));
    if (!kind) {
      throw std::invalid_argument("circuit dump line " + std::to_string(line_no) + ": unknown gate '" +
                                  std::string(line.substr(0, space)) + "'");
    }
    std::string_view rest = line.substr(space + 1);
    std::optional<std::uint32_t> slot;
    if (auto arrow = rest.find("->"); arrow != std::string_view::npos) {
      slot = parse_index(rest.substr(arrow + 2), line_no);
      rest = rest.substr(0, arrow);
    }
    Gate g{*kind, 0, 0, slot};
    if (auto comma = rest.find(','); comma != std::string_view::npos) {
      g.q0 = parse_index(rest.substr(0, comma), line_no);
      g.q1 = parse_index(rest.substr(comma + 1), line_no);
    } else {
      g.q0 = parse_index(rest, line_no);
    }
    if ((arity(g.kind) == 2) != (rest.find(',') != std::string_view::npos)) {
      throw std::invalid_argument("circuit dump line " + std::to_string(line_no) + ": wrong operand count");
    }
    circuit.append(g);
  }
  return circuit;
}

}  // namespace qrad::sim
