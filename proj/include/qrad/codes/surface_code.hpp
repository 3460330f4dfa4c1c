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

#ifndef QRAD_CODES_SURFACE_CODE_HPP_
#define QRAD_CODES_SURFACE_CODE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qrad/sim/circuit.hpp"

namespace qrad::codes {

enum class CodeClass : std::uint8_t { REPETITION, XXZZ };
enum class QubitRole : std::uint8_t { DATA, STABILIZER_Z, STABILIZER_X, ANCILLA };

/// Pauli type of a stabilizer, and the basis a parity is read out in.
enum class Basis : std::uint8_t { Z, X };

struct Stabilizer {
  Basis type = Basis::Z;
  std::uint32_t qubit = 0;
  std::vector<std::uint32_t> data;  // clockwise from the top-left vertex
};

struct SyndromeSlot {
  std::uint32_t stabilizer = 0;
  int round = 0;
};

struct DataSite {
  int row = 0;
  int col = 0;
};

/// Class and distance, e.g. `rep:5,1` or `xxzz:3,3`.
struct CodeSpec {
  CodeClass code_class = CodeClass::REPETITION;
  int d_z = 3;
  int d_x = 1;

  std::string to_string() const;
  static CodeSpec parse(std::string_view text);
  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// A built code: circuit plus everything the decoder needs to interpret its record.
///
/// Qubits are numbered data first (row-major over the d_z x d_x mesh), then Z
/// stabilizers, then X stabilizers, then the readout ancilla. The circuit prepares
/// logical |0>, runs a syndrome round, applies a transversal logical X, runs a second
/// round, and reads the all-data parity into the ancilla. Every data qubit is then
/// measured directly; those bits close the last round of detectors but do not feed the
/// logical readout. The expected decoded bit is 1.
struct SurfaceCode {
  CodeSpec spec;
  sim::Circuit circuit;
  std::vector<QubitRole> roles;
  int rounds = 2;
  int rows = 0;  // data mesh rows (= d_z)
  int cols = 0;  // data mesh columns (= d_x)
  std::vector<DataSite> data_sites;
  std::vector<Stabilizer> stabilizers;        // Z stabilizers first
  std::vector<SyndromeSlot> syndrome_layout;  // indexed by classical slot
  std::vector<std::uint32_t> readout_slots;  // ancilla parity readout
  std::vector<std::uint32_t> data_slots;     // final data measurements, by data index
  std::uint32_t ancilla = 0;
  /// Basis the data is encoded in; stabilizers of this type start deterministic.
  Basis prepared_basis = Basis::Z;
  /// Stabilizer type whose errors flip the raw readout; the logical is decoded from it.
  Basis logical_basis = Basis::Z;

  std::uint32_t num_qubits() const { return circuit.num_qubits(); }
  std::uint32_t num_data() const { return static_cast<std::uint32_t>(data_sites.size()); }
  std::uint32_t count_role(QubitRole role) const;
  std::uint32_t count_stabilizers(Basis type) const;
  std::uint32_t readout_slot() const { return readout_slots.front(); }
  std::uint32_t slot_of(std::uint32_t stabilizer, int round) const {
    return static_cast<std::uint32_t>(round) * static_cast<std::uint32_t>(stabilizers.size()) + stabilizer;
  }
  /// Position in the circuit right after the first syndrome round's measurements.
  std::size_t first_round_end = 0;
  /// Position of the first gate of the second syndrome round.
  std::size_t second_round_begin = 0;
};

/// Repetition code: exactly one of d_z, d_x is 1, the other odd >= 3.
/// (n,1) protects against bit flips (Z-basis GHZ), (1,n) against phase flips.
SurfaceCode build_repetition(int d_z, int d_x);

/// Rotated XXZZ code on a d_z x d_x data mesh; both odd, not both 1.
SurfaceCode build_xxzz(int d_z, int d_x);

SurfaceCode build_code(const CodeSpec& spec);

struct CorrectableWeights {
  int bit_flip = 0;
  int phase_flip = 0;
};

/// floor((d-1)/2) per protected basis.
CorrectableWeights correctable_weights(const SurfaceCode& code);

/// floor((n-1)/2) with n = max(d_z, d_x) for repetition codes; the smaller of the two
/// per-basis weights for XXZZ.
int correctable_weight(const SurfaceCode& code);

std::string_view role_name(QubitRole role);
std::string_view class_name(CodeClass code_class);

}  // namespace qrad::codes

#endif  // QRAD_CODES_SURFACE_CODE_HPP_
