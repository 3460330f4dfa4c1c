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

#ifndef QRAD_SIM_TABLEAU_HPP_
#define QRAD_SIM_TABLEAU_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrad/sim/circuit.hpp"
#include "qrad/sim/random.hpp"

namespace qrad::sim {

/// Destabilizer/stabilizer tableau of an n-qubit stabilizer state.
///
/// Rows 0..n-1 are destabilizers, rows n..2n-1 stabilizers, row 2n is scratch space
/// for deterministic measurements. Each row stores its X and Z bits packed into
/// 64-bit words so that row products run word-parallel.
class Tableau {
 public:
  explicit Tableau(std::uint32_t num_qubits);

  std::uint32_t num_qubits() const { return n_; }

  void h(std::uint32_t q);
  void s(std::uint32_t q);
  void x(std::uint32_t q);
  void y(std::uint32_t q);
  void z(std::uint32_t q);
  void cnot(std::uint32_t control, std::uint32_t target);
  void swap(std::uint32_t a, std::uint32_t b);

  /// True when Z_q (up to sign) lies in the stabilizer group.
  bool is_deterministic(std::uint32_t q) const;

  /// Measures Z_q. When the outcome is random, `random_outcome` is used as the result.
  bool measure_z(std::uint32_t q, bool random_outcome);
  bool measure_z(std::uint32_t q, RandomStream& rng);

  /// Measure then flip back to |0>.
  void reset(std::uint32_t q, RandomStream& rng);
  void reset(std::uint32_t q, bool random_outcome);

  /// Applies one gate. MEASURE_Z returns the sampled bit.
  std::optional<bool> apply(const Gate& gate, RandomStream& rng);

  bool x_bit(std::uint32_t row, std::uint32_t q) const { return (xs_[word(row, q)] >> (q & 63)) & 1; }
  bool z_bit(std::uint32_t row, std::uint32_t q) const { return (zs_[word(row, q)] >> (q & 63)) & 1; }
  bool sign(std::uint32_t row) const { return signs_[row] != 0; }
  void flip_x_bit(std::uint32_t row, std::uint32_t q) { xs_[word(row, q)] ^= bit(q); }
  void flip_z_bit(std::uint32_t row, std::uint32_t q) { zs_[word(row, q)] ^= bit(q); }

  /// Pauli string of a row, e.g. "-XZI".
  std::string row_string(std::uint32_t row) const;

  /// Stabilizer generators in reduced row-echelon form, as signed Pauli strings.
  /// Two tableaux describe the same state iff these lists are equal.
  std::vector<std::string> canonical_stabilizers() const;

  /// Checks the symplectic structure: stabilizers pairwise commute, destabilizer i
  /// anticommutes with stabilizer i only.
  bool verify() const;

 private:
  std::size_t word(std::uint32_t row, std::uint32_t q) const { return row * words_ + (q >> 6); }
  static std::uint64_t bit(std::uint32_t q) { return std::uint64_t{1} << (q & 63); }
  bool rows_anticommute(std::uint32_t a, std::uint32_t b) const;
  /// row[target] *= row[source], tracking the sign.
  void rowmul(std::uint32_t target, std::uint32_t source);
  void check_qubit(std::uint32_t q) const;

  std::uint32_t n_;
  std::uint32_t words_;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
  std::vector<std::uint8_t> signs_;
};

inline bool verify_tableau(const Tableau& t) { return t.verify(); }

}  // namespace qrad::sim

#endif  // QRAD_SIM_TABLEAU_HPP_
