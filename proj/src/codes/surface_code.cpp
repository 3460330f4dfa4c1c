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

#include "qrad/codes/surface_code.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <stdexcept>

namespace qrad::codes {
namespace {

bool is_odd_positive(int d) { return d >= 1 && d % 2 == 1; }

void check_distance(int d, const char* which) {
  if (d < 1 || d > 99) throw std::invalid_argument(std::string(which) + " must be in [1, 99]");
  if (d % 2 == 0) throw std::invalid_argument(std::string(which) + ": distance must be odd");
}

struct Plaquette {
  Basis type;
  std::vector<std::uint32_t> data;
};

// Rotated lattice over an R x C data mesh. Plaquette corners (i, j) sit between data
// rows i-1, i and columns j-1, j. Interior corners always host a plaquette; corners on
// the top/bottom edges only when X-type, on the left/right edges only when Z-type.
std::vector<Plaquette> rotated_plaquettes(int rows, int cols) {
  std::vector<Plaquette> out;
  auto data_at = [&](int r, int c) -> std::optional<std::uint32_t> {
    if (r < 0 || r >= rows || c < 0 || c >= cols) return std::nullopt;
    return static_cast<std::uint32_t>(r * cols + c);
  };
  for (int i = 0; i <= rows; ++i) {
    for (int j = 0; j <= cols; ++j) {
      const Basis type = (i + j) % 2 == 0 ? Basis::X : Basis::Z;
      const bool row_edge = i == 0 || i == rows;
      const bool col_edge = j == 0 || j == cols;
      if (row_edge && col_edge) continue;
      if (row_edge && type != Basis::X) continue;
      if (col_edge && type != Basis::Z) continue;
      Plaquette p{type, {}};
      for (auto q : {data_at(i - 1, j - 1), data_at(i - 1, j), data_at(i, j), data_at(i, j - 1)}) {
        if (q) p.data.push_back(*q);
      }
      if (p.data.size() >= 2) out.push_back(std::move(p));
    }
  }
  return out;
}

void append_round(SurfaceCode& code, int round) {
  auto& c = code.circuit;
  for (const auto& stab : code.stabilizers) c.reset(stab.qubit);
  // X plaquettes first: bit flips their CNOTs leave on the data are still seen by the
  // Z plaquettes of the same round, which guard the Z-basis readout.
  for (const auto& stab : code.stabilizers) {
    if (stab.type != Basis::X) continue;
    c.h(stab.qubit);
    for (auto d : stab.data) c.cnot(stab.qubit, d);
    c.h(stab.qubit);
  }
  for (const auto& stab : code.stabilizers) {
    if (stab.type != Basis::Z) continue;
    for (auto d : stab.data) c.cnot(d, stab.qubit);
  }
  for (std::uint32_t s = 0; s < code.stabilizers.size(); ++s) {
    c.measure(code.stabilizers[s].qubit, code.slot_of(s, round));
  }
}

// Shared assembly once the lattice and basis are fixed.
SurfaceCode assemble(CodeSpec spec, int rows, int cols, Basis prepared) {
  SurfaceCode code;
  code.spec = spec;
  code.rows = rows;
  code.cols = cols;
  code.prepared_basis = prepared;
  code.logical_basis = prepared;

  const auto n_data = static_cast<std::uint32_t>(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) code.data_sites.push_back({r, c});
  }

  auto plaquettes = rotated_plaquettes(rows, cols);
  std::stable_partition(plaquettes.begin(), plaquettes.end(), [](const Plaquette& p) { return p.type == Basis::Z; });

  std::uint32_t next = n_data;
  for (auto& p : plaquettes) code.stabilizers.push_back({p.type, next++, std::move(p.data)});
  code.ancilla = next++;
  const auto num_stabs = static_cast<std::uint32_t>(code.stabilizers.size());

  code.roles.assign(next, QubitRole::DATA);
  for (const auto& s : code.stabilizers) {
    code.roles[s.qubit] = s.type == Basis::Z ? QubitRole::STABILIZER_Z : QubitRole::STABILIZER_X;
  }
  code.roles[code.ancilla] = QubitRole::ANCILLA;

  const std::uint32_t num_slots = num_stabs * static_cast<std::uint32_t>(code.rounds) + 1 + n_data;
  code.circuit = sim::Circuit(next, num_slots);
  for (int r = 0; r < code.rounds; ++r) {
    for (std::uint32_t s = 0; s < num_stabs; ++s) code.syndrome_layout.push_back({s, r});
  }
  code.readout_slots = {num_stabs * static_cast<std::uint32_t>(code.rounds)};
  for (std::uint32_t d = 0; d < n_data; ++d) code.data_slots.push_back(code.readout_slots[0] + 1 + d);

  auto& c = code.circuit;
  if (prepared == Basis::X) {
    for (std::uint32_t d = 0; d < n_data; ++d) c.h(d);
  }
  append_round(code, 0);
  code.first_round_end = c.size();
  for (std::uint32_t d = 0; d < n_data; ++d) {
    if (prepared == Basis::X) {
      c.z(d);
    } else {
      c.x(d);
    }
  }
  code.second_round_begin = c.size();
  append_round(code, 1);

  if (prepared == Basis::X) {
    c.h(code.ancilla);
    for (std::uint32_t d = 0; d < n_data; ++d) c.cnot(code.ancilla, d);
    c.h(code.ancilla);
  } else {
    for (std::uint32_t d = 0; d < n_data; ++d) c.cnot(d, code.ancilla);
  }
  c.measure(code.ancilla, code.readout_slot());
  for (std::uint32_t d = 0; d < n_data; ++d) {
    if (prepared == Basis::X) c.h(d);
    c.measure(d, code.data_slots[d]);
  }
  c.validate();
  return code;
}

}  // namespace

std::uint32_t SurfaceCode::count_role(QubitRole role) const {
  return static_cast<std::uint32_t>(std::count(roles.begin(), roles.end(), role));
}

std::uint32_t SurfaceCode::count_stabilizers(Basis type) const {
  return static_cast<std::uint32_t>(
      std::count_if(stabilizers.begin(), stabilizers.end(), [&](const Stabilizer& s) { return s.type == type; }));
}

SurfaceCode build_repetition(int d_z, int d_x) {
  check_distance(d_z, "d_z");
  check_distance(d_x, "d_x");
  if ((d_z == 1) == (d_x == 1)) {
    throw std::invalid_argument("repetition code needs exactly one of d_z, d_x equal to 1");
  }
  const Basis prepared = d_x == 1 ? Basis::Z : Basis::X;
  return assemble({CodeClass::REPETITION, d_z, d_x}, d_z, d_x, prepared);
}

SurfaceCode build_xxzz(int d_z, int d_x) {
  check_distance(d_z, "d_z");
  check_distance(d_x, "d_x");
  if (d_z == 1 && d_x == 1) throw std::invalid_argument("xxzz code needs (d_z, d_x) != (1, 1)");
  // A single row carries only X plaquettes, so the Z-basis readout of (1,n) is unprotected.
  return assemble({CodeClass::XXZZ, d_z, d_x}, d_z, d_x, Basis::Z);
}

SurfaceCode build_code(const CodeSpec& spec) {
  return spec.code_class == CodeClass::REPETITION ? build_repetition(spec.d_z, spec.d_x)
                                                  : build_xxzz(spec.d_z, spec.d_x);
}

CorrectableWeights correctable_weights(const SurfaceCode& code) {
  const int dz = code.spec.d_z;
  const int dx = code.spec.d_x;
  if (code.spec.code_class == CodeClass::REPETITION) {
    const int n = std::max(dz, dx);
    return dx == 1 ? CorrectableWeights{(n - 1) / 2, 0} : CorrectableWeights{0, (n - 1) / 2};
  }
  return {(dz - 1) / 2, (dx - 1) / 2};
}

int correctable_weight(const SurfaceCode& code) {
  const auto w = correctable_weights(code);
  if (code.spec.code_class == CodeClass::REPETITION) return std::max(w.bit_flip, w.phase_flip);
  return std::min(w.bit_flip, w.phase_flip);
}

std::string_view role_name(QubitRole role) {
  switch (role) {
    case QubitRole::DATA: return "data";
    case QubitRole::STABILIZER_Z: return "stabilizer_z";
    case QubitRole::STABILIZER_X: return "stabilizer_x";
    case QubitRole::ANCILLA: return "ancilla";
  }
  return "?";
}

std::string_view class_name(CodeClass code_class) {
  return code_class == CodeClass::REPETITION ? "rep" : "xxzz";
}

std::string CodeSpec::to_string() const {
  return std::string(class_name(code_class)) + ":" + std::to_string(d_z) + "," + std::to_string(d_x);
}

CodeSpec CodeSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto comma = text.find(',', colon == std::string_view::npos ? 0 : colon);
  if (colon == std::string_view::npos || comma == std::string_view::npos) {
    throw std::invalid_argument("code spec must look like CLASS:dZ,dX, got '" + std::string(text) + "'");
  }
  CodeSpec spec;
  const auto cls = text.substr(0, colon);
  if (cls == "rep" || cls == "repetition") {
    spec.code_class = CodeClass::REPETITION;
  } else if (cls == "xxzz") {
    spec.code_class = CodeClass::XXZZ;
  } else {
    throw std::invalid_argument("unknown code class '" + std::string(cls) + "' (expected rep or xxzz)");
  }
  auto to_int = [&](std::string_view s, const char* field) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument(std::string(field) + ": not an integer: '" + std::string(s) + "'");
    }
    return v;
  };
  spec.d_z = to_int(text.substr(colon + 1, comma - colon - 1), "d_z");
  spec.d_x = to_int(text.substr(comma + 1), "d_x");
  if (!is_odd_positive(spec.d_z)) throw std::invalid_argument("d_z: distance must be odd");
  if (!is_odd_positive(spec.d_x)) throw std::invalid_argument("d_x: distance must be odd");
  return spec;
}

}  // namespace qrad::codes
