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


#include "state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace qrad::testing {

using cd = std::complex<double>;

StateVector::StateVector(std::uint32_t num_qubits) : n_(num_qubits), amp_(std::size_t{1} << num_qubits) {
  amp_[0] = 1.0;
}

void StateVector::apply_unitary(const sim::Gate& g) {
  const std::size_t dim = amp_.size();
  const std::size_t b0 = std::size_t{1} << g.q0;
  const std::size_t b1 = std::size_t{1} << g.q1;
  const double r = 1.0 / std::sqrt(2.0);
  const cd i{0.0, 1.0};
  switch (g.kind) {
    case sim::GateKind::H:
      for (std::size_t k = 0; k < dim; ++k) {
        if (k & b0) continue;
        const cd a = amp_[k], b = amp_[k | b0];
        amp_[k] = r * (a + b);
        amp_[k | b0] = r * (a - b);
      }
      break;
    case sim::GateKind::X:
      for (std::size_t k = 0; k < dim; ++k)
        if (!(k & b0)) std::swap(amp_[k], amp_[k | b0]);
      break;
    case sim::GateKind::Y:
      // Y|0> = i|1>, Y|1> = -i|0>
      for (std::size_t k = 0; k < dim; ++k) {
        if (k & b0) continue;
        const cd a = amp_[k], b = amp_[k | b0];
        amp_[k] = -i * b;
        amp_[k | b0] = i * a;
      }
      break;
    case sim::GateKind::Z:
      for (std::size_t k = 0; k < dim; ++k)
        if (k & b0) amp_[k] = -amp_[k];
      break;
    case sim::GateKind::S:
      for (std::size_t k = 0; k < dim; ++k)
        if (k & b0) amp_[k] *= i;
      break;
    case sim::GateKind::CNOT:
      for (std::size_t k = 0; k < dim; ++k)
        if ((k & b0) && !(k & b1)) std::swap(amp_[k], amp_[k | b1]);
      break;
    case sim::GateKind::SWAP:
      for (std::size_t k = 0; k < dim; ++k)
        if ((k & b0) && !(k & b1)) std::swap(amp_[k], amp_[(k & ~b0) | b1]);
      break;
    default:
      throw std::invalid_argument("not a unitary gate");
  }
}

double StateVector::probability_one(std::uint32_t q) const {
  double p = 0.0;
  for (std::size_t k = 0; k < amp_.size(); ++k)
    if ((k >> q) & 1) p += std::norm(amp_[k]);
  return p;
}

void StateVector::collapse(std::uint32_t q, bool outcome) {
  double keep = 0.0;
  for (std::size_t k = 0; k < amp_.size(); ++k) {
    if (((k >> q) & 1) != static_cast<std::size_t>(outcome)) amp_[k] = 0.0;
    else keep += std::norm(amp_[k]);
  }
  const double scale = 1.0 / std::sqrt(keep);
  for (auto& a : amp_) a *= scale;
}

namespace {

constexpr double kPrune = 1e-12;

void branch(const sim::Circuit& c, std::size_t pos, StateVector state, sim::Record record, double weight,
            std::map<sim::Record, double>& out) {
  const auto& gates = c.gates();
  for (; pos < gates.size(); ++pos) {
    const auto& g = gates[pos];
    if (g.kind != sim::GateKind::MEASURE_Z && g.kind != sim::GateKind::RESET) {
      state.apply_unitary(g);
      continue;
    }
    const double p1 = state.probability_one(g.q0);
    for (int outcome = 0; outcome < 2; ++outcome) {
      const double p = outcome ? p1 : 1.0 - p1;
      if (p < kPrune) continue;
      StateVector next = state;
      next.collapse(g.q0, outcome != 0);
      sim::Record rec = record;
      if (g.kind == sim::GateKind::MEASURE_Z) {
        rec[*g.slot] = static_cast<std::uint8_t>(outcome);
      } else if (outcome) {
        next.apply_unitary(sim::Gate::single(sim::GateKind::X, g.q0));
      }
      branch(c, pos + 1, std::move(next), std::move(rec), weight * p, out);
    }
    return;
  }
  out[record] += weight;
}

}  // namespace

std::map<sim::Record, double> state_vector_distribution(const sim::Circuit& circuit) {
  if (circuit.num_qubits() > 16) throw std::invalid_argument("state vector oracle limited to 16 qubits");
  std::map<sim::Record, double> out;
  branch(circuit, 0, StateVector(circuit.num_qubits()), sim::Record(circuit.num_slots(), 0), 1.0, out);
  return out;
}

double total_variation(const std::map<sim::Record, double>& a, const std::map<sim::Record, double>& b) {
  double sum = 0.0;
  for (const auto& [rec, p] : a) {
    const auto it = b.find(rec);
    sum += std::abs(p - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [rec, q] : b)
    if (!a.count(rec)) sum += q;
  return sum / 2.0;
}

}  // namespace qrad::testing
