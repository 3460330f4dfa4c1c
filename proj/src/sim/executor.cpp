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

#include "qrad/sim/executor.hpp"

namespace qrad::sim {

Record run_shot(const Circuit& circuit, RandomStream& rng) {
  Record record(circuit.num_slots(), 0);
  if (circuit.num_qubits() == 0) return record;
  Tableau tableau(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) {
    if (auto bit = tableau.apply(g, rng); bit && g.slot) record[*g.slot] = *bit ? 1 : 0;
  }
  return record;
}

namespace {

void branch(const Circuit& circuit, std::size_t pos, Tableau tableau, Record record, double weight,
            std::map<Record, double>& out) {
  const auto& gates = circuit.gates();
  RandomStream unused(0);  // never drawn from: random branches are forked explicitly
  for (; pos < gates.size(); ++pos) {
    const Gate& g = gates[pos];
    if (g.kind == GateKind::MEASURE_Z || g.kind == GateKind::RESET) {
      if (!tableau.is_deterministic(g.q0)) {
        for (bool outcome : {false, true}) {
          Tableau forked = tableau;
          Record rec = record;
          forked.measure_z(g.q0, outcome);
          if (g.kind == GateKind::RESET) {
            if (outcome) forked.x(g.q0);
          } else {
            rec[*g.slot] = outcome ? 1 : 0;
          }
          branch(circuit, pos + 1, std::move(forked), std::move(rec), weight / 2, out);
        }
        return;
      }
      const bool outcome = tableau.measure_z(g.q0, false);
      if (g.kind == GateKind::RESET) {
        if (outcome) tableau.x(g.q0);
      } else {
        record[*g.slot] = outcome ? 1 : 0;
      }
      continue;
    }
    tableau.apply(g, unused);
  }
  out[record] += weight;
}

}  // namespace

std::map<Record, double> exact_record_distribution(const Circuit& circuit) {
  std::map<Record, double> out;
  Record record(circuit.num_slots(), 0);
  if (circuit.num_qubits() == 0) {
    out[record] = 1.0;
    return out;
  }
  branch(circuit, 0, Tableau(circuit.num_qubits()), record, 1.0, out);
  return out;
}

}  // namespace qrad::sim
