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

#ifndef QRAD_SIM_EXECUTOR_HPP_
#define QRAD_SIM_EXECUTOR_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "qrad/sim/circuit.hpp"
#include "qrad/sim/random.hpp"
#include "qrad/sim/tableau.hpp"

namespace qrad::sim {

using Record = std::vector<std::uint8_t>;

/// Runs the circuit once from |0...0> and returns the measurement record.
Record run_shot(const Circuit& circuit, RandomStream& rng);

/// Exact distribution of measurement records, obtained by branching the tableau on
/// every random measurement. Exponential in the number of random outcomes; meant for
/// small circuits in tests and routing checks.
std::map<Record, double> exact_record_distribution(const Circuit& circuit);

}  // namespace qrad::sim

#endif  // QRAD_SIM_EXECUTOR_HPP_
