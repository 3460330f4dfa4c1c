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


#ifndef QRAD_CLI_APP_HPP_
#define QRAD_CLI_APP_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qrad/campaign/sweeps.hpp"
#include "qrad/cli/config.hpp"
#include "qrad/sim/circuit.hpp"

namespace qrad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;

/// Points the config would run, in execution order. Shares the cache with the run so
/// routing happens once.
std::vector<campaign::SweepPlan> plan_runs(const RunConfig& config, campaign::PreparedCache& cache);

/// Architectures compared by the arch sweep when none are given: a line, the default
/// mesh, and every preset large enough for the code.
std::vector<std::string> default_archs_for(const codes::CodeSpec& code);

/// `PAULI@TARGET` with PAULI in x, y, z and TARGET one of dataN, stabN, ancilla or a
/// bare qubit index. The gate lands between the two syndrome rounds.
sim::Circuit inject_errors(const codes::SurfaceCode& code, const std::vector<std::string>& injections);

/// One shot of the code with the injected errors, printed as syndrome, matching and
/// decoded bit.
void decode_debug(const RunConfig& config, std::ostream& out);

/// Full command line entry point. Returns kExitOk, kExitConfig or kExitRuntime.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrad::cli

#endif  // QRAD_CLI_APP_HPP_
