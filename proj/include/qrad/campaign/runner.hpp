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

#ifndef QRAD_CAMPAIGN_RUNNER_HPP_
#define QRAD_CAMPAIGN_RUNNER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qrad/arch/graph.hpp"
#include "qrad/arch/router.hpp"
#include "qrad/codes/surface_code.hpp"
#include "qrad/decode/decoder.hpp"
#include "qrad/noise/channels.hpp"
#include "qrad/noise/instrument.hpp"

namespace qrad::campaign {

inline constexpr const char* kEngineVersion = "qrad 0.1.0";

/// Code built, routed onto an architecture, with its decoder. Immutable after
/// construction and shared by every point that uses the same (code, architecture).
class PreparedCode {
 public:
  PreparedCode(const codes::CodeSpec& spec, const std::string& arch_spec, std::uint64_t routing_seed);
  PreparedCode(const PreparedCode&) = delete;
  PreparedCode& operator=(const PreparedCode&) = delete;

  const codes::SurfaceCode& code() const { return code_; }
  const arch::ArchitectureGraph& graph() const { return graph_; }
  const arch::RoutingResult& routing() const { return routing_; }
  const decode::Decoder& decoder() const { return decoder_; }
  const std::string& arch_spec() const { return arch_spec_; }

  /// Physical nodes touched by the routed circuit, ascending.
  const std::vector<std::uint32_t>& used_nodes() const { return used_nodes_; }
  /// Logical qubit initially placed on a physical node, if any.
  std::optional<std::uint32_t> logical_at(std::uint32_t node) const;

 private:
  codes::SurfaceCode code_;
  std::string arch_spec_;
  arch::ArchitectureGraph graph_;
  arch::RoutingResult routing_;
  decode::Decoder decoder_;
  std::vector<std::uint32_t> used_nodes_;
};

/// `mesh:5,C` with C = ceil(qubits / 5), the smallest five-row mesh that fits the code.
std::string default_arch_for(const codes::CodeSpec& spec);

enum class FaultKind { NONE, RADIATION, ERASURE };

/// One Monte-Carlo configuration. All physical indices refer to architecture nodes.
struct CampaignPoint {
  codes::CodeSpec code;
  std::string arch;
  FaultKind fault = FaultKind::NONE;
  std::uint32_t root = 0;                // RADIATION
  std::vector<std::uint32_t> erasure;    // ERASURE, ascending
  double phys_error_rate = 0.01;
  double peak = 1.0;                     // RADIATION
  int time_bin = 0;                      // RADIATION
  int time_samples = 10;
  double gamma = 10.0;
  std::size_t shots = 2000;
  std::uint64_t seed = 0;                // derived, see assign_seed

  /// Stable textual encoding of every field except the seed.
  std::string canonical() const;
  void assign_seed(std::uint64_t master_seed);
};

struct CampaignResult {
  CampaignPoint point;
  decode::RateEstimate estimate;
  std::string engine_version = kEngineVersion;
  double wall_seconds = 0.0;
};

/// Logical failures among shots [first, first + count); shot i draws from
/// RandomStream(derive_seed(seed, i)), so the split across threads never matters.
std::size_t count_logical_errors_serial(const noise::NoisyCircuit& circuit, const decode::Decoder& decoder,
                                        std::uint64_t seed, std::size_t first, std::size_t count);
std::size_t count_logical_errors_openmp(const noise::NoisyCircuit& circuit, const decode::Decoder& decoder,
                                        std::uint64_t seed, std::size_t first, std::size_t count, int threads);

/// Reset probability per physical node for the point's fault.
std::vector<double> reset_profile(const CampaignPoint& point, const arch::ArchitectureGraph& graph);

noise::NoisyCircuit instrument_point(const CampaignPoint& point, const PreparedCode& prepared);

struct RunOptions {
  int threads = 0;       // 0: OpenMP default
  bool serial = false;   // use the serial reference loop
};

CampaignResult run_point(const CampaignPoint& point, const PreparedCode& prepared, const RunOptions& options = {});

/// Thread-safe cache of prepared codes keyed by (code, architecture).
class PreparedCache {
 public:
  explicit PreparedCache(std::uint64_t master_seed) : master_seed_(master_seed) {}
  std::shared_ptr<const PreparedCode> get(const codes::CodeSpec& spec, const std::string& arch_spec);

 private:
  std::uint64_t master_seed_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const PreparedCode>> cache_;
};

}  // namespace qrad::campaign

#endif  // QRAD_CAMPAIGN_RUNNER_HPP_
