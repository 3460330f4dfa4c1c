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

#include "qrad/campaign/runner.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "qrad/sim/random.hpp"

namespace qrad::campaign {
namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PreparedCode::PreparedCode(const codes::CodeSpec& spec, const std::string& arch_spec, std::uint64_t routing_seed)
    : code_(codes::build_code(spec)),
      arch_spec_(arch_spec),
      graph_(arch::build_graph(arch_spec)),
      routing_(arch::transpile(code_.circuit, graph_, routing_seed)),
      decoder_(code_) {
  std::set<std::uint32_t> used;
  for (const auto& g : routing_.circuit.gates()) {
    used.insert(g.q0);
    if (g.num_operands() == 2) used.insert(g.q1);
  }
  used_nodes_.assign(used.begin(), used.end());
}

std::optional<std::uint32_t> PreparedCode::logical_at(std::uint32_t node) const {
  const auto& init = routing_.layout.initial;
  const auto it = std::find(init.begin(), init.end(), node);
  if (it == init.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - init.begin());
}

std::string default_arch_for(const codes::CodeSpec& spec) {
  const int qubits = spec.code_class == codes::CodeClass::REPETITION ? 2 * std::max(spec.d_z, spec.d_x)
                                                                     : 2 * spec.d_z * spec.d_x;
  return "mesh:5," + std::to_string((qubits + 4) / 5);
}

std::string CampaignPoint::canonical() const {
  std::string s = "code=" + code.to_string() + "|arch=" + arch;
  switch (fault) {
    case FaultKind::NONE:
      s += "|fault=none";
      break;
    case FaultKind::RADIATION:
      s += "|fault=radiation|root=" + std::to_string(root) + "|peak=" + format_double(peak) +
           "|bin=" + std::to_string(time_bin) + "|ns=" + std::to_string(time_samples) +
           "|gamma=" + format_double(gamma);
      break;
    case FaultKind::ERASURE: {
      s += "|fault=erasure|set=";
      for (std::size_t i = 0; i < erasure.size(); ++i) s += (i ? ";" : "") + std::to_string(erasure[i]);
      break;
    }
  }
  s += "|p=" + format_double(phys_error_rate) + "|shots=" + std::to_string(shots);
  return s;
}

void CampaignPoint::assign_seed(std::uint64_t master_seed) { seed = stable_hash(master_seed, canonical()); }

std::size_t count_logical_errors_serial(const noise::NoisyCircuit& circuit, const decode::Decoder& decoder,
                                        std::uint64_t seed, std::size_t first, std::size_t count) {
  std::size_t errors = 0;
  for (std::size_t i = first; i < first + count; ++i) {
    RandomStream rng(derive_seed(seed, i));
    errors += decoder.decode_logical(circuit.run_shot(rng)) == 0 ? 1 : 0;
  }
  return errors;
}

std::size_t count_logical_errors_openmp(const noise::NoisyCircuit& circuit, const decode::Decoder& decoder,
                                        std::uint64_t seed, std::size_t first, std::size_t count, int threads) {
  const auto n = static_cast<std::int64_t>(count);
  std::int64_t errors = 0;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : errors) num_threads(nthreads)
  for (std::int64_t i = 0; i < n; ++i) {
    RandomStream rng(derive_seed(seed, first + static_cast<std::size_t>(i)));
    errors += decoder.decode_logical(circuit.run_shot(rng)) == 0 ? 1 : 0;
  }
  return static_cast<std::size_t>(errors);
}

std::vector<double> reset_profile(const CampaignPoint& point, const arch::ArchitectureGraph& graph) {
  switch (point.fault) {
    case FaultKind::NONE:
      return {};
    case FaultKind::RADIATION: {
      noise::RadiationFaultConfig fault;
      fault.gamma = point.gamma;
      fault.time_samples = point.time_samples;
      fault.root_qubit = point.root;
      fault.peak_probability = point.peak;
      return noise::radiation_reset_probabilities(fault, graph, point.time_bin);
    }
    case FaultKind::ERASURE:
      return noise::erasure_reset_probabilities(point.erasure, graph.num_nodes());
  }
  return {};
}

noise::NoisyCircuit instrument_point(const CampaignPoint& point, const PreparedCode& prepared) {
  noise::IntrinsicNoiseConfig intrinsic;
  intrinsic.physical_error_rate = point.phys_error_rate;
  intrinsic.validate();
  const auto profile = reset_profile(point, prepared.graph());
  const auto layout = noise::identity_layout(prepared.graph().num_nodes());
  return noise::instrument_circuit(prepared.routing().circuit, intrinsic, profile, layout);
}

CampaignResult run_point(const CampaignPoint& point, const PreparedCode& prepared, const RunOptions& options) {
  if (point.shots == 0) throw std::invalid_argument("campaign point needs at least one shot");
  const auto start = std::chrono::steady_clock::now();
  const auto circuit = instrument_point(point, prepared);
  const std::size_t errors =
      options.serial ? count_logical_errors_serial(circuit, prepared.decoder(), point.seed, 0, point.shots)
                     : count_logical_errors_openmp(circuit, prepared.decoder(), point.seed, 0, point.shots,
                                                   options.threads);
  CampaignResult result;
  result.point = point;
  result.estimate = decode::wilson_interval(errors, point.shots);
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::shared_ptr<const PreparedCode> PreparedCache::get(const codes::CodeSpec& spec, const std::string& arch_spec) {
  const std::string key = spec.to_string() + "@" + arch_spec;
  std::lock_guard lock(mutex_);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    auto prepared = std::make_shared<const PreparedCode>(spec, arch_spec, stable_hash(master_seed_, "route|" + key));
    it = cache_.emplace(key, std::move(prepared)).first;
  }
  return it->second;
}

}  // namespace qrad::campaign
