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

#include "qrad/campaign/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qrad/arch/subgraphs.hpp"

namespace qrad::campaign {
namespace {

std::uint32_t code_qubits(const codes::CodeSpec& spec) {
  return spec.code_class == codes::CodeClass::REPETITION
             ? 2u * static_cast<std::uint32_t>(std::max(spec.d_z, spec.d_x))
             : 2u * static_cast<std::uint32_t>(spec.d_z * spec.d_x);
}

// The 5x6 lattice used for every analysis except the architecture comparison.
std::string lattice_arch_for(const codes::CodeSpec& code) {
  return code_qubits(code) <= 30 ? "mesh:5,6" : default_arch_for(code);
}

CampaignPoint base_point(const codes::CodeSpec& code, const std::string& arch, const SweepSettings& s) {
  CampaignPoint p;
  p.code = code;
  p.arch = arch;
  p.phys_error_rate = s.p;
  p.time_samples = s.time_samples;
  p.gamma = s.gamma;
  p.shots = s.shots;
  return p;
}

std::vector<double> rates(const std::vector<const CampaignResult*>& rs) {
  std::vector<double> out;
  for (const auto* r : rs) out.push_back(r->estimate.rate);
  return out;
}

}  // namespace

std::vector<CampaignResult> run_plan(const SweepPlan& plan, PreparedCache& cache, const RunOptions& options) {
  std::vector<CampaignResult> out;
  out.reserve(plan.points.size());
  for (const auto& point : plan.points) {
    out.push_back(run_point(point, *cache.get(point.code, point.arch), options));
  }
  return out;
}

std::vector<double> default_p_grid() {
  std::vector<double> out;
  for (int e = -8; e <= -1; ++e) out.push_back(std::pow(10.0, e));
  return out;
}

std::vector<double> default_peak_grid() {
  std::vector<double> out;
  for (int i = 0; i < 8; ++i) out.push_back(std::pow(10.0, -8.0 + 8.0 * i / 7.0));
  out.back() = 1.0;
  return out;
}

SweepPlan plan_surface(const SurfaceSweep& sweep, const SweepSettings& settings) {
  const std::string arch = sweep.arch.empty() ? default_arch_for(sweep.code) : sweep.arch;
  SweepPlan plan{"surface", {}};
  for (double p : sweep.p_grid) {
    for (double peak : sweep.peak_grid) {
      auto point = base_point(sweep.code, arch, settings);
      point.phys_error_rate = p;
      point.fault = FaultKind::RADIATION;
      point.root = sweep.root;
      point.peak = peak;
      point.time_bin = 0;
      point.assign_seed(settings.master_seed);
      plan.points.push_back(std::move(point));
    }
  }
  return plan;
}

std::vector<codes::CodeSpec> default_distance_codes() {
  std::vector<codes::CodeSpec> out;
  for (int d = 3; d <= 15; d += 2) out.push_back({codes::CodeClass::REPETITION, d, 1});
  for (int d = 3; d <= 15; d += 2) out.push_back({codes::CodeClass::REPETITION, 1, d});
  for (auto [dz, dx] : {std::pair{3, 1}, {1, 3}, {3, 3}, {5, 3}, {3, 5}}) {
    out.push_back({codes::CodeClass::XXZZ, dz, dx});
  }
  return out;
}

SweepPlan plan_distance(const DistanceSweep& sweep, const SweepSettings& settings, PreparedCache& cache) {
  SweepPlan plan{"distance", {}};
  for (const auto& code : sweep.codes) {
    const std::string arch = sweep.arch.empty() ? lattice_arch_for(code) : sweep.arch;
    const auto prepared = cache.get(code, arch);
    for (auto node : prepared->used_nodes()) {
      auto point = base_point(code, arch, settings);
      point.fault = FaultKind::ERASURE;
      point.erasure = {node};
      point.assign_seed(settings.master_seed);
      plan.points.push_back(std::move(point));
    }
  }
  return plan;
}

std::vector<DistanceSummary> summarize_distance(const std::vector<CampaignResult>& results) {
  std::vector<DistanceSummary> out;
  std::vector<std::vector<const CampaignResult*>> groups;
  for (const auto& r : results) {
    if (out.empty() || !(out.back().code == r.point.code)) {
      out.push_back({r.point.code, code_qubits(r.point.code), 0, 0, 0, 0});
      groups.emplace_back();
    }
    groups.back().push_back(&r);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto v = rates(groups[i]);
    out[i].median = median(v);
    out[i].min = *std::min_element(v.begin(), v.end());
    out[i].max = *std::max_element(v.begin(), v.end());
    out[i].roots = v.size();
  }
  return out;
}

SweepPlan plan_spread(const SpreadSweep& sweep, const SweepSettings& settings, PreparedCache& cache) {
  const std::string arch = sweep.arch.empty() ? lattice_arch_for(sweep.code) : sweep.arch;
  const auto prepared = cache.get(sweep.code, arch);
  const auto& used = prepared->used_nodes();

  std::vector<std::uint32_t> sizes = sweep.sizes;
  if (sizes.empty()) {
    for (std::uint32_t k = 1; k <= used.size(); ++k) sizes.push_back(k);
  }

  SweepPlan plan{"spread", {}};
  RandomStream rng(stable_hash(settings.master_seed, "subgraphs|" + sweep.code.to_string() + "@" + arch));
  for (auto k : sizes) {
    if (k < 1 || k > used.size()) {
      throw std::invalid_argument("erasure size " + std::to_string(k) + " outside [1, " +
                                  std::to_string(used.size()) + "]");
    }
    for (auto& set : arch::enumerate_connected_subgraphs(prepared->graph(), k, sweep.max_subgraphs, rng, used)) {
      auto point = base_point(sweep.code, arch, settings);
      point.fault = FaultKind::ERASURE;
      point.erasure = std::move(set);
      point.assign_seed(settings.master_seed);
      plan.points.push_back(std::move(point));
    }
  }
  for (auto root : used) {
    auto point = base_point(sweep.code, arch, settings);
    point.fault = FaultKind::RADIATION;
    point.root = root;
    point.peak = 1.0;
    point.time_bin = 0;
    point.assign_seed(settings.master_seed);
    plan.points.push_back(std::move(point));
  }
  return plan;
}

SpreadSummary summarize_spread(const std::vector<CampaignResult>& results) {
  std::map<std::uint32_t, std::vector<double>> by_size;
  std::vector<double> reference;
  for (const auto& r : results) {
    if (r.point.fault == FaultKind::ERASURE) {
      by_size[static_cast<std::uint32_t>(r.point.erasure.size())].push_back(r.estimate.rate);
    } else if (r.point.fault == FaultKind::RADIATION) {
      reference.push_back(r.estimate.rate);
    }
  }
  SpreadSummary out;
  for (const auto& [k, v] : by_size) out.bars.push_back({k, median(v), v.size()});
  if (!reference.empty()) out.spreading_reference = median(reference);
  return out;
}

SweepPlan plan_arch(const ArchSweep& sweep, const SweepSettings& settings, PreparedCache& cache) {
  if (sweep.archs.empty()) throw std::invalid_argument("architecture sweep needs at least one architecture");
  SweepPlan plan{"arch", {}};
  const auto per_bin = split_evenly(settings.shots, static_cast<std::size_t>(settings.time_samples));
  for (const auto& arch : sweep.archs) {
    const auto prepared = cache.get(sweep.code, arch);
    for (auto root : prepared->used_nodes()) {
      for (int bin = 0; bin < settings.time_samples; ++bin) {
        if (per_bin[bin] == 0) continue;
        auto point = base_point(sweep.code, arch, settings);
        point.fault = FaultKind::RADIATION;
        point.root = root;
        point.peak = 1.0;
        point.time_bin = bin;
        point.shots = per_bin[bin];
        point.assign_seed(settings.master_seed);
        plan.points.push_back(std::move(point));
      }
    }
  }
  return plan;
}

std::vector<ArchSummary> summarize_arch(const std::vector<CampaignResult>& results, PreparedCache& cache) {
  std::vector<ArchSummary> out;
  std::map<std::pair<std::string, std::uint32_t>, std::vector<double>> bins;
  std::vector<std::pair<std::string, codes::CodeSpec>> order;
  for (const auto& r : results) {
    if (r.point.fault != FaultKind::RADIATION) continue;
    if (order.empty() || order.back().first != r.point.arch) order.emplace_back(r.point.arch, r.point.code);
    bins[{r.point.arch, r.point.root}].push_back(r.estimate.rate);
  }
  for (const auto& [arch, code] : order) {
    const auto prepared = cache.get(code, arch);
    ArchSummary summary;
    summary.arch = arch;
    summary.two_qubit_gates = prepared->routing().two_qubit_gates();
    summary.swaps = prepared->routing().swaps;
    std::vector<double> medians;
    std::vector<double> index;
    std::vector<double> indexed_rates;
    for (const auto& [key, v] : bins) {
      if (key.first != arch) continue;
      ArchRootSummary root{key.second, prepared->logical_at(key.second), median(v)};
      medians.push_back(root.median);
      if (root.logical) {
        index.push_back(*root.logical);
        indexed_rates.push_back(root.median);
      }
      summary.roots.push_back(root);
    }
    if (medians.empty()) continue;
    summary.median = median(medians);
    if (index.size() >= 3) summary.index_trend = spearman(index, indexed_rates);
    out.push_back(std::move(summary));
  }
  return out;
}

}  // namespace qrad::campaign
