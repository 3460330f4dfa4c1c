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

#ifndef QRAD_CAMPAIGN_SWEEPS_HPP_
#define QRAD_CAMPAIGN_SWEEPS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrad/campaign/runner.hpp"
#include "qrad/campaign/stats.hpp"

namespace qrad::campaign {

struct SweepSettings {
  std::uint64_t master_seed = 1;
  std::size_t shots = 2000;
  double p = 0.01;
  int time_samples = 10;
  double gamma = 10.0;
};

/// Points in canonical order; results come back in the same order.
struct SweepPlan {
  std::string name;
  std::vector<CampaignPoint> points;
};

std::vector<CampaignResult> run_plan(const SweepPlan& plan, PreparedCache& cache, const RunOptions& options = {});

// Noise-vs-radiation landscape: intrinsic p against peak reset probability at the
// impact time, root fixed.

/// 10^-8 .. 10^-1, one point per decade.
std::vector<double> default_p_grid();
/// 8 log-spaced values from 10^-8 to 1.
std::vector<double> default_peak_grid();

struct SurfaceSweep {
  codes::CodeSpec code;
  std::string arch;  // empty: default_arch_for(code)
  std::vector<double> p_grid = default_p_grid();
  std::vector<double> peak_grid = default_peak_grid();
  std::uint32_t root = 2;
};

SweepPlan plan_surface(const SurfaceSweep& sweep, const SweepSettings& settings);

// Code distance: one certain, non-spreading reset per used node, median over nodes.

std::vector<codes::CodeSpec> default_distance_codes();

struct DistanceSweep {
  std::vector<codes::CodeSpec> codes = default_distance_codes();
  std::string arch;  // empty: mesh:5,6 when the code fits, else default_arch_for
};

SweepPlan plan_distance(const DistanceSweep& sweep, const SweepSettings& settings, PreparedCache& cache);

struct DistanceSummary {
  codes::CodeSpec code;
  std::uint32_t qubits = 0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t roots = 0;
};

std::vector<DistanceSummary> summarize_distance(const std::vector<CampaignResult>& results);

// Fault spread: connected erasure sets of growing size against a spreading fault.

struct SpreadSweep {
  codes::CodeSpec code;
  std::string arch;                   // empty: mesh:5,6 when the code fits, else default
  std::vector<std::uint32_t> sizes;   // empty: 1 .. number of used nodes
  std::size_t max_subgraphs = 8;
};

SweepPlan plan_spread(const SpreadSweep& sweep, const SweepSettings& settings, PreparedCache& cache);

struct SpreadBar {
  std::uint32_t k = 0;
  double median = 0.0;
  std::size_t subgraphs = 0;
};

struct SpreadSummary {
  std::vector<SpreadBar> bars;
  double spreading_reference = 0.0;  // median over roots, impact time, peak 1
};

SpreadSummary summarize_spread(const std::vector<CampaignResult>& results);

// Architecture: full time evolution per root node, median over the time bins.

struct ArchSweep {
  codes::CodeSpec code;
  std::vector<std::string> archs;
};

SweepPlan plan_arch(const ArchSweep& sweep, const SweepSettings& settings, PreparedCache& cache);

struct ArchRootSummary {
  std::uint32_t root = 0;
  std::optional<std::uint32_t> logical;  // code qubit initially on that node
  double median = 0.0;
};

struct ArchSummary {
  std::string arch;
  std::vector<ArchRootSummary> roots;
  double median = 0.0;
  std::size_t two_qubit_gates = 0;
  std::size_t swaps = 0;
  /// Spearman between the code-qubit index on the root and its median rate.
  std::optional<Correlation> index_trend;
};

std::vector<ArchSummary> summarize_arch(const std::vector<CampaignResult>& results, PreparedCache& cache);

}  // namespace qrad::campaign

#endif  // QRAD_CAMPAIGN_SWEEPS_HPP_
