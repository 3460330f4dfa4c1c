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

#ifndef QRAD_CAMPAIGN_STATS_HPP_
#define QRAD_CAMPAIGN_STATS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace qrad::campaign {

/// Middle value; the mean of the two middle values for even counts. Throws on empty input.
double median(std::span<const double> values);

/// Ranks starting at 1, ties sharing their average rank.
std::vector<double> average_ranks(std::span<const double> values);

struct Correlation {
  double rho = 0.0;
  double p_value = 1.0;  // two-sided, t approximation with n-2 degrees of freedom
  std::size_t n = 0;
};

/// Spearman rank correlation. Needs at least three pairs.
Correlation spearman(std::span<const double> x, std::span<const double> y);

/// Splits `total` into `parts` counts that differ by at most one, larger ones first.
std::vector<std::size_t> split_evenly(std::size_t total, std::size_t parts);

}  // namespace qrad::campaign

#endif  // QRAD_CAMPAIGN_STATS_HPP_
