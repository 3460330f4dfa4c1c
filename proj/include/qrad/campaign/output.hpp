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

#ifndef QRAD_CAMPAIGN_OUTPUT_HPP_
#define QRAD_CAMPAIGN_OUTPUT_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qrad/campaign/runner.hpp"

namespace qrad::campaign {

inline constexpr const char* kCsvHeader =
    "code_class,d_z,d_x,arch,root_qubit,erasure_set,phys_error_rate,peak_prob,time_bin,shots,"
    "logical_errors,rate,ci_low,ci_high,seed";

/// One row per result. root_qubit, peak_prob and time_bin are empty unless the point
/// is a radiation fault; erasure_set lists nodes separated by ';'. Fields holding a
/// comma are quoted. Wall time is deliberately left out so reruns compare equal.
void write_results_csv(std::ostream& out, const std::vector<CampaignResult>& results);

/// Inverse of write_results_csv. time_samples and gamma are not part of the schema;
/// they come from `defaults`. Throws std::runtime_error naming the line on bad input.
std::vector<CampaignResult> read_results_csv(std::istream& in, const CampaignPoint& defaults = {});

struct SweepFile {
  std::string sweep;
  std::string file;
  std::size_t points = 0;
};

struct RunManifest {
  std::uint64_t master_seed = 0;
  std::string engine_version = kEngineVersion;
  std::map<std::string, std::vector<std::string>> config;  // rendered config, by key
  std::vector<SweepFile> files;
};

/// Pretty-printed JSON, keys sorted.
std::string render_manifest(const RunManifest& manifest);
RunManifest parse_manifest(const std::string& text);

}  // namespace qrad::campaign

#endif  // QRAD_CAMPAIGN_OUTPUT_HPP_
