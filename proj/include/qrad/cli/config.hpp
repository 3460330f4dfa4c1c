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


#ifndef QRAD_CLI_CONFIG_HPP_
#define QRAD_CLI_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qrad/codes/surface_code.hpp"

namespace qrad::cli {

enum class SweepKind { SURFACE, DISTANCE, SPREAD, ARCH, DECODE_DEBUG };

std::string_view sweep_name(SweepKind kind);
SweepKind parse_sweep_name(std::string_view name);

/// Everything a run needs. List fields left empty by the user are filled in by
/// apply_defaults, so a validated config is fully explicit.
struct RunConfig {
  SweepKind sweep = SweepKind::SURFACE;
  std::vector<codes::CodeSpec> codes;
  std::vector<std::string> archs;
  std::vector<double> p;
  std::vector<double> peak;
  int time_samples = 10;
  double gamma = 10.0;
  std::size_t shots = 2000;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out = "results";
  std::uint32_t root = 2;
  std::vector<std::uint32_t> sizes;
  std::size_t max_subgraphs = 8;
  std::vector<std::string> inject;
  bool dry_run = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Bad syntax or a semantically invalid field. The message names the line or field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `key = value` per line, `#` starts a comment. code, arch and inject may repeat;
/// p, peak and sizes take comma-separated lists. Unknown keys are errors.
RunConfig parse_config_text(std::string_view text);
RunConfig load_config_file(const std::string& path);

/// Applies a single `key = value` pair; shared by the file parser and the flags.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);

/// Defaults: p = 0.01 (the 8-decade grid for surface, 0 for decode-debug), peak = 1
/// (the 8-point grid for surface), codes for the distance sweep. Then validate.
void apply_defaults(RunConfig& config);

/// Throws ConfigError naming the offending field.
void validate(const RunConfig& config);

/// Text that parse_config_text turns back into the same config.
std::string render_config(const RunConfig& config);

}  // namespace qrad::cli

#endif  // QRAD_CLI_CONFIG_HPP_
