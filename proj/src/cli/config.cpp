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


#include "qrad/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qrad/arch/graph.hpp"
#include "qrad/campaign/sweeps.hpp"
#include "qrad/noise/channels.hpp"

namespace qrad::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ConfigError(std::string(key) + ": cannot parse '" + std::string(text) + "'");
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    values.push_back(parse_value<T>(key, text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(text) + "'");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T, typename F>
std::string join(const std::vector<T>& values, F format) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ",") + format(v);
  return out;
}

}  // namespace

std::string_view sweep_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::SURFACE: return "surface";
    case SweepKind::DISTANCE: return "distance";
    case SweepKind::SPREAD: return "spread";
    case SweepKind::ARCH: return "arch";
    case SweepKind::DECODE_DEBUG: return "decode-debug";
  }
  return "?";
}

SweepKind parse_sweep_name(std::string_view name) {
  for (auto kind : {SweepKind::SURFACE, SweepKind::DISTANCE, SweepKind::SPREAD, SweepKind::ARCH,
                    SweepKind::DECODE_DEBUG}) {
    if (sweep_name(kind) == name) return kind;
  }
  throw ConfigError("sweep: unknown kind '" + std::string(name) +
                    "' (expected surface, distance, spread, arch or decode-debug)");
}

void set_config_value(RunConfig& c, std::string_view key, std::string_view raw) {
  const auto value = trim(raw);
  if (key == "sweep") {
    c.sweep = parse_sweep_name(value);
  } else if (key == "code") {
    try {
      c.codes.push_back(codes::CodeSpec::parse(value));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("code: ") + e.what());
    }
  } else if (key == "arch") {
    if (value.empty()) throw ConfigError("arch: empty value");
    c.archs.emplace_back(value);
  } else if (key == "p") {
    c.p = parse_list<double>(key, value);
  } else if (key == "peak") {
    c.peak = parse_list<double>(key, value);
  } else if (key == "time_samples") {
    c.time_samples = parse_value<int>(key, value);
  } else if (key == "gamma") {
    c.gamma = parse_value<double>(key, value);
  } else if (key == "shots") {
    c.shots = parse_value<std::size_t>(key, value);
  } else if (key == "seed") {
    c.seed = parse_value<std::uint64_t>(key, value);
  } else if (key == "threads") {
    c.threads = parse_value<int>(key, value);
  } else if (key == "out") {
    c.out = std::string(value);
  } else if (key == "root") {
    c.root = parse_value<std::uint32_t>(key, value);
  } else if (key == "sizes") {
    c.sizes = parse_list<std::uint32_t>(key, value);
  } else if (key == "max_subgraphs") {
    c.max_subgraphs = parse_value<std::size_t>(key, value);
  } else if (key == "inject") {
    c.inject.emplace_back(value);
  } else if (key == "dry_run") {
    c.dry_run = parse_bool(key, value);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

RunConfig parse_config_text(std::string_view text) {
  RunConfig config;
  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const auto key = trim(view.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": missing key");
    try {
      set_config_value(config, key, view.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config_text(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void apply_defaults(RunConfig& c) {
  const bool surface = c.sweep == SweepKind::SURFACE;
  if (c.p.empty()) {
    if (surface) c.p = campaign::default_p_grid();
    else c.p = {c.sweep == SweepKind::DECODE_DEBUG ? 0.0 : 0.01};
  }
  if (c.peak.empty()) c.peak = surface ? campaign::default_peak_grid() : std::vector<double>{1.0};
  if (c.codes.empty() && c.sweep == SweepKind::DISTANCE) c.codes = campaign::default_distance_codes();
  validate(c);
}

void validate(const RunConfig& c) {
  if (c.codes.empty()) throw ConfigError("code: required for the " + std::string(sweep_name(c.sweep)) + " sweep");
  if (c.sweep != SweepKind::DISTANCE && c.codes.size() != 1)
    throw ConfigError("code: the " + std::string(sweep_name(c.sweep)) + " sweep takes exactly one code");
  for (const auto& code : c.codes) {
    try {
      codes::CodeSpec::parse(code.to_string());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("code: ") + e.what());
    }
  }
  if (c.sweep != SweepKind::ARCH && c.archs.size() > 1)
    throw ConfigError("arch: only the arch sweep takes more than one architecture");
  for (const auto& a : c.archs) {
    try {
      arch::build_graph(a);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("arch: ") + e.what());
    }
  }
  for (double p : c.p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p: " + format_double(p) + " is not a probability");
  }
  for (double v : c.peak) {
    if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("peak: " + format_double(v) + " is not a probability");
  }
  if (c.sweep != SweepKind::SURFACE && c.p.size() > 1)
    throw ConfigError("p: lists are only accepted by the surface sweep");
  if (c.sweep != SweepKind::SURFACE && c.peak.size() > 1)
    throw ConfigError("peak: lists are only accepted by the surface sweep");
  if (c.time_samples < 1) throw ConfigError("time_samples: must be at least 1");
  if (!(c.gamma > 0.0)) throw ConfigError("gamma: must be positive");
  if (c.shots == 0) throw ConfigError("shots: must be positive");
  if (c.sweep == SweepKind::ARCH && c.shots < static_cast<std::size_t>(c.time_samples))
    throw ConfigError("shots: the arch sweep needs at least one shot per time bin");
  if (c.threads < 0) throw ConfigError("threads: must be non-negative");
  if (c.out.empty()) throw ConfigError("out: empty output directory");
  if (c.max_subgraphs == 0) throw ConfigError("max_subgraphs: must be positive");
  if (std::any_of(c.sizes.begin(), c.sizes.end(), [](auto k) { return k == 0; }))
    throw ConfigError("sizes: erasure sets need at least one node");
  if (!c.inject.empty() && c.sweep != SweepKind::DECODE_DEBUG)
    throw ConfigError("inject: only meaningful for decode-debug");
}

std::string render_config(const RunConfig& c) {
  std::ostringstream out;
  out << "sweep = " << sweep_name(c.sweep) << '\n';
  for (const auto& code : c.codes) out << "code = " << code.to_string() << '\n';
  for (const auto& a : c.archs) out << "arch = " << a << '\n';
  if (!c.p.empty()) out << "p = " << join(c.p, format_double) << '\n';
  if (!c.peak.empty()) out << "peak = " << join(c.peak, format_double) << '\n';
  out << "time_samples = " << c.time_samples << '\n';
  out << "gamma = " << format_double(c.gamma) << '\n';
  out << "shots = " << c.shots << '\n';
  out << "seed = " << c.seed << '\n';
  out << "threads = " << c.threads << '\n';
  out << "out = " << c.out << '\n';
  out << "root = " << c.root << '\n';
  if (!c.sizes.empty()) out << "sizes = " << join(c.sizes, [](auto k) { return std::to_string(k); }) << '\n';
  out << "max_subgraphs = " << c.max_subgraphs << '\n';
  for (const auto& i : c.inject) out << "inject = " << i << '\n';
  out << "dry_run = " << (c.dry_run ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace qrad::cli
