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

#include "qrad/campaign/output.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qrad::campaign {
namespace {

constexpr std::size_t kColumns = 15;

// Shortest text that parses back to the same double.
std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote");
  return fields;
}

template <typename T>
T parse_number(const std::string& text, const char* column) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("bad value '") + text + "' in column " + column);
  return value;
}

codes::CodeClass parse_class(const std::string& name) {
  if (name == codes::class_name(codes::CodeClass::REPETITION)) return codes::CodeClass::REPETITION;
  if (name == codes::class_name(codes::CodeClass::XXZZ)) return codes::CodeClass::XXZZ;
  throw std::invalid_argument("unknown code_class '" + name + "'");
}

}  // namespace

void write_results_csv(std::ostream& out, const std::vector<CampaignResult>& results) {
  out << kCsvHeader << '\n';
  for (const auto& r : results) {
    const auto& pt = r.point;
    const bool radiation = pt.fault == FaultKind::RADIATION;
    std::string erasure;
    for (auto q : pt.erasure) erasure += (erasure.empty() ? "" : ";") + std::to_string(q);
    out << codes::class_name(pt.code.code_class) << ',' << pt.code.d_z << ',' << pt.code.d_x << ',' << quote(pt.arch)
        << ',' << (radiation ? std::to_string(pt.root) : "") << ',' << erasure << ','
        << format_double(pt.phys_error_rate) << ',' << (radiation ? format_double(pt.peak) : "") << ','
        << (radiation ? std::to_string(pt.time_bin) : "") << ',' << r.estimate.shots << ',' << r.estimate.errors
        << ',' << format_double(r.estimate.rate) << ',' << format_double(r.estimate.ci_low) << ','
        << format_double(r.estimate.ci_high) << ',' << pt.seed << '\n';
  }
}

std::vector<CampaignResult> read_results_csv(std::istream& in, const CampaignPoint& defaults) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error("line 1: expected header '" + std::string(kCsvHeader) + "'");
  std::vector<CampaignResult> results;
  for (int lineno = 2; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    try {
      const auto f = split_csv_line(line);
      if (f.size() != kColumns)
        throw std::invalid_argument("expected " + std::to_string(kColumns) + " fields, got " + std::to_string(f.size()));
      CampaignResult r;
      auto& pt = r.point;
      pt = defaults;
      pt.code.code_class = parse_class(f[0]);
      pt.code.d_z = parse_number<int>(f[1], "d_z");
      pt.code.d_x = parse_number<int>(f[2], "d_x");
      pt.arch = f[3];
      pt.erasure.clear();
      if (!f[4].empty()) {
        pt.fault = FaultKind::RADIATION;
        pt.root = parse_number<std::uint32_t>(f[4], "root_qubit");
        pt.peak = parse_number<double>(f[7], "peak_prob");
        pt.time_bin = parse_number<int>(f[8], "time_bin");
      } else if (!f[5].empty()) {
        pt.fault = FaultKind::ERASURE;
        std::stringstream ss(f[5]);
        for (std::string item; std::getline(ss, item, ';');)
          pt.erasure.push_back(parse_number<std::uint32_t>(item, "erasure_set"));
      } else {
        pt.fault = FaultKind::NONE;
      }
      pt.phys_error_rate = parse_number<double>(f[6], "phys_error_rate");
      pt.shots = parse_number<std::size_t>(f[9], "shots");
      pt.seed = parse_number<std::uint64_t>(f[14], "seed");
      r.estimate.shots = pt.shots;
      r.estimate.errors = parse_number<std::size_t>(f[10], "logical_errors");
      r.estimate.rate = parse_number<double>(f[11], "rate");
      r.estimate.ci_low = parse_number<double>(f[12], "ci_low");
      r.estimate.ci_high = parse_number<double>(f[13], "ci_high");
      results.push_back(std::move(r));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return results;
}

std::string render_manifest(const RunManifest& manifest) {
  nlohmann::json j;
  j["master_seed"] = manifest.master_seed;
  j["engine_version"] = manifest.engine_version;
  j["config"] = manifest.config;
  j["files"] = nlohmann::json::array();
  for (const auto& f : manifest.files) j["files"].push_back({{"sweep", f.sweep}, {"file", f.file}, {"points", f.points}});
  return j.dump(2) + "\n";
}

RunManifest parse_manifest(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RunManifest m;
  m.master_seed = j.at("master_seed").get<std::uint64_t>();
  m.engine_version = j.at("engine_version").get<std::string>();
  m.config = j.at("config").get<std::map<std::string, std::vector<std::string>>>();
  for (const auto& f : j.at("files"))
    m.files.push_back({f.at("sweep").get<std::string>(), f.at("file").get<std::string>(), f.at("points").get<std::size_t>()});
  return m;
}

}  // namespace qrad::campaign
