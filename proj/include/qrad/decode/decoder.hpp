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

#ifndef QRAD_DECODE_DECODER_HPP_
#define QRAD_DECODE_DECODER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qrad/codes/surface_code.hpp"
#include "qrad/decode/matching.hpp"
#include "qrad/sim/executor.hpp"

namespace qrad::decode {

struct DetectionEvent {
  std::uint32_t stabilizer = 0;  // index into SurfaceCode::stabilizers
  int round = 0;
  friend bool operator==(const DetectionEvent&, const DetectionEvent&) = default;
};

struct DetectionEvents {
  std::vector<DetectionEvent> z;  // from Z-type stabilizers (flagged by X errors)
  std::vector<DetectionEvent> x;  // from X-type stabilizers (flagged by Z errors)

  const std::vector<DetectionEvent>& of(codes::Basis basis) const { return basis == codes::Basis::Z ? z : x; }
  bool empty() const { return z.empty() && x.empty(); }
};

/// Round 0 is compared with the all-zero reference (only for stabilizers that start
/// deterministic), later rounds with the previous round.
DetectionEvents extract_syndrome(const sim::Record& record, const codes::SurfaceCode& code);

struct BasisTrace {
  std::vector<DetectionEvent> events;
  Matching matching;
  int correction_parity = 0;
};

struct DecodeTrace {
  BasisTrace z;
  BasisTrace x;
  int raw_readout = 0;
  int logical = 0;
};

/// Precomputes hop distances between same-type stabilizers and to the two opposite
/// code boundaries, then decodes records against them.
class Decoder {
 public:
  explicit Decoder(const codes::SurfaceCode& code);

  /// Decoded logical bit; 1 is the expected outcome.
  int decode_logical(const sim::Record& record) const;
  DecodeTrace trace(const sim::Record& record) const;

  /// Hop distance between two stabilizers of the same type (-1 if not connected
  /// without crossing a boundary).
  int stabilizer_distance(std::uint32_t a, std::uint32_t b) const;
  /// Distance to the nearer boundary for that stabilizer's type.
  int boundary_distance(std::uint32_t stabilizer) const;

  const codes::SurfaceCode& code() const { return *code_; }

 private:
  struct BasisGraph {
    std::vector<std::int64_t> local;  // global stabilizer -> local index, -1 if other type
    std::vector<int> dist;             // local x local
    std::vector<int> boundary;         // local -> nearer boundary distance (-1 if none)
    std::uint32_t size = 0;
  };

  BasisTrace decode_basis(const std::vector<DetectionEvent>& events, const BasisGraph& g) const;
  const BasisGraph& graph_for(std::uint32_t stabilizer) const;

  const codes::SurfaceCode* code_;
  BasisGraph z_;
  BasisGraph x_;
};

/// One-shot convenience; builds a Decoder each call.
int decode_logical(const sim::Record& record, const codes::SurfaceCode& code);

struct RateEstimate {
  std::size_t shots = 0;
  std::size_t errors = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

/// Wilson score interval at 95% confidence.
RateEstimate wilson_interval(std::size_t errors, std::size_t shots);

/// Fraction of records decoding to 0.
RateEstimate logical_error_rate(std::span<const sim::Record> records, const codes::SurfaceCode& code);

}  // namespace qrad::decode

#endif  // QRAD_DECODE_DECODER_HPP_
