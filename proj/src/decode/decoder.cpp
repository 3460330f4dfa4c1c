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

#include "qrad/decode/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qrad::decode {

using codes::Basis;
using codes::SurfaceCode;

DetectionEvents extract_syndrome(const sim::Record& record, const SurfaceCode& code) {
  if (record.size() != code.circuit.num_slots()) {
    throw std::invalid_argument("record has " + std::to_string(record.size()) + " slots, code expects " +
                                std::to_string(code.circuit.num_slots()));
  }
  DetectionEvents events;
  const auto num_stabs = static_cast<std::uint32_t>(code.stabilizers.size());
  for (int r = 0; r < code.rounds; ++r) {
    for (std::uint32_t s = 0; s < num_stabs; ++s) {
      const auto type = code.stabilizers[s].type;
      const int now = record[code.slot_of(s, r)];
      int flagged;
      if (r == 0) {
        if (type != code.prepared_basis) continue;  // random first outcome
        flagged = now;
      } else {
        flagged = now ^ record[code.slot_of(s, r - 1)];
      }
      if (flagged) (type == Basis::Z ? events.z : events.x).push_back({s, r});
    }
  }
  if (!code.data_slots.empty()) {
    for (std::uint32_t s = 0; s < num_stabs; ++s) {
      const auto& stab = code.stabilizers[s];
      if (stab.type != code.prepared_basis) continue;
      int parity = 0;
      for (auto d : stab.data) parity ^= record[code.data_slots[d]];
      if (parity ^ record[code.slot_of(s, code.rounds - 1)]) {
        (stab.type == Basis::Z ? events.z : events.x).push_back({s, code.rounds});
      }
    }
  }
  return events;
}

Decoder::Decoder(const SurfaceCode& code) : code_(&code) {
  for (Basis basis : {Basis::Z, Basis::X}) {
    BasisGraph& g = basis == Basis::Z ? z_ : x_;
    g.local.assign(code.stabilizers.size(), -1);
    std::vector<std::uint32_t> globals;
    for (std::uint32_t s = 0; s < code.stabilizers.size(); ++s) {
      if (code.stabilizers[s].type == basis) {
        g.local[s] = static_cast<std::int64_t>(globals.size());
        globals.push_back(s);
      }
    }
    g.size = static_cast<std::uint32_t>(globals.size());

    // Every data qubit is an edge between the (at most two) stabilizers of this type
    // that contain it, or from its single stabilizer to one of the two boundaries.
    std::vector<std::vector<std::uint32_t>> adj(g.size);
    std::vector<bool> touches_b0(g.size, false);
    std::vector<bool> touches_b1(g.size, false);
    for (std::uint32_t d = 0; d < code.num_data(); ++d) {
      std::vector<std::uint32_t> owners;
      for (std::uint32_t i = 0; i < g.size; ++i) {
        const auto& data = code.stabilizers[globals[i]].data;
        if (std::find(data.begin(), data.end(), d) != data.end()) owners.push_back(i);
      }
      if (owners.size() == 2) {
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
      } else if (owners.size() == 1) {
        const auto site = code.data_sites[d];
        const int coord = basis == Basis::Z ? site.row : site.col;
        const int last = basis == Basis::Z ? code.rows - 1 : code.cols - 1;
        if (coord == 0) {
          touches_b0[owners[0]] = true;
        } else if (coord == last) {
          touches_b1[owners[0]] = true;
        } else {
          throw std::logic_error("data qubit with one stabilizer away from the code boundary");
        }
      } else if (owners.size() > 2) {
        throw std::logic_error("data qubit shared by more than two stabilizers of one type");
      }
    }

    g.dist.assign(std::size_t{g.size} * g.size, -1);
    g.boundary.assign(g.size, -1);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t src = 0; src < g.size; ++src) {
      int* row = &g.dist[std::size_t{src} * g.size];
      row[src] = 0;
      queue.assign(1, src);
      int b0 = -1;
      int b1 = -1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto v = queue[head];
        if (touches_b0[v] && b0 < 0) b0 = row[v] + 1;
        if (touches_b1[v] && b1 < 0) b1 = row[v] + 1;
        for (auto w : adj[v]) {
          if (row[w] < 0) {
            row[w] = row[v] + 1;
            queue.push_back(w);
          }
        }
      }
      if (b0 >= 0 && (b1 < 0 || b0 <= b1)) {
        g.boundary[src] = b0;
      } else {
        g.boundary[src] = b1;
      }
    }
  }
}

const Decoder::BasisGraph& Decoder::graph_for(std::uint32_t stabilizer) const {
  if (stabilizer >= code_->stabilizers.size()) throw std::out_of_range("stabilizer index out of range");
  return code_->stabilizers[stabilizer].type == Basis::Z ? z_ : x_;
}

int Decoder::stabilizer_distance(std::uint32_t a, std::uint32_t b) const {
  const auto& g = graph_for(a);
  if (&g != &graph_for(b)) return -1;
  return g.dist[static_cast<std::size_t>(g.local[a]) * g.size + static_cast<std::size_t>(g.local[b])];
}

int Decoder::boundary_distance(std::uint32_t stabilizer) const {
  const auto& g = graph_for(stabilizer);
  return g.boundary[static_cast<std::size_t>(g.local[stabilizer])];
}

BasisTrace Decoder::decode_basis(const std::vector<DetectionEvent>& events, const BasisGraph& g) const {
  BasisTrace trace;
  trace.events = events;
  const auto m = static_cast<std::uint32_t>(events.size());
  DecodingGraph graph(m);
  auto spatial = [&](std::uint32_t i, std::uint32_t j) {
    const auto a = static_cast<std::size_t>(g.local[events[i].stabilizer]);
    const auto b = static_cast<std::size_t>(g.local[events[j].stabilizer]);
    return g.dist[a * g.size + b];
  };
  for (std::uint32_t i = 0; i < m; ++i) {
    const int bd = g.boundary[static_cast<std::size_t>(g.local[events[i].stabilizer])];
    if (bd >= 0) graph.set_boundary(i, bd);
    for (std::uint32_t j = i + 1; j < m; ++j) {
      const int d = spatial(i, j);
      if (d >= 0) graph.set_edge(i, j, d + std::abs(events[i].round - events[j].round));
    }
  }
  trace.matching = mwpm(graph);
  for (const auto& [u, v] : trace.matching.pairs()) {
    const int hops = v == Matching::kBoundary ? g.boundary[static_cast<std::size_t>(g.local[events[u].stabilizer])]
                                              : spatial(u, static_cast<std::uint32_t>(v));
    trace.correction_parity ^= hops & 1;
  }
  return trace;
}

DecodeTrace Decoder::trace(const sim::Record& record) const {
  const auto events = extract_syndrome(record, *code_);
  DecodeTrace out;
  out.z = decode_basis(events.z, z_);
  out.x = decode_basis(events.x, x_);
  out.raw_readout = record[code_->readout_slot()] & 1;
  const auto& logical = code_->logical_basis == Basis::Z ? out.z : out.x;
  out.logical = out.raw_readout ^ logical.correction_parity;
  return out;
}

int Decoder::decode_logical(const sim::Record& record) const {
  const auto events = extract_syndrome(record, *code_);
  const bool z = code_->logical_basis == Basis::Z;
  const auto basis = decode_basis(z ? events.z : events.x, z ? z_ : x_);
  return (record[code_->readout_slot()] & 1) ^ basis.correction_parity;
}

int decode_logical(const sim::Record& record, const SurfaceCode& code) { return Decoder(code).decode_logical(record); }

RateEstimate wilson_interval(std::size_t errors, std::size_t shots) {
  if (shots == 0) throw std::invalid_argument("rate estimate needs at least one shot");
  if (errors > shots) throw std::invalid_argument("more errors than shots");
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(shots);
  const double p = static_cast<double>(errors) / n;
  const double denom = 1.0 + z * z / n;
  const double center = (p + z * z / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n));
  // The bounds are exact at the extremes; the subtraction above leaves rounding residue.
  const double low = errors == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = errors == shots ? 1.0 : std::min(1.0, center + half);
  return {shots, errors, p, low, high};
}

RateEstimate logical_error_rate(std::span<const sim::Record> records, const SurfaceCode& code) {
  if (records.empty()) throw std::invalid_argument("logical_error_rate needs at least one record");
  const Decoder decoder(code);
  std::size_t errors = 0;
  for (const auto& r : records) errors += decoder.decode_logical(r) == 0 ? 1 : 0;
  return wilson_interval(errors, records.size());
}

}  // namespace qrad::decode
