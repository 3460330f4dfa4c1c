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


#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qrad/codes/surface_code.hpp"
#include "qrad/decode/decoder.hpp"
#include "qrad/decode/matching.hpp"
#include "qrad/sim/executor.hpp"

namespace qrad::decode {
namespace {

TEST(MaxWeightMatching, SmallKnownCases) {
  // Path a-b-c-d with a heavy middle edge: max weight takes the middle, max
  // cardinality takes the two ends.
  const std::vector<WeightedEdge> edges{{0, 1, 2}, {1, 2, 5}, {2, 3, 2}};
  EXPECT_EQ(max_weight_matching(4, edges, false), (std::vector<std::int64_t>{-1, 2, 1, -1}));
  EXPECT_EQ(max_weight_matching(4, edges, true), (std::vector<std::int64_t>{1, 0, 3, 2}));
}

TEST(MaxWeightMatching, NeedsBlossom) {
  // Triangle 0-1-2 with a pendant 3 on node 2; the optimum pairs 0-1 and 2-3.
  const std::vector<WeightedEdge> edges{{0, 1, 6}, {1, 2, 5}, {0, 2, 5}, {2, 3, 4}};
  EXPECT_EQ(max_weight_matching(4, edges, false), (std::vector<std::int64_t>{1, 0, 3, 2}));
}

TEST(Mwpm, MatchesBruteForceOnRandomGraphs) {
  RandomStream rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto g = testing::random_decoding_graph(rng, 8, 0.6, 0.5, 9);
    const auto expected = testing::brute_force_matching_cost(g);
    if (expected < 0) {
      EXPECT_THROW(mwpm(g), std::runtime_error);
      continue;
    }
    const auto m = mwpm(g);
    EXPECT_EQ(m.cost, expected) << "trial " << trial;
    std::int64_t cost = 0;
    for (auto [u, v] : m.pairs()) cost += v == Matching::kBoundary ? g.boundary(u) : g.edge(u, static_cast<std::uint32_t>(v));
    EXPECT_EQ(cost, m.cost);
  }
}

TEST(Mwpm, PairsAreSymmetric) {
  DecodingGraph g(3);
  g.set_edge(0, 1, 1);
  g.set_boundary(2, 3);
  g.set_boundary(0, 5);
  const auto m = mwpm(g);
  EXPECT_EQ(m.partner, (std::vector<std::int64_t>{1, 0, Matching::kBoundary}));
  EXPECT_EQ(m.cost, 4);
  EXPECT_EQ(m.pairs(), (std::vector<std::pair<std::uint32_t, std::int64_t>>{{0, 1}, {2, Matching::kBoundary}}));
}

TEST(Mwpm, EmptyGraph) { EXPECT_EQ(mwpm(DecodingGraph(0)).cost, 0); }

TEST(Decoder, RepetitionDistances) {
  const auto code = codes::build_repetition(5, 1);
  const Decoder dec(code);
  EXPECT_EQ(dec.stabilizer_distance(0, 3), 3);
  EXPECT_EQ(dec.stabilizer_distance(1, 2), 1);
  EXPECT_EQ(dec.boundary_distance(0), 1);
  EXPECT_EQ(dec.boundary_distance(1), 2);
  EXPECT_EQ(dec.boundary_distance(2), 2);
  EXPECT_EQ(dec.boundary_distance(3), 1);
}

TEST(Decoder, SingleFlipBetweenRoundsIsLocated) {
  const auto code = codes::build_repetition(5, 1);
  const auto c = testing::insert_gate(code.circuit, code.first_round_end, sim::Gate::single(sim::GateKind::X, 2));
  const auto dist = sim::exact_record_distribution(c);
  ASSERT_EQ(dist.size(), 1u);
  const auto& record = dist.begin()->first;
  const auto events = extract_syndrome(record, code);
  EXPECT_EQ(events.z, (std::vector<DetectionEvent>{{1, 1}, {2, 1}}));
  const auto trace = Decoder(code).trace(record);
  EXPECT_EQ(trace.raw_readout, 0);
  EXPECT_EQ(trace.z.correction_parity, 1);
  EXPECT_EQ(trace.logical, 1);
}

// First gate of the parity readout into the ancilla.
std::size_t readout_begin(const codes::SurfaceCode& code) {
  const auto& gates = code.circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].touches(code.ancilla)) return i;
  }
  return gates.size();
}

// Every single data-qubit Pauli at every point before the parity readout.
void expect_all_single_errors_corrected(const codes::SurfaceCode& code, std::initializer_list<sim::GateKind> paulis) {
  const Decoder dec(code);
  for (std::size_t pos = 0; pos <= readout_begin(code); ++pos) {
    for (std::uint32_t d = 0; d < code.num_data(); ++d) {
      for (auto kind : paulis) {
        const auto c = testing::insert_gate(code.circuit, pos, sim::Gate::single(kind, d));
        for (const auto& [record, p] : sim::exact_record_distribution(c)) {
          ASSERT_EQ(dec.decode_logical(record), 1) << code.spec.to_string() << " " << sim::gate_name(kind) << " on data "
                                                   << d << " before gate " << pos;
        }
      }
    }
  }
}

TEST(Decoder, RepetitionCorrectsEverySingleBitFlip) {
  for (int d = 3; d <= 7; d += 2) expect_all_single_errors_corrected(codes::build_repetition(d, 1), {sim::GateKind::X});
}

TEST(Decoder, PhaseRepetitionCorrectsEverySinglePhaseFlip) {
  expect_all_single_errors_corrected(codes::build_repetition(1, 5), {sim::GateKind::Z});
}

TEST(Decoder, XxzzCorrectsEverySingleDataError) {
  expect_all_single_errors_corrected(codes::build_xxzz(3, 3), {sim::GateKind::X, sim::GateKind::Y, sim::GateKind::Z});
}

TEST(Decoder, FlipAfterParityReadoutIsMiscorrected) {
  // Once a data qubit has been folded into the ancilla, a flip on it only shows in the
  // final data measurement, which looks exactly like a flip just before the readout.
  const auto code = codes::build_repetition(3, 1);
  const auto measure_ancilla = code.circuit.size() - code.num_data() - 1;
  ASSERT_EQ(code.circuit.gates()[measure_ancilla].q0, code.ancilla);
  const auto late = testing::insert_gate(code.circuit, measure_ancilla + 1, sim::Gate::single(sim::GateKind::X, 0));
  const auto early = testing::insert_gate(code.circuit, readout_begin(code), sim::Gate::single(sim::GateKind::X, 0));
  const auto late_record = sim::exact_record_distribution(late).begin()->first;
  const auto early_record = sim::exact_record_distribution(early).begin()->first;
  EXPECT_EQ(extract_syndrome(late_record, code).z, extract_syndrome(early_record, code).z);
  EXPECT_EQ(decode_logical(early_record, code), 1);
  EXPECT_EQ(decode_logical(late_record, code), 0);
}

TEST(Decoder, MeasurementErrorIsAbsorbedInTime) {
  // A flipped syndrome bit in round 0 gives two events on the same stabilizer.
  const auto code = codes::build_repetition(5, 1);
  const auto records = sim::exact_record_distribution(code.circuit);
  auto record = records.begin()->first;
  record[code.slot_of(2, 0)] ^= 1;
  const auto events = extract_syndrome(record, code);
  EXPECT_EQ(events.z, (std::vector<DetectionEvent>{{2, 0}, {2, 1}}));
  EXPECT_EQ(Decoder(code).decode_logical(record), 1);
}

TEST(Wilson, KnownIntervals) {
  const auto half = wilson_interval(5, 10);
  EXPECT_DOUBLE_EQ(half.rate, 0.5);
  EXPECT_NEAR(half.ci_low, 0.2366, 1e-4);
  EXPECT_NEAR(half.ci_high, 0.7634, 1e-4);
  // No failures: the upper bound reduces to z^2 / (n + z^2).
  const double z2 = 1.959963984540054 * 1.959963984540054;
  const auto none = wilson_interval(0, 10);
  EXPECT_EQ(none.ci_low, 0.0);
  EXPECT_NEAR(none.ci_high, z2 / (10 + z2), 1e-12);
  const auto all = wilson_interval(10, 10);
  EXPECT_EQ(all.ci_high, 1.0);
  EXPECT_NEAR(all.ci_low, 10 / (10 + z2), 1e-12);
  EXPECT_THROW(wilson_interval(1, 0), std::invalid_argument);
  EXPECT_THROW(wilson_interval(3, 2), std::invalid_argument);
}

}  // namespace
}  // namespace qrad::decode
