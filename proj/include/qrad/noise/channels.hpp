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

#ifndef QRAD_NOISE_CHANNELS_HPP_
#define QRAD_NOISE_CHANNELS_HPP_

#include <array>
#include <cstdint>

#include "qrad/sim/random.hpp"

namespace qrad::noise {

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Uncorrelated per-gate depolarizing noise.
struct IntrinsicNoiseConfig {
  double physical_error_rate = 0.01;

  void validate() const;
};

/// Radiation-induced transient fault rooted at one physical qubit.
///
/// The reset probability of physical qubit q during time bin k is
/// peak * exp(-gamma * k / n_s) * n^2 / (d + n)^2, with d the hop distance from the root.
struct RadiationFaultConfig {
  double gamma = 10.0;
  int time_samples = 10;
  int spatial_scale = 1;
  std::uint32_t root_qubit = 0;
  double peak_probability = 1.0;

  void validate() const;
};

/// Single-qubit depolarizing draw: I with probability 1-p, otherwise X, Y or Z with p/3 each.
/// Arity 2 draws two independent single-qubit samples; the second entry is I for arity 1.
std::array<Pauli, 2> sample_depolarize(double p, int arity, RandomStream& rng);

/// exp(-gamma * t) for normalized time t in [0, 1].
double temporal_decay(double t, double gamma);

/// Step approximation of temporal_decay: bin k covers [k/n_s, (k+1)/n_s) and takes
/// the value at its left edge.
double step_temporal_decay(int bin, double gamma, int time_samples);

/// n^2 / (d + n)^2.
double spatial_decay(int distance, int spatial_scale);

/// peak * step_temporal_decay(bin) * spatial_decay(distance).
double fault_intensity(int bin, int distance, const RadiationFaultConfig& config);

}  // namespace qrad::noise

#endif  // QRAD_NOISE_CHANNELS_HPP_
