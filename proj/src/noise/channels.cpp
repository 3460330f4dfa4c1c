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

#include "qrad/noise/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qrad::noise {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void IntrinsicNoiseConfig::validate() const {
  if (!is_probability(physical_error_rate)) {
    throw std::invalid_argument("physical error rate must lie in [0, 1], got " + std::to_string(physical_error_rate));
  }
}

void RadiationFaultConfig::validate() const {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (time_samples < 1) throw std::invalid_argument("time_samples must be at least 1");
  if (spatial_scale < 1) throw std::invalid_argument("spatial_scale must be at least 1");
  if (!is_probability(peak_probability)) throw std::invalid_argument("peak probability must lie in [0, 1]");
}

std::array<Pauli, 2> sample_depolarize(double p, int arity, RandomStream& rng) {
  if (arity != 1 && arity != 2) throw std::invalid_argument("depolarize arity must be 1 or 2");
  std::array<Pauli, 2> out{Pauli::I, Pauli::I};
  for (int i = 0; i < arity; ++i) {
    if (uniform01(rng) < p) out[i] = static_cast<Pauli>(1 + rng() % 3);
  }
  return out;
}

double temporal_decay(double t, double gamma) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("normalized time must lie in [0, 1]");
  return std::exp(-gamma * t);
}

double step_temporal_decay(int bin, double gamma, int time_samples) {
  if (time_samples < 1) throw std::invalid_argument("time_samples must be at least 1");
  if (bin < 0 || bin >= time_samples) {
    throw std::out_of_range("time bin " + std::to_string(bin) + " outside [0, " + std::to_string(time_samples) + ")");
  }
  return temporal_decay(static_cast<double>(bin) / time_samples, gamma);
}

double spatial_decay(int distance, int spatial_scale) {
  if (distance < 0) throw std::domain_error("distance must be nonnegative");
  if (spatial_scale < 1) throw std::invalid_argument("spatial_scale must be at least 1");
  const double n = spatial_scale;
  const double denom = distance + n;
  return (n * n) / (denom * denom);
}

double fault_intensity(int bin, int distance, const RadiationFaultConfig& config) {
  return config.peak_probability * step_temporal_decay(bin, config.gamma, config.time_samples) *
         spatial_decay(distance, config.spatial_scale);
}

}  // namespace qrad::noise
