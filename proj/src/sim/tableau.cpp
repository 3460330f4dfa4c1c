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

#include "qrad/sim/tableau.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace qrad::sim {

Tableau::Tableau(std::uint32_t num_qubits)
    : n_(num_qubits),
      words_((num_qubits + 63) / 64),
      xs_(static_cast<std::size_t>(2 * num_qubits + 1) * words_, 0),
      zs_(static_cast<std::size_t>(2 * num_qubits + 1) * words_, 0),
      signs_(2 * num_qubits + 1, 0) {
  if (num_qubits == 0) throw std::invalid_argument("tableau needs at least one qubit");
  for (std::uint32_t q = 0; q < n_; ++q) {
    xs_[word(q, q)] |= bit(q);
    zs_[word(n_ + q, q)] |= bit(q);
  }
}

void Tableau::check_qubit(std::uint32_t q) const {
  if (q >= n_) throw std::out_of_range("qubit " + std::to_string(q) + " outside " + std::to_string(n_) + "-qubit tableau");
}

void Tableau::h(std::uint32_t q) {
  check_qubit(q);
  const std::uint64_t m = bit(q);
  for (std::uint32_t r = 0; r < 2 * n_; ++r) {
    auto& xw = xs_[word(r, q)];
    auto& zw = zs_[word(r, q)];
    signs_[r] ^= ((xw & zw & m) != 0);
    const std::uint64_t diff = (xw ^ zw) & m;
    xw ^= diff;
    zw ^= diff;
  }
}

void Tableau::s(std::uint32_t q) {
  check_qubit(q);
  const std::uint64_t m = bit(q);
  for (std::uint32_t r = 0; r < 2 * n_; ++r) {
    auto& xw = xs_[word(r, q)];
    auto& zw = zs_[word(r, q)];
    signs_[r] ^= ((xw & zw & m) != 0);
    zw ^= xw & m;
  }
}

void Tableau::x(std::uint32_t q) {
  check_qubit(q);
  for (std::uint32_t r = 0; r < 2 * n_; ++r) signs_[r] ^= ((zs_[word(r, q)] & bit(q)) != 0);
}

void Tableau::z(std::uint32_t q) {
  check_qubit(q);
  for (std::uint32_t r = 0; r < 2 * n_; ++r) signs_[r] ^= ((xs_[word(r, q)] & bit(q)) != 0);
}

void Tableau::y(std::uint32_t q) {
  check_qubit(q);
  for (std::uint32_t r = 0; r < 2 * n_; ++r) {
    signs_[r] ^= (((xs_[word(r, q)] ^ zs_[word(r, q)]) & bit(q)) != 0);
  }
}

void Tableau::cnot(std::uint32_t c, std::uint32_t t) {
  check_qubit(c);
  check_qubit(t);
  if (c == t) throw std::invalid_argument("CNOT control equals target");
  for (std::uint32_t r = 0; r < 2 * n_; ++r) {
    const bool xc = x_bit(r, c), zc = z_bit(r, c), xt = x_bit(r, t), zt = z_bit(r, t);
    signs_[r] ^= (xc && zt && (xt == zc));
    if (xc) xs_[word(r, t)] ^= bit(t);
    if (zt) zs_[word(r, c)] ^= bit(c);
  }
}

void Tableau::swap(std::uint32_t a, std::uint32_t b) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) return;
  for (std::uint32_t r = 0; r < 2 * n_; ++r) {
    if (x_bit(r, a) != x_bit(r, b)) {
      xs_[word(r, a)] ^= bit(a);
      xs_[word(r, b)] ^= bit(b);
    }
    if (z_bit(r, a) != z_bit(r, b)) {
      zs_[word(r, a)] ^= bit(a);
      zs_[word(r, b)] ^= bit(b);
    }
  }
}

void Tableau::rowmul(std::uint32_t target, std::uint32_t source) {
  // Word-parallel Pauli product with a mod-4 phase counter per bit lane.
  std::uint64_t cnt1 = 0, cnt2 = 0;
  std::uint64_t* x1 = &xs_[static_cast<std::size_t>(target) * words_];
  std::uint64_t* z1 = &zs_[static_cast<std::size_t>(target) * words_];
  const std::uint64_t* x2 = &xs_[static_cast<std::size_t>(source) * words_];
  const std::uint64_t* z2 = &zs_[static_cast<std::size_t>(source) * words_];
  for (std::uint32_t w = 0; w < words_; ++w) {
    const std::uint64_t old_x = x1[w], old_z = z1[w];
    x1[w] ^= x2[w];
    z1[w] ^= z2[w];
    const std::uint64_t x1z2 = old_x & z2[w];
    const std::uint64_t anti = (x2[w] & old_z) ^ x1z2;
    cnt2 ^= (cnt1 ^ x1[w] ^ z1[w] ^ x1z2) & anti;
    cnt1 ^= anti;
  }
  unsigned log_i = static_cast<unsigned>(std::popcount(cnt1)) + 2u * static_cast<unsigned>(std::popcount(cnt2));
  log_i += 2u * signs_[source];
  signs_[target] ^= static_cast<std::uint8_t>((log_i >> 1) & 1u);
}

bool Tableau::is_deterministic(std::uint32_t q) const {
  check_qubit(q);
  for (std::uint32_t r = n_; r < 2 * n_; ++r) {
    if (x_bit(r, q)) return false;
  }
  return true;
}

bool Tableau::measure_z(std::uint32_t q, bool random_outcome) {
  check_qubit(q);
  std::uint32_t pivot = 2 * n_;
  for (std::uint32_t r = n_; r < 2 * n_; ++r) {
    if (x_bit(r, q)) {
      pivot = r;
      break;
    }
  }
  if (pivot == 2 * n_) {
    const std::uint32_t scratch = 2 * n_;
    for (std::uint32_t w = 0; w < words_; ++w) {
      xs_[static_cast<std::size_t>(scratch) * words_ + w] = 0;
      zs_[static_cast<std::size_t>(scratch) * words_ + w] = 0;
    }
    signs_[scratch] = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (x_bit(i, q)) rowmul(scratch, i + n_);
    }
    return signs_[scratch] != 0;
  }

  for (std::uint32_t r = 0; r < 2 * n_; ++r) {
    if (r != pivot && r != pivot - n_ && x_bit(r, q)) rowmul(r, pivot);
  }
  const std::size_t dst = static_cast<std::size_t>(pivot - n_) * words_;
  const std::size_t src = static_cast<std::size_t>(pivot) * words_;
  for (std::uint32_t w = 0; w < words_; ++w) {
    xs_[dst + w] = xs_[src + w];
    zs_[dst + w] = zs_[src + w];
    xs_[src + w] = 0;
    zs_[src + w] = 0;
  }
  signs_[pivot - n_] = signs_[pivot];
  zs_[word(pivot, q)] |= bit(q);
  signs_[pivot] = random_outcome ? 1 : 0;
  return random_outcome;
}

bool Tableau::measure_z(std::uint32_t q, RandomStream& rng) {
  if (is_deterministic(q)) return measure_z(q, false);
  return measure_z(q, random_bit(rng));
}

void Tableau::reset(std::uint32_t q, bool random_outcome) {
  if (measure_z(q, random_outcome)) x(q);
}

void Tableau::reset(std::uint32_t q, RandomStream& rng) {
  if (measure_z(q, rng)) x(q);
}

std::optional<bool> Tableau::apply(const Gate& g, RandomStream& rng) {
  switch (g.kind) {
    case GateKind::H: h(g.q0); break;
    case GateKind::X: x(g.q0); break;
    case GateKind::Y: y(g.q0); break;
    case GateKind::Z: z(g.q0); break;
    case GateKind::S: s(g.q0); break;
    case GateKind::CNOT: cnot(g.q0, g.q1); break;
    case GateKind::SWAP: swap(g.q0, g.q1); break;
    case GateKind::MEASURE_Z: return measure_z(g.q0, rng);
    case GateKind::RESET: reset(g.q0, rng); break;
  }
  return std::nullopt;
}

bool Tableau::rows_anticommute(std::uint32_t a, std::uint32_t b) const {
  unsigned parity = 0;
  for (std::uint32_t w = 0; w < words_; ++w) {
    const std::size_t ia = static_cast<std::size_t>(a) * words_ + w;
    const std::size_t ib = static_cast<std::size_t>(b) * words_ + w;
    parity ^= static_cast<unsigned>(std::popcount((xs_[ia] & zs_[ib]) ^ (zs_[ia] & xs_[ib]))) & 1u;
  }
  return parity != 0;
}

bool Tableau::verify() const {
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (j > i && rows_anticommute(n_ + i, n_ + j)) return false;
      if (rows_anticommute(i, n_ + j) != (i == j)) return false;
    }
  }
  return true;
}

std::string Tableau::row_string(std::uint32_t row) const {
  std::string out(1, sign(row) ? '-' : '+');
  for (std::uint32_t q = 0; q < n_; ++q) {
    const bool xb = x_bit(row, q), zb = z_bit(row, q);
    out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return out;
}

std::vector<std::string> Tableau::canonical_stabilizers() const {
  Tableau t = *this;
  auto swap_rows = [&t](std::uint32_t a, std::uint32_t b) {
    if (a == b) return;
    for (std::uint32_t w = 0; w < t.words_; ++w) {
      std::swap(t.xs_[static_cast<std::size_t>(a) * t.words_ + w], t.xs_[static_cast<std::size_t>(b) * t.words_ + w]);
      std::swap(t.zs_[static_cast<std::size_t>(a) * t.words_ + w], t.zs_[static_cast<std::size_t>(b) * t.words_ + w]);
    }
    std::swap(t.signs_[a], t.signs_[b]);
  };
  const std::uint32_t first = n_, end = 2 * n_;
  std::uint32_t next = first;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::uint32_t q = 0; q < n_ && next < end; ++q) {
      auto has = [&](std::uint32_t r) { return pass == 0 ? t.x_bit(r, q) : t.z_bit(r, q); };
      std::uint32_t pivot = end;
      for (std::uint32_t r = next; r < end; ++r) {
        if (has(r)) {
          pivot = r;
          break;
        }
      }
      if (pivot == end) continue;
      swap_rows(pivot, next);
      for (std::uint32_t r = first; r < end; ++r) {
        if (r != next && has(r)) t.rowmul(r, next);
      }
      ++next;
    }
  }
  std::vector<std::string> out;
  out.reserve(n_);
  for (std::uint32_t r = first; r < end; ++r) out.push_back(t.row_string(r));
  return out;
}

}  // namespace qrad::sim
