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

#include "qrad/decode/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qrad::decode {
namespace {

// Port of Joris van Rantwijk's reference implementation of the weighted blossom
// algorithm (Galil 1986). Edge endpoints are numbered 2k and 2k+1 for edge k; a
// "p" variable below is always such an endpoint index. Label values: 0 free,
// 1 S (outer), 2 T (inner), 5 S-visited during scanBlossom.
class Blossom {
 public:
  Blossom(int nvertex, std::span<const WeightedEdge> edges, bool maxcard)
      : nv_(nvertex), ne_(static_cast<int>(edges.size())), maxcard_(maxcard), edges_(edges) {
    std::int64_t maxweight = 0;
    for (const auto& e : edges) maxweight = std::max(maxweight, e.weight);
    endpoint_.resize(2 * ne_);
    neighbend_.resize(nv_);
    for (int k = 0; k < ne_; ++k) {
      endpoint_[2 * k] = static_cast<int>(edges[k].u);
      endpoint_[2 * k + 1] = static_cast<int>(edges[k].v);
      neighbend_[edges[k].u].push_back(2 * k + 1);
      neighbend_[edges[k].v].push_back(2 * k);
    }
    mate_.assign(nv_, -1);
    label_.assign(2 * nv_, 0);
    labelend_.assign(2 * nv_, -1);
    inblossom_.resize(nv_);
    for (int v = 0; v < nv_; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * nv_, -1);
    blossomchilds_.assign(2 * nv_, {});
    blossombase_.assign(2 * nv_, -1);
    for (int v = 0; v < nv_; ++v) blossombase_[v] = v;
    blossomendps_.assign(2 * nv_, {});
    bestedge_.assign(2 * nv_, -1);
    blossombestedges_.assign(2 * nv_, {});
    has_bestedges_.assign(2 * nv_, false);
    for (int b = nv_; b < 2 * nv_; ++b) unused_.push_back(b);
    dualvar_.assign(2 * nv_, 0);
    for (int v = 0; v < nv_; ++v) dualvar_[v] = maxweight;
    allowedge_.assign(ne_, false);
  }

  std::vector<std::int64_t> solve() {
    for (int stage = 0; stage < nv_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = nv_; b < 2 * nv_; ++b) {
        blossombestedges_[b].clear();
        has_bestedges_[b] = false;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();
      for (int v = 0; v < nv_; ++v) {
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
      }
      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            const int k = p / 2;
            const int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            std::int64_t kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = true;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              const int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int deltatype = -1;
        std::int64_t delta = 0;
        int deltaedge = -1;
        int deltablossom = -1;
        if (!maxcard_) {
          deltatype = 1;
          delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_);
        }
        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            const auto d = slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * nv_; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            const auto d = slack(bestedge_[b]) / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          deltatype = 1;
          delta = std::max<std::int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_));
        }

        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 1) {
            dualvar_[v] -= delta;
          } else if (label_[inblossom_[v]] == 2) {
            dualvar_[v] += delta;
          }
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) {
              dualvar_[b] += delta;
            } else if (label_[b] == 2) {
              dualvar_[b] -= delta;
            }
          }
        }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = true;
          int i = static_cast<int>(edges_[deltaedge].u);
          if (label_[inblossom_[i]] == 0) i = static_cast<int>(edges_[deltaedge].v);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = true;
          queue_.push_back(static_cast<int>(edges_[deltaedge].u));
        } else {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = nv_; b < 2 * nv_; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
          expand_blossom(b, true);
        }
      }
    }
    std::vector<std::int64_t> out(nv_, -1);
    for (int v = 0; v < nv_; ++v) {
      if (mate_[v] >= 0) out[v] = endpoint_[mate_[v]];
    }
    return out;
  }

 private:
  std::int64_t slack(int k) const {
    const auto& e = edges_[k];
    return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < nv_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  int child_at(int b, int j) const {
    const int len = static_cast<int>(blossomchilds_[b].size());
    return blossomchilds_[b][((j % len) + len) % len];
  }
  int endp_at(int b, int j) const {
    const int len = static_cast<int>(blossomendps_[b].size());
    return blossomendps_[b][((j % len) + len) % len];
  }

  void assign_label(int w, int t, int p) {
    const int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      leaves(b, queue_);
    } else if (t == 2) {
      const int base = blossombase_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = static_cast<int>(edges_[k].u);
    int w = static_cast<int>(edges_[k].v);
    const int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    const int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto& path = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int leaf : leaves(b)) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }

    std::vector<int> bestedgeto(2 * nv_, -1);
    for (int sub : path) {
      std::vector<int> candidates;
      if (!has_bestedges_[sub]) {
        for (int leaf : leaves(sub)) {
          for (int p : neighbend_[leaf]) candidates.push_back(p / 2);
        }
      } else {
        candidates = blossombestedges_[sub];
      }
      for (int kk : candidates) {
        int i = static_cast<int>(edges_[kk].u);
        int j = static_cast<int>(edges_[kk].v);
        if (inblossom_[j] == b) std::swap(i, j);
        const int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
          bestedgeto[bj] = kk;
        }
      }
      blossombestedges_[sub].clear();
      has_bestedges_[sub] = false;
      bestedge_[sub] = -1;
    }
    blossombestedges_[b].clear();
    for (int kk : bestedgeto) {
      if (kk != -1) blossombestedges_[b].push_back(kk);
    }
    has_bestedges_[b] = true;
    bestedge_[b] = -1;
    for (int kk : blossombestedges_[b]) {
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
    }
  }

  void expand_blossom(int b, bool endstage) {
    const std::vector<int> children = blossomchilds_[b];
    for (int s : children) {
      blossomparent_[s] = -1;
      if (s < nv_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int leaf : leaves(s)) inblossom_[leaf] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(children.begin(), children.end(), entrychild) - children.begin());
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= static_cast<int>(children.size());
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[endp_at(b, j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[endp_at(b, j - endptrick) / 2] = true;
        j += jstep;
        p = endp_at(b, j - endptrick) ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      int bv = child_at(b, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (child_at(b, j) != entrychild) {
        bv = child_at(b, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int found = -1;
        for (int leaf : leaves(bv)) {
          if (label_[leaf] != 0) {
            found = leaf;
            break;
          }
        }
        if (found >= 0) {
          label_[found] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(found, 2, labelend_[found]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = false;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nv_) augment_blossom(t, v);
    const auto& children = blossomchilds_[b];
    const int i = static_cast<int>(std::find(children.begin(), children.end(), t) - children.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= static_cast<int>(children.size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = child_at(b, j);
      const int p = endp_at(b, j - endptrick) ^ endptrick;
      if (t >= nv_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = child_at(b, j);
      if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(blossomchilds_[b].begin(), blossomchilds_[b].begin() + i, blossomchilds_[b].end());
    std::rotate(blossomendps_[b].begin(), blossomendps_[b].begin() + i, blossomendps_[b].end());
    blossombase_[b] = blossombase_[blossomchilds_[b][0]];
  }

  void augment_matching(int k) {
    const int ends[2][2] = {{static_cast<int>(edges_[k].u), 2 * k + 1}, {static_cast<int>(edges_[k].v), 2 * k}};
    for (const auto& [s0, p0] : ends) {
      int s = s0;
      int p = p0;
      while (true) {
        const int bs = inblossom_[s];
        if (bs >= nv_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        const int t = endpoint_[labelend_[bs]];
        const int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        const int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= nv_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int nv_;
  int ne_;
  bool maxcard_;
  std::span<const WeightedEdge> edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

std::vector<std::int64_t> max_weight_matching(std::uint32_t num_vertices, std::span<const WeightedEdge> edges,
                                              bool max_cardinality) {
  for (const auto& e : edges) {
    if (e.u >= num_vertices || e.v >= num_vertices || e.u == e.v) {
      throw std::invalid_argument("matching edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") invalid for " + std::to_string(num_vertices) + " vertices");
    }
  }
  if (num_vertices == 0) return {};
  return Blossom(static_cast<int>(num_vertices), edges, max_cardinality).solve();
}

DecodingGraph::DecodingGraph(std::uint32_t num_nodes)
    : n_(num_nodes), weights_(std::size_t{num_nodes} * num_nodes, kNoEdge), boundary_(num_nodes, kNoEdge) {}

void DecodingGraph::set_edge(std::uint32_t u, std::uint32_t v, std::int64_t weight) {
  if (u >= n_ || v >= n_ || u == v) throw std::invalid_argument("decoding graph edge out of range");
  if (weight < 0) throw std::invalid_argument("decoding graph weights must be nonnegative");
  weights_[u * n_ + v] = weights_[v * n_ + u] = weight;
}

void DecodingGraph::set_boundary(std::uint32_t u, std::int64_t weight) {
  if (u >= n_) throw std::invalid_argument("decoding graph node out of range");
  if (weight < 0) throw std::invalid_argument("decoding graph weights must be nonnegative");
  boundary_[u] = weight;
}

std::vector<std::pair<std::uint32_t, std::int64_t>> Matching::pairs() const {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  for (std::uint32_t u = 0; u < partner.size(); ++u) {
    if (partner[u] > static_cast<std::int64_t>(u)) out.emplace_back(u, partner[u]);
  }
  for (std::uint32_t u = 0; u < partner.size(); ++u) {
    if (partner[u] == kBoundary) out.emplace_back(u, kBoundary);
  }
  return out;
}

Matching mwpm(const DecodingGraph& graph) {
  const std::uint32_t n = graph.num_nodes();
  Matching result;
  result.partner.assign(n, Matching::kBoundary);
  if (n == 0) return result;

  // Expanded graph: node u's boundary copy; copies are mutually free to pair up.
  std::vector<std::uint32_t> copy_of(n, UINT32_MAX);
  std::uint32_t total = n;
  for (std::uint32_t u = 0; u < n; ++u) {
    if (graph.boundary(u) != DecodingGraph::kNoEdge) copy_of[u] = total++;
  }
  const std::uint32_t copies = total - n;
  if (total % 2 == 1 && copies > 0) ++total;  // lone padding copy

  std::vector<WeightedEdge> edges;
  std::int64_t max_w = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (graph.edge(u, v) != DecodingGraph::kNoEdge) {
        edges.push_back({u, v, graph.edge(u, v)});
      }
    }
    if (copy_of[u] != UINT32_MAX) edges.push_back({u, copy_of[u], graph.boundary(u)});
  }
  for (std::uint32_t a = n; a < total; ++a) {
    for (std::uint32_t b = a + 1; b < total; ++b) edges.push_back({a, b, 0});
  }
  for (const auto& e : edges) max_w = std::max(max_w, e.weight);
  // Maximising sum(C - w) over perfect matchings minimises sum(w).
  for (auto& e : edges) e.weight = max_w + 1 - e.weight;

  const auto mate = max_weight_matching(total, edges, true);
  for (std::uint32_t u = 0; u < total; ++u) {
    if (mate[u] < 0) throw std::runtime_error("decoding graph has no perfect matching");
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    const auto m = static_cast<std::uint32_t>(mate[u]);
    if (m < n) {
      result.partner[u] = m;
      if (u < m) result.cost += graph.edge(u, m);
    } else {
      result.partner[u] = Matching::kBoundary;
      result.cost += graph.boundary(u);
    }
  }
  return result;
}

}  // namespace qrad::decode
