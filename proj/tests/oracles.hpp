// Copyright 2026 The jrg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Brute-force reference implementations. They share no code with the
// library beyond Graph::has_edge and are deliberately slow.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "jrg/graph.hpp"

namespace jrg::oracle {

struct NaivePair {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  double j = 0.0;
};

inline NaivePair pair_stats(const Graph& g, Vertex i, Vertex j, double p) {
  NaivePair r;
  for (Vertex k = 0; k < g.n(); ++k) {
    if (k == i || k == j) continue;
    const bool a = g.has_edge(i, k);
    const bool b = g.has_edge(j, k);
    r.s += (a && b) ? 1 : 0;
    r.t += (a || b) ? 1 : 0;
  }
  r.j = r.t == 0 ? p / (2.0 - p) : static_cast<double>(r.s) / r.t;
  return r;
}

// sum_{i<j} sum_{k != i,j} I_ij I_ik, written out literally.
inline std::uint64_t literal_path2(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex i = 0; i < g.n(); ++i) {
    for (Vertex j = i + 1; j < g.n(); ++j) {
      for (Vertex k = 0; k < g.n(); ++k) {
        if (k == i || k == j) continue;
        if (g.has_edge(i, j) && g.has_edge(i, k)) ++total;
      }
    }
  }
  return total;
}

// Number of paths u-k-v with u < v.
inline std::uint64_t counted_two_paths(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex k = 0; k < g.n(); ++k) {
    for (Vertex u = 0; u < g.n(); ++u) {
      for (Vertex v = u + 1; v < g.n(); ++v) {
        if (u != k && v != k && g.has_edge(k, u) && g.has_edge(k, v)) ++total;
      }
    }
  }
  return total;
}

inline double average_jaccard(const Graph& g, double p) {
  double sum = 0.0;
  for (Vertex i = 0; i < g.n(); ++i) {
    for (Vertex j = i + 1; j < g.n(); ++j) sum += oracle::pair_stats(g, i, j, p).j;
  }
  return sum / (0.5 * static_cast<double>(g.n()) * static_cast<double>(g.n() - 1));
}

// Mean and variance of J_12 over every configuration of the 2(n-2) edges
// joining vertices 1 and 2 to the rest.
struct EnumeratedMoments {
  double mean = 0.0;
  double variance = 0.0;
};

inline EnumeratedMoments enumerate_pair(std::uint64_t n, double p) {
  const unsigned m = static_cast<unsigned>(n - 2);
  const std::uint64_t configs = std::uint64_t{1} << (2 * m);
  double e1 = 0.0;
  double e2 = 0.0;
  for (std::uint64_t c = 0; c < configs; ++c) {
    const std::uint64_t row1 = c & ((std::uint64_t{1} << m) - 1);
    const std::uint64_t row2 = c >> m;
    unsigned s = 0, t = 0, ones = 0;
    for (unsigned k = 0; k < m; ++k) {
      const bool a = (row1 >> k) & 1;
      const bool b = (row2 >> k) & 1;
      s += a && b;
      t += a || b;
      ones += a + b;
    }
    const double prob = std::pow(p, ones) * std::pow(1.0 - p, 2 * m - ones);
    const double j = t == 0 ? p / (2.0 - p) : static_cast<double>(s) / t;
    e1 += prob * j;
    e2 += prob * j * j;
  }
  return {e1, e2 - e1 * e1};
}

// Plain-loop binomial pmf via the multiplicative recurrence; small n only.
inline double binomial_pmf(unsigned n, double q, unsigned m) {
  double c = 1.0;
  for (unsigned k = 1; k <= m; ++k) c = c * (n - m + k) / k;
  return c * std::pow(q, m) * std::pow(1.0 - q, n - m);
}

}  // namespace jrg::oracle
