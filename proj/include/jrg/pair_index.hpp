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

// Jaccard index of vertex pairs, its all-pairs average, and the quantities
// of the first-order expansion of the average (edge count, path sums,
// remainder).
//
// For a pair (i, j):
//   S = #{k != i,j : k ~ i and k ~ j}     common neighbours
//   T = #{k != i,j : k ~ i or  k ~ j}     union neighbourhood
//   J = S / T, and J = p / (2 - p) when T = 0.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

#include "jrg/graph.hpp"

namespace jrg {

struct PairStats {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  double j = 0.0;
  friend bool operator==(const PairStats&, const PairStats&) = default;
};

// J with the empty-union convention applied.
constexpr double jaccard_from_counts(std::uint32_t s, std::uint32_t t, double p) noexcept {
  return t == 0 ? p / (2.0 - p) : static_cast<double>(s) / static_cast<double>(t);
}

// Word-wise AND/OR + popcount over two adjacency rows. Bit i of row i and
// bit j of row j are zero, so the AND needs no masking; the OR picks up
// bits i and j exactly when the edge {i,j} is present.
inline PairStats pair_counts(std::span<const Word> row_i, std::span<const Word> row_j,
                             bool edge_ij, double p) noexcept {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  for (std::size_t w = 0; w < row_i.size(); ++w) {
    s += static_cast<std::uint32_t>(std::popcount(row_i[w] & row_j[w]));
    t += static_cast<std::uint32_t>(std::popcount(row_i[w] | row_j[w]));
  }
  if (edge_ij) t -= 2;
  return {s, t, jaccard_from_counts(s, t, p)};
}

// Throws ParameterError for i == j, out-of-range vertices or p outside [0,1].
PairStats pair_stats(const Graph& g, Vertex i, Vertex j, double p);

// Mean of J over all n(n-1)/2 pairs; requires n >= 3.
double average_jaccard(const Graph& g, double p);

std::uint64_t edge_count(const Graph& g) noexcept;

// Literal double sum  sum_{i<j} sum_{k != i,j} I_ij I_ik, evaluated as
// sum over edges (i<j) of (d_i - 1). Weights a 2-path by how many of its
// endpoints have a larger index than its centre; it is *not* the number of
// 2-paths (a 3-leaf star centred at vertex 1 gives 6, not 3).
std::uint64_t path2_sum(const Graph& g);

// Number of paths of length two, sum_k C(d_k, 2). Same expectation as
// path2_sum; this is the count that makes the average decomposition exact.
std::uint64_t two_path_count(const Graph& g) noexcept;

// (2-p) I_ik I_jk - p (I_ik or I_jk); mean 0, variance 2p^2(1-p)(2-p).
constexpr double v_statistic(bool i_ik, bool i_jk, double p) noexcept {
  return (2.0 - p) * static_cast<double>(i_ik && i_jk) -
         p * static_cast<double>(i_ik || i_jk);
}

// Second-order remainder of J about p/(2-p); zero when T = 0.
// Requires p in (0,1], n >= 3.
double remainder_from_counts(std::uint32_t s, std::uint32_t t, std::size_t n, double p);
double remainder(const Graph& g, Vertex i, Vertex j, double p);

struct GraphSummary {
  double j_avg = 0.0;
  std::uint64_t p1 = 0;      // edge count
  std::uint64_t p2 = 0;      // literal double sum, see path2_sum
  std::uint64_t paths2 = 0;  // 2-path count, see two_path_count
  double r_sum = 0.0;        // sum of remainders over i < j
};

// Requires n >= 3, p in (0,1].
GraphSummary graph_summary(const Graph& g, double p);

// Right-hand side of
//   J_n = p/(2-p) - 4 P1 / (n(n-1)(2-p)^2)
//         + 4 P2 / (n(n-1)(n-2) p (2-p)^2) + 2 R_n / (n(n-1))
// for a caller-chosen path statistic P2.
double decomposition_rhs(const GraphSummary& s, std::size_t n, double p,
                         std::uint64_t path_statistic) noexcept;

// |lhs - rhs| / max(1, |lhs|) with the 2-path count as P2.
double decomposition_residual(const GraphSummary& s, std::size_t n, double p) noexcept;

// Streams (i, j, PairStats) over all pairs i < j in row-major order without
// materialising the O(n^2) table.
class PairRange {
 public:
  struct Entry {
    Vertex i;
    Vertex j;
    PairStats stats;
  };

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Entry;
    using difference_type = std::ptrdiff_t;
    using pointer = const Entry*;
    using reference = const Entry&;

    iterator() = default;
    reference operator*() const noexcept { return entry_; }
    pointer operator->() const noexcept { return &entry_; }
    iterator& operator++() noexcept {
      advance();
      return *this;
    }
    iterator operator++(int) noexcept {
      auto copy = *this;
      advance();
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.entry_.i == b.entry_.i && a.entry_.j == b.entry_.j;
    }

   private:
    friend class PairRange;
    iterator(const Graph* g, double p, Vertex i, Vertex j) noexcept;
    void load() noexcept;
    void advance() noexcept;

    const Graph* g_ = nullptr;
    double p_ = 0.0;
    Entry entry_{0, 0, {}};
  };

  PairRange(const Graph& g, double p) : g_(&g), p_(p) {}
  iterator begin() const noexcept;
  iterator end() const noexcept;

 private:
  const Graph* g_;
  double p_;
};

inline PairRange all_pairs(const Graph& g, double p) { return PairRange(g, p); }

}  // namespace jrg
