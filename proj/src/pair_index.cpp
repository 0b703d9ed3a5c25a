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

#include "jrg/pair_index.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jrg/errors.hpp"
#include "jrg/summation.hpp"

namespace jrg {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0,1]");
}

void check_positive_probability(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw ParameterError("p must lie in (0,1]; the remainder is undefined at p=0");
  }
}

void check_pair(const Graph& g, Vertex i, Vertex j) {
  if (i >= g.n() || j >= g.n()) {
    throw ParameterError("vertex out of range for n=" + std::to_string(g.n()));
  }
  if (i == j) throw ParameterError("pair statistics need distinct vertices");
}

}  // namespace

PairStats pair_stats(const Graph& g, Vertex i, Vertex j, double p) {
  check_pair(g, i, j);
  check_probability(p);
  return pair_counts(g.row(i), g.row(j), g.has_edge(i, j), p);
}

double average_jaccard(const Graph& g, double p) {
  check_probability(p);
  const std::size_t n = g.n();
  if (n < 3) throw ParameterError("average Jaccard index needs n >= 3");
  // Plain row sums, compensated across rows.
  CompensatedSum sum;
  for (Vertex i = 0; i + 1 < n; ++i) {
    const auto ri = g.row(i);
    double row_sum = 0.0;
    for (Vertex j = i + 1; j < n; ++j) {
      row_sum += pair_counts(ri, g.row(j), g.has_edge(i, j), p).j;
    }
    sum += row_sum;
  }
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  return sum.value() / pairs;
}

std::uint64_t edge_count(const Graph& g) noexcept { return g.edge_count(); }

std::uint64_t path2_sum(const Graph& g) {
  if (g.n() < 3) throw ParameterError("path2_sum needs n >= 3");
  std::uint64_t total = 0;
  for (const auto& [i, j] : g.edges()) total += g.degree(i) - 1;
  return total;
}

std::uint64_t two_path_count(const Graph& g) noexcept {
  std::uint64_t total = 0;
  for (Vertex k = 0; k < g.n(); ++k) {
    const std::uint64_t d = g.degree(k);
    total += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return total;
}

double remainder_from_counts(std::uint32_t s, std::uint32_t t, std::size_t n, double p) {
  check_positive_probability(p);
  if (n < 3) throw ParameterError("remainder needs n >= 3");
  if (t == 0) return 0.0;
  const double q = 2.0 - p;
  const double scale = static_cast<double>(n - 2) * p * q;
  const double linear = (q * s - p * t) / (scale * q);
  return linear * (scale / static_cast<double>(t) - 1.0);
}

double remainder(const Graph& g, Vertex i, Vertex j, double p) {
  check_positive_probability(p);
  const PairStats st = pair_stats(g, i, j, p);
  return remainder_from_counts(st.s, st.t, g.n(), p);
}

GraphSummary graph_summary(const Graph& g, double p) {
  check_positive_probability(p);
  const std::size_t n = g.n();
  if (n < 3) throw ParameterError("graph summary needs n >= 3");

  CompensatedSum j_sum;
  CompensatedSum r_sum;
  for (Vertex i = 0; i + 1 < n; ++i) {
    const auto ri = g.row(i);
    for (Vertex j = i + 1; j < n; ++j) {
      const PairStats st = pair_counts(ri, g.row(j), g.has_edge(i, j), p);
      j_sum += st.j;
      r_sum += remainder_from_counts(st.s, st.t, n, p);
    }
  }
  GraphSummary out;
  out.j_avg = j_sum.value() / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
  out.p1 = g.edge_count();
  out.p2 = path2_sum(g);
  out.paths2 = two_path_count(g);
  out.r_sum = r_sum.value();
  return out;
}

double decomposition_rhs(const GraphSummary& s, std::size_t n, double p,
                         std::uint64_t path_statistic) noexcept {
  const double nd = static_cast<double>(n);
  const double pairs2 = nd * (nd - 1.0);  // n(n-1)
  const double q = 2.0 - p;
  CompensatedSum rhs;
  rhs += p / q;
  rhs += -4.0 * static_cast<double>(s.p1) / (pairs2 * q * q);
  rhs += 4.0 * static_cast<double>(path_statistic) / (pairs2 * (nd - 2.0) * p * q * q);
  rhs += 2.0 * s.r_sum / pairs2;
  return rhs.value();
}

double decomposition_residual(const GraphSummary& s, std::size_t n, double p) noexcept {
  const double rhs = decomposition_rhs(s, n, p, s.paths2);
  return std::fabs(s.j_avg - rhs) / std::max(1.0, std::fabs(s.j_avg));
}

PairRange::iterator::iterator(const Graph* g, double p, Vertex i, Vertex j) noexcept
    : g_(g), p_(p), entry_{i, j, {}} {
  load();
}

void PairRange::iterator::load() noexcept {
  if (entry_.j < g_->n()) {
    entry_.stats = pair_counts(g_->row(entry_.i), g_->row(entry_.j),
                               g_->has_edge(entry_.i, entry_.j), p_);
  }
}

void PairRange::iterator::advance() noexcept {
  if (++entry_.j == g_->n() && entry_.i + 2 < g_->n()) {
    ++entry_.i;
    entry_.j = entry_.i + 1;
  }
  load();
}

PairRange::iterator PairRange::begin() const noexcept {
  if (g_->n() < 2) return end();
  return iterator(g_, p_, 0, 1);
}

PairRange::iterator PairRange::end() const noexcept {
  const Vertex n = g_->n();
  return iterator(g_, p_, n < 2 ? 0 : n - 2, n);
}

}  // namespace jrg
