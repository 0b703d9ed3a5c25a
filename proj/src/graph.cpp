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

#include "jrg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "jrg/errors.hpp"

namespace jrg {
namespace {

void check_params(std::size_t n, double p) {
  if (n < 2) throw ParameterError("graph needs n >= 2, got " + std::to_string(n));
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0,1]");
  }
}

}  // namespace

std::uint64_t Graph::edge_count() const noexcept {
  std::uint64_t twice = 0;
  for (Word w : bits_) twice += static_cast<std::uint64_t>(std::popcount(w));
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex i = 0; i < n_; ++i) {
    const auto r = row(i);
    // Only bits above the diagonal.
    for (std::size_t w = (i + 1) / kWordBits; w < words_; ++w) {
      Word bits = r[w];
      if (w == (i + 1) / kWordBits) bits &= ~Word{0} << ((i + 1) % kWordBits);
      while (bits != 0) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        out.emplace_back(i, w * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

Graph::Builder::Builder(std::size_t n)
    : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n * words_, 0) {}

Graph sample_gnp_per_pair(std::size_t n, double p, Seed seed, std::uint64_t trial) {
  check_params(n, p);
  Graph::Builder b(n);
  if (p == 0.0) return std::move(b).build();
  const std::uint64_t key = stream_key(seed, trial);
  std::uint64_t e = 0;
  for (Vertex i = 0; i + 1 < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++e) {
      if (bernoulli(hash_at(key, e), p)) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

Graph sample_gnp_skipping(std::size_t n, double p, Seed seed, std::uint64_t trial) {
  check_params(n, p);
  Graph::Builder b(n);
  if (p == 0.0) return std::move(b).build();
  if (p == 1.0) return sample_gnp_per_pair(n, p, seed, trial);

  const double total = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const double log_q = std::log1p(-p);
  // Separate stream from the per-pair path so the two are never confused.
  CounterRng rng(mix64(stream_key(seed, trial) ^ 0x5bd1e9955bd1e995ULL));

  double pos = -1.0;
  Vertex i = 0;
  double row_start = 0.0;
  for (;;) {
    // Number of failures before the next success.
    const double skip = std::floor(std::log(rng.uniform_pos()) / log_q);
    pos += skip + 1.0;
    if (!(pos < total)) break;
    while (pos >= row_start + static_cast<double>(n - 1 - i)) {
      row_start += static_cast<double>(n - 1 - i);
      ++i;
    }
    const auto j = i + 1 + static_cast<Vertex>(pos - row_start);
    b.add_edge(i, j);
  }
  return std::move(b).build();
}

Graph sample_gnp(std::size_t n, double p, Seed seed, std::uint64_t trial) {
  if (p > 0.0 && p < kGeometricSkipBelow) return sample_gnp_skipping(n, p, seed, trial);
  return sample_gnp_per_pair(n, p, seed, trial);
}

Graph from_edge_list(std::size_t n,
                     std::span<const std::pair<std::size_t, std::size_t>> edges) {
  if (n < 2) throw ParameterError("graph needs n >= 2, got " + std::to_string(n));
  Graph::Builder b(n);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside [1," + std::to_string(n) + "]");
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    b.add_edge(u - 1, v - 1);
  }
  return std::move(b).build();
}

std::size_t degree(const Graph& g, Vertex i) {
  if (i >= g.n()) {
    throw ParameterError("vertex " + std::to_string(i) + " out of range for n=" +
                         std::to_string(g.n()));
  }
  return g.degree(i);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> header_comments) {
  for (const auto& line : header_comments) out << "# " << line << '\n';
  out << "# n=" << g.n() << '\n';
  for (const auto& [i, j] : g.edges()) out << (i + 1) << ' ' << (j + 1) << '\n';
  if (!out) throw IoError("failed to write edge list");
}

Graph read_edge_list(std::istream& in, std::size_t n_override) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t n_header = 0;
  std::size_t max_endpoint = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto pos = line.find("n=", first);
      if (pos != std::string::npos && line.find_first_not_of(" \t#", first) == pos) {
        const char* begin = line.data() + pos + 2;
        std::from_chars(begin, line.data() + line.size(), n_header);
      }
      continue;
    }
    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    if (!(fields >> u >> v) || u < 1 || v < 1) {
      throw ValidationError("malformed edge on line " + std::to_string(line_no) +
                            ": '" + line + "'");
    }
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    max_endpoint = std::max({max_endpoint, edges.back().first, edges.back().second});
  }
  std::size_t n = n_override != 0 ? n_override : n_header;
  if (n == 0) n = max_endpoint;
  return from_edge_list(n, edges);
}

}  // namespace jrg
