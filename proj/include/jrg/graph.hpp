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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jrg/rng.hpp"

namespace jrg {

using Vertex = std::size_t;  // 0-based inside the library
using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

// Undirected simple graph stored as n bit-rows of the adjacency matrix.
// Symmetric with a zero diagonal; immutable once built.
class Graph {
 public:
  class Builder;

  std::size_t n() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  std::span<const Word> row(Vertex i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }

  bool has_edge(Vertex i, Vertex j) const noexcept {
    return (bits_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }

  std::size_t degree(Vertex i) const noexcept {
    std::size_t d = 0;
    for (Word w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::uint64_t edge_count() const noexcept;

  // Unordered edges (i < j), 0-based, in row-major order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::size_t n, std::vector<Word> bits)
      : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(std::move(bits)) {}

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

class Graph::Builder {
 public:
  explicit Builder(std::size_t n);

  // Idempotent; i != j assumed.
  void add_edge(Vertex i, Vertex j) noexcept {
    bits_[i * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
    bits_[j * words_ + i / kWordBits] |= Word{1} << (i % kWordBits);
  }

  Graph build() && { return Graph(n_, std::move(bits_)); }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> bits_;
};

// Below this p, sample_gnp walks the pair sequence with geometric jumps.
inline constexpr double kGeometricSkipBelow = 0.05;

// G(n, p) realization for one trial of a seeded experiment. Pairs are
// enumerated row-major over i < j.
Graph sample_gnp(std::size_t n, double p, Seed seed, std::uint64_t trial = 0);

// One Bernoulli draw per pair: pair e of the row-major enumeration is present
// iff bernoulli(hash_at(stream_key(seed, trial), e), p).
Graph sample_gnp_per_pair(std::size_t n, double p, Seed seed,
                          std::uint64_t trial = 0);

// Geometric skipping over the pair sequence. Same law as the per-pair path,
// different bits for the same seed.
Graph sample_gnp_skipping(std::size_t n, double p, Seed seed,
                          std::uint64_t trial = 0);

// Endpoints are 1-based, matching the edge-list file format.
Graph from_edge_list(std::size_t n,
                     std::span<const std::pair<std::size_t, std::size_t>> edges);

// Degree of a 0-based vertex with range checking.
std::size_t degree(const Graph& g, Vertex i);

// Edge-list text format: "i j" per line, 1-based; '#' lines are comments.
// A "# n=<count>" comment records the vertex count.
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> header_comments = {});

// `n_override` (if nonzero) wins over a "# n=" comment, which wins over the
// largest endpoint seen.
Graph read_edge_list(std::istream& in, std::size_t n_override = 0);

}  // namespace jrg
