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

// Counter-based randomness. Every random word is a pure function of
// (master seed, trial index, counter), so trials can run on any thread in
// any order and still reproduce bit-for-bit.

#pragma once

#include <cstdint>

namespace jrg {

struct Seed {
  std::uint64_t master = 0;
  friend bool operator==(const Seed&, const Seed&) = default;
};

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// Key of the independent stream owned by one trial.
constexpr std::uint64_t stream_key(Seed seed, std::uint64_t trial) noexcept {
  return mix64(seed.master ^ mix64((trial + 1) * kGoldenGamma));
}

// Word `index` of the stream `key`. This is SplitMix64 evaluated at an
// arbitrary position instead of sequentially.
constexpr std::uint64_t hash_at(std::uint64_t key, std::uint64_t index) noexcept {
  return mix64(key + (index + 1) * kGoldenGamma);
}

// 53-bit uniform in [0, 1).
constexpr double to_unit(std::uint64_t word) noexcept {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// Bernoulli(p) from one word; exact for p = 0 and p = 1.
constexpr bool bernoulli(std::uint64_t word, double p) noexcept {
  return to_unit(word) < p;
}

// Sequential view over one counter-based stream.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  constexpr explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}
  constexpr CounterRng(Seed seed, std::uint64_t trial) noexcept
      : key_(stream_key(seed, trial)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept { return hash_at(key_, counter_++); }

  // Uniform in [0, 1).
  constexpr double uniform() noexcept { return to_unit((*this)()); }
  // Uniform in (0, 1]; safe as a log argument.
  constexpr double uniform_pos() noexcept { return 1.0 - uniform(); }

  constexpr std::uint64_t key() const noexcept { return key_; }
  constexpr std::uint64_t position() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace jrg
