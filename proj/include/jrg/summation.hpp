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

#include <cmath>
#include <cstddef>
#include <span>

namespace jrg {

// Neumaier's variant of Kahan compensated summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct SampleMoments {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased, N - 1 denominator; 0 when count < 2

  double standard_error() const noexcept {
    return count == 0 ? 0.0 : std::sqrt(variance / static_cast<double>(count));
  }
};

// Two-pass mean and unbiased variance.
inline SampleMoments sample_moments(std::span<const double> xs) noexcept {
  SampleMoments m;
  m.count = xs.size();
  if (xs.empty()) return m;
  CompensatedSum s;
  for (double x : xs) s += x;
  m.mean = s.value() / static_cast<double>(xs.size());
  if (xs.size() < 2) return m;
  CompensatedSum ss;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.variance = ss.value() / static_cast<double>(xs.size() - 1);
  return m;
}

}  // namespace jrg
