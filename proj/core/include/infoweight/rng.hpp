// Copyright 2026 The infoweight Authors.
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

// Portable pseudo-random generation with reproducible per-pair substreams.
//
// Generator:  xoshiro256** (Blackman & Vigna), state filled by SplitMix64.
// Substream:  SubstreamKey(seed, index) = Mix64(seed + Mix64(index + 1)),
//             where Mix64 is the SplitMix64 output finalizer; the key seeds
//             a SplitMix64 whose first four outputs form the xoshiro state.
// Uniform:    (next() >> 11) * 2^-53, in [0, 1).
// Normal:     Marsaglia polar method. Each accepted (u, v) yields u*f then
//             v*f, f = sqrt(-2 ln(s) / s). Rejected pairs consume two
//             uniforms. ln is PortableLog below, so the stream depends only
//             on IEEE-754 +, -, *, / and sqrt.

#include <array>
#include <cstdint>
#include <optional>

namespace infoweight {

std::uint64_t Mix64(std::uint64_t z);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t Next();

 private:
  std::uint64_t state_;
};

class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed);
  explicit Xoshiro256StarStar(const std::array<std::uint64_t, 4>& state)
      : s_(state) {}

  std::uint64_t Next();
  double NextUniform();

 private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t SubstreamKey(std::uint64_t seed, std::uint64_t index);

// Natural logarithm for finite x > 0 built from frexp and an atanh series.
// Accurate to a few ulp and bit-identical on any IEEE-754 platform.
double PortableLog(double x);

class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  // Standard normal variate.
  double Next();

 private:
  Xoshiro256StarStar engine_;
  std::optional<double> spare_;
};

}  // namespace infoweight
