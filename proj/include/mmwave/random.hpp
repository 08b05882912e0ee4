// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mmwave-indoor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace mmwave {

/// Philox4x32-10 counter-based block function (Salmon et al., SC'11).
/// Maps a 128-bit counter and a 64-bit key to 128 pseudo-random bits.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
      }
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }
};

/// SplitMix64 finaliser, used to fold identifiers into keys and stream ids.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Folds a sequence of identifiers (grid coordinates, scenario index, ...) into one 64-bit tag.
constexpr std::uint64_t combine_tags(std::uint64_t a, std::uint64_t b) { return mix64(a ^ mix64(b + 0x632BE59BD9B4E019ull)); }

namespace detail {

/// Ziggurat tables for the standard normal (128 layers, Doornik's ZIGNOR layout).
struct NormalZiggurat {
  static constexpr int kLayers = 128;
  static constexpr double kTailStart = 3.442619855899;
  static constexpr double kLayerArea = 9.91256303526217e-3;

  std::array<double, kLayers + 1> x{};
  std::array<double, kLayers> ratio{};

  NormalZiggurat() {
    double f = std::exp(-0.5 * kTailStart * kTailStart);
    x[0] = kLayerArea / f;
    x[1] = kTailStart;
    x[kLayers] = 0.0;
    for (int i = 2; i < kLayers; ++i) {
      x[i] = std::sqrt(-2.0 * std::log(kLayerArea / x[i - 1] + f));
      f = std::exp(-0.5 * x[i] * x[i]);
    }
    for (int i = 0; i < kLayers; ++i) ratio[i] = x[i + 1] / x[i];
  }

  static const NormalZiggurat& instance() {
    static const NormalZiggurat tables;
    return tables;
  }
};

}  // namespace detail

/// Independent random substream addressed by (seed, stream id). The stream's
/// xoshiro256++ state is keyed by a Philox4x32-10 block of (seed, stream id),
/// so every draw is a pure function of (seed, stream id, draw index) and
/// streams can be consumed on any thread in any order.
///
/// Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream_id) {
    const Philox4x32::Key key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    const auto lo = static_cast<std::uint32_t>(stream_id);
    const auto hi = static_cast<std::uint32_t>(stream_id >> 32);
    const Philox4x32::Counter a = Philox4x32::block({0u, 0u, lo, hi}, key);
    const Philox4x32::Counter b = Philox4x32::block({1u, 0u, lo, hi}, key);
    state_ = {(std::uint64_t{a[1]} << 32) | a[0], (std::uint64_t{a[3]} << 32) | a[2],
              (std::uint64_t{b[1]} << 32) | b[0], (std::uint64_t{b[3]} << 32) | b[2]};
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 0x9E3779B97F4A7C15ull;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe as a logarithm argument.
  double uniform_open_zero() { return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal by the ziggurat method.
  double normal() {
    const auto& z = detail::NormalZiggurat::instance();
    for (;;) {
      const std::uint64_t bits = (*this)();
      const double u = 2.0 * (static_cast<double>(bits >> 11) * 0x1.0p-53) - 1.0;
      const auto i = static_cast<int>(bits & 0x7F);
      if (std::abs(u) < z.ratio[i]) return u * z.x[i];
      if (i == 0) return normal_tail(u < 0.0);
      const double x = u * z.x[i];
      const double f0 = std::exp(-0.5 * (z.x[i] * z.x[i] - x * x));
      const double f1 = std::exp(-0.5 * (z.x[i + 1] * z.x[i + 1] - x * x));
      if (f1 + uniform() * (f0 - f1) < 1.0) return x;
    }
  }

  /// Gamma(shape, scale) via Marsaglia-Tsang; shapes below one use the
  /// U^(1/shape) boost.
  double gamma(double shape, double scale) {
    if (shape < 1.0) {
      const double boosted = gamma(shape + 1.0, 1.0);
      return scale * boosted * std::pow(uniform_open_zero(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = 0.0;
      double v = 0.0;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_open_zero();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  double normal_tail(bool negative) {
    constexpr double r = detail::NormalZiggurat::kTailStart;
    double x = 0.0;
    double y = 0.0;
    do {
      x = std::log(uniform_open_zero()) / r;
      y = std::log(uniform_open_zero());
    } while (-2.0 * y < x * x);
    return negative ? x - r : r - x;
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace mmwave
