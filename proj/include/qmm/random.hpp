// Copyright 2026 The QMM Authors
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

/**
 * @file
 * Seeded randomness: a splittable 64-bit stream for Monte Carlo trials and
 * full-measure random instances (unitaries, densities, bases) for property
 * tests.
 */

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qmm/qcore.hpp"

namespace qmm {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Maps a 64-bit word to a double uniform on [0, 1) using the top 53 bits.
constexpr double to_unit_interval(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// SplitMix64 generator. Streams for independent trials are derived with
/// `SplitMix64::stream(seed, index)`, so results do not depend on how
/// trials are partitioned across workers.
class SplitMix64 {
  public:
    using result_type = std::uint64_t;

    constexpr explicit SplitMix64(std::uint64_t state) noexcept
        : state_(state) {}

    static constexpr SplitMix64 stream(std::uint64_t seed,
                                       std::uint64_t index) noexcept {
        return SplitMix64(mix64(seed ^ mix64(index + kGamma)));
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    constexpr result_type operator()() noexcept {
        state_ += kGamma;
        return mix64(state_);
    }

    constexpr double uniform() noexcept { return to_unit_interval((*this)()); }

    [[nodiscard]] constexpr std::uint64_t state() const noexcept {
        return state_;
    }

  private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t state_;
};

namespace random {

using Engine = std::mt19937_64;

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Engine &rng);
/// Haar-like unitary via Gram-Schmidt orthonormalization of the columns of a
/// Gaussian matrix.
ComplexMatrix unitary(std::size_t dim, Engine &rng);
/// ρ = GG† / tr(GG†) with G Gaussian.
ComplexMatrix density(std::size_t dim, Engine &rng);
Ket pure_state(std::size_t dim, Engine &rng);
/// Columns of a random unitary.
std::vector<Ket> orthonormal_basis(std::size_t dim, Engine &rng);

} // namespace random

} // namespace qmm
