// SPDX-License-Identifier: Apache-2.0
//
// risphase - phase-alignment analysis for RIS-assisted wireless channels
// Copyright (C) 2026 the risphase contributors
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
// ------------------------------------------------------------------------

#ifndef RIS_RANDOM_HPP
#define RIS_RANDOM_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace ris {

namespace detail {

// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
// as easy as 1, 2, 3", SC'11). Counter-based: the output block is a pure
// function of (counter, key), which is what makes partitioned Monte Carlo
// reproducible independent of worker count.
struct Philox4x32 {
    static constexpr std::uint32_t M0 = 0xD2511F53u;
    static constexpr std::uint32_t M1 = 0xCD9E8D57u;
    static constexpr std::uint32_t W0 = 0x9E3779B9u;
    static constexpr std::uint32_t W1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += W0;
                key[1] += W1;
            }
            const std::uint64_t p0 = static_cast<std::uint64_t>(M0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(M1) * ctr[2];
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }
};

} // namespace detail

// A reproducible random stream addressed by (seed, substream_id).
//
// Identical (seed, substream_id) always reproduces the identical sequence;
// distinct substream ids give statistically independent streams. Typical
// Monte Carlo use assigns one substream per trial, so any partitioning of
// trials over threads leaves every drawn value unchanged.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t substream_id = 0)
        : seed_(seed), substream_(substream_id), counter_(0), pos_(4) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t substream_id() const { return substream_; }

    // Same seed, different substream; used to hand out per-trial streams.
    RandomStream at_substream(std::uint64_t substream_id) const {
        return RandomStream(seed_, substream_id);
    }

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            block_ = detail::Philox4x32::block(
                {static_cast<std::uint32_t>(counter_),
                 static_cast<std::uint32_t>(counter_ >> 32),
                 static_cast<std::uint32_t>(substream_),
                 static_cast<std::uint32_t>(substream_ >> 32)},
                {static_cast<std::uint32_t>(seed_),
                 static_cast<std::uint32_t>(seed_ >> 32)});
            ++counter_;
            pos_ = 0;
        }
        return block_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    // Uniform on the open interval (0, 1); never returns an endpoint, so
    // log() and inverse-CDF transforms are safe.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Box-Muller pair; consumes exactly two uniforms.
    std::pair<double, double> normal_pair() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

private:
    std::uint64_t seed_;
    std::uint64_t substream_;
    std::uint64_t counter_;
    std::array<std::uint32_t, 4> block_{};
    int pos_;
};

} // namespace ris

#endif // RIS_RANDOM_HPP
