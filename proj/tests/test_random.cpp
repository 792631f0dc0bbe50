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

#include <catch2/catch_amalgamated.hpp>

#include "ris/random.hpp"
#include "oracles.hpp"

#include <cmath>
#include <set>

TEST_CASE("philox4x32-10 known-answer vectors") {
    using ris::detail::Philox4x32;
    {
        const auto out = Philox4x32::block({0u, 0u, 0u, 0u}, {0u, 0u});
        CHECK(out[0] == 0x6627e8d5u);
        CHECK(out[1] == 0xe169c58du);
        CHECK(out[2] == 0xbc57ac4cu);
        CHECK(out[3] == 0x9b00dbd8u);
    }
    {
        const auto out = Philox4x32::block(
            {0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
            {0xffffffffu, 0xffffffffu});
        CHECK(out[0] == 0x408f276du);
        CHECK(out[1] == 0x41c83b0eu);
        CHECK(out[2] == 0xa20bc7c6u);
        CHECK(out[3] == 0x6d5451fdu);
    }
    {
        const auto out = Philox4x32::block(
            {0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
            {0xa4093822u, 0x299f31d0u});
        CHECK(out[0] == 0xd16cfe09u);
        CHECK(out[1] == 0x94fdccebu);
        CHECK(out[2] == 0x5001e420u);
        CHECK(out[3] == 0x24126ea1u);
    }
}

TEST_CASE("identical (seed, substream) reproduces identical sequences") {
    ris::RandomStream a(1234567, 42), b(1234567, 42);
    for (int i = 0; i < 1000; ++i)
        REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct substreams differ and do not collide early") {
    ris::RandomStream a(99, 0), b(99, 1), c(100, 0);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 256; ++i) {
        seen.insert(a.next_u64());
        seen.insert(b.next_u64());
        seen.insert(c.next_u64());
    }
    CHECK(seen.size() == 3 * 256);
}

TEST_CASE("uniform01 stays strictly inside (0,1) and has the right mean") {
    ris::RandomStream rs(7, 0);
    oracles::RunningStats st;
    for (int i = 0; i < 200000; ++i) {
        const double u = rs.uniform01();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        st.add(u);
    }
    CHECK(std::fabs(st.mean() - 0.5) < 4.0 * st.mean_stderr());
    CHECK(std::fabs(st.variance() - 1.0 / 12.0) < 1e-3);
}

TEST_CASE("normal_pair moments") {
    ris::RandomStream rs(11, 3);
    oracles::RunningStats st;
    for (int i = 0; i < 100000; ++i) {
        const auto [z1, z2] = rs.normal_pair();
        st.add(z1);
        st.add(z2);
    }
    CHECK(std::fabs(st.mean()) < 4.0 * st.mean_stderr());
    CHECK(std::fabs(st.variance() - 1.0) < 0.02);
}
