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

#include "ris/special_functions.hpp"
#include "oracles.hpp"

#include <cmath>

TEST_CASE("bessel_i0 agrees with the integral representation to 1e-10") {
    for (double x : {0.0, 0.3, 1.0, 2.5, 3.75, 7.0, 12.0, 20.0, 35.0, 49.0, 50.0, 55.0}) {
        const double ref = oracles::bessel_i0_integral(x);
        CHECK(std::fabs(ris::bessel_i0(x) / ref - 1.0) < 1e-10);
    }
    CHECK(ris::bessel_i0(0.0) == 1.0);
    CHECK(ris::bessel_i0(-2.0) == ris::bessel_i0(2.0));
}

TEST_CASE("bessel_i1 agrees with the integral representation to 1e-10") {
    for (double x : {0.1, 1.0, 2.5, 8.0, 20.0, 45.0, 52.0}) {
        const double ref = oracles::bessel_i1_integral(x);
        CHECK(std::fabs(ris::bessel_i1(x) / ref - 1.0) < 1e-10);
    }
    CHECK(ris::bessel_i1(0.0) == 0.0);
    CHECK(ris::bessel_i1(-3.0) == -ris::bessel_i1(3.0));
}

TEST_CASE("scaled bessel stays finite where the plain one overflows") {
    CHECK(std::fabs(ris::bessel_i0_scaled(2.0) -
                    std::exp(-2.0) * oracles::bessel_i0_integral(2.0)) < 1e-12);
    const double v = ris::bessel_i0_scaled(800.0);
    CHECK(std::isfinite(v));
    // asymptotically 1/sqrt(2 pi x)
    CHECK(std::fabs(v * std::sqrt(2.0 * ris::pi * 800.0) - 1.0) < 1e-3);
}

TEST_CASE("erfcx matches exp(x^2) erfc(x) and is smooth across the branch switch") {
    for (double x : {0.0, 0.5, 1.0, 2.0, 4.0, 6.0, 7.9}) {
        CHECK(std::fabs(ris::erfcx(x) - std::exp(x * x) * std::erfc(x)) < 1e-13);
    }
    const double left = ris::erfcx(7.999999);
    const double right = ris::erfcx(8.000001);
    CHECK(std::fabs(left / right - 1.0) < 1e-10);
    // large-argument limit erfcx(x) ~ 1/(x sqrt(pi))
    CHECK(std::fabs(ris::erfcx(100.0) * 100.0 * std::sqrt(ris::pi) - 1.0) < 1e-4);
    CHECK_THROWS_AS(ris::erfcx(-0.1), std::domain_error);
}

TEST_CASE("unnormalized sinc") {
    CHECK(ris::sinc(0.0) == 1.0);
    CHECK(std::fabs(ris::sinc(ris::pi / 2.0) - 2.0 / ris::pi) < 1e-15);
    CHECK(std::fabs(ris::sinc(1e-8) - 1.0) < 1e-15);
    CHECK(std::fabs(ris::sinc(ris::pi)) < 1e-15);
}

TEST_CASE("laguerre_half values and domain") {
    CHECK(ris::laguerre_half(0.0) == 1.0);
    // e^-1 (3 I0(1) + 2 I1(1)), written with the oracle Bessels
    const double ref =
        std::exp(-1.0) * (3.0 * oracles::bessel_i0_integral(1.0) +
                          2.0 * oracles::bessel_i1_integral(1.0));
    CHECK(std::fabs(ris::laguerre_half(-2.0) - ref) < 1e-12);
    CHECK(std::fabs(ris::laguerre_half(-2.0) - 1.8130996534803383) < 1e-12);
    CHECK_THROWS_AS(ris::laguerre_half(0.5), std::domain_error);
}

TEST_CASE("laguerre_half reproduces the Rician mean integral") {
    // mean of a Rician(alpha, beta^2) envelope equals
    // sqrt(pi/2) beta L_1/2(-alpha^2/(2 beta^2)); checked by quadrature
    const double alpha = 2.0, beta = 1.0;
    auto integrand = [&](double x) {
        const double y = x * alpha / (beta * beta);
        return x * x / (beta * beta) *
               std::exp(-(x - alpha) * (x - alpha) / (2.0 * beta * beta)) *
               ris::bessel_i0_scaled(y);
    };
    const double mean = oracles::integrate(integrand, 0.0, alpha + 40.0 * beta);
    const double closed =
        std::sqrt(ris::pi / 2.0) * beta * ris::laguerre_half(-alpha * alpha / 2.0);
    CHECK(std::fabs(mean / closed - 1.0) < 1e-9);
}

TEST_CASE("laguerre_half large-argument asymptote: Rician mean tends to alpha") {
    // K = alpha^2/(2 beta^2) = 1e4
    const double alpha = 3.0;
    const double beta_sq = alpha * alpha / (2.0 * 1e4);
    const double mean = std::sqrt(ris::pi / 2.0 * beta_sq) *
                        ris::laguerre_half(-alpha * alpha / (2.0 * beta_sq));
    CHECK(std::fabs(mean / alpha - 1.0) < 1e-3);
}

TEST_CASE("marcum_q1 boundary cases and quadrature cross-check") {
    CHECK(ris::marcum_q1(0.0, 0.0) == 1.0);
    // a = 0 reduces to exp(-b^2/2)
    CHECK(std::fabs(ris::marcum_q1(0.0, 1.5) - std::exp(-1.125)) < 1e-12);
    // quadrature of the Rician density x e^{-(x^2+a^2)/2} I0(ax)
    for (double a : {0.5, 1.0, 2.0}) {
        for (double b : {0.5, 1.0, 3.0}) {
            auto pdf = [&](double x) {
                return x * std::exp(-(x - a) * (x - a) / 2.0) * ris::bessel_i0_scaled(x * a);
            };
            const double cdf = oracles::integrate(pdf, 0.0, b);
            CHECK(std::fabs((1.0 - ris::marcum_q1(a, b)) - cdf) < 1e-9);
        }
    }
}
