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

#ifndef RIS_FADING_HPP
#define RIS_FADING_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ris/random.hpp"
#include "ris/special_functions.hpp"

namespace ris {

enum class FadingKind { rayleigh, rician, degenerate };

struct Moments {
    double mean;        // E[h]
    double mean_square; // E[h^2]
    double variance() const { return mean_square - mean * mean; }
};

// Per-element small-scale amplitude distribution.
//
// Rayleigh is parameterized by the scale b with density x/b e^{-x^2/(2b)},
// i.e. b equals the per-quadrature variance sigma^2 of the underlying
// complex Gaussian (b = sigma^2; E[h^2] = 2b). Rician adds a specular
// amplitude s in-phase, density x/b e^{-(x^2+s^2)/(2b)} I0(xs/b), so the
// K-factor is s^2/(2b) and Rician(s = 0, b) coincides with Rayleigh(b).
// Degenerate(c) is the constant amplitude c (no density).
class BranchDistribution {
public:
    static BranchDistribution rayleigh(double b) {
        if (!(b > 0.0))
            throw std::invalid_argument("rayleigh: scale b must be > 0");
        return BranchDistribution(FadingKind::rayleigh, 0.0, b, 0.0);
    }

    static BranchDistribution rician(double s, double b) {
        if (!(b > 0.0))
            throw std::invalid_argument("rician: scale b must be > 0");
        if (s < 0.0)
            throw std::invalid_argument("rician: specular amplitude s must be >= 0");
        return BranchDistribution(FadingKind::rician, s, b, 0.0);
    }

    static BranchDistribution degenerate(double c) {
        if (c < 0.0)
            throw std::invalid_argument("degenerate: amplitude c must be >= 0");
        return BranchDistribution(FadingKind::degenerate, 0.0, 0.0, c);
    }

    FadingKind kind() const { return kind_; }
    double scale_b() const { return b_; }
    double specular_s() const { return s_; }
    double constant_c() const { return c_; }

    // K = s^2/(2b); zero for Rayleigh.
    double rician_k() const {
        return kind_ == FadingKind::rician ? s_ * s_ / (2.0 * b_) : 0.0;
    }

    double pdf(double x) const {
        if (x < 0.0)
            throw std::domain_error("pdf: x must be nonnegative");
        switch (kind_) {
        case FadingKind::rayleigh:
            return x / b_ * std::exp(-x * x / (2.0 * b_));
        case FadingKind::rician: {
            // x/b e^{-(x-s)^2/(2b)} * e^-y I0(y), y = xs/b; stable for all x
            const double y = x * s_ / b_;
            const double d = x - s_;
            return x / b_ * std::exp(-d * d / (2.0 * b_)) * bessel_i0_scaled(y);
        }
        case FadingKind::degenerate:
            throw std::invalid_argument("pdf: degenerate amplitude has no density");
        }
        return 0.0;
    }

    double cdf(double x) const {
        if (x < 0.0)
            throw std::domain_error("cdf: x must be nonnegative");
        switch (kind_) {
        case FadingKind::rayleigh:
            return -std::expm1(-x * x / (2.0 * b_));
        case FadingKind::rician: {
            const double rb = std::sqrt(b_);
            return 1.0 - marcum_q1(s_ / rb, x / rb);
        }
        case FadingKind::degenerate:
            return x >= c_ ? 1.0 : 0.0;
        }
        return 0.0;
    }

    Moments moments() const {
        switch (kind_) {
        case FadingKind::rayleigh:
            return {std::sqrt(pi * b_ / 2.0), 2.0 * b_};
        case FadingKind::rician: {
            const double mean = std::sqrt(pi * b_ / 2.0) *
                                laguerre_half(-s_ * s_ / (2.0 * b_));
            return {mean, s_ * s_ + 2.0 * b_};
        }
        case FadingKind::degenerate:
            return {c_, c_ * c_};
        }
        return {0.0, 0.0};
    }

    // One amplitude draw. Rayleigh consumes one uniform (inverse CDF),
    // Rician consumes two (one Gaussian pair, specular offset in-phase),
    // Degenerate consumes none.
    double sample(RandomStream& stream) const {
        switch (kind_) {
        case FadingKind::rayleigh:
            return std::sqrt(-2.0 * b_ * std::log(stream.uniform01()));
        case FadingKind::rician: {
            const auto [z1, z2] = stream.normal_pair();
            const double sb = std::sqrt(b_);
            const double x = s_ + sb * z1;
            const double y = sb * z2;
            return std::sqrt(x * x + y * y);
        }
        case FadingKind::degenerate:
            return c_;
        }
        return 0.0;
    }

    std::vector<double> sample(std::size_t n, RandomStream& stream) const {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = sample(stream);
        return out;
    }

private:
    BranchDistribution(FadingKind kind, double s, double b, double c)
        : kind_(kind), s_(s), b_(b), c_(c) {}

    FadingKind kind_;
    double s_;
    double b_;
    double c_;
};

} // namespace ris

#endif // RIS_FADING_HPP
