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

#ifndef RIS_SPECIAL_FUNCTIONS_HPP
#define RIS_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ris {

inline constexpr double pi = 3.14159265358979323846;

// Modified Bessel function of the first kind, order 0.
//
// The ascending series sum_k (x^2/4)^k / (k!)^2 has all-positive terms, so
// it carries no cancellation and stays accurate (~1e-14 relative) up to the
// switch point. Beyond that the standard large-argument expansion
// e^x/sqrt(2 pi x) * sum_k a_k x^-k takes over. Relative accuracy is better
// than 1e-12 on [0, 50].
inline double bessel_i0(double x) {
    x = std::fabs(x);
    if (x < 50.0) {
        double term = 1.0, sum = 1.0;
        const double q = 0.25 * x * x;
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < sum * 1e-17)
                break;
        }
        return sum;
    }
    // asymptotic branch; terms shrink to ~e^-2x before diverging
    const double inv8x = 1.0 / (8.0 * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd * inv8x / static_cast<double>(k);
        if (term < sum * 1e-17)
            break;
        sum += term;
    }
    return std::exp(x) / std::sqrt(2.0 * pi * x) * sum;
}

// Modified Bessel function of the first kind, order 1 (odd in x).
inline double bessel_i1(double x) {
    const double ax = std::fabs(x);
    double result;
    if (ax < 50.0) {
        double term = 0.5 * ax, sum = term;
        const double q = 0.25 * ax * ax;
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * (k + 1.0));
            sum += term;
            if (term < sum * 1e-17)
                break;
        }
        result = sum;
    } else {
        // mu = 4: a_k = (4 - 1)(4 - 9).../(k! (8x)^k)
        const double inv8x = 1.0 / (8.0 * ax);
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 40; ++k) {
            const double odd = 2.0 * k - 1.0;
            term *= (4.0 - odd * odd) * inv8x / static_cast<double>(k);
            if (std::fabs(term) < sum * 1e-17)
                break;
            sum += term;
        }
        result = std::exp(ax) / std::sqrt(2.0 * pi * ax) * sum;
    }
    return x < 0.0 ? -result : result;
}

// e^-x I0(x), usable where I0 alone would overflow.
inline double bessel_i0_scaled(double x) {
    x = std::fabs(x);
    if (x < 50.0)
        return std::exp(-x) * bessel_i0(x);
    const double inv8x = 1.0 / (8.0 * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd * inv8x / static_cast<double>(k);
        if (term < sum * 1e-17)
            break;
        sum += term;
    }
    return sum / std::sqrt(2.0 * pi * x);
}

// Scaled complementary error function e^{x^2} erfc(x) for x >= 0.
//
// Small arguments use the library erfc directly; from x = 8 on the direct
// product loses ground to exp(x^2) rounding, so the asymptotic expansion
// 1/(x sqrt(pi)) * sum_k (-1)^k (2k-1)!!/(2x^2)^k is used instead (its
// smallest term is far below 1e-15 there).
inline double erfcx(double x) {
    if (x < 0.0)
        throw std::domain_error("erfcx: negative argument not supported");
    if (x < 8.0)
        return std::exp(x * x) * std::erfc(x);
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= -(2.0 * k - 1.0) * inv2x2;
        if (std::fabs(term) < 1e-18)
            break;
        sum += term;
    }
    return sum / (x * std::sqrt(pi));
}

// Unnormalized sinc, sin(x)/x.
inline double sinc(double x) {
    if (std::fabs(x) < 1e-6) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// Laguerre polynomial of half-integer order 1/2, evaluated for x <= 0 (the
// regime that appears in the Rician envelope mean):
//
//   L_{1/2}(x) = e^{x/2} [ (1 - x) I0(-x/2) - x I1(-x/2) ]
//
// For large -x the Bessel factors overflow individually, so the scaled
// variants are combined with the residual exponent.
inline double laguerre_half(double x) {
    if (x > 0.0)
        throw std::domain_error("laguerre_half: defined here for x <= 0 only");
    if (x == 0.0)
        return 1.0;
    const double y = -0.5 * x; // > 0
    // e^{x/2} * I(y) = e^{y - 2y + ...}: use scaled Bessels, e^{x/2 + y} = 1
    const double i0s = bessel_i0_scaled(y);
    // e^-y I1(y)
    double i1s;
    if (y < 50.0) {
        i1s = std::exp(-y) * bessel_i1(y);
    } else {
        const double inv8y = 1.0 / (8.0 * y);
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 40; ++k) {
            const double odd = 2.0 * k - 1.0;
            term *= (4.0 - odd * odd) * inv8y / static_cast<double>(k);
            if (std::fabs(term) < sum * 1e-17)
                break;
            sum += term;
        }
        i1s = sum / std::sqrt(2.0 * pi * y);
    }
    return (1.0 - x) * i0s - x * i1s;
}

namespace detail {

// Regularized lower incomplete gamma P(a, x) for integer a >= 1.
// Series for x < a + 1, Lentz continued fraction for the upper tail
// otherwise. Standard construction, see e.g. Numerical Recipes ch. 6.
inline double gamma_p(int a, double x) {
    if (x < 0.0 || a < 1)
        throw std::domain_error("gamma_p: invalid arguments");
    if (x == 0.0)
        return 0.0;
    const double lg = std::lgamma(static_cast<double>(a));
    if (x < a + 1.0) {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-16)
                break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            break;
    }
    const double q = std::exp(-x + a * std::log(x) - lg) * h;
    return 1.0 - q;
}

} // namespace detail

// First-order Marcum Q, through its noncentral chi-square reading:
//   Q1(a, b) = 1 - sum_n Poisson(n; a^2/2) P(n + 1, b^2/2).
// The complement (the CDF side) is accumulated with all-positive terms.
inline double marcum_q1(double a, double b) {
    if (a < 0.0 || b < 0.0)
        throw std::domain_error("marcum_q1: arguments must be nonnegative");
    const double lam = 0.5 * a * a;
    const double y = 0.5 * b * b;
    if (y == 0.0)
        return 1.0;
    double cdf = 0.0;
    double w = std::exp(-lam); // Poisson weight, n = 0
    int n = 0;
    const int n_hi = static_cast<int>(lam + 12.0 * std::sqrt(lam + 1.0) + 30.0);
    for (; n <= n_hi; ++n) {
        if (n > 0)
            w *= lam / n;
        if (w > 1e-18)
            cdf += w * detail::gamma_p(n + 1, y);
    }
    if (cdf > 1.0) cdf = 1.0;
    return 1.0 - cdf;
}

} // namespace ris

#endif // RIS_SPECIAL_FUNCTIONS_HPP
