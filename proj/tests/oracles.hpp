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
//
// Test-only reference implementations, deliberately independent of the
// library code paths they are used to check.

#ifndef RIS_TESTS_ORACLES_HPP
#define RIS_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracles {

// Adaptive Simpson quadrature.
inline double simpson_step(const std::function<double(double)>& f, double a, double b,
                           double fa, double fm, double fb, double whole, double eps,
                           int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-12) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, eps, 60);
}

// I0 by its integral representation (1/pi) int_0^pi e^{x cos t} dt; the
// trapezoid rule on a periodic integrand converges spectrally.
inline double bessel_i0_integral(double x) {
    const int n = 400;
    double sum = 0.5 * (std::exp(x) + std::exp(-x));
    for (int i = 1; i < n; ++i)
        sum += std::exp(x * std::cos(3.14159265358979323846 * i / n));
    return sum / n;
}

// I1 = (1/pi) int_0^pi e^{x cos t} cos t dt.
inline double bessel_i1_integral(double x) {
    const int n = 400;
    double sum = 0.5 * (std::exp(x) - std::exp(-x));
    for (int i = 1; i < n; ++i) {
        const double t = 3.14159265358979323846 * i / n;
        sum += std::exp(x * std::cos(t)) * std::cos(t);
    }
    return sum / n;
}

// Kolmogorov-Smirnov statistic of samples against an analytic CDF.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double c = cdf(samples[i]);
        d = std::max(d, std::fabs(c - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - c));
    }
    return d;
}

struct LineFit {
    double slope;
    double intercept;
    double slope_stderr;
};

inline LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double sxx_c = sxx - sx * sx / n;
    const double slope = (sxy - sx * sy / n) / sxx_c;
    const double intercept = (sy - slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - slope * x[i] - intercept;
        ss += r * r;
    }
    const double se = x.size() > 2 ? std::sqrt(ss / (n - 2.0) / sxx_c) : 0.0;
    return {slope, intercept, se};
}

struct RunningStats {
    double sum = 0.0, sum_sq = 0.0;
    std::size_t n = 0;
    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++n;
    }
    double mean() const { return sum / static_cast<double>(n); }
    double variance() const {
        const double m = mean();
        return sum_sq / static_cast<double>(n) - m * m;
    }
    double mean_stderr() const { return std::sqrt(variance() / static_cast<double>(n)); }
};

} // namespace oracles

#endif // RIS_TESTS_ORACLES_HPP
