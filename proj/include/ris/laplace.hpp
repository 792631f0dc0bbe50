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

#ifndef RIS_LAPLACE_HPP
#define RIS_LAPLACE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ris/fading.hpp"
#include "ris/random.hpp"
#include "ris/special_functions.hpp"

namespace ris {

// Truncated expansion of a Laplace transform at t -> infinity,
// L(t) = sum_{n>=1} c_n t^-n. For a probability density on [0, inf) the
// transform vanishes at infinity and c_1 = 0, so the leading nonzero index
// is at least 2. Coefficients alternate in sign and grow factorially, hence
// the extended-precision storage.
struct InversePowerSeries {
    std::vector<long double> coefficients; // coefficients[n-1] is c_n, n = 1..N
    std::string scale_note;                // human-readable parameter record

    std::size_t order() const { return coefficients.size(); }

    long double c(std::size_t n) const {
        if (n == 0 || n > coefficients.size())
            throw std::out_of_range("InversePowerSeries: index n out of range");
        return coefficients[n - 1];
    }

    // Index of the first nonzero coefficient (the diversity order can be
    // read off as half of it); 0 when the series is identically zero.
    std::size_t leading_index() const {
        for (std::size_t n = 1; n <= coefficients.size(); ++n)
            if (coefficients[n - 1] != 0.0L)
                return n;
        return 0;
    }
};

// Maclaurin expansion P(x) = sum_{k>=0} a_k x^k obtained by term-by-term
// inversion, with an estimated validity radius x_max.
struct MaclaurinSeries {
    std::vector<long double> coefficients; // coefficients[k] is a_k
    double x_max = 0.0;
    std::string scale_note;

    std::size_t order() const { return coefficients.size(); }

    double evaluate(double x, std::size_t max_terms =
                                  std::numeric_limits<std::size_t>::max()) const {
        long double sum = 0.0L, xp = 1.0L;
        std::size_t used = 0;
        for (std::size_t k = 0; k < coefficients.size(); ++k) {
            if (coefficients[k] != 0.0L) {
                if (used == max_terms)
                    break;
                ++used;
            }
            sum += coefficients[k] * xp;
            xp *= x;
        }
        return static_cast<double>(sum);
    }
};

// Closed-form Laplace transform of the Rayleigh(b) density:
//   L_h(t) = 1 - sqrt(pi b / 2) t e^{b t^2 / 2} erfc(t sqrt(b/2))
// evaluated through the scaled complementary error function as
// 1 - sqrt(pi) z erfcx(z), z = t sqrt(b/2), which stays finite at large t.
inline double laplace_rayleigh(double t, double b) {
    if (t < 0.0)
        throw std::domain_error("laplace_rayleigh: t must be >= 0");
    if (!(b > 0.0))
        throw std::invalid_argument("laplace_rayleigh: b must be > 0");
    if (t == 0.0)
        return 1.0;
    const double z = t * std::sqrt(0.5 * b);
    return 1.0 - std::sqrt(pi) * z * erfcx(z);
}

// Watson-lemma coefficients of the branch-density transform: if the density
// has Maclaurin coefficients a_n then c_{n+1} = n! a_n.
//
// Rayleigh(b): density x/b e^{-x^2/(2b)} gives
//   c_{2k+2} = (-1)^k (2k+1)! / (b^{k+1} 2^k k!),   odd coefficients zero
// (c2 = 1/b, c4 = -3/b^2, c6 = 15/b^3, ...).
// Rician(s, b): density Maclaurin coefficients come from the product of the
// exponential and I0 even series; leading term is e^{-s^2/(2b)}/b x.
inline InversePowerSeries branch_series(const BranchDistribution& dist,
                                        std::size_t order) {
    if (order < 2)
        throw std::invalid_argument("branch_series: order must be >= 2");
    InversePowerSeries s;
    s.coefficients.assign(order, 0.0L);
    switch (dist.kind()) {
    case FadingKind::rayleigh: {
        const long double b = dist.scale_b();
        long double factor = 1.0L / b; // (2k+1)!/(b^{k+1} 2^k k!) at k = 0
        for (std::size_t k = 0; 2 * k + 2 <= order; ++k) {
            if (k > 0) {
                // ratio between successive k: -(2k+1) 2k / (b 2 k) = -(2k+1)/b
                factor *= -(2.0L * k + 1.0L) / b;
            }
            s.coefficients[2 * k + 1] = factor;
        }
        s.scale_note = "rayleigh b=" + std::to_string(dist.scale_b());
        break;
    }
    case FadingKind::rician: {
        const long double b = dist.scale_b();
        const long double ss = dist.specular_s();
        const long double front = std::exp(-static_cast<double>(ss * ss / (2.0L * b)));
        // a_{2k+1} = front/b * sum_{m=0..k} (-1)^m/((2b)^m m!) (s^2/(4b^2))^{k-m}/((k-m)!)^2
        for (std::size_t k = 0; 2 * k + 2 <= order; ++k) {
            long double sum = 0.0L;
            for (std::size_t m = 0; m <= k; ++m) {
                long double term = 1.0L;
                for (std::size_t i = 1; i <= m; ++i)
                    term *= -1.0L / (2.0L * b * i);
                const std::size_t j = k - m;
                for (std::size_t i = 1; i <= j; ++i)
                    term *= ss * ss / (4.0L * b * b) / (static_cast<long double>(i) * i);
                sum += term;
            }
            const long double a = front / b * sum;
            // c_{2k+2} = (2k+1)! a_{2k+1}
            long double fact = 1.0L;
            for (std::size_t i = 2; i <= 2 * k + 1; ++i)
                fact *= i;
            s.coefficients[2 * k + 1] = fact * a;
        }
        s.scale_note = "rician s=" + std::to_string(dist.specular_s()) +
                       " b=" + std::to_string(dist.scale_b());
        break;
    }
    case FadingKind::degenerate:
        throw std::invalid_argument("branch_series: degenerate amplitude has no density");
    }
    return s;
}

// Truncated Cauchy-product power (L_h)^M, the transform of the M-fold
// amplitude convolution. Requires order >= 2M, otherwise nothing of the
// result is representable.
inline InversePowerSeries raise_to_power_m(const InversePowerSeries& series,
                                           std::size_t m_power, std::size_t order) {
    if (m_power == 0)
        throw std::invalid_argument("raise_to_power_m: power must be >= 1");
    if (order < 2 * m_power)
        throw std::invalid_argument(
            "raise_to_power_m: truncation order " + std::to_string(order) +
            " cannot represent the leading index " + std::to_string(2 * m_power));
    InversePowerSeries result;
    result.coefficients.assign(order, 0.0L);
    result.scale_note = series.scale_note + " ^" + std::to_string(m_power);
    // result = series, then multiply (m_power - 1) more times
    for (std::size_t n = 1; n <= std::min(order, series.order()); ++n)
        result.coefficients[n - 1] = series.c(n);
    std::vector<long double> tmp(order, 0.0L);
    for (std::size_t p = 1; p < m_power; ++p) {
        std::fill(tmp.begin(), tmp.end(), 0.0L);
        for (std::size_t i = 1; i <= order; ++i) {
            const long double ci = result.coefficients[i - 1];
            if (ci == 0.0L)
                continue;
            for (std::size_t j = 1; i + j <= order && j <= series.order(); ++j) {
                const long double cj = series.c(j);
                if (cj != 0.0L)
                    tmp[i + j - 1] += ci * cj;
            }
        }
        result.coefficients = tmp;
    }
    return result;
}

// Term-by-term inverse transform: a_n = c_{n+1}/n!. The validity radius
// x_max is set (by bisection) at the largest x where the highest-order
// retained nonzero term still contributes no more than 10% of the partial
// sum ahead of it.
inline MaclaurinSeries invert_termwise(const InversePowerSeries& series) {
    if (series.order() < 1)
        throw std::invalid_argument("invert_termwise: empty series");
    if (series.c(1) != 0.0L)
        throw std::invalid_argument(
            "invert_termwise: c_1 must vanish for a density transform");
    MaclaurinSeries out;
    out.scale_note = series.scale_note;
    out.coefficients.assign(series.order() - 1, 0.0L);
    long double fact = 1.0L; // n!
    for (std::size_t n = 0; n < out.coefficients.size(); ++n) {
        if (n > 0)
            fact *= n;
        out.coefficients[n] = series.c(n + 1) / fact;
    }

    // locate the last nonzero term
    std::size_t k_last = 0;
    bool any = false;
    for (std::size_t k = 0; k < out.coefficients.size(); ++k)
        if (out.coefficients[k] != 0.0L) {
            k_last = k;
            any = true;
        }
    if (!any || k_last == 0) {
        out.x_max = 0.0;
        return out;
    }
    auto ok = [&](double x) {
        long double partial = 0.0L, xp = 1.0L;
        for (std::size_t k = 0; k < k_last; ++k) {
            partial += out.coefficients[k] * xp;
            xp *= x;
        }
        const long double last = out.coefficients[k_last] * xp;
        return std::fabs(static_cast<double>(last)) <=
               0.1 * std::fabs(static_cast<double>(partial));
    };
    double lo = 0.0, hi = 1.0;
    while (ok(hi) && hi < 1e6)
        hi *= 2.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
    }
    out.x_max = lo;
    return out;
}

struct SeriesOutage {
    double p_out;
    bool extrapolated; // x_star exceeded the series' validity radius
};

// Term-by-term integral of the density series on [0, x_star]:
// sum_n a_n x_star^{n+1}/(n+1). With max_terms = 1 only the leading nonzero
// term is kept, which reproduces the closed-form high-SNR asymptote.
inline SeriesOutage outage_from_maclaurin(const MaclaurinSeries& series, double x_star,
                                          std::size_t max_terms =
                                              std::numeric_limits<std::size_t>::max()) {
    if (x_star < 0.0)
        throw std::domain_error("outage_from_maclaurin: x_star must be >= 0");
    long double sum = 0.0L, xp = 1.0L;
    std::size_t used = 0;
    for (std::size_t k = 0; k < series.coefficients.size(); ++k) {
        xp *= x_star; // x_star^{k+1}
        if (series.coefficients[k] != 0.0L) {
            if (used == max_terms)
                break;
            ++used;
            sum += series.coefficients[k] * xp / static_cast<long double>(k + 1);
        }
    }
    return {static_cast<double>(sum), x_star > series.x_max};
}

struct HistogramDensity {
    std::vector<double> edges;    // bins + 1 edges
    std::vector<std::uint64_t> counts;
    std::vector<double> density;  // per-bin probability density estimate
    std::uint64_t trials = 0;
    bool empty_range = false;     // no hits landed in [edges.front(), edges.back()]

    double center(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
};

namespace detail {

template <typename DrawSum>
inline HistogramDensity histogram_density(const std::vector<double>& edges,
                                          std::uint64_t trials, double weight,
                                          unsigned threads, DrawSum&& draw_sum) {
    if (edges.size() < 2)
        throw std::invalid_argument("histogram_density: need at least one bin");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i] > edges[i - 1]))
            throw std::invalid_argument("histogram_density: edges must increase");
    const std::size_t bins = edges.size() - 1;
    const unsigned n_threads = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> counts(
        n_threads, std::vector<std::uint64_t>(bins, 0));

    auto worker = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        auto& cnt = counts[w];
        for (std::uint64_t t = lo; t < hi; ++t) {
            const double s = draw_sum(t);
            if (s < edges.front() || s >= edges.back())
                continue;
            const auto it = std::upper_bound(edges.begin(), edges.end(), s);
            cnt[static_cast<std::size_t>(it - edges.begin()) - 1]++;
        }
    };
    if (n_threads == 1) {
        worker(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (trials + n_threads - 1) / n_threads;
        for (unsigned w = 0; w < n_threads; ++w) {
            const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, trials);
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, trials);
            pool.emplace_back(worker, w, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }

    HistogramDensity out;
    out.edges = edges;
    out.trials = trials;
    out.counts.assign(bins, 0);
    out.density.assign(bins, 0.0);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < bins; ++i) {
        for (unsigned w = 0; w < n_threads; ++w)
            out.counts[i] += counts[w][i];
        total += out.counts[i];
        out.density[i] = weight * static_cast<double>(out.counts[i]) /
                         (static_cast<double>(trials) * (edges[i + 1] - edges[i]));
    }
    out.empty_range = total == 0;
    return out;
}

} // namespace detail

// Normalized histogram of the perfect-alignment amplitude sum on
// [0, x_max]; the direct Monte Carlo oracle for the density series.
inline HistogramDensity mc_density_near_origin(const BranchDistribution& dist,
                                               std::size_t m_elements, double x_max,
                                               std::size_t bins, std::uint64_t trials,
                                               std::uint64_t seed,
                                               std::uint64_t substream_base = 0,
                                               unsigned threads = 1) {
    if (bins < 10)
        throw std::invalid_argument("mc_density_near_origin: need bins >= 10");
    if (!(x_max > 0.0))
        throw std::invalid_argument("mc_density_near_origin: x_max must be > 0");
    std::vector<double> edges(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        edges[i] = x_max * static_cast<double>(i) / static_cast<double>(bins);
    return detail::histogram_density(
        edges, trials, 1.0, threads, [&](std::uint64_t t) {
            RandomStream rs(seed, substream_base + t);
            double s = 0.0;
            for (std::size_t m = 0; m < m_elements; ++m)
                s += dist.sample(rs);
            return s;
        });
}

// Conditional variant for deep-tail resolution with Rayleigh branches: each
// branch is drawn from its distribution truncated to [0, edges.back()] and
// the histogram is reweighted by the exact truncation probability
// F(edges.back())^M, giving an unbiased density estimate on the range with
// O(1) hit rates.
inline HistogramDensity mc_density_conditional(const BranchDistribution& dist,
                                               std::size_t m_elements,
                                               const std::vector<double>& edges,
                                               std::uint64_t trials, std::uint64_t seed,
                                               std::uint64_t substream_base = 0,
                                               unsigned threads = 1) {
    if (dist.kind() != FadingKind::rayleigh)
        throw std::invalid_argument(
            "mc_density_conditional: truncated sampling implemented for Rayleigh branches");
    const double b = dist.scale_b();
    const double x_hi = edges.back();
    const double f1 = -std::expm1(-x_hi * x_hi / (2.0 * b));
    const double weight = std::pow(f1, static_cast<double>(m_elements));
    return detail::histogram_density(
        edges, trials, weight, threads, [&](std::uint64_t t) {
            RandomStream rs(seed, substream_base + t);
            double s = 0.0;
            for (std::size_t m = 0; m < m_elements; ++m)
                s += std::sqrt(-2.0 * b * std::log1p(-rs.uniform01() * f1));
            return s;
        });
}

} // namespace ris

#endif // RIS_LAPLACE_HPP
