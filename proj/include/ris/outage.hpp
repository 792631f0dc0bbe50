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

#ifndef RIS_OUTAGE_HPP
#define RIS_OUTAGE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ris/alignment.hpp"
#include "ris/fading.hpp"
#include "ris/random.hpp"

namespace ris {

class estimation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Per-branch average-SNR grid (dB, strictly increasing) plus the linear
// SNR threshold gamma0. The outage event at grid point t is
// |H| < x* with x* = sqrt(gamma0 / gamma_t).
struct SnrGrid {
    std::vector<double> gamma_t_db;
    double gamma0 = 1.0;

    void validate() const {
        if (!(gamma0 > 0.0))
            throw std::invalid_argument("SnrGrid: gamma0 must be > 0");
        if (gamma_t_db.empty())
            throw std::invalid_argument("SnrGrid: empty grid");
        for (std::size_t i = 1; i < gamma_t_db.size(); ++i)
            if (!(gamma_t_db[i] > gamma_t_db[i - 1]))
                throw std::invalid_argument("SnrGrid: gamma_t_db must be strictly increasing");
    }

    static SnrGrid linear_db(double start_db, double stop_db, double step_db,
                             double gamma0 = 1.0) {
        SnrGrid g;
        g.gamma0 = gamma0;
        if (!(step_db > 0.0))
            throw std::invalid_argument("SnrGrid: step must be > 0");
        for (double v = start_db; v <= stop_db + 1e-9; v += step_db)
            g.gamma_t_db.push_back(v);
        g.validate();
        return g;
    }

    double threshold(std::size_t i) const {
        return std::sqrt(gamma0 / std::pow(10.0, gamma_t_db[i] / 10.0));
    }
};

enum class Provenance { monte_carlo, analytic, asymptotic, bound };

inline const char* to_string(Provenance p) {
    switch (p) {
    case Provenance::monte_carlo: return "monte_carlo";
    case Provenance::analytic: return "analytic";
    case Provenance::asymptotic: return "asymptotic";
    case Provenance::bound: return "bound";
    }
    return "?";
}

struct OutagePoint {
    double gamma_t_db = 0.0;
    double p_out = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t events = 0;
    Provenance provenance = Provenance::monte_carlo;
    bool low_confidence = false;
};

struct OutageCurve {
    std::vector<OutagePoint> points;
};

struct Interval {
    double low;
    double high;
};

// 95% Wilson score interval; well behaved when the event count is 0.
inline Interval wilson_interval(std::uint64_t events, std::uint64_t trials,
                                double z = 1.959963984540054) {
    if (trials == 0)
        return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(events) / n;
    const double z2n = z * z / n;
    const double denom = 1.0 + z2n;
    const double center = (p + 0.5 * z2n) / denom;
    const double hw = z * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n) / denom;
    return {std::max(0.0, center - hw), std::min(1.0, center + hw)};
}

struct McOptions {
    std::uint64_t substream_base = 0;
    unsigned threads = 1;
    std::uint64_t low_confidence_events = 10;
};

// Monte Carlo outage curve with common random numbers: each trial draws one
// channel and tests it against every grid threshold, so the estimated curve
// is exactly nonincreasing in gamma_t. Trial t uses substream base + t;
// results are identical for any thread count.
inline OutageCurve mc_outage_curve(const AlignmentModel& model,
                                   const BranchDistribution& dist,
                                   std::size_t m_elements, const SnrGrid& grid,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const McOptions& opt = {}) {
    grid.validate();
    if (trials == 0)
        throw std::invalid_argument("mc_outage_curve: trials must be >= 1");
    const std::size_t n_pts = grid.gamma_t_db.size();
    std::vector<double> thresholds(n_pts);
    for (std::size_t i = 0; i < n_pts; ++i)
        thresholds[i] = grid.threshold(i);

    const unsigned n_threads = std::max(1u, opt.threads);
    std::vector<std::vector<std::uint64_t>> counts(n_threads,
                                                   std::vector<std::uint64_t>(n_pts, 0));
    auto worker = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        auto& cnt = counts[w];
        for (std::uint64_t t = lo; t < hi; ++t) {
            RandomStream rs(seed, opt.substream_base + t);
            const double mag = draw_channel(model, dist, m_elements, rs).magnitude;
            // thresholds decrease with gamma_t; |H| < x*_i implies all j < i
            for (std::size_t i = 0; i < n_pts; ++i) {
                if (mag < thresholds[i])
                    ++cnt[i];
                else
                    break;
            }
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

    OutageCurve curve;
    curve.points.resize(n_pts);
    for (std::size_t i = 0; i < n_pts; ++i) {
        std::uint64_t ev = 0;
        for (unsigned w = 0; w < n_threads; ++w)
            ev += counts[w][i];
        auto& pt = curve.points[i];
        pt.gamma_t_db = grid.gamma_t_db[i];
        pt.trials = trials;
        pt.events = ev;
        pt.p_out = static_cast<double>(ev) / static_cast<double>(trials);
        const Interval ci = wilson_interval(ev, trials);
        pt.ci_low = ci.low;
        pt.ci_high = ci.high;
        pt.provenance = Provenance::monte_carlo;
        pt.low_confidence = ev < opt.low_confidence_events;
    }
    return curve;
}

// Rare-event outage for perfect alignment with Rayleigh branches.
//
// The outage event sum_m h_m < x* implies every h_m < x*, so each branch is
// drawn from its distribution truncated to [0, x*] (exact inverse CDF) and
// the conditional hit rate is rescaled by the exact factor F(x*)^M. The
// estimator is unbiased and the relative error is governed by the
// conditional hit count rather than the raw rarity. Each grid point gets
// its own substream block, so points are independent.
inline OutageCurve mc_outage_perfect_conditional(const BranchDistribution& dist,
                                                 std::size_t m_elements,
                                                 const SnrGrid& grid,
                                                 std::uint64_t trials_per_point,
                                                 std::uint64_t seed,
                                                 const McOptions& opt = {}) {
    grid.validate();
    if (dist.kind() != FadingKind::rayleigh)
        throw std::invalid_argument(
            "mc_outage_perfect_conditional: truncated sampling implemented for Rayleigh branches");
    if (trials_per_point == 0)
        throw std::invalid_argument("mc_outage_perfect_conditional: trials must be >= 1");
    const double b = dist.scale_b();
    OutageCurve curve;
    curve.points.resize(grid.gamma_t_db.size());

    for (std::size_t i = 0; i < grid.gamma_t_db.size(); ++i) {
        const double xs = grid.threshold(i);
        const double f1 = -std::expm1(-xs * xs / (2.0 * b)); // branch CDF at x*
        const double weight = std::pow(f1, static_cast<double>(m_elements));
        const std::uint64_t point_base =
            opt.substream_base + (static_cast<std::uint64_t>(i) << 40);

        const unsigned n_threads = std::max(1u, opt.threads);
        std::vector<std::uint64_t> hits(n_threads, 0);
        auto worker = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t h = 0;
            for (std::uint64_t t = lo; t < hi; ++t) {
                RandomStream rs(seed, point_base + t);
                double sum = 0.0;
                for (std::size_t m = 0; m < m_elements; ++m) {
                    const double u = rs.uniform01();
                    sum += std::sqrt(-2.0 * b * std::log1p(-u * f1));
                    if (sum >= xs)
                        break;
                }
                if (sum < xs)
                    ++h;
            }
            hits[w] = h;
        };
        if (n_threads == 1) {
            worker(0, 0, trials_per_point);
        } else {
            std::vector<std::thread> pool;
            const std::uint64_t chunk = (trials_per_point + n_threads - 1) / n_threads;
            for (unsigned w = 0; w < n_threads; ++w) {
                const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, trials_per_point);
                const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, trials_per_point);
                pool.emplace_back(worker, w, lo, hi);
            }
            for (auto& th : pool)
                th.join();
        }
        std::uint64_t ev = 0;
        for (auto h : hits)
            ev += h;

        auto& pt = curve.points[i];
        pt.gamma_t_db = grid.gamma_t_db[i];
        pt.trials = trials_per_point;
        pt.events = ev;
        pt.p_out = weight * static_cast<double>(ev) / static_cast<double>(trials_per_point);
        const Interval ci = wilson_interval(ev, trials_per_point);
        pt.ci_low = weight * ci.low;
        pt.ci_high = weight * ci.high;
        pt.provenance = Provenance::monte_carlo;
        pt.low_confidence = ev < opt.low_confidence_events;
    }
    return curve;
}

// High-SNR asymptote of the perfect-alignment outage with Rayleigh(b)
// branches: b^-M gamma0^M / (2M)! * gamma_t^-M. Returned raw; it exceeds 1
// at low SNR and clamping is the caller's choice.
inline double analytic_outage_perfect_asymptotic(std::size_t m_elements, double b,
                                                 double gamma0, double gamma_t) {
    const double md = static_cast<double>(m_elements);
    const double log_p = md * (std::log(gamma0) - std::log(b) - std::log(gamma_t)) -
                         std::lgamma(2.0 * md + 1.0);
    return std::exp(log_p);
}

// Intercept p0 of the log-linear form log P_out = -M log gamma_t + p0
// (natural logarithms): p0 = M(log gamma0 - log b) - log((2M)!).
inline double perfect_asymptote_log_intercept(std::size_t m_elements, double b,
                                              double gamma0) {
    const double md = static_cast<double>(m_elements);
    return md * (std::log(gamma0) - std::log(b)) - std::lgamma(2.0 * md + 1.0);
}

// True when the Gaussian limit behind the random-alignment closed form is
// considered trustworthy (M >= 4); smaller M only triggers this warning.
// For Rayleigh branches the form happens to be exact at any M.
inline bool random_alignment_clt_warning(std::size_t m_elements) {
    return m_elements < 4;
}

// Random-alignment outage 1 - exp(-gamma0/(Omega_p gamma_t)) with power
// scale Omega_p = M E[h^2].
inline double analytic_outage_random(std::size_t m_elements,
                                     const BranchDistribution& dist, double gamma0,
                                     double gamma_t) {
    const double omega = static_cast<double>(m_elements) * dist.moments().mean_square;
    return -std::expm1(-gamma0 / (omega * gamma_t));
}

struct CoherentBound {
    double value;
    // Whether the pairwise phase-spread premise held with certainty for the
    // half-width this was called with; false means the bound is reported
    // but not guaranteed.
    bool guaranteed;
};

// Full-diversity upper bound (F_|h|(x*))^M on the coherent-alignment outage,
// valid whenever all pairwise branch-phase differences stay within pi/2
// (half-width w <= pi/4).
inline CoherentBound coherent_upper_bound(std::size_t m_elements,
                                          const BranchDistribution& dist,
                                          double gamma0, double gamma_t,
                                          double half_width) {
    const double xs = std::sqrt(gamma0 / gamma_t);
    const double f = dist.cdf(xs);
    return {std::pow(f, static_cast<double>(m_elements)),
            half_width <= 0.25 * pi + 1e-12};
}

// Leading Laplace-domain coefficient of the perfect-alignment Rician
// channel, kept in the published form e^{-M s^2/(2b)} (2b)^-M with exponent
// 2M. The series-consistent value e^{-M s^2/(2b)} b^-M (the M-th power of
// the branch density's leading Maclaurin coefficient, which the Rayleigh
// s = 0 reduction also demands) differs from it by 2^M; both are carried so
// the discrepancy stays visible.
struct RicianLeading {
    double coefficient;        // published form
    unsigned exponent;         // 2M
    double series_coefficient; // b^-M e^{-M s^2/(2b)}

    // small-x density term: coefficient/(2M-1)! * x^(2M-1)
    double pdf_term_coefficient(double coeff) const {
        return coeff / std::exp(std::lgamma(static_cast<double>(exponent)));
    }
    // implied outage leading term: coefficient/(2M)! * (gamma0/gamma_t)^M
    double outage_leading(double coeff, double gamma0, double gamma_t) const {
        const double md = 0.5 * exponent;
        return coeff / std::exp(std::lgamma(exponent + 1.0)) *
               std::pow(gamma0 / gamma_t, md);
    }
};

inline RicianLeading rician_leading_coefficient(std::size_t m_elements, double s,
                                                double b) {
    const double md = static_cast<double>(m_elements);
    const double e = std::exp(-md * s * s / (2.0 * b));
    return {e * std::pow(2.0 * b, -md), static_cast<unsigned>(2 * m_elements),
            e * std::pow(b, -md)};
}

struct DiversityEstimate {
    double order;
    double stderr_order;
    std::size_t points_used;
    double gamma_lo_db;
    double gamma_hi_db;
};

// Least-squares slope of log10 p_out against log10 gamma_t over the
// contiguous run of usable points ending at the highest-SNR usable point.
// Usable: p_out > 0 and, for Monte Carlo points, a confidence half-width
// at most 30% of the estimate. Returns minus the slope.
inline DiversityEstimate estimate_diversity_order(const OutageCurve& curve) {
    const auto& pts = curve.points;
    auto usable = [](const OutagePoint& p) {
        if (!(p.p_out > 0.0))
            return false;
        if (p.provenance == Provenance::monte_carlo) {
            const double hw = 0.5 * (p.ci_high - p.ci_low);
            if (hw > 0.3 * p.p_out)
                return false;
        }
        return true;
    };

    std::size_t hi = pts.size();
    while (hi > 0 && !usable(pts[hi - 1]))
        --hi;
    if (hi == 0)
        throw estimation_error("estimate_diversity_order: no usable points");
    std::size_t lo = hi;
    while (lo > 0 && usable(pts[lo - 1]))
        --lo;
    const std::size_t n = hi - lo;
    if (n < 3)
        throw estimation_error(
            "estimate_diversity_order: need >= 3 contiguous usable points, have " +
            std::to_string(n));

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double x = pts[i].gamma_t_db / 10.0; // log10 gamma_t
        const double y = std::log10(pts[i].p_out);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double nd = static_cast<double>(n);
    const double sxx_c = sxx - sx * sx / nd;
    const double slope = (sxy - sx * sy / nd) / sxx_c;
    const double intercept = (sy - slope * sx) / nd;
    double ss_res = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double x = pts[i].gamma_t_db / 10.0;
        const double r = std::log10(pts[i].p_out) - (slope * x + intercept);
        ss_res += r * r;
    }
    const double se =
        n > 2 ? std::sqrt(ss_res / (nd - 2.0) / sxx_c) : 0.0;
    return {-slope, se, n, pts[lo].gamma_t_db, pts[hi - 1].gamma_t_db};
}

// Evaluates a closed form over the grid into a tagged curve.
template <typename F>
inline OutageCurve analytic_curve(const SnrGrid& grid, Provenance provenance, F&& f) {
    grid.validate();
    OutageCurve curve;
    curve.points.reserve(grid.gamma_t_db.size());
    for (double gdb : grid.gamma_t_db) {
        const double gt = std::pow(10.0, gdb / 10.0);
        OutagePoint pt;
        pt.gamma_t_db = gdb;
        pt.p_out = f(grid.gamma0, gt);
        pt.ci_low = pt.ci_high = pt.p_out;
        pt.trials = 0;
        pt.events = 0;
        pt.provenance = provenance;
        pt.low_confidence = false;
        curve.points.push_back(pt);
    }
    return curve;
}

} // namespace ris

#endif // RIS_OUTAGE_HPP
