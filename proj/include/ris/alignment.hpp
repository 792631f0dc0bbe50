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

#ifndef RIS_ALIGNMENT_HPP
#define RIS_ALIGNMENT_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "ris/fading.hpp"
#include "ris/random.hpp"
#include "ris/special_functions.hpp"

namespace ris {

// The four branch-phase regimes of the combined channel
// H = sum_m |h_m| e^{j theta_m}:
//   perfect     - all phases equal a common theta0; |H| = sum |h_m|
//   coherent    - theta_m = theta0 + error, error uniform in (-w, +w)
//   random      - theta_m uniform on (-pi, pi)
//   destructive - phases arranged so the resultant vanishes; H == 0
enum class Alignment { perfect, coherent, random, destructive };

inline const char* to_string(Alignment a) {
    switch (a) {
    case Alignment::perfect: return "perfect";
    case Alignment::coherent: return "coherent";
    case Alignment::random: return "random";
    case Alignment::destructive: return "destructive";
    }
    return "?";
}

// Two published readings of how a quantization level L maps to the uniform
// phase-error half-width:
//   full_window: error uniform in (-pi/L, +pi/L)  -> w = pi/L
//                (an L-state phase quantizer's worst-case error window)
//   half_window: w = pi/(2L), the reading under which the Rician moment
//                model's shape factors are the exact quadrature moments
// The two analytic paths do not share a silent default; callers pick one.
enum class QuantizationWindow { full_window, half_window };

inline double quantization_to_half_width(unsigned level, QuantizationWindow convention) {
    if (level == 0)
        throw std::domain_error("quantization_to_half_width: level must be >= 1");
    const double base = pi / static_cast<double>(level);
    return convention == QuantizationWindow::full_window ? base : 0.5 * base;
}

struct ChannelSample {
    double real_part;
    double imag_part;
    double magnitude;
    double phase;
};

// Rician fit of the coherent-alignment channel magnitude: noncentrality
// alpha and per-quadrature variance beta_sq.
struct RicianApprox {
    double alpha;
    double beta_sq;
};

class AlignmentModel {
public:
    static AlignmentModel perfect(double theta0 = 0.0) {
        return AlignmentModel(Alignment::perfect, theta0, 0.0);
    }

    // half_width in (0, pi]
    static AlignmentModel coherent(double theta0, double half_width) {
        if (!(half_width > 0.0) || half_width > pi)
            throw std::invalid_argument("coherent: half_width must lie in (0, pi]");
        return AlignmentModel(Alignment::coherent, theta0, half_width);
    }

    static AlignmentModel random() {
        return AlignmentModel(Alignment::random, 0.0, 0.0);
    }

    static AlignmentModel destructive() {
        return AlignmentModel(Alignment::destructive, 0.0, 0.0);
    }

    // Deterministic per-branch offsets (length M), applied on top of the
    // model's phases; used for users away from the scan direction.
    AlignmentModel& with_offsets(std::vector<double> offsets) {
        offsets_ = std::move(offsets);
        return *this;
    }

    Alignment kind() const { return kind_; }
    double theta0() const { return theta0_; }
    double half_width() const { return half_width_; }
    const std::vector<double>& offsets() const { return offsets_; }

    // Whether every draw is certain to satisfy the pairwise phase-spread
    // condition |theta_m - theta_n| <= pi/2 that guarantees the full-
    // diversity outage bound. Random error contributes 2w of spread,
    // deterministic offsets their own peak-to-peak spread.
    bool full_diversity_guaranteed() const {
        if (kind_ == Alignment::random || kind_ == Alignment::destructive)
            return false;
        double spread = (kind_ == Alignment::coherent) ? 2.0 * half_width_ : 0.0;
        if (!offsets_.empty()) {
            double lo = offsets_[0], hi = offsets_[0];
            for (double d : offsets_) {
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
            spread += hi - lo;
        }
        return spread <= 0.5 * pi + 1e-12;
    }

private:
    AlignmentModel(Alignment kind, double theta0, double half_width)
        : kind_(kind), theta0_(theta0), half_width_(half_width) {}

    Alignment kind_;
    double theta0_;
    double half_width_;
    std::vector<double> offsets_;
};

// Exact complex accumulation of sum |h_m| e^{j theta_m}.
inline ChannelSample compose_channel(std::span<const double> amplitudes,
                                     std::span<const double> phases) {
    if (amplitudes.size() != phases.size())
        throw std::invalid_argument("compose_channel: amplitude/phase length mismatch");
    if (amplitudes.empty())
        throw std::invalid_argument("compose_channel: need at least one branch");
    double re = 0.0, im = 0.0;
    for (std::size_t m = 0; m < amplitudes.size(); ++m) {
        re += amplitudes[m] * std::cos(phases[m]);
        im += amplitudes[m] * std::sin(phases[m]);
    }
    return {re, im, std::hypot(re, im), std::atan2(im, re)};
}

// One draw of the combined channel. Amplitudes are always drawn first
// (M branch draws), then any random phases; two models driven by the same
// (seed, substream) therefore see identical amplitudes, which is what makes
// common-random-number comparisons across alignment categories exact.
// Destructive is the degenerate H == 0 channel and consumes no draws.
inline ChannelSample draw_channel(const AlignmentModel& model,
                                  const BranchDistribution& dist,
                                  std::size_t m_elements,
                                  RandomStream& stream) {
    if (m_elements == 0)
        throw std::invalid_argument("draw_channel: need M >= 1");
    if (!model.offsets().empty() && model.offsets().size() != m_elements)
        throw std::invalid_argument("draw_channel: offsets length must equal M");

    if (model.kind() == Alignment::destructive)
        return {0.0, 0.0, 0.0, 0.0};

    double re = 0.0, im = 0.0, amp_sum = 0.0;
    std::vector<double> amplitudes(m_elements);
    for (std::size_t m = 0; m < m_elements; ++m)
        amplitudes[m] = dist.sample(stream);

    for (std::size_t m = 0; m < m_elements; ++m) {
        double theta = model.theta0();
        switch (model.kind()) {
        case Alignment::perfect:
            break;
        case Alignment::coherent:
            theta += stream.uniform(-model.half_width(), model.half_width());
            break;
        case Alignment::random:
            theta = stream.uniform(-pi, pi);
            break;
        case Alignment::destructive:
            break;
        }
        if (!model.offsets().empty())
            theta += model.offsets()[m];
        re += amplitudes[m] * std::cos(theta);
        im += amplitudes[m] * std::sin(theta);
        amp_sum += amplitudes[m];
    }

    if (model.kind() == Alignment::perfect && model.offsets().empty()) {
        // all phases equal theta0: |H| is exactly the amplitude sum
        return {amp_sum * std::cos(model.theta0()), amp_sum * std::sin(model.theta0()),
                amp_sum, model.theta0()};
    }
    return {re, im, std::hypot(re, im), std::atan2(im, re)};
}

// Rician shape factors for coherent alignment with error half-width w:
// alpha = M hbar sinc(w) (exact in-phase mean) and
// beta_sq = (M/2) E[h^2] (1 - sinc(2w)) (exact quadrature variance).
inline RicianApprox rician_approx_from_half_width(const BranchDistribution& dist,
                                                  std::size_t m_elements, double w) {
    if (m_elements == 0)
        throw std::invalid_argument("rician_approx: need M >= 1");
    if (w < 0.0)
        throw std::invalid_argument("rician_approx: half width must be >= 0");
    const Moments mom = dist.moments();
    const double md = static_cast<double>(m_elements);
    return {md * mom.mean * sinc(w),
            0.5 * md * mom.mean_square * (1.0 - sinc(2.0 * w))};
}

// Level-L form: alpha = M hbar sinc(pi/(2L)), beta^2 = (M/2) E[h^2]
// (1 - sinc(pi/L)); identical to the half-width form at w = pi/(2L).
inline RicianApprox rician_approx(const BranchDistribution& dist,
                                  std::size_t m_elements, unsigned level) {
    const double w = quantization_to_half_width(level, QuantizationWindow::half_window);
    return rician_approx_from_half_width(dist, m_elements, w);
}

struct MagnitudeMoments {
    double mean;
    double variance;
};

// Mean of a Rician(alpha, beta_sq) envelope.
inline double rician_envelope_mean(const RicianApprox& ra) {
    if (ra.beta_sq <= 0.0)
        return ra.alpha;
    return std::sqrt(pi / 2.0 * ra.beta_sq) *
           laguerre_half(-ra.alpha * ra.alpha / (2.0 * ra.beta_sq));
}

// Closed-form mean/variance of |H| per alignment category.
//
// perfect: (M hbar, M Var[h]).
// random:  (sqrt(M pi E[h^2])/2, M E[h^2](4-pi)/4), i.e. the Rayleigh limit
//          with power scale Omega_p = M E[h^2]; the often-quoted Omega_p = M
//          is the E[h^2] = 1 special case.
// coherent: Rician model mean sqrt(pi/2) beta L_1/2(-alpha^2/(2 beta^2)) and
//          variance alpha^2 + 2 beta^2 - mean^2. This is a phase-error model:
//          it deliberately ignores the amplitude-fading variance along the
//          mean direction, so its variance collapses to 0 as w -> 0 instead
//          of recovering the perfect-alignment M Var[h] (see docs).
// destructive: (0, 0) for the degenerate H == 0 channel. The tabulated
//          variance M Var[h] of the unconstrained phasor components is
//          available separately as destructive_component_variance().
inline MagnitudeMoments magnitude_moments(const AlignmentModel& model,
                                          const BranchDistribution& dist,
                                          std::size_t m_elements) {
    if (m_elements == 0)
        throw std::invalid_argument("magnitude_moments: need M >= 1");
    if (!model.offsets().empty())
        throw std::invalid_argument(
            "magnitude_moments: closed forms cover stochastic phase models only");
    const Moments mom = dist.moments();
    const double md = static_cast<double>(m_elements);
    switch (model.kind()) {
    case Alignment::perfect:
        return {md * mom.mean, md * mom.variance()};
    case Alignment::random: {
        const double omega = md * mom.mean_square;
        return {0.5 * std::sqrt(omega * pi), omega * (4.0 - pi) / 4.0};
    }
    case Alignment::coherent: {
        const RicianApprox ra =
            rician_approx_from_half_width(dist, m_elements, model.half_width());
        const double mean = rician_envelope_mean(ra);
        return {mean, ra.alpha * ra.alpha + 2.0 * ra.beta_sq - mean * mean};
    }
    case Alignment::destructive:
        return {0.0, 0.0};
    }
    return {0.0, 0.0};
}

// Variance of the per-quadrature superposition components when the
// destructive category is read as "random amplitudes, resultant forced to
// zero": M(E[h^2] - E[h]^2). Reported alongside the degenerate reading.
inline double destructive_component_variance(const BranchDistribution& dist,
                                             std::size_t m_elements) {
    return static_cast<double>(m_elements) * dist.moments().variance();
}

} // namespace ris

#endif // RIS_ALIGNMENT_HPP
