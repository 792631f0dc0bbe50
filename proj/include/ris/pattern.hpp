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

#ifndef RIS_PATTERN_HPP
#define RIS_PATTERN_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ris/alignment.hpp"
#include "ris/special_functions.hpp"

namespace ris {

// Uniform linear RIS aperture: M elements at pitch dx (in wavelengths),
// scanned toward direction sine u0 = sin(theta0).
struct RisGeometry {
    std::size_t m_elements;
    double dx_over_lambda;
    double u0 = 0.0;

    void validate() const {
        if (m_elements < 1)
            throw std::invalid_argument("RisGeometry: need M >= 1");
        if (!(dx_over_lambda > 0.0))
            throw std::invalid_argument("RisGeometry: element pitch must be > 0");
        if (std::fabs(u0) > 1.0)
            throw std::invalid_argument("RisGeometry: |u0| must be <= 1");
    }
};

// Unit-modulus scan coefficients r_m = exp(2 pi j u0 (dx/lambda) m), m = 1..M.
// The element index starts at 1; the constant overall phase that a different
// index origin would introduce is irrelevant to magnitudes and is kept.
inline std::vector<std::complex<double>> scan_coefficients(const RisGeometry& geom) {
    geom.validate();
    std::vector<std::complex<double>> r(geom.m_elements);
    for (std::size_t m = 1; m <= geom.m_elements; ++m) {
        const double ph = 2.0 * pi * geom.u0 * geom.dx_over_lambda * static_cast<double>(m);
        r[m - 1] = std::polar(1.0, ph);
    }
    return r;
}

// Peak-normalized array factor
//   F(u) = sin(M pi d (u - u0)) / (M sin(pi d (u - u0))),  d = dx/lambda.
// The removable singularities at u - u0 = k/d (main beam and grating lobes)
// evaluate to +-1 by parity.
inline double array_factor(const RisGeometry& geom, double u) {
    geom.validate();
    if (std::fabs(u) > 1.0)
        throw std::domain_error("array_factor: |u| must be <= 1");
    const double md = static_cast<double>(geom.m_elements);
    const double psi = pi * geom.dx_over_lambda * (u - geom.u0);
    const double den = std::sin(psi);
    if (std::fabs(den) < 1e-9) {
        const long k = std::lround(psi / pi);
        const bool flip = (k % 2 != 0) && (geom.m_elements % 2 == 0);
        return flip ? -1.0 : 1.0;
    }
    return std::sin(md * psi) / (md * den);
}

struct Beamwidth {
    double exact_rad;    // arcsin(lambda/(4 M dx)), from the pi/2 spread limit
    double approx_rad;   // 0.25 lambda/(M dx), the large-M linearization
    bool geometry_limited; // aperture too small: condition holds everywhere
};

// Angular half-width around the scan direction within which the maximum
// branch-phase spread M 2 pi sin(theta) dx/lambda stays below pi/2, i.e.
// full diversity order is retained.
inline Beamwidth full_diversity_beamwidth(const RisGeometry& geom) {
    geom.validate();
    const double arg =
        1.0 / (4.0 * static_cast<double>(geom.m_elements) * geom.dx_over_lambda);
    if (arg > 1.0)
        return {0.5 * pi, arg, true};
    return {std::asin(arg), arg, false};
}

enum class PhaseShift { continuous, discrete };
enum class Csi { perfect, partial, none };

// Phase-alignment category experienced at the target direction for a given
// phase-shifter resolution and CSI condition.
inline Alignment classify_alignment(PhaseShift phase_shift, Csi csi) {
    if (csi == Csi::none)
        return Alignment::random;
    if (phase_shift == PhaseShift::continuous && csi == Csi::perfect)
        return Alignment::perfect;
    return Alignment::coherent;
}

// Deterministic branch-phase offsets seen by a user at direction sine u when
// the aperture is scanned at u0: delta_m = 2 pi m d (u - u0). Feeding these
// into an AlignmentModel reproduces off-target outage studies.
inline std::vector<double> branch_phase_offsets(const RisGeometry& geom, double u) {
    geom.validate();
    if (std::fabs(u) > 1.0)
        throw std::domain_error("branch_phase_offsets: |u| must be <= 1");
    std::vector<double> d(geom.m_elements);
    for (std::size_t m = 1; m <= geom.m_elements; ++m)
        d[m - 1] = 2.0 * pi * static_cast<double>(m) * geom.dx_over_lambda *
                   (u - geom.u0);
    return d;
}

// One synthesis beam: grid index i (direction u_i = i lambda/(M dx)) and its
// complex weight.
struct WoodwardBeam {
    int index;
    std::complex<double> weight;
};

struct WoodwardConfig {
    std::vector<WoodwardBeam> beams;

    // Flat unit-weight beams whose grid directions fall inside (u_lo, u_hi).
    static WoodwardConfig flat_band(const RisGeometry& geom, double u_lo, double u_hi) {
        WoodwardConfig cfg;
        const int half = static_cast<int>(geom.m_elements - 1) / 2;
        for (int i = -half; i <= half; ++i) {
            const double ui = static_cast<double>(i) /
                              (static_cast<double>(geom.m_elements) * geom.dx_over_lambda);
            if (ui > u_lo && ui < u_hi)
                cfg.beams.push_back({i, {1.0, 0.0}});
        }
        return cfg;
    }
};

// Element excitations for a superposition of orthogonal scanned beams:
// c'_m = sum_i alpha_i exp(2 pi j u_i (dx/lambda) m). Requires odd M (the
// orthogonal grid is defined for odd apertures) and |u_i| <= 1. Weights of
// the resulting excitation are generally not unit modulus, so realizing the
// pattern needs element amplitude control.
inline std::vector<std::complex<double>> woodward_coefficients(
    const RisGeometry& geom, const WoodwardConfig& config) {
    geom.validate();
    if (geom.m_elements % 2 == 0)
        throw std::invalid_argument("woodward_coefficients: grid requires odd M");
    const double md = static_cast<double>(geom.m_elements);
    const int half = static_cast<int>(geom.m_elements - 1) / 2;
    for (const auto& beam : config.beams) {
        if (beam.index < -half || beam.index > half)
            throw std::invalid_argument("woodward_coefficients: beam index off the grid");
        const double ui = static_cast<double>(beam.index) / (md * geom.dx_over_lambda);
        if (std::fabs(ui) > 1.0)
            throw std::invalid_argument("woodward_coefficients: |u_i| must be <= 1");
    }
    std::vector<std::complex<double>> c(geom.m_elements, {0.0, 0.0});
    for (std::size_t m = 1; m <= geom.m_elements; ++m) {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& beam : config.beams) {
            // u_i dx/lambda = i/M exactly on the grid
            const double ph = 2.0 * pi * static_cast<double>(beam.index) *
                              static_cast<double>(m) / md;
            acc += beam.weight * std::polar(1.0, ph);
        }
        c[m - 1] = acc;
    }
    return c;
}

// Normalized far-field response of an arbitrary excitation, by direct
// summation of element contributions:
//   F(u) = (1/M) sum_m c_m exp(-2 pi j u (dx/lambda) m).
// For scan_coefficients this reproduces |array_factor|; for a Woodward
// excitation sampling it at the grid directions returns the beam weights.
inline std::complex<double> synthesized_pattern(const RisGeometry& geom,
                                                const std::vector<std::complex<double>>& c,
                                                double u) {
    geom.validate();
    if (c.size() != geom.m_elements)
        throw std::invalid_argument("synthesized_pattern: coefficient count != M");
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 1; m <= geom.m_elements; ++m) {
        const double ph = -2.0 * pi * u * geom.dx_over_lambda * static_cast<double>(m);
        acc += c[m - 1] * std::polar(1.0, ph);
    }
    return acc / static_cast<double>(geom.m_elements);
}

// Per-element free-space link budget.
struct LinkBudget {
    double px;          // element width, meters
    double py;          // element height, meters
    double d1;          // transmitter-to-RIS distance, meters
    double d2;          // RIS-to-receiver distance, meters
    double directivity; // element pattern directivity D
    double gt;          // transmit antenna gain
    double gr;          // receive antenna gain

    void validate() const {
        if (!(px > 0 && py > 0 && d1 > 0 && d2 > 0 && directivity > 0 && gt > 0 && gr > 0))
            throw std::invalid_argument("LinkBudget: all fields must be positive");
    }
};

struct PathLossResult {
    double per_branch;          // PL(m) = px^2 py^2 / (16 pi^2 d1^2 d2^2) D^2 Gt Gr
    double combined_multiplier; // M^2 PL(m): coherent-combining SNR factor
};

inline PathLossResult path_loss_and_array_gain(const LinkBudget& budget,
                                               std::size_t m_elements) {
    budget.validate();
    const double num = budget.px * budget.px * budget.py * budget.py;
    const double den = 16.0 * pi * pi * budget.d1 * budget.d1 * budget.d2 * budget.d2;
    const double pl = num / den * budget.directivity * budget.directivity * budget.gt *
                      budget.gr;
    const double md = static_cast<double>(m_elements);
    return {pl, md * md * pl};
}

} // namespace ris

#endif // RIS_PATTERN_HPP
