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

#ifndef RIS_MULTI_ACCESS_HPP
#define RIS_MULTI_ACCESS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ris/alignment.hpp"
#include "ris/special_functions.hpp"

namespace ris {

class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct UserProfile {
    double rate;    // target rate r*, bits/s/Hz
    double channel; // overall channel magnitude |H_k| (per slot in dynamic modes)

    void validate() const {
        if (!(rate > 0.0))
            throw std::invalid_argument("UserProfile: rate must be > 0");
        if (channel < 0.0)
            throw std::invalid_argument("UserProfile: channel magnitude must be >= 0");
    }
};

enum class MaScheme { noma_static, tdma_static, fdma_static, noma_dynamic, tdma_dynamic };

inline const char* to_string(MaScheme s) {
    switch (s) {
    case MaScheme::noma_static: return "noma_static";
    case MaScheme::tdma_static: return "tdma_static";
    case MaScheme::fdma_static: return "fdma_static";
    case MaScheme::noma_dynamic: return "noma_dynamic";
    case MaScheme::tdma_dynamic: return "tdma_dynamic";
    }
    return "?";
}

// Minimum-power budget of one scheme. `total` is the scheme's own radiated-
// power aggregate, the quantity its outage condition compares against:
//   noma_static:  sum_k P*_k            (superposed transmission)
//   tdma_static:  (1/K) sum_k P_k       (one slot active at a time)
//   fdma_static:  sum_k P_k             (simultaneous carriers)
//   tdma_dynamic: sum_k P_k
//   noma_dynamic: sum_t sum_k P^(t)_k
struct PowerBudget {
    MaScheme scheme;
    std::vector<double> per_user;              // static schemes
    std::vector<std::vector<double>> per_slot; // dynamic NOMA: [slot][user]
    double total = 0.0;

    // System outage: the available radiated power cannot cover the budget.
    bool system_outage(double p_rad) const { return p_rad < total; }
};

namespace detail {

inline void check_ordering(std::span<const UserProfile> users) {
    for (std::size_t k = 1; k < users.size(); ++k)
        if (!(users[k - 1].channel > users[k].channel))
            throw std::invalid_argument(
                "users must be ordered by decreasing channel magnitude (decoding order); "
                "violated at index " + std::to_string(k));
}

inline void check_channels_positive(std::span<const UserProfile> users) {
    for (std::size_t k = 0; k < users.size(); ++k)
        if (!(users[k].channel > 0.0))
            throw infeasible_error("user " + std::to_string(k) +
                                   " has zero channel magnitude: infinite power required");
}

} // namespace detail

// Successive power recursion for superposition coding with the strongest
// user decoded last during SIC:
//   P*_k = (2^{r_k} - 1) (sigma^2 / |H_k|^2 + sum_{i<k} P*_i).
// Input must already be in decoding order (|H_1| > ... > |H_K|); the
// ordering is verified rather than re-sorted because decoding semantics
// follow the caller's indexing.
inline PowerBudget noma_min_powers_static(std::span<const UserProfile> users,
                                          double sigma_sq) {
    if (users.empty())
        throw std::invalid_argument("noma_min_powers_static: no users");
    if (!(sigma_sq > 0.0))
        throw std::invalid_argument("noma_min_powers_static: sigma_sq must be > 0");
    for (const auto& u : users)
        u.validate();
    detail::check_ordering(users);
    detail::check_channels_positive(users);

    PowerBudget budget;
    budget.scheme = MaScheme::noma_static;
    budget.per_user.resize(users.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < users.size(); ++k) {
        const double tau = std::exp2(users[k].rate) - 1.0;
        const double g = users[k].channel * users[k].channel;
        budget.per_user[k] = tau * (sigma_sq / g + acc);
        acc += budget.per_user[k];
    }
    budget.total = acc;
    return budget;
}

enum class RisMode { fixed, per_slot };

// Orthogonal time slots, each carrying one user at K-fold rate:
//   P_k = (2^{K r_k} - 1) sigma^2 / |H_k|^2.
// In fixed (static-RIS) mode the channels are all taken under one shared
// configuration and the budget aggregate is the slot average; in per_slot
// (dynamic) mode each user's channel is the one of its own slot and the
// aggregate is the plain sum, exactly as the two outage conditions are
// written.
inline PowerBudget tdma_min_powers(std::span<const UserProfile> users, double sigma_sq,
                                   RisMode mode) {
    if (users.empty())
        throw std::invalid_argument("tdma_min_powers: no users");
    if (!(sigma_sq > 0.0))
        throw std::invalid_argument("tdma_min_powers: sigma_sq must be > 0");
    for (const auto& u : users)
        u.validate();
    detail::check_channels_positive(users);

    PowerBudget budget;
    budget.scheme = mode == RisMode::fixed ? MaScheme::tdma_static : MaScheme::tdma_dynamic;
    budget.per_user.resize(users.size());
    const double kd = static_cast<double>(users.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < users.size(); ++k) {
        const double g = users[k].channel * users[k].channel;
        budget.per_user[k] = (std::exp2(kd * users[k].rate) - 1.0) * sigma_sq / g;
        sum += budget.per_user[k];
    }
    budget.total = mode == RisMode::fixed ? sum / kd : sum;
    return budget;
}

// Orthogonal frequency blocks: P_k = (2^{K r_k} - 1) sigma^2 / (K |H_k|^2).
// Channel magnitudes must be the ones at each user's own carrier.
inline PowerBudget fdma_min_powers(std::span<const UserProfile> users, double sigma_sq) {
    if (users.empty())
        throw std::invalid_argument("fdma_min_powers: no users");
    if (!(sigma_sq > 0.0))
        throw std::invalid_argument("fdma_min_powers: sigma_sq must be > 0");
    for (const auto& u : users)
        u.validate();
    detail::check_channels_positive(users);

    PowerBudget budget;
    budget.scheme = MaScheme::fdma_static;
    budget.per_user.resize(users.size());
    const double kd = static_cast<double>(users.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < users.size(); ++k) {
        const double g = users[k].channel * users[k].channel;
        budget.per_user[k] = (std::exp2(kd * users[k].rate) - 1.0) * sigma_sq / (kd * g);
        sum += budget.per_user[k];
    }
    budget.total = sum;
    return budget;
}

// Dynamic-RIS NOMA: the static recursion run independently in each of the K
// slots with that slot's channel column. Per-slot powers use the full-rate
// exponent 2^{r_k} exactly as published (even though each slot nominally
// carries r_k/K; see docs). channels[t][k] is |H(k, theta_t)|; every slot
// must respect the user-index decoding order.
inline PowerBudget noma_hybrid_min_powers(std::span<const double> rates,
                                          const std::vector<std::vector<double>>& channels,
                                          double sigma_sq) {
    const std::size_t k_users = rates.size();
    if (k_users == 0)
        throw std::invalid_argument("noma_hybrid_min_powers: no users");
    if (channels.size() != k_users)
        throw std::invalid_argument("noma_hybrid_min_powers: need one slot per user");
    PowerBudget budget;
    budget.scheme = MaScheme::noma_dynamic;
    budget.per_slot.resize(channels.size());
    double total = 0.0;
    for (std::size_t t = 0; t < channels.size(); ++t) {
        if (channels[t].size() != k_users)
            throw std::invalid_argument("noma_hybrid_min_powers: slot " + std::to_string(t) +
                                        " channel count != K");
        std::vector<UserProfile> slot_users(k_users);
        for (std::size_t k = 0; k < k_users; ++k) {
            if (!(rates[k] > 0.0))
                throw std::invalid_argument("noma_hybrid_min_powers: rates must be > 0");
            slot_users[k] = {rates[k], channels[t][k]};
        }
        const PowerBudget slot = noma_min_powers_static(slot_users, sigma_sq);
        budget.per_slot[t] = slot.per_user;
        total += slot.total;
    }
    budget.total = total;
    return budget;
}

// Channel statistics of the user whose per-user NOMA outage is requested.
struct NomaChannelStats {
    Alignment alignment = Alignment::perfect; // perfect or random
    std::size_t m_elements = 1;
    double b = 1.0;         // Rayleigh scale (perfect-alignment branch fading)
    double h_sq_mean = 1.0; // per-branch E[h^2] (random-alignment power scale)
    double sigma_sq = 1.0;
    double p_rad = 1.0;
};

struct NomaUserOutage {
    double p_out;
    double mu_k;      // the user's own SINR factor tau_k/(a_k - tau_k sum_{l<k} a_l)
    double mu_max;    // max over i >= k, the threshold of the exact outage event
};

// Per-user NOMA outage under a fixed power split a_1..a_K. tau_i = 2^{r_i}-1,
// mu_i = tau_i / (a_i - tau_i sum_{l<i} a_l); the exact outage event is
// |H_k|^2 < mu_max_k sigma^2 / P_rad with mu_max_k = max_{i>=k} mu_i (also
// the threshold to hand to a Monte Carlo run). The returned closed forms are
// the published ones, written with mu_k:
//   perfect: b^-M mu_k^M / (2M)! (sigma^2/P_rad)^M
//   random:  1 - exp(-mu_k sigma^2 / (Omega_p P_rad)), Omega_p = M E[h^2]
inline NomaUserOutage noma_user_outage(std::span<const double> allocation,
                                       std::span<const double> rates, std::size_t k,
                                       const NomaChannelStats& stats) {
    const std::size_t k_users = allocation.size();
    if (rates.size() != k_users)
        throw std::invalid_argument("noma_user_outage: allocation/rates length mismatch");
    if (k >= k_users)
        throw std::invalid_argument("noma_user_outage: user index out of range");
    std::vector<double> mu(k_users);
    double prefix = 0.0; // sum_{l<i} a_l
    for (std::size_t i = 0; i < k_users; ++i) {
        const double tau = std::exp2(rates[i]) - 1.0;
        const double denom = allocation[i] - tau * prefix;
        if (i >= k && !(denom > 0.0))
            throw infeasible_error("noma_user_outage: allocation infeasible at index " +
                                   std::to_string(i) +
                                   " (a_i must exceed tau_i * sum_{l<i} a_l)");
        mu[i] = denom > 0.0 ? tau / denom : std::numeric_limits<double>::infinity();
        prefix += allocation[i];
    }
    double mu_max = mu[k];
    for (std::size_t i = k; i < k_users; ++i)
        mu_max = std::max(mu_max, mu[i]);

    const double md = static_cast<double>(stats.m_elements);
    double p = 0.0;
    switch (stats.alignment) {
    case Alignment::perfect:
        p = std::exp(md * (std::log(mu[k]) - std::log(stats.b) +
                           std::log(stats.sigma_sq / stats.p_rad)) -
                     std::lgamma(2.0 * md + 1.0));
        break;
    case Alignment::random: {
        const double omega = md * stats.h_sq_mean;
        p = -std::expm1(-mu[k] * stats.sigma_sq / (omega * stats.p_rad));
        break;
    }
    default:
        throw std::invalid_argument(
            "noma_user_outage: closed forms cover perfect and random alignment");
    }
    return {p, mu[k], mu_max};
}

struct AngularSpacing {
    double radians;
    bool feasible; // false: no angle satisfies the bound (right side > 1)
};

// Minimum angular spacing between two users (far user at d1, near at d2,
// d1 > d2) for the scanned aperture to transpose their decoding order:
//   sin(dphi) >= sqrt( 6/(pi^2 (M^2-1)) (lambda/dx)^2 (1 - (d2/d1)^beta) ).
inline AngularSpacing min_angular_spacing(std::size_t m_elements, double d1, double d2,
                                          double dx_over_lambda,
                                          double beta_pathloss = 2.0) {
    if (m_elements < 2)
        throw std::domain_error("min_angular_spacing: need M >= 2");
    if (!(d1 > d2 && d2 > 0.0))
        throw std::invalid_argument("min_angular_spacing: need d1 > d2 > 0");
    if (!(dx_over_lambda > 0.0))
        throw std::invalid_argument("min_angular_spacing: element pitch must be > 0");
    const double md = static_cast<double>(m_elements);
    const double ratio = 1.0 - std::pow(d2 / d1, beta_pathloss);
    const double rhs = std::sqrt(6.0 / (pi * pi * (md * md - 1.0)) /
                                 (dx_over_lambda * dx_over_lambda) * ratio);
    if (rhs > 1.0)
        return {0.5 * pi, false};
    return {std::asin(rhs), true};
}

inline double to_degrees(double radians) { return radians * 180.0 / pi; }

} // namespace ris

#endif // RIS_MULTI_ACCESS_HPP
