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

#ifndef RIS_CLI_HPP
#define RIS_CLI_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ris/ris.hpp"

namespace ris::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* version = "0.2.0";

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Values come from the command line first, then from the --config JSON file,
// then from the built-in default. CLI11 reports what was actually typed via
// Option::count().
inline void apply_config(CLI::App* app, const ordered_json& cfg) {
    for (const auto& [key, value] : cfg.items()) {
        CLI::Option* opt = app->get_option_no_throw("--" + key);
        if (opt == nullptr)
            throw config_error("config: unknown key '" + key + "'");
        if (opt->count() > 0)
            continue; // explicit flag wins
        if (value.is_boolean()) {
            if (value.get<bool>())
                opt->add_result("true");
            else
                continue;
        } else if (value.is_string()) {
            opt->add_result(value.get<std::string>());
        } else if (value.is_array()) {
            for (const auto& item : value)
                opt->add_result(item.is_string() ? item.get<std::string>() : item.dump());
        } else {
            opt->add_result(value.dump());
        }
        opt->run_callback();
    }
}

inline ordered_json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("config: cannot open " + path);
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("config: invalid JSON: ") + e.what());
    }
}

inline BranchDistribution make_distribution(const std::string& name, double b, double s,
                                            double c) {
    if (name == "rayleigh")
        return BranchDistribution::rayleigh(std::isnan(b) ? 1.0 : b);
    if (name == "rician") // unstated-default figure parameters: s = 1, b = 0.5 (K = 1)
        return BranchDistribution::rician(std::isnan(s) ? 1.0 : s,
                                          std::isnan(b) ? 0.5 : b);
    if (name == "degenerate")
        return BranchDistribution::degenerate(std::isnan(c) ? 1.0 : c);
    throw config_error("unknown distribution '" + name + "'");
}

inline unsigned resolve_threads(unsigned threads) {
    if (threads > 0)
        return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

struct AlignmentSpec {
    std::string align = "perfect";
    double theta0 = 0.0;
    double half_width = std::nan("");
    unsigned level = 0;
    std::string window; // "full" or "half"

    AlignmentModel resolve() const {
        if (align == "perfect")
            return AlignmentModel::perfect(theta0);
        if (align == "random")
            return AlignmentModel::random();
        if (align == "destructive")
            return AlignmentModel::destructive();
        if (align == "coherent") {
            double w = half_width;
            if (std::isnan(w)) {
                if (level == 0)
                    throw config_error("coherent alignment needs --half-width or --L");
                if (window.empty())
                    throw config_error(
                        "coherent --L needs an explicit --window (full|half); the two "
                        "conventions are never defaulted silently");
                const QuantizationWindow conv = window == "full"
                                                    ? QuantizationWindow::full_window
                                                    : QuantizationWindow::half_window;
                w = quantization_to_half_width(level, conv);
            }
            return AlignmentModel::coherent(theta0, w);
        }
        throw config_error("unknown alignment '" + align + "'");
    }
};

inline std::string compact(const ordered_json& j) { return j.dump(); }

} // namespace detail

// ---------------------------------------------------------------- outage --

struct OutageArgs {
    std::string config_path, out_path, summary_path;
    detail::AlignmentSpec spec;
    std::string dist = "rayleigh";
    double b = std::nan(""), s = std::nan(""), c = std::nan("");
    std::uint64_t m_elements = 1;
    double gamma0 = 1.0;
    double grid_start = 0.0, grid_stop = 30.0, grid_step = 5.0;
    std::uint64_t trials = 0; // 0: sized from p_target
    double p_target = 1e-3;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::uint64_t substream_base = 0;
    unsigned threads = 1;
    bool analytic = false;
    bool conditional = false;
};

inline int run_outage(const OutageArgs& a) {
    const BranchDistribution dist = detail::make_distribution(a.dist, a.b, a.s, a.c);
    const AlignmentModel model = a.spec.resolve();
    const SnrGrid grid = SnrGrid::linear_db(a.grid_start, a.grid_stop, a.grid_step, a.gamma0);
    const std::uint64_t trials =
        a.trials > 0 ? a.trials
                     : static_cast<std::uint64_t>(std::ceil(100.0 / a.p_target));
    const unsigned threads = detail::resolve_threads(a.threads);

    McOptions opt;
    opt.substream_base = a.substream_base;
    opt.threads = threads;

    OutageCurve curve =
        a.conditional
            ? mc_outage_perfect_conditional(dist, a.m_elements, grid, trials, a.seed, opt)
            : mc_outage_curve(model, dist, a.m_elements, grid, trials, a.seed, opt);

    if (a.analytic) {
        OutageCurve companion;
        switch (model.kind()) {
        case Alignment::perfect:
            companion = analytic_curve(grid, Provenance::asymptotic, [&](double g0, double gt) {
                return analytic_outage_perfect_asymptotic(a.m_elements, dist.scale_b(), g0, gt);
            });
            break;
        case Alignment::random:
            companion = analytic_curve(grid, Provenance::analytic, [&](double g0, double gt) {
                return analytic_outage_random(a.m_elements, dist, g0, gt);
            });
            break;
        case Alignment::coherent:
            companion = analytic_curve(grid, Provenance::bound, [&](double g0, double gt) {
                return coherent_upper_bound(a.m_elements, dist, g0, gt,
                                            model.half_width()).value;
            });
            break;
        case Alignment::destructive:
            companion = analytic_curve(grid, Provenance::analytic,
                                       [](double, double) { return 1.0; });
            break;
        }
        curve.points.insert(curve.points.end(), companion.points.begin(),
                            companion.points.end());
    }

    ordered_json echo;
    echo["command"] = "outage";
    echo["align"] = a.spec.align;
    echo["theta0"] = a.spec.theta0;
    if (!std::isnan(a.spec.half_width)) echo["half_width"] = a.spec.half_width;
    if (a.spec.level > 0) { echo["L"] = a.spec.level; echo["window"] = a.spec.window; }
    echo["dist"] = a.dist;
    echo["b"] = dist.kind() == FadingKind::degenerate ? 0.0 : dist.scale_b();
    if (dist.kind() == FadingKind::rician) echo["s"] = dist.specular_s();
    if (dist.kind() == FadingKind::degenerate) echo["c"] = dist.constant_c();
    echo["M"] = a.m_elements;
    echo["gamma0"] = a.gamma0;
    echo["grid_start"] = a.grid_start;
    echo["grid_stop"] = a.grid_stop;
    echo["grid_step"] = a.grid_step;
    echo["trials"] = trials;
    echo["seed"] = a.seed;
    echo["substream_base"] = a.substream_base;
    echo["analytic"] = a.analytic;
    echo["conditional"] = a.conditional;

    MetadataList meta = {{"tool", std::string("risphase ") + version},
                         {"seed", std::to_string(a.seed)},
                         {"config", detail::compact(echo)}};
    write_outage_csv(a.out_path, curve, meta);

    if (!a.summary_path.empty()) {
        ordered_json summary;
        summary["config"] = echo;
        try {
            OutageCurve mc_only;
            for (const auto& pt : curve.points)
                if (pt.provenance == Provenance::monte_carlo)
                    mc_only.points.push_back(pt);
            const DiversityEstimate d = estimate_diversity_order(mc_only);
            summary["diversity_order"] = d.order;
            summary["diversity_stderr"] = d.stderr_order;
            summary["fit_points"] = d.points_used;
            summary["fit_gamma_lo_db"] = d.gamma_lo_db;
            summary["fit_gamma_hi_db"] = d.gamma_hi_db;
        } catch (const estimation_error& e) {
            summary["diversity_error"] = e.what();
        }
        std::ofstream out(a.summary_path);
        if (!out)
            throw std::runtime_error("cannot open " + a.summary_path);
        out << summary.dump(2) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------- sweep-angle --

struct SweepArgs {
    std::string config_path, out_path;
    std::uint64_t m_elements = 8;
    double dx = 0.5;
    double theta0_deg = 0.0;
    std::vector<double> angles_deg;
    std::string dist = "rayleigh";
    double b = std::nan(""), s = std::nan(""), c = std::nan("");
    double gamma0 = 1.0;
    double grid_start = 0.0, grid_stop = 20.0, grid_step = 2.0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::uint64_t substream_base = 0;
    unsigned threads = 1;
};

inline int run_sweep_angle(const SweepArgs& a) {
    if (a.angles_deg.empty())
        throw config_error("sweep-angle: need at least one --angles-deg value");
    const BranchDistribution dist = detail::make_distribution(a.dist, a.b, a.s, a.c);
    const SnrGrid grid = SnrGrid::linear_db(a.grid_start, a.grid_stop, a.grid_step, a.gamma0);
    const unsigned threads = detail::resolve_threads(a.threads);
    RisGeometry geom{a.m_elements, a.dx, std::sin(a.theta0_deg * pi / 180.0)};
    geom.validate();

    ordered_json echo;
    echo["command"] = "sweep-angle";
    echo["M"] = a.m_elements;
    echo["dx"] = a.dx;
    echo["theta0_deg"] = a.theta0_deg;
    echo["angles_deg"] = a.angles_deg;
    echo["dist"] = a.dist;
    echo["b"] = dist.kind() == FadingKind::degenerate ? 0.0 : dist.scale_b();
    echo["gamma0"] = a.gamma0;
    echo["grid_start"] = a.grid_start;
    echo["grid_stop"] = a.grid_stop;
    echo["grid_step"] = a.grid_step;
    echo["trials"] = a.trials;
    echo["seed"] = a.seed;

    CsvWriter w(a.out_path);
    w.metadata("tool", std::string("risphase ") + version);
    w.metadata("seed", std::to_string(a.seed));
    w.metadata("config", detail::compact(echo));
    w.header({"angle_deg", "gamma_t_db", "p_out", "ci_low", "ci_high", "trials",
              "provenance", "p_out_clamped"});

    McOptions opt;
    opt.threads = threads;
    std::uint64_t base = a.substream_base;
    for (double ang : a.angles_deg) {
        const double u = std::sin(ang * pi / 180.0);
        AlignmentModel model = AlignmentModel::perfect(0.0);
        model.with_offsets(branch_phase_offsets(geom, u));
        opt.substream_base = base;
        const OutageCurve curve =
            mc_outage_curve(model, dist, a.m_elements, grid, a.trials, a.seed, opt);
        base += a.trials;
        for (const auto& pt : curve.points) {
            w.begin_row();
            w.field(ang);
            w.field(pt.gamma_t_db);
            w.field(pt.p_out);
            w.field(pt.ci_low);
            w.field(pt.ci_high);
            w.field(pt.trials);
            w.field(std::string(to_string(pt.provenance)));
            w.field(std::min(pt.p_out, 1.0));
            w.end_row();
        }
    }
    // perfect-alignment asymptote at the target direction, for reference
    if (dist.kind() == FadingKind::rayleigh) {
        const OutageCurve asym =
            analytic_curve(grid, Provenance::asymptotic, [&](double g0, double gt) {
                return analytic_outage_perfect_asymptotic(a.m_elements, dist.scale_b(), g0, gt);
            });
        for (const auto& pt : asym.points) {
            w.begin_row();
            w.field(a.theta0_deg);
            w.field(pt.gamma_t_db);
            w.field(pt.p_out);
            w.field(pt.ci_low);
            w.field(pt.ci_high);
            w.field(pt.trials);
            w.field(std::string(to_string(pt.provenance)));
            w.field(std::min(pt.p_out, 1.0));
            w.end_row();
        }
    }
    return 0;
}

// --------------------------------------------------------------- pattern --

struct PatternArgs {
    std::string config_path, out_path;
    std::uint64_t m_elements = 16;
    double dx = 0.5;
    double u0 = 0.0;
    std::uint64_t points = 2048;
    double band_lo = std::nan(""), band_hi = std::nan("");
    bool clamp_amplitude = false; // force |c_m| = 1 (degraded Woodward)
};

inline int run_pattern(const PatternArgs& a) {
    RisGeometry geom{a.m_elements, a.dx, a.u0};
    geom.validate();
    if (a.points < 2)
        throw config_error("pattern: need at least 2 points");

    const bool woodward = !std::isnan(a.band_lo) || !std::isnan(a.band_hi);
    std::vector<std::complex<double>> coeff;
    if (woodward) {
        if (std::isnan(a.band_lo) || std::isnan(a.band_hi) || !(a.band_hi > a.band_lo))
            throw config_error("pattern: --band-lo/--band-hi must define a band");
        coeff = woodward_coefficients(geom, WoodwardConfig::flat_band(geom, a.band_lo, a.band_hi));
        if (a.clamp_amplitude)
            for (auto& cm : coeff)
                if (std::abs(cm) > 0.0)
                    cm /= std::abs(cm);
    }

    ordered_json echo;
    echo["command"] = "pattern";
    echo["M"] = a.m_elements;
    echo["dx"] = a.dx;
    echo["u0"] = a.u0;
    echo["points"] = a.points;
    if (woodward) {
        echo["band_lo"] = a.band_lo;
        echo["band_hi"] = a.band_hi;
        echo["clamp_amplitude"] = a.clamp_amplitude;
    }

    CsvWriter w(a.out_path);
    w.metadata("tool", std::string("risphase ") + version);
    w.metadata("config", detail::compact(echo));
    w.header({"u", "F_linear", "F_db"});
    for (std::uint64_t i = 0; i < a.points; ++i) {
        const double u = -1.0 + 2.0 * static_cast<double>(i) /
                                    static_cast<double>(a.points - 1);
        const double f = woodward ? std::abs(synthesized_pattern(geom, coeff, u))
                                  : array_factor(geom, u);
        const double mag = std::fabs(f);
        const double fdb = mag > 1e-6 ? 20.0 * std::log10(mag) : -120.0;
        w.begin_row();
        w.field(u);
        w.field(f);
        w.field(std::max(fdb, -120.0));
        w.end_row();
    }
    return 0;
}

// ---------------------------------------------------------------- series --

struct SeriesArgs {
    std::string config_path, out_path;
    std::string dist = "rayleigh";
    double b = std::nan(""), s = std::nan("");
    std::uint64_t m_elements = 1;
    std::uint64_t order = 0; // 0: default 2M + 8
};

inline int run_series(const SeriesArgs& a) {
    const BranchDistribution dist = detail::make_distribution(a.dist, a.b, a.s, std::nan(""));
    const std::size_t order = a.order > 0 ? a.order : 2 * a.m_elements + 8;
    const InversePowerSeries branch = branch_series(dist, order);
    const InversePowerSeries chan = raise_to_power_m(branch, a.m_elements, order);
    const MaclaurinSeries mac = invert_termwise(chan);

    ordered_json echo;
    echo["command"] = "series";
    echo["dist"] = a.dist;
    echo["b"] = dist.scale_b();
    if (dist.kind() == FadingKind::rician) echo["s"] = dist.specular_s();
    echo["M"] = a.m_elements;
    echo["order"] = order;

    MetadataList meta = {{"tool", std::string("risphase ") + version},
                         {"config", detail::compact(echo)}};
    write_series_csv(a.out_path, chan, mac, meta);
    return 0;
}

// --------------------------------------------------------------- moments --

struct MomentsArgs {
    std::string config_path, out_path;
    detail::AlignmentSpec spec;
    std::string dist = "rayleigh";
    double b = std::nan(""), s = std::nan(""), c = std::nan("");
    std::uint64_t m_elements = 16;
    std::uint64_t trials = 0; // 0: analytic only
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

inline int run_moments(const MomentsArgs& a) {
    const BranchDistribution dist = detail::make_distribution(a.dist, a.b, a.s, a.c);
    const AlignmentModel model = a.spec.resolve();
    const MagnitudeMoments mm = magnitude_moments(model, dist, a.m_elements);

    ordered_json out;
    out["command"] = "moments";
    out["align"] = a.spec.align;
    out["dist"] = a.dist;
    out["M"] = a.m_elements;
    out["branch_mean"] = dist.moments().mean;
    out["branch_mean_square"] = dist.moments().mean_square;
    out["analytic_mean"] = mm.mean;
    out["analytic_variance"] = mm.variance;
    if (model.kind() == Alignment::coherent) {
        const RicianApprox ra =
            rician_approx_from_half_width(dist, a.m_elements, model.half_width());
        out["rician_alpha"] = ra.alpha;
        out["rician_beta_sq"] = ra.beta_sq;
    }
    if (model.kind() == Alignment::destructive) {
        // degenerate reading (|H| == 0) next to the unconstrained-component one
        out["destructive_variance_degenerate"] = 0.0;
        out["destructive_component_variance"] =
            destructive_component_variance(dist, a.m_elements);
    }
    if (a.trials > 0) {
        // fixed-size chunks, summed in chunk order: thread-count independent
        const std::uint64_t chunk = 1 << 16;
        const std::uint64_t n_chunks = (a.trials + chunk - 1) / chunk;
        std::vector<double> sum1(n_chunks, 0.0), sum2(n_chunks, 0.0);
        const unsigned threads = detail::resolve_threads(a.threads);
        auto worker = [&](std::uint64_t c_lo, std::uint64_t c_hi) {
            for (std::uint64_t ci = c_lo; ci < c_hi; ++ci) {
                const std::uint64_t lo = ci * chunk;
                const std::uint64_t hi = std::min(lo + chunk, a.trials);
                double s1 = 0.0, s2 = 0.0;
                for (std::uint64_t t = lo; t < hi; ++t) {
                    RandomStream rs(a.seed, t);
                    const double mag = draw_channel(model, dist, a.m_elements, rs).magnitude;
                    s1 += mag;
                    s2 += mag * mag;
                }
                sum1[ci] = s1;
                sum2[ci] = s2;
            }
        };
        std::vector<std::thread> pool;
        const std::uint64_t per = (n_chunks + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t lo = std::min<std::uint64_t>(w * per, n_chunks);
            const std::uint64_t hi = std::min<std::uint64_t>(lo + per, n_chunks);
            pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool)
            th.join();
        double s1 = 0.0, s2 = 0.0;
        for (std::uint64_t ci = 0; ci < n_chunks; ++ci) {
            s1 += sum1[ci];
            s2 += sum2[ci];
        }
        const double n = static_cast<double>(a.trials);
        const double mean = s1 / n;
        out["mc_trials"] = a.trials;
        out["mc_seed"] = a.seed;
        out["mc_mean"] = mean;
        out["mc_variance"] = s2 / n - mean * mean;
    }

    if (a.out_path.empty()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream f(a.out_path);
        if (!f)
            throw std::runtime_error("cannot open " + a.out_path);
        f << out.dump(2) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- ma-budget --

struct MaBudgetArgs {
    std::string config_path, out_path;
    std::string scheme;
    double sigma_sq = std::nan("");
    double p_rad = std::nan("");
};

// |H_k| composed from (distance, angle) through the scanned-aperture pattern
// and a power-law path loss: |H| = M |F(sin angle)| / d^(beta/2).
inline double compose_channel_magnitude(const RisGeometry& geom, double distance,
                                        double angle_deg, double beta) {
    const double u = std::sin(angle_deg * pi / 180.0);
    const double f = std::fabs(array_factor(geom, u));
    return static_cast<double>(geom.m_elements) * f / std::pow(distance, 0.5 * beta);
}

inline int run_ma_budget(const MaBudgetArgs& a) {
    if (a.config_path.empty())
        throw config_error("ma-budget: --config is required (users cannot be given as flags)");
    const ordered_json cfg = detail::load_config(a.config_path);

    const std::string scheme_name =
        !a.scheme.empty() ? a.scheme : cfg.value("scheme", std::string());
    const double sigma_sq =
        !std::isnan(a.sigma_sq) ? a.sigma_sq : cfg.value("sigma_sq", 1.0);
    const double p_rad = !std::isnan(a.p_rad) ? a.p_rad : cfg.value("P_rad", 1.0);
    if (scheme_name.empty())
        throw config_error("ma-budget: missing scheme");
    if (!cfg.contains("users") || !cfg["users"].is_array() || cfg["users"].empty())
        throw config_error("ma-budget: config needs a nonempty users array");

    std::optional<RisGeometry> geom;
    double beta = cfg.value("pathloss_beta", 2.0);
    if (cfg.contains("geometry")) {
        const auto& g = cfg["geometry"];
        geom = RisGeometry{g.value("M", std::uint64_t(1)), g.value("dx", 0.5),
                           g.value("u0", 0.0)};
        geom->validate();
    }

    std::vector<UserProfile> users;
    std::vector<double> rates;
    for (const auto& uj : cfg["users"]) {
        UserProfile u{};
        if (!uj.contains("rate"))
            throw config_error("ma-budget: every user needs a rate");
        u.rate = uj["rate"].get<double>();
        if (uj.contains("channel")) {
            u.channel = uj["channel"].get<double>();
        } else if (uj.contains("distance") && uj.contains("angle_deg")) {
            if (!geom)
                throw config_error("ma-budget: (distance, angle) users need a geometry block");
            u.channel = compose_channel_magnitude(*geom, uj["distance"].get<double>(),
                                                  uj["angle_deg"].get<double>(), beta);
        } else {
            throw config_error("ma-budget: user needs channel or (distance, angle_deg)");
        }
        users.push_back(u);
        rates.push_back(u.rate);
    }

    PowerBudget budget;
    if (scheme_name == "noma_static") {
        budget = noma_min_powers_static(users, sigma_sq);
    } else if (scheme_name == "tdma_static") {
        budget = tdma_min_powers(users, sigma_sq, RisMode::fixed);
    } else if (scheme_name == "fdma_static") {
        budget = fdma_min_powers(users, sigma_sq);
    } else if (scheme_name == "tdma_dynamic") {
        budget = tdma_min_powers(users, sigma_sq, RisMode::per_slot);
    } else if (scheme_name == "noma_dynamic") {
        std::vector<std::vector<double>> channels;
        if (cfg.contains("channels")) {
            channels = cfg["channels"].get<std::vector<std::vector<double>>>();
        } else {
            // one slot per user, identical shared-configuration channels
            channels.assign(users.size(), {});
            for (auto& slot : channels)
                for (const auto& u : users)
                    slot.push_back(u.channel);
        }
        budget = noma_hybrid_min_powers(rates, channels, sigma_sq);
    } else {
        throw config_error("ma-budget: unknown scheme '" + scheme_name + "'");
    }

    ordered_json out;
    out["command"] = "ma-budget";
    out["scheme"] = to_string(budget.scheme);
    out["sigma_sq"] = sigma_sq;
    out["P_rad"] = p_rad;
    if (!budget.per_user.empty())
        out["per_user"] = budget.per_user;
    if (!budget.per_slot.empty())
        out["per_slot"] = budget.per_slot;
    out["total"] = budget.total;
    out["feasible"] = true;
    out["system_outage"] = budget.system_outage(p_rad);

    if (a.out_path.empty()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream f(a.out_path);
        if (!f)
            throw std::runtime_error("cannot open " + a.out_path);
        f << out.dump(2) << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- spacing --

struct SpacingArgs {
    std::string config_path, out_path;
    std::uint64_t m_elements = 0;
    double d_ratio = 2.0; // d1/d2
    double dx = 0.5;
    double beta = 2.0;
};

inline int run_spacing(const SpacingArgs& a) {
    if (a.m_elements == 0)
        throw config_error("spacing: --M is required");
    const AngularSpacing sp =
        min_angular_spacing(a.m_elements, a.d_ratio, 1.0, a.dx, a.beta);

    ordered_json out;
    out["command"] = "spacing";
    out["M"] = a.m_elements;
    out["d_ratio"] = a.d_ratio;
    out["dx"] = a.dx;
    out["beta"] = a.beta;
    out["delta_phi_rad"] = sp.radians;
    out["delta_phi_deg"] = to_degrees(sp.radians);
    out["feasible"] = sp.feasible;

    std::cout << out.dump(2) << "\n";
    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path);
        if (!f)
            throw std::runtime_error("cannot open " + a.out_path);
        f << out.dump(2) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ dispatcher --

inline int run(std::vector<std::string> args) {
    CLI::App app{"risphase: RIS-assisted channel phase-alignment analysis"};
    app.require_subcommand(1);

    OutageArgs oa;
    SweepArgs sa;
    PatternArgs pa;
    SeriesArgs sea;
    MomentsArgs ma;
    MaBudgetArgs mba;
    SpacingArgs spa;

    auto add_dist_opts = [](CLI::App* cmd, std::string& dist, double& b, double& s,
                            double* c) {
        cmd->add_option("--dist", dist, "branch distribution: rayleigh|rician|degenerate");
        cmd->add_option("--b", b, "fading scale b (rayleigh default 1, rician default 0.5)");
        cmd->add_option("--s", s, "rician specular amplitude (default 1)");
        if (c)
            cmd->add_option("--c", *c, "degenerate amplitude (default 1)");
    };
    auto add_align_opts = [](CLI::App* cmd, detail::AlignmentSpec& spec) {
        cmd->add_option("--align", spec.align,
                        "alignment: perfect|coherent|random|destructive");
        cmd->add_option("--theta0", spec.theta0, "common phase theta0, radians");
        cmd->add_option("--half-width", spec.half_width,
                        "coherent phase-error half-width, radians");
        cmd->add_option("--L", spec.level, "quantization level (with --window)");
        cmd->add_option("--window", spec.window,
                        "L-to-half-width convention: full (pi/L) or half (pi/2L)")
            ->check(CLI::IsMember({"full", "half"}));
    };

    // outage
    CLI::App* out_cmd = app.add_subcommand("outage", "Monte Carlo + analytic outage curves");
    out_cmd->add_option("--config", oa.config_path, "JSON config; flags override");
    add_align_opts(out_cmd, oa.spec);
    add_dist_opts(out_cmd, oa.dist, oa.b, oa.s, &oa.c);
    out_cmd->add_option("--M", oa.m_elements, "element count");
    out_cmd->add_option("--gamma0", oa.gamma0, "SNR threshold, linear");
    out_cmd->add_option("--grid-start", oa.grid_start, "per-branch SNR grid start, dB");
    out_cmd->add_option("--grid-stop", oa.grid_stop, "grid stop, dB");
    out_cmd->add_option("--grid-step", oa.grid_step, "grid step, dB");
    out_cmd->add_option("--trials", oa.trials, "Monte Carlo trials (0: from --p-target)");
    out_cmd->add_option("--p-target", oa.p_target,
                        "target outage scale used to size trials (>= 100 events)");
    CLI::Option* seed_opt = out_cmd->add_option("--seed", oa.seed, "RNG seed (required)");
    out_cmd->add_option("--substream-base", oa.substream_base, "first substream id");
    out_cmd->add_option("--threads", oa.threads, "worker threads (0: hardware)");
    out_cmd->add_flag("--analytic", oa.analytic, "append the matching closed-form rows");
    out_cmd->add_flag("--conditional", oa.conditional,
                      "rare-event conditional sampling (perfect Rayleigh only)");
    out_cmd->add_option("--out", oa.out_path, "output CSV path")->required();
    out_cmd->add_option("--summary", oa.summary_path, "optional JSON summary path");

    // sweep-angle
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep-angle", "off-target-direction outage sweep");
    sweep_cmd->add_option("--config", sa.config_path, "JSON config; flags override");
    sweep_cmd->add_option("--M", sa.m_elements, "element count");
    sweep_cmd->add_option("--dx", sa.dx, "element pitch over wavelength");
    sweep_cmd->add_option("--theta0-deg", sa.theta0_deg, "scan direction, degrees");
    sweep_cmd->add_option("--angles-deg", sa.angles_deg, "user angles, degrees")
        ->delimiter(',');
    add_dist_opts(sweep_cmd, sa.dist, sa.b, sa.s, &sa.c);
    sweep_cmd->add_option("--gamma0", sa.gamma0, "SNR threshold, linear");
    sweep_cmd->add_option("--grid-start", sa.grid_start, "grid start, dB");
    sweep_cmd->add_option("--grid-stop", sa.grid_stop, "grid stop, dB");
    sweep_cmd->add_option("--grid-step", sa.grid_step, "grid step, dB");
    sweep_cmd->add_option("--trials", sa.trials, "Monte Carlo trials per angle");
    CLI::Option* sweep_seed = sweep_cmd->add_option("--seed", sa.seed, "RNG seed (required)");
    sweep_cmd->add_option("--substream-base", sa.substream_base, "first substream id");
    sweep_cmd->add_option("--threads", sa.threads, "worker threads (0: hardware)");
    sweep_cmd->add_option("--out", sa.out_path, "output CSV path")->required();

    // pattern
    CLI::App* pat_cmd = app.add_subcommand("pattern", "array-factor / Woodward pattern CSV");
    pat_cmd->add_option("--config", pa.config_path, "JSON config; flags override");
    pat_cmd->add_option("--M", pa.m_elements, "element count");
    pat_cmd->add_option("--dx", pa.dx, "element pitch over wavelength");
    pat_cmd->add_option("--u0", pa.u0, "scan direction sine");
    pat_cmd->add_option("--points", pa.points, "number of direction samples");
    pat_cmd->add_option("--band-lo", pa.band_lo, "Woodward flat band lower sin(theta)");
    pat_cmd->add_option("--band-hi", pa.band_hi, "Woodward flat band upper sin(theta)");
    pat_cmd->add_flag("--clamp-amplitude", pa.clamp_amplitude,
                      "clamp Woodward excitations to unit modulus (degraded)");
    pat_cmd->add_option("--out", pa.out_path, "output CSV path")->required();

    // series
    CLI::App* ser_cmd = app.add_subcommand("series", "Laplace/Maclaurin series dump");
    ser_cmd->add_option("--config", sea.config_path, "JSON config; flags override");
    add_dist_opts(ser_cmd, sea.dist, sea.b, sea.s, nullptr);
    ser_cmd->add_option("--M", sea.m_elements, "convolution power M");
    ser_cmd->add_option("--order", sea.order, "truncation order (0: 2M + 8)");
    ser_cmd->add_option("--out", sea.out_path, "output CSV path")->required();

    // moments
    CLI::App* mom_cmd = app.add_subcommand("moments", "closed-form |H| moments (+ MC check)");
    mom_cmd->add_option("--config", ma.config_path, "JSON config; flags override");
    add_align_opts(mom_cmd, ma.spec);
    add_dist_opts(mom_cmd, ma.dist, ma.b, ma.s, &ma.c);
    mom_cmd->add_option("--M", ma.m_elements, "element count");
    mom_cmd->add_option("--trials", ma.trials, "Monte Carlo cross-check trials (0: skip)");
    mom_cmd->add_option("--seed", ma.seed, "RNG seed (required when --trials > 0)");
    mom_cmd->add_option("--threads", ma.threads, "worker threads (0: hardware)");
    mom_cmd->add_option("--out", ma.out_path, "output JSON path (default: stdout)");

    // ma-budget
    CLI::App* mab_cmd = app.add_subcommand("ma-budget", "multi-access minimum-power budgets");
    mab_cmd->add_option("--config", mba.config_path, "JSON config with the users array")
        ->required();
    mab_cmd->add_option("--scheme", mba.scheme,
                        "noma_static|tdma_static|fdma_static|noma_dynamic|tdma_dynamic");
    mab_cmd->add_option("--sigma-sq", mba.sigma_sq, "noise power");
    mab_cmd->add_option("--p-rad", mba.p_rad, "available radiated power");
    mab_cmd->add_option("--out", mba.out_path, "output JSON path (default: stdout)");

    // spacing
    CLI::App* spc_cmd =
        app.add_subcommand("spacing", "decoding-order transpose angular spacing");
    spc_cmd->add_option("--config", spa.config_path, "JSON config; flags override");
    spc_cmd->add_option("--M", spa.m_elements, "element count");
    spc_cmd->add_option("--d-ratio", spa.d_ratio, "far/near distance ratio d1/d2");
    spc_cmd->add_option("--dx", spa.dx, "element pitch over wavelength");
    spc_cmd->add_option("--beta", spa.beta, "path-loss exponent");
    spc_cmd->add_option("--out", spa.out_path, "optional JSON output path");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        auto maybe_config = [&](CLI::App* cmd, const std::string& path) {
            if (!path.empty())
                detail::apply_config(cmd, detail::load_config(path));
        };
        if (app.got_subcommand(out_cmd)) {
            maybe_config(out_cmd, oa.config_path);
            if (seed_opt->count() == 0)
                throw config_error("outage: --seed is mandatory (no wall-clock default)");
            return run_outage(oa);
        }
        if (app.got_subcommand(sweep_cmd)) {
            maybe_config(sweep_cmd, sa.config_path);
            if (sweep_seed->count() == 0)
                throw config_error("sweep-angle: --seed is mandatory (no wall-clock default)");
            return run_sweep_angle(sa);
        }
        if (app.got_subcommand(pat_cmd)) {
            maybe_config(pat_cmd, pa.config_path);
            return run_pattern(pa);
        }
        if (app.got_subcommand(ser_cmd)) {
            maybe_config(ser_cmd, sea.config_path);
            return run_series(sea);
        }
        if (app.got_subcommand(mom_cmd)) {
            maybe_config(mom_cmd, ma.config_path);
            if (ma.trials > 0 && mom_cmd->get_option("--seed")->count() == 0)
                throw config_error("moments: --seed is mandatory when --trials > 0");
            return run_moments(ma);
        }
        if (app.got_subcommand(mab_cmd)) {
            return run_ma_budget(mba);
        }
        if (app.got_subcommand(spc_cmd)) {
            maybe_config(spc_cmd, spa.config_path);
            return run_spacing(spa);
        }
        throw config_error("no subcommand");
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace ris::cli

#endif // RIS_CLI_HPP
