// conevac: command-line driver for the light-cone quadrant toolkit.
//
// Subcommands: quadrant, modes, bogoliubov, vacuum, detector, feasibility,
// verify.  Parameters come from flags or a JSON config file (--config);
// flags win over config keys, which mirror the long flag names one-to-one
// (e.g. --k-grid <-> "k-grid").  Every output file embeds the resolved
// parameters that determine its content; execution details (--out,
// --threads) are omitted from the dump, so identical configurations yield
// bit-identical artifacts wherever and however they run.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage/config error.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "conevac/bogoliubov.hpp"
#include "conevac/detector.hpp"
#include "conevac/feasibility.hpp"
#include "conevac/io.hpp"
#include "conevac/modes.hpp"
#include "conevac/parallel.hpp"
#include "conevac/reference.hpp"
#include "conevac/spacetime.hpp"
#include "conevac/vacuum.hpp"
#include "conevac/verify.hpp"

namespace {

using conevac::Json;

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExitWith {
    int code;
};

// Binds options to values, remembers how to fill unset ones from a config
// object, and can dump the fully resolved parameter set.
class ParamBinder {
  public:
    explicit ParamBinder(CLI::App* sub) : sub_(sub) {}

    template <class T>
    CLI::Option* add(const std::string& flag, T& value, const std::string& desc) {
        CLI::Option* opt = add_execution(flag, value, desc);
        const std::string key = config_key(flag);
        dumpers_.push_back([key, &value](Json& j) { j[key] = value; });
        return opt;
    }

    // For parameters that steer where or how the run executes rather than
    // what it computes: merged from config files like any other key, but
    // left out of the embedded resolved dump so artifacts stay byte-identical
    // across output locations and worker counts.
    template <class T>
    CLI::Option* add_execution(const std::string& flag, T& value, const std::string& desc) {
        CLI::Option* opt = sub_->add_option(flag, value, desc);
        const std::string key = config_key(flag);
        mergers_.push_back([opt, key, &value](const Json& cfg) {
            if (opt->count() > 0 || !cfg.contains(key)) return;
            try {
                value = cfg.at(key).get<T>();
            } catch (const Json::exception& e) {
                throw UsageError("config key '" + key + "': " + e.what());
            }
        });
        return opt;
    }

    void merge(const Json& cfg) {
        for (const auto& m : mergers_) m(cfg);
    }

    Json resolved(const std::string& subcommand) const {
        Json j = Json::object();
        for (const auto& d : dumpers_) d(j);
        j["subcommand"] = subcommand;
        return j;
    }

  private:
    static std::string config_key(const std::string& flag) {
        return flag.substr(flag.find_first_not_of('-'));
    }

    CLI::App* sub_;
    std::vector<std::function<void(const Json&)>> mergers_;
    std::vector<std::function<void(Json&)>> dumpers_;
};

struct CommonParams {
    std::string config_path;
    std::string out;
    unsigned threads = 0;
};

void add_common(CLI::App* sub, ParamBinder& bind, CommonParams& common) {
    sub->add_option("--config", common.config_path,
                    "JSON config file; flags override config keys of the same name");
    bind.add_execution("--out", common.out,
                       "output directory (default: $CONEVAC_OUT_DIR, then current directory)");
    bind.add_execution("--threads", common.threads,
                       "worker threads for sweeps (0 = hardware default)");
}

Json load_config(const std::string& path) {
    if (path.empty()) return Json::object();
    try {
        return conevac::load_json_file(path);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

void require_set(double v, const char* flag) {
    if (!std::isfinite(v))
        throw UsageError(std::string("missing required parameter ") + flag +
                         " (pass the flag or set the config key)");
}

void announce(const std::filesystem::path& file) { std::cout << "wrote " << file.string() << "\n"; }

// ------------------------------------------------------------------
// quadrant
// ------------------------------------------------------------------

struct QuadrantParams {
    CommonParams common;
    double t = kUnset, z = kUnset, a = 1.0;
};

void run_quadrant(const QuadrantParams& p, const Json& resolved) {
    using namespace conevac;
    const auto dir = resolve_out_dir(p.common.out);

    const SpacetimeEvent ev{p.t, p.z};
    const Region region = classify(ev);
    Json point;
    point["t"] = p.t;
    point["z"] = p.z;
    point["region"] = to_string(region);
    if (region != Region::Boundary) {
        const NullCoord nc = to_null(ev, p.a);
        const QuadrantCoord qc = to_quadrant(ev, p.a);
        const SpacetimeEvent back = from_quadrant(qc);
        point["quadrant"] = to_string(qc.quadrant);
        point["u_time"] = qc.u_time;
        point["u_space"] = qc.u_space;
        point["V"] = nc.V;
        point["U"] = nc.U;
        point["v_local"] = nc.v_local;
        point["u_local"] = nc.u_local;
        point["t_back"] = back.t;
        point["z_back"] = back.z;
        point["roundtrip_error"] =
            std::max(std::abs(back.t - p.t), std::abs(back.z - p.z));
    }
    point["config"] = resolved;
    save_json_file(dir / "quadrant_point.json", point);
    announce(dir / "quadrant_point.json");

    CsvWriter csv(dir / "quadrant_roundtrip.csv");
    csv.metadata_block(resolved);
    csv.row("quadrant", "u_time", "u_space", "t", "z", "region", "u_time_back", "u_space_back",
            "roundtrip_error");
    const std::array<double, 4> grid{-0.6, -0.2, 0.2, 0.6};
    for (Quadrant q : {Quadrant::F, Quadrant::P, Quadrant::R, Quadrant::L})
        for (double ut : grid)
            for (double us : grid) {
                const SpacetimeEvent e = from_quadrant({q, ut, us, p.a});
                const QuadrantCoord back = to_quadrant(e, p.a);
                const double err =
                    std::max(std::abs(back.u_time - ut), std::abs(back.u_space - us));
                csv.row(to_string(q), ut, us, e.t, e.z, to_string(classify(e)), back.u_time,
                        back.u_space, err);
            }
    announce(dir / "quadrant_roundtrip.csv");
    std::cout << "event (t=" << p.t << ", z=" << p.z << ") -> region " << to_string(region)
              << "\n";
}

// ------------------------------------------------------------------
// modes
// ------------------------------------------------------------------

struct ModesParams {
    CommonParams common;
    double omega = kUnset, a = 1.0, delta = 0.01;
    double v_min = 0.01, v_max = 100.0;
    unsigned v_count = 41;
    std::vector<double> omega_grid{0.5, 1.0, 2.0};
};

void run_modes(const ModesParams& p, const Json& resolved) {
    using namespace conevac;
    if (!(p.v_min > 0.0) || !(p.v_max > p.v_min) || p.v_count < 2)
        throw UsageError("modes: need 0 < v-min < v-max and v-count >= 2");
    const auto dir = resolve_out_dir(p.common.out);

    {
        CsvWriter csv(dir / "modes_table.csv");
        csv.metadata_block(resolved);
        csv.row("V", "re_g_future", "im_g_future", "re_g_past", "im_g_past", "re_G", "im_G",
                "re_Gbar", "im_Gbar");
        const ModeSpec fut{Quadrant::F, p.omega, p.a};
        const ModeSpec pas{Quadrant::P, p.omega, p.a};
        auto log_point = [&](unsigned j) {
            const double s = static_cast<double>(j) / (p.v_count - 1);
            return std::exp(std::log(p.v_min) + s * (std::log(p.v_max) - std::log(p.v_min)));
        };
        auto emit = [&](double V) {
            const auto gf = mode_g_of_V(fut, V);
            const auto gp = mode_g_of_V(pas, V);
            const auto G = mode_G(p.omega, p.a, V, GVariant::G, p.delta);
            const auto Gb = mode_G(p.omega, p.a, V, GVariant::GBar, p.delta);
            csv.row(V, gf.real(), gf.imag(), gp.real(), gp.imag(), G.real(), G.imag(), Gb.real(),
                    Gb.imag());
        };
        for (unsigned j = p.v_count; j-- > 0;) emit(-log_point(j));
        for (unsigned j = 0; j < p.v_count; ++j) emit(log_point(j));
        announce(dir / "modes_table.csv");
    }

    {
        const auto ladder = default_refinement_ladder(p.a);
        struct Row {
            double omega;
            int level;
            FrequencyScanResult res;
            double delta;
        };
        std::vector<Row> rows(p.omega_grid.size() * ladder.size());
        parallel_for(p.omega_grid.size(), p.common.threads, [&](std::size_t i) {
            const double w = p.omega_grid[i];
            for (std::size_t l = 0; l < ladder.size(); ++l) {
                const auto& level = ladder[l];
                auto res = negative_frequency_fraction(
                    [&](double V) {
                        return mode_G(w, p.a, V, GVariant::G, level.regulator_delta);
                    },
                    level.scan);
                rows[i * ladder.size() + l] =
                    Row{w, static_cast<int>(l), std::move(res), level.regulator_delta};
            }
        });
        CsvWriter csv(dir / "modes_fraction.csv");
        csv.metadata_block(resolved);
        csv.row("omega", "level", "half_width", "n_samples", "sigma", "delta", "guard_bins",
                "fraction", "total_energy");
        for (const auto& r : rows) {
            const auto& c = r.res.config;
            csv.row(r.omega, r.level, c.half_width, static_cast<long long>(c.n_samples), c.sigma,
                    r.delta, c.guard_bins, r.res.fraction, r.res.total_energy);
            std::cout << "omega=" << r.omega << " level=" << r.level
                      << " negative-frequency fraction=" << r.res.fraction << "\n";
        }
        announce(dir / "modes_fraction.csv");
    }
}

// ------------------------------------------------------------------
// bogoliubov
// ------------------------------------------------------------------

struct BogoliubovParams {
    CommonParams common;
    double omega = kUnset, a = 1.0, delta_scale = 0.1;
    int levels = 5;
    std::vector<double> k_grid{0.5, 1.0, 2.0};
    std::string quadrants = "FP";
};

conevac::Quadrant quadrant_of(char c) {
    switch (c) {
        case 'F': return conevac::Quadrant::F;
        case 'P': return conevac::Quadrant::P;
        case 'R': return conevac::Quadrant::R;
        case 'L': return conevac::Quadrant::L;
    }
    throw UsageError(std::string("unknown quadrant letter '") + c + "' (use F, P, R, L)");
}

void run_bogoliubov(const BogoliubovParams& p, const Json& resolved) {
    using namespace conevac;
    if (p.k_grid.empty()) throw UsageError("bogoliubov: k-grid must be non-empty");
    if (p.levels < 3) throw UsageError("bogoliubov: levels must be >= 3");
    const auto dir = resolve_out_dir(p.common.out);

    std::vector<Quadrant> quads;
    for (char c : p.quadrants) quads.push_back(quadrant_of(c));

    struct Slot {
        Quadrant q;
        double k;
        std::vector<BogoliubovEntry> ladder;
        BogoliubovEntry extrapolated;
    };
    std::vector<Slot> slots;
    for (Quadrant q : quads)
        for (double k : p.k_grid) slots.push_back({q, k, {}, {}});
    parallel_for(slots.size(), p.common.threads, [&](std::size_t i) {
        auto& s = slots[i];
        const ModeSpec spec{s.q, p.omega, p.a};
        for (double d : default_delta_ladder(s.k, p.levels, p.delta_scale))
            s.ladder.push_back(project_coefficients(spec, s.k, d));
        s.extrapolated = extrapolate_delta(s.ladder);
    });

    CsvWriter csv(dir / "bogoliubov_coefficients.csv");
    csv.metadata_block(resolved);
    csv.row("quadrant", "omega", "k", "delta", "re_alpha", "im_alpha", "re_beta", "im_beta",
            "err");
    for (const auto& s : slots) {
        for (const auto& e : s.ladder)
            csv.row(to_string(e.quadrant), e.omega, e.k, e.regulator_delta, e.alpha.real(),
                    e.alpha.imag(), e.beta.real(), e.beta.imag(), e.error_estimate);
        const auto& e = s.extrapolated;
        csv.row(to_string(e.quadrant), e.omega, e.k, 0.0, e.alpha.real(), e.alpha.imag(),
                e.beta.real(), e.beta.imag(), e.error_estimate);
    }
    announce(dir / "bogoliubov_coefficients.csv");

    const RelationReport rep =
        verify_relations(p.omega, p.a, p.k_grid, p.levels, p.delta_scale);
    Json rj;
    rj["omega"] = rep.omega;
    rj["a"] = rep.a;
    rj["k_grid"] = rep.k_grid;
    rj["dev_alpha_FR"] = rep.dev_alpha_FR;
    rj["dev_beta_FR"] = rep.dev_beta_FR;
    rj["dev_alpha_PL"] = rep.dev_alpha_PL;
    rj["dev_beta_PL"] = rep.dev_beta_PL;
    rj["dev_betaP_vs_alphaF"] = rep.dev_betaP_vs_alphaF;
    rj["dev_betaF_vs_alphaP"] = rep.dev_betaF_vs_alphaP;
    rj["max_deviation"] = rep.max_deviation();
    rj["ratio_limit"] = reference::coefficient_ratio_limit(p.omega, p.a);
    rj["config"] = resolved;
    save_json_file(dir / "bogoliubov_relations.json", rj);
    announce(dir / "bogoliubov_relations.json");
    std::cout << "max relation deviation = " << rep.max_deviation() << "\n";
}

// ------------------------------------------------------------------
// vacuum
// ------------------------------------------------------------------

struct VacuumParams {
    CommonParams common;
    double omega = kUnset, a = 1.0, deficit_tol = 1e-12;
    int n_trunc = -1;  // -1 = choose automatically from deficit-tol
};

void run_vacuum(const VacuumParams& p, const Json& resolved) {
    using namespace conevac;
    const auto dir = resolve_out_dir(p.common.out);
    const double q = squeeze_q(p.omega, p.a);
    int n_trunc = p.n_trunc;
    bool capped = false;
    if (n_trunc < 0) {
        const auto tc = default_truncation(q, p.deficit_tol);
        n_trunc = tc.n_trunc;
        capped = tc.capped;
        if (capped)
            std::cerr << "warning: truncation capped at n = " << n_trunc
                      << "; deficit target not reached\n";
    }
    const TwoModeState st(p.omega, p.a, n_trunc);

    Json j;
    j["omega"] = p.omega;
    j["a"] = p.a;
    j["q"] = q;
    j["normalization_C"] = st.coefficient(0);
    j["n_trunc"] = n_trunc;
    j["truncation_capped"] = capped;
    j["deficit_measured"] = 1.0 - st.normalization();
    j["deficit_exact"] = reference::normalization_deficit(q, n_trunc);
    j["entropy_truncated"] = st.entropy();
    j["entropy_closed"] = reference::entanglement_entropy_closed(q);
    j["mean_occupation_truncated"] = st.mean_occupation();
    j["mean_occupation_closed"] = reference::mean_occupation_closed(p.omega, p.a);
    j["residual_f_annihilation"] = st.residual_norm(VacuumRelation::FAnnihilation);
    j["residual_p_annihilation"] = st.residual_norm(VacuumRelation::PAnnihilation);
    j["residual_number_balance"] = st.residual_norm(VacuumRelation::NumberBalance);
    j["edge_residual_exact"] = reference::edge_residual_exact(q, n_trunc);
    j["edge_residual_bound"] = reference::edge_residual_bound(q, n_trunc);
    j["config"] = resolved;
    save_json_file(dir / "vacuum_summary.json", j);
    announce(dir / "vacuum_summary.json");

    CsvWriter csv(dir / "vacuum_spectrum.csv");
    csv.metadata_block(resolved);
    csv.row("n", "c_n", "p_n");
    for (int n = 0; n <= n_trunc; ++n) csv.row(n, st.coefficient(n), st.probability(n));
    announce(dir / "vacuum_spectrum.csv");

    std::cout << "q = " << fmt_g17(q) << "\n"
              << "n_bar = " << fmt_g17(st.mean_occupation()) << " (closed form "
              << fmt_g17(reference::mean_occupation_closed(p.omega, p.a)) << ")\n"
              << "S = " << fmt_g17(st.entropy()) << " (closed form "
              << fmt_g17(reference::entanglement_entropy_closed(q)) << ")\n";
}

// ------------------------------------------------------------------
// detector
// ------------------------------------------------------------------

struct DetectorParams {
    CommonParams common;
    double a = 1.0;
    double E = 1.0;            // gap for the windowed comparison
    double epsilon = 1e-3;     // regulator for the windowed comparison
    double window_s1 = -5.0, window_s2 = 5.0;
    double range = 200.0;      // stationary-rate integration half-range
    std::vector<double> e_grid{0.5, 1.0, 2.0};
    std::vector<double> epsilon_ladder{1e-2, 1e-3, 1e-4};
    unsigned samples = 1000;
    unsigned seed = 777;
};

void run_detector(const DetectorParams& p, const Json& resolved) {
    using namespace conevac;
    if (p.e_grid.empty() || p.epsilon_ladder.empty())
        throw UsageError("detector: e-grid and epsilon-ladder must be non-empty");
    const auto dir = resolve_out_dir(p.common.out);

    // Pointwise identity of the two trajectory forms at epsilon = 0.
    {
        std::mt19937 rng(p.seed);
        std::uniform_real_distribution<double> mid(-10.0 / p.a, 10.0 / p.a);
        std::uniform_real_distribution<double> log_d(std::log(0.1 / p.a), std::log(8.0 / p.a));
        std::vector<std::pair<double, double>> pts;
        pts.reserve(p.samples);
        for (unsigned i = 0; i < p.samples; ++i) {
            double d = std::exp(log_d(rng));
            if (rng() & 1u) d = -d;
            const double m = mid(rng);
            pts.emplace_back(m + 0.5 * d, m - 0.5 * d);
        }
        Json j;
        j["max_relative_deviation"] = integrand_identity_check(p.a, pts);
        j["n_samples"] = p.samples;
        j["seed"] = p.seed;
        j["config"] = resolved;
        save_json_file(dir / "detector_identity.json", j);
        announce(dir / "detector_identity.json");
    }

    // Rate sweep over +-E with the regulator ladder and its extrapolation.
    std::vector<double> signed_E;
    for (double e : p.e_grid) {
        signed_E.push_back(-e);
        signed_E.push_back(e);
    }
    std::sort(signed_E.begin(), signed_E.end());
    struct RateSlot {
        double E = 0.0;
        std::vector<ResponseResult> ladder;
        ResponseResult extrapolated;
    };
    std::vector<RateSlot> rate_slots(signed_E.size());
    parallel_for(signed_E.size(), p.common.threads, [&](std::size_t i) {
        auto& s = rate_slots[i];
        s.E = signed_E[i];
        for (double eps : p.epsilon_ladder)
            s.ladder.push_back(response_rate(s.E, p.a, eps, p.range));
        s.extrapolated = rate_epsilon_extrapolated(s.E, p.a, p.epsilon_ladder, p.range);
    });
    {
        CsvWriter csv(dir / "detector_rates.csv");
        csv.metadata_block(resolved);
        csv.row("E", "rate", "error", "epsilon", "range");
        for (const auto& s : rate_slots) {
            for (const auto& r : s.ladder)
                csv.row(s.E, r.rate(), r.error_estimate, r.epsilon, p.range);
            csv.row(s.E, s.extrapolated.rate(), s.extrapolated.error_estimate, 0.0, p.range);
        }
        announce(dir / "detector_rates.csv");
    }

    // Detailed balance from the extrapolated rates.
    {
        auto extrapolated_rate = [&](double E) {
            for (const auto& s : rate_slots)
                if (s.E == E) return s.extrapolated.rate();
            throw std::logic_error("detector: rate slot missing");
        };
        Json arr = Json::array();
        for (double e : p.e_grid) {
            const double rp = extrapolated_rate(e), rn = extrapolated_rate(-e);
            const double ratio = rp / rn;
            const double boltz = std::exp(-2.0 * std::numbers::pi * e / p.a);
            Json b;
            b["E"] = e;
            b["rate_positive"] = rp;
            b["rate_negative"] = rn;
            b["ratio"] = ratio;
            b["boltzmann"] = boltz;
            b["deviation_abs"] = std::abs(ratio - boltz);
            b["deviation_rel"] = std::abs(ratio - boltz) / boltz;
            b["oracle_positive"] = reference::rate_closed_form(e, p.a, 0.0);
            b["oracle_negative"] = reference::rate_closed_form(-e, p.a, 0.0);
            arr.push_back(std::move(b));
        }
        Json j;
        j["balance"] = std::move(arr);
        j["config"] = resolved;
        save_json_file(dir / "detector_balance.json", j);
        announce(dir / "detector_balance.json");
    }

    // Matched-window comparison of the two trajectory forms.
    {
        const auto in = windowed_response(p.E, TrajectoryKind::InertialScaled, p.window_s1,
                                          p.window_s2, p.a, p.epsilon);
        const auto ac = windowed_response(p.E, TrajectoryKind::Accelerated, p.window_s1,
                                          p.window_s2, p.a, p.epsilon);
        const double diff = std::abs(in.value - ac.value);
        const double combined = in.error_estimate + ac.error_estimate;
        Json j;
        j["E"] = p.E;
        j["epsilon"] = p.epsilon;
        j["window"] = {p.window_s1, p.window_s2};
        j["inertial_re"] = in.value.real();
        j["inertial_im"] = in.value.imag();
        j["inertial_error"] = in.error_estimate;
        j["accelerated_re"] = ac.value.real();
        j["accelerated_im"] = ac.value.imag();
        j["accelerated_error"] = ac.error_estimate;
        j["difference"] = diff;
        j["combined_error"] = combined;
        j["within_twice_combined_error"] = diff < 2.0 * combined;
        j["reduced_form_value"] =
            reference::windowed_response_reduced(p.E, p.a, p.epsilon, p.window_s1, p.window_s2);
        j["config"] = resolved;
        save_json_file(dir / "detector_window.json", j);
        announce(dir / "detector_window.json");
        std::cout << "windowed |inertial - accelerated| = " << diff << " (2x combined error "
                  << 2.0 * combined << ")\n";
    }
}

// ------------------------------------------------------------------
// feasibility
// ------------------------------------------------------------------

struct FeasibilityParams {
    CommonParams common;
    double temperature = 1.0;
    double t1 = 1.0, t2 = 10.0, ebar1 = 1.0;
    double scenario_a = kUnset;  // default: the scaling constant for --temperature
};

void run_feasibility(const FeasibilityParams& p, const Json& resolved) {
    using namespace conevac;
    const auto dir = resolve_out_dir(p.common.out);
    ScalingScenario sc;
    sc.a = std::isfinite(p.scenario_a) ? p.scenario_a : a_for_temperature(p.temperature);
    sc.t1 = p.t1;
    sc.t2 = p.t2;
    sc.e_bar_1 = p.ebar1;
    const FeasibilityReport rep = feasibility_report(p.temperature, sc);

    Json j;
    j["temperature_K"] = rep.temperature_K;
    j["a_rad_per_s"] = rep.a_rad_per_s;
    j["a_ordinary_Hz"] = rep.a_ordinary_Hz;
    j["unruh_acceleration_m_per_s2"] = rep.unruh_acceleration;
    j["thermalization_threshold"] = rep.threshold;
    j["thermalization_margin"] = rep.margin;
    j["scenario"] = {{"a", rep.scenario.a},
                     {"t1", rep.scenario.t1},
                     {"t2", rep.scenario.t2},
                     {"e_bar_1", rep.scenario.e_bar_1},
                     {"e_bar_2", rep.scenario.e_bar_2()},
                     {"t1_ebar1", rep.scenario.t1 * rep.scenario.e_bar_1}};
    j["config"] = resolved;
    save_json_file(dir / "feasibility_report.json", j);
    announce(dir / "feasibility_report.json");

    std::cout << "T = " << fmt_g17(rep.temperature_K) << " K\n"
              << "a = " << fmt_g17(rep.a_rad_per_s) << " rad/s ("
              << fmt_g17(rep.a_ordinary_Hz) << " Hz ordinary-frequency convention)\n"
              << "equivalent Unruh acceleration = " << fmt_g17(rep.unruh_acceleration)
              << " m/s^2\n"
              << "thermalization margin = " << fmt_g17(rep.margin) << " (threshold "
              << fmt_g17(rep.threshold) << ")\n";
}

// ------------------------------------------------------------------
// verify
// ------------------------------------------------------------------

struct VerifyParams {
    CommonParams common;
};

void run_verify(const VerifyParams& p, const Json& resolved) {
    using namespace conevac;
    const auto dir = resolve_out_dir(p.common.out);
    const auto results = run_acceptance(p.common.threads);
    bool all_ok = true;
    Json arr = Json::array();
    for (const auto& r : results) {
        std::cout << format_criterion_line(r) << "\n";
        all_ok = all_ok && r.passed;
        Json c;
        c["index"] = r.index;
        c["name"] = r.name;
        c["measured"] = r.measured;
        c["tolerance"] = r.tolerance;
        c["within_tolerance"] = r.value_ok;
        arr.push_back(std::move(c));
    }
    // Timing is reported on stdout only; the JSON report stays deterministic.
    Json j;
    j["criteria"] = std::move(arr);
    bool all_within = true;
    for (const auto& r : results) all_within = all_within && r.value_ok;
    j["all_within_tolerance"] = all_within;
    j["config"] = resolved;
    save_json_file(dir / "verify_report.json", j);
    announce(dir / "verify_report.json");
    std::cout << (all_ok ? "all acceptance criteria passed" : "ACCEPTANCE FAILURE") << "\n";
    if (!all_ok) throw ExitWith{1};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "conevac: numerical toolkit for the light-cone quadrant decomposition of the "
        "massless vacuum (modes, Bogoliubov coefficients, two-mode vacuum structure, "
        "detector response, feasibility arithmetic)"};
    app.require_subcommand(1);

    // quadrant
    QuadrantParams qp;
    auto* qsub = app.add_subcommand(
        "quadrant",
        "classify an event and demonstrate chart round-trips\n"
        "writes quadrant_point.json and quadrant_roundtrip.csv (columns: quadrant, u_time, "
        "u_space, t, z, region, u_time_back, u_space_back, roundtrip_error)");
    ParamBinder qbind(qsub);
    add_common(qsub, qbind, qp.common);
    qbind.add("--t", qp.t, "event time coordinate (required)");
    qbind.add("--z", qp.z, "event space coordinate (required)");
    qbind.add("--a", qp.a, "scaling constant");
    qsub->callback([&] {
        const Json cfg = load_config(qp.common.config_path);
        qbind.merge(cfg);
        require_set(qp.t, "--t");
        require_set(qp.z, "--z");
        run_quadrant(qp, qbind.resolved("quadrant"));
    });

    // modes
    ModesParams mp;
    auto* msub = app.add_subcommand(
        "modes",
        "tabulate cone modes and the positive-frequency fraction ladder\n"
        "writes modes_table.csv (columns: V, re/im of the future-cone mode, past-cone mode, G, "
        "Gbar) and modes_fraction.csv (columns: omega, level, half_width, n_samples, sigma, "
        "delta, guard_bins, fraction, total_energy)");
    ParamBinder mbind(msub);
    add_common(msub, mbind, mp.common);
    mbind.add("--omega", mp.omega, "conformal frequency for the mode table (required)");
    mbind.add("--a", mp.a, "scaling constant");
    mbind.add("--delta", mp.delta, "regulator for the G-mode columns");
    mbind.add("--v-min", mp.v_min, "smallest |V| tabulated");
    mbind.add("--v-max", mp.v_max, "largest |V| tabulated");
    mbind.add("--v-count", mp.v_count, "points per sign of V");
    mbind.add("--omega-grid", mp.omega_grid, "frequencies for the fraction ladder");
    msub->callback([&] {
        const Json cfg = load_config(mp.common.config_path);
        mbind.merge(cfg);
        require_set(mp.omega, "--omega");
        run_modes(mp, mbind.resolved("modes"));
    });

    // bogoliubov
    BogoliubovParams bp;
    auto* bsub = app.add_subcommand(
        "bogoliubov",
        "project cone modes onto plane waves; regulator ladder plus extrapolation\n"
        "writes bogoliubov_coefficients.csv (columns: quadrant, omega, k, delta, re_alpha, "
        "im_alpha, re_beta, im_beta, err; extrapolated rows have delta = 0) and "
        "bogoliubov_relations.json");
    ParamBinder bbind(bsub);
    add_common(bsub, bbind, bp.common);
    bbind.add("--omega", bp.omega, "conformal frequency (required)");
    bbind.add("--a", bp.a, "scaling constant");
    bbind.add("--k-grid", bp.k_grid, "plane-wave wavenumbers");
    bbind.add("--levels", bp.levels, "regulator ladder depth (>= 3)");
    bbind.add("--delta-scale", bp.delta_scale, "largest regulator as a fraction of k");
    bbind.add("--quadrants", bp.quadrants, "quadrant letters for the coefficient table");
    bsub->callback([&] {
        const Json cfg = load_config(bp.common.config_path);
        bbind.merge(cfg);
        require_set(bp.omega, "--omega");
        run_bogoliubov(bp, bbind.resolved("bogoliubov"));
    });

    // vacuum
    VacuumParams vp;
    auto* vsub = app.add_subcommand(
        "vacuum",
        "truncated two-mode vacuum: spectrum, entropy, residuals\n"
        "writes vacuum_summary.json and vacuum_spectrum.csv (columns: n, c_n, p_n)");
    ParamBinder vbind(vsub);
    add_common(vsub, vbind, vp.common);
    vbind.add("--omega", vp.omega, "conformal frequency (required)");
    vbind.add("--a", vp.a, "scaling constant");
    vbind.add("--n-trunc", vp.n_trunc, "truncation level (-1 = choose from deficit-tol)");
    vbind.add("--deficit-tol", vp.deficit_tol, "target normalization deficit");
    vsub->callback([&] {
        const Json cfg = load_config(vp.common.config_path);
        vbind.merge(cfg);
        require_set(vp.omega, "--omega");
        run_vacuum(vp, vbind.resolved("vacuum"));
    });

    // detector
    DetectorParams dp;
    auto* dsub = app.add_subcommand(
        "detector",
        "trajectory identity check, rate sweep with detailed balance, windowed comparison\n"
        "writes detector_identity.json, detector_rates.csv (columns: E, rate, error, epsilon, "
        "range; extrapolated rows have epsilon = 0), detector_balance.json, "
        "detector_window.json");
    ParamBinder dbind(dsub);
    add_common(dsub, dbind, dp.common);
    dbind.add("--a", dp.a, "scaling constant");
    dbind.add("--E", dp.E, "gap for the windowed comparison");
    dbind.add("--epsilon", dp.epsilon, "regulator for the windowed comparison");
    dbind.add("--window-s1", dp.window_s1, "window start");
    dbind.add("--window-s2", dp.window_s2, "window end");
    dbind.add("--range", dp.range, "half-range of the stationary rate integral");
    dbind.add("--e-grid", dp.e_grid, "gaps for the rate sweep (sign handled internally)");
    dbind.add("--epsilon-ladder", dp.epsilon_ladder, "decreasing regulator ladder for rates");
    dbind.add("--samples", dp.samples, "identity-check sample count");
    dbind.add("--seed", dp.seed, "identity-check RNG seed");
    dsub->callback([&] {
        const Json cfg = load_config(dp.common.config_path);
        dbind.merge(cfg);
        run_detector(dp, dbind.resolved("detector"));
    });

    // feasibility
    FeasibilityParams fp;
    auto* fsub = app.add_subcommand(
        "feasibility",
        "SI arithmetic: temperature/scaling-constant conversions and thermalization margin\n"
        "writes feasibility_report.json");
    ParamBinder fbind(fsub);
    add_common(fsub, fbind, fp.common);
    fbind.add("--temperature", fp.temperature, "target temperature in kelvin");
    fbind.add("--t1", fp.t1, "scenario start time (s)");
    fbind.add("--t2", fp.t2, "scenario end time (s)");
    fbind.add("--ebar1", fp.ebar1, "gap at t1 (Hz)");
    fbind.add("--scenario-a", fp.scenario_a,
              "scenario scaling constant (default: value for --temperature)");
    fsub->callback([&] {
        const Json cfg = load_config(fp.common.config_path);
        fbind.merge(cfg);
        run_feasibility(fp, fbind.resolved("feasibility"));
    });

    // verify
    VerifyParams yp;
    auto* ysub = app.add_subcommand(
        "verify", "run the acceptance suite and print the pass/fail table\n"
                  "writes verify_report.json");
    ParamBinder ybind(ysub);
    add_common(ysub, ybind, yp.common);
    ysub->callback([&] {
        const Json cfg = load_config(yp.common.config_path);
        ybind.merge(cfg);
        run_verify(yp, ybind.resolved("verify"));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    } catch (const ExitWith& e) {
        return e.code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
