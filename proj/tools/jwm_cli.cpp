// Copyright 2026 The jwm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// jwm: pigeonhole weak values, strength sweeps, optical meter preparation and
// the acceptance report.
//
// Exit status: 0 success, 1 acceptance failure, 2 invalid input.

#include <cmath>
#include <complex>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "jwm/defaults.hpp"
#include "jwm/errors.hpp"
#include "jwm/harness.hpp"
#include "jwm/network_io.hpp"

namespace {

constexpr int kExitAcceptanceFailure = 1;
constexpr int kExitInvalidInput = 2;

jwm::cplx phase_from_degrees(double degrees) {
    // Exact at quarter turns so that the default reproduces i exactly.
    const double turns = degrees / 90.0;
    if (turns == std::round(turns)) {
        static const jwm::cplx quarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return quarter[((static_cast<long long>(turns) % 4) + 4) % 4];
    }
    return std::polar(1.0, degrees * std::numbers::pi / 180.0);
}

// Prints -0 as 0.
double clean(double v) { return v == 0.0 ? 0.0 : v; }

jwm::ModeNetwork network_or_default(const std::string &path) {
    return path.empty() ? jwm::default_network() : jwm::load_network(path);
}

int cmd_weakvalue(double post_phase_deg) {
    const jwm::PrePost pp = jwm::pigeonhole_prepost(phase_from_degrees(post_phase_deg));
    fmt::print("pair,Re_wv,Im_wv,p_abl_same\n");
    for (auto pair : jwm::all_pigeon_pairs()) {
        const auto [x, y] = jwm::positions(pair);
        const auto [same, diff] = jwm::pigeonhole_projectors(pp.labels()[x], pp.labels()[y]);
        const jwm::cplx wv = jwm::weak_value(pp, same);
        const double abl = jwm::abl_probability(pp, same, diff);
        fmt::print("{},{:.17g},{:.17g},{:.17g}\n", jwm::to_string(pair), clean(wv.real()), clean(wv.imag()),
                   clean(abl));
    }
    return 0;
}

struct SweepFlags {
    std::string config;
    std::string backend;
    std::vector<std::string> grid;
    std::vector<std::string> theta_grid;
    std::vector<std::string> pairs;
    std::string output;
    std::string network;
    bool serial = false;
};

int cmd_sweep(const SweepFlags &flags) {
    jwm::SweepConfig config = flags.config.empty() ? jwm::SweepConfig{} : jwm::load_sweep_config(flags.config);
    if (!flags.backend.empty()) {
        config.backend = jwm::parse_backend(flags.backend);
    }
    if (!flags.grid.empty() && !flags.theta_grid.empty()) {
        throw jwm::InvalidInput("--grid and --theta-grid are mutually exclusive");
    }
    if (!flags.grid.empty()) {
        config.axis = jwm::GridAxis::Strength;
        config.grid.clear();
        for (const auto &v : flags.grid) config.grid.push_back(jwm::parse_real(v));
    }
    if (!flags.theta_grid.empty()) {
        config.axis = jwm::GridAxis::Theta;
        config.grid.clear();
        for (const auto &v : flags.theta_grid) config.grid.push_back(jwm::parse_angle(v));
    }
    if (config.grid.empty()) {
        const bool optical = config.backend == jwm::Backend::Optical;
        config.axis = optical ? jwm::GridAxis::Theta : jwm::GridAxis::Strength;
        config.grid = optical ? jwm::defaults::kThetaGrid : jwm::defaults::kStrengthGrid;
    }
    if (!flags.pairs.empty()) {
        config.pairs.clear();
        for (const auto &p : flags.pairs) config.pairs.push_back(jwm::parse_pigeon_pair(p));
    }
    if (!flags.output.empty()) config.output = flags.output;
    if (!flags.network.empty()) config.network = flags.network;
    if (flags.serial) config.parallel = false;

    const auto rows = jwm::run_pigeonhole(config);
    if (config.output.empty()) {
        std::cout << jwm::format_table(rows, config.pairs);
    } else {
        jwm::emit_table(rows, config.pairs, config.output);
    }
    for (std::size_t k = 0; k < config.pairs.size(); ++k) {
        const auto fit = jwm::extrapolate_to_zero(rows, k);
        fmt::print(stderr, "fit R_{}: intercept {:.6g}, slope {:.6g} ({} points); weak value {:.6g}\n",
                   jwm::column_suffix(config.pairs[k]), fit.intercept, fit.slope, fit.points,
                   clean(rows.back().weak_value[k]));
    }
    for (const auto &r : rows) {
        if (r.flag) fmt::print(stderr, "flagged point G={:.6g}: {}\n", r.strength, *r.flag);
    }
    return 0;
}

int cmd_optics_prepare(const std::string &theta_text, const std::string &network_path) {
    const auto params = jwm::OpticalMeterParams::from_theta(jwm::parse_angle(theta_text));
    const auto prepared = jwm::prepare_meter(params, network_or_default(network_path), 1.0);
    const double c = std::cos(params.theta);
    fmt::print("theta {:.17g}\nalpha {:.17g}\nbeta {:.17g}\ndelta {:.17g}\nepsilon {:.17g}\nG {:.17g}\n",
               params.theta, params.alpha, params.beta, params.delta, params.epsilon, params.strength);
    fmt::print("fidelity {:.17g}\np_coincidence {:.17g}\np_over_1_plus_2cos2 {:.17g}\n", prepared.fidelity,
               prepared.probability, prepared.probability / (1.0 + 2.0 * c * c));
    const auto amps = prepared.meter.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        fmt::print("amp {} {:.17g} {:.17g}\n", jwm::to_bits(k, prepared.meter.num_qubits()), amps[k].real(),
                   amps[k].imag());
    }
    if (1.0 - prepared.fidelity > jwm::defaults::kFidelityTolerance) {
        throw jwm::FidelityGateFailure(
            fmt::format("prepared meter fidelity {:.17g} below gate", prepared.fidelity), prepared.fidelity);
    }
    return 0;
}

int cmd_acceptance(bool perturb_post, const std::string &network_path) {
    jwm::AcceptanceOptions options;
    if (perturb_post) options.post_phase = jwm::cplx(1.0, 0.0);
    if (!network_path.empty()) options.network = jwm::load_network(network_path);
    const auto report = jwm::run_acceptance(options);
    std::cout << jwm::format_report(report);
    return report.all_passed() ? 0 : kExitAcceptanceFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Joint weak measurement of the quantum pigeonhole effect"};
    app.require_subcommand(1);

    double post_phase_deg = 90.0;
    auto *weakvalue = app.add_subcommand("weakvalue", "Pigeonhole weak values and ABL probabilities per pair");
    weakvalue->add_option("--post-phase", post_phase_deg,
                          "Phase of |1> in each postselected photon, degrees (90 = i, the paradox)")
        ->capture_default_str();

    SweepFlags sweep_flags;
    auto *sweep = app.add_subcommand("sweep", "Combined same-hole readout over a G or theta grid, as CSV");
    sweep->add_option("--config", sweep_flags.config, "Sweep configuration file")->check(CLI::ExistingFile);
    sweep->add_option("--backend", sweep_flags.backend, "circuit or optical");
    sweep->add_option("--grid", sweep_flags.grid, "Comma-separated G values")->delimiter(',');
    sweep->add_option("--theta-grid", sweep_flags.theta_grid, "Comma-separated theta values (radians, pi/k)")
        ->delimiter(',');
    sweep->add_option("--pairs", sweep_flags.pairs, "Comma-separated pairs: I-II, II-III, III-I")->delimiter(',');
    sweep->add_option("--output", sweep_flags.output, "CSV path (default: stdout)");
    sweep->add_option("--network", sweep_flags.network, "Network file for the optical backend");
    sweep->add_flag("--serial", sweep_flags.serial, "Evaluate grid points one at a time");

    std::string theta_text = "pi/4";
    std::string prepare_network;
    auto *prepare = app.add_subcommand("optics-prepare", "Prepare the three-photon meter at one theta");
    prepare->add_option("--theta", theta_text, "Pair angle in radians (pi/k accepted)")->capture_default_str();
    prepare->add_option("--network", prepare_network, "Network file (default: built-in uniform network)");

    bool perturb_post = false;
    std::string acceptance_network;
    auto *acceptance = app.add_subcommand("acceptance", "Run every acceptance criterion");
    acceptance->add_flag("--perturb-post", perturb_post, "Postselect (|0>+|1>)/sqrt2 instead of (|0>+i|1>)/sqrt2");
    acceptance->add_option("--network", acceptance_network, "Network file for the optical criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    try {
        if (*weakvalue) return cmd_weakvalue(post_phase_deg);
        if (*sweep) return cmd_sweep(sweep_flags);
        if (*prepare) return cmd_optics_prepare(theta_text, prepare_network);
        if (*acceptance) return cmd_acceptance(perturb_post, acceptance_network);
    } catch (const std::exception &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
