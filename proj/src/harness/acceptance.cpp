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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "jwm/defaults.hpp"
#include "jwm/errors.hpp"
#include "jwm/harness.hpp"
#include "jwm/network_io.hpp"
#include "jwm/reference_oracle.hpp"

namespace jwm {

namespace {

struct Outcome {
    bool passed;
    std::string measured;
};

using Rng = std::mt19937_64;

// Random single-qubit state cos(t)|0> + e^{i phi} sin(t)|1>.
std::pair<cplx, cplx> random_qubit(Rng &rng) {
    std::uniform_real_distribution<double> t(0.0, std::numbers::pi / 2.0);
    std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
    const double a = t(rng);
    return {cplx(std::cos(a), 0.0), std::polar(std::sin(a), phi(rng))};
}

// Random product pre/post on `labels`. Each qubit's pre/post overlap is kept
// above `qubit_floor` so that weak values stay finite.
PrePost random_product_prepost(Rng &rng, const Labels &labels, double qubit_floor) {
    std::vector<std::pair<cplx, cplx>> pre, post;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        for (;;) {
            auto i = random_qubit(rng);
            auto f = random_qubit(rng);
            if (std::abs(std::conj(f.first) * i.first + std::conj(f.second) * i.second) > qubit_floor) {
                pre.push_back(i);
                post.push_back(f);
                break;
            }
        }
    }
    return PrePost(product_ket(labels, pre), product_ket(labels, post));
}

// Meter probability vector indexed by outcome, as the oracle returns it.
std::vector<double> as_vector(const ReadoutTable &table) {
    const std::size_t n = table.meter_labels().size();
    std::vector<double> out(std::size_t{1} << n);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = table.probability(to_bits(k, n));
    }
    return out;
}

double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

// Combined "same hole" readout recomputed from an oracle distribution over
// three meter qubits of the paired family, where eps^2 = (1 - G) / 4.
double oracle_pigeonhole_readout(const std::vector<double> &p, double strength, std::size_t x, std::size_t y) {
    double sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (((k >> (2 - x)) & 1U) == ((k >> (2 - y)) & 1U)) {
            sum += p[k];
        }
    }
    return (sum - 2.0 * (1.0 - strength) / 4.0) / strength;
}

// Sum over every single-outcome readout of a full meter.
double full_meter_sum(const ReadoutTable &table, const MeterSpec &spec) {
    const double eps2 = spec.epsilon() * spec.epsilon();
    double sum = 0.0;
    for (const auto &[bits, p] : table.entries()) {
        sum += readout(table, {bits}, eps2);
    }
    return sum;
}

std::vector<double> split_csv_line(const std::string &line) {
    std::vector<double> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
        out.push_back(cell == "nan" ? std::numeric_limits<double>::quiet_NaN() : parse_real(cell));
    }
    return out;
}

const std::vector<double> kConvergenceGrid{2.0 / 3.0, 0.5, 0.2, 0.1, 0.01, 0.001};
const std::vector<double> kOpticalThetas{0.0,
                                         std::numbers::pi / 12,
                                         std::numbers::pi / 8,
                                         std::numbers::pi / 6,
                                         std::numbers::pi / 4,
                                         std::numbers::pi / 3};

class Acceptance {
   public:
    explicit Acceptance(const AcceptanceOptions &options)
        : options_(options),
          pp_(pigeonhole_prepost(options.post_phase)),
          network_(options.network ? *options.network : default_network()) {}

    AcceptanceReport run() {
        AcceptanceReport report;
        add(report, 1, "pigeonhole weak values vanish", [&] { return weak_values(); }, 1.0);
        add(report, 2, "ABL same-hole probabilities vanish", [&] { return abl(); });
        add(report, 3, "readout converges and matches dense oracle", [&] { return convergence(); });
        add(report, 4, "sweep table pair columns agree, intercept at G=0", [&] { return sweep_table(); }, 10.0);
        add(report, 5, "optical meter fidelity and success-probability scaling", [&] { return optical(); });
        add(report, 6, "optical and circuit backends agree", [&] { return backends(); });
        add(report, 7, "three-qubit full-meter sum rule", [&] { return sum_rule(); });
        add(report, 8, "joint weak value equals product of single weak values", [&] { return product_rule(); });
        add(report, 9, "strong limit equals projective measurement", [&] { return strong_limit(); });
        add(report, 10, "four-qubit meter sum rule and oracle equivalence", [&] { return four_qubits(); }, 10.0);
        report.optical_constant = optical_constant_;
        return report;
    }

   private:
    void add(AcceptanceReport &report, int id, std::string name, const std::function<Outcome()> &body,
             double time_limit = 0.0) {
        CriterionResult result;
        result.id = id;
        result.name = std::move(name);
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = body();
        } catch (const std::exception &e) {
            outcome = {false, fmt::format("error: {}", e.what())};
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.passed = outcome.passed;
        result.measured = outcome.measured;
        if (time_limit > 0.0) {
            const bool fast = result.seconds < time_limit;
            result.passed = result.passed && fast;
            result.measured += fmt::format("; runtime {:.3f}s (limit {}s)", result.seconds, time_limit);
        }
        report.criteria.push_back(std::move(result));
    }

    Outcome weak_values() {
        double worst = 0.0;
        for (auto pair : all_pigeon_pairs()) {
            const auto [x, y] = positions(pair);
            const auto [same, diff] = pigeonhole_projectors(pp_.labels()[x], pp_.labels()[y]);
            worst = std::max(worst, std::abs(weak_value(pp_, same)));
        }
        return {worst <= defaults::kTolerance, fmt::format("max |weak value| = {:.3g}", worst)};
    }

    Outcome abl() {
        double worst = 0.0;
        for (auto pair : all_pigeon_pairs()) {
            const auto [x, y] = positions(pair);
            const auto [same, diff] = pigeonhole_projectors(pp_.labels()[x], pp_.labels()[y]);
            worst = std::max(worst, abl_probability(pp_, same, diff));
        }
        return {worst <= defaults::kTolerance, fmt::format("max P(same) = {:.3g}", worst)};
    }

    Outcome convergence() {
        const auto pre = reference::to_vector(pp_.pre());
        const auto post = reference::to_vector(pp_.post());
        bool monotone = true;
        double oracle_gap = 0.0;
        double last_abs = 0.0;
        for (auto pair : all_pigeon_pairs()) {
            const auto [x, y] = positions(pair);
            double previous = std::numeric_limits<double>::infinity();
            for (double g : kConvergenceGrid) {
                const MeterSpec spec(MeterFamily::ThreePaired, g);
                const double r = pigeonhole_readout(simulate(pp_, spec), spec, x, y);
                const auto p = reference::conditional_meter_distribution(
                    pre, post, reference::meter_amplitudes(MeterFamily::ThreePaired, g, 3));
                oracle_gap = std::max(oracle_gap, std::abs(r - oracle_pigeonhole_readout(p, g, x, y)));
                monotone = monotone && std::abs(r) <= previous;
                previous = std::abs(r);
            }
            last_abs = std::max(last_abs, previous);
        }
        return {monotone && last_abs <= 1e-2 && oracle_gap <= 1e-10,
                fmt::format("monotone = {}, max |R(0.001)| = {:.3g}, oracle gap = {:.3g}", monotone, last_abs,
                            oracle_gap)};
    }

    Outcome sweep_table() {
        SweepConfig config;
        config.grid = defaults::kStrengthGrid;
        const auto rows = run_pigeonhole(config, network_, pp_);

        // Read the emitted text back rather than trusting the rows.
        std::stringstream text(format_table(rows, config.pairs));
        std::string line;
        std::getline(text, line);
        double spread = 0.0;
        while (std::getline(text, line)) {
            const auto cells = split_csv_line(line);
            for (std::size_t k = 1; k < config.pairs.size(); ++k) {
                spread = std::max(spread, std::abs(cells[1 + k] - cells[1]));
            }
        }
        double intercept = 0.0;
        for (std::size_t k = 0; k < config.pairs.size(); ++k) {
            intercept = std::max(intercept, std::abs(extrapolate_to_zero(rows, k).intercept));
        }
        return {spread <= defaults::kTolerance && intercept <= 1e-6,
                fmt::format("column spread = {:.3g}, max |intercept| = {:.3g}", spread, intercept)};
    }

    Outcome optical() {
        double worst_deficit = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (double theta : kOpticalThetas) {
            const auto params = OpticalMeterParams::from_theta(theta);
            const auto prepared = prepare_meter(params, network_, 1.0);
            worst_deficit = std::max(worst_deficit, 1.0 - prepared.fidelity);
            const double c = std::cos(theta);
            const double ratio = prepared.probability / (1.0 + 2.0 * c * c);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        optical_constant_ = lo;
        return {worst_deficit <= defaults::kFidelityTolerance && hi - lo <= 1e-10,
                fmt::format("max fidelity deficit = {:.3g}, p/(1+2cos^2) = {:.12g} (spread {:.3g}; 1/72 = {:.12g})",
                            worst_deficit, lo, hi - lo, 1.0 / 72.0)};
    }

    Outcome backends() {
        // The interferometers postselect the paradox state, so compare against
        // the circuit with that postselection regardless of options.
        const PrePost paradox = pigeonhole_prepost();
        double worst = 0.0;
        for (double theta : kOpticalThetas) {
            const auto params = OpticalMeterParams::from_theta(theta);
            const auto prepared = prepare_meter(params, network_, defaults::kFidelityTolerance);
            const auto optical = mach_zehnder_stage(prepared.meter, params.strength);
            const auto circuit = simulate(paradox, MeterSpec(MeterFamily::ThreePaired, params.strength));
            worst = std::max(worst, max_abs_diff(as_vector(optical), as_vector(circuit)));
        }
        return {worst <= 1e-10, fmt::format("max distribution gap = {:.3g}", worst)};
    }

    Outcome sum_rule() {
        Rng rng(options_.seed);
        std::vector<PrePost> cases{pp_};
        for (int k = 0; k < 20; ++k) {
            cases.push_back(random_product_prepost(rng, pigeonhole_labels(), kQubitOverlapFloor));
        }
        double worst = 0.0;
        for (double g : {0.5, 0.1}) {
            const MeterSpec spec(MeterFamily::ThreeFull, g);
            for (const auto &pp : cases) {
                worst = std::max(worst, std::abs(full_meter_sum(simulate(pp, spec), spec) - 1.0));
            }
        }
        return {worst <= 1e-10, fmt::format("max |sum - 1| = {:.3g} over {} pre/post pairs", worst, cases.size())};
    }

    Outcome product_rule() {
        Rng rng(options_.seed + 1);
        const Labels labels = pigeonhole_labels();
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            const PrePost pp = random_product_prepost(rng, labels, kQubitOverlapFloor);
            for (auto pair : all_pigeon_pairs()) {
                const auto [x, y] = positions(pair);
                for (std::string bits : {"00", "01", "10", "11"}) {
                    const cplx joint = joint_weak_value(pp, bits, {labels[x], labels[y]});
                    const cplx a = weak_value(pp, projector(bits.substr(0, 1), {labels[x]}));
                    const cplx b = weak_value(pp, projector(bits.substr(1, 1), {labels[y]}));
                    worst = std::max(worst, std::abs(joint - a * b));
                }
            }
        }
        return {worst <= defaults::kTolerance, fmt::format("max |joint - product| = {:.3g}", worst)};
    }

    Outcome strong_limit() {
        Rng rng(options_.seed + 2);
        std::vector<PrePost> cases{pp_};
        for (int k = 0; k < 10; ++k) {
            cases.push_back(random_product_prepost(rng, pigeonhole_labels(), kQubitOverlapFloor));
        }
        const MeterSpec spec(MeterFamily::ThreeFull, 1.0);
        double worst = 0.0;
        for (const auto &pp : cases) {
            const auto oracle =
                reference::projective_then_postselect(reference::to_vector(pp.pre()), reference::to_vector(pp.post()));
            worst = std::max(worst, max_abs_diff(as_vector(simulate(pp, spec)), oracle));
        }
        return {worst <= defaults::kTolerance, fmt::format("max distribution gap = {:.3g}", worst)};
    }

    Outcome four_qubits() {
        Rng rng(options_.seed + 3);
        const Labels labels{"I", "II", "III", "IV"};
        double sum_gap = 0.0;
        double oracle_gap = 0.0;
        for (double g : {0.5, 0.1, 0.01}) {
            const MeterSpec spec(MeterFamily::NFull, g, 4);
            const auto meter = reference::meter_amplitudes(MeterFamily::NFull, g, 4);
            for (int k = 0; k < 5; ++k) {
                const PrePost pp = random_product_prepost(rng, labels, kQubitOverlapFloor);
                const auto table = simulate(pp, spec);
                sum_gap = std::max(sum_gap, std::abs(full_meter_sum(table, spec) - 1.0));
                const auto oracle = reference::conditional_meter_distribution(
                    reference::to_vector(pp.pre()), reference::to_vector(pp.post()), meter);
                oracle_gap = std::max(oracle_gap, max_abs_diff(as_vector(table), oracle));
            }
        }
        return {sum_gap <= 1e-10 && oracle_gap <= 1e-10,
                fmt::format("max |sum - 1| = {:.3g}, oracle gap = {:.3g}", sum_gap, oracle_gap)};
    }

    static constexpr double kQubitOverlapFloor = 0.1;

    AcceptanceOptions options_;
    PrePost pp_;
    ModeNetwork network_;
    double optical_constant_ = 0.0;
};

}  // namespace

bool AcceptanceReport::all_passed() const {
    return !criteria.empty() &&
           std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult &c) { return c.passed; });
}

AcceptanceReport run_acceptance(const AcceptanceOptions &options) { return Acceptance(options).run(); }

std::string format_report(const AcceptanceReport &report) {
    std::string out;
    for (const auto &c : report.criteria) {
        out += fmt::format("[{}] {:>2} {}: {} ({:.3f}s)\n", c.passed ? "PASS" : "FAIL", c.id, c.name, c.measured,
                           c.seconds);
    }
    out += fmt::format("optical success constant p/(1+2cos^2 theta) = {:.17g}\n", report.optical_constant);
    const auto failed = std::count_if(report.criteria.begin(), report.criteria.end(),
                                      [](const CriterionResult &c) { return !c.passed; });
    out += failed == 0 ? fmt::format("all {} criteria passed\n", report.criteria.size())
                       : fmt::format("{} of {} criteria failed\n", failed, report.criteria.size());
    return out;
}

}  // namespace jwm
