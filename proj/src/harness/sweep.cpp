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
#include <cmath>
#include <future>
#include <numbers>

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "jwm/harness.hpp"
#include "jwm/network_io.hpp"

namespace jwm {

std::string to_string(Backend backend) { return backend == Backend::Circuit ? "circuit" : "optical"; }

std::string to_string(PigeonPair pair) {
    switch (pair) {
        case PigeonPair::I_II:
            return "I-II";
        case PigeonPair::II_III:
            return "II-III";
        case PigeonPair::III_I:
            return "III-I";
    }
    return "?";
}

std::string column_suffix(PigeonPair pair) {
    std::string s = to_string(pair);
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
}

PigeonPair parse_pigeon_pair(std::string_view text) {
    for (auto p : all_pigeon_pairs()) {
        if (text == to_string(p) || text == column_suffix(p)) {
            return p;
        }
    }
    throw InvalidInput(fmt::format("unknown pigeon pair '{}' (expected I-II, II-III or III-I)", text));
}

Backend parse_backend(std::string_view text) {
    if (text == "circuit") return Backend::Circuit;
    if (text == "optical") return Backend::Optical;
    throw InvalidInput(fmt::format("unknown backend '{}' (expected circuit or optical)", text));
}

std::pair<std::size_t, std::size_t> positions(PigeonPair pair) {
    switch (pair) {
        case PigeonPair::I_II:
            return {0, 1};
        case PigeonPair::II_III:
            return {1, 2};
        case PigeonPair::III_I:
            return {2, 0};
    }
    return {0, 1};
}

std::vector<PigeonPair> all_pigeon_pairs() { return {PigeonPair::I_II, PigeonPair::II_III, PigeonPair::III_I}; }

std::vector<double> linear_range(double lo, double hi, std::size_t count) {
    if (count == 0) {
        throw InvalidInput("range needs at least one point");
    }
    if (count == 1) {
        return {lo};
    }
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
    }
    return out;
}

void SweepConfig::validate() const {
    if (grid.empty()) {
        throw InvalidInput("sweep grid is empty");
    }
    if (pairs.empty()) {
        throw InvalidInput("sweep names no pigeon pairs");
    }
    if (backend == Backend::Optical && axis != GridAxis::Theta) {
        throw InvalidInput("the optical backend is parametrized by theta; use a theta grid");
    }
    for (double v : grid) {
        if (axis == GridAxis::Strength) {
            if (!(v > 0.0 && v <= 1.0)) {
                throw InvalidInput(fmt::format(
                    "G = {} outside (0, 1]; G = 0 is covered by the analytic weak-value row", v));
            }
        } else if (!(v > 0.0 && v <= std::numbers::pi / 2.0)) {
            throw InvalidInput(fmt::format("theta = {} outside (0, pi/2]", v));
        }
    }
}

namespace {

SweepRow run_point(const SweepConfig &config, const ModeNetwork &network, const PrePost &pp, double value) {
    SweepRow row;
    if (config.axis == GridAxis::Theta) {
        row.theta = value;
        row.strength = OpticalMeterParams::from_theta(value).strength;
    } else {
        row.strength = value;
    }
    row.readout.assign(config.pairs.size(), std::nullopt);

    try {
        const MeterSpec spec(MeterFamily::ThreePaired, std::min(row.strength, 1.0));
        ReadoutTable table = [&] {
            if (config.backend == Backend::Optical) {
                const auto params = OpticalMeterParams::from_theta(value);
                const PreparedMeter prepared = prepare_meter(params, network, config.fidelity_tolerance);
                row.p_coincidence = prepared.probability;
                return mach_zehnder_stage(prepared.meter, row.strength);
            }
            return simulate(pp, spec);
        }();
        row.p_postselect = table.success_probability();
        for (std::size_t k = 0; k < config.pairs.size(); ++k) {
            const auto [x, y] = positions(config.pairs[k]);
            row.readout[k] = pigeonhole_readout(table, spec, x, y);
        }
    } catch (const PostselectionFailure &e) {
        row.flag = e.what();
    } catch (const FidelityGateFailure &e) {
        row.flag = e.what();
    }
    return row;
}

std::vector<double> analytic_weak_values(const PrePost &pp, const std::vector<PigeonPair> &pairs) {
    const Labels labels = pp.labels();
    std::vector<double> out;
    for (auto pair : pairs) {
        const auto [x, y] = positions(pair);
        const auto [same, diff] = pigeonhole_projectors(labels[x], labels[y]);
        out.push_back(weak_value(pp, same).real());
    }
    return out;
}

}  // namespace

std::vector<SweepRow> run_pigeonhole(const SweepConfig &config, const ModeNetwork &network, const PrePost &pp) {
    config.validate();
    if (pp.pre().num_qubits() != 3) {
        throw InvalidInput("the pigeonhole experiment has three signal qubits");
    }
    const std::vector<double> wv = analytic_weak_values(pp, config.pairs);

    std::vector<SweepRow> rows(config.grid.size());
    if (config.parallel && config.grid.size() > 1) {
        std::vector<std::future<SweepRow>> pending;
        pending.reserve(config.grid.size());
        for (double v : config.grid) {
            pending.push_back(std::async(std::launch::async, run_point, std::cref(config), std::cref(network),
                                         std::cref(pp), v));
        }
        for (std::size_t k = 0; k < pending.size(); ++k) {
            rows[k] = pending[k].get();
        }
    } else {
        for (std::size_t k = 0; k < config.grid.size(); ++k) {
            rows[k] = run_point(config, network, pp, config.grid[k]);
        }
    }
    for (auto &r : rows) {
        r.weak_value = wv;
    }

    SweepRow analytic;
    analytic.analytic = true;
    analytic.strength = 0.0;
    if (config.axis == GridAxis::Theta) {
        analytic.theta = 0.0;
    }
    analytic.weak_value = wv;
    analytic.readout.assign(wv.begin(), wv.end());
    analytic.p_postselect = std::norm(pp.overlap());
    rows.push_back(std::move(analytic));
    return rows;
}

std::vector<SweepRow> run_pigeonhole(const SweepConfig &config) {
    const ModeNetwork network = config.network.empty() ? default_network() : load_network(config.network);
    return run_pigeonhole(config, network);
}

LinearFit extrapolate_to_zero(const std::vector<SweepRow> &rows, std::size_t column) {
    std::vector<std::pair<double, double>> points;
    for (const auto &r : rows) {
        if (r.analytic || r.flag || r.strength <= 0.0 || column >= r.readout.size() || !r.readout[column]) {
            continue;
        }
        points.emplace_back(r.strength, *r.readout[column]);
    }
    if (points.size() < 2) {
        throw InvalidInput("extrapolation needs at least two usable grid points");
    }
    std::sort(points.begin(), points.end());
    points.resize(std::min<std::size_t>(points.size(), 3));

    const double n = static_cast<double>(points.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (auto [x, y] : points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    LinearFit fit;
    fit.points = points.size();
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

}  // namespace jwm
