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

#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "jwm/photonics.hpp"

namespace jwm {

OpticalMeterParams OpticalMeterParams::from_theta(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0)) {
        throw InvalidInput(fmt::format("pair angle theta = {} outside [0, pi/2]", theta));
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double norm = 2.0 * std::sqrt(1.0 + 2.0 * c * c);
    OpticalMeterParams p{};
    p.theta = theta;
    p.alpha = (c + s) / norm;
    p.beta = (c - s) / norm;
    p.delta = std::numbers::sqrt3 * p.alpha;
    // Negative once tan(theta) > 3; the target state stays well defined.
    p.epsilon = (p.alpha + 2.0 * p.beta) / std::numbers::sqrt3;
    // Closed form; delta^2 - eps^2 cancels badly near theta = 0.
    p.strength = strength_from_theta(theta);
    return p;
}

double strength_from_theta(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return 2.0 * s * (3.0 * c + s) / (3.0 * (1.0 + 2.0 * c * c));
}

Ket optical_target_meter(const OpticalMeterParams &params, Labels labels) {
    if (labels.empty()) {
        labels = meter_labels(3);
    }
    if (labels.size() != 3) {
        throw InvalidInput("the optical meter has three qubits");
    }
    // (x, y) carry the pair, z the diagonal photon.
    constexpr std::array<std::array<int, 3>, 3> cyclic{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    std::vector<cplx> amps(8);
    for (std::size_t s = 0; s < 8; ++s) {
        const std::string bits = to_bits(s, 3);
        double a = 0.0;
        for (const auto &xyz : cyclic) {
            a += bits[xyz[0]] == bits[xyz[1]] ? params.alpha : params.beta;
        }
        amps[s] = a / std::sqrt(6.0);
    }
    return Ket(std::move(labels), std::move(amps));
}

double fidelity(const Ket &a, const Ket &b) {
    return std::norm(inner(a, b)) / (a.norm_squared() * b.norm_squared());
}

FockState meter_source_state(const OpticalMeterParams &params, const ModeNetwork &network) {
    using enum Polarization;
    if (network.inputs().size() != 3) {
        throw InvalidInput(fmt::format("meter source needs 3 input ports, network has {}", network.inputs().size()));
    }
    const auto &in = network.inputs();
    const double c = std::cos(params.theta) / std::numbers::sqrt2;
    const double s = std::sin(params.theta) / std::numbers::sqrt2;
    std::vector<CreationTerm> terms;
    for (auto diag : {H, V}) {
        terms.push_back({c, {{in[0], H}, {in[1], H}, {in[2], diag}}});
        terms.push_back({s, {{in[0], V}, {in[1], V}, {in[2], diag}}});
    }
    return FockState::from_creations(network.modes(), terms, 3);
}

PreparedMeter prepare_meter(const OpticalMeterParams &params, const ModeNetwork &network, double fidelity_tol) {
    if (network.outputs().size() != 3) {
        throw InvalidInput(fmt::format("meter preparation needs 3 output ports, network has {}",
                                       network.outputs().size()));
    }
    const FockState out = evolve(meter_source_state(params, network), network);
    const Coincidence hit = coincidence_project(out, network.outputs());
    const Ket target = optical_target_meter(params, hit.polarization.labels());
    const double f = fidelity(target, hit.polarization);
    if (!(f >= 1.0 - fidelity_tol)) {
        throw FidelityGateFailure(
            fmt::format("network rejected: coincidence state fidelity {:.15f} with the target meter at theta = {}", f,
                        params.theta),
            f);
    }
    const cplx overlap = inner(target, hit.polarization);
    const Ket aligned = hit.polarization.scaled(std::conj(overlap) / std::abs(overlap));
    return {aligned, hit.probability, f};
}

ModeNetwork mach_zehnder_network(std::size_t photons) {
    std::vector<std::string> ports;
    std::vector<std::string> detectors;
    std::vector<Element> elements;
    for (std::size_t k = 1; k <= photons; ++k) {
        const std::string d = fmt::format("d{}", k);
        const std::string u = fmt::format("u{}", k);
        ports.push_back(d);
        ports.push_back(u);
        detectors.push_back(d);
        elements.emplace_back(beamsplitter(0.5, d, u));
        elements.emplace_back(phase_shift(-90.0, u));  // preselect (|0>+|1>)/sqrt2
        elements.emplace_back(hwp(45.0, u));           // CNOT: path 1 flips H<->V
        elements.emplace_back(phase_shift(180.0, u));  // d port projects onto (|0>+i|1>)/sqrt2
        elements.emplace_back(beamsplitter(0.5, d, u));
    }
    return ModeNetwork(ports, detectors, detectors, std::move(elements));
}

ReadoutTable mach_zehnder_stage(const Ket &meter, double strength) {
    using enum Polarization;
    if (!meter.is_normalized(1e-10)) {
        throw InvalidInput("meter polarization state must be normalized");
    }
    const std::size_t n = meter.num_qubits();
    const ModeNetwork network = mach_zehnder_network(n);

    std::vector<CreationTerm> terms;
    for (std::size_t s = 0; s < meter.dimension(); ++s) {
        if (meter.amplitude(s) == 0.0) {
            continue;
        }
        CreationTerm t{meter.amplitude(s), {}};
        for (std::size_t k = 0; k < n; ++k) {
            const bool v = (s >> (n - 1 - k)) & 1U;
            t.creations.push_back({network.inputs()[k], v ? V : H});
        }
        terms.push_back(std::move(t));
    }
    const FockState source = FockState::from_creations(network.modes(), terms, n);
    const Coincidence hit = coincidence_project(evolve(source, network), network.outputs(), meter.labels());

    std::map<std::string, double> entries;
    for (std::size_t s = 0; s < hit.polarization.dimension(); ++s) {
        entries.emplace(to_bits(s, n), std::norm(hit.polarization.amplitude(s)));
    }
    return ReadoutTable(meter.labels(), std::move(entries), hit.probability, strength);
}

}  // namespace jwm
