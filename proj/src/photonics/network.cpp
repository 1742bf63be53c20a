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
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "jwm/photonics.hpp"

namespace jwm {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

// cos and sin of 2*phi with exact values at multiples of 22.5 degrees, so a
// 45 degree plate is an exact H<->V swap.
std::pair<double, double> doubled_angle(double angle_deg) {
    const double twice = std::fmod(2.0 * angle_deg, 360.0);
    const double wrapped = twice < 0.0 ? twice + 360.0 : twice;
    const double r = std::numbers::sqrt2 / 2.0;
    static const std::pair<double, double> table[] = {{1.0, 0.0}, {r, r},   {0.0, 1.0},  {-r, r},
                                                      {-1.0, 0.0}, {-r, -r}, {0.0, -1.0}, {r, -r}};
    const double steps = wrapped / 45.0;
    if (steps == std::floor(steps)) {
        return table[static_cast<int>(steps) % 8];
    }
    return {std::cos(wrapped * kDegree), std::sin(wrapped * kDegree)};
}

std::set<std::string> ports_of(const Element &element) {
    return std::visit(
        [](const auto &e) -> std::set<std::string> {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, BeamSplitter>) {
                return {e.port_a, e.port_b};
            } else {
                return {e.port};
            }
        },
        element);
}

}  // namespace

BeamSplitter beamsplitter(double transmissivity, std::string port_a, std::string port_b) {
    if (!(transmissivity > 0.0 && transmissivity < 1.0)) {
        throw InvalidInput(fmt::format("beam splitter transmissivity {} outside (0, 1)", transmissivity));
    }
    if (port_a == port_b) {
        throw InvalidInput(fmt::format("beam splitter needs two distinct ports, got '{}' twice", port_a));
    }
    return {transmissivity, std::move(port_a), std::move(port_b)};
}

HalfWavePlate hwp(double angle_deg, std::string port) {
    if (!std::isfinite(angle_deg)) {
        throw InvalidInput("half-wave plate angle must be finite");
    }
    return {angle_deg, std::move(port)};
}

PhaseShift phase_shift(double angle_deg, std::string port) {
    if (!std::isfinite(angle_deg)) {
        throw InvalidInput("phase shift must be finite");
    }
    return {angle_deg, std::move(port)};
}

std::vector<ModeMap> mode_maps(const Element &element) {
    using enum Polarization;
    std::vector<ModeMap> maps;
    if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
        const double t = std::sqrt(bs->transmissivity);
        const cplx r(0.0, std::sqrt(1.0 - bs->transmissivity));
        Eigen::MatrixXcd m(2, 2);
        m << t, r, r, t;
        for (auto pol : {H, V}) {
            maps.push_back({{{bs->port_a, pol}, {bs->port_b, pol}}, m});
        }
    } else if (const auto *plate = std::get_if<HalfWavePlate>(&element)) {
        const auto [c, s] = doubled_angle(plate->angle_deg);
        Eigen::MatrixXcd m(2, 2);
        // Columns are the images of H and V.
        m << c, s, s, -c;
        maps.push_back({{{plate->port, H}, {plate->port, V}}, m});
    } else if (const auto *ph = std::get_if<PhaseShift>(&element)) {
        const auto [c, s] = doubled_angle(ph->angle_deg / 2.0);
        Eigen::MatrixXcd m(1, 1);
        m(0, 0) = cplx(c, s);
        for (auto pol : {H, V}) {
            maps.push_back({{{ph->port, pol}}, m});
        }
    }
    return maps;
}

ModeNetwork::ModeNetwork(std::vector<std::string> ports, std::vector<std::string> inputs,
                         std::vector<std::string> outputs, std::vector<Element> elements)
    : ports_(std::move(ports)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      elements_(std::move(elements)) {
    const std::set<std::string> declared(ports_.begin(), ports_.end());
    if (declared.size() != ports_.size()) {
        throw InvalidInput("network declares a port twice");
    }
    auto require = [&](const std::string &port, const char *role) {
        if (!declared.count(port)) {
            throw InvalidInput(fmt::format("{} port '{}' is not declared", role, port));
        }
    };
    for (const auto &p : inputs_) require(p, "input");
    for (const auto &p : outputs_) require(p, "output");
    if (std::set<std::string>(outputs_.begin(), outputs_.end()).size() != outputs_.size()) {
        throw InvalidInput("network lists an output port twice");
    }
    if (std::set<std::string>(inputs_.begin(), inputs_.end()).size() != inputs_.size()) {
        throw InvalidInput("network lists an input port twice");
    }
    for (const auto &e : elements_) {
        for (const auto &p : ports_of(e)) require(p, "element");
    }
}

std::vector<Mode> ModeNetwork::modes() const {
    std::vector<Mode> out;
    for (const auto &p : ports_) {
        out.push_back({p, Polarization::H});
        out.push_back({p, Polarization::V});
    }
    return out;
}

Eigen::MatrixXcd ModeNetwork::transfer_matrix() const {
    const auto all = modes();
    const auto n = static_cast<Eigen::Index>(all.size());
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(n, n);
    for (const auto &element : elements_) {
        for (const auto &map : mode_maps(element)) {
            std::vector<Eigen::Index> idx;
            for (const auto &m : map.modes) {
                idx.push_back(std::find(all.begin(), all.end(), m) - all.begin());
            }
            Eigen::MatrixXcd step = Eigen::MatrixXcd::Identity(n, n);
            for (std::size_t r = 0; r < idx.size(); ++r) {
                for (std::size_t c = 0; c < idx.size(); ++c) {
                    step(idx[r], idx[c]) = map.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
                }
            }
            total = step * total;
        }
    }
    return total;
}

bool ModeNetwork::is_unitary(double tol) const {
    const Eigen::MatrixXcd u = transfer_matrix();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace jwm
