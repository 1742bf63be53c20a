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
#include <numeric>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "jwm/photonics.hpp"

namespace jwm {

namespace {

double factorial(unsigned n) {
    double f = 1.0;
    for (unsigned k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

std::size_t photon_count(const Occupation &occ) {
    return std::accumulate(occ.begin(), occ.end(), std::size_t{0});
}

void check_modes(const std::vector<Mode> &modes) {
    std::set<Mode> seen;
    for (const auto &m : modes) {
        if (!seen.insert(m).second) {
            throw InvalidInput(fmt::format("duplicate mode {}", to_string(m)));
        }
    }
}

}  // namespace

std::string to_string(const Mode &mode) {
    return mode.port + (mode.polarization == Polarization::H ? ":H" : ":V");
}

FockState::FockState(std::vector<Mode> modes, std::size_t photon_budget)
    : modes_(std::move(modes)), photon_budget_(photon_budget) {
    check_modes(modes_);
    terms_.emplace(Occupation(modes_.size(), 0), 1.0);
}

FockState::FockState(std::vector<Mode> modes, std::map<Occupation, cplx> terms, std::size_t photon_budget)
    : modes_(std::move(modes)), terms_(std::move(terms)), photon_budget_(photon_budget) {
    check_modes(modes_);
    for (const auto &[occ, amp] : terms_) {
        if (occ.size() != modes_.size()) {
            throw InvalidInput("occupation vector length does not match the mode list");
        }
        if (photon_count(occ) > photon_budget_) {
            throw InvalidInput(fmt::format("term with {} photons exceeds the budget of {}", photon_count(occ),
                                           photon_budget_));
        }
    }
}

FockState FockState::from_creations(std::vector<Mode> modes, const std::vector<CreationTerm> &terms,
                                    std::size_t photon_budget) {
    std::map<Occupation, cplx> out;
    for (const auto &term : terms) {
        Occupation occ(modes.size(), 0);
        for (const auto &m : term.creations) {
            auto it = std::find(modes.begin(), modes.end(), m);
            if (it == modes.end()) {
                throw InvalidInput(fmt::format("creation on undeclared mode {}", to_string(m)));
            }
            ++occ[static_cast<std::size_t>(it - modes.begin())];
        }
        // prod (a^dag)^n |0> = sqrt(prod n!) |n>
        double weight = 1.0;
        for (auto n : occ) {
            weight *= std::sqrt(factorial(n));
        }
        out[occ] += term.coefficient * weight;
    }
    return FockState(std::move(modes), std::move(out), photon_budget);
}

std::optional<std::size_t> FockState::mode_index(const Mode &mode) const {
    auto it = std::find(modes_.begin(), modes_.end(), mode);
    if (it == modes_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - modes_.begin());
}

cplx FockState::amplitude(const Occupation &occupation) const {
    auto it = terms_.find(occupation);
    return it == terms_.end() ? cplx(0.0) : it->second;
}

double FockState::norm_squared() const {
    double n = 0.0;
    for (const auto &[occ, amp] : terms_) {
        n += std::norm(amp);
    }
    return n;
}

FockState FockState::embedded(const std::vector<Mode> &universe) const {
    std::vector<std::size_t> target(modes_.size());
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        auto it = std::find(universe.begin(), universe.end(), modes_[i]);
        if (it == universe.end()) {
            throw InvalidInput(fmt::format("mode {} missing from the target universe", to_string(modes_[i])));
        }
        target[i] = static_cast<std::size_t>(it - universe.begin());
    }
    std::map<Occupation, cplx> out;
    for (const auto &[occ, amp] : terms_) {
        Occupation lifted(universe.size(), 0);
        for (std::size_t i = 0; i < occ.size(); ++i) {
            lifted[target[i]] = occ[i];
        }
        out.emplace(std::move(lifted), amp);
    }
    return FockState(universe, std::move(out), photon_budget_);
}

FockState apply_map(const FockState &state, const ModeMap &map) {
    const std::size_t k = map.modes.size();
    std::vector<std::size_t> idx(k);
    for (std::size_t j = 0; j < k; ++j) {
        auto pos = state.mode_index(map.modes[j]);
        if (!pos) {
            throw InvalidInput(fmt::format("element acts on mode {} which the state lacks", to_string(map.modes[j])));
        }
        idx[j] = *pos;
    }

    std::map<Occupation, cplx> out;
    for (const auto &[occ, amp] : state.terms()) {
        // Strip the affected photons and turn |n> back into a monomial.
        Occupation rest = occ;
        std::vector<std::size_t> photons;
        double inv_norm = 1.0;
        for (std::size_t j = 0; j < k; ++j) {
            const auto n = occ[idx[j]];
            inv_norm /= std::sqrt(factorial(n));
            photons.insert(photons.end(), n, j);
            rest[idx[j]] = 0;
        }

        std::map<Occupation, cplx> partial{{rest, amp * inv_norm}};
        for (std::size_t src : photons) {
            std::map<Occupation, cplx> next;
            for (const auto &[p_occ, p_amp] : partial) {
                for (std::size_t dst = 0; dst < k; ++dst) {
                    const cplx m = map.matrix(static_cast<Eigen::Index>(dst), static_cast<Eigen::Index>(src));
                    if (m == 0.0) {
                        continue;
                    }
                    Occupation grown = p_occ;
                    ++grown[idx[dst]];
                    next[grown] += p_amp * m;
                }
            }
            partial = std::move(next);
        }

        for (const auto &[p_occ, p_amp] : partial) {
            double weight = 1.0;
            for (std::size_t j = 0; j < k; ++j) {
                weight *= std::sqrt(factorial(p_occ[idx[j]]));
            }
            out[p_occ] += p_amp * weight;
        }
    }

    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0.0 ? out.erase(it) : std::next(it);
    }
    // Linear maps conserve photon number; the constructor re-checks the budget.
    return FockState(state.modes(), std::move(out), state.photon_budget());
}

FockState evolve(const FockState &state, const ModeNetwork &network) {
    std::vector<Mode> universe = network.modes();
    for (const auto &m : state.modes()) {
        if (std::find(universe.begin(), universe.end(), m) == universe.end()) {
            universe.push_back(m);
        }
    }
    FockState current = state.embedded(universe);
    for (const auto &element : network.elements()) {
        for (const auto &map : mode_maps(element)) {
            current = apply_map(current, map);
        }
    }
    return current;
}

Coincidence coincidence_project(const FockState &state, const std::vector<std::string> &ports,
                                Labels qubit_labels) {
    if (ports.empty()) {
        throw InvalidInput("coincidence needs at least one monitored port");
    }
    if (qubit_labels.empty()) {
        qubit_labels = meter_labels(ports.size());
    }
    if (qubit_labels.size() != ports.size()) {
        throw InvalidInput("one qubit label per monitored port is required");
    }
    for (const auto &port : ports) {
        if (std::none_of(state.modes().begin(), state.modes().end(), [&](const Mode &m) { return m.port == port; })) {
            throw InvalidInput(fmt::format("monitored port '{}' has no modes in the state", port));
        }
    }

    // For each mode: monitored port index (or -1) and its polarization bit.
    std::vector<int> port_of(state.modes().size(), -1);
    for (std::size_t i = 0; i < state.modes().size(); ++i) {
        auto it = std::find(ports.begin(), ports.end(), state.modes()[i].port);
        if (it != ports.end()) {
            port_of[i] = static_cast<int>(it - ports.begin());
        }
    }

    const std::size_t n = ports.size();
    std::vector<cplx> amps(std::size_t{1} << n, 0.0);
    for (const auto &[occ, amp] : state.terms()) {
        std::vector<int> clicks(n, 0);
        std::size_t bits = 0;
        bool kept = true;
        for (std::size_t i = 0; i < occ.size() && kept; ++i) {
            if (occ[i] == 0) {
                continue;
            }
            if (port_of[i] < 0) {
                kept = false;  // photon left through an unmonitored port
                break;
            }
            const auto p = static_cast<std::size_t>(port_of[i]);
            clicks[p] += occ[i];
            if (state.modes()[i].polarization == Polarization::V) {
                bits |= std::size_t{1} << (n - 1 - p);
            }
        }
        if (!kept || std::any_of(clicks.begin(), clicks.end(), [](int c) { return c != 1; })) {
            continue;
        }
        amps[bits] += amp;
    }

    double probability = 0.0;
    for (cplx a : amps) {
        probability += std::norm(a);
    }
    if (probability <= kDefaultTolerance * kDefaultTolerance) {
        throw PostselectionFailure("null coincidence: no term has exactly one photon in every monitored port");
    }
    return {Ket(std::move(qubit_labels), std::move(amps)).normalized(), probability};
}

}  // namespace jwm
