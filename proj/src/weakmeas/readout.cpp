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

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "jwm/weakmeas.hpp"

namespace jwm {

ReadoutTable::ReadoutTable(Labels meter_labels, std::map<std::string, double> entries,
                           double success_probability, double strength)
    : meter_labels_(std::move(meter_labels)),
      entries_(std::move(entries)),
      success_probability_(success_probability),
      strength_(strength) {}

double ReadoutTable::probability(const std::string &bits) const {
    auto it = entries_.find(bits);
    if (it == entries_.end()) {
        throw InvalidInput(fmt::format("no meter outcome '{}' in readout table", bits));
    }
    return it->second;
}

double ReadoutTable::total(const std::set<std::string> &outcomes) const {
    double sum = 0.0;
    for (const auto &bits : outcomes) {
        sum += probability(bits);
    }
    return sum;
}

ReadoutTable meter_distribution(const Ket &joint, const Ket &post, double strength) {
    const Labels &signal = post.labels();
    Labels meter;
    for (const auto &l : joint.labels()) {
        if (std::find(signal.begin(), signal.end(), l) == signal.end()) {
            meter.push_back(l);
        }
    }
    if (meter.size() + signal.size() != joint.num_qubits()) {
        throw InvalidInput("postselection names qubits that are not in the joint state");
    }

    Labels order = signal;
    order.insert(order.end(), meter.begin(), meter.end());
    const Ket aligned = joint.reordered(order);

    const std::size_t meter_dim = std::size_t{1} << meter.size();
    const auto f = post.amplitudes();
    const auto psi = aligned.amplitudes();
    // Extended-precision accumulation: readouts divide differences of these
    // probabilities by G, so rounding here is amplified by 1/G.
    using wide = std::complex<long double>;
    std::vector<wide> conditional(meter_dim, 0.0L);
    for (std::size_t s = 0; s < f.size(); ++s) {
        const wide weight = std::conj(wide(f[s]));
        if (weight == 0.0L) {
            continue;
        }
        for (std::size_t m = 0; m < meter_dim; ++m) {
            conditional[m] += weight * wide(psi[s * meter_dim + m]);
        }
    }

    long double success = 0.0L;
    for (const wide &a : conditional) {
        success += std::norm(a);
    }
    if (success <= kDefaultTolerance * kDefaultTolerance) {
        std::string names;
        for (const auto &l : signal) {
            names += (names.empty() ? "" : ",") + l;
        }
        throw PostselectionFailure(
            fmt::format("postselection on signal qubits ({}) has zero success probability", names));
    }

    std::map<std::string, double> entries;
    for (std::size_t m = 0; m < meter_dim; ++m) {
        entries.emplace(to_bits(m, meter.size()), static_cast<double>(std::norm(conditional[m]) / success));
    }
    return ReadoutTable(std::move(meter), std::move(entries), static_cast<double>(success), strength);
}

double readout(const ReadoutTable &table, const std::set<std::string> &outcomes, double subtracted) {
    if (table.strength() == 0.0) {
        throw ZeroStrength("normalized readout is undefined at G = 0; use weak_value for the limit");
    }
    return (table.total(outcomes) - subtracted) / table.strength();
}

ReadoutTable simulate(const PrePost &pp, const MeterSpec &spec) {
    const Ket meter = make_meter(spec);
    const Ket joint = couple(pp.pre(), meter, pair_in_order(pp.pre(), meter));
    return meter_distribution(joint, pp.post(), spec.strength());
}

std::set<std::string> same_pair_outcomes(std::size_t num_qubits, std::size_t x, std::size_t y) {
    if (x >= num_qubits || y >= num_qubits || x == y) {
        throw InvalidInput(fmt::format("bad qubit pair ({}, {}) for {} qubits", x, y, num_qubits));
    }
    std::set<std::string> out;
    for (std::size_t s = 0; s < (std::size_t{1} << num_qubits); ++s) {
        const std::string bits = to_bits(s, num_qubits);
        if (bits[x] == bits[y]) {
            out.insert(bits);
        }
    }
    return out;
}

double pigeonhole_readout(const ReadoutTable &table, const MeterSpec &spec, std::size_t x, std::size_t y) {
    if (spec.family() != MeterFamily::ThreePaired) {
        throw InvalidInput("pigeonhole readout needs the 3q-paired meter");
    }
    // Two complementary outcome pairs, each carrying an eps^2 offset.
    const double eps = spec.epsilon();
    return readout(table, same_pair_outcomes(3, x, y), 2.0 * eps * eps);
}

}  // namespace jwm
