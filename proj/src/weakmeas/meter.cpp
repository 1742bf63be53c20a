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

#include <cmath>
#include <set>

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "jwm/weakmeas.hpp"

namespace jwm {

namespace {

std::size_t family_qubits(MeterFamily family, std::size_t n) {
    switch (family) {
        case MeterFamily::OneQubit:
            return 1;
        case MeterFamily::TwoFull:
        case MeterFamily::TwoPaired:
            return 2;
        case MeterFamily::ThreeFull:
        case MeterFamily::ThreePaired:
            return 3;
        case MeterFamily::NFull:
            if (n == 0 || n > kMaxQubits / 2) {
                throw InvalidInput(fmt::format("n-qubit meter needs 1 <= n <= {}, got {}", kMaxQubits / 2, n));
            }
            return n;
    }
    throw InvalidInput("unknown meter family");
}

bool is_paired(MeterFamily family) {
    return family == MeterFamily::TwoPaired || family == MeterFamily::ThreePaired;
}

}  // namespace

std::string to_string(MeterFamily family) {
    switch (family) {
        case MeterFamily::OneQubit:
            return "1q";
        case MeterFamily::TwoFull:
            return "2q-full";
        case MeterFamily::TwoPaired:
            return "2q-paired";
        case MeterFamily::ThreeFull:
            return "3q-full";
        case MeterFamily::ThreePaired:
            return "3q-paired";
        case MeterFamily::NFull:
            return "nq-full";
    }
    return "?";
}

MeterSpec::MeterSpec(MeterFamily family, double strength, std::size_t qubits)
    : family_(family), strength_(strength), qubits_(family_qubits(family, qubits)) {
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw InvalidInput(fmt::format("measurement strength G = {} outside [0, 1]", strength));
    }
    // delta^2 + c eps^2 = 1 and delta^2 - eps^2 = G.
    const double c = epsilon_weight();
    epsilon_ = std::sqrt((1.0 - strength) / (1.0 + c));
    delta_ = std::sqrt((1.0 + c * strength) / (1.0 + c));
}

double MeterSpec::epsilon_weight() const noexcept {
    switch (family_) {
        case MeterFamily::OneQubit:
        case MeterFamily::TwoPaired:
            return 1.0;
        case MeterFamily::TwoFull:
        case MeterFamily::ThreePaired:
            return 3.0;
        case MeterFamily::ThreeFull:
            return 7.0;
        case MeterFamily::NFull:
            return std::ldexp(1.0, static_cast<int>(qubits_)) - 1.0;
    }
    return 0.0;
}

Labels meter_labels(std::size_t n) {
    Labels out;
    for (std::size_t k = 1; k <= n; ++k) {
        out.push_back(std::to_string(k));
    }
    return out;
}

Ket make_meter(const MeterSpec &spec, Labels labels) {
    const std::size_t n = spec.qubits();
    if (labels.empty()) {
        labels = meter_labels(n);
    }
    if (labels.size() != n) {
        throw InvalidInput(fmt::format("{} meter needs {} labels, got {}", to_string(spec.family()), n,
                                       labels.size()));
    }
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t all_ones = dim - 1;
    const bool paired = is_paired(spec.family());
    const double scale = paired ? 1.0 / std::sqrt(2.0) : 1.0;

    std::vector<cplx> amps(dim);
    for (std::size_t s = 0; s < dim; ++s) {
        const bool peak = s == 0 || (paired && s == all_ones);
        amps[s] = scale * (peak ? spec.delta() : spec.epsilon());
    }
    return Ket(std::move(labels), std::move(amps));
}

CouplingPairs pair_in_order(const Ket &signal, const Ket &meter) {
    if (signal.num_qubits() != meter.num_qubits()) {
        throw InvalidInput(fmt::format("{} signal qubits but {} meter qubits", signal.num_qubits(),
                                       meter.num_qubits()));
    }
    CouplingPairs pairs;
    for (std::size_t k = 0; k < signal.num_qubits(); ++k) {
        pairs.emplace_back(signal.labels()[k], meter.labels()[k]);
    }
    return pairs;
}

Ket couple(const Ket &signal, const Ket &meter, const CouplingPairs &pairs) {
    std::set<Label> used_signal;
    std::set<Label> used_meter;
    for (const auto &[s, m] : pairs) {
        if (!signal.has_label(s)) {
            throw InvalidInput(fmt::format("coupling names unknown signal qubit '{}'", s));
        }
        if (!meter.has_label(m)) {
            throw InvalidInput(fmt::format("coupling names unknown meter qubit '{}'", m));
        }
        if (!used_signal.insert(s).second || !used_meter.insert(m).second) {
            throw InvalidInput(fmt::format("coupling reuses a qubit in pair ({}, {})", s, m));
        }
    }
    Ket joint = tensor(signal, meter);
    for (const auto &[s, m] : pairs) {
        joint = apply(cnot(s, m), joint);
    }
    return joint;
}

}  // namespace jwm
