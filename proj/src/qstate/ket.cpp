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

#include "jwm/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "labels.hpp"

namespace jwm {

namespace detail {

void check_labels(const Labels &labels) {
    if (labels.size() > kMaxQubits) {
        throw InvalidInput(fmt::format("register of {} qubits exceeds the limit of {}", labels.size(),
                                       kMaxQubits));
    }
    std::set<Label> seen;
    for (const auto &l : labels) {
        if (l.empty()) {
            throw InvalidInput("empty qubit label");
        }
        if (!seen.insert(l).second) {
            throw InvalidInput(fmt::format("duplicate qubit label '{}'", l));
        }
    }
}

std::vector<std::size_t> permutation_to(const Labels &from, const Labels &to) {
    if (from.size() != to.size()) {
        throw InvalidInput("label sets differ in size");
    }
    std::vector<std::size_t> perm(to.size());
    for (std::size_t i = 0; i < to.size(); ++i) {
        auto it = std::find(from.begin(), from.end(), to[i]);
        if (it == from.end()) {
            throw InvalidInput(fmt::format("label '{}' not present", to[i]));
        }
        perm[i] = static_cast<std::size_t>(it - from.begin());
    }
    return perm;
}

std::size_t permute_index(std::size_t index, std::size_t n, const std::vector<std::size_t> &perm) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t bit = (index >> (n - 1 - i)) & 1U;
        out |= bit << (n - 1 - perm[i]);
    }
    return out;
}

}  // namespace detail

std::string to_bits(std::size_t index, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((index >> (width - 1 - i)) & 1U) {
            s[i] = '1';
        }
    }
    return s;
}

std::size_t from_bits(std::string_view bits) {
    std::size_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidInput(fmt::format("'{}' is not a bitstring", bits));
        }
        v = (v << 1U) | static_cast<std::size_t>(c - '0');
    }
    return v;
}

Ket::Ket(Labels labels, std::vector<cplx> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
    detail::check_labels(labels_);
    if (amplitudes_.size() != (std::size_t{1} << labels_.size())) {
        throw InvalidInput(fmt::format("{} amplitudes given for {} qubits", amplitudes_.size(),
                                       labels_.size()));
    }
}

Ket Ket::basis(Labels labels, std::string_view bits) {
    if (bits.size() != labels.size()) {
        throw InvalidInput(fmt::format("bitstring '{}' does not match {} labels", bits, labels.size()));
    }
    std::vector<cplx> amps(std::size_t{1} << labels.size(), 0.0);
    amps[from_bits(bits)] = 1.0;
    return Ket(std::move(labels), std::move(amps));
}

Ket Ket::qubit(Label label, cplx a0, cplx a1) { return Ket({std::move(label)}, {a0, a1}); }

cplx Ket::amplitude(std::string_view bits) const {
    if (bits.size() != labels_.size()) {
        throw InvalidInput(fmt::format("bitstring '{}' does not match {} labels", bits, labels_.size()));
    }
    return amplitudes_[from_bits(bits)];
}

std::optional<std::size_t> Ket::position(const Label &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

double Ket::norm_squared() const {
    return std::accumulate(amplitudes_.begin(), amplitudes_.end(), 0.0,
                           [](double acc, cplx a) { return acc + std::norm(a); });
}

bool Ket::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

Ket Ket::normalized() const {
    const double n2 = norm_squared();
    if (n2 == 0.0) {
        throw InvalidInput("cannot normalize the zero vector");
    }
    return scaled(1.0 / std::sqrt(n2));
}

Ket Ket::scaled(cplx factor) const {
    std::vector<cplx> amps(amplitudes_);
    for (auto &a : amps) {
        a *= factor;
    }
    return Ket(labels_, std::move(amps));
}

Ket Ket::reordered(const Labels &order) const {
    const auto perm = detail::permutation_to(labels_, order);
    const std::size_t n = labels_.size();
    std::vector<cplx> amps(amplitudes_.size());
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        amps[i] = amplitudes_[detail::permute_index(i, n, perm)];
    }
    return Ket(order, std::move(amps));
}

Ket tensor(const Ket &a, const Ket &b) {
    Labels labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<cplx> amps;
    amps.reserve(a.dimension() * b.dimension());
    for (cplx x : a.amplitudes()) {
        for (cplx y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    // The constructor rejects overlapping label sets.
    return Ket(std::move(labels), std::move(amps));
}

cplx inner(const Ket &a, const Ket &b) {
    const Ket aligned = a.labels() == b.labels() ? b : b.reordered(a.labels());
    cplx acc = 0.0;
    const auto x = a.amplitudes();
    const auto y = aligned.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

Ket apply(const Operator &op, const Ket &state) {
    const std::size_t n = state.num_qubits();
    const std::size_t k = op.num_qubits();
    std::vector<std::size_t> shifts(k);
    std::size_t mask = 0;
    for (std::size_t j = 0; j < k; ++j) {
        auto pos = state.position(op.labels()[j]);
        if (!pos) {
            throw InvalidInput(fmt::format("operator label '{}' not in state", op.labels()[j]));
        }
        shifts[j] = n - 1 - *pos;
        mask |= std::size_t{1} << shifts[j];
    }

    const std::size_t sub_dim = std::size_t{1} << k;
    // offsets[c] is the state-index contribution of operator sub-index c.
    std::vector<std::size_t> offsets(sub_dim, 0);
    for (std::size_t c = 0; c < sub_dim; ++c) {
        for (std::size_t j = 0; j < k; ++j) {
            if ((c >> (k - 1 - j)) & 1U) {
                offsets[c] |= std::size_t{1} << shifts[j];
            }
        }
    }

    const auto in = state.amplitudes();
    const auto &m = op.matrix();
    std::vector<cplx> out(in.size(), 0.0);
    Eigen::VectorXcd gathered(sub_dim);
    for (std::size_t base = 0; base < in.size(); ++base) {
        if (base & mask) {
            continue;
        }
        for (std::size_t c = 0; c < sub_dim; ++c) {
            gathered[static_cast<Eigen::Index>(c)] = in[base | offsets[c]];
        }
        const Eigen::VectorXcd result = m * gathered;
        for (std::size_t r = 0; r < sub_dim; ++r) {
            out[base | offsets[r]] = result[static_cast<Eigen::Index>(r)];
        }
    }
    return Ket(state.labels(), std::move(out));
}

}  // namespace jwm
