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

#include "jwm/reference_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace jwm::reference {

namespace {

Eigen::MatrixXcd kron_chain(const std::vector<Eigen::MatrixXcd> &factors) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (const auto &f : factors) {
        out = Eigen::kroneckerProduct(out, f).eval();
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd cnot_matrix(std::size_t control, std::size_t target, std::size_t num_qubits) {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(2, 2);
    Eigen::MatrixXcd p1 = Eigen::MatrixXcd::Zero(2, 2);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;

    std::vector<Eigen::MatrixXcd> keep(num_qubits, id);
    std::vector<Eigen::MatrixXcd> flip(num_qubits, id);
    keep[control] = p0;
    flip[control] = p1;
    flip[target] = x;
    return kron_chain(keep) + kron_chain(flip);
}

Eigen::VectorXcd meter_amplitudes(MeterFamily family, double strength, std::size_t qubits) {
    const std::size_t dim = std::size_t{1} << qubits;
    const bool paired = family == MeterFamily::TwoPaired || family == MeterFamily::ThreePaired;
    // Count of basis states carrying eps, and the normalization prefactor.
    double eps_states = 0.0;
    double prefactor = 1.0;
    switch (family) {
        case MeterFamily::OneQubit:
            eps_states = 1.0;
            break;
        case MeterFamily::TwoPaired:
            eps_states = 2.0;
            prefactor = 0.5;
            break;
        case MeterFamily::ThreePaired:
            eps_states = 6.0;
            prefactor = 0.5;
            break;
        default:
            eps_states = static_cast<double>(dim - 1);
            break;
    }
    // prefactor * (peaks * delta^2 + eps_states * eps^2) = 1, delta^2 - eps^2 = G.
    const double peaks = paired ? 2.0 : 1.0;
    const double eps2 = (1.0 / prefactor - peaks * strength) / (peaks + eps_states);
    const double delta2 = eps2 + strength;

    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
    for (std::size_t s = 0; s < dim; ++s) {
        const bool peak = s == 0 || (paired && s == dim - 1);
        v[static_cast<Eigen::Index>(s)] = std::sqrt(prefactor) * std::sqrt(peak ? delta2 : eps2);
    }
    return v;
}

std::vector<double> conditional_meter_distribution(const Eigen::VectorXcd &pre, const Eigen::VectorXcd &post,
                                                   const Eigen::VectorXcd &meter, double *success) {
    const auto sdim = pre.size();
    const auto mdim = meter.size();
    const auto n = static_cast<std::size_t>(std::llround(std::log2(static_cast<double>(sdim))));
    if (post.size() != sdim || mdim != sdim) {
        throw std::invalid_argument("reference: signal and meter registers must have equal size");
    }

    Eigen::VectorXcd psi = Eigen::kroneckerProduct(pre, meter).eval();
    for (std::size_t k = 0; k < n; ++k) {
        psi = cnot_matrix(k, n + k, 2 * n) * psi;
    }

    const Eigen::MatrixXcd post_projector = post * post.adjoint();
    const Eigen::MatrixXcd full_projector =
        Eigen::kroneckerProduct(post_projector, Eigen::MatrixXcd::Identity(mdim, mdim)).eval();
    const Eigen::VectorXcd kept = full_projector * psi;

    std::vector<double> dist(static_cast<std::size_t>(mdim), 0.0);
    double total = 0.0;
    for (Eigen::Index s = 0; s < sdim; ++s) {
        for (Eigen::Index m = 0; m < mdim; ++m) {
            const double p = std::norm(kept[s * mdim + m]);
            dist[static_cast<std::size_t>(m)] += p;
            total += p;
        }
    }
    for (auto &p : dist) {
        p /= total;
    }
    if (success != nullptr) {
        *success = total;
    }
    return dist;
}

std::vector<double> projective_then_postselect(const Eigen::VectorXcd &pre, const Eigen::VectorXcd &post) {
    std::vector<double> dist(static_cast<std::size_t>(pre.size()));
    double total = 0.0;
    for (Eigen::Index s = 0; s < pre.size(); ++s) {
        const double p = std::norm(std::conj(post[s]) * pre[s]);
        dist[static_cast<std::size_t>(s)] = p;
        total += p;
    }
    for (auto &p : dist) {
        p /= total;
    }
    return dist;
}

Eigen::VectorXcd to_vector(const Ket &ket) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(ket.dimension()));
    for (std::size_t i = 0; i < ket.dimension(); ++i) {
        v[static_cast<Eigen::Index>(i)] = ket.amplitude(i);
    }
    return v;
}

}  // namespace jwm::reference
