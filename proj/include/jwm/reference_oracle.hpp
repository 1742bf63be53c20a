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

/**
 * @file
 * Brute-force reference computations used to cross-check the simulators.
 *
 * Nothing here calls into Ket/apply/couple/meter_distribution: gates are
 * built as full Kronecker products over the whole register, meters from
 * their closed-form amplitudes, and conditioning is an explicit projector
 * followed by a marginal. Register layout is signal qubits then meter
 * qubits, most significant first.
 */

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "jwm/weakmeas.hpp"

namespace jwm::reference {

/// CNOT on `num_qubits` qubits as a dense 2^n x 2^n matrix.
Eigen::MatrixXcd cnot_matrix(std::size_t control, std::size_t target, std::size_t num_qubits);

/// Meter amplitudes written out from the family definitions.
Eigen::VectorXcd meter_amplitudes(MeterFamily family, double strength, std::size_t qubits);

/// Full-register evolution (signal (x) meter, then CNOT k -> n+k for every
/// k), projection onto post (x) 1, and the normalized meter marginal.
/// `success` receives the postselection probability when non-null.
std::vector<double> conditional_meter_distribution(const Eigen::VectorXcd &pre, const Eigen::VectorXcd &post,
                                                   const Eigen::VectorXcd &meter, double *success = nullptr);

/// Projective measurement in the computational basis followed by
/// postselection: P(s) proportional to |<f|s><s|i>|^2.
std::vector<double> projective_then_postselect(const Eigen::VectorXcd &pre, const Eigen::VectorXcd &post);

/// Amplitudes of a ket as an Eigen vector.
Eigen::VectorXcd to_vector(const Ket &ket);

}  // namespace jwm::reference
