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
 * Dense state vectors and operators over small registers of labeled qubits.
 *
 * Basis states are ordered lexicographically by bitstring over the declared
 * label order; the first label is the most significant bit. A ket over labels
 * (I, 1) therefore stores amplitudes for |00>, |01>, |10>, |11> in that order.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace jwm {

using cplx = std::complex<double>;
using Label = std::string;
using Labels = std::vector<Label>;

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kMaxQubits = 16;

/// Immutable pure state over an ordered list of labeled qubits.
class Ket {
   public:
    Ket(Labels labels, std::vector<cplx> amplitudes);

    /// Computational basis state; `bits` is a string of '0'/'1' in label order.
    static Ket basis(Labels labels, std::string_view bits);

    /// Single-qubit state a0|0> + a1|1>.
    static Ket qubit(Label label, cplx a0, cplx a1);

    const Labels &labels() const noexcept { return labels_; }
    std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
    std::size_t num_qubits() const noexcept { return labels_.size(); }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }

    cplx amplitude(std::size_t index) const { return amplitudes_.at(index); }
    cplx amplitude(std::string_view bits) const;

    /// Position of `label` in the label order, if present.
    std::optional<std::size_t> position(const Label &label) const;
    bool has_label(const Label &label) const { return position(label).has_value(); }

    double norm_squared() const;
    bool is_normalized(double tol = kDefaultTolerance) const;

    Ket normalized() const;
    Ket scaled(cplx factor) const;

    /// Same state with qubits listed in `order`, a permutation of labels().
    Ket reordered(const Labels &order) const;

   private:
    Labels labels_;
    std::vector<cplx> amplitudes_;
};

/// Dense operator on an ordered list of labeled qubits.
class Operator {
   public:
    Operator(Labels labels, Eigen::MatrixXcd matrix);

    static Operator identity(Labels labels);

    const Labels &labels() const noexcept { return labels_; }
    const Eigen::MatrixXcd &matrix() const noexcept { return matrix_; }
    std::size_t num_qubits() const noexcept { return labels_.size(); }

    Operator adjoint() const;
    Operator reordered(const Labels &order) const;

    bool is_projector(double tol = kDefaultTolerance) const;
    bool is_unitary(double tol = kDefaultTolerance) const;

    /// Elementwise comparison after aligning label order.
    bool approx_equal(const Operator &other, double tol = kDefaultTolerance) const;

   private:
    Labels labels_;
    Eigen::MatrixXcd matrix_;
};

/// Sum of two operators on the same label set (rhs is reordered to lhs).
Operator operator+(const Operator &lhs, const Operator &rhs);
Operator operator-(const Operator &lhs, const Operator &rhs);

/// Tensor product over concatenated labels; label sets must be disjoint.
Ket tensor(const Ket &a, const Ket &b);

/// Applies `op` to the qubits it names, identity elsewhere. The result is not
/// renormalized.
Ket apply(const Operator &op, const Ket &state);

/// <a|b>. If the label orders differ but the sets agree, b is reordered first.
cplx inner(const Ket &a, const Ket &b);

/// Controlled-NOT with `control` and `target`, as a 4x4 operator on
/// (control, target).
Operator cnot(const Label &control, const Label &target);

/// Rank-1 projector |bits><bits| on `labels`.
Operator projector(std::string_view bits, Labels labels);

/// Bitstring of `index` over `width` bits, most significant first.
std::string to_bits(std::size_t index, std::size_t width);
std::size_t from_bits(std::string_view bits);

}  // namespace jwm
