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

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "jwm/qstate.hpp"
#include "labels.hpp"

namespace jwm {

Operator::Operator(Labels labels, Eigen::MatrixXcd matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
    detail::check_labels(labels_);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << labels_.size());
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw InvalidInput(fmt::format("operator on {} qubits needs a {}x{} matrix, got {}x{}",
                                       labels_.size(), dim, dim, matrix_.rows(), matrix_.cols()));
    }
}

Operator Operator::identity(Labels labels) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << labels.size());
    return Operator(std::move(labels), Eigen::MatrixXcd::Identity(dim, dim));
}

Operator Operator::adjoint() const { return Operator(labels_, matrix_.adjoint()); }

Operator Operator::reordered(const Labels &order) const {
    const auto perm = detail::permutation_to(labels_, order);
    const std::size_t n = labels_.size();
    const Eigen::Index dim = matrix_.rows();
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const auto old_r = static_cast<Eigen::Index>(detail::permute_index(static_cast<std::size_t>(r), n, perm));
        for (Eigen::Index c = 0; c < dim; ++c) {
            const auto old_c =
                static_cast<Eigen::Index>(detail::permute_index(static_cast<std::size_t>(c), n, perm));
            m(r, c) = matrix_(old_r, old_c);
        }
    }
    return Operator(order, std::move(m));
}

bool Operator::is_projector(double tol) const {
    const bool hermitian = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() <= tol;
    const bool idempotent = (matrix_ * matrix_ - matrix_).cwiseAbs().maxCoeff() <= tol;
    return hermitian && idempotent;
}

bool Operator::is_unitary(double tol) const {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(matrix_.rows(), matrix_.cols());
    return (matrix_.adjoint() * matrix_ - id).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::approx_equal(const Operator &other, double tol) const {
    if (other.labels_.size() != labels_.size()) {
        return false;
    }
    const Operator aligned = other.labels_ == labels_ ? other : other.reordered(labels_);
    return (matrix_ - aligned.matrix_).cwiseAbs().maxCoeff() <= tol;
}

Operator operator+(const Operator &lhs, const Operator &rhs) {
    const Operator aligned = lhs.labels() == rhs.labels() ? rhs : rhs.reordered(lhs.labels());
    return Operator(lhs.labels(), lhs.matrix() + aligned.matrix());
}

Operator operator-(const Operator &lhs, const Operator &rhs) {
    const Operator aligned = lhs.labels() == rhs.labels() ? rhs : rhs.reordered(lhs.labels());
    return Operator(lhs.labels(), lhs.matrix() - aligned.matrix());
}

Operator cnot(const Label &control, const Label &target) {
    if (control == target) {
        throw InvalidInput(fmt::format("CNOT control and target are both '{}'", control));
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(3, 2) = 1.0;
    m(2, 3) = 1.0;
    return Operator({control, target}, std::move(m));
}

Operator projector(std::string_view bits, Labels labels) {
    if (bits.size() != labels.size()) {
        throw InvalidInput(
            fmt::format("projector bitstring '{}' does not match {} labels", bits, labels.size()));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << labels.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const auto idx = static_cast<Eigen::Index>(from_bits(bits));
    m(idx, idx) = 1.0;
    return Operator(std::move(labels), std::move(m));
}

}  // namespace jwm
