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
#include <random>

#include <gtest/gtest.h>

#include "jwm/errors.hpp"
#include "jwm/qstate.hpp"

using namespace jwm;

namespace {

constexpr double kTol = 1e-12;

void expect_amplitudes(const Ket &ket, const std::vector<cplx> &ref, double tol = kTol) {
    ASSERT_EQ(ket.dimension(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_NEAR(ket.amplitude(i).real(), ref[i].real(), tol) << "i=" << i;
        EXPECT_NEAR(ket.amplitude(i).imag(), ref[i].imag(), tol) << "i=" << i;
    }
}

Ket random_ket(std::mt19937_64 &rng, const Labels &labels) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<cplx> a(std::size_t{1} << labels.size());
    for (auto &x : a) x = {n(rng), n(rng)};
    return Ket(labels, a).normalized();
}

}  // namespace

TEST(Ket, BasisUsesFirstLabelAsMostSignificantBit) {
    const Ket k = Ket::basis({"a", "b"}, "10");
    expect_amplitudes(k, {0, 0, 1, 0});
    EXPECT_EQ(k.amplitude("10"), cplx(1.0));
}

TEST(Ket, RejectsBadConstruction) {
    EXPECT_THROW(Ket({"a"}, {1.0, 0.0, 0.0}), InvalidInput);
    EXPECT_THROW(Ket({"a", "a"}, {1.0, 0.0, 0.0, 0.0}), InvalidInput);
    EXPECT_THROW(Ket({""}, {1.0, 0.0}), InvalidInput);
    EXPECT_THROW(Ket::basis({"a", "b"}, "1"), InvalidInput);
    EXPECT_THROW(Ket::basis({"a"}, "2"), InvalidInput);
    Labels many;
    for (std::size_t k = 0; k <= kMaxQubits; ++k) many.push_back("q" + std::to_string(k));
    EXPECT_THROW(Ket::basis(many, std::string(many.size(), '0')), InvalidInput);
}

TEST(Ket, NormalizationAndScaling) {
    const Ket k({"a"}, {3.0, cplx(0.0, 4.0)});
    EXPECT_DOUBLE_EQ(k.norm_squared(), 25.0);
    EXPECT_FALSE(k.is_normalized());
    const Ket n = k.normalized();
    EXPECT_TRUE(n.is_normalized());
    expect_amplitudes(n, {0.6, cplx(0.0, 0.8)});
    EXPECT_THROW(Ket({"a"}, {0.0, 0.0}).normalized(), InvalidInput);
    expect_amplitudes(n.scaled(cplx(0.0, 1.0)), {cplx(0.0, 0.6), -0.8});
}

TEST(Ket, TensorOrdersLeftFactorFirst) {
    const Ket t = tensor(Ket::qubit("a", 0.0, 1.0), Ket::qubit("b", 1.0, 0.0));
    EXPECT_EQ(t.labels(), (Labels{"a", "b"}));
    expect_amplitudes(t, {0, 0, 1, 0});
    EXPECT_THROW(tensor(Ket::qubit("a", 1, 0), Ket::qubit("a", 1, 0)), InvalidInput);
}

TEST(Ket, ReorderMovesBits) {
    const Ket k = Ket::basis({"a", "b", "c"}, "110");
    const Ket r = k.reordered({"c", "a", "b"});
    EXPECT_EQ(r.amplitude("011"), cplx(1.0));
    EXPECT_THROW(k.reordered({"a", "b"}), InvalidInput);
    EXPECT_THROW(k.reordered({"a", "b", "x"}), InvalidInput);
}

TEST(Ket, ReorderRoundTripProperty) {
    std::mt19937_64 rng(7);
    const Labels labels{"a", "b", "c", "d"};
    Labels perm = labels;
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const Ket k = random_ket(rng, labels);
        const Ket back = k.reordered(perm).reordered(labels);
        for (std::size_t i = 0; i < k.dimension(); ++i) {
            EXPECT_EQ(back.amplitude(i), k.amplitude(i));
        }
        EXPECT_NEAR(std::abs(inner(k, k.reordered(perm)) - 1.0), 0.0, kTol);
    }
}

TEST(Apply, CnotFlipsTargetWhenControlSet) {
    const Ket k = Ket::basis({"s", "m"}, "10");
    EXPECT_EQ(apply(cnot("s", "m"), k).amplitude("11"), cplx(1.0));
    EXPECT_EQ(apply(cnot("s", "m"), Ket::basis({"s", "m"}, "01")).amplitude("01"), cplx(1.0));
    // Control and target given in the opposite order of the register.
    EXPECT_EQ(apply(cnot("m", "s"), Ket::basis({"s", "m"}, "01")).amplitude("11"), cplx(1.0));
    EXPECT_THROW(cnot("s", "s"), InvalidInput);
    EXPECT_THROW(apply(cnot("s", "x"), k), InvalidInput);
}

TEST(Apply, SubsetOperatorOnLargerRegister) {
    // X on the middle qubit of |000>.
    Eigen::MatrixXcd x(2, 2);
    x << 0, 1, 1, 0;
    const Ket out = apply(Operator({"b"}, x), Ket::basis({"a", "b", "c"}, "000"));
    EXPECT_EQ(out.amplitude("010"), cplx(1.0));
}

TEST(Apply, PreservesNormUnderUnitariesProperty) {
    std::mt19937_64 rng(11);
    const Labels labels{"a", "b", "c"};
    for (int trial = 0; trial < 25; ++trial) {
        Ket k = random_ket(rng, labels);
        const Ket start = k;
        for (int g = 0; g < 6; ++g) {
            std::vector<Label> l = labels;
            std::shuffle(l.begin(), l.end(), rng);
            k = apply(cnot(l[0], l[1]), k);
        }
        EXPECT_NEAR(k.norm_squared(), 1.0, kTol);
        // CNOT is an involution.
        EXPECT_NEAR(std::abs(inner(apply(cnot("a", "b"), apply(cnot("a", "b"), start)), start)), 1.0, kTol);
    }
}

TEST(Inner, ConjugatesLeftArgumentAndAlignsLabels) {
    const Ket a = Ket::qubit("q", 1.0, 0.0);
    const Ket b = Ket::qubit("q", cplx(0.0, 1.0), 0.0);
    EXPECT_EQ(inner(b, a), cplx(0.0, -1.0));
    const Ket ab = Ket::basis({"x", "y"}, "01");
    const Ket ba = Ket::basis({"y", "x"}, "10");
    EXPECT_EQ(inner(ab, ba), cplx(1.0));
    EXPECT_THROW(inner(ab, a), InvalidInput);
}

TEST(Operator, ProjectorsAndIdentity) {
    const Operator p = projector("01", {"a", "b"});
    EXPECT_TRUE(p.is_projector());
    EXPECT_TRUE(Operator::identity({"a", "b"}).is_unitary());
    EXPECT_FALSE(p.is_unitary());
    EXPECT_TRUE(cnot("a", "b").is_unitary());
    Operator sum = projector("00", {"a", "b"}) + projector("01", {"a", "b"}) + projector("10", {"a", "b"}) +
                   projector("11", {"b", "a"});
    EXPECT_TRUE(sum.approx_equal(Operator::identity({"a", "b"})));
    EXPECT_THROW(projector("012", {"a", "b", "c"}), InvalidInput);
    EXPECT_THROW(Operator({"a"}, Eigen::MatrixXcd::Identity(4, 4)), InvalidInput);
}

TEST(Operator, ReorderedMatchesRelabeledAction) {
    const Operator c = cnot("a", "b");
    const Operator r = c.reordered({"b", "a"});
    const Ket k = Ket::basis({"b", "a"}, "01");  // a = 1
    EXPECT_EQ(apply(r, k).amplitude("11"), cplx(1.0));
    EXPECT_TRUE(c.adjoint().approx_equal(c));
}

TEST(Bits, RoundTrip) {
    EXPECT_EQ(to_bits(5, 4), "0101");
    EXPECT_EQ(from_bits("0101"), 5U);
    for (std::size_t i = 0; i < 64; ++i) EXPECT_EQ(from_bits(to_bits(i, 6)), i);
    EXPECT_THROW(from_bits("01x"), InvalidInput);
}
