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

#include <gtest/gtest.h>

#include "jwm/errors.hpp"
#include "jwm/network_io.hpp"

using namespace jwm;

namespace {

std::string error_of(std::string_view text) {
    try {
        parse_network_text(text, "t.net");
    } catch (const InvalidInput &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(ParseReal, DecimalsAndFractions) {
    EXPECT_DOUBLE_EQ(parse_real("0.25"), 0.25);
    EXPECT_DOUBLE_EQ(parse_real("1/3"), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(parse_real("-22.5"), -22.5);
    EXPECT_DOUBLE_EQ(parse_real("1e-5"), 1e-5);
    EXPECT_THROW(parse_real("abc"), InvalidInput);
    EXPECT_THROW(parse_real("1/0"), InvalidInput);
    EXPECT_THROW(parse_real("1/"), InvalidInput);
    EXPECT_THROW(parse_real("0.5x"), InvalidInput);
    EXPECT_THROW(parse_real(""), InvalidInput);
}

TEST(ParseNetwork, DefaultNetwork) {
    const ModeNetwork net = default_network();
    EXPECT_EQ(net.ports().size(), 9U);
    EXPECT_EQ(net.inputs(), (std::vector<std::string>{"A", "B", "C"}));
    EXPECT_EQ(net.outputs(), (std::vector<std::string>{"C", "c2", "c3"}));
    EXPECT_EQ(net.elements().size(), 14U);
    EXPECT_EQ(net.modes().size(), 18U);
}

TEST(ParseNetwork, FormatRoundTripPreservesTransferMatrix) {
    const ModeNetwork net = default_network();
    const ModeNetwork again = parse_network_text(format_network(net));
    EXPECT_EQ(again.ports(), net.ports());
    EXPECT_EQ(again.outputs(), net.outputs());
    EXPECT_LT((again.transfer_matrix() - net.transfer_matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ParseNetwork, AllElementKindsAndComments) {
    const ModeNetwork net = parse_network_text(
        "jwm-network 1\n"
        "# comment\n"
        "ports a b   # trailing\n"
        "inputs a\n"
        "outputs b\n"
        "bs 1/2 a b\n"
        "hwp 45 b\n"
        "phase -90 a\n");
    EXPECT_EQ(net.elements().size(), 3U);
    EXPECT_TRUE(std::holds_alternative<PhaseShift>(net.elements()[2]));
    EXPECT_TRUE(net.is_unitary());
}

TEST(ParseNetwork, ErrorsCarryLineNumbers) {
    EXPECT_NE(error_of("ports a\n").find("t.net:1:"), std::string::npos);
    EXPECT_NE(error_of("jwm-network 2\n").find("t.net:1:"), std::string::npos);
    EXPECT_NE(error_of("jwm-network 1\nports a b\nbogus 1\n").find("t.net:3: unknown directive"), std::string::npos);
    EXPECT_NE(error_of("jwm-network 1\nports a b\nbs 1.5 a b\n").find("t.net:3:"), std::string::npos);
    EXPECT_NE(error_of("jwm-network 1\nports a b\nbs 1/2 a\n").find("t.net:3:"), std::string::npos);
    EXPECT_NE(error_of("jwm-network 1\nports a b\nhwp 10 a\ninputs a\n").find("t.net:4:"), std::string::npos);
    EXPECT_NE(error_of("jwm-network 1\nports a\nports b\n").find("t.net:3:"), std::string::npos);
    EXPECT_NE(error_of("jwm-network 1\nports a b\nhwp 10 z\n").find("t.net"), std::string::npos);
    EXPECT_NE(error_of("jwm-network 1\ninputs a\n").find("t.net"), std::string::npos);
    EXPECT_NE(error_of("").find("t.net"), std::string::npos);
}

TEST(LoadNetwork, MissingFileIsInvalidInput) {
    EXPECT_THROW(load_network("/nonexistent/path.net"), InvalidInput);
}

TEST(LoadNetwork, ShippedFileMatchesBuiltIn) {
    const ModeNetwork file = load_network(JWM_DATA_DIR "/networks/uniform.net");
    EXPECT_EQ((file.transfer_matrix() - default_network().transfer_matrix()).cwiseAbs().maxCoeff(), 0.0);
}
