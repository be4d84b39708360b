/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/json_io.hpp"

#include "shiftlab/corpus.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/shiftspec.hpp"

#include <doctest.h>

using namespace shiftlab;

TEST_CASE("graph JSON round trips bit-exactly on canonical form") {
    LabeledGraph g = golden_mean_graph();
    std::string s = graph_to_json(g);
    LabeledGraph back = graph_from_json(s);
    CHECK(back == g);
    CHECK(graph_to_json(back) == s);

    // Edge order in the input does not matter; output is canonical.
    LabeledGraph shuffled = g;
    std::swap(shuffled.edges[0], shuffled.edges[2]);
    CHECK(graph_to_json(shuffled) == s);

    CHECK_THROWS_AS(graph_from_json("{"), ValidationError);
    CHECK_THROWS_AS(graph_from_json(R"({"alphabet":"01","vertices":1,"edges":[[0,1,"0"]]})"),
                    ValidationError);
    CHECK_THROWS_AS(graph_from_json(R"({"alphabet":"01","vertices":1,"edges":[[0,0,"x"]]})"),
                    ValidationError);
}

TEST_CASE("block distribution serialization format") {
    BlockDistribution bd;
    bd.k = 2;
    bd.alphabet = Alphabet::binary();
    bd.probs = {{"10", 0.5}, {"01", 1.0 / 3.0}, {"00", 1.0 / 6.0}};
    std::string s = block_distribution_to_json(bd);
    // Words sorted lexicographically, 15 significant digits.
    CHECK(s == R"({"00":"0.166666666666667","01":"0.333333333333333","10":"0.5"})");
}

TEST_CASE("certificate JSON carries claim, value, witnesses and cross checks") {
    Certificate c;
    c.claim = "test claim";
    c.value = "1/7";
    c.witnesses.emplace_back("point", "(10)^inf");
    c.cross_checks.emplace_back("oracle", "1/7");
    std::string s = certificate_to_json(c);
    CHECK(s.find("\"claim\": \"test claim\"") != std::string::npos);
    CHECK(s.find("\"1/7\"") != std::string::npos);
    CHECK(s.find("\"method\": \"oracle\"") != std::string::npos);
}

TEST_CASE("shift specs compile to the expected presentations") {
    auto sft = ShiftSpec::from_json_text(
        R"({"kind":"sft","alphabet":"01","forbidden":["11"]})", "");
    CHECK(sft.kind() == "sft");
    CHECK(sft.to_graph() == golden_mean_graph());

    auto orbit = ShiftSpec::from_json_text(
        R"({"kind":"hereditary-orbit","point":"(01)^inf"})", "");
    CHECK(orbit.to_graph() == parity_shift_graph());

    auto sg = ShiftSpec::from_json_text(R"({"kind":"sgap","gaps":[1,2]})", "");
    CHECK(sg.to_graph().vertex_count == 3);

    auto bf = ShiftSpec::from_json_text(R"({"kind":"bfree","generators":[2]})", "");
    CHECK(bf.to_graph() == parity_shift_graph()); // eta_{2} = (01)^inf

    auto bfs = ShiftSpec::from_json_text(
        R"({"kind":"bfree","stream":"squares-of-primes","truncation":2})", "");
    CHECK(bfs.to_graph().vertex_count == 36); // lcm(4, 9)

    CHECK_THROWS_AS(ShiftSpec::from_json_text(R"({"kind":"nope"})", ""), ValidationError);
    CHECK_THROWS_AS(ShiftSpec::from_json_text(R"({"kind":"bfree","stream":"squares-of-primes"})",
                                              ""),
                    ValidationError);
}

TEST_CASE("format_double emits shortest round-trip decimals") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    double x = 0.1 + 0.2;
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
}
