/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/graph.hpp"

#include "oracles.hpp"
#include "shiftlab/corpus.hpp"
#include "shiftlab/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

using namespace shiftlab;
using oracles::filter_language;

namespace {

bool adjacency_primitive(const LabeledGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count);
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0)), p;
    for (const auto& e : g.edges) a[static_cast<std::size_t>(e.src)][static_cast<std::size_t>(e.dst)] = 1;
    p = a;
    const std::size_t bound = (n - 1) * (n - 1) + 1;
    for (std::size_t k = 1; k <= bound; ++k) {
        bool all = true;
        for (const auto& row : p)
            for (char c : row)
                if (!c) all = false;
        if (all) return true;
        std::vector<std::vector<char>> q(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (p[i][j])
                    for (std::size_t l = 0; l < n; ++l)
                        if (a[j][l]) q[i][l] = 1;
        p = std::move(q);
    }
    return false;
}

// Word-level specification constant by direct search over word pairs up to
// the given length, bridging with every candidate word of length k.
long long brute_spec_constant(const LabeledGraph& g, std::size_t max_word_len, long long k_max) {
    std::vector<std::string> words;
    for (std::size_t n = 0; n <= max_word_len; ++n)
        for (const auto& w : language_n(g, n)) words.push_back(w);
    for (long long k = 0; k <= k_max; ++k) {
        std::vector<std::string> all_v;
        {
            // all words of length k over the alphabet, legal or not
            std::vector<std::string> level{""};
            for (long long d = 0; d < k; ++d) {
                std::vector<std::string> next;
                for (const auto& w : level)
                    for (std::size_t i = 0; i < g.alphabet.size(); ++i)
                        next.push_back(w + g.alphabet.symbol(i));
                level = std::move(next);
            }
            all_v = level;
        }
        bool ok = true;
        for (const auto& u : words) {
            for (const auto& w : words) {
                bool bridged = false;
                for (const auto& v : all_v)
                    if (word_in_language(g, u + v + w)) { bridged = true; break; }
                if (!bridged) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) return k;
    }
    return -1;
}

} // namespace

TEST_CASE("build_sft_graph on the stated examples") {
    LabeledGraph gm = golden_mean_graph();
    CHECK(gm.vertex_count == 2);
    CHECK(gm.edges.size() == 3);

    LabeledGraph full = build_sft_graph(SftSpec(Alphabet::binary(), {}));
    CHECK(full.vertex_count == 1);
    CHECK(full.edges.size() == 2);

    CHECK_THROWS_AS(build_sft_graph(SftSpec(Alphabet::binary(), {"0", "1"})), EmptyShiftError);
    CHECK_THROWS_AS(SftSpec(Alphabet::binary(), {""}), ValidationError);
}

TEST_CASE("language_n on the stated examples") {
    CHECK(language_n(full_shift_graph(), 2) ==
          std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(language_n(golden_mean_graph(), 2) == std::vector<std::string>{"00", "01", "10"});
    CHECK(language_n(golden_mean_graph(), 5).size() == 13);
    CHECK(language_n(golden_mean_graph(), 0) == std::vector<std::string>{""});
}

TEST_CASE("graph language equals the brute-force forbidden-factor filter") {
    struct Corpus {
        Alphabet alphabet;
        std::vector<std::string> forbidden;
    };
    std::vector<Corpus> corpus = {
        {Alphabet::binary(), {"11"}},
        {Alphabet::binary(), {"000"}},
        {Alphabet::binary(), {"010"}},
        {Alphabet::binary(), {"00", "11"}},
        {Alphabet::binary(), {"11", "1001"}},
        {Alphabet("abc"), {"aa", "bc"}},
    };
    for (const auto& c : corpus) {
        LabeledGraph g = build_sft_graph(SftSpec(c.alphabet, c.forbidden));
        for (std::size_t n = 1; n <= 8; ++n)
            CHECK(language_n(g, n) == filter_language(c.alphabet, c.forbidden, n));
    }
}

TEST_CASE("language_count agrees with enumeration and the Fibonacci law") {
    LabeledGraph gm = golden_mean_graph();
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(language_count(gm, n) == BigInt(language_n(gm, n).size()));
    // |L_n| of the golden mean follows the Fibonacci recurrence.
    BigInt a = language_count(gm, 1), b = language_count(gm, 2);
    for (std::size_t n = 3; n <= 25; ++n) {
        BigInt c = language_count(gm, n);
        CHECK(c == a + b);
        a = b;
        b = c;
    }
}

TEST_CASE("determinize_trim produces a right-resolving presentation of the same shift") {
    // Parallel duplicate labels make this even-shift presentation
    // nondeterministic; determinization must not change the language.
    LabeledGraph nondet;
    nondet.alphabet = Alphabet::binary();
    nondet.vertex_count = 2;
    nondet.edges = {{0, 0, '0'}, {0, 1, '1'}, {0, 1, '1'}, {1, 0, '1'}};
    CHECK(!is_right_resolving(nondet));

    LabeledGraph det = determinize_trim(nondet);
    CHECK(is_right_resolving(det));
    CHECK(is_trim(det));
    for (std::size_t n = 1; n <= 10; ++n) CHECK(language_n(det, n) == language_n(nondet, n));

    // The stated L_4 check for the even shift: interior 1-runs have even length.
    auto l4 = language_n(det, 4);
    for (const std::string& w : {"0000", "0011", "0110", "1100", "1001", "1111"})
        CHECK(std::binary_search(l4.begin(), l4.end(), w));
    for (const std::string& w : {"0100", "0101", "1010", "0010"})
        CHECK(!std::binary_search(l4.begin(), l4.end(), w));

    // Determinizing an already right-resolving graph keeps the language.
    LabeledGraph gm = golden_mean_graph();
    LabeledGraph gm_det = determinize_trim(gm);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(language_n(gm_det, n) == language_n(gm, n));
}

TEST_CASE("classification of the stated examples") {
    auto full = classify_graph(full_shift_graph());
    CHECK(full.is_transitive);
    CHECK(full.period == 1);
    CHECK(full.is_mixing);

    // S = {1} gap graph is a bare 2-cycle.
    LabeledGraph two_cycle;
    two_cycle.alphabet = Alphabet::binary();
    two_cycle.vertex_count = 2;
    two_cycle.edges = {{0, 1, '0'}, {1, 0, '1'}};
    auto c2 = classify_graph(two_cycle);
    CHECK(c2.is_transitive);
    CHECK(c2.period == 2);
    CHECK(!c2.is_mixing);

    auto parity = classify_graph(parity_shift_graph());
    CHECK(parity.is_transitive);
    CHECK(!parity.is_mixing);

    CHECK(classify_graph(golden_mean_graph()).is_mixing);
    CHECK(classify_graph(even_shift_graph()).is_mixing);
    CHECK_THROWS_AS(classify_graph(LabeledGraph{}), ValidationError);
}

TEST_CASE("mixing coincides with primitivity of the adjacency matrix") {
    std::vector<LabeledGraph> graphs = {golden_mean_graph(), even_shift_graph(),
                                        parity_shift_graph(), full_shift_graph()};
    SeededRng rng(5);
    while (graphs.size() < 24) {
        LabeledGraph g;
        g.alphabet = Alphabet::binary();
        g.vertex_count = static_cast<int>(rng.between(2, 6));
        auto edges = rng.between(static_cast<std::uint64_t>(g.vertex_count),
                                 static_cast<std::uint64_t>(2 * g.vertex_count));
        for (std::uint64_t i = 0; i < edges; ++i)
            g.edges.push_back({static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count))),
                               static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count))),
                               rng.below(2) ? '1' : '0'});
        g = trim(g);
        if (g.vertex_count == 0) continue;
        graphs.push_back(g);
    }
    for (const auto& g : graphs) {
        auto c = classify_graph(g);
        if (c.is_transitive && g.vertex_count <= 12)
            CHECK(c.is_mixing == adjacency_primitive(g));
    }
}

TEST_CASE("specification constants, exact and against the word-pair oracle") {
    CHECK(specification_constant(full_shift_graph(), 8) == 0);
    CHECK(specification_constant(golden_mean_graph(), 8) == 1);
    // No single symbol bridges u = "01" into w = "10" in the even shift
    // ("01010" and "01110" both have an odd interior run), so k = 2.
    CHECK(specification_constant(even_shift_graph(), 8) == 2);

    CHECK(brute_spec_constant(golden_mean_graph(), 4, 4) == 1);
    CHECK(brute_spec_constant(even_shift_graph(), 4, 4) == 2);
    CHECK(brute_spec_constant(full_shift_graph(), 4, 4) == 0);

    LabeledGraph two_cycle;
    two_cycle.alphabet = Alphabet::binary();
    two_cycle.vertex_count = 2;
    two_cycle.edges = {{0, 1, '0'}, {1, 0, '1'}};
    CHECK_THROWS_AS(specification_constant(two_cycle, 8), ValidationError);
}

TEST_CASE("topological entropy on the stated examples") {
    CHECK(topological_entropy(full_shift_graph()) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(topological_entropy(golden_mean_graph()) ==
          doctest::Approx(std::log(phi)).epsilon(1e-9));

    // S = {1,2}: entropy is the log of the largest root of x^3 = x + 1.
    LabeledGraph s12;
    s12.alphabet = Alphabet::binary();
    s12.vertex_count = 3;
    s12.edges = {{0, 1, '0'}, {1, 2, '0'}, {1, 0, '1'}, {2, 0, '1'}};
    double lambda = std::exp(topological_entropy(s12));
    CHECK(std::abs(lambda * lambda * lambda - lambda - 1.0) < 1e-9);

    // Cross-check against the language growth rate.
    double h = topological_entropy(s12);
    double est = std::log(language_count(s12, 25).convert_to<double>()) / 25.0;
    CHECK(std::abs(h - est) < 0.05);

    // Entropy is monotone under language inclusion.
    CHECK(topological_entropy(golden_mean_graph()) < topological_entropy(full_shift_graph()));
    CHECK(topological_entropy(s12) <= std::log(2.0));
}

TEST_CASE("trim removes stranded vertices repeatedly") {
    LabeledGraph g;
    g.alphabet = Alphabet::binary();
    g.vertex_count = 4;
    // 0 <-> 1 is the live core; 2 feeds in only, 3 drains out only.
    g.edges = {{0, 1, '0'}, {1, 0, '1'}, {2, 0, '0'}, {1, 3, '0'}};
    LabeledGraph t = trim(g);
    CHECK(t.vertex_count == 2);
    CHECK(t.edges.size() == 2);
    CHECK(is_trim(t));
}
