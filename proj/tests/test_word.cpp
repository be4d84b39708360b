/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/word.hpp"

#include "shiftlab/corpus.hpp"
#include "shiftlab/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>

using namespace shiftlab;

namespace {

const Alphabet& bin() { return Alphabet::binary(); }

PeriodicPoint random_point(SeededRng& rng, std::size_t max_pre, std::size_t max_per) {
    std::string pre, per;
    auto pre_len = rng.below(max_pre + 1);
    auto per_len = rng.between(1, max_per);
    for (std::uint64_t i = 0; i < pre_len; ++i) pre.push_back(rng.below(2) ? '1' : '0');
    for (std::uint64_t i = 0; i < per_len; ++i) per.push_back(rng.below(2) ? '1' : '0');
    return {bin(), pre, per};
}

} // namespace

TEST_CASE("alphabet invariants") {
    CHECK_THROWS_AS(Alphabet("0"), ValidationError);
    CHECK_THROWS_AS(Alphabet("010"), ValidationError);
    Alphabet abc("abc");
    CHECK(abc.index('b') == 1);
    CHECK(abc.index('z') == -1);
    CHECK_THROWS_AS(Word(abc, "abz"), ValidationError);
}

TEST_CASE("hamming_normalized on the stated examples") {
    CHECK(hamming_normalized("0101", "0101") == ExactRational(0));
    CHECK(hamming_normalized("0101", "1010") == ExactRational(1));

    const std::string u = "10101010100000", w = "01010101010101";
    long long count = 0; // independent position count
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != w[i]) ++count;
    CHECK(hamming_normalized(u, w) == ExactRational(count, 14));
    CHECK(hamming_normalized(u, w) == ExactRational(6, 7));

    CHECK_THROWS_AS(hamming_normalized("01", "011"), ValidationError);
    CHECK_THROWS_AS(hamming_normalized("", ""), ValidationError);
    CHECK_THROWS_AS(hamming_normalized(Word(bin(), "01"), Word(Alphabet("ab"), "ab")),
                    ValidationError);
}

TEST_CASE("normalized hamming times length is an integral count in [0, n]") {
    SeededRng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto n = rng.between(1, 30);
        std::string u, w;
        for (std::uint64_t j = 0; j < n; ++j) {
            u.push_back(rng.below(2) ? '1' : '0');
            w.push_back(rng.below(2) ? '1' : '0');
        }
        ExactRational d = hamming_normalized(u, w);
        CHECK(d >= ExactRational(0));
        CHECK(d <= ExactRational(1));
        ExactRational scaled = d * ExactRational(static_cast<long long>(n));
        CHECK(scaled.denominator() == 1);
    }
}

TEST_CASE("periodic point canonical form") {
    // Period is reduced to its primitive root.
    CHECK(PeriodicPoint(bin(), "", "0101") == PeriodicPoint(bin(), "", "01"));
    // A preperiod that merely repeats the tail is absorbed.
    CHECK(PeriodicPoint(bin(), "10", "10") == PeriodicPoint(bin(), "", "10"));
    CHECK(PeriodicPoint(bin(), "110", "10") == PeriodicPoint(bin(), "1", "10"));
    CHECK(PeriodicPoint(bin(), "1", "10") != PeriodicPoint(bin(), "", "10"));
    CHECK_THROWS_AS(PeriodicPoint(bin(), "0", ""), ValidationError);

    // Same infinite sequence => same canonical form.
    PeriodicPoint a(bin(), "0110", "110110");
    PeriodicPoint b(bin(), "0", "110");
    for (std::uint64_t i = 0; i < 40; ++i) CHECK(a.at(i) == b.at(i));
    CHECK(a == b);
}

TEST_CASE("point text syntax") {
    PeriodicPoint p = PeriodicPoint::parse("10(100)^inf", bin());
    CHECK(p == PeriodicPoint(bin(), "10", "100"));
    CHECK(PeriodicPoint::parse(p.to_string(), bin()) == p);

    // Grouped repetitions, as used for the y^(k) witnesses.
    CHECK(PeriodicPoint::parse("((10)^2 0^3)^inf", bin()) == y_k_point(1));
    CHECK(PeriodicPoint::parse("((10)(10)0 0 0)^inf", bin()) == y_k_point(1));

    // Round trip on random points.
    SeededRng rng(61);
    for (int i = 0; i < 100; ++i) {
        PeriodicPoint q = random_point(rng, 4, 6);
        CHECK(PeriodicPoint::parse(q.to_string(), bin()) == q);
    }

    CHECK_THROWS_AS(PeriodicPoint::parse("0101", bin()), ValidationError);
    CHECK_THROWS_AS(PeriodicPoint::parse("(01)^inf junk", bin()), ValidationError);
    CHECK_THROWS_AS(PeriodicPoint::parse("(0x1)^inf", bin()), ValidationError);
    CHECK_THROWS_AS(PeriodicPoint::parse("((01)^inf", bin()), ValidationError);
    CHECK_THROWS_AS(PeriodicPoint::parse("()^inf", bin()), ValidationError);
}

TEST_CASE("subword reads the infinite sequence") {
    PeriodicPoint y1 = y_k_point(1); // (1010000)^inf
    CHECK(subword(y1, 0, 7).text == "1010000");
    CHECK(subword(y1, 7, 14).text == "1010000");
    CHECK(subword(y1, 5, 9).text == "0010");
    CHECK_THROWS_AS(subword(y1, 3, 3), ValidationError);

    // One extra check of the occurrence count used in the acceptance suite:
    // k = 1, j = 1 gives 2 j (k+1) = 4 ones in the first 14 symbols.
    Word w = subword(y1, 0, 14);
    CHECK(std::count(w.text.begin(), w.text.end(), '1') == 4);
}

TEST_CASE("mismatch_density on the stated examples") {
    PeriodicPoint p01(bin(), "", "01"), p10(bin(), "", "10"), zeros(bin(), "", "0");
    CHECK(mismatch_density(p01, p01) == ExactRational(0));
    CHECK(mismatch_density(p01, p10) == ExactRational(1));
    CHECK(mismatch_density(y_k_point(1), zeros) == ExactRational(2, 7));
}

TEST_CASE("mismatch_density is a shift-invariant pseudometric on eventually periodic points") {
    SeededRng rng(23);
    for (int i = 0; i < 150; ++i) {
        PeriodicPoint a = random_point(rng, 3, 6);
        PeriodicPoint b = random_point(rng, 3, 6);
        PeriodicPoint c = random_point(rng, 3, 6);
        ExactRational ab = mismatch_density(a, b);
        CHECK(ab == mismatch_density(b, a));
        CHECK(mismatch_density(a, a) == ExactRational(0));
        CHECK(mismatch_density(a, c) <= ab + mismatch_density(b, c));
        CHECK(mismatch_density(a.shifted(), b.shifted()) == ab);
    }
}

TEST_CASE("liminf-style densities can violate the triangle inequality (finite-horizon demo)") {
    // On eventually periodic points the liminf and limsup densities agree, so
    // any violation needs aperiodic data. Hand-built prefixes with
    // geometrically growing alternating blocks give one at finite horizons:
    // the density proxy is the minimum prefix-average mismatch count.
    std::string x, y, z;
    std::size_t block = 4;
    while (y.size() < 400) {
        y.append(block, '0');
        y.append(2 * block, '1');
        block *= 4;
    }
    x.assign(y.size(), '0');
    z.assign(y.size(), '1');

    auto proxy = [](const std::string& a, const std::string& b) {
        ExactRational best(1);
        long long mism = 0;
        for (std::size_t n = 1; n <= a.size(); ++n) {
            if (a[n - 1] != b[n - 1]) ++mism;
            ExactRational r(mism, static_cast<long long>(n));
            if (r < best) best = r;
        }
        return best;
    };
    ExactRational xy = proxy(x, y), yz = proxy(y, z), xz = proxy(x, z);
    CHECK(xz == ExactRational(1));
    CHECK(xy + yz < xz);
}
