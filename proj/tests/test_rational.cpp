/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/rational.hpp"

#include "shiftlab/corpus.hpp"
#include "shiftlab/errors.hpp"

#include <doctest.h>

using namespace shiftlab;

TEST_CASE("rationals reduce and compare exactly") {
    ExactRational a(2, 4);
    CHECK(a == ExactRational(1, 2));
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    CHECK(ExactRational(-3, -6) == ExactRational(1, 2));
    CHECK(ExactRational(3, -6).numerator() == -1);
    CHECK(ExactRational(3, -6).denominator() == 2);
    CHECK(ExactRational(1, 3) + ExactRational(1, 6) == ExactRational(1, 2));
    CHECK(ExactRational(1, 2) * ExactRational(2, 3) == ExactRational(1, 3));
    CHECK(ExactRational(1, 7) < ExactRational(1, 6));
    CHECK_THROWS_AS(ExactRational(1, 0), ValidationError);
    CHECK_THROWS_AS(ExactRational(1, 2) / ExactRational(0), ValidationError);
}

TEST_CASE("string round trips") {
    CHECK(ExactRational(2, 7).to_string() == "2/7");
    CHECK(ExactRational(-2, 7).to_string() == "-2/7");
    CHECK(ExactRational(5).to_string() == "5");
    CHECK(ExactRational::from_string("2/7") == ExactRational(2, 7));
    CHECK(ExactRational::from_string("-14") == ExactRational(-14));
    CHECK_THROWS_AS(ExactRational::from_string("x/y"), ValidationError);
    CHECK_THROWS_AS(ExactRational::from_string("1/0"), ValidationError);
}

TEST_CASE("field laws on random small fractions") {
    SeededRng rng(7);
    for (int i = 0; i < 300; ++i) {
        auto num = [&] { return static_cast<long long>(rng.between(0, 40)) - 20; };
        auto den = [&] { return static_cast<long long>(rng.between(1, 20)); };
        ExactRational a(num(), den()), b(num(), den()), c(num(), den());
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == ExactRational(0));
    }
}

TEST_CASE("doubles survive huge denominators") {
    // Denominator far beyond double range: value must still convert sanely.
    ExactRational tiny(1, 3);
    ExactRational sum(0);
    BigInt d = 1;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
        BigInt q = 1;
        for (int i = 0; i < 30; ++i) q *= p; // p^30
        sum += ExactRational(BigInt(1), q);
        d *= q;
    }
    CHECK(sum.to_double() > 0.0);
    CHECK(sum.to_double() < 1e-6);
    CHECK(tiny.to_double() == doctest::Approx(1.0 / 3.0));
}
