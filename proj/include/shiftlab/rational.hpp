/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace shiftlab {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always reduced, denominator > 0.
///
/// Every density, mismatch frequency and mean-cycle value in the library is an
/// ExactRational so the library's inequalities can be checked with tolerance zero.
class ExactRational {
public:
    ExactRational() : value_(0) {}
    ExactRational(long long n) : value_(n) {}                    // NOLINT(google-explicit-constructor)
    ExactRational(const BigInt& num, const BigInt& den);
    ExactRational(long long num, long long den);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    ExactRational operator+(const ExactRational& o) const { return ExactRational(value_ + o.value_); }
    ExactRational operator-(const ExactRational& o) const { return ExactRational(value_ - o.value_); }
    ExactRational operator*(const ExactRational& o) const { return ExactRational(value_ * o.value_); }
    ExactRational operator/(const ExactRational& o) const;
    ExactRational operator-() const { return ExactRational(-value_); }
    ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }

    bool operator==(const ExactRational& o) const { return value_ == o.value_; }
    bool operator!=(const ExactRational& o) const { return value_ != o.value_; }
    bool operator<(const ExactRational& o) const { return value_ < o.value_; }
    bool operator<=(const ExactRational& o) const { return value_ <= o.value_; }
    bool operator>(const ExactRational& o) const { return value_ > o.value_; }
    bool operator>=(const ExactRational& o) const { return value_ >= o.value_; }

    bool is_zero() const { return value_.is_zero(); }

    /// Nearest double; safe for numerators/denominators far beyond double range.
    double to_double() const;

    /// Canonical "p/q" form ("p" alone when q == 1).
    std::string to_string() const;

    /// Parses "p/q" or "p". Throws ValidationError on malformed input or q == 0.
    static ExactRational from_string(const std::string& s);

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit ExactRational(Rep v) : value_(std::move(v)) {}
    Rep value_;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

} // namespace shiftlab
