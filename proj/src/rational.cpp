/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/rational.hpp"

#include "shiftlab/errors.hpp"

#include <cmath>

namespace shiftlab {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw ValidationError("ExactRational: zero denominator");
    // Division canonicalizes (reduced form, positive denominator); the
    // two-argument cpp_rational constructor would require that already.
    value_ = Rep(num);
    value_ /= Rep(den);
}

ExactRational::ExactRational(long long num, long long den)
    : ExactRational(BigInt(num), BigInt(den)) {}

ExactRational ExactRational::operator/(const ExactRational& o) const {
    if (o.value_.is_zero()) throw ValidationError("ExactRational: division by zero");
    return ExactRational(Rep(value_ / o.value_));
}

double ExactRational::to_double() const {
    // cpp_rational -> double conversion in boost handles scaling internally.
    return value_.convert_to<double>();
}

std::string ExactRational::to_string() const {
    const BigInt n = numerator();
    const BigInt d = denominator();
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

ExactRational ExactRational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return ExactRational(BigInt(s), BigInt(1));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return ExactRational(num, den);
    } catch (const std::exception&) {
        throw ValidationError("ExactRational: cannot parse '" + s + "'");
    }
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

} // namespace shiftlab
