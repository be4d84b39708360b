/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/word.hpp"

#include "shiftlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace shiftlab {

Alphabet::Alphabet(const std::string& symbols) : symbols_(symbols) {
    if (symbols_.size() < 2 || symbols_.size() > 255)
        throw ValidationError("Alphabet: size must be in [2, 255], got " +
                              std::to_string(symbols_.size()));
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(symbols_[i]);
        if (index_[c] >= 0)
            throw ValidationError(std::string("Alphabet: duplicate symbol '") + symbols_[i] + "'");
        index_[c] = static_cast<int>(i);
    }
}

const Alphabet& Alphabet::binary() {
    static const Alphabet a("01");
    return a;
}

void Alphabet::validate_word(const std::string& w) const {
    for (char c : w)
        if (!contains(c))
            throw ValidationError(std::string("symbol '") + c + "' not in alphabet \"" +
                                  symbols_ + "\"");
}

Word::Word(Alphabet a, std::string t) : alphabet(std::move(a)), text(std::move(t)) {
    alphabet.validate_word(text);
}

namespace {

// Smallest d dividing |w| with w = (w[0..d))^{|w|/d}.
std::size_t primitive_root_length(const std::string& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i)
            if (w[i] != w[i - d]) ok = false;
        if (ok) return d;
    }
    return n;
}

} // namespace

PeriodicPoint::PeriodicPoint(Alphabet a, std::string preperiod, std::string period)
    : alphabet_(std::move(a)), preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw ValidationError("PeriodicPoint: empty period");
    alphabet_.validate_word(preperiod_);
    alphabet_.validate_word(period_);
    period_.resize(primitive_root_length(period_));
    // Absorb trailing preperiod symbols that already obey the periodicity:
    // u·s (w'·s)^inf = u (s·w')^inf. Rotations keep the period primitive.
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
        period_.insert(period_.begin(), period_.back());
        period_.pop_back();
        preperiod_.pop_back();
    }
}

char PeriodicPoint::at(std::uint64_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
}

PeriodicPoint PeriodicPoint::shifted() const {
    if (!preperiod_.empty()) return {alphabet_, preperiod_.substr(1), period_};
    return {alphabet_, "", period_.substr(1) + period_.substr(0, 1)};
}

bool PeriodicPoint::operator==(const PeriodicPoint& o) const {
    return alphabet_ == o.alphabet_ && preperiod_ == o.preperiod_ && period_ == o.period_;
}

std::string PeriodicPoint::to_string() const {
    return preperiod_ + "(" + period_ + ")^inf";
}

namespace {

struct PointParser {
    const std::string& s;
    const Alphabet& alphabet;
    std::size_t pos = 0;
    bool saw_inf = false;
    std::string preperiod, period;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("PeriodicPoint syntax: " + why + " at offset " +
                              std::to_string(pos) + " in \"" + s + "\"");
    }

    std::uint64_t parse_number() {
        skip_ws();
        if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos]))) fail("expected number");
        std::uint64_t n = 0;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
            n = n * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (n > 1'000'000) fail("repetition count too large");
            ++pos;
        }
        return n;
    }

    // A sequence of items up to ')' or end. `top` marks the outermost level,
    // the only place "^inf" is legal (and it must close the input).
    std::string parse_seq(bool top) {
        std::string out;
        for (;;) {
            skip_ws();
            if (pos >= s.size() || s[pos] == ')') return out;
            if (s[pos] == '(') {
                ++pos;
                std::string inner = parse_seq(false);
                skip_ws();
                if (pos >= s.size() || s[pos] != ')') fail("unbalanced '('");
                ++pos;
                skip_ws();
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    skip_ws();
                    if (pos + 3 <= s.size() && s.compare(pos, 3, "inf") == 0) {
                        if (!top) fail("'^inf' allowed only at top level");
                        pos += 3;
                        skip_ws();
                        if (pos != s.size()) fail("trailing input after '^inf'");
                        if (inner.empty()) fail("empty period");
                        saw_inf = true;
                        preperiod = out;
                        period = inner;
                        return out;
                    }
                    std::uint64_t n = parse_number();
                    for (std::uint64_t i = 0; i < n; ++i) out += inner;
                } else {
                    out += inner;
                }
            } else {
                char c = s[pos];
                if (!alphabet.contains(c)) fail(std::string("symbol '") + c + "' not in alphabet");
                ++pos;
                skip_ws();
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    std::uint64_t n = parse_number();
                    out.append(static_cast<std::size_t>(n), c);
                } else {
                    out.push_back(c);
                }
            }
        }
    }
};

} // namespace

PeriodicPoint PeriodicPoint::parse(const std::string& s, const Alphabet& a) {
    PointParser p{s, a, 0, false, "", ""};
    p.parse_seq(true);
    if (!p.saw_inf)
        throw ValidationError("PeriodicPoint syntax: missing '(...)^inf' in \"" + s + "\"");
    return {a, p.preperiod, p.period};
}

ExactRational hamming_normalized(const std::string& u, const std::string& w) {
    if (u.size() != w.size())
        throw ValidationError("hamming_normalized: length mismatch (" + std::to_string(u.size()) +
                              " vs " + std::to_string(w.size()) + ")");
    if (u.empty()) throw ValidationError("hamming_normalized: empty words");
    long long mismatches = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != w[i]) ++mismatches;
    return {mismatches, static_cast<long long>(u.size())};
}

ExactRational hamming_normalized(const Word& u, const Word& w) {
    if (u.alphabet != w.alphabet) throw ValidationError("hamming_normalized: alphabet mismatch");
    return hamming_normalized(u.text, w.text);
}

ExactRational mismatch_density(const PeriodicPoint& p, const PeriodicPoint& q) {
    if (p.alphabet() != q.alphabet()) throw ValidationError("mismatch_density: alphabet mismatch");
    const std::uint64_t start = std::max(p.preperiod().size(), q.preperiod().size());
    const std::uint64_t lp = p.period().size(), lq = q.period().size();
    const std::uint64_t window = std::lcm(lp, lq);
    std::uint64_t mismatches = 0;
    for (std::uint64_t j = start; j < start + window; ++j)
        if (p.at(j) != q.at(j)) ++mismatches;
    return {static_cast<long long>(mismatches), static_cast<long long>(window)};
}

Word subword(const PeriodicPoint& p, std::uint64_t i, std::uint64_t j) {
    if (i >= j)
        throw ValidationError("subword: require i < j, got i=" + std::to_string(i) +
                              ", j=" + std::to_string(j));
    std::string out;
    out.reserve(j - i);
    for (std::uint64_t t = i; t < j; ++t) out.push_back(p.at(t));
    return {p.alphabet(), out};
}

} // namespace shiftlab
