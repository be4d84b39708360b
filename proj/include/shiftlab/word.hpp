/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "shiftlab/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace shiftlab {

/// Ordered finite alphabet of single-character symbols (2..255 of them).
/// Symbol indices are stable: index(symbol(i)) == i.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(const std::string& symbols);

    static const Alphabet& binary();

    std::size_t size() const { return symbols_.size(); }
    char symbol(std::size_t i) const { return symbols_[i]; }
    const std::string& symbols() const { return symbols_; }
    bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
    /// Index of a symbol, or -1 when it is not in the alphabet.
    int index(char c) const { return index_[static_cast<unsigned char>(c)]; }

    /// Throws ValidationError if any character of `w` is outside the alphabet.
    void validate_word(const std::string& w) const;

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }
    bool operator!=(const Alphabet& o) const { return symbols_ != o.symbols_; }

private:
    std::string symbols_;
    std::array<int, 256> index_{};
};

/// A finite word over an explicit alphabet. The empty word is allowed.
struct Word {
    Alphabet alphabet;
    std::string text;

    Word() = default;
    Word(Alphabet a, std::string t);

    std::size_t length() const { return text.size(); }
    bool operator==(const Word& o) const { return alphabet == o.alphabet && text == o.text; }
};

/// Eventually periodic one-sided infinite sequence, preperiod + period^inf.
///
/// Canonical form: the period is primitive (not a proper power of a shorter
/// word) and the preperiod is minimal (its last symbol breaks periodicity),
/// so equality of values is structural equality.
class PeriodicPoint {
public:
    PeriodicPoint(Alphabet a, std::string preperiod, std::string period);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& preperiod() const { return preperiod_; }
    const std::string& period() const { return period_; }

    char at(std::uint64_t i) const;

    /// One application of the shift map (drop the first symbol).
    PeriodicPoint shifted() const;

    bool operator==(const PeriodicPoint& o) const;
    bool operator!=(const PeriodicPoint& o) const { return !(*this == o); }

    /// Text form `preperiod(period)^inf`, e.g. "10(100)^inf".
    std::string to_string() const;

    /// Parses the text syntax. Groups with repetition are accepted,
    /// e.g. "((10)^2 0^3)^inf"; whitespace is ignored.
    static PeriodicPoint parse(const std::string& s, const Alphabet& a);

private:
    Alphabet alphabet_;
    std::string preperiod_;
    std::string period_;
};

/// Normalized Hamming distance between equal-length nonempty words.
ExactRational hamming_normalized(const Word& u, const Word& w);
ExactRational hamming_normalized(const std::string& u, const std::string& w);

/// Exact asymptotic mismatch density of two eventually periodic points.
/// For such pairs the Cesàro limit exists, so this single value is both the
/// limsup and the liminf density.
ExactRational mismatch_density(const PeriodicPoint& p, const PeriodicPoint& q);

/// Symbols at positions [i, j) of the infinite sequence. Requires i < j.
Word subword(const PeriodicPoint& p, std::uint64_t i, std::uint64_t j);

} // namespace shiftlab
