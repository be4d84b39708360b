/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "shiftlab/graph.hpp"
#include "shiftlab/rational.hpp"
#include "shiftlab/word.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace shiftlab {

/// Allowed 0-run lengths between consecutive 1s. A finite working set,
/// optionally marked as the prefix of an infinite stream with a declared
/// bound on successive gap differences.
struct SGapSet {
    std::vector<std::uint64_t> gaps;
    bool is_stream = false;
    std::optional<std::uint64_t> declared_diff_bound;

    explicit SGapSet(std::vector<std::uint64_t> gap_list, bool allow_zero_gap = false);

    /// The k smallest gaps (all of them when k >= size).
    SGapSet truncated(std::size_t k) const;
};

/// Presentation with vertices v_0..v_max: v_i -> v_{i+1} labelled 0, and
/// v_i -> v_0 labelled 1 for i in S. An SFT for finite S.
LabeledGraph sgap_graph(const SGapSet& s);

struct SGapClassification {
    bool mixing = false;
    bool specification = false;
};

/// mixing iff gcd{n+1 : n in S} = 1; a mixing S-gap shift has specification
/// iff successive gaps have bounded differences (automatic for finite S,
/// taken from the declared bound for streams).
SGapClassification sgap_classify(const SGapSet& s);

/// Smallest L such that every integer >= L is a nonnegative combination of
/// `parts` (which must have gcd 1); coin-problem dynamic programming.
std::uint64_t frobenius_L(const std::vector<std::uint64_t>& parts);

struct GapSurgery {
    std::uint64_t gap = 0;
    bool replaced = false;
    ExactRational realized;    // d_Ham(0^gap, v)
    ExactRational formula_bound; // 1/(s_M+1) + (L+s_M)/gap
};

struct InnerApproxResult {
    PeriodicPoint point;       // in X_{S[k]}, one period per input gap
    ExactRational sup_realized;
    std::vector<GapSurgery> per_gap;
    std::uint64_t s_max = 0;   // s_M = max S[k]
    std::uint64_t frobenius = 0;
};

/// Replaces every gap outside the truncation S[k] by a legal gap pattern of
/// the same length, as in the inner-approximation surgery; reports the exact
/// realized per-gap Hamming distances and the formula bounds they satisfy.
InnerApproxResult inner_approx_point(const std::vector<std::uint64_t>& gap_cycle, const SGapSet& s,
                                     std::size_t k);

} // namespace shiftlab
