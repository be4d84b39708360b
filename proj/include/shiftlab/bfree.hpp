/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "shiftlab/graph.hpp"
#include "shiftlab/rational.hpp"
#include "shiftlab/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shiftlab {

/// A set B of forbidden divisors: either an explicit finite list or one of
/// the built-in strictly increasing generator streams.
class BSet {
public:
    enum class Kind { ExplicitList, PrimeSquares, ArithmeticProgression };

    static BSet explicit_list(std::vector<std::uint64_t> generators);
    static BSet prime_squares();
    /// first, first + step, first + 2 step, ...
    static BSet arithmetic(std::uint64_t first, std::uint64_t step);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::ExplicitList; }
    bool is_empty() const { return kind_ == Kind::ExplicitList && gens_.empty(); }

    /// Generators of the finite list; throws for streams.
    const std::vector<std::uint64_t>& generators() const;

    /// All generators <= n, materialized in increasing order.
    std::vector<std::uint64_t> generators_up_to(std::uint64_t n) const;

    std::string describe() const;

private:
    BSet() = default;
    Kind kind_ = Kind::ExplicitList;
    std::vector<std::uint64_t> gens_;
    std::uint64_t ap_first_ = 0, ap_step_ = 0;
};

/// Characteristic word of the B-free integers on [0, N): bit i is '1' iff no
/// generator divides i. Bit 0 is '0' whenever B is nonempty.
Word bfree_indicator(const BSet& b, std::uint64_t n);

/// Exact natural density of the union of the multiple sets, by
/// inclusion-exclusion over generator subsets. Caps: at most 24 generators,
/// every subset lcm <= 2^63.
ExactRational density_union(const BSet& b);

struct BClassification {
    bool primitive = false;
    bool taut = false;
};

/// primitive: no generator divides another; taut: removing any generator
/// strictly drops the union density (exact comparison).
BClassification bset_classify(const BSet& b);

/// One row of the Davenport–Erdős table.
struct DeRow {
    std::uint64_t k = 0;
    ExactRational deficiency;  // |(F_{B|k} \ F_B) ∩ [0,N)| / N
    ExactRational tail_bound;  // sum of 1/b over b in B, b_k < b <= N
    ExactRational boundary;    // k / N
};

DeRow de_deficiency(const BSet& b, std::uint64_t k, std::uint64_t n);

/// All rows k_lo..k_hi from a single sieve pass.
std::vector<DeRow> de_table(const BSet& b, std::uint64_t k_lo, std::uint64_t k_hi,
                            std::uint64_t n);

/// Sofic presentation of the hereditary closure of the orbit of a purely
/// periodic 0/1 point: a cycle of 0-labelled edges with a parallel 1-labelled
/// edge wherever the point carries a 1.
LabeledGraph hereditary_orbit_graph(const PeriodicPoint& x);

template <typename T>
struct DominanceProjection {
    T projected;
    std::uint64_t changed = 0;              // positions where the input was zeroed
    std::uint64_t deficiency_positions = 0; // positions where eta_{B|k} and eta_B differ
};

/// Pushes x, dominated by the shifted truncated indicator, down to a word
/// dominated by the shifted full indicator: y_i = x_i where the indicators
/// agree, 0 otherwise.
DominanceProjection<Word> dominance_projection(const Word& x, const BSet& b, std::uint64_t k,
                                               std::uint64_t m);

/// Periodic-point variant; requires finite B so the full indicator is
/// periodic and the projection stays exactly periodic.
DominanceProjection<PeriodicPoint> dominance_projection(const PeriodicPoint& x, const BSet& b,
                                                        std::uint64_t k, std::uint64_t m);

} // namespace shiftlab
