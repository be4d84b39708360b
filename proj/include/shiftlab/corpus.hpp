/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "shiftlab/bfree.hpp"
#include "shiftlab/graph.hpp"
#include "shiftlab/word.hpp"

#include <cstdint>
#include <string>

namespace shiftlab {

/// Full shift on {0,1}: one vertex, a loop per symbol.
inline LabeledGraph full_shift_graph() {
    LabeledGraph g;
    g.alphabet = Alphabet::binary();
    g.vertex_count = 1;
    g.edges = {{0, 0, '0'}, {0, 0, '1'}};
    return g;
}

/// Golden mean shift (no "11"), de Bruijn presentation.
inline LabeledGraph golden_mean_graph() {
    return build_sft_graph(SftSpec(Alphabet::binary(), {"11"}));
}

/// Even shift: maximal interior runs of 1s have even length.
inline LabeledGraph even_shift_graph() {
    LabeledGraph g;
    g.alphabet = Alphabet::binary();
    g.vertex_count = 2;
    g.edges = {{0, 0, '0'}, {0, 1, '1'}, {1, 0, '1'}};
    return g;
}

/// Hereditary closure of the orbit of (01)^inf: points vanishing on all even
/// or on all odd coordinates.
inline LabeledGraph parity_shift_graph() {
    return hereditary_orbit_graph(PeriodicPoint(Alphabet::binary(), "", "01"));
}

/// y^(k) = ((10)^{k+1} 0^{2k+1})^inf, the periodic witness living in the
/// order-2k Markov approximation of the parity shift.
inline PeriodicPoint y_k_point(std::uint64_t k) {
    std::string period;
    for (std::uint64_t i = 0; i <= k; ++i) period += "10";
    period.append(static_cast<std::size_t>(2 * k + 1), '0');
    return {Alphabet::binary(), "", period};
}

/// Deterministic 64-bit generator for seeded suites (SplitMix64).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace shiftlab
