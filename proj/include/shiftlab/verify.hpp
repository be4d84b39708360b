/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "shiftlab/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shiftlab::verify {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::vector<Certificate> certificates;
};

/// The periodic witnesses y^(k) stay at distance >= 1/8 from the parity
/// shift, with the occurrence counts of symbol 1 pinned exactly.
CheckResult ex4_nondbar();

/// A B-free witness with a small generator tail stays at distance >= 1/16
/// from the hereditary closure of (01)^inf.
CheckResult ex6_bfree_nondbar();

/// Seeded gluings through the golden mean respect the k/N mismatch bound.
CheckResult lemma_glue(std::uint64_t seed, int lists_per_length);

/// Seeded inner-approximation surgeries are accepted by the truncated
/// automaton and meet the per-gap formula bound; Frobenius pins included.
CheckResult sgap_surgery(std::uint64_t seed, int instances);

/// Davenport–Erdős table for prime squares: deficiency nonincreasing in k and
/// dominated by the analytic tail bound.
CheckResult de_convergence(std::uint64_t n, std::uint64_t k_hi);

/// Parry-measure entropy equals topological entropy on the mixing corpus.
CheckResult parry_entropy();

const std::vector<std::string>& ids();
CheckResult run(const std::string& id, std::uint64_t seed);

} // namespace shiftlab::verify
