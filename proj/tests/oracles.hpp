/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 *
 * Brute-force oracles shared by the unit and acceptance suites. These stay
 * independent of the library algorithms they check: plain enumeration only.
 */
#pragma once

#include "shiftlab/metrics.hpp"
#include "shiftlab/word.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace shiftlab::oracles {

/// Minimum mean over all vertex-simple cycles, parallel edges collapsed to
/// their cheapest representative (safe for minimization).
inline std::optional<ExactRational> brute_min_mean_cycle(const CostGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count);
    std::vector<std::vector<int>> best(n, std::vector<int>(n, -1));
    for (const auto& e : g.edges) {
        int& slot = best[static_cast<std::size_t>(e.src)][static_cast<std::size_t>(e.dst)];
        if (slot < 0 || e.cost < slot) slot = e.cost;
    }
    std::optional<ExactRational> result;
    std::vector<char> on_path(n, 0);
    std::size_t path_len = 0;
    std::function<void(std::size_t, std::size_t, long long)> dfs =
        [&](std::size_t start, std::size_t v, long long cost) {
            for (std::size_t w = 0; w < n; ++w) {
                if (best[v][w] < 0) continue;
                if (w == start) {
                    ExactRational mean(cost + best[v][w], static_cast<long long>(path_len));
                    if (!result || mean < *result) result = mean;
                } else if (!on_path[w] && w > start) {
                    on_path[w] = 1;
                    ++path_len;
                    dfs(start, w, cost + best[v][w]);
                    --path_len;
                    on_path[w] = 0;
                }
            }
        };
    for (std::size_t s = 0; s < n; ++s) {
        on_path.assign(n, 0);
        on_path[s] = 1;
        path_len = 1;
        dfs(s, s, 0);
    }
    return result;
}

/// All length-n words over the alphabet containing no forbidden factor.
/// Equals L_n(X_F) whenever every clean word is bi-extendable, which holds
/// for the SFT corpus used in the tests.
inline std::vector<std::string> filter_language(const Alphabet& a,
                                                const std::vector<std::string>& forbidden,
                                                std::size_t n) {
    std::vector<std::string> level{""};
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<std::string> next;
        for (const auto& w : level)
            for (std::size_t i = 0; i < a.size(); ++i) {
                std::string x = w + a.symbol(i);
                bool ok = true;
                for (const auto& f : forbidden)
                    if (f.size() <= x.size() && x.find(f) != std::string::npos) ok = false;
                if (ok) next.push_back(std::move(x));
            }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

} // namespace shiftlab::oracles
