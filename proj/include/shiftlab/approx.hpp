/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "shiftlab/graph.hpp"
#include "shiftlab/word.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace shiftlab {

/// Memoized L_n tables of the shift presented by a labelled graph.
/// Thread-safe: cache fills are idempotent and mutex-guarded.
class LanguageOracle {
public:
    explicit LanguageOracle(LabeledGraph g, std::string description = "");

    const LabeledGraph& graph() const { return graph_; }
    const std::string& description() const { return description_; }

    /// L_n of the presented shift, sorted. Cached per n.
    const std::vector<std::string>& language(std::size_t n) const;

    /// Is w in L_{|w|}?
    bool contains(const std::string& w) const;

private:
    LabeledGraph graph_;
    std::string description_;
    std::unique_ptr<std::mutex> mutex_;
    mutable std::map<std::size_t, std::vector<std::string>> cache_;
};

/// n-th Rauzy graph: one vertex per word of L_n, one edge per word of
/// L_{n+1} from its length-n prefix to its length-n suffix, labelled by the
/// first symbol. Presents the n-th Markov approximation X^M_n.
LabeledGraph rauzy_graph(const LanguageOracle& oracle, std::size_t n);

/// Builds a genuine point of X(g) that d-bar-shadows the concatenation of the
/// given language words: the last k symbols of each word are replaced by a
/// bridging word of length exactly k found by graph search.
///
/// cycle == true repeats the word list periodically and returns a point whose
/// period length is the total length of the list; the mismatch density
/// against the cycled concatenation is at most k / min |w|.
/// cycle == false glues the list once as a preperiod and repeats the final
/// word as the period, so the density bound applies to the repeated tail.
PeriodicPoint glue_with_specification(const LabeledGraph& g, long long k,
                                      const std::vector<std::string>& words, bool cycle);

/// Projects a purely periodic point of the n-th Markov approximation into the
/// target shift by chopping it into n-blocks and gluing them; the mismatch
/// density between input and output is at most k/n.
PeriodicPoint project_markov_point(const PeriodicPoint& x, const LanguageOracle& target_oracle,
                                   const LabeledGraph& g_target, long long k, std::size_t n);

} // namespace shiftlab
