/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "shiftlab/graph.hpp"
#include "shiftlab/measures.hpp"
#include "shiftlab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shiftlab {

/// Graph file format: {"alphabet": "01", "vertices": n,
/// "edges": [[src, dst, "label"], ...]}. Serialization is canonical (edges
/// sorted, keys in fixed order) so emit(parse(s)) == s for canonical s.
std::string graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const std::string& text);
LabeledGraph load_graph(const std::string& path);
void save_graph(const LabeledGraph& g, const std::string& path);

/// JSON map word -> probability, words sorted lexicographically,
/// probabilities as decimal strings with 15 significant digits.
std::string block_distribution_to_json(const BlockDistribution& bd);

/// Machine-checkable claim: a value plus the evidence used to cross-check it.
struct Certificate {
    std::string claim;
    std::string value; // "p/q" for exact values, shortest-round-trip decimal otherwise
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::vector<std::pair<std::string, std::string>> cross_checks; // (method, value)
};

std::string certificate_to_json(const Certificate& c);

std::string format_double(double v);

} // namespace shiftlab
