/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "shiftlab/rational.hpp"
#include "shiftlab/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shiftlab {

/// Labelled multigraph presenting a sofic shift: the shift space is the set
/// of label sequences of one-sided infinite paths.
struct LabeledGraph {
    struct Edge {
        int src = 0;
        int dst = 0;
        char label = 0;
        bool operator==(const Edge&) const = default;
    };

    Alphabet alphabet;
    int vertex_count = 0;
    std::vector<Edge> edges;

    bool operator==(const LabeledGraph&) const = default;
};

/// Sorts edges by (src, dst, label) and drops exact duplicates.
void canonicalize(LabeledGraph& g);

/// Iteratively removes vertices with in-degree 0 or out-degree 0 and
/// renumbers the survivors. The result can be empty (vertex_count == 0).
LabeledGraph trim(const LabeledGraph& g);

bool is_trim(const LabeledGraph& g);
bool is_right_resolving(const LabeledGraph& g);

/// Shift of finite type given by a finite set of forbidden words.
struct SftSpec {
    Alphabet alphabet;
    std::vector<std::string> forbidden;

    SftSpec(Alphabet a, std::vector<std::string> f);
};

struct GraphClassification {
    bool is_trim_nonempty = false;
    bool is_transitive = false;
    /// gcd of all cycle lengths over all strongly connected components.
    long long period = 0;
    bool is_mixing = false;
};

/// De Bruijn-style presentation of X_F on the allowed (m)-words,
/// m = max forbidden length - 1. The result is trimmed and right-resolving.
/// Throws EmptyShiftError when the induced shift is empty.
LabeledGraph build_sft_graph(const SftSpec& spec);

/// Subset construction producing a right-resolving, trimmed presentation of
/// the same shift. Throws ResourceError past `max_states` subset states.
LabeledGraph determinize_trim(const LabeledGraph& g, std::size_t max_states = std::size_t{1} << 20);

/// All length-n path labels of the graph, deduplicated and sorted.
/// n == 0 yields the singleton empty word.
std::vector<std::string> language_n(const LabeledGraph& g, std::size_t n);

/// |L_n(g)| without materializing the words (path count in the powerset
/// automaton from its initial state).
BigInt language_count(const LabeledGraph& g, std::size_t n);

/// Is w the label of some finite path?
bool word_in_language(const LabeledGraph& g, const std::string& w);

GraphClassification classify_graph(const LabeledGraph& g);

/// Smallest k <= k_max such that every ordered pair of language words can be
/// bridged by some connecting word of length exactly k, or nullopt.
/// Requires a trimmed, right-resolving, mixing presentation.
std::optional<long long> specification_constant(const LabeledGraph& g, long long k_max);

/// Natural-log topological entropy: log of the spectral radius of the
/// adjacency matrix of a right-resolving trimmed presentation.
double topological_entropy(const LabeledGraph& g);

/// Out-edge index for right-resolving navigation; -1 when undefined.
class DfaView {
public:
    explicit DfaView(const LabeledGraph& g);
    /// Edge id out of v with the given label, or -1.
    int step_edge(int v, char label) const;
    /// Target vertex, or -1.
    int step(int v, char label) const;
    /// Runs a word from a vertex; nullopt when a transition is missing.
    std::optional<int> run(int v, const std::string& w) const;

private:
    const LabeledGraph* g_;
    std::vector<int> table_; // vertex * |alphabet| -> edge id
};

namespace detail {
std::vector<std::vector<int>> out_adjacency(const LabeledGraph& g);
/// Tarjan on a bare arc list; returns per-vertex component ids, components
/// numbered in reverse topological order.
std::vector<int> scc(int vertex_count, const std::vector<std::pair<int, int>>& arcs, int* count);
std::vector<int> strongly_connected_components(const LabeledGraph& g, int* count);
} // namespace detail

} // namespace shiftlab
