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

/// Product automaton with 0/1 mismatch costs on edges.
struct CostGraph {
    struct Edge {
        int src = 0;
        int dst = 0;
        int cost = 0;
    };

    int vertex_count = 0;
    std::vector<Edge> edges;
    std::string left_desc;
    std::string right_desc;
};

struct MeanCycleResult {
    ExactRational value;
    std::vector<int> cycle_edges; // edge ids of one optimal cycle, in order
};

/// Minimum over all cycles of (total cost / length), exact (Karp, per SCC).
/// Throws ValidationError when the graph has no cycle.
MeanCycleResult min_mean_cycle_witness(const CostGraph& cg);
ExactRational min_mean_cycle(const CostGraph& cg);

/// Exact d-bar distance from an eventually periodic point to the shift
/// presented by g: the minimum mean cycle of the product of the point's
/// period cycle with g, over all components and phase alignments.
struct DistCertificate {
    ExactRational value;
    /// One optimal periodic point of X(g), aligned so its mismatch density
    /// against p equals `value` exactly.
    PeriodicPoint witness;
    /// (phase in p's period, vertex of g) along the optimal product cycle.
    std::vector<std::pair<std::uint64_t, int>> cycle;
};

DistCertificate dist_point_to_sofic_cert(const PeriodicPoint& p, const LabeledGraph& g);
ExactRational dist_point_to_sofic(const PeriodicPoint& p, const LabeledGraph& g);

/// Finite-horizon lower bound on dist_point_to_sofic:
///   max over n <= horizon of  min over phases m of  min_{v in L_n(g)}
///   d_Ham(p_[m, m+n), v).
ExactRational dist_lower_envelope(const PeriodicPoint& p, const LabeledGraph& g,
                                  std::size_t horizon);

/// Hamming–Hausdorff distance between two sets of words of common length n.
/// A finite-horizon diagnostic; no convergence to the Hausdorffified d-bar
/// distance between the underlying shifts is claimed.
ExactRational hausdorff_n(const std::vector<std::string>& lx, const std::vector<std::string>& ly,
                          std::size_t n);

/// sup_{a in LX} min_{v in L_n(g)} d_Ham(a, v), the inner minimum computed by
/// a mismatch-count run over the presentation rather than by enumerating L_n.
ExactRational directed_hausdorff_to_graph(const std::vector<std::string>& lx,
                                          const LabeledGraph& g, std::size_t n);

} // namespace shiftlab
