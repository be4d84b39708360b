/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "shiftlab/graph.hpp"
#include "shiftlab/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace shiftlab {

/// Edge-Markov chain on a trimmed, strongly connected labelled graph.
/// edge_prob[e] is the probability of edge e conditional on its source
/// vertex; `stationary` is the invariant vertex distribution.
struct MarkovMeasure {
    LabeledGraph graph;
    std::vector<double> edge_prob;
    std::vector<double> stationary;
};

/// Checks finite probabilities, per-vertex row sums (tol 1e-12) and the
/// stationarity residual (tol 1e-10). Throws ValidationError on failure.
void validate(const MarkovMeasure& m);

/// Measure of maximal entropy on a trimmed, strongly connected,
/// right-resolving presentation: P(e) = r(t(e)) / (lambda r(i(e))) for the
/// Perron eigenvector r. Its entropy equals the topological entropy.
MarkovMeasure parry_measure(const LabeledGraph& g);

/// Kolmogorov–Sinai entropy of the edge chain:
/// -sum_v pi_v sum_e P(e) ln P(e).
double markov_entropy(const MarkovMeasure& m);

/// Distribution of the k-symbol label words of a measure or of a periodic
/// point (window frequencies over one period).
struct BlockDistribution {
    int k = 0;
    Alphabet alphabet;
    std::map<std::string, double> probs;
};

BlockDistribution block_distribution(const MarkovMeasure& m, int k, int cap = 12);
BlockDistribution block_distribution(const PeriodicPoint& p, int k, int cap = 12);

/// (1/k) times the optimal transportation cost between two k-block
/// distributions under unnormalized Hamming cost; a lower bound for the
/// d-bar distance of any pair of invariant measures with these marginals.
double ot_lower_bound(const BlockDistribution& a, const BlockDistribution& b);

/// Total variation distance (1/2 L1).
double total_variation(const BlockDistribution& a, const BlockDistribution& b);

struct EntropyDenseWitness {
    MarkovMeasure measure;      // ergodic, on the two-mode lift of the graph
    double entropy_residual;    // |h(witness) - (a h1 + (1-a) h2)|
    double block_tv_residual;   // TV(blocks_k(witness), mixture of blocks_k)
};

/// Two-mode switching chain over a mixing graph whose statistics approach the
/// alpha-mixture of m1 and m2 as eps decreases. Residuals are reported, not
/// targeted.
EntropyDenseWitness entropy_dense_witness(const MarkovMeasure& m1, const MarkovMeasure& m2,
                                          double alpha, double eps, int block_k = 3);

} // namespace shiftlab
