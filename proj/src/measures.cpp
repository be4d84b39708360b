/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/measures.hpp"

#include "shiftlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace shiftlab {

namespace {

std::vector<double> stationary_of(const LabeledGraph& g, const std::vector<double>& edge_prob) {
    const auto n = static_cast<std::size_t>(g.vertex_count);
    std::vector<double> pi(n, 1.0 / static_cast<double>(n));
    // Iterate the lazy chain (P + I)/2: same stationary vector, and it
    // converges even when the chain itself is periodic.
    for (int it = 0; it < 400000; ++it) {
        std::vector<double> next(n, 0.0);
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const auto& e = g.edges[i];
            next[static_cast<std::size_t>(e.dst)] += pi[static_cast<std::size_t>(e.src)] * edge_prob[i];
        }
        double total = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            next[v] = 0.5 * (next[v] + pi[v]);
            total += next[v];
        }
        for (auto& x : next) x /= total;
        double delta = 0.0;
        for (std::size_t v = 0; v < n; ++v) delta = std::max(delta, std::abs(next[v] - pi[v]));
        pi = std::move(next);
        if (delta < 1e-15) break;
    }
    return pi;
}

bool strongly_connected(const LabeledGraph& g) {
    int comps = 0;
    detail::strongly_connected_components(g, &comps);
    return comps == 1;
}

} // namespace

void validate(const MarkovMeasure& m) {
    const auto n = static_cast<std::size_t>(m.graph.vertex_count);
    if (m.edge_prob.size() != m.graph.edges.size())
        throw ValidationError("MarkovMeasure: edge_prob size mismatch");
    if (m.stationary.size() != n) throw ValidationError("MarkovMeasure: stationary size mismatch");
    if (!is_trim(m.graph)) throw ValidationError("MarkovMeasure: graph must be trimmed");
    if (!strongly_connected(m.graph))
        throw ValidationError("MarkovMeasure: graph must be strongly connected");

    std::vector<double> row(n, 0.0);
    for (std::size_t i = 0; i < m.graph.edges.size(); ++i) {
        double p = m.edge_prob[i];
        if (!std::isfinite(p) || p < 0.0 || p > 1.0)
            throw ValidationError("MarkovMeasure: edge probability out of range");
        row[static_cast<std::size_t>(m.graph.edges[i].src)] += p;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (std::abs(row[v] - 1.0) > 1e-12)
            throw ValidationError("MarkovMeasure: row sum off by more than 1e-12 at vertex " +
                                  std::to_string(v));

    std::vector<double> next(n, 0.0);
    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        double p = m.stationary[v];
        if (!std::isfinite(p) || p < -1e-15) throw ValidationError("MarkovMeasure: bad stationary");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-10)
        throw ValidationError("MarkovMeasure: stationary does not sum to 1");
    for (std::size_t i = 0; i < m.graph.edges.size(); ++i) {
        const auto& e = m.graph.edges[i];
        next[static_cast<std::size_t>(e.dst)] +=
            m.stationary[static_cast<std::size_t>(e.src)] * m.edge_prob[i];
    }
    for (std::size_t v = 0; v < n; ++v)
        if (std::abs(next[v] - m.stationary[v]) > 1e-10)
            throw ValidationError("MarkovMeasure: stationarity residual above 1e-10");
}

MarkovMeasure parry_measure(const LabeledGraph& g) {
    if (!is_trim(g)) throw ValidationError("parry_measure: graph must be trimmed");
    if (!is_right_resolving(g)) throw ValidationError("parry_measure: graph must be right-resolving");
    if (!strongly_connected(g)) throw ValidationError("parry_measure: reducible graph");

    const auto n = static_cast<std::size_t>(g.vertex_count);
    // Right Perron vector of the adjacency matrix via power iteration on A+I.
    auto perron = [&](bool transpose) {
        std::vector<double> x(n, 1.0);
        double lambda = 0.0;
        for (int it = 0; it < 500000; ++it) {
            std::vector<double> y(x); // the +I part
            for (const auto& e : g.edges) {
                auto s = static_cast<std::size_t>(transpose ? e.dst : e.src);
                auto t = static_cast<std::size_t>(transpose ? e.src : e.dst);
                y[s] += x[t];
            }
            double lo = std::numeric_limits<double>::max(), hi = 0.0;
            for (std::size_t v = 0; v < n; ++v) {
                lo = std::min(lo, y[v] / x[v]);
                hi = std::max(hi, y[v] / x[v]);
            }
            double norm = *std::max_element(y.begin(), y.end());
            for (std::size_t v = 0; v < n; ++v) x[v] = y[v] / norm;
            lambda = 0.5 * (lo + hi) - 1.0;
            if (hi - lo <= 1e-14 * hi) break;
        }
        return std::pair(x, lambda);
    };
    auto [r, lambda] = perron(false);

    MarkovMeasure m;
    m.graph = g;
    m.edge_prob.resize(g.edges.size());
    std::vector<double> row(n, 0.0);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        m.edge_prob[i] = r[static_cast<std::size_t>(e.dst)] /
                         (lambda * r[static_cast<std::size_t>(e.src)]);
        row[static_cast<std::size_t>(e.src)] += m.edge_prob[i];
    }
    // Snap rows to exact stochasticity (eigen-residual is ~1e-14).
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        m.edge_prob[i] /= row[static_cast<std::size_t>(g.edges[i].src)];

    auto [l, lambda2] = perron(true);
    (void)lambda2;
    m.stationary.resize(n);
    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        m.stationary[v] = l[v] * r[v];
        total += m.stationary[v];
    }
    for (auto& x : m.stationary) x /= total;
    m.stationary = stationary_of(g, m.edge_prob); // polish the residual
    validate(m);
    return m;
}

double markov_entropy(const MarkovMeasure& m) {
    double h = 0.0;
    for (std::size_t i = 0; i < m.graph.edges.size(); ++i) {
        double p = m.edge_prob[i];
        if (p <= 0.0) continue;
        h -= m.stationary[static_cast<std::size_t>(m.graph.edges[i].src)] * p * std::log(p);
    }
    return h;
}

BlockDistribution block_distribution(const MarkovMeasure& m, int k, int cap) {
    if (k < 1) throw ValidationError("block_distribution: k must be >= 1");
    if (k > cap) throw ResourceError("block_distribution: k exceeds the configured cap");
    // mass[w][v] = probability of reading w and standing at v.
    std::map<std::string, std::vector<double>> mass;
    mass[""] = m.stationary;
    for (int step = 0; step < k; ++step) {
        std::map<std::string, std::vector<double>> next;
        for (const auto& [w, dist] : mass) {
            for (std::size_t i = 0; i < m.graph.edges.size(); ++i) {
                const auto& e = m.graph.edges[i];
                double p = dist[static_cast<std::size_t>(e.src)] * m.edge_prob[i];
                if (p == 0.0) continue;
                auto& tgt = next[w + e.label];
                if (tgt.empty()) tgt.assign(static_cast<std::size_t>(m.graph.vertex_count), 0.0);
                tgt[static_cast<std::size_t>(e.dst)] += p;
            }
        }
        mass = std::move(next);
    }
    BlockDistribution bd;
    bd.k = k;
    bd.alphabet = m.graph.alphabet;
    for (const auto& [w, dist] : mass)
        bd.probs[w] = std::accumulate(dist.begin(), dist.end(), 0.0);
    return bd;
}

BlockDistribution block_distribution(const PeriodicPoint& p, int k, int cap) {
    if (k < 1) throw ValidationError("block_distribution: k must be >= 1");
    if (k > cap) throw ResourceError("block_distribution: k exceeds the configured cap");
    const std::size_t plen = p.period().size();
    const std::uint64_t base = p.preperiod().size();
    std::map<std::string, long long> counts;
    for (std::size_t i = 0; i < plen; ++i)
        counts[subword(p, base + i, base + i + static_cast<std::uint64_t>(k)).text] += 1;
    BlockDistribution bd;
    bd.k = k;
    bd.alphabet = p.alphabet();
    for (const auto& [w, c] : counts)
        bd.probs[w] = ExactRational(c, static_cast<long long>(plen)).to_double();
    return bd;
}

double ot_lower_bound(const BlockDistribution& a, const BlockDistribution& b) {
    if (a.k != b.k) throw ValidationError("ot_lower_bound: mismatched block lengths");
    if (a.alphabet != b.alphabet) throw ValidationError("ot_lower_bound: alphabet mismatch");
    std::vector<std::string> rows, cols;
    std::vector<double> supply, demand;
    for (const auto& [w, pr] : a.probs)
        if (pr > 0.0) { rows.push_back(w); supply.push_back(pr); }
    for (const auto& [w, pr] : b.probs)
        if (pr > 0.0) { cols.push_back(w); demand.push_back(pr); }
    const std::size_t m = rows.size(), n = cols.size();
    if (m == 0 || n == 0) throw ValidationError("ot_lower_bound: empty distribution");
    if (m > 4096 || n > 4096) throw ResourceError("ot_lower_bound: support exceeds 4096");

    std::vector<std::vector<int>> cost(m, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int c = 0;
            for (int t = 0; t < a.k; ++t)
                if (rows[i][static_cast<std::size_t>(t)] != cols[j][static_cast<std::size_t>(t)]) ++c;
            cost[i][j] = c;
        }

    // Successive shortest augmenting paths with potentials. Costs are small
    // integers, flows are real; each augmentation exhausts a row, a column,
    // or an existing positive flow arc.
    const double total = std::min(std::accumulate(supply.begin(), supply.end(), 0.0),
                                  std::accumulate(demand.begin(), demand.end(), 0.0));
    const double eps = 1e-14 * std::max(1.0, total);
    std::vector<double> rem_s = supply, rem_d = demand;
    std::vector<std::vector<double>> flow(m, std::vector<double>(n, 0.0));
    std::vector<double> pot(m + n, 0.0);
    double value = 0.0;

    const std::size_t max_rounds = 4 * (m + 1) * (n + 1);
    for (std::size_t round = 0; round < max_rounds; ++round) {
        bool active = false;
        for (std::size_t i = 0; i < m; ++i)
            if (rem_s[i] > eps) { active = true; break; }
        if (!active) break;

        // Dijkstra over nodes 0..m-1 (rows) and m..m+n-1 (cols).
        const double inf = std::numeric_limits<double>::max();
        std::vector<double> dist(m + n, inf);
        std::vector<int> prev(m + n, -1);
        std::vector<char> done(m + n, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (rem_s[i] > eps) dist[i] = 0.0;
        for (;;) {
            std::size_t u = m + n;
            double du = inf;
            for (std::size_t x = 0; x < m + n; ++x)
                if (!done[x] && dist[x] < du) { du = dist[x]; u = x; }
            if (u == m + n) break;
            done[u] = 1;
            if (u < m) {
                for (std::size_t j = 0; j < n; ++j) {
                    double rc = cost[u][j] + pot[u] - pot[m + j];
                    if (dist[u] + rc < dist[m + j] - 1e-18) {
                        dist[m + j] = dist[u] + rc;
                        prev[m + j] = static_cast<int>(u);
                    }
                }
            } else {
                std::size_t j = u - m;
                for (std::size_t i = 0; i < m; ++i) {
                    if (flow[i][j] <= eps) continue;
                    double rc = -cost[i][j] + pot[m + j] - pot[i];
                    if (dist[u] + rc < dist[i] - 1e-18) {
                        dist[i] = dist[u] + rc;
                        prev[i] = static_cast<int>(u);
                    }
                }
            }
        }
        // Closest reachable column with remaining demand.
        std::size_t sink = m + n;
        double dsink = inf;
        for (std::size_t j = 0; j < n; ++j)
            if (rem_d[j] > eps && dist[m + j] < dsink) { dsink = dist[m + j]; sink = m + j; }
        if (sink == m + n) break; // supply dust below eps remains

        // Bottleneck along the alternating path.
        double push = rem_d[sink - m];
        for (std::size_t x = sink; prev[x] >= 0;) {
            auto px = static_cast<std::size_t>(prev[x]);
            if (x >= m) { /* row -> col forward arc, no capacity */ }
            else { push = std::min(push, flow[x][px - m]); }
            x = px;
            if (prev[x] < 0) push = std::min(push, rem_s[x]);
        }
        // Apply.
        for (std::size_t x = sink; prev[x] >= 0;) {
            auto px = static_cast<std::size_t>(prev[x]);
            if (x >= m) {
                flow[px][x - m] += push;
                value += push * cost[px][x - m];
            } else {
                flow[x][px - m] -= push;
                value -= push * cost[x][px - m];
            }
            x = px;
            if (prev[x] < 0) rem_s[x] -= push;
        }
        rem_d[sink - m] -= push;
        for (std::size_t x = 0; x < m + n; ++x)
            if (dist[x] < inf) pot[x] += std::min(dist[x], dsink);
    }
    return value / static_cast<double>(a.k);
}

double total_variation(const BlockDistribution& a, const BlockDistribution& b) {
    if (a.k != b.k) throw ValidationError("total_variation: mismatched block lengths");
    double l1 = 0.0;
    auto ia = a.probs.begin();
    auto ib = b.probs.begin();
    while (ia != a.probs.end() || ib != b.probs.end()) {
        if (ib == b.probs.end() || (ia != a.probs.end() && ia->first < ib->first)) {
            l1 += std::abs(ia->second);
            ++ia;
        } else if (ia == a.probs.end() || ib->first < ia->first) {
            l1 += std::abs(ib->second);
            ++ib;
        } else {
            l1 += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return 0.5 * l1;
}

EntropyDenseWitness entropy_dense_witness(const MarkovMeasure& m1, const MarkovMeasure& m2,
                                          double alpha, double eps, int block_k) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ValidationError("entropy_dense_witness: alpha outside [0, 1]");
    if (!(eps > 0.0)) throw ValidationError("entropy_dense_witness: eps must be positive");
    if (!(m1.graph == m2.graph))
        throw ValidationError("entropy_dense_witness: measures live on different graphs");
    if (!classify_graph(m1.graph).is_mixing)
        throw ValidationError("entropy_dense_witness: non-mixing graph");

    const double h1 = markov_entropy(m1), h2 = markov_entropy(m2);
    const double target_h = alpha * h1 + (1.0 - alpha) * h2;

    auto finish = [&](const MarkovMeasure& w) {
        BlockDistribution bw = block_distribution(w, block_k);
        BlockDistribution b1 = block_distribution(m1, block_k);
        BlockDistribution b2 = block_distribution(m2, block_k);
        BlockDistribution mix;
        mix.k = block_k;
        mix.alphabet = b1.alphabet;
        for (const auto& [word, pr] : b1.probs) mix.probs[word] += alpha * pr;
        for (const auto& [word, pr] : b2.probs) mix.probs[word] += (1.0 - alpha) * pr;
        return EntropyDenseWitness{w, std::abs(markov_entropy(w) - target_h),
                                   total_variation(bw, mix)};
    };

    if (alpha == 1.0) return finish(m1);
    if (alpha == 0.0) return finish(m2);

    // Mode switching rates tuned so the stationary mode occupancy is
    // (alpha, 1 - alpha): leave mode 1 at rate eps (1 - alpha), mode 2 at
    // rate eps alpha.
    const double out1 = eps * (1.0 - alpha), out2 = eps * alpha;
    const auto nv = m1.graph.vertex_count;

    MarkovMeasure w;
    w.graph.alphabet = m1.graph.alphabet;
    w.graph.vertex_count = 2 * nv;
    for (std::size_t i = 0; i < m1.graph.edges.size(); ++i) {
        const auto& e = m1.graph.edges[i];
        w.graph.edges.push_back({e.src, e.dst, e.label});
        w.edge_prob.push_back(m1.edge_prob[i] * (1.0 - out1));
        w.graph.edges.push_back({e.src, nv + e.dst, e.label});
        w.edge_prob.push_back(m1.edge_prob[i] * out1);
        w.graph.edges.push_back({nv + e.src, nv + e.dst, e.label});
        w.edge_prob.push_back(m2.edge_prob[i] * (1.0 - out2));
        w.graph.edges.push_back({nv + e.src, e.dst, e.label});
        w.edge_prob.push_back(m2.edge_prob[i] * out2);
    }
    w.stationary = stationary_of(w.graph, w.edge_prob);
    validate(w);
    return finish(w);
}

} // namespace shiftlab
