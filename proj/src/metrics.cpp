/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/metrics.hpp"

#include "shiftlab/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace shiftlab {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct SccKarp {
    ExactRational value;
    std::vector<int> cycle_edges;
    bool found = false;
};

// Karp's minimum mean cycle on one strongly connected component.
// `verts` are the component's vertices; `edge_ids` its internal edges.
SccKarp karp_component(const CostGraph& cg, const std::vector<int>& verts,
                       const std::vector<int>& edge_ids) {
    SccKarp result;
    if (edge_ids.empty()) return result;

    const std::size_t s = verts.size();
    std::vector<int> local(static_cast<std::size_t>(cg.vertex_count), -1);
    for (std::size_t i = 0; i < s; ++i) local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

    // D[k][v] = min cost of a k-edge walk from verts[0] to v; parent edge ids
    // for cycle recovery.
    std::vector<std::vector<long long>> dist(s + 1, std::vector<long long>(s, kInf));
    std::vector<std::vector<int>> parent(s + 1, std::vector<int>(s, -1));
    dist[0][0] = 0;
    for (std::size_t k = 1; k <= s; ++k) {
        for (int ei : edge_ids) {
            const auto& e = cg.edges[static_cast<std::size_t>(ei)];
            const auto u = static_cast<std::size_t>(local[static_cast<std::size_t>(e.src)]);
            const auto v = static_cast<std::size_t>(local[static_cast<std::size_t>(e.dst)]);
            if (dist[k - 1][u] >= kInf) continue;
            long long cand = dist[k - 1][u] + e.cost;
            if (cand < dist[k][v]) {
                dist[k][v] = cand;
                parent[k][v] = ei;
            }
        }
    }

    // mu = min_v max_k (D_s(v) - D_k(v)) / (s - k), exact fraction compare.
    long long best_num = 0, best_den = 0; // best mean = best_num / best_den
    std::size_t best_v = 0;
    for (std::size_t v = 0; v < s; ++v) {
        if (dist[s][v] >= kInf) continue;
        long long num = -1, den = 0;
        for (std::size_t k = 0; k < s; ++k) {
            if (dist[k][v] >= kInf) continue;
            long long dn = dist[s][v] - dist[k][v];
            long long dd = static_cast<long long>(s - k);
            if (den == 0 || dn * den > num * dd) { // max over k
                num = dn;
                den = dd;
            }
        }
        if (den == 0) continue;
        if (best_den == 0 || num * best_den < best_num * den) { // min over v
            best_num = num;
            best_den = den;
            best_v = v;
        }
    }
    if (best_den == 0) return result;

    // Walk the s-edge min-cost walk to best_v backwards; every cycle on it
    // achieves the minimum mean.
    std::vector<int> walk; // edge ids, reversed
    std::vector<int> at(s + 1, -1);
    {
        std::size_t v = best_v;
        at[s] = verts[v];
        for (std::size_t k = s; k > 0; --k) {
            int ei = parent[k][v];
            if (ei < 0) throw InternalError("min_mean_cycle: broken parent chain");
            walk.push_back(ei);
            v = static_cast<std::size_t>(
                local[static_cast<std::size_t>(cg.edges[static_cast<std::size_t>(ei)].src)]);
            at[k - 1] = verts[v];
        }
    }
    std::reverse(walk.begin(), walk.end()); // walk[i] goes from at[i] to at[i+1]
    std::vector<int> first_seen(static_cast<std::size_t>(cg.vertex_count), -1);
    int lo = -1, hi = -1;
    for (std::size_t i = 0; i <= s; ++i) {
        int v = at[i];
        if (first_seen[static_cast<std::size_t>(v)] >= 0) {
            lo = first_seen[static_cast<std::size_t>(v)];
            hi = static_cast<int>(i);
            break;
        }
        first_seen[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    if (lo < 0) throw InternalError("min_mean_cycle: no repeat on an s-edge walk");

    result.found = true;
    result.cycle_edges.assign(walk.begin() + lo, walk.begin() + hi);
    long long ccost = 0;
    for (int ei : result.cycle_edges) ccost += cg.edges[static_cast<std::size_t>(ei)].cost;
    result.value = ExactRational(ccost, hi - lo);
    ExactRational karp_value(best_num, best_den);
    if (result.value != karp_value)
        throw InternalError("min_mean_cycle: recovered cycle mean " + result.value.to_string() +
                            " != Karp value " + karp_value.to_string());
    return result;
}

} // namespace

MeanCycleResult min_mean_cycle_witness(const CostGraph& cg) {
    if (cg.vertex_count == 0) throw ValidationError("min_mean_cycle: empty graph");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(cg.edges.size());
    for (const auto& e : cg.edges) arcs.emplace_back(e.src, e.dst);
    int comps = 0;
    auto comp = detail::scc(cg.vertex_count, arcs, &comps);

    std::vector<std::vector<int>> comp_verts(static_cast<std::size_t>(comps));
    for (int v = 0; v < cg.vertex_count; ++v)
        comp_verts[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
    std::vector<std::vector<int>> comp_edges(static_cast<std::size_t>(comps));
    for (std::size_t i = 0; i < cg.edges.size(); ++i) {
        const auto& e = cg.edges[i];
        int cs = comp[static_cast<std::size_t>(e.src)];
        if (cs == comp[static_cast<std::size_t>(e.dst)])
            comp_edges[static_cast<std::size_t>(cs)].push_back(static_cast<int>(i));
    }

    MeanCycleResult best;
    bool found = false;
    for (int c = 0; c < comps; ++c) {
        auto r = karp_component(cg, comp_verts[static_cast<std::size_t>(c)],
                                comp_edges[static_cast<std::size_t>(c)]);
        if (!r.found) continue;
        if (!found || r.value < best.value) {
            best.value = r.value;
            best.cycle_edges = r.cycle_edges;
            found = true;
        }
    }
    if (!found) throw ValidationError("min_mean_cycle: acyclic graph");
    return best;
}

ExactRational min_mean_cycle(const CostGraph& cg) { return min_mean_cycle_witness(cg).value; }

namespace {

// Product of p's period cycle with g; state (i, v) at index i * |V| + v.
CostGraph product_cost_graph(const PeriodicPoint& p, const LabeledGraph& g) {
    const auto period = p.period();
    const auto plen = period.size();
    CostGraph cg;
    cg.vertex_count = static_cast<int>(plen) * g.vertex_count;
    cg.left_desc = p.to_string();
    cg.right_desc = "graph<" + std::to_string(g.vertex_count) + " vertices, " +
                    std::to_string(g.edges.size()) + " edges>";
    for (std::size_t i = 0; i < plen; ++i) {
        const std::size_t j = (i + 1) % plen;
        for (const auto& e : g.edges) {
            CostGraph::Edge pe;
            pe.src = static_cast<int>(i) * g.vertex_count + e.src;
            pe.dst = static_cast<int>(j) * g.vertex_count + e.dst;
            pe.cost = e.label == period[i] ? 0 : 1;
            cg.edges.push_back(pe);
        }
    }
    return cg;
}

} // namespace

DistCertificate dist_point_to_sofic_cert(const PeriodicPoint& p, const LabeledGraph& g0) {
    if (p.alphabet() != g0.alphabet) throw ValidationError("dist_point_to_sofic: alphabet mismatch");
    LabeledGraph g = trim(g0);
    if (g.vertex_count == 0) throw EmptyShiftError("dist_point_to_sofic: empty graph");

    // The edge order of the product graph interleaves g's edges per phase, so
    // a product edge id maps back to (phase, g edge).
    CostGraph cg = product_cost_graph(p, g);
    auto mm = min_mean_cycle_witness(cg);

    DistCertificate cert{mm.value, p, {}}; // witness overwritten below
    const std::size_t ecount = g.edges.size();

    std::string labels;
    for (int pei : mm.cycle_edges) {
        const std::size_t phase = static_cast<std::size_t>(pei) / ecount;
        const auto& ge = g.edges[static_cast<std::size_t>(pei) % ecount];
        cert.cycle.emplace_back(phase, ge.src);
        labels.push_back(ge.label);
    }

    // Align a witness point of X(g): its cycle starts at phase i0 of p's
    // period, i.e. at absolute position |preperiod| + i0, and g is trimmed so
    // the cycle entry has arbitrarily long incoming paths.
    const std::uint64_t entry_phase = cert.cycle.front().first;
    const int entry_vertex = cert.cycle.front().second;
    std::uint64_t pre_len = p.preperiod().size() + entry_phase;
    std::string pre(static_cast<std::size_t>(pre_len), '\0');
    {
        std::vector<std::vector<int>> in(static_cast<std::size_t>(g.vertex_count));
        for (std::size_t i = 0; i < g.edges.size(); ++i)
            in[static_cast<std::size_t>(g.edges[i].dst)].push_back(static_cast<int>(i));
        int v = entry_vertex;
        for (std::uint64_t i = pre_len; i-- > 0;) {
            int ei = in[static_cast<std::size_t>(v)].front();
            pre[static_cast<std::size_t>(i)] = g.edges[static_cast<std::size_t>(ei)].label;
            v = g.edges[static_cast<std::size_t>(ei)].src;
        }
    }
    cert.witness = PeriodicPoint(g.alphabet, pre, labels);

    if (mismatch_density(p, cert.witness) != cert.value)
        throw InternalError("dist_point_to_sofic: witness density does not match the cycle mean");
    return cert;
}

ExactRational dist_point_to_sofic(const PeriodicPoint& p, const LabeledGraph& g) {
    return dist_point_to_sofic_cert(p, g).value;
}

ExactRational dist_lower_envelope(const PeriodicPoint& p, const LabeledGraph& g0,
                                  std::size_t horizon) {
    LabeledGraph g = trim(g0);
    if (g.vertex_count == 0) throw EmptyShiftError("dist_lower_envelope: empty graph");
    const std::size_t plen = p.period().size();
    const std::uint64_t base = p.preperiod().size();
    ExactRational best(0);
    for (std::size_t n = 1; n <= horizon; ++n) {
        ExactRational worst_window(1); // min over phases
        bool first = true;
        for (std::size_t m = 0; m < plen; ++m) {
            Word w = subword(p, base + m, base + m + n);
            // min mismatches over all n-edge paths in g
            std::vector<long long> cost(static_cast<std::size_t>(g.vertex_count), 0);
            for (std::size_t t = 0; t < n; ++t) {
                std::vector<long long> next(static_cast<std::size_t>(g.vertex_count), kInf);
                for (const auto& e : g.edges) {
                    long long c = cost[static_cast<std::size_t>(e.src)];
                    if (c >= kInf) continue;
                    c += (e.label == w.text[t]) ? 0 : 1;
                    next[static_cast<std::size_t>(e.dst)] = std::min(next[static_cast<std::size_t>(e.dst)], c);
                }
                cost = std::move(next);
            }
            long long mc = *std::min_element(cost.begin(), cost.end());
            if (mc >= kInf) throw InternalError("dist_lower_envelope: no n-path in trimmed graph");
            ExactRational val(mc, static_cast<long long>(n));
            if (first || val < worst_window) {
                worst_window = val;
                first = false;
            }
        }
        if (worst_window > best) best = worst_window;
    }
    return best;
}

ExactRational hausdorff_n(const std::vector<std::string>& lx, const std::vector<std::string>& ly,
                          std::size_t n) {
    if (lx.empty() || ly.empty()) throw ValidationError("hausdorff_n: empty word set");
    if (n == 0) throw ValidationError("hausdorff_n: n must be >= 1");
    for (const auto& w : lx)
        if (w.size() != n) throw ValidationError("hausdorff_n: mixed lengths in first set");
    for (const auto& w : ly)
        if (w.size() != n) throw ValidationError("hausdorff_n: mixed lengths in second set");

    auto directed = [n](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        long long worst = 0;
        for (const auto& u : a) {
            long long bestm = static_cast<long long>(n) + 1;
            for (const auto& v : b) {
                long long mm = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (u[i] != v[i]) ++mm;
                bestm = std::min(bestm, mm);
                if (bestm == 0) break;
            }
            worst = std::max(worst, bestm);
        }
        return worst;
    };
    long long d = std::max(directed(lx, ly), directed(ly, lx));
    return {d, static_cast<long long>(n)};
}

ExactRational directed_hausdorff_to_graph(const std::vector<std::string>& lx,
                                          const LabeledGraph& g0, std::size_t n) {
    if (lx.empty()) throw ValidationError("directed_hausdorff_to_graph: empty word set");
    LabeledGraph g = trim(g0);
    if (g.vertex_count == 0) throw EmptyShiftError("directed_hausdorff_to_graph: empty graph");
    long long worst = 0;
    for (const auto& w : lx) {
        if (w.size() != n) throw ValidationError("directed_hausdorff_to_graph: length mismatch");
        std::vector<long long> cost(static_cast<std::size_t>(g.vertex_count), 0);
        for (std::size_t t = 0; t < n; ++t) {
            std::vector<long long> next(static_cast<std::size_t>(g.vertex_count), kInf);
            for (const auto& e : g.edges) {
                long long c = cost[static_cast<std::size_t>(e.src)];
                if (c >= kInf) continue;
                c += (e.label == w[t]) ? 0 : 1;
                next[static_cast<std::size_t>(e.dst)] = std::min(next[static_cast<std::size_t>(e.dst)], c);
            }
            cost = std::move(next);
        }
        worst = std::max(worst, *std::min_element(cost.begin(), cost.end()));
    }
    return {worst, static_cast<long long>(n)};
}

} // namespace shiftlab
