/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/graph.hpp"

#include "shiftlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace shiftlab {

void canonicalize(LabeledGraph& g) {
    auto key = [](const LabeledGraph::Edge& e) { return std::tuple(e.src, e.dst, e.label); };
    std::sort(g.edges.begin(), g.edges.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

namespace detail {

std::vector<std::vector<int>> out_adjacency(const LabeledGraph& g) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.vertex_count));
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        out[static_cast<std::size_t>(g.edges[i].src)].push_back(static_cast<int>(i));
    return out;
}

// Iterative Tarjan. Returns component ids in reverse topological order
// (a component's successors have smaller ids).
std::vector<int> scc(int n, const std::vector<std::pair<int, int>>& arcs, int* count) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (const auto& [s, t] : arcs) out[static_cast<std::size_t>(s)].push_back(t);
    std::vector<int> comp(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        num(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    int timer = 0, comps = 0;

    struct Frame { int v; std::size_t ei; };
    for (int root = 0; root < n; ++root) {
        if (num[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> call;
        call.push_back({root, 0});
        num[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = 1;
        while (!call.empty()) {
            auto& fr = call.back();
            const auto v = static_cast<std::size_t>(fr.v);
            if (fr.ei < out[v].size()) {
                int w = out[v][fr.ei++];
                const auto wu = static_cast<std::size_t>(w);
                if (num[wu] == -1) {
                    num[wu] = low[wu] = timer++;
                    stack.push_back(w);
                    on_stack[wu] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[wu]) {
                    low[v] = std::min(low[v], num[wu]);
                }
            } else {
                if (low[v] == num[v]) {
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = 0;
                        comp[static_cast<std::size_t>(w)] = comps;
                        if (w == fr.v) break;
                    }
                    ++comps;
                }
                int finished = fr.v;
                call.pop_back();
                if (!call.empty()) {
                    auto& up = call.back();
                    const auto uu = static_cast<std::size_t>(up.v);
                    low[uu] = std::min(low[uu], low[static_cast<std::size_t>(finished)]);
                }
            }
        }
    }
    if (count) *count = comps;
    return comp;
}

std::vector<int> strongly_connected_components(const LabeledGraph& g, int* count) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edges.size());
    for (const auto& e : g.edges) arcs.emplace_back(e.src, e.dst);
    return scc(g.vertex_count, arcs, count);
}

} // namespace detail

LabeledGraph trim(const LabeledGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count);
    std::vector<char> alive(n, 1);
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (const auto& e : g.edges) {
        ++outdeg[static_cast<std::size_t>(e.src)];
        ++indeg[static_cast<std::size_t>(e.dst)];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (alive[v] && (indeg[v] == 0 || outdeg[v] == 0)) {
                alive[v] = 0;
                changed = true;
                for (const auto& e : g.edges) {
                    if (static_cast<std::size_t>(e.src) == v &&
                        alive[static_cast<std::size_t>(e.dst)])
                        --indeg[static_cast<std::size_t>(e.dst)];
                    if (static_cast<std::size_t>(e.dst) == v &&
                        alive[static_cast<std::size_t>(e.src)])
                        --outdeg[static_cast<std::size_t>(e.src)];
                }
            }
        }
    }
    std::vector<int> remap(n, -1);
    int next = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (alive[v]) remap[v] = next++;
    LabeledGraph out;
    out.alphabet = g.alphabet;
    out.vertex_count = next;
    for (const auto& e : g.edges)
        if (alive[static_cast<std::size_t>(e.src)] && alive[static_cast<std::size_t>(e.dst)])
            out.edges.push_back({remap[static_cast<std::size_t>(e.src)],
                                 remap[static_cast<std::size_t>(e.dst)], e.label});
    return out;
}

bool is_trim(const LabeledGraph& g) {
    if (g.vertex_count == 0) return false;
    std::vector<int> indeg(static_cast<std::size_t>(g.vertex_count), 0),
        outdeg(static_cast<std::size_t>(g.vertex_count), 0);
    for (const auto& e : g.edges) {
        ++outdeg[static_cast<std::size_t>(e.src)];
        ++indeg[static_cast<std::size_t>(e.dst)];
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0 || outdeg[static_cast<std::size_t>(v)] == 0)
            return false;
    return true;
}

bool is_right_resolving(const LabeledGraph& g) {
    std::set<std::pair<int, char>> seen;
    for (const auto& e : g.edges)
        if (!seen.insert({e.src, e.label}).second) return false;
    return true;
}

SftSpec::SftSpec(Alphabet a, std::vector<std::string> f)
    : alphabet(std::move(a)), forbidden(std::move(f)) {
    for (const auto& w : forbidden) {
        if (w.empty()) throw ValidationError("SftSpec: forbidden words must be nonempty");
        alphabet.validate_word(w);
    }
}

namespace {

// Does any forbidden word occur as a suffix-touching factor of w (i.e. end at
// the last position)? Used when extending an already-clean word by one symbol.
bool forbidden_at_end(const std::string& w, const std::vector<std::string>& forbidden) {
    for (const auto& f : forbidden) {
        if (f.size() > w.size()) continue;
        if (w.compare(w.size() - f.size(), f.size(), f) == 0) return true;
    }
    return false;
}

} // namespace

LabeledGraph build_sft_graph(const SftSpec& spec) {
    std::size_t max_len = 0;
    for (const auto& f : spec.forbidden) max_len = std::max(max_len, f.size());
    const std::size_t m = max_len == 0 ? 0 : max_len - 1;

    const std::size_t asz = spec.alphabet.size();
    double size_est = std::pow(static_cast<double>(asz), static_cast<double>(m));
    if (size_est > static_cast<double>(std::size_t{1} << 20))
        throw ResourceError("build_sft_graph: |A|^m exceeds the state cap");

    // Enumerate allowed m-words.
    std::vector<std::string> level{""};
    for (std::size_t d = 0; d < m; ++d) {
        std::vector<std::string> next;
        for (const auto& w : level)
            for (std::size_t i = 0; i < asz; ++i) {
                std::string x = w + spec.alphabet.symbol(i);
                if (!forbidden_at_end(x, spec.forbidden)) next.push_back(std::move(x));
            }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());

    std::map<std::string, int> id;
    for (const auto& w : level) id.emplace(w, static_cast<int>(id.size()));

    LabeledGraph g;
    g.alphabet = spec.alphabet;
    g.vertex_count = static_cast<int>(level.size());
    for (const auto& u : level)
        for (std::size_t i = 0; i < asz; ++i) {
            const char a = spec.alphabet.symbol(i);
            std::string w = u + a;
            if (forbidden_at_end(w, spec.forbidden)) continue;
            std::string v = w.substr(w.size() - m, m);
            auto it = id.find(v);
            if (it == id.end()) continue;
            g.edges.push_back({id.at(u), it->second, a});
        }
    g = trim(g);
    if (g.vertex_count == 0)
        throw EmptyShiftError("build_sft_graph: the forbidden set defines an empty shift");
    canonicalize(g);
    return g;
}

namespace {

// Deterministic successor of a vertex subset under one symbol.
std::vector<int> subset_step(const LabeledGraph& g, const std::vector<std::vector<int>>& out,
                             const std::vector<int>& subset, char label) {
    std::set<int> next;
    for (int v : subset)
        for (int ei : out[static_cast<std::size_t>(v)]) {
            const auto& e = g.edges[static_cast<std::size_t>(ei)];
            if (e.label == label) next.insert(e.dst);
        }
    return {next.begin(), next.end()};
}

} // namespace

LabeledGraph determinize_trim(const LabeledGraph& g0, std::size_t max_states) {
    LabeledGraph g = trim(g0);
    if (g.vertex_count == 0) throw EmptyShiftError("determinize_trim: empty presentation");
    auto out = detail::out_adjacency(g);

    std::vector<int> initial(static_cast<std::size_t>(g.vertex_count));
    std::iota(initial.begin(), initial.end(), 0);

    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> states;
    std::deque<int> queue;
    id.emplace(initial, 0);
    states.push_back(initial);
    queue.push_back(0);

    LabeledGraph d;
    d.alphabet = g.alphabet;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < g.alphabet.size(); ++i) {
            const char a = g.alphabet.symbol(i);
            auto t = subset_step(g, out, states[static_cast<std::size_t>(s)], a);
            if (t.empty()) continue;
            auto [it, fresh] = id.emplace(t, static_cast<int>(states.size()));
            if (fresh) {
                if (states.size() >= max_states)
                    throw ResourceError("determinize_trim: subset state cap exceeded");
                states.push_back(t);
                queue.push_back(it->second);
            }
            d.edges.push_back({s, it->second, a});
        }
    }
    d.vertex_count = static_cast<int>(states.size());
    d = trim(d);
    if (d.vertex_count == 0)
        throw InternalError("determinize_trim: trimmed determinization is empty");
    canonicalize(d);
    return d;
}

std::vector<std::string> language_n(const LabeledGraph& g, std::size_t n) {
    if (n == 0) return {""};
    if (g.vertex_count == 0) throw EmptyShiftError("language_n: empty graph");
    auto out = detail::out_adjacency(g);
    std::map<std::string, std::set<int>> level;
    std::set<int> all;
    for (int v = 0; v < g.vertex_count; ++v) all.insert(v);
    level.emplace("", std::move(all));
    for (std::size_t d = 0; d < n; ++d) {
        std::map<std::string, std::set<int>> next;
        for (const auto& [w, ends] : level)
            for (int v : ends)
                for (int ei : out[static_cast<std::size_t>(v)]) {
                    const auto& e = g.edges[static_cast<std::size_t>(ei)];
                    next[w + e.label].insert(e.dst);
                }
        level = std::move(next);
    }
    std::vector<std::string> words;
    words.reserve(level.size());
    for (const auto& [w, _] : level) words.push_back(w);
    return words;
}

BigInt language_count(const LabeledGraph& g, std::size_t n) {
    if (g.vertex_count == 0) throw EmptyShiftError("language_count: empty graph");
    auto out = detail::out_adjacency(g);
    // Powerset automaton explored lazily; counts paths from the initial state.
    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> states;
    std::vector<std::vector<int>> succ; // per state: list of successor state ids
    std::vector<int> initial(static_cast<std::size_t>(g.vertex_count));
    std::iota(initial.begin(), initial.end(), 0);
    id.emplace(initial, 0);
    states.push_back(initial);

    std::vector<BigInt> cur{1};
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<BigInt> next(states.size(), BigInt(0));
        for (std::size_t s = 0; s < cur.size(); ++s) {
            if (cur[s].is_zero()) continue;
            if (s >= succ.size()) succ.resize(s + 1);
            if (succ[s].empty()) {
                for (std::size_t i = 0; i < g.alphabet.size(); ++i) {
                    auto t = subset_step(g, out, states[s], g.alphabet.symbol(i));
                    if (t.empty()) continue;
                    auto [it, fresh] = id.emplace(t, static_cast<int>(states.size()));
                    if (fresh) states.push_back(t);
                    succ[s].push_back(it->second);
                }
            }
            for (int t : succ[s]) {
                if (static_cast<std::size_t>(t) >= next.size()) next.resize(states.size(), BigInt(0));
                next[static_cast<std::size_t>(t)] += cur[s];
            }
        }
        next.resize(states.size(), BigInt(0));
        cur = std::move(next);
    }
    BigInt total = 0;
    for (const auto& c : cur) total += c;
    return total;
}

bool word_in_language(const LabeledGraph& g, const std::string& w) {
    if (g.vertex_count == 0) return false;
    auto out = detail::out_adjacency(g);
    std::vector<int> cur(static_cast<std::size_t>(g.vertex_count));
    std::iota(cur.begin(), cur.end(), 0);
    for (char c : w) {
        cur = subset_step(g, out, cur, c);
        if (cur.empty()) return false;
    }
    return true;
}

GraphClassification classify_graph(const LabeledGraph& g) {
    if (g.vertex_count == 0) throw ValidationError("classify_graph: empty graph");
    LabeledGraph t = trim(g);
    GraphClassification c;
    c.is_trim_nonempty = t.vertex_count > 0;
    if (!c.is_trim_nonempty) return c;

    int comps = 0;
    auto comp = detail::strongly_connected_components(t, &comps);
    c.is_transitive = comps == 1;

    // Period = gcd of cycle lengths, computed per component from BFS level
    // differences along intra-component edges.
    auto out = detail::out_adjacency(t);
    std::vector<long long> level(static_cast<std::size_t>(t.vertex_count), -1);
    long long period = 0;
    for (int cid = 0; cid < comps; ++cid) {
        int root = -1;
        for (int v = 0; v < t.vertex_count && root < 0; ++v)
            if (comp[static_cast<std::size_t>(v)] == cid) root = v;
        std::deque<int> q{root};
        level[static_cast<std::size_t>(root)] = 0;
        bool has_edge = false;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int ei : out[static_cast<std::size_t>(v)]) {
                const auto& e = t.edges[static_cast<std::size_t>(ei)];
                if (comp[static_cast<std::size_t>(e.dst)] != cid) continue;
                has_edge = true;
                if (level[static_cast<std::size_t>(e.dst)] < 0) {
                    level[static_cast<std::size_t>(e.dst)] = level[static_cast<std::size_t>(v)] + 1;
                    q.push_back(e.dst);
                }
            }
        }
        if (!has_edge) continue;
        long long comp_gcd = 0;
        for (const auto& e : t.edges) {
            if (comp[static_cast<std::size_t>(e.src)] != cid ||
                comp[static_cast<std::size_t>(e.dst)] != cid)
                continue;
            long long d = level[static_cast<std::size_t>(e.src)] + 1 -
                          level[static_cast<std::size_t>(e.dst)];
            comp_gcd = std::gcd(comp_gcd, std::abs(d));
        }
        if (comp_gcd > 0) period = std::gcd(period, comp_gcd);
    }
    c.period = period;
    c.is_mixing = c.is_transitive && period == 1;
    return c;
}

std::optional<long long> specification_constant(const LabeledGraph& g, long long k_max) {
    if (!is_trim(g)) throw ValidationError("specification_constant: graph must be trimmed");
    if (!is_right_resolving(g))
        throw ValidationError("specification_constant: graph must be right-resolving");
    auto cls = classify_graph(g);
    if (!cls.is_mixing)
        throw ValidationError("specification_constant: not mixing (no uniform bridge length exists)");

    const auto n = static_cast<std::size_t>(g.vertex_count);
    auto out = detail::out_adjacency(g);

    // All reachable follower sets F(u) (forward powerset states from the full
    // vertex set) and all "initial" sets I(w) of starting vertices reading w
    // (powerset states of the edge-reversed graph). Whether uvw is in the
    // language depends on (u, w) only through the pair (F(u), I(w)).
    auto collect = [&](const LabeledGraph& h) {
        auto hout = detail::out_adjacency(h);
        std::set<std::vector<int>> seen;
        std::deque<std::vector<int>> q;
        std::vector<int> full(static_cast<std::size_t>(h.vertex_count));
        std::iota(full.begin(), full.end(), 0);
        seen.insert(full);
        q.push_back(full);
        while (!q.empty()) {
            auto s = q.front();
            q.pop_front();
            for (std::size_t i = 0; i < h.alphabet.size(); ++i) {
                auto t = subset_step(h, hout, s, h.alphabet.symbol(i));
                if (t.empty()) continue;
                if (seen.insert(t).second) {
                    if (seen.size() > (std::size_t{1} << 20))
                        throw ResourceError("specification_constant: subset family cap exceeded");
                    q.push_back(t);
                }
            }
        }
        return std::vector<std::vector<int>>(seen.begin(), seen.end());
    };

    LabeledGraph rev = g;
    for (auto& e : rev.edges) std::swap(e.src, e.dst);
    auto followers = collect(g);
    auto initials = collect(rev);

    // reach[v] = set of vertices reachable from v in exactly k steps.
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t v = 0; v < n; ++v) reach[v][v] = 1; // k = 0
    for (long long k = 0; k <= k_max; ++k) {
        bool all_ok = true;
        for (const auto& F : followers) {
            std::vector<char> from(n, 0);
            for (int p : F)
                for (std::size_t q2 = 0; q2 < n; ++q2)
                    if (reach[static_cast<std::size_t>(p)][q2]) from[q2] = 1;
            for (const auto& I : initials) {
                bool hit = false;
                for (int q2 : I)
                    if (from[static_cast<std::size_t>(q2)]) { hit = true; break; }
                if (!hit) { all_ok = false; break; }
            }
            if (!all_ok) break;
        }
        if (all_ok) return k;
        // Advance reach by one step.
        std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u)
                if (reach[v][u])
                    for (int ei : out[u]) {
                        const auto& e = g.edges[static_cast<std::size_t>(ei)];
                        next[v][static_cast<std::size_t>(e.dst)] = 1;
                    }
        reach = std::move(next);
    }
    return std::nullopt;
}

double topological_entropy(const LabeledGraph& g0) {
    LabeledGraph g = trim(g0);
    if (g.vertex_count == 0) throw EmptyShiftError("topological_entropy: empty graph");
    if (!is_right_resolving(g))
        throw ValidationError("topological_entropy: requires a right-resolving presentation");

    int comps = 0;
    auto comp = detail::strongly_connected_components(g, &comps);

    double best = 0.0; // spectral radius is at least 1 on a trimmed graph
    for (int cid = 0; cid < comps; ++cid) {
        std::vector<int> verts;
        for (int v = 0; v < g.vertex_count; ++v)
            if (comp[static_cast<std::size_t>(v)] == cid) verts.push_back(v);
        std::vector<int> local(static_cast<std::size_t>(g.vertex_count), -1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
        const std::size_t m = verts.size();
        std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
        std::size_t edge_count = 0;
        for (const auto& e : g.edges) {
            int ls = local[static_cast<std::size_t>(e.src)], ld = local[static_cast<std::size_t>(e.dst)];
            if (ls >= 0 && ld >= 0) {
                a[static_cast<std::size_t>(ls)][static_cast<std::size_t>(ld)] += 1.0;
                ++edge_count;
            }
        }
        if (edge_count == 0) continue;
        if (edge_count == m) {
            // Every vertex has exactly one intra-component edge: a pure cycle.
            bool cycle = true;
            for (std::size_t r = 0; r < m && cycle; ++r) {
                double s = 0;
                for (std::size_t c2 = 0; c2 < m; ++c2) s += a[r][c2];
                if (s != 1.0) cycle = false;
            }
            if (cycle) {
                best = std::max(best, 1.0);
                continue;
            }
        }
        // Power iteration on A + I (primitive on an irreducible component).
        // Collatz–Wielandt quotients give two-sided bounds on the radius.
        std::vector<double> x(m, 1.0);
        double lo = 0.0, hi = 0.0;
        for (int it = 0; it < 200000; ++it) {
            std::vector<double> y(m, 0.0);
            for (std::size_t r = 0; r < m; ++r) {
                double s = x[r]; // the +I part
                for (std::size_t c2 = 0; c2 < m; ++c2) s += a[r][c2] * x[c2];
                y[r] = s;
            }
            lo = 1e300;
            hi = 0.0;
            for (std::size_t r = 0; r < m; ++r) {
                double q = y[r] / x[r];
                lo = std::min(lo, q);
                hi = std::max(hi, q);
            }
            double norm = 0.0;
            for (double v : y) norm = std::max(norm, v);
            for (std::size_t r = 0; r < m; ++r) x[r] = y[r] / norm;
            if (hi - lo <= 1e-12 * hi) break;
        }
        best = std::max(best, 0.5 * (lo + hi) - 1.0);
    }
    if (best < 1.0)
        throw InternalError("topological_entropy: trimmed graph without a cycle");
    return std::log(best);
}

DfaView::DfaView(const LabeledGraph& g) : g_(&g) {
    if (!is_right_resolving(g)) throw ValidationError("DfaView: graph is not right-resolving");
    table_.assign(static_cast<std::size_t>(g.vertex_count) * g.alphabet.size(), -1);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        int li = g.alphabet.index(e.label);
        if (li < 0) throw ValidationError("DfaView: edge label outside alphabet");
        table_[static_cast<std::size_t>(e.src) * g.alphabet.size() + static_cast<std::size_t>(li)] =
            static_cast<int>(i);
    }
}

int DfaView::step_edge(int v, char label) const {
    int li = g_->alphabet.index(label);
    if (li < 0) return -1;
    return table_[static_cast<std::size_t>(v) * g_->alphabet.size() + static_cast<std::size_t>(li)];
}

int DfaView::step(int v, char label) const {
    int ei = step_edge(v, label);
    return ei < 0 ? -1 : g_->edges[static_cast<std::size_t>(ei)].dst;
}

std::optional<int> DfaView::run(int v, const std::string& w) const {
    int cur = v;
    for (char c : w) {
        cur = step(cur, c);
        if (cur < 0) return std::nullopt;
    }
    return cur;
}

} // namespace shiftlab
