/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/approx.hpp"

#include "shiftlab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace shiftlab {

LanguageOracle::LanguageOracle(LabeledGraph g, std::string description)
    : graph_(trim(g)), description_(std::move(description)),
      mutex_(std::make_unique<std::mutex>()) {
    if (graph_.vertex_count == 0) throw EmptyShiftError("LanguageOracle: empty presentation");
}

const std::vector<std::string>& LanguageOracle::language(std::size_t n) const {
    {
        std::lock_guard<std::mutex> lock(*mutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
    }
    auto words = language_n(graph_, n);
    std::lock_guard<std::mutex> lock(*mutex_);
    return cache_.emplace(n, std::move(words)).first->second;
}

bool LanguageOracle::contains(const std::string& w) const {
    const auto& lang = language(w.size());
    return std::binary_search(lang.begin(), lang.end(), w);
}

LabeledGraph rauzy_graph(const LanguageOracle& oracle, std::size_t n) {
    if (n == 0) throw ValidationError("rauzy_graph: order must be >= 1");
    const auto& vn = oracle.language(n);
    const auto& en = oracle.language(n + 1);
    std::map<std::string, int> id;
    for (const auto& w : vn) id.emplace(w, static_cast<int>(id.size()));

    LabeledGraph g;
    g.alphabet = oracle.graph().alphabet;
    g.vertex_count = static_cast<int>(vn.size());
    for (const auto& w : en) {
        auto src = id.find(w.substr(0, n));
        auto dst = id.find(w.substr(1, n));
        if (src == id.end() || dst == id.end())
            throw InternalError("rauzy_graph: oracle language is not factorial");
        g.edges.push_back({src->second, dst->second, w[0]});
    }
    g = trim(g);
    if (g.vertex_count == 0) throw InternalError("rauzy_graph: trimmed Rauzy graph is empty");
    canonicalize(g);
    return g;
}

namespace {

// One period of glue constraints: forced symbols interleaved with free
// bridge positions of length k after each word's trimmed prefix.
struct GluePlan {
    std::string forced;      // '\0' marks a free position
    std::vector<std::size_t> word_starts;
};

GluePlan make_plan(const std::vector<std::string>& words, long long k) {
    GluePlan plan;
    for (const auto& w : words) {
        plan.word_starts.push_back(plan.forced.size());
        plan.forced += w.substr(0, w.size() - static_cast<std::size_t>(k));
        plan.forced.append(static_cast<std::size_t>(k), '\0');
    }
    return plan;
}

// Per-layer sets of vertices from which the remaining constraint suffix can
// be completed to reach `target` at the end of the plan.
std::vector<std::vector<char>> backward_feasible(const LabeledGraph& g, const std::string& forced,
                                                 const std::vector<char>& target) {
    const auto n = static_cast<std::size_t>(g.vertex_count);
    std::vector<std::vector<char>> feas(forced.size() + 1, std::vector<char>(n, 0));
    feas.back() = target;
    for (std::size_t layer = forced.size(); layer-- > 0;) {
        for (const auto& e : g.edges) {
            if (forced[layer] != '\0' && forced[layer] != e.label) continue;
            if (feas[layer + 1][static_cast<std::size_t>(e.dst)])
                feas[layer][static_cast<std::size_t>(e.src)] = 1;
        }
    }
    return feas;
}

} // namespace

PeriodicPoint glue_with_specification(const LabeledGraph& g, long long k,
                                      const std::vector<std::string>& words, bool cycle) {
    if (words.empty()) throw ValidationError("glue_with_specification: empty word list");
    if (k < 0) throw ValidationError("glue_with_specification: negative k");
    if (!is_trim(g)) throw ValidationError("glue_with_specification: graph must be trimmed");
    DfaView dfa(g); // also enforces right-resolving
    for (const auto& w : words) {
        if (w.size() < static_cast<std::size_t>(k) + 1)
            throw ValidationError("glue_with_specification: word shorter than k + 1");
        if (!word_in_language(g, w))
            throw ValidationError("glue_with_specification: word '" + w + "' not in the language");
    }

    const auto n = static_cast<std::size_t>(g.vertex_count);

    // Greedy forward walk through the plan constrained to stay feasible;
    // lexicographically smallest labels, fixed by the alphabet order.
    auto realize = [&](const GluePlan& plan, const std::vector<std::vector<char>>& feas, int v,
                       std::string& out_labels) -> int {
        for (std::size_t layer = 0; layer < plan.forced.size(); ++layer) {
            int chosen = -1;
            for (std::size_t i = 0; i < g.alphabet.size() && chosen < 0; ++i) {
                const char c = g.alphabet.symbol(i);
                if (plan.forced[layer] != '\0' && plan.forced[layer] != c) continue;
                int ei = dfa.step_edge(v, c);
                if (ei >= 0 &&
                    feas[layer + 1][static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].dst)])
                    chosen = ei;
            }
            if (chosen < 0)
                throw InternalError("glue_with_specification: lost feasibility mid-walk");
            out_labels.push_back(g.edges[static_cast<std::size_t>(chosen)].label);
            v = g.edges[static_cast<std::size_t>(chosen)].dst;
        }
        return v;
    };

    // A closed pass may need to wrap the word list more than once before it
    // returns to its starting vertex; some wrap count <= |V| always works
    // when k bridges the presentation.
    const std::vector<std::string> cycle_words =
        cycle ? words : std::vector<std::string>{words.back()};
    std::string period;
    int cycle_start = -1;
    for (int wraps = 1; wraps <= g.vertex_count && cycle_start < 0; ++wraps) {
        std::vector<std::string> repeated;
        for (int c = 0; c < wraps; ++c)
            repeated.insert(repeated.end(), cycle_words.begin(), cycle_words.end());
        GluePlan plan = make_plan(repeated, k);
        for (int v = 0; v < g.vertex_count && cycle_start < 0; ++v) {
            std::vector<char> target(n, 0);
            target[static_cast<std::size_t>(v)] = 1;
            auto feas = backward_feasible(g, plan.forced, target);
            if (!feas[0][static_cast<std::size_t>(v)]) continue;
            period.clear();
            if (realize(plan, feas, v, period) != v)
                throw InternalError("glue_with_specification: realized walk missed its target");
            cycle_start = v;
        }
    }
    if (cycle_start < 0)
        throw InternalError("glue_with_specification: no length-k bridges close any cycle; "
                            "k is not a specification constant for this presentation");

    if (cycle) return {g.alphabet, "", period};

    // cycle == false: glue all but the last word once, ending at the vertex
    // where the repeated last word starts.
    std::string preperiod;
    if (words.size() > 1) {
        GluePlan pre_plan = make_plan({words.begin(), words.end() - 1}, k);
        std::vector<char> target(n, 0);
        target[static_cast<std::size_t>(cycle_start)] = 1;
        auto feas = backward_feasible(g, pre_plan.forced, target);
        int v = -1;
        for (int s = 0; s < g.vertex_count && v < 0; ++s)
            if (feas[0][static_cast<std::size_t>(s)]) v = s;
        if (v < 0)
            throw InternalError("glue_with_specification: cannot connect preperiod to the cycle");
        realize(pre_plan, feas, v, preperiod);
    }
    return {g.alphabet, preperiod, period};
}

PeriodicPoint project_markov_point(const PeriodicPoint& x, const LanguageOracle& target_oracle,
                                   const LabeledGraph& g_target, long long k, std::size_t n) {
    if (n < static_cast<std::size_t>(k) + 1)
        throw ValidationError("project_markov_point: require n >= k + 1");
    if (!x.preperiod().empty())
        throw ValidationError("project_markov_point: input must be purely periodic");
    if (x.alphabet() != g_target.alphabet)
        throw ValidationError("project_markov_point: alphabet mismatch");

    // Membership of x in X^M_n: every (n+1)-window of the periodic stream
    // must be a word of the target shift.
    const std::size_t p = x.period().size();
    for (std::size_t i = 0; i < p; ++i) {
        Word w = subword(x, i, i + n + 1);
        if (!target_oracle.contains(w.text))
            throw ValidationError("project_markov_point: window '" + w.text +
                                  "' not in L_{n+1}; input is not in the n-th Markov approximation");
    }

    const std::size_t span = std::lcm(p, n);
    std::vector<std::string> blocks;
    for (std::size_t j = 0; j * n < span; ++j) blocks.push_back(subword(x, j * n, (j + 1) * n).text);
    return glue_with_specification(g_target, k, blocks, /*cycle=*/true);
}

} // namespace shiftlab
