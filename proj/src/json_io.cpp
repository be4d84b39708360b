/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/json_io.hpp"

#include "shiftlab/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace shiftlab {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string format_double(double v) {
    // Shortest decimal that round-trips.
    for (int prec = 1; prec <= 17; ++prec) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return std::to_string(v);
}

std::string graph_to_json(const LabeledGraph& g0) {
    LabeledGraph g = g0;
    canonicalize(g);
    ordered j;
    j["alphabet"] = g.alphabet.symbols();
    j["vertices"] = g.vertex_count;
    ordered edges = ordered::array();
    for (const auto& e : g.edges)
        edges.push_back(ordered::array({e.src, e.dst, std::string(1, e.label)}));
    j["edges"] = std::move(edges);
    return j.dump();
}

LabeledGraph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("graph JSON: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("alphabet") || !j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("graph JSON: need fields alphabet, vertices, edges");
    LabeledGraph g;
    g.alphabet = Alphabet(j["alphabet"].get<std::string>());
    g.vertex_count = j["vertices"].get<int>();
    if (g.vertex_count < 0) throw ValidationError("graph JSON: negative vertex count");
    for (const auto& ej : j["edges"]) {
        if (!ej.is_array() || ej.size() != 3)
            throw ValidationError("graph JSON: edge must be [src, dst, \"label\"]");
        LabeledGraph::Edge e;
        e.src = ej[0].get<int>();
        e.dst = ej[1].get<int>();
        auto lab = ej[2].get<std::string>();
        if (lab.size() != 1) throw ValidationError("graph JSON: labels are single symbols");
        e.label = lab[0];
        if (e.src < 0 || e.src >= g.vertex_count || e.dst < 0 || e.dst >= g.vertex_count)
            throw ValidationError("graph JSON: edge endpoint out of range");
        if (!g.alphabet.contains(e.label))
            throw ValidationError("graph JSON: edge label outside the alphabet");
        g.edges.push_back(e);
    }
    canonicalize(g);
    return g;
}

LabeledGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_json(ss.str());
}

void save_graph(const LabeledGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write graph file: " + path);
    out << graph_to_json(g) << "\n";
}

std::string block_distribution_to_json(const BlockDistribution& bd) {
    ordered j;
    for (const auto& [w, p] : bd.probs) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g", p);
        j[w] = std::string(buf);
    }
    return j.dump();
}

std::string certificate_to_json(const Certificate& c) {
    ordered j;
    j["claim"] = c.claim;
    j["value"] = c.value;
    ordered w = ordered::object();
    for (const auto& [k, v] : c.witnesses) w[k] = v;
    j["witnesses"] = std::move(w);
    ordered x = ordered::array();
    for (const auto& [method, v] : c.cross_checks)
        x.push_back(ordered::object({{"method", method}, {"value", v}}));
    j["cross_checks"] = std::move(x);
    return j.dump(2);
}

} // namespace shiftlab
