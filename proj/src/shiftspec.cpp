/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/shiftspec.hpp"

#include "shiftlab/errors.hpp"
#include "shiftlab/json_io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace shiftlab {

using nlohmann::json;

std::string ShiftSpec::kind() const {
    struct Visitor {
        std::string operator()(const Sft&) const { return "sft"; }
        std::string operator()(const GraphFile&) const { return "graph"; }
        std::string operator()(const BFree&) const { return "bfree"; }
        std::string operator()(const SGap&) const { return "sgap"; }
        std::string operator()(const HereditaryOrbit&) const { return "hereditary-orbit"; }
    };
    return std::visit(Visitor{}, payload);
}

ShiftSpec ShiftSpec::from_json_text(const std::string& text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("ShiftSpec: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind"))
        throw ValidationError("ShiftSpec: missing \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    ShiftSpec spec;
    if (kind == "sft") {
        Sft s{Alphabet(j.at("alphabet").get<std::string>()),
              j.at("forbidden").get<std::vector<std::string>>()};
        spec.payload = std::move(s);
    } else if (kind == "graph") {
        auto path = j.at("file").get<std::string>();
        if (!path.empty() && path[0] != '/' && !base_dir.empty())
            path = (std::filesystem::path(base_dir) / path).string();
        spec.payload = GraphFile{path};
    } else if (kind == "bfree") {
        BFree b;
        if (j.contains("generators"))
            b.b = BSet::explicit_list(j["generators"].get<std::vector<std::uint64_t>>());
        else if (j.contains("stream")) {
            auto s = j["stream"].get<std::string>();
            if (s == "squares-of-primes")
                b.b = BSet::prime_squares();
            else
                throw ValidationError("ShiftSpec: unknown bfree stream '" + s + "'");
            if (!j.contains("truncation"))
                throw ValidationError("ShiftSpec: bfree stream needs a truncation");
        } else {
            throw ValidationError("ShiftSpec: bfree needs generators or stream");
        }
        if (j.contains("truncation")) b.truncation = j["truncation"].get<std::uint64_t>();
        spec.payload = std::move(b);
    } else if (kind == "sgap") {
        spec.payload = SGap{j.at("gaps").get<std::vector<std::uint64_t>>()};
    } else if (kind == "hereditary-orbit") {
        spec.payload = HereditaryOrbit{j.at("point").get<std::string>()};
    } else {
        throw ValidationError("ShiftSpec: unknown kind '" + kind + "'");
    }
    return spec;
}

ShiftSpec ShiftSpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), std::filesystem::path(path).parent_path().string());
}

LabeledGraph ShiftSpec::to_graph() const {
    struct Visitor {
        LabeledGraph operator()(const Sft& s) const {
            return build_sft_graph(SftSpec(s.alphabet, s.forbidden));
        }
        LabeledGraph operator()(const GraphFile& s) const {
            LabeledGraph g = trim(load_graph(s.path));
            if (g.vertex_count == 0) throw EmptyShiftError("ShiftSpec: graph trims to empty");
            return g;
        }
        LabeledGraph operator()(const BFree& s) const {
            std::uint64_t period = 1;
            std::vector<std::uint64_t> gens =
                s.truncation == 0 ? s.b.generators()
                                  : [&] {
                                        auto all = s.b.generators_up_to(std::uint64_t{1} << 22);
                                        if (all.size() > s.truncation) all.resize(s.truncation);
                                        return all;
                                    }();
            for (auto g : gens) {
                period = std::lcm(period, g);
                if (period > (std::uint64_t{1} << 22))
                    throw ResourceError("ShiftSpec: bfree indicator period exceeds 2^22");
            }
            Word eta = bfree_indicator(BSet::explicit_list(gens), period);
            return hereditary_orbit_graph(PeriodicPoint(Alphabet::binary(), "", eta.text));
        }
        LabeledGraph operator()(const SGap& s) const { return sgap_graph(SGapSet(s.gaps)); }
        LabeledGraph operator()(const HereditaryOrbit& s) const {
            return hereditary_orbit_graph(PeriodicPoint::parse(s.point_text, Alphabet::binary()));
        }
    };
    return std::visit(Visitor{}, payload);
}

LanguageOracle ShiftSpec::make_oracle() const {
    return LanguageOracle(to_graph(), kind());
}

} // namespace shiftlab
