/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "shiftlab/approx.hpp"
#include "shiftlab/bfree.hpp"
#include "shiftlab/graph.hpp"
#include "shiftlab/sgap.hpp"
#include "shiftlab/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace shiftlab {

/// Declarative description of a shift space; the CLI's input schema.
/// Every kind compiles to a labelled-graph presentation.
struct ShiftSpec {
    struct Sft {
        Alphabet alphabet;
        std::vector<std::string> forbidden;
    };
    struct GraphFile {
        std::string path;
    };
    struct BFree {
        BSet b = BSet::explicit_list({});
        std::uint64_t truncation = 0; // 0 = use the full finite list
    };
    struct SGap {
        std::vector<std::uint64_t> gaps;
    };
    struct HereditaryOrbit {
        std::string point_text; // PeriodicPoint syntax over {0,1}
    };

    std::variant<Sft, GraphFile, BFree, SGap, HereditaryOrbit> payload;

    std::string kind() const;

    /// Loads a ShiftSpec from its JSON file representation.
    static ShiftSpec load(const std::string& path);
    static ShiftSpec from_json_text(const std::string& text, const std::string& base_dir);

    /// Compiles to a trimmed labelled-graph presentation.
    LabeledGraph to_graph() const;

    /// Oracle for L_n queries against the presented shift.
    LanguageOracle make_oracle() const;
};

} // namespace shiftlab
