/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/approx.hpp"
#include "shiftlab/bfree.hpp"
#include "shiftlab/corpus.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/json_io.hpp"
#include "shiftlab/measures.hpp"
#include "shiftlab/metrics.hpp"
#include "shiftlab/sgap.hpp"
#include "shiftlab/shiftspec.hpp"
#include "shiftlab/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace shiftlab;

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
    }
    if (out.empty()) throw ValidationError("expected a comma-separated list of integers");
    return out;
}

std::uint64_t parse_magnitude(const std::string& text) {
    // Accepts plain integers and scientific notation like 1e6.
    double v = std::stod(text);
    if (!(v >= 1 && v <= 9e18)) throw ValidationError("magnitude out of range: " + text);
    return static_cast<std::uint64_t>(v + 0.5);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto k = std::stoull(text);
        return {k, k};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
}

BSet parse_bset(const std::string& text) {
    if (text == "squares-of-primes") return BSet::prime_squares();
    if (text.rfind("arithmetic:", 0) == 0) {
        auto rest = text.substr(11);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw ValidationError("arithmetic stream syntax: arithmetic:first:step");
        return BSet::arithmetic(std::stoull(rest.substr(0, colon)),
                                std::stoull(rest.substr(colon + 1)));
    }
    return BSet::explicit_list(parse_uint_list(text));
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write output file: " + path);
    out << text << "\n";
}

int cmd_rauzy(const std::string& spec_path, std::size_t order, const std::string& emit) {
    auto oracle = ShiftSpec::load(spec_path).make_oracle();
    LabeledGraph g = rauzy_graph(oracle, order);
    write_output(graph_to_json(g), emit);
    return 0;
}

int cmd_dist_point_sofic(const std::string& point_text, const std::string& graph_path,
                         const std::string& emit) {
    LabeledGraph g = load_graph(graph_path);
    PeriodicPoint p = PeriodicPoint::parse(point_text, g.alphabet);
    auto cert_data = dist_point_to_sofic_cert(p, g);
    ExactRational envelope = dist_lower_envelope(p, g, 8);
    ExactRational upper = mismatch_density(p, cert_data.witness);

    Certificate c;
    c.claim = "inf over x in X(g) of dbar(" + p.to_string() + ", x)";
    c.value = cert_data.value.to_string();
    std::string cyc;
    for (const auto& [phase, vertex] : cert_data.cycle)
        cyc += "(" + std::to_string(phase) + "," + std::to_string(vertex) + ")";
    c.witnesses.emplace_back("optimal_product_cycle", cyc);
    c.witnesses.emplace_back("nearest_shift_point", cert_data.witness.to_string());
    c.cross_checks.emplace_back("lower_envelope_horizon_8", envelope.to_string());
    c.cross_checks.emplace_back("upper_witness_density", upper.to_string());
    if (!(envelope <= cert_data.value && cert_data.value <= upper))
        throw InternalError("dist certificate cross-checks disagree");
    write_output(certificate_to_json(c), emit);
    return 0;
}

int cmd_de_table(const std::string& gens, const std::string& krange, const std::string& nmag,
                 const std::string& csv_path) {
    auto [klo, khi] = parse_range(krange);
    auto rows = de_table(parse_bset(gens), klo, khi, parse_magnitude(nmag));
    std::string csv = "k,deficiency,tail_bound\n";
    for (const auto& row : rows)
        csv += std::to_string(row.k) + "," + row.deficiency.to_string() + "," +
               row.tail_bound.to_string() + "\n";
    if (csv_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(csv_path);
        if (!out) throw ValidationError("cannot write csv file: " + csv_path);
        out << csv;
    }
    return 0;
}

int cmd_inner_approx(const std::string& s_text, std::size_t k, const std::string& gaps_text,
                     const std::string& emit) {
    SGapSet s(parse_uint_list(s_text));
    auto result = inner_approx_point(parse_uint_list(gaps_text), s, k);
    Certificate c;
    c.claim = "inner approximation surgery into X_{S[" + std::to_string(k) + "]}";
    c.value = result.sup_realized.to_string();
    c.witnesses.emplace_back("point", result.point.to_string());
    c.witnesses.emplace_back("s_max", std::to_string(result.s_max));
    c.witnesses.emplace_back("frobenius_L", std::to_string(result.frobenius));
    for (const auto& gap : result.per_gap) {
        c.cross_checks.emplace_back("gap_" + std::to_string(gap.gap) + "_realized",
                                    gap.realized.to_string());
        c.cross_checks.emplace_back("gap_" + std::to_string(gap.gap) + "_formula_bound",
                                    gap.formula_bound.to_string());
    }
    write_output(certificate_to_json(c), emit);
    return 0;
}

int cmd_parry(const std::string& graph_path, int blocks, const std::string& emit) {
    LabeledGraph g = load_graph(graph_path);
    MarkovMeasure m = parry_measure(trim(g));
    std::string out = "{\n  \"entropy\": \"" + format_double(markov_entropy(m)) +
                      "\",\n  \"topological_entropy\": \"" + format_double(topological_entropy(g)) +
                      "\"";
    if (blocks > 0)
        out += ",\n  \"blocks\": " + block_distribution_to_json(block_distribution(m, blocks));
    out += "\n}";
    write_output(out, emit);
    return 0;
}

int cmd_verify(const std::string& id, std::uint64_t seed) {
    auto result = verify::run(id, seed);
    for (const auto& cert : result.certificates) {
        std::cout << (result.pass ? "PASS " : "FAIL ") << cert.claim << "\n";
        std::cout << certificate_to_json(cert) << "\n";
    }
    std::cout << (result.pass ? "PASS" : "FAIL") << " " << result.id << "\n";
    return result.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shiftlab: shift spaces, d-bar distances, and approximation schemes"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for sampled suites (default 0)");

    std::string spec_path, graph_path, point_text, emit, csv_path, gens, krange = "1..20",
                nmag = "1e6", s_text, gaps_text, verify_id;
    std::size_t order = 1, trunc_k = 1;
    int blocks = 0;

    auto* approx = app.add_subcommand("approx", "Markov/Rauzy approximations");
    auto* rauzy = approx->add_subcommand("rauzy", "emit the n-th Rauzy graph of a shift spec");
    rauzy->add_option("--spec", spec_path, "ShiftSpec JSON file")->required();
    rauzy->add_option("--order", order, "approximation order n >= 1")->required();
    rauzy->add_option("--emit", emit, "output graph JSON path (default stdout)");

    auto* dist = app.add_subcommand("dist", "exact d-bar distances");
    auto* ps = dist->add_subcommand("point-sofic", "distance from a periodic point to a sofic shift");
    ps->add_option("--point", point_text, "periodic point, e.g. \"10(100)^inf\"")->required();
    ps->add_option("--graph", graph_path, "graph JSON file")->required();
    ps->add_option("--emit", emit, "output certificate path (default stdout)");

    auto* bfree = app.add_subcommand("bfree", "B-free integers");
    auto* det = bfree->add_subcommand("de-table", "Davenport–Erdős deficiency table");
    det->add_option("--gens", gens,
                    "generators: list \"4,9,25\", \"squares-of-primes\", or "
                    "\"arithmetic:first:step\"")
        ->required();
    det->add_option("--k", krange, "truncation range, e.g. 1..30");
    det->add_option("--N", nmag, "horizon, e.g. 1e6");
    det->add_option("--csv", csv_path, "output CSV path (default stdout)");

    auto* sgap = app.add_subcommand("sgap", "S-gap shifts");
    auto* inner = sgap->add_subcommand("inner-approx", "inner d-bar approximation surgery");
    inner->add_option("--S", s_text, "gap set, e.g. \"1,2,50\"")->required();
    inner->add_option("--k", trunc_k, "truncation size")->required();
    inner->add_option("--gaps", gaps_text, "cyclic gap sequence to repair, e.g. \"50,50,2\"")
        ->required();
    inner->add_option("--emit", emit, "output certificate path (default stdout)");

    auto* measures = app.add_subcommand("measures", "Markov measures");
    auto* parry = measures->add_subcommand("parry", "Parry measure of a presentation");
    parry->add_option("--graph", graph_path, "graph JSON file")->required();
    parry->add_option("--blocks", blocks, "also emit the k-block distribution");
    parry->add_option("--emit", emit, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "re-run a pinned example verification");
    verify_cmd->add_option("id", verify_id, "one of: ex-4-nondbar, ex-6-bfree-nondbar, "
                                            "lemma-glue, sgap-surgery, de-convergence, "
                                            "parry-entropy")
        ->required();

    try {
        app.parse(argc, argv);
        if (rauzy->parsed()) return cmd_rauzy(spec_path, order, emit);
        if (ps->parsed()) return cmd_dist_point_sofic(point_text, graph_path, emit);
        if (det->parsed()) return cmd_de_table(gens, krange, nmag, csv_path);
        if (inner->parsed()) return cmd_inner_approx(s_text, trunc_k, gaps_text, emit);
        if (parry->parsed()) return cmd_parry(graph_path, blocks, emit);
        if (verify_cmd->parsed()) return cmd_verify(verify_id, seed);
        std::cerr << app.help();
        return 64;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << app.help();
        return 64;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
