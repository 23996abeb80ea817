// chromind: generate the wheel-derived graph families, colour them, compute
// chromatic Zagreb / irregularity indices, run the exhaustive oracle, and
// verify the bundled closed-form table.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chromind/claims.hpp"
#include "chromind/coloring.hpp"
#include "chromind/errors.hpp"
#include "chromind/graph.hpp"
#include "chromind/indices.hpp"
#include "chromind/oracle.hpp"
#include "json.hpp"

namespace {

using namespace chromind;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

const std::string kFamilyHelp =
    "family: cycle, wheel, helm, flower, sunflower, closed_sunflower, blossom";
const std::string kTheoremHelp =
    "theorem ids: 2.1, 2.2, 3.1, 3.2, 4.1, 4.2, 5.1, 5.2, or 'all'";

Family family_arg(const std::string& name) {
    Family f;
    if (!parse_family(name, f))
        throw CLI::ValidationError("--family", "unknown family '" + name + "'");
    return f;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << content;
    if (!os) throw std::runtime_error("failed writing " + path);
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return lo >= 3 && hi >= lo;
}

int cmd_gen(const std::string& family, int n, const std::string& emit,
            const std::string& out) {
    FamilySpec spec{family_arg(family), n};
    Graph g = build(spec);
    if (emit == "dot") {
        std::string name = std::string(family_name(spec.family)) + "_" + std::to_string(n);
        write_out(out, to_dot(g, name));
    } else {
        write_out(out, to_adjacency_json(g, spec));
    }
    return kExitOk;
}

int cmd_indices(const std::string& family, int n, const std::string& variant,
                const std::string& witness) {
    FamilySpec spec{family_arg(family), n};
    Graph g = build(spec);
    Variant var;
    if (!parse_variant(variant, var))
        throw CLI::ValidationError("--variant", "expected minus or plus");

    Coloring c;
    int k = 0;
    if (!witness.empty()) {
        Index idx;
        if (!parse_index(witness, idx))
            throw CLI::ValidationError("--witness", "expected m1, m2, m3 or m4");
        c = witness_coloring(spec, var, idx);
        k = c.num_colors;
        auto bad = validate(g, c);
        if (!bad.empty()) {
            std::cerr << "witness colouring is improper on edges:";
            for (auto [a, b] : bad)
                std::cerr << " " << vertex_label(g, a) << "-" << vertex_label(g, b);
            std::cerr << "\n";
            return kExitRuntime;
        }
    } else {
        k = chromatic_number(g);
        c = var == Variant::minus ? phi_minus(g, k) : phi_plus(g, k);
    }

    IndexBundle b = bundle(g, c);
    nlohmann::json doc;
    doc["family"] = family_name(spec.family);
    doc["n"] = n;
    doc["variant"] = variant;
    doc["k"] = k;
    doc["coloring"] = c.zeta;
    doc["bundle"] = nlohmann::json::parse(bundle_json(b));
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string& family, int n, const std::string& index,
               const std::string& goal, int k) {
    FamilySpec spec{family_arg(family), n};
    Graph g = build(spec);
    OracleIndex idx;
    if (!parse_oracle_index(index, idx))
        throw CLI::ValidationError("--index", "expected m1, m2, m3, m4_std or m4_paper");
    Goal gl;
    if (!parse_goal(goal, gl))
        throw CLI::ValidationError("--goal", "expected min or max");
    if (k == 0) k = chromatic_number(g);

    Extremum e = extrema(g, k, idx, gl);
    nlohmann::json doc;
    doc["family"] = family_name(spec.family);
    doc["n"] = n;
    doc["index"] = index;
    doc["goal"] = goal;
    doc["k"] = k;
    doc["value"] = {{"num", e.value.num}, {"den", e.value.den}};
    doc["witness"] = e.witness.zeta;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& theorems, const std::string& range,
               const std::string& semantics, bool desk, const std::string& json_path,
               const std::string& text_path) {
    std::vector<ClaimResult> results;
    Semantics sem = Semantics::oracle;
    if (desk) {
        results = desk_verify_results();
    } else {
        VerifyOptions opt;
        if (!parse_semantics(semantics, sem))
            throw CLI::ValidationError("--semantics", "expected oracle, permutation or witness");
        opt.semantics = sem;
        if (!parse_range(range, opt.n_min, opt.n_max))
            throw CLI::ValidationError("--n", "expected N or A..B with 3 <= A <= B");
        std::istringstream is(theorems);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) opt.theorems.push_back(tok);
        auto known = known_theorem_ids();
        for (const auto& t : opt.theorems)
            if (t != "all" &&
                std::find(known.begin(), known.end(), t) == known.end())
                throw CLI::ValidationError("--theorems", "unknown theorem id '" + t + "'");
        results = verify(opt);
    }

    std::string text = report_text(results, sem);
    if (!text_path.empty())
        write_out(text_path, text);
    else
        std::cout << text;
    if (!json_path.empty()) write_out(json_path, report_json(results, sem));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic Zagreb / irregularity index toolkit"};
    app.require_subcommand(1);
    app.footer(kFamilyHelp + "\n" + kTheoremHelp);

    std::string family, emit = "json", out, variant = "minus", witness;
    std::string index = "m1", goal = "min", theorems = "all", range = "4..7";
    std::string semantics = "oracle", json_path, text_path;
    int n = 0, k = 0;
    bool desk = false;

    auto* gen = app.add_subcommand("gen", "emit a family graph (dot or json)");
    gen->add_option("--family", family, kFamilyHelp)->required();
    gen->add_option("--n", n, "cycle length (>= 3)")->required()->check(CLI::Range(3, 64));
    gen->add_option("--emit", emit, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    gen->add_option("--out", out, "output path (default stdout)");

    auto* ind = app.add_subcommand("indices", "index bundle of a phi or witness colouring");
    ind->add_option("--family", family, kFamilyHelp)->required();
    ind->add_option("--n", n, "cycle length (>= 3)")->required()->check(CLI::Range(3, 64));
    ind->add_option("--variant", variant, "minus or plus")
        ->check(CLI::IsMember({"minus", "plus"}));
    ind->add_option("--witness", witness,
                    "use the named witness construction (m1, m2, m3, m4) instead of phi");

    auto* orc = app.add_subcommand("oracle", "exhaustive extremum of an index");
    orc->add_option("--family", family, kFamilyHelp)->required();
    orc->add_option("--n", n, "cycle length (>= 3)")->required()->check(CLI::Range(3, 64));
    orc->add_option("--index", index, "m1, m2, m3, m4_std or m4_paper")
        ->check(CLI::IsMember({"m1", "m2", "m3", "m4_std", "m4_paper"}));
    orc->add_option("--goal", goal, "min or max")->check(CLI::IsMember({"min", "max"}));
    orc->add_option("--k", k, "palette size (default: chromatic number)")
        ->check(CLI::Range(1, 63));

    auto* ver = app.add_subcommand("verify", "check the closed-form table and write a report");
    ver->add_option("--theorems", theorems, kTheoremHelp + " (comma separated)");
    ver->add_option("--n", range, "single n or range A..B (default 4..7)");
    ver->add_option("--semantics", semantics, "oracle, permutation or witness")
        ->check(CLI::IsMember({"oracle", "permutation", "witness"}));
    ver->add_flag("--desk", desk,
                  "fixed desk-scale run: flower/sunflower 4..7, closed_sunflower 6..8, "
                  "blossom 4..5, oracle semantics");
    ver->add_option("--json", json_path, "write the JSON report here");
    ver->add_option("--text", text_path, "write the text table here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, n, emit, out);
        if (ind->parsed()) return cmd_indices(family, n, variant, witness);
        if (orc->parsed()) return cmd_oracle(family, n, index, goal, k);
        if (ver->parsed())
            return cmd_verify(theorems, range, semantics, desk, json_path, text_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
