#include "chromind/claims.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "chromind/errors.hpp"
#include "chromind/indices.hpp"
#include "chromind/oracle.hpp"
#include "json.hpp"

namespace chromind {

extern const char* const kClaimsData;  // embedded core/data/claims.txt

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::even: return "even";
        case Condition::odd: return "odd";
        case Condition::mod3_0: return "mod3=0";
        case Condition::mod3_1: return "mod3=1";
        case Condition::mod3_2: return "mod3=2";
    }
    return "?";
}

bool parse_condition(const std::string& s, Condition& out) {
    if (s == "even") { out = Condition::even; return true; }
    if (s == "odd") { out = Condition::odd; return true; }
    if (s == "mod3=0") { out = Condition::mod3_0; return true; }
    if (s == "mod3=1") { out = Condition::mod3_1; return true; }
    if (s == "mod3=2") { out = Condition::mod3_2; return true; }
    return false;
}

bool condition_holds(Condition c, int n) {
    switch (c) {
        case Condition::even: return n % 2 == 0;
        case Condition::odd: return n % 2 == 1;
        case Condition::mod3_0: return n % 3 == 0;
        case Condition::mod3_1: return n % 3 == 1;
        case Condition::mod3_2: return n % 3 == 2;
    }
    return false;
}

std::string Claim::source() const {
    std::string s = "Thm " + theorem + "(" + part + "), " + condition_name(condition);
    s += ": " + display;
    return s;
}

const char* semantics_name(Semantics s) {
    switch (s) {
        case Semantics::oracle: return "oracle";
        case Semantics::permutation: return "permutation";
        case Semantics::witness: return "witness";
    }
    return "?";
}

bool parse_semantics(const std::string& s, Semantics& out) {
    if (s == "oracle") { out = Semantics::oracle; return true; }
    if (s == "permutation") { out = Semantics::permutation; return true; }
    if (s == "witness") { out = Semantics::witness; return true; }
    return false;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::MATCH: return "MATCH";
        case Verdict::MISMATCH: return "MISMATCH";
        case Verdict::NONINTEGER: return "NONINTEGER";
        case Verdict::NO_WITNESS: return "NO_WITNESS";
    }
    return "?";
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool parse_ll(const std::string& s, long long& out) {
    try {
        std::size_t pos = 0;
        out = std::stoll(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

bool parse_triple(const std::string& tok, LinPoly& p) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : tok) {
        if (ch == ',') { parts.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    parts.push_back(cur);
    if (parts.size() != 3) return false;
    return parse_ll(parts[0], p.a) && parse_ll(parts[1], p.b) &&
           parse_ll(parts[2], p.d) && p.d > 0;
}

bool parse_eta_tuple(const std::string& tok, int& t, int& s, LinPoly& p) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : tok) {
        if (ch == ',') { parts.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    parts.push_back(cur);
    if (parts.size() != 5) return false;
    long long tt, ss;
    if (!parse_ll(parts[0], tt) || !parse_ll(parts[1], ss)) return false;
    t = static_cast<int>(tt);
    s = static_cast<int>(ss);
    return t >= 1 && s > t && parse_ll(parts[2], p.a) && parse_ll(parts[3], p.b) &&
           parse_ll(parts[4], p.d) && p.d > 0;
}

}  // namespace

ClaimsTable parse_claims(std::string_view text) {
    ClaimsTable table;
    std::vector<std::string> bad;
    std::istringstream stream{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        std::string trimmed = line;
        auto hash = trimmed.find('#');
        if (hash != std::string::npos) trimmed.erase(hash);
        auto toks = split_ws(trimmed);
        if (toks.empty()) continue;
        const auto reject = [&](const char* why) {
            bad.push_back("line " + std::to_string(lineno) + " (" + why + "): " + line);
        };
        if (toks[0] == "claim") {
            // claim family variant index cond c0 c1 c2 den flags thm part :: display
            if (toks.size() < 13) { reject("too few fields"); continue; }
            Claim c;
            if (!parse_family(toks[1], c.family)) { reject("bad family"); continue; }
            if (!parse_variant(toks[2], c.variant)) { reject("bad variant"); continue; }
            if (!parse_index(toks[3], c.index)) { reject("bad index"); continue; }
            if (!parse_condition(toks[4], c.condition)) { reject("bad condition"); continue; }
            if (!parse_ll(toks[5], c.numerator.c0) || !parse_ll(toks[6], c.numerator.c1) ||
                !parse_ll(toks[7], c.numerator.c2) || !parse_ll(toks[8], c.denominator) ||
                c.denominator <= 0) {
                reject("bad coefficients");
                continue;
            }
            if (toks[9] == "literal_minus") c.also_literal_minus = true;
            else if (toks[9] != "-") { reject("bad flags"); continue; }
            c.theorem = toks[10];
            c.part = toks[11];
            if (toks[12] != "::") { reject("missing display separator"); continue; }
            std::string display;
            for (std::size_t i = 13; i < toks.size(); ++i) {
                if (!display.empty()) display += " ";
                display += toks[i];
            }
            if (display.empty()) { reject("missing display"); continue; }
            c.display = display;
            table.claims.push_back(std::move(c));
        } else if (toks[0] == "wtheta" || toks[0] == "weta") {
            if (toks.size() < 6) { reject("too few fields"); continue; }
            Family family;
            Variant variant;
            Condition cond;
            if (!parse_family(toks[1], family)) { reject("bad family"); continue; }
            if (!parse_variant(toks[2], variant)) { reject("bad variant"); continue; }
            std::string group = toks[3];
            if (!parse_condition(toks[4], cond)) { reject("bad condition"); continue; }
            auto* spec = [&]() -> WitnessProfileSpec* {
                for (auto& w : table.witness_profiles)
                    if (w.family == family && w.variant == variant &&
                        w.condition == cond && w.group == group)
                        return &w;
                table.witness_profiles.push_back(
                    WitnessProfileSpec{family, variant, cond, group, {}, {}});
                return &table.witness_profiles.back();
            }();
            bool ok = true;
            for (std::size_t i = 5; i < toks.size(); ++i) {
                if (toks[0] == "wtheta") {
                    LinPoly p;
                    if (!parse_triple(toks[i], p)) { ok = false; break; }
                    spec->theta.push_back(p);
                } else {
                    int t, s;
                    LinPoly p;
                    if (!parse_eta_tuple(toks[i], t, s, p)) { ok = false; break; }
                    spec->eta.emplace_back(t, s, p);
                }
            }
            if (!ok) reject("bad table entry");
        } else {
            reject("unknown record type");
        }
    }
    if (!bad.empty())
        throw ClaimsFormatError("claims data has " + std::to_string(bad.size()) +
                                    " malformed line(s)",
                                std::move(bad));
    return table;
}

const ClaimsTable& builtin_claims_table() {
    static const ClaimsTable table = parse_claims(kClaimsData);
    return table;
}

std::vector<Claim> builtin_claims() { return builtin_claims_table().claims; }

Rat evaluate(const Claim& claim, int n) {
    if (n < 3) throw std::invalid_argument("claims are defined for n >= 3");
    if (!condition_holds(claim.condition, n))
        throw std::invalid_argument(std::string("condition ") +
                                    condition_name(claim.condition) +
                                    " does not hold at n=" + std::to_string(n));
    return Rat(claim.numerator.eval(n), claim.denominator);
}

// ---------------------------------------------------------------------------
// Display-expression parser: integers, n and n^2 terms, one factored form
// a(bn+c), and an optional global /d. Whitespace-insensitive.

namespace {

struct DisplayParser {
    const std::string& s;
    std::size_t i = 0;
    explicit DisplayParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    bool number(long long& out) {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) return false;
        out = std::stoll(s.substr(start, i - start));
        return true;
    }

    // term := [int] ['n' ['^2']] | int '(' poly ')'
    bool term(long long sign, Poly2& acc) {
        long long coef = 1;
        bool have_coef = false;
        if (peek_digit()) {
            if (!number(coef)) return false;
            have_coef = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '(') {
            if (!have_coef) return false;  // bare parens handled at top level
            ++i;
            Poly2 inner;
            if (!poly(inner)) return false;
            if (!eat(')')) return false;
            acc.c0 += sign * coef * inner.c0;
            acc.c1 += sign * coef * inner.c1;
            acc.c2 += sign * coef * inner.c2;
            return true;
        }
        if (i < s.size() && s[i] == 'n') {
            ++i;
            if (i + 1 < s.size() && s[i] == '^' && s[i + 1] == '2') {
                i += 2;
                acc.c2 += sign * coef;
            } else {
                acc.c1 += sign * coef;
            }
            return true;
        }
        if (!have_coef) return false;
        acc.c0 += sign * coef;
        return true;
    }

    bool poly(Poly2& acc) {
        long long sign = eat('-') ? -1 : 1;
        if (!term(sign, acc)) return false;
        while (true) {
            skip_ws();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                sign = s[i] == '+' ? 1 : -1;
                ++i;
                if (!term(sign, acc)) return false;
            } else {
                return true;
            }
        }
    }
};

}  // namespace

bool parse_display(const std::string& display, Poly2& numerator, long long& denominator) {
    numerator = Poly2{};
    denominator = 1;
    DisplayParser p(display);
    p.skip_ws();
    bool parenthesized = false;
    // "(poly)/d" vs "poly" vs "term/d"; a leading int followed by '(' is the
    // factored form and belongs to poly().
    if (p.i < p.s.size() && p.s[p.i] == '(') {
        parenthesized = true;
        ++p.i;
    }
    if (!p.poly(numerator)) return false;
    if (parenthesized && !p.eat(')')) return false;
    if (p.eat('/')) {
        if (!p.number(denominator) || denominator <= 0) return false;
    }
    p.skip_ws();
    return p.i == p.s.size();
}

std::string witness_group(Family family, Variant, Index index, int n) {
    if (family == Family::blossom && n % 2 == 0 && index == Index::m2) return "m2w";
    return "main";
}

const WitnessProfileSpec* find_witness_profile(Family family, Variant variant,
                                               Condition condition,
                                               const std::string& group) {
    for (const auto& w : builtin_claims_table().witness_profiles)
        if (w.family == family && w.variant == variant && w.condition == condition &&
            w.group == group)
            return &w;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Verification harness.

namespace {

Condition condition_for(Family family, int n) {
    if (family == Family::closed_sunflower) {
        switch (n % 3) {
            case 0: return Condition::mod3_0;
            case 1: return Condition::mod3_1;
            default: return Condition::mod3_2;
        }
    }
    return n % 2 == 0 ? Condition::even : Condition::odd;
}

OracleIndex to_oracle_index(Index i) {
    switch (i) {
        case Index::m1: return OracleIndex::m1;
        case Index::m2: return OracleIndex::m2;
        case Index::m3: return OracleIndex::m3;
        case Index::m4: return OracleIndex::m4_paper;
    }
    return OracleIndex::m1;
}

Rat bundle_value(const IndexBundle& b, Index i) {
    switch (i) {
        case Index::m1: return Rat(b.m1);
        case Index::m2: return Rat(b.m2);
        case Index::m3: return Rat(b.m3);
        case Index::m4: return b.m4_paper;
    }
    return Rat(0);
}

// Per-(family, n) computations shared across rows.
struct Cell {
    Graph graph;
    int chi = 0;
    std::optional<Coloring> phi_min, phi_plus_c;
    std::map<std::pair<int, int>, Extremum> extrema_cache;  // (index, goal)
    bool budget_exceeded = false;
    std::string budget_reason;
};

class VerifyRun {
public:
    explicit VerifyRun(Semantics semantics) : semantics_(semantics) {}

    ClaimResult row(const Claim& claim, int n, Variant reading_variant, bool literal) {
        ClaimResult r;
        r.claim = claim;
        r.n = n;
        r.reading = std::string(variant_name(reading_variant)) + (literal ? "-literal" : "");
        r.claimed = evaluate(claim, n);

        Cell& cell = cell_for(claim.family, n);
        if (cell.budget_exceeded) {
            r.skipped = true;
            r.skip_reason = cell.budget_reason;
            return r;
        }

        const FamilySpec spec{claim.family, n};
        const Goal goal = reading_variant == Variant::minus ? Goal::min : Goal::max;

        std::optional<Coloring> witness;
        try {
            witness = witness_coloring(spec, reading_variant, claim.index);
        } catch (const NoWitnessError&) {
        }
        if (witness) {
            IndexBundle b = bundle(cell.graph, *witness);
            r.witness_value = bundle_value(b, claim.index);
            if (claim.index == Index::m4) r.witness_m4_std = b.m4_std;
        }

        try {
            const Coloring& phi = reading_variant == Variant::minus
                                      ? phi_of(cell, true)
                                      : phi_of(cell, false);
            IndexBundle b = bundle(cell.graph, phi);
            r.phi_value = bundle_value(b, claim.index);
            if (claim.index == Index::m4) r.phi_m4_std = b.m4_std;

            if (semantics_ == Semantics::oracle) {
                Extremum e = extremum_of(cell, claim.index, goal);
                r.oracle_value = e.value;
                if (claim.index == Index::m4)
                    r.oracle_m4_std = e.value.num * (2 / e.value.den);
            } else if (semantics_ == Semantics::permutation) {
                const Coloring& base = witness ? *witness : phi;
                ColorProfile part = profile(cell.graph, base);
                r.perm_value = permutation_extrema(part, to_oracle_index(claim.index), goal);
            }
        } catch (const BudgetError& e) {
            r.skipped = true;
            r.skip_reason = e.what();
            return r;
        }

        r.verdict = decide(r, claim.index);
        if (r.verdict == Verdict::MISMATCH && semantics_ == Semantics::oracle)
            r.oracle_witness = extremum_of(cell, claim.index, goal).witness.zeta;
        return r;
    }

private:
    Verdict decide(const ClaimResult& r, Index index) const {
        if (index != Index::m4 && !r.claimed.is_integer()) return Verdict::NONINTEGER;
        const std::optional<Rat>* cmp = nullptr;
        switch (semantics_) {
            case Semantics::oracle: cmp = &r.oracle_value; break;
            case Semantics::permutation: cmp = &r.perm_value; break;
            case Semantics::witness: cmp = &r.witness_value; break;
        }
        if (!cmp->has_value()) return Verdict::NO_WITNESS;
        return r.claimed == **cmp ? Verdict::MATCH : Verdict::MISMATCH;
    }

    Cell& cell_for(Family family, int n) {
        auto key = std::make_pair(static_cast<int>(family), n);
        auto it = cells_.find(key);
        if (it != cells_.end()) return it->second;
        Cell cell;
        cell.graph = build(FamilySpec{family, n});
        try {
            cell.chi = chromatic_number(cell.graph);
        } catch (const BudgetError& e) {
            cell.budget_exceeded = true;
            cell.budget_reason = e.what();
        }
        return cells_.emplace(key, std::move(cell)).first->second;
    }

    const Coloring& phi_of(Cell& cell, bool minus) {
        auto& slot = minus ? cell.phi_min : cell.phi_plus_c;
        if (!slot)
            slot = minus ? phi_minus(cell.graph, cell.chi) : phi_plus(cell.graph, cell.chi);
        return *slot;
    }

    Extremum& extremum_of(Cell& cell, Index index, Goal goal) {
        auto key = std::make_pair(static_cast<int>(index), static_cast<int>(goal));
        auto it = cell.extrema_cache.find(key);
        if (it != cell.extrema_cache.end()) return it->second;
        Extremum e = extrema(cell.graph, cell.chi, to_oracle_index(index), goal);
        return cell.extrema_cache.emplace(key, std::move(e)).first->second;
    }

    Semantics semantics_;
    std::map<std::pair<int, int>, Cell> cells_;
};

}  // namespace

std::vector<std::string> known_theorem_ids() {
    std::vector<std::string> ids;
    for (const auto& c : builtin_claims_table().claims)
        if (std::find(ids.begin(), ids.end(), c.theorem) == ids.end())
            ids.push_back(c.theorem);
    return ids;
}

std::vector<ClaimResult> verify(const VerifyOptions& options) {
    if (options.use_family_filter && options.families.empty())
        throw std::invalid_argument("empty family filter");
    if (options.n_min > options.n_max)
        throw std::invalid_argument("empty n range");

    bool all = options.theorems.empty() ||
               (options.theorems.size() == 1 && options.theorems[0] == "all");
    auto known = known_theorem_ids();
    for (const auto& t : options.theorems)
        if (t != "all" && std::find(known.begin(), known.end(), t) == known.end())
            throw std::invalid_argument("unknown theorem id: " + t);

    VerifyRun run(options.semantics);
    std::vector<ClaimResult> results;
    for (const auto& claim : builtin_claims_table().claims) {
        if (!all && std::find(options.theorems.begin(), options.theorems.end(),
                              claim.theorem) == options.theorems.end())
            continue;
        if (options.use_family_filter &&
            std::find(options.families.begin(), options.families.end(), claim.family) ==
                options.families.end())
            continue;
        for (int n = options.n_min; n <= options.n_max; ++n) {
            if (n < 4) continue;  // closed forms are encoded from n = 4 up
            if (!condition_holds(claim.condition, n)) continue;
            results.push_back(run.row(claim, n, claim.variant, false));
            if (claim.also_literal_minus)
                results.push_back(run.row(claim, n, Variant::minus, true));
        }
    }
    if (results.empty()) throw std::invalid_argument("no claims selected");
    return results;
}

std::vector<ClaimResult> desk_verify_results() {
    struct Slice {
        std::vector<std::string> theorems;
        int n_min, n_max;
    };
    const Slice slices[] = {
        {{"2.1", "2.2"}, 4, 7},
        {{"3.1", "3.2"}, 4, 7},
        {{"4.1", "4.2"}, 6, 8},
        {{"5.1", "5.2"}, 4, 5},
    };
    std::vector<ClaimResult> all_results;
    for (const auto& s : slices) {
        VerifyOptions opt;
        opt.theorems = s.theorems;
        opt.n_min = s.n_min;
        opt.n_max = s.n_max;
        opt.semantics = Semantics::oracle;
        auto part = verify(opt);
        all_results.insert(all_results.end(), part.begin(), part.end());
    }
    return all_results;
}

namespace {

nlohmann::json rat_json(const Rat& r) {
    return {{"num", r.num}, {"den", r.den}};
}

nlohmann::json opt_rat_json(const std::optional<Rat>& r) {
    if (!r) return nullptr;
    return rat_json(*r);
}

}  // namespace

std::string report_json(const std::vector<ClaimResult>& results, Semantics semantics) {
    nlohmann::json rows = nlohmann::json::array();
    std::map<std::string, int> counts;
    int skipped = 0;
    for (const auto& r : results) {
        nlohmann::json row;
        row["theorem"] = r.claim.theorem;
        row["part"] = r.claim.part;
        row["index"] = index_name(r.claim.index);
        row["case"] = condition_name(r.claim.condition);
        row["n"] = r.n;
        row["reading"] = r.reading;
        row["source"] = r.claim.source();
        row["claimed"] = rat_json(r.claimed);
        row["witness"] = opt_rat_json(r.witness_value);
        row["phi"] = opt_rat_json(r.phi_value);
        row["oracle"] = opt_rat_json(r.oracle_value);
        row["perm"] = opt_rat_json(r.perm_value);
        if (r.claim.index == Index::m4) {
            nlohmann::json std_values;
            std_values["witness"] =
                r.witness_m4_std ? nlohmann::json(*r.witness_m4_std) : nullptr;
            std_values["phi"] = r.phi_m4_std ? nlohmann::json(*r.phi_m4_std) : nullptr;
            std_values["oracle"] =
                r.oracle_m4_std ? nlohmann::json(*r.oracle_m4_std) : nullptr;
            row["m4_std"] = std_values;
        } else {
            row["m4_std"] = nullptr;
        }
        row["oracle_witness"] =
            r.oracle_witness ? nlohmann::json(*r.oracle_witness) : nullptr;
        if (r.skipped) {
            row["status"] = "skipped_budget";
            row["verdict"] = nullptr;
            ++skipped;
        } else {
            row["status"] = "ok";
            row["verdict"] = verdict_name(r.verdict);
            ++counts[verdict_name(r.verdict)];
        }
        rows.push_back(row);
    }
    nlohmann::json doc;
    doc["semantics"] = semantics_name(semantics);
    doc["results"] = rows;
    nlohmann::json summary;
    summary["rows"] = results.size();
    summary["skipped"] = skipped;
    for (const char* v : {"MATCH", "MISMATCH", "NONINTEGER", "NO_WITNESS"})
        summary[v] = counts.count(v) ? counts[v] : 0;
    doc["summary"] = summary;
    return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<ClaimResult>& results, Semantics semantics) {
    std::ostringstream os;
    os << "claim verification (semantics=" << semantics_name(semantics) << ")\n";
    std::string current_theorem;
    std::map<std::string, int> counts;
    int skipped = 0;
    const auto cell = [](const std::optional<Rat>& r) {
        return r ? r->str() : std::string("-");
    };
    for (const auto& r : results) {
        if (r.claim.theorem != current_theorem) {
            current_theorem = r.claim.theorem;
            os << "\n[" << current_theorem << "]\n";
            os << "  part idx case     n  reading        claimed      witness      phi          "
               << (semantics == Semantics::permutation ? "perm" : "oracle")
               << "        verdict\n";
        }
        std::ostringstream line;
        line << "  " << r.claim.part;
        for (std::size_t p = r.claim.part.size(); p < 4; ++p) line << ' ';
        line << ' ' << index_name(r.claim.index) << "  ";
        std::string c = condition_name(r.claim.condition);
        line << c;
        for (std::size_t p = c.size(); p < 8; ++p) line << ' ';
        line << ' ' << r.n << "  ";
        line << r.reading;
        for (std::size_t p = r.reading.size(); p < 14; ++p) line << ' ';
        for (const std::string& v :
             {r.claimed.str(), cell(r.witness_value), cell(r.phi_value),
              cell(semantics == Semantics::permutation ? r.perm_value
                                                       : r.oracle_value)}) {
            line << ' ' << v;
            for (std::size_t p = v.size(); p < 12; ++p) line << ' ';
        }
        if (r.skipped) {
            line << " skipped (" << r.skip_reason << ")";
            ++skipped;
        } else {
            line << ' ' << verdict_name(r.verdict);
            ++counts[verdict_name(r.verdict)];
        }
        os << line.str() << "\n";
    }
    os << "\nsummary: rows=" << results.size();
    for (const char* v : {"MATCH", "MISMATCH", "NONINTEGER", "NO_WITNESS"})
        os << " " << v << "=" << (counts.count(v) ? counts[v] : 0);
    os << " skipped=" << skipped << "\n";
    return os.str();
}

}  // namespace chromind
