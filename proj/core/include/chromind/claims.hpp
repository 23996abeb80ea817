#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "chromind/coloring.hpp"
#include "chromind/graph.hpp"
#include "chromind/rational.hpp"

namespace chromind {

// Linear polynomial (a*n + b)/d, the shape of every theta/eta table entry.
struct LinPoly {
    long long a = 0;
    long long b = 0;
    long long d = 1;
    Rat eval(int n) const { return Rat(a * n + b, d); }
};

enum class Condition { even, odd, mod3_0, mod3_1, mod3_2 };

const char* condition_name(Condition c);
bool parse_condition(const std::string& s, Condition& out);
bool condition_holds(Condition c, int n);

// Quadratic numerator c0 + c1*n + c2*n^2.
struct Poly2 {
    long long c0 = 0;
    long long c1 = 0;
    long long c2 = 0;
    long long eval(long long n) const { return c0 + c1 * n + c2 * n * n; }
};

// One residue case of one indexed statement from the bundled table.
struct Claim {
    Family family;
    Variant variant;
    Index index;
    Condition condition;
    Poly2 numerator;
    long long denominator = 1;
    std::string theorem;  // record group id, e.g. "2.1"
    std::string part;     // "i".."iv"
    std::string display;  // formula exactly as the table prints it
    bool also_literal_minus = false;  // additionally checked under a minus reading

    std::string source() const;
};

// Expected strengths/cross-edge counts of a witness colouring.
struct WitnessProfileSpec {
    Family family;
    Variant variant;
    Condition condition;
    std::string group;  // "main" or "m2w"
    std::vector<LinPoly> theta;
    std::vector<std::tuple<int, int, LinPoly>> eta;  // (t, s, count)
};

struct ClaimsTable {
    std::vector<Claim> claims;
    std::vector<WitnessProfileSpec> witness_profiles;
};

// Parses the line-oriented claims data format. Throws ClaimsFormatError
// listing every offending line.
ClaimsTable parse_claims(std::string_view text);

// The table embedded from core/data/claims.txt.
const ClaimsTable& builtin_claims_table();
std::vector<Claim> builtin_claims();

// Exact rational value; requires n >= 3 and claim.condition to hold.
Rat evaluate(const Claim& claim, int n);

// Parses a display expression like "5(n+1)", "(16n^2+94n-92)/18" or "27n/2"
// for the transcription audit. Returns false on malformed input.
bool parse_display(const std::string& display, Poly2& numerator, long long& denominator);

// Which construction a witness request resolves to ("main" or "m2w").
std::string witness_group(Family family, Variant variant, Index index, int n);

const WitnessProfileSpec* find_witness_profile(Family family, Variant variant,
                                               Condition condition,
                                               const std::string& group);

enum class Semantics { oracle, permutation, witness };
const char* semantics_name(Semantics s);
bool parse_semantics(const std::string& s, Semantics& out);

enum class Verdict { MATCH, MISMATCH, NONINTEGER, NO_WITNESS };
const char* verdict_name(Verdict v);

struct ClaimResult {
    Claim claim;
    int n = 0;
    std::string reading;  // "minus", "plus", or "minus-literal"
    Rat claimed;
    std::optional<Rat> witness_value;
    std::optional<Rat> phi_value;
    std::optional<Rat> oracle_value;
    std::optional<Rat> perm_value;
    std::optional<long long> witness_m4_std;
    std::optional<long long> phi_m4_std;
    std::optional<long long> oracle_m4_std;
    std::optional<std::vector<int>> oracle_witness;  // attached to MISMATCH rows
    bool skipped = false;  // budget exceeded; values absent, no verdict claimed
    std::string skip_reason;
    Verdict verdict = Verdict::MISMATCH;
};

struct VerifyOptions {
    std::vector<std::string> theorems;  // ids, or the single entry "all"
    std::vector<Family> families;       // optional narrowing filter
    bool use_family_filter = false;     // an explicitly empty filter is an error
    int n_min = 4;
    int n_max = 7;
    Semantics semantics = Semantics::oracle;
};

std::vector<std::string> known_theorem_ids();
std::vector<ClaimResult> verify(const VerifyOptions& options);

// The fixed desk-scale run: flower/sunflower n 4..7, closed sunflower
// n 6..8, blossom n 4..5, oracle semantics.
std::vector<ClaimResult> desk_verify_results();

std::string report_json(const std::vector<ClaimResult>& results, Semantics semantics);
std::string report_text(const std::vector<ClaimResult>& results, Semantics semantics);

}  // namespace chromind
