#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chromind/graph.hpp"

namespace chromind {

// A vertex colouring zeta : V -> {1..num_colors}. Properness is not an
// invariant; validate() checks it. phi/witness outputs use every colour in
// 1..num_colors; colourings drawn from a wider palette (oracle winners at
// k > chi) may skip values below their maximum.
struct Coloring {
    std::vector<int> zeta;
    int num_colors = 0;

    static Coloring of(std::vector<int> zeta);  // num_colors = max value
};

enum class Variant { minus, plus };
enum class Index { m1, m2, m3, m4 };

const char* variant_name(Variant v);
const char* index_name(Index i);
bool parse_variant(const std::string& s, Variant& out);
bool parse_index(const std::string& s, Index& out);

// Violating edges, empty iff proper. Size mismatch is a domain error.
std::vector<std::pair<int, int>> validate(const Graph& g, const Coloring& c);

// Exact chi(G): iterative deepening from a clique lower bound.
int chromatic_number(const Graph& g);

// Lexicographically maximum strength vector (theta(c1), theta(c2), ...)
// over proper colourings using exactly k colours; ties broken by the
// lexicographically smallest zeta sequence. Exact search seeded by greedy
// independent-set peeling. Throws if k < chi(g) or over the vertex budget.
Coloring phi_minus(const Graph& g, int k);

// Mirror: lexicographic maximum of (theta(c_k), theta(c_{k-1}), ...).
Coloring phi_plus(const Graph& g, int k);

// The exact colouring constructed in the corresponding closed-form table's
// derivation. `index` matters only where per-index constructions differ
// (blossom, minus/plus, even n, m2). Throws NoWitnessError for
// combinations without a defined construction.
Coloring witness_coloring(const FamilySpec& spec, Variant variant, Index index);

// Serialized JSON array of colour values indexed by vertex id.
std::string coloring_json(const Coloring& c);

}  // namespace chromind
