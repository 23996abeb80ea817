#pragma once

#include <functional>
#include <string>

#include "chromind/coloring.hpp"
#include "chromind/graph.hpp"
#include "chromind/indices.hpp"
#include "chromind/rational.hpp"

namespace chromind {

enum class Goal { min, max };
enum class OracleIndex { m1, m2, m3, m4_std, m4_paper };

const char* goal_name(Goal g);
const char* oracle_index_name(OracleIndex i);
bool parse_goal(const std::string& s, Goal& out);
bool parse_oracle_index(const std::string& s, OracleIndex& out);

// Every proper colouring with colours drawn from {1..k}, emitted by
// backtracking in canonical vertex order (lexicographic zeta order).
// Throws BudgetError over the vertex guard.
void enumerate_colorings(const Graph& g, int k,
                         const std::function<void(const std::vector<int>&)>& visit);

long long count_colorings(const Graph& g, int k);

struct Extremum {
    Rat value;
    Coloring witness;  // first colouring attaining the value in enumeration order
};

// Exact optimum over all proper colourings from {1..k}; branch-and-bound
// pruning never changes the optimum or the chosen witness.
Extremum extrema(const Graph& g, int k, OracleIndex index, Goal goal);

// Optimum of the index over relabelings of a fixed class partition.
// Rejects more than 8 classes.
Rat permutation_extrema(const ColorProfile& partition, OracleIndex index, Goal goal);

// Closed form for permutation-min of m1: strengths sorted descending onto
// colours 1..ell ascending.
long long rearrangement_min_m1(const ColorProfile& partition);

}  // namespace chromind
