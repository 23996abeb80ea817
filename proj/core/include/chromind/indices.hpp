#pragma once

#include <string>
#include <vector>

#include "chromind/coloring.hpp"
#include "chromind/graph.hpp"
#include "chromind/rational.hpp"

namespace chromind {

// Class strengths theta(c_j) and cross-edge counts eta_{ts} (t < s) of a
// proper colouring. Sum of theta is the vertex count; sum of eta is the
// edge count.
struct ColorProfile {
    int num_colors = 0;
    std::vector<long long> theta;              // theta[j], j in 1..num_colors
    std::vector<std::vector<long long>> eta_;  // eta_[t][s], t < s, 1-based

    long long theta_of(int j) const { return theta[j - 1]; }
    long long eta(int t, int s) const { return eta_[t][s]; }
};

enum class M4Convention { standard, paper };

// Throws ImproperColoringError (with the violating edges) if c is not proper.
ColorProfile profile(const Graph& g, const Coloring& c);

// sum theta(c_j) * j^2  ==  sum zeta(v)^2
long long m1(const ColorProfile& p);

// sum zeta(u) * zeta(v) over edges
long long m2(const Graph& g, const Coloring& c);

// sum |zeta(u) - zeta(v)| over edges
long long m3(const Graph& g, const Coloring& c);

// standard: sum over unordered vertex pairs of |zeta(u) - zeta(v)|;
// paper: half of that. Depends only on theta.
Rat m4(const ColorProfile& p, M4Convention convention);

struct IndexBundle {
    long long m1 = 0;
    long long m2 = 0;
    long long m3 = 0;
    long long m4_std = 0;
    Rat m4_paper;
};

// All four indices with the per-vertex / per-class m1 routes cross-checked.
IndexBundle bundle(const Graph& g, const Coloring& c);

// {"m1":..,"m2":..,"m3":..,"m4_paper":{"den":..,"num":..},"m4_std":..}
std::string bundle_json(const IndexBundle& b);

}  // namespace chromind
