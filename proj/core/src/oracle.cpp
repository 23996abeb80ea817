#include "chromind/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chromind/errors.hpp"

namespace chromind {

const char* goal_name(Goal g) { return g == Goal::min ? "min" : "max"; }

const char* oracle_index_name(OracleIndex i) {
    switch (i) {
        case OracleIndex::m1: return "m1";
        case OracleIndex::m2: return "m2";
        case OracleIndex::m3: return "m3";
        case OracleIndex::m4_std: return "m4_std";
        case OracleIndex::m4_paper: return "m4_paper";
    }
    return "?";
}

bool parse_goal(const std::string& s, Goal& out) {
    if (s == "min") { out = Goal::min; return true; }
    if (s == "max") { out = Goal::max; return true; }
    return false;
}

bool parse_oracle_index(const std::string& s, OracleIndex& out) {
    if (s == "m1") { out = OracleIndex::m1; return true; }
    if (s == "m2") { out = OracleIndex::m2; return true; }
    if (s == "m3") { out = OracleIndex::m3; return true; }
    if (s == "m4_std") { out = OracleIndex::m4_std; return true; }
    if (s == "m4_paper") { out = OracleIndex::m4_paper; return true; }
    return false;
}

namespace {

void check_budget(const Graph& g, const char* what) {
    if (g.vertex_count() > vertex_budget()) {
        std::ostringstream os;
        os << what << ": desk-scale exceeded (" << g.vertex_count()
           << " vertices, budget " << vertex_budget() << ")";
        throw BudgetError(os.str());
    }
}

void enumerate_impl(const Graph& g, int k, int v, std::vector<int>& color,
                    const std::function<void(const std::vector<int>&)>& visit) {
    if (v == g.vertex_count()) {
        visit(color);
        return;
    }
    std::uint64_t blocked = 0;
    for (int w : g.neighbors(v))
        if (w < v) blocked |= 1ULL << color[w];
    for (int c = 1; c <= k; ++c) {
        if (blocked >> c & 1) continue;
        color[v] = c;
        enumerate_impl(g, k, v + 1, color, visit);
    }
    color[v] = 0;
}

// Internal objective is an integer: m4_paper optimizes m4_std (same argmin)
// and halves on return.
struct BnB {
    const Graph& g;
    int k;
    OracleIndex index;
    Goal goal;
    std::vector<int> color;
    std::vector<long long> class_count;  // assigned vertices per colour
    long long current = 0;
    long long best_value = 0;
    std::vector<int> best;
    bool found = false;

    BnB(const Graph& graph, int colors, OracleIndex idx, Goal goal_)
        : g(graph), k(colors), index(idx), goal(goal_),
          color(graph.vertex_count(), 0), class_count(colors + 1, 0) {}

    bool integral_m4() const { return index == OracleIndex::m4_std || index == OracleIndex::m4_paper; }

    long long vertex_delta(int v, int c) const {
        switch (index) {
            case OracleIndex::m1:
                return static_cast<long long>(c) * c;
            case OracleIndex::m2: {
                long long d = 0;
                for (int w : g.neighbors(v))
                    if (color[w] != 0) d += static_cast<long long>(c) * color[w];
                return d;
            }
            case OracleIndex::m3: {
                long long d = 0;
                for (int w : g.neighbors(v))
                    if (color[w] != 0) d += std::abs(c - color[w]);
                return d;
            }
            default: {
                long long d = 0;
                for (int j = 1; j <= k; ++j) d += class_count[j] * std::abs(c - j);
                return d;
            }
        }
    }

    int min_allowed(int v) const {
        std::uint64_t used = 0;
        for (int w : g.neighbors(v))
            if (color[w] != 0) used |= 1ULL << color[w];
        for (int c = 1; c <= k; ++c)
            if (!(used >> c & 1)) return c;
        return 0;
    }

    int max_allowed(int v) const {
        std::uint64_t used = 0;
        for (int w : g.neighbors(v))
            if (color[w] != 0) used |= 1ULL << color[w];
        for (int c = k; c >= 1; --c)
            if (!(used >> c & 1)) return c;
        return 0;
    }

    // Conservative completion bound; proven against unpruned enumeration.
    long long bound(int next) {
        long long b = current;
        const int V = g.vertex_count();
        if (goal == Goal::min) {
            switch (index) {
                case OracleIndex::m1:
                    for (int u = next; u < V; ++u) {
                        int c = min_allowed(u);
                        if (c == 0) return b;  // dead branch; caller still recurses over no colours
                        b += static_cast<long long>(c) * c;
                    }
                    return b;
                case OracleIndex::m2:
                    for (int u = next; u < V; ++u)
                        for (int w : g.neighbors(u)) {
                            if (w < u && color[w] != 0) {
                                int c = color[w];
                                b += c == 1 ? 2 : c;  // partner differs from c
                            } else if (w < u) {
                                b += 2;  // both free: at least 1*2
                            }
                        }
                    return b;
                case OracleIndex::m3:
                    for (int u = next; u < V; ++u)
                        for (int w : g.neighbors(u))
                            if (w < u) b += 1;
                    return b;
                default:
                    return b;  // future pairs contribute >= 0
            }
        }
        switch (index) {
            case OracleIndex::m1:
                for (int u = next; u < V; ++u) {
                    int c = max_allowed(u);
                    b += static_cast<long long>(c) * c;
                }
                return b;
            case OracleIndex::m2:
                for (int u = next; u < V; ++u)
                    for (int w : g.neighbors(u)) {
                        if (w < u && color[w] != 0)
                            b += static_cast<long long>(color[w]) *
                                 (color[w] == k ? k - 1 : k);
                        else if (w < u)
                            b += static_cast<long long>(k) * (k - 1);
                    }
                return b;
            case OracleIndex::m3:
                for (int u = next; u < V; ++u)
                    for (int w : g.neighbors(u)) {
                        if (w < u && color[w] != 0)
                            b += std::max(color[w] - 1, k - color[w]);
                        else if (w < u)
                            b += k - 1;
                    }
                return b;
            default: {
                // assigned-vs-free and free-vs-free pairs at most k-1 apart
                long long assigned = 0;
                for (int j = 1; j <= k; ++j) assigned += class_count[j];
                long long free_count = V - assigned;
                b += (assigned * free_count + free_count * (free_count - 1) / 2) *
                     (k - 1);
                return b;
            }
        }
    }

    void dfs(int v) {
        if (v == g.vertex_count()) {
            if (!found || (goal == Goal::min ? current < best_value
                                             : current > best_value)) {
                best_value = current;
                best = color;
                found = true;
            }
            return;
        }
        if (found) {
            long long b = bound(v);
            if (goal == Goal::min ? b >= best_value : b <= best_value) return;
        }
        std::uint64_t blocked = 0;
        for (int w : g.neighbors(v))
            if (w < v) blocked |= 1ULL << color[w];
        for (int c = 1; c <= k; ++c) {
            if (blocked >> c & 1) continue;
            long long delta = vertex_delta(v, c);
            color[v] = c;
            ++class_count[c];
            current += delta;
            dfs(v + 1);
            current -= delta;
            --class_count[c];
            color[v] = 0;
        }
    }
};

}  // namespace

void enumerate_colorings(const Graph& g, int k,
                         const std::function<void(const std::vector<int>&)>& visit) {
    check_budget(g, "enumerate");
    if (k < 0 || k > 63) throw std::invalid_argument("k out of range");
    std::vector<int> color(g.vertex_count(), 0);
    if (g.vertex_count() == 0) {
        visit(color);
        return;
    }
    enumerate_impl(g, k, 0, color, visit);
}

long long count_colorings(const Graph& g, int k) {
    long long count = 0;
    enumerate_colorings(g, k, [&](const std::vector<int>&) { ++count; });
    return count;
}

Extremum extrema(const Graph& g, int k, OracleIndex index, Goal goal) {
    check_budget(g, "extrema");
    if (k < 1 || k > 63) throw std::invalid_argument("k out of range");
    BnB search(g, k, index, goal);
    search.dfs(0);
    if (!search.found)
        throw std::invalid_argument("no proper colouring with the given palette");
    Extremum e;
    e.value = index == OracleIndex::m4_paper ? Rat(search.best_value, 2)
                                             : Rat(search.best_value);
    e.witness = Coloring::of(std::move(search.best));
    return e;
}

Rat permutation_extrema(const ColorProfile& partition, OracleIndex index, Goal goal) {
    const int ell = partition.num_colors;
    if (ell > 8) throw BudgetError("permutation_extrema: more than 8 classes");
    std::vector<int> perm(ell);
    std::iota(perm.begin(), perm.end(), 1);  // perm[j-1] = label given to class j
    bool first = true;
    long long best = 0;
    do {
        long long value = 0;
        switch (index) {
            case OracleIndex::m1:
                for (int j = 1; j <= ell; ++j)
                    value += partition.theta_of(j) *
                             static_cast<long long>(perm[j - 1]) * perm[j - 1];
                break;
            case OracleIndex::m2:
                for (int t = 1; t <= ell; ++t)
                    for (int s = t + 1; s <= ell; ++s)
                        value += partition.eta(t, s) *
                                 static_cast<long long>(perm[t - 1]) * perm[s - 1];
                break;
            case OracleIndex::m3:
                for (int t = 1; t <= ell; ++t)
                    for (int s = t + 1; s <= ell; ++s)
                        value += partition.eta(t, s) *
                                 std::abs(perm[t - 1] - perm[s - 1]);
                break;
            default:
                for (int t = 1; t <= ell; ++t)
                    for (int s = t + 1; s <= ell; ++s)
                        value += partition.theta_of(t) * partition.theta_of(s) *
                                 std::abs(perm[t - 1] - perm[s - 1]);
                break;
        }
        if (first || (goal == Goal::min ? value < best : value > best)) {
            best = value;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return index == OracleIndex::m4_paper ? Rat(best, 2) : Rat(best);
}

long long rearrangement_min_m1(const ColorProfile& partition) {
    std::vector<long long> strengths = partition.theta;
    std::sort(strengths.rbegin(), strengths.rend());
    long long sum = 0;
    for (std::size_t j = 0; j < strengths.size(); ++j)
        sum += strengths[j] * static_cast<long long>(j + 1) * (j + 1);
    return sum;
}

}  // namespace chromind
