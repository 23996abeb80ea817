#include "chromind/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "chromind/errors.hpp"

namespace chromind {

Coloring Coloring::of(std::vector<int> zeta) {
    Coloring c;
    c.num_colors = zeta.empty() ? 0 : *std::max_element(zeta.begin(), zeta.end());
    c.zeta = std::move(zeta);
    return c;
}

const char* variant_name(Variant v) {
    return v == Variant::minus ? "minus" : "plus";
}

const char* index_name(Index i) {
    switch (i) {
        case Index::m1: return "m1";
        case Index::m2: return "m2";
        case Index::m3: return "m3";
        case Index::m4: return "m4";
    }
    return "?";
}

bool parse_variant(const std::string& s, Variant& out) {
    if (s == "minus") { out = Variant::minus; return true; }
    if (s == "plus") { out = Variant::plus; return true; }
    return false;
}

bool parse_index(const std::string& s, Index& out) {
    if (s == "m1") { out = Index::m1; return true; }
    if (s == "m2") { out = Index::m2; return true; }
    if (s == "m3") { out = Index::m3; return true; }
    if (s == "m4") { out = Index::m4; return true; }
    return false;
}

std::vector<std::pair<int, int>> validate(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.zeta.size()) != g.vertex_count())
        throw std::invalid_argument("colouring does not cover the graph");
    for (int z : c.zeta)
        if (z < 1) throw std::invalid_argument("colour values must be positive");
    std::vector<std::pair<int, int>> bad;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (v < w && c.zeta[v] == c.zeta[w]) bad.emplace_back(v, w);
    return bad;
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

// Any clique found greedily is a valid lower bound for chi.
int greedy_clique_bound(const Graph& g) {
    int best = g.vertex_count() > 0 ? 1 : 0;
    for (int start = 0; start < g.vertex_count(); ++start) {
        std::uint64_t cand = g.neighbor_mask(start);
        int size = 1;
        std::uint64_t members = 1ULL << start;
        while (cand) {
            int v = std::countr_zero(cand);
            members |= 1ULL << v;
            ++size;
            cand &= g.neighbor_mask(v);
        }
        best = std::max(best, size);
    }
    return best;
}

bool feasible_with(const Graph& g, int k) {
    const int V = g.vertex_count();
    std::vector<int> color(V, 0);
    // classic symmetry breaking: a vertex may open at most one new colour
    std::vector<int> maxused(V + 1, 0);
    int v = 0;
    while (true) {
        if (v == V) return true;
        int c = color[v] + 1;
        int limit = std::min(k, maxused[v] + 1);
        bool placed = false;
        for (; c <= limit; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && color[w] == c) { ok = false; break; }
            if (ok) {
                color[v] = c;
                maxused[v + 1] = std::max(maxused[v], c);
                ++v;
                placed = true;
                break;
            }
        }
        if (placed) continue;
        color[v] = 0;
        if (v == 0) return false;
        --v;
    }
}

// Exact maximum independent set on <= 64 vertices, used only to seed the
// phi search with a good incumbent.
int max_independent_set(const Graph& g, std::uint64_t allowed,
                        std::uint64_t current, std::uint64_t* best_set,
                        int current_size, int best_size) {
    if (allowed == 0) {
        if (current_size > best_size) {
            *best_set = current;
            return current_size;
        }
        return best_size;
    }
    if (current_size + std::popcount(allowed) <= best_size) return best_size;
    int v = std::countr_zero(allowed);
    // branch: take v, or drop it
    best_size = max_independent_set(g, allowed & ~(g.neighbor_mask(v) | (1ULL << v)),
                                    current | (1ULL << v), best_set,
                                    current_size + 1, best_size);
    best_size = max_independent_set(g, allowed & ~(1ULL << v), current, best_set,
                                    current_size, best_size);
    return best_size;
}

struct PhiSearch {
    const Graph& g;
    int k;
    std::vector<long long> weight;  // weight[c], c in 1..k
    std::vector<int> color;
    std::vector<int> best;
    long long best_score = -1;
    bool found = false;

    PhiSearch(const Graph& graph, int colors, bool plus)
        : g(graph), k(colors), weight(colors + 1, 0), color(graph.vertex_count(), 0) {
        long long w = static_cast<long long>(g.vertex_count()) + 1;
        for (int c = 1; c <= k; ++c) {
            int exp = plus ? c - 1 : k - c;
            long long val = 1;
            for (int e = 0; e < exp; ++e) val *= w;
            weight[c] = val;
        }
    }

    long long score_of(const std::vector<int>& zeta) const {
        long long s = 0;
        for (int z : zeta) s += weight[z];
        return s;
    }

    int min_allowed_weight_color(int v) const {
        // best colour v could still take given already-assigned neighbours
        std::uint64_t used = 0;
        for (int w : g.neighbors(v))
            if (color[w] != 0) used |= 1ULL << color[w];
        long long bestw = -1;
        int bestc = 0;
        for (int c = 1; c <= k; ++c)
            if (!(used >> c & 1) && weight[c] > bestw) {
                bestw = weight[c];
                bestc = c;
            }
        return bestc;
    }

    void dfs(int v, long long current, int used_count, std::uint64_t used_mask) {
        const int V = g.vertex_count();
        if (v == V) {
            if (used_count == k && current > best_score) {
                best_score = current;
                best = color;
                found = true;
            }
            return;
        }
        if (k - used_count > V - v) return;  // cannot reach surjectivity
        // optimistic completion
        long long bound = current;
        for (int u = v; u < V; ++u) {
            int c = min_allowed_weight_color(u);
            if (c == 0) return;  // some vertex already has no colour left
            bound += weight[c];
        }
        if (bound <= best_score) return;
        std::uint64_t blocked = 0;
        for (int w : g.neighbors(v))
            if (w < v) blocked |= 1ULL << color[w];
        for (int c = 1; c <= k; ++c) {
            if (blocked >> c & 1) continue;
            color[v] = c;
            std::uint64_t mask = used_mask | (1ULL << c);
            dfs(v + 1, current + weight[c],
                used_count + (mask != used_mask ? 1 : 0), mask);
            color[v] = 0;
        }
    }
};

Coloring phi_search(const Graph& g, int k, bool plus) {
    check_budget(g, plus ? "phi_plus" : "phi_minus");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (g.vertex_count() == 0) return Coloring{};
    if (k > g.vertex_count())
        throw std::invalid_argument("k exceeds the vertex count");

    PhiSearch search(g, k, plus);

    // Greedy maximum-independent-set peeling: if it lands in exactly k
    // classes it is a feasible colouring whose score seeds the pruning.
    {
        std::uint64_t remaining = g.vertex_count() == 64
                                      ? ~0ULL
                                      : (1ULL << g.vertex_count()) - 1;
        std::vector<int> greedy(g.vertex_count(), 0);
        int classes = 0;
        bool ok = true;
        while (remaining) {
            if (classes == k) { ok = false; break; }
            std::uint64_t set = 0;
            max_independent_set(g, remaining, 0, &set, 0, 0);
            ++classes;
            int c = plus ? k - classes + 1 : classes;
            for (std::uint64_t m = set; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                greedy[v] = c;
            }
            remaining &= ~set;
        }
        if (ok && classes == k)
            search.best_score = search.score_of(greedy) - 1;
    }

    search.dfs(0, 0, 0, 0);
    if (!search.found)
        throw std::invalid_argument("no proper colouring with exactly the requested colours");
    Coloring c;
    c.zeta = search.best;
    c.num_colors = k;
    return c;
}

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    check_budget(g, "chromatic_number");
    for (int k = greedy_clique_bound(g);; ++k)
        if (feasible_with(g, k)) return k;
}

Coloring phi_minus(const Graph& g, int k) { return phi_search(g, k, false); }

Coloring phi_plus(const Graph& g, int k) { return phi_search(g, k, true); }

std::string coloring_json(const Coloring& c) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.zeta.size(); ++i) {
        if (i) os << ",";
        os << c.zeta[i];
    }
    os << "]";
    return os.str();
}

}  // namespace chromind
