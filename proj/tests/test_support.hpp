#pragma once

// Test-only reference oracle: enumerates proper colourings by plain
// backtracking over an edge list and evaluates every index directly from
// its definition. Kept independent of the library's profile/search code so
// it can vouch for the derived expectations.

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromind/graph.hpp"
#include "chromind/rational.hpp"

namespace testsupport {

struct Tiny {
    int V = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    static Tiny of(const chromind::Graph& g) {
        Tiny t;
        t.V = g.vertex_count();
        t.edges = chromind::edge_list(g);
        t.adj.assign(t.V, {});
        for (auto [a, b] : t.edges) {
            t.adj[a].push_back(b);
            t.adj[b].push_back(a);
        }
        return t;
    }

    static Tiny of_edges(int V, std::vector<std::pair<int, int>> edges) {
        Tiny t;
        t.V = V;
        t.edges = std::move(edges);
        t.adj.assign(V, {});
        for (auto [a, b] : t.edges) {
            t.adj[a].push_back(b);
            t.adj[b].push_back(a);
        }
        return t;
    }

    template <class F>
    void enumerate(int k, F&& visit) const {
        std::vector<int> z(V, 0);
        rec(0, k, z, visit);
    }

    long long count(int k) const {
        long long c = 0;
        enumerate(k, [&](const std::vector<int>&) { ++c; });
        return c;
    }

    static long long m1_of(const std::vector<int>& z) {
        long long s = 0;
        for (int v : z) s += 1LL * v * v;
        return s;
    }
    long long m2_of(const std::vector<int>& z) const {
        long long s = 0;
        for (auto [a, b] : edges) s += 1LL * z[a] * z[b];
        return s;
    }
    long long m3_of(const std::vector<int>& z) const {
        long long s = 0;
        for (auto [a, b] : edges) s += std::abs(z[a] - z[b]);
        return s;
    }
    static long long m4_std_of(const std::vector<int>& z) {
        long long s = 0;
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = i + 1; j < z.size(); ++j)
                s += std::abs(z[i] - z[j]);
        return s;
    }

    long long index_of(const std::string& index, const std::vector<int>& z) const {
        if (index == "m1") return m1_of(z);
        if (index == "m2") return m2_of(z);
        if (index == "m3") return m3_of(z);
        return m4_std_of(z);  // m4_std and m4_paper share the argmin
    }

    // Full-enumeration extremum, first attained; m4_paper halves at the end.
    std::optional<std::pair<chromind::Rat, std::vector<int>>> extremum(
        int k, const std::string& index, bool maximize) const {
        std::optional<std::pair<long long, std::vector<int>>> best;
        std::string base = index == "m4_paper" ? "m4_std" : index;
        enumerate(k, [&](const std::vector<int>& z) {
            long long val = index_of(base, z);
            if (!best || (maximize ? val > best->first : val < best->first))
                best = {val, z};
        });
        if (!best) return std::nullopt;
        chromind::Rat value = index == "m4_paper" ? chromind::Rat(best->first, 2)
                                                  : chromind::Rat(best->first);
        return std::make_pair(value, best->second);
    }

private:
    template <class F>
    void rec(int v, int k, std::vector<int>& z, F&& visit) const {
        if (v == V) {
            visit(z);
            return;
        }
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int w : adj[v])
                if (w < v && z[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            z[v] = c;
            rec(v + 1, k, z, visit);
        }
        z[v] = 0;
    }
};

}  // namespace testsupport
