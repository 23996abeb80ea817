#include <set>
#include <stdexcept>

#include "chromind/graph.hpp"
#include "doctest.h"

using namespace chromind;

TEST_CASE("family vertex and edge counts, n = 3..12") {
    for (int n = 3; n <= 12; ++n) {
        CHECK(build({Family::cycle, n}).vertex_count() == n);
        CHECK(build({Family::cycle, n}).edge_count() == n);
        CHECK(build({Family::wheel, n}).vertex_count() == n + 1);
        CHECK(build({Family::wheel, n}).edge_count() == 2 * n);
        CHECK(build({Family::helm, n}).vertex_count() == 2 * n + 1);
        CHECK(build({Family::helm, n}).edge_count() == 3 * n);
        for (Family f : {Family::flower, Family::sunflower}) {
            Graph g = build({f, n});
            CHECK(g.vertex_count() == 2 * n + 1);
            CHECK(g.edge_count() == 4 * n);
        }
        CHECK(build({Family::closed_sunflower, n}).edge_count() == 5 * n);
        CHECK(build({Family::blossom, n}).edge_count() == 6 * n);
    }
}

TEST_CASE("every family graph is connected and satisfies the handshake") {
    for (int n = 3; n <= 12; ++n)
        for (Family f : {Family::cycle, Family::wheel, Family::helm, Family::flower,
                         Family::sunflower, Family::closed_sunflower, Family::blossom}) {
            Graph g = build({f, n});
            CHECK(is_connected(g));
            long long degsum = 0;
            for (int v = 0; v < g.vertex_count(); ++v) degsum += degree(g, v);
            CHECK(degsum == 2LL * edge_list(g).size());
            CHECK(static_cast<int>(edge_list(g).size()) == g.edge_count());
        }
}

TEST_CASE("spot checks from the family definitions") {
    Graph f4 = build({Family::flower, 4});
    CHECK(f4.vertex_count() == 9);
    CHECK(f4.edge_count() == 16);
    CHECK(degree(f4, 8) == 8);  // hub adjacent to all rim and pendant vertices
    CHECK(f4.role(8) == Role::hub);

    Graph c3 = build({Family::cycle, 3});
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(c3.adjacent(0, 1));
    CHECK(c3.adjacent(1, 2));
    CHECK(c3.adjacent(0, 2));

    Graph b5 = build({Family::blossom, 5});
    CHECK(b5.vertex_count() == 11);
    CHECK(b5.edge_count() == 30);
}

TEST_CASE("canonical layout: rim first, outer second, hub last") {
    Graph g = build({Family::closed_sunflower, 6});
    for (int v = 0; v < 6; ++v) CHECK(g.role(v) == Role::rim);
    for (int v = 6; v < 12; ++v) CHECK(g.role(v) == Role::outer);
    CHECK(g.role(12) == Role::hub);
    CHECK(vertex_label(g, 0) == "u1");
    CHECK(vertex_label(g, 6) == "v1");
    CHECK(vertex_label(g, 12) == "hub");
    // sunflower adjacency: v_i next to u_i and u_{i+1 mod n}
    CHECK(g.adjacent(6, 0));
    CHECK(g.adjacent(6, 1));
    CHECK(g.adjacent(11, 5));
    CHECK(g.adjacent(11, 0));
}

TEST_CASE("builder rejects n < 3") {
    CHECK_THROWS_AS(build({Family::flower, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::cycle, 0}), std::invalid_argument);
}

TEST_CASE("degree and role reject out-of-range ids") {
    Graph g = build({Family::cycle, 4});
    CHECK_THROWS_AS(degree(g, 4), std::invalid_argument);
    CHECK_THROWS_AS(degree(g, -1), std::invalid_argument);
    CHECK_THROWS_AS(g.role(99), std::invalid_argument);
}

TEST_CASE("edge_list is lexicographic with each edge once") {
    Graph g = build({Family::wheel, 5});
    auto edges = edge_list(g);
    std::set<std::pair<int, int>> seen(edges.begin(), edges.end());
    CHECK(seen.size() == edges.size());
    for (std::size_t i = 1; i < edges.size(); ++i) CHECK(edges[i - 1] < edges[i]);
    for (auto [a, b] : edges) CHECK(a < b);
}

TEST_CASE("is_independent") {
    Graph c4 = build({Family::cycle, 4});
    int opposite[] = {0, 2};
    CHECK(is_independent(c4, opposite));
    int adjacent_pair[] = {0, 1};
    CHECK_FALSE(is_independent(c4, adjacent_pair));

    // outer vertices plus hub in a sunflower
    Graph sf5 = build({Family::sunflower, 5});
    int outer_and_hub[] = {5, 6, 7, 8, 9, 10};
    CHECK(is_independent(sf5, outer_and_hub));

    int bogus[] = {42};
    CHECK_THROWS_AS(is_independent(c4, bogus), std::invalid_argument);
}

TEST_CASE("from_edges rejects malformed input and collapses duplicates") {
    std::vector<std::pair<int, int>> loops{{0, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, loops), std::invalid_argument);
    std::vector<std::pair<int, int>> range{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(2, range), std::invalid_argument);
    std::vector<std::pair<int, int>> dup{{0, 1}, {1, 0}};
    CHECK(Graph::from_edges(2, dup).edge_count() == 1);
}

TEST_CASE("dot export is deterministic with canonical labels") {
    Graph c3 = build({Family::cycle, 3});
    std::string dot = to_dot(c3, "cycle_3");
    CHECK(dot ==
          "graph cycle_3 {\n  u1;\n  u2;\n  u3;\n  u1 -- u2;\n  u1 -- u3;\n"
          "  u2 -- u3;\n}\n");
    Graph f3 = build({Family::flower, 3});
    std::string fdot = to_dot(f3, "flower_3");
    CHECK(fdot.find("v1 -- hub;") != std::string::npos);
    CHECK(fdot == to_dot(build({Family::flower, 3}), "flower_3"));
}

TEST_CASE("adjacency json document") {
    FamilySpec spec{Family::flower, 4};
    std::string doc = to_adjacency_json(build(spec), spec);
    CHECK(doc.find("\"family\": \"flower\"") != std::string::npos);
    CHECK(doc.find("\"vertex_count\": 9") != std::string::npos);
    CHECK(doc.find("\"edge_count\": 16") != std::string::npos);
    CHECK(doc == to_adjacency_json(build(spec), spec));
}
