#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chromind {

enum class Role { hub, rim, outer, plain };

enum class Family {
    cycle,
    wheel,
    helm,
    flower,
    sunflower,
    closed_sunflower,
    blossom,
};

const char* family_name(Family f);
bool parse_family(const std::string& name, Family& out);
const char* role_name(Role r);

// A family instance: the base cycle length n (n >= 3).
struct FamilySpec {
    Family family;
    int n;
};

// Immutable simple undirected graph with role-tagged vertices.
// Vertex ids are 0..vertex_count-1; neighbour lists are sorted; adjacency
// is symmetric with no self-loops or duplicate edges.
class Graph {
public:
    Graph() = default;  // the empty graph

    static Graph from_edges(int vertex_count,
                            std::span<const std::pair<int, int>> edges,
                            std::vector<Role> roles = {});

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const;
    Role role(int v) const;
    bool adjacent(int u, int v) const;
    std::uint64_t neighbor_mask(int v) const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> mask_;  // bitset view of adj_, vertex_count <= 64
    std::vector<Role> roles_;
    int edge_count_ = 0;
};

// Canonical layout: rim u_1..u_n first (ids 0..n-1), then outer/pendant
// v_1..v_n (ids n..2n-1) where the family has them, hub last.
Graph build(const FamilySpec& spec);

int degree(const Graph& g, int v);

// Each edge exactly once, lexicographic by (min id, max id).
std::vector<std::pair<int, int>> edge_list(const Graph& g);

bool is_independent(const Graph& g, std::span<const int> vertices);

bool is_connected(const Graph& g);

// Vertex label in the canonical layout: u1..un, v1..vn, hub.
std::string vertex_label(const Graph& g, int v);

// One `graph` block, labelled vertices, edges in lexicographic order.
std::string to_dot(const Graph& g, const std::string& name);

// Adjacency document (serialized JSON, keys sorted).
std::string to_adjacency_json(const Graph& g, const FamilySpec& spec);

}  // namespace chromind
