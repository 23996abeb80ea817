#include "chromind/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "chromind/errors.hpp"
#include "json.hpp"

namespace chromind {

int vertex_budget() {
    if (const char* env = std::getenv("CHROMIND_BUDGET_VERTICES")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 25;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::cycle: return "cycle";
        case Family::wheel: return "wheel";
        case Family::helm: return "helm";
        case Family::flower: return "flower";
        case Family::sunflower: return "sunflower";
        case Family::closed_sunflower: return "closed_sunflower";
        case Family::blossom: return "blossom";
    }
    return "?";
}

bool parse_family(const std::string& name, Family& out) {
    static const Family all[] = {
        Family::cycle,     Family::wheel,     Family::helm,   Family::flower,
        Family::sunflower, Family::closed_sunflower, Family::blossom};
    for (Family f : all) {
        if (name == family_name(f)) {
            out = f;
            return true;
        }
    }
    return false;
}

const char* role_name(Role r) {
    switch (r) {
        case Role::hub: return "hub";
        case Role::rim: return "rim";
        case Role::outer: return "outer";
        case Role::plain: return "plain";
    }
    return "?";
}

Graph Graph::from_edges(int vertex_count,
                        std::span<const std::pair<int, int>> edges,
                        std::vector<Role> roles) {
    if (vertex_count < 0 || vertex_count > 64)
        throw std::invalid_argument("vertex count out of range (0..64)");
    Graph g;
    g.adj_.assign(vertex_count, {});
    g.mask_.assign(vertex_count, 0);
    if (roles.empty()) roles.assign(vertex_count, Role::plain);
    if (static_cast<int>(roles.size()) != vertex_count)
        throw std::invalid_argument("role list size mismatch");
    g.roles_ = std::move(roles);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop rejected");
        if (g.mask_[a] >> b & 1) continue;  // duplicate
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
        g.mask_[a] |= 1ULL << b;
        g.mask_[b] |= 1ULL << a;
        ++g.edge_count_;
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex id out of range");
    return adj_[v];
}

Role Graph::role(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex id out of range");
    return roles_[v];
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("vertex id out of range");
    return mask_[u] >> v & 1;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex id out of range");
    return mask_[v];
}

Graph build(const FamilySpec& spec) {
    const int n = spec.n;
    if (n < 3) throw std::invalid_argument("family graphs require n >= 3");

    std::vector<std::pair<int, int>> edges;
    std::vector<Role> roles;
    const auto rim_cycle = [&] {
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    };

    switch (spec.family) {
        case Family::cycle: {
            rim_cycle();
            roles.assign(n, Role::rim);
            return Graph::from_edges(n, edges, std::move(roles));
        }
        case Family::wheel: {
            rim_cycle();
            const int hub = n;
            for (int i = 0; i < n; ++i) edges.emplace_back(i, hub);
            roles.assign(n, Role::rim);
            roles.push_back(Role::hub);
            return Graph::from_edges(n + 1, edges, std::move(roles));
        }
        case Family::helm:
        case Family::flower:
        case Family::sunflower:
        case Family::closed_sunflower:
        case Family::blossom: {
            const int hub = 2 * n;
            rim_cycle();
            for (int i = 0; i < n; ++i) edges.emplace_back(i, hub);  // spokes
            if (spec.family == Family::helm || spec.family == Family::flower) {
                // pendant v_i attached to u_i
                for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
                if (spec.family == Family::flower)
                    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, hub);
            } else {
                // v_i adjacent to u_i and u_{i+1 mod n}
                for (int i = 0; i < n; ++i) {
                    edges.emplace_back(n + i, i);
                    edges.emplace_back(n + i, (i + 1) % n);
                }
                if (spec.family != Family::sunflower)
                    for (int i = 0; i < n; ++i)
                        edges.emplace_back(n + i, n + (i + 1) % n);  // outer cycle
                if (spec.family == Family::blossom)
                    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, hub);
            }
            roles.assign(n, Role::rim);
            roles.insert(roles.end(), n, Role::outer);
            roles.push_back(Role::hub);
            return Graph::from_edges(2 * n + 1, edges, std::move(roles));
        }
    }
    throw std::invalid_argument("unknown family");
}

int degree(const Graph& g, int v) {
    return static_cast<int>(g.neighbors(v).size());
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (v < w) out.emplace_back(v, w);
    return out;
}

bool is_independent(const Graph& g, std::span<const int> vertices) {
    std::uint64_t picked = 0;
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex id out of range");
        picked |= 1ULL << v;
    }
    for (int v : vertices)
        if (g.neighbor_mask(v) & picked) return false;
    return true;
}

bool is_connected(const Graph& g) {
    const int V = g.vertex_count();
    if (V == 0) return true;
    std::vector<char> seen(V, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == V;
}

std::string vertex_label(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex id out of range");
    if (g.role(v) == Role::hub) return "hub";
    int rims = 0;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (g.role(i) == Role::rim) ++rims;
    if (g.role(v) == Role::rim) return "u" + std::to_string(v + 1);
    return "v" + std::to_string(v - rims + 1);
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  " << vertex_label(g, v) << ";\n";
    for (auto [a, b] : edge_list(g))
        os << "  " << vertex_label(g, a) << " -- " << vertex_label(g, b) << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_adjacency_json(const Graph& g, const FamilySpec& spec) {
    nlohmann::json doc;
    doc["family"] = family_name(spec.family);
    doc["n"] = spec.n;
    doc["vertex_count"] = g.vertex_count();
    doc["edge_count"] = g.edge_count();
    auto roles = nlohmann::json::array();
    auto labels = nlohmann::json::array();
    auto adjacency = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        roles.push_back(role_name(g.role(v)));
        labels.push_back(vertex_label(g, v));
        adjacency.push_back(g.neighbors(v));
    }
    doc["roles"] = roles;
    doc["labels"] = labels;
    doc["adjacency"] = adjacency;
    return doc.dump(2) + "\n";
}

}  // namespace chromind
