#include "chromind/indices.hpp"

#include <cstdlib>
#include <stdexcept>

#include "chromind/errors.hpp"
#include "json.hpp"

namespace chromind {

ColorProfile profile(const Graph& g, const Coloring& c) {
    auto bad = validate(g, c);
    if (!bad.empty())
        throw ImproperColoringError("profile of an improper colouring", std::move(bad));
    int ell = c.num_colors;
    for (int z : c.zeta)
        if (z > ell) ell = z;

    ColorProfile p;
    p.num_colors = ell;
    p.theta.assign(ell, 0);
    p.eta_.assign(ell + 1, std::vector<long long>(ell + 1, 0));
    for (int z : c.zeta) ++p.theta[z - 1];
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (v < w) {
                int t = std::min(c.zeta[v], c.zeta[w]);
                int s = std::max(c.zeta[v], c.zeta[w]);
                ++p.eta_[t][s];
            }
    return p;
}

long long m1(const ColorProfile& p) {
    long long sum = 0;
    for (int j = 1; j <= p.num_colors; ++j)
        sum += p.theta_of(j) * static_cast<long long>(j) * j;
    return sum;
}

long long m2(const Graph& g, const Coloring& c) {
    auto bad = validate(g, c);
    if (!bad.empty())
        throw ImproperColoringError("m2 of an improper colouring", std::move(bad));
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (v < w)
                sum += static_cast<long long>(c.zeta[v]) * c.zeta[w];
    return sum;
}

long long m3(const Graph& g, const Coloring& c) {
    auto bad = validate(g, c);
    if (!bad.empty())
        throw ImproperColoringError("m3 of an improper colouring", std::move(bad));
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (v < w) sum += std::abs(c.zeta[v] - c.zeta[w]);
    return sum;
}

Rat m4(const ColorProfile& p, M4Convention convention) {
    long long std_sum = 0;
    for (int t = 1; t <= p.num_colors; ++t)
        for (int s = t + 1; s <= p.num_colors; ++s)
            std_sum += p.theta_of(t) * p.theta_of(s) * (s - t);
    if (convention == M4Convention::standard) return Rat(std_sum);
    return Rat(std_sum, 2);
}

IndexBundle bundle(const Graph& g, const Coloring& c) {
    ColorProfile p = profile(g, c);
    IndexBundle b;
    b.m1 = m1(p);
    long long m1_direct = 0;
    for (int z : c.zeta) m1_direct += static_cast<long long>(z) * z;
    if (m1_direct != b.m1)
        throw std::logic_error("m1 per-class and per-vertex sums disagree");
    b.m2 = m2(g, c);
    long long m2_via_eta = 0;
    for (int t = 1; t <= p.num_colors; ++t)
        for (int s = t + 1; s <= p.num_colors; ++s)
            m2_via_eta += static_cast<long long>(t) * s * p.eta(t, s);
    if (m2_via_eta != b.m2)
        throw std::logic_error("m2 edge and eta sums disagree");
    b.m3 = m3(g, c);
    b.m4_std = m4(p, M4Convention::standard).num;
    b.m4_paper = m4(p, M4Convention::paper);
    return b;
}

std::string bundle_json(const IndexBundle& b) {
    nlohmann::json j;
    j["m1"] = b.m1;
    j["m2"] = b.m2;
    j["m3"] = b.m3;
    j["m4_std"] = b.m4_std;
    j["m4_paper"] = {{"num", b.m4_paper.num}, {"den", b.m4_paper.den}};
    return j.dump();
}

}  // namespace chromind
