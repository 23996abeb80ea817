#include <vector>

#include "chromind/coloring.hpp"
#include "chromind/errors.hpp"

namespace chromind {

namespace {

// Positions use the canonical layout: rim u_1..u_n at ids 0..n-1,
// outer v_1..v_n at ids n..2n-1, hub at 2n. Setters below take 1-based i.
struct Builder {
    int n;
    std::vector<int> zeta;
    explicit Builder(int n_) : n(n_), zeta(2 * n_ + 1, 0) {}
    void u(int i, int c) { zeta[i - 1] = c; }
    void v(int i, int c) { zeta[n + i - 1] = c; }
    void hub(int c) { zeta[2 * n] = c; }
};

Coloring reverse_labels(Coloring c) {
    for (int& z : c.zeta) z = c.num_colors + 1 - z;
    return c;
}

Coloring flower_minus(int n) {
    Builder b(n);
    if (n % 2 == 0) {
        for (int i = 1; i <= n; ++i) b.u(i, i % 2 == 0 ? 1 : 2);
        for (int i = 1; i <= n; ++i) b.v(i, i % 2 == 1 ? 1 : 2);
        b.hub(3);
        return Coloring{std::move(b.zeta), 3};
    }
    for (int i = 1; i <= n - 1; ++i) b.u(i, i % 2 == 0 ? 1 : 2);
    b.u(n, 4);
    for (int i = 1; i <= n; ++i) b.v(i, i % 2 == 1 ? 1 : 2);
    b.hub(3);
    return Coloring{std::move(b.zeta), 4};
}

Coloring sunflower_minus(int n) {
    Builder b(n);
    const bool even = n % 2 == 0;
    for (int i = 1; i <= (even ? n : n - 1); ++i) b.u(i, i % 2 == 1 ? 2 : 3);
    if (!even) b.u(n, 4);
    for (int i = 1; i <= n; ++i) b.v(i, 1);
    b.hub(1);
    return Coloring{std::move(b.zeta), even ? 3 : 4};
}

Coloring closed_sunflower_minus(int n) {
    Builder b(n);
    switch (n % 3) {
        case 0:
            for (int i = 1; i <= n; ++i) b.u(i, (i - 1) % 3 + 1);
            for (int i = 1; i <= n; ++i) b.v(i, (i + 1) % 3 + 1);
            b.hub(4);
            return Coloring{std::move(b.zeta), 4};
        case 1:
            for (int i = 1; i <= n - 1; ++i) b.u(i, (i - 1) % 3 + 1);
            b.u(n, 4);
            b.v(1, 4);
            for (int i = 2; i <= n - 1; ++i) b.v(i, (i + 1) % 3 + 1);
            b.v(n, 3);
            b.hub(5);
            return Coloring{std::move(b.zeta), 5};
        default:
            for (int i = 1; i <= n - 1; ++i) {
                int r = i % 3;
                b.u(i, r == 1 ? 3 : r == 2 ? 2 : 1);
                b.v(i, r == 1 ? 1 : r == 2 ? 3 : 2);
            }
            b.u(n, 5);
            b.v(n, 2);
            b.hub(4);
            return Coloring{std::move(b.zeta), 5};
    }
}

// Even blossoms use two constructions: the strength-balanced one behind the
// m1/m3/m4 values and the m2-specific relabelling of the two cycles.
Coloring blossom_minus(int n, bool m2_layout) {
    Builder b(n);
    if (n % 2 == 0) {
        for (int i = 1; i <= n; ++i) {
            if (m2_layout) {
                b.v(i, i % 2 == 1 ? 1 : 4);
                b.u(i, i % 2 == 1 ? 2 : 3);
            } else {
                b.v(i, i % 2 == 1 ? 1 : 2);
                b.u(i, i % 2 == 1 ? 3 : 4);
            }
        }
        b.hub(5);
        return Coloring{std::move(b.zeta), 5};
    }
    for (int i = 1; i <= n - 2; ++i) b.u(i, i % 2 == 1 ? 3 : 4);
    b.u(n - 1, 1);
    b.u(n, 2);
    for (int i = 1; i <= n - 2; ++i) b.v(i, i % 2 == 1 ? 2 : 1);
    b.v(n - 1, 3);
    b.v(n, 1);
    b.hub(5);
    return Coloring{std::move(b.zeta), 5};
}

}  // namespace

Coloring witness_coloring(const FamilySpec& spec, Variant variant, Index index) {
    const int n = spec.n;
    const auto unsupported = [&](const char* why) -> NoWitnessError {
        std::string msg = "no witness defined for ";
        msg += family_name(spec.family);
        msg += "(n=" + std::to_string(n) + ", ";
        msg += variant_name(variant);
        msg += ", ";
        msg += index_name(index);
        msg += "): ";
        msg += why;
        return NoWitnessError(msg);
    };

    if (n < 4) throw unsupported("constructions start at n = 4");

    Coloring minus;
    switch (spec.family) {
        case Family::flower:
            minus = flower_minus(n);
            break;
        case Family::sunflower:
            minus = sunflower_minus(n);
            break;
        case Family::closed_sunflower:
            minus = closed_sunflower_minus(n);
            break;
        case Family::blossom:
            if (n % 2 == 1 && n < 5) throw unsupported("odd construction needs n >= 5");
            minus = blossom_minus(n, index == Index::m2 && n % 2 == 0);
            break;
        default:
            throw unsupported("family has no closed-form colouring");
    }
    return variant == Variant::minus ? minus : reverse_labels(std::move(minus));
}

}  // namespace chromind
