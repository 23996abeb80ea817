#include <cstdlib>
#include <stdexcept>

#include "chromind/coloring.hpp"
#include "chromind/errors.hpp"
#include "chromind/graph.hpp"
#include "chromind/indices.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace chromind;

namespace {

std::vector<long long> strengths(const Graph& g, const Coloring& c) {
    return profile(g, c).theta;
}

}  // namespace

TEST_CASE("validate finds exactly the violating edges") {
    Graph c4 = build({Family::cycle, 4});
    CHECK(validate(c4, Coloring::of({1, 2, 1, 2})).empty());

    Graph c3 = build({Family::cycle, 3});
    auto bad = validate(c3, Coloring::of({1, 2, 2}));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == std::pair<int, int>{1, 2});

    CHECK_THROWS_AS(validate(c4, Coloring::of({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(validate(c4, Coloring::of({1, 0, 1, 0})), std::invalid_argument);

    CHECK(validate(build({Family::flower, 4}),
                   witness_coloring({Family::flower, 4}, Variant::minus, Index::m1))
              .empty());
}

TEST_CASE("chromatic numbers of small graphs") {
    CHECK(chromatic_number(build({Family::cycle, 4})) == 2);
    CHECK(chromatic_number(build({Family::cycle, 5})) == 3);
    CHECK(chromatic_number(build({Family::wheel, 6})) == 3);
    CHECK(chromatic_number(build({Family::wheel, 5})) == 4);
    CHECK(chromatic_number(build({Family::flower, 6})) == 3);
    CHECK(chromatic_number(build({Family::flower, 5})) == 4);
    CHECK(chromatic_number(build({Family::sunflower, 4})) == 3);
    CHECK(chromatic_number(build({Family::sunflower, 7})) == 4);
    CHECK(chromatic_number(Graph{}) == 0);
}

TEST_CASE("chromatic number agrees with reference enumeration") {
    // exhaustive cross-check: chi is the least k with a nonzero count
    for (Family f : {Family::cycle, Family::wheel, Family::flower}) {
        for (int n : {3, 4, 5}) {
            Graph g = build({f, n});
            auto tiny = testsupport::Tiny::of(g);
            int chi = chromatic_number(g);
            CHECK(tiny.count(chi) > 0);
            CHECK(tiny.count(chi - 1) == 0);
        }
    }
    // closed sunflowers: 4 colours suffice for every small n, 3 never do
    for (int n = 4; n <= 7; ++n) {
        Graph g = build({Family::closed_sunflower, n});
        auto tiny = testsupport::Tiny::of(g);
        CHECK(tiny.count(3) == 0);
        CHECK(tiny.count(4) > 0);
        CHECK(chromatic_number(g) == 4);
    }
    // blossoms lose a colour when the antiprism part is 3-colourable
    CHECK(chromatic_number(build({Family::blossom, 4})) == 5);
    CHECK(chromatic_number(build({Family::blossom, 5})) == 5);
    CHECK(chromatic_number(build({Family::blossom, 6})) == 4);
}

TEST_CASE("phi_minus strength vectors") {
    Graph f4 = build({Family::flower, 4});
    Coloring c = phi_minus(f4, 3);
    CHECK(strengths(f4, c) == std::vector<long long>{4, 4, 1});
    // deterministic tie-break: lexicographically smallest zeta
    CHECK(c.zeta == std::vector<int>{1, 2, 1, 2, 2, 1, 2, 1, 3});

    Graph sf5 = build({Family::sunflower, 5});
    CHECK(strengths(sf5, phi_minus(sf5, 4)) == std::vector<long long>{6, 2, 2, 1});

    Graph c4 = build({Family::cycle, 4});
    CHECK(strengths(c4, phi_minus(c4, 2)) == std::vector<long long>{2, 2});
}

TEST_CASE("phi_plus strength vectors") {
    Graph f4 = build({Family::flower, 4});
    CHECK(strengths(f4, phi_plus(f4, 3)) == std::vector<long long>{1, 4, 4});

    Graph sf4 = build({Family::sunflower, 4});
    CHECK(strengths(sf4, phi_plus(sf4, 3)) == std::vector<long long>{2, 2, 5});

    Graph c4 = build({Family::cycle, 4});
    CHECK(strengths(c4, phi_plus(c4, 2)) == std::vector<long long>{2, 2});
}

TEST_CASE("phi outputs are proper, surjective, and mirror under reversal") {
    for (Family f : {Family::flower, Family::sunflower, Family::closed_sunflower}) {
        for (int n : {4, 5, 6}) {
            Graph g = build({f, n});
            int k = chromatic_number(g);
            Coloring lo = phi_minus(g, k);
            Coloring hi = phi_plus(g, k);
            CHECK(validate(g, lo).empty());
            CHECK(validate(g, hi).empty());
            auto lo_theta = strengths(g, lo);
            auto hi_theta = strengths(g, hi);
            CHECK(static_cast<int>(lo_theta.size()) == k);
            for (long long t : lo_theta) CHECK(t > 0);

            // reversed phi_minus is proper with the reversed strengths, and
            // phi_plus dominates it lexicographically from the right
            Coloring rev = lo;
            for (int& z : rev.zeta) z = k + 1 - z;
            CHECK(validate(g, rev).empty());
            auto rev_theta = strengths(g, rev);
            for (int j = 0; j < k; ++j) CHECK(rev_theta[j] == lo_theta[k - 1 - j]);
            bool ge = true;
            for (int j = k - 1; j >= 0; --j) {
                if (hi_theta[j] != rev_theta[j]) {
                    ge = hi_theta[j] > rev_theta[j];
                    break;
                }
            }
            CHECK(ge);
        }
    }
}

TEST_CASE("phi_minus matches a reference lexicographic search") {
    // the weighted branch-and-bound must agree with plain enumeration
    for (Family f : {Family::cycle, Family::wheel, Family::flower, Family::sunflower}) {
        for (int n : {4, 5}) {
            Graph g = build({f, n});
            int k = chromatic_number(g);
            auto tiny = testsupport::Tiny::of(g);
            std::vector<long long> best_theta;
            std::vector<int> best_zeta;
            tiny.enumerate(k, [&](const std::vector<int>& z) {
                std::vector<long long> theta(k, 0);
                for (int zz : z) ++theta[zz - 1];
                for (long long t : theta)
                    if (t == 0) return;  // must use every colour
                if (best_theta.empty() || theta > best_theta) {
                    best_theta = theta;
                    best_zeta = z;
                }
            });
            Coloring got = phi_minus(g, k);
            CHECK(strengths(g, got) == best_theta);
            CHECK(got.zeta == best_zeta);  // first enumerated optimum
        }
    }
}

TEST_CASE("phi errors") {
    Graph c5 = build({Family::cycle, 5});
    CHECK_THROWS_AS(phi_minus(c5, 2), std::invalid_argument);

    setenv("CHROMIND_BUDGET_VERTICES", "5", 1);
    CHECK_THROWS_AS(phi_minus(build({Family::flower, 4}), 3), BudgetError);
    CHECK_THROWS_AS(chromatic_number(build({Family::flower, 4})), BudgetError);
    unsetenv("CHROMIND_BUDGET_VERTICES");
    CHECK(chromatic_number(build({Family::flower, 4})) == 3);
}

TEST_CASE("witness colourings are proper and hit the stated strengths") {
    CHECK(strengths(build({Family::flower, 5}),
                    witness_coloring({Family::flower, 5}, Variant::minus, Index::m1)) ==
          std::vector<long long>{5, 4, 1, 1});
    CHECK(strengths(build({Family::closed_sunflower, 6}),
                    witness_coloring({Family::closed_sunflower, 6}, Variant::minus,
                                     Index::m1)) == std::vector<long long>{4, 4, 4, 1});

    auto p = profile(build({Family::blossom, 4}),
                     witness_coloring({Family::blossom, 4}, Variant::minus, Index::m2));
    CHECK(p.eta(1, 4) == 4);
    CHECK(p.eta(2, 3) == 4);

    for (Family f : {Family::flower, Family::sunflower, Family::closed_sunflower,
                     Family::blossom})
        for (int n = 4; n <= 7; ++n)
            for (Variant v : {Variant::minus, Variant::plus})
                for (Index idx : {Index::m1, Index::m2, Index::m3, Index::m4}) {
                    Graph g = build({f, n});
                    Coloring w = witness_coloring({f, n}, v, idx);
                    CHECK(validate(g, w).empty());
                }
}

TEST_CASE("witness rejects unsupported combinations explicitly") {
    CHECK_THROWS_AS(witness_coloring({Family::cycle, 5}, Variant::minus, Index::m1),
                    NoWitnessError);
    CHECK_THROWS_AS(witness_coloring({Family::flower, 3}, Variant::minus, Index::m1),
                    NoWitnessError);
    CHECK_THROWS_AS(witness_coloring({Family::wheel, 6}, Variant::plus, Index::m2),
                    NoWitnessError);
}

TEST_CASE("coloring json is a plain array") {
    CHECK(coloring_json(Coloring::of({1, 2, 1, 2})) == "[1,2,1,2]");
}
