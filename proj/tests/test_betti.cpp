#include <doctest.h>

#include <random>

#include "monolab/betti.hpp"
#include "monolab/quotients.hpp"
#include "taylor.hpp"

using namespace monolab;

namespace {

MonomialIdeal ideal(int n, std::vector<ExponentVector> vs) {
    std::vector<Monomial> gens;
    for (auto& v : vs) gens.emplace_back(std::move(v));
    return MonomialIdeal::from_generators(n, std::move(gens));
}

SimplicialComplex cx(int n, std::vector<std::vector<int>> facets) {
    return SimplicialComplex::from_vertex_sets(n, facets);
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int max_exp, int count) {
    std::vector<Monomial> ms;
    std::uniform_int_distribution<int> d(0, max_exp);
    for (int k = 0; k < count; ++k) {
        ExponentVector e(n);
        for (auto& x : e) x = d(rng);
        Monomial m(std::move(e));
        if (!m.is_one()) ms.push_back(m);
    }
    return MonomialIdeal::from_generators(n, std::move(ms));
}

}  // namespace

TEST_CASE("koszul complexes") {
    auto I = ideal(2, {{1, 0}, {0, 1}});
    // at a = (1,1): {} (x1x2 in I), {1} (x2 in I), {2} (x1 in I); the full
    // face {1,2} would need 1 in I, so the complex is two points.
    CHECK(koszul_complex(I, {1, 1}) == cx(2, {{1}, {2}}));

    // at the degree of a minimal generator the complex is {emptyset}
    CHECK(koszul_complex(I, {1, 0}) == SimplicialComplex::empty_complex(2));
    auto J = ideal(4, {{2, 1, 0, 0}, {0, 0, 1, 2}});
    CHECK(koszul_complex(J, {2, 1, 0, 0}) == SimplicialComplex::empty_complex(4));

    // two disjoint supports at the joint lcm
    CHECK(koszul_complex(J, {2, 1, 1, 2}) == cx(4, {{1, 2}, {3, 4}}));
}

TEST_CASE("homology ranks of standard shapes") {
    auto circle = cx(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(homology_rank(circle, 1, 0) == 1);
    CHECK(homology_rank(circle, 0, 0) == 0);

    auto simplex = SimplicialComplex::simplex(3);
    for (int i = -1; i <= 2; ++i) CHECK(homology_rank(simplex, i, 0) == 0);

    auto two_points = cx(2, {{1}, {2}});
    CHECK(homology_rank(two_points, 0, 0) == 1);
    CHECK(homology_rank(two_points, -1, 0) == 0);

    CHECK(homology_rank(SimplicialComplex::empty_complex(2), -1, 0) == 1);
    CHECK(homology_rank(SimplicialComplex::void_complex(2), -1, 0) == 0);

    // same over F_2
    CHECK(homology_rank(circle, 1, 2) == 1);
    CHECK(homology_rank(two_points, 0, 2) == 1);
}

TEST_CASE("betti tables of the golden ideals") {
    auto I = ideal(2, {{1, 0}, {0, 1}});
    auto t = betti_table(I);
    CHECK(t.total_rank() == 3);
    CHECK(t.rank(0, {1, 0}) == 1);
    CHECK(t.rank(0, {0, 1}) == 1);
    CHECK(t.rank(1, {1, 1}) == 1);

    auto J = ideal(4, {{2, 1, 0, 0}, {0, 0, 1, 2}});
    auto tj = betti_table(J);
    CHECK(tj.total_rank() == 3);
    CHECK(tj.rank(0, {2, 1, 0, 0}) == 1);
    CHECK(tj.rank(0, {0, 0, 1, 2}) == 1);
    CHECK(tj.rank(1, {2, 1, 1, 2}) == 1);

    auto K = ideal(3, {{1, 1, 0}, {0, 1, 1}});
    auto tk = betti_table(K);
    CHECK(tk.total_rank() == 3);
    CHECK(tk.rank(1, {1, 1, 1}) == 1);
}

TEST_CASE("beta_0 counts minimal generators") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto I = random_ideal(rng, n, 3, 4);
        if (I.is_zero()) continue;
        auto t = betti_table(I);
        long long b0 = 0;
        for (const auto& [key, r] : t.entries)
            if (key.first == 0) b0 += r;
        CHECK(b0 == I.generator_count());
    }
}

TEST_CASE("koszul route agrees with the taylor oracle") {
    std::mt19937_64 rng(47);
    int checked = 0;
    for (int it = 0; it < 120; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto I = random_ideal(rng, n, 3, 4);
        if (I.is_zero() || I.generator_count() > 5) continue;
        ++checked;
        auto a = betti_table(I, 0);
        auto b = taylor::betti_table(I, 0);
        CHECK(a.entries == b.entries);
    }
    CHECK(checked > 60);
}

TEST_CASE("characteristic 0 and 2 agree at desk scale") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto I = random_ideal(rng, n, 2, 4);
        if (I.is_zero()) continue;
        auto a = betti_table(I, 0);
        auto b = betti_table(I, 2);
        CHECK(a.entries == b.entries);
    }
}

TEST_CASE("support regularity") {
    // <a^2 b, cd^2>: suppreg = |supp(a^2 b c d^2)| - 1 = 3
    auto J = ideal(4, {{2, 1, 0, 0}, {0, 0, 1, 2}});
    CHECK(support_regularity(J) == 3);
    CHECK_FALSE(is_support_linear(J, 2));

    // principal <x^a>: suppreg = |supp(a)|
    CHECK(support_regularity(ideal(3, {{2, 0, 3}})) == 2);

    // linear-quotient ideals: suppreg = max generator support-degree
    auto R = ideal(4, {{2, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 2}});
    REQUIRE(find_admissible_order(R, OrderConstraint::none).has_value());
    CHECK(support_regularity(R) == 3);

    auto vars = ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(support_regularity(vars) == 1);
    CHECK(is_componentwise_support_linear(vars));
}

TEST_CASE("suppreg is at least the max generator support-degree") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto I = random_ideal(rng, n, 3, 4);
        if (I.is_zero() || I.is_unit()) continue;
        CHECK(support_regularity(I) >= I.max_support_degree());
    }
}

TEST_CASE("regularity") {
    CHECK(regularity(ideal(2, {{1, 0}, {0, 1}})) == 1);
    // complete intersection <a^2 b, cd^2>: top Betti at a^2 b c d^2 in
    // homological degree 1, so reg = 6 - 1 = 5 with generators at i = 0.
    auto J = ideal(4, {{2, 1, 0, 0}, {0, 0, 1, 2}});
    CHECK(regularity(J) == 5);
    CHECK(regularity(taylor::betti_table(J, 0)) == 5);

    // linear quotients: reg = max generator degree
    std::mt19937_64 rng(61);
    int hits = 0;
    for (int it = 0; it < 80; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto I = random_ideal(rng, n, 3, 4);
        if (I.is_zero() || I.is_unit()) continue;
        if (!find_admissible_order(I, OrderConstraint::none)) continue;
        ++hits;
        CHECK(regularity(I) == I.max_degree());
    }
    CHECK(hits > 20);
}

TEST_CASE("alexander duality") {
    // principal: <x^a>^[g] = m^{g\a}
    auto P = ideal(2, {{1, 2}});
    CHECK(alexander_dual_ideal(P, {2, 2}) == ideal(2, {{2, 0}, {0, 1}}));

    CHECK(alexander_dual_ideal(MonomialIdeal::zero(2), {1, 1}).is_unit());
    CHECK(alexander_dual_ideal(MonomialIdeal::unit(2), {1, 1}).is_zero());
    CHECK_THROWS_AS(alexander_dual_ideal(ideal(2, {{3, 0}}), {2, 2}), std::invalid_argument);

    // classical squarefree case: matches the dual-complex route
    std::mt19937_64 rng(67);
    for (int it = 0; it < 80; ++it) {
        int n = 1 + static_cast<int>(rng() % 5);
        std::vector<Monomial> ms;
        for (int k = 0; k < 4; ++k) {
            ExponentVector e(n);
            for (auto& x : e) x = static_cast<int>(rng() % 2);
            Monomial m(std::move(e));
            if (!m.is_one()) ms.push_back(m);
        }
        auto I = MonomialIdeal::from_generators(n, std::move(ms));
        if (I.is_trivial()) continue;
        ExponentVector ones(n, 1);
        CHECK(alexander_dual_ideal(I, ones) == dual_ideal(sr_complex(I)));
    }
}

TEST_CASE("alexander duality is an involution") {
    std::mt19937_64 rng(71);
    int hits = 0;
    for (int it = 0; it < 120; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto I = random_ideal(rng, n, 3, 4);
        if (I.is_zero()) continue;
        ++hits;
        ExponentVector g(n, 0);
        for (const auto& u : I.generators())
            for (int i = 0; i < n; ++i) g[i] = std::max(g[i], u.exponents()[i]);
        for (int i = 0; i < n; ++i) g[i] += static_cast<int>(rng() % 2);
        CHECK(alexander_dual_ideal(alexander_dual_ideal(I, g), g) == I);
    }
    CHECK(hits > 60);
}

TEST_CASE("suppreg truncation profile") {
    auto vars = ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto pv = suppreg_truncation_profile(vars);
    CHECK(pv.at(1));

    auto J = ideal(4, {{2, 1, 0, 0}, {0, 0, 1, 2}});
    auto pj = suppreg_truncation_profile(J);
    CHECK_FALSE(pj.at(1));
    CHECK_FALSE(pj.at(2));
    CHECK(pj.at(3));
    int min_l = -1;
    for (const auto& [l, ok] : pj)
        if (ok && min_l < 0) min_l = l;
    CHECK(min_l == support_regularity(J));
}

TEST_CASE("truncation minimum equals suppreg on random instances") {
    std::mt19937_64 rng(73);
    int hits = 0;
    for (int it = 0; it < 50; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto I = random_ideal(rng, n, 2, 4);
        if (I.is_trivial()) continue;
        ++hits;
        auto profile = suppreg_truncation_profile(I);
        int min_l = -1;
        for (const auto& [l, ok] : profile)
            if (ok && min_l < 0) min_l = l;
        CHECK(min_l == support_regularity(I));
    }
    CHECK(hits > 25);
}
