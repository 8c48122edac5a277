#include <doctest.h>

#include <random>

#include "monolab/complex.hpp"
#include "monolab/ideal.hpp"

using namespace monolab;

namespace {

SimplicialComplex cx(int n, std::vector<std::vector<int>> facets) {
    return SimplicialComplex::from_vertex_sets(n, facets);
}

MonomialIdeal ideal(int n, std::vector<ExponentVector> vs) {
    std::vector<Monomial> gens;
    for (auto& v : vs) gens.emplace_back(std::move(v));
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal random_squarefree(std::mt19937_64& rng, int n, int count) {
    std::vector<Monomial> ms;
    for (int k = 0; k < count; ++k) {
        ExponentVector e(n);
        for (auto& x : e) x = static_cast<int>(rng() % 2);
        Monomial m(std::move(e));
        if (!m.is_one()) ms.push_back(m);
    }
    return MonomialIdeal::from_generators(n, std::move(ms));
}

}  // namespace

TEST_CASE("faces, dim, purity") {
    auto simplex = SimplicialComplex::simplex(3);
    CHECK(simplex.face_count() == 8);
    CHECK(simplex.dim() == 2);
    CHECK(simplex.is_pure());

    auto d = cx(3, {{3}, {1, 2}});
    CHECK(d.face_count() == 5);  // {}, {1}, {2}, {3}, {1,2}
    CHECK(d.dim() == 1);
    CHECK_FALSE(d.is_pure());

    CHECK(SimplicialComplex::empty_complex(2).dim() == -1);
    CHECK(SimplicialComplex::void_complex(2).is_void());
    CHECK_FALSE(SimplicialComplex::empty_complex(2) == SimplicialComplex::void_complex(2));
}

TEST_CASE("link and deletion") {
    auto d = cx(3, {{1, 2}, {3}});
    CHECK(deletion(d, 3) == cx(3, {{1, 2}}));
    CHECK(link(d, 3) == SimplicialComplex::empty_complex(3));
    CHECK(link(d, 1) == cx(3, {{2}}));
    CHECK(deletion(d, 1) == cx(3, {{2}, {3}}));

    // padding vertex: both stay Delta
    auto p = cx(4, {{1, 2}});
    CHECK(deletion(p, 3) == p);
    CHECK(link(p, 3) == p);

    auto s = SimplicialComplex::simplex(3);
    CHECK(link(s, 2).is_simplex());
    CHECK(deletion(s, 2).is_simplex());
}

TEST_CASE("skeletons") {
    auto d = cx(3, {{1, 2}, {3}});
    CHECK(skeleton(d, 0, 0) == cx(3, {{1}, {2}, {3}}));
    CHECK(skeleton(d, 1, 1) == cx(3, {{1, 2}}));  // pure 1-skeleton
    CHECK(skeleton(d, 0, 1) == d);
    CHECK_THROWS_AS(skeleton(d, 1, 2), std::invalid_argument);

    auto s = SimplicialComplex::simplex(4);
    CHECK(skeleton(s, 0, 1) == cx(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST_CASE("facet skeletons") {
    auto s = SimplicialComplex::simplex(3);
    CHECK(facet_skeleton(s, 1) == cx(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(facet_skeleton(cx(3, {{1, 2}, {3}}), 1) == cx(3, {{1}, {2}}));
    CHECK(facet_skeleton(cx(2, {{1}, {2}}), 1) == SimplicialComplex::empty_complex(2));
    CHECK_THROWS_AS(facet_skeleton(SimplicialComplex::empty_complex(2), 1), std::invalid_argument);
    CHECK(facet_skeleton(s, 2) == cx(3, {{1}, {2}, {3}}));
}

TEST_CASE("dual ideal and eagon complex") {
    auto d = cx(3, {{1, 2}, {3}});
    CHECK(dual_ideal(d) == ideal(3, {{0, 0, 1}, {1, 1, 0}}));
    CHECK(dual_ideal(SimplicialComplex::simplex(3)).is_unit());
    CHECK(dual_ideal(SimplicialComplex::void_complex(2)).is_zero());
    CHECK(dual_ideal(SimplicialComplex::empty_complex(3)) == ideal(3, {{1, 1, 1}}));

    CHECK(eagon_complex(dual_ideal(d)) == d);
    CHECK_THROWS_AS(eagon_complex(ideal(2, {{2, 0}})), std::invalid_argument);
}

TEST_CASE("duality roundtrips exhaustively for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const uint32_t full = (1u << n) - 1;
        // complexes = antichains of subsets; squarefree ideals = the same
        long long antichains = 0;
        for (uint64_t fam = 0; fam < (1ull << (full + 1)); ++fam) {
            std::vector<uint32_t> facets;
            for (uint32_t s = 0; s <= full; ++s)
                if ((fam >> s) & 1u) facets.push_back(s);
            bool antichain = true;
            for (uint32_t a : facets)
                for (uint32_t b : facets)
                    if (a != b && (a & ~b) == 0) antichain = false;
            if (!antichain) continue;
            ++antichains;
            auto delta = SimplicialComplex::from_facets(n, facets);
            CHECK(eagon_complex(dual_ideal(delta)) == delta);
            auto I = dual_ideal(delta);
            CHECK(dual_ideal(eagon_complex(I)) == I);
        }
        if (n == 4) CHECK(antichains == 168);  // Dedekind count M(4)
    }
}

TEST_CASE("stanley-reisner correspondence") {
    auto boundary = cx(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(stanley_reisner(boundary) == ideal(3, {{1, 1, 1}}));
    CHECK(sr_complex(ideal(2, {{1, 1}})) == cx(2, {{1}, {2}}));
    CHECK(stanley_reisner(SimplicialComplex::simplex(3)).is_zero());
    CHECK(sr_complex(MonomialIdeal::zero(3)) == SimplicialComplex::simplex(3));

    std::mt19937_64 rng(19);
    for (int it = 0; it < 100; ++it) {
        int n = 1 + static_cast<int>(rng() % 5);
        auto I = random_squarefree(rng, n, 4);
        if (I.is_unit()) continue;
        CHECK(stanley_reisner(sr_complex(I)) == I);
    }
}

TEST_CASE("observation (e): facet skeleton dual is the wedge with m") {
    std::mt19937_64 rng(29);
    int hits = 0;
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng() % 5);
        auto I = random_squarefree(rng, n, 4);
        if (I.is_trivial()) continue;
        auto delta = eagon_complex(I);
        if (delta.is_void() || delta.facets().front() == 0u) continue;
        ++hits;
        CHECK(dual_ideal(facet_skeleton(delta, 1)) ==
              ideal_wedge(dual_ideal(delta), MonomialIdeal::maximal(n)));
    }
    CHECK(hits > 100);
}

TEST_CASE("observation (b): skeleton duals from degree-filtered monomials") {
    std::mt19937_64 rng(37);
    int hits = 0;
    for (int it = 0; it < 60; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);  // n <= 5
        auto I = random_squarefree(rng, n, 4);
        if (I.is_trivial()) continue;
        auto delta = eagon_complex(I);
        if (delta.is_void() || delta.dim() < 0) continue;
        auto Idual = dual_ideal(delta);
        for (int r = 0; r <= delta.dim(); ++r)
            for (int s = r; s <= delta.dim(); ++s) {
                ++hits;
                auto lhs = dual_ideal(skeleton(delta, r, s));
                // squarefree f in I with deg f >= n-s, divisible by a minimal
                // generator of degree <= n-r
                std::vector<Monomial> fam;
                for (uint32_t mask = 0; mask < (1u << n); ++mask) {
                    ExponentVector e(n, 0);
                    int deg = 0;
                    for (int b = 0; b < n; ++b)
                        if ((mask >> b) & 1u) {
                            e[b] = 1;
                            ++deg;
                        }
                    Monomial f(e);
                    if (deg < n - s) continue;
                    bool witnessed = false;
                    for (const auto& u : Idual.generators())
                        if (u.degree() <= n - r && u.divides(f)) witnessed = true;
                    if (witnessed) fam.push_back(f);
                }
                CHECK(lhs == MonomialIdeal::from_generators(n, fam));
            }
    }
    CHECK(hits > 60);
}
