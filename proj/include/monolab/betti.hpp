#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monolab/complex.hpp"
#include "monolab/ideal.hpp"

namespace monolab {

/// Multigraded Betti numbers of a monomial ideal, with the module convention:
/// beta_{0,.} counts the minimal generators of I (the ideal sits in
/// homological degree 0). Zero entries are omitted.
struct BettiTable {
    long long characteristic = 0;
    std::map<std::pair<int, ExponentVector>, long long> entries;

    long long rank(int i, const ExponentVector& degree) const;
    int max_homological_index() const;
    long long total_rank() const;
    nlohmann::json to_json() const;
};

/// Upper Koszul simplicial complex of I at multidegree a:
/// faces F inside supp(a) with x^{a - e_F} in I.
SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const ExponentVector& a);

/// Rank of the i-th reduced simplicial homology over Q (characteristic 0) or
/// F_p, via exact boundary-matrix ranks. i may be any integer; out-of-range
/// indices give 0. For {emptyset} the only nonzero rank is 1 at i = -1.
long long homology_rank(const SimplicialComplex& delta, int i, long long characteristic);

/// All reduced homology ranks, indexed from i = -1 to dim.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& delta,
                                              long long characteristic);

/// Full multigraded Betti table via Koszul complexes at the lcm-lattice
/// degrees. Requires |G(I)| <= gen_cap (cap_exceeded otherwise).
BettiTable betti_table(const MonomialIdeal& ideal, long long characteristic = 0, int gen_cap = 16);

/// Distinct lcms of nonempty generator subsets (the lcm lattice).
std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& ideal);

/// suppreg(I) = max |supp(b)| - i over nonzero beta_{i,b}(I).
int support_regularity(const BettiTable& table);
int support_regularity(const MonomialIdeal& ideal, long long characteristic = 0);

/// Castelnuovo-Mumford regularity from the multigraded table:
/// max deg(b) - i over nonzero entries.
int regularity(const BettiTable& table);
int regularity(const MonomialIdeal& ideal, long long characteristic = 0);

/// I is d-support-linear when I = I<d> and suppreg(I) = d.
bool is_support_linear(const MonomialIdeal& ideal, int d, long long characteristic = 0);
/// Every nonzero support component I<d> is d-support-linear.
bool is_componentwise_support_linear(const MonomialIdeal& ideal, long long characteristic = 0);

/// Generalized Alexander dual I^[g]: the intersection of the irreducible
/// ideals m^{g \ a} over the minimal generators x^a. Every generator must
/// divide x^g. <0> and <1> swap under the duality.
MonomialIdeal alexander_dual_ideal(const MonomialIdeal& ideal, const ExponentVector& g);

/// For l = 1..n, whether I<>=l> is l-support-linear. The minimum holding l
/// equals suppreg(I).
std::map<int, bool> suppreg_truncation_profile(const MonomialIdeal& ideal,
                                               long long characteristic = 0);

}  // namespace monolab
