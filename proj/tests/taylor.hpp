#pragma once

// Test-only oracle: multigraded Betti numbers from the Taylor complex.
// Independent of the library's Koszul-complex route: tensoring the Taylor
// resolution of S/I with the residue field leaves, in multidegree b, the
// complex spanned by generator subsets with lcm b, with unit coefficients
// exactly where dropping a generator keeps the lcm. beta_{i,b}(I) is the
// homology of that complex one step up: beta_{i,b}(I) = beta_{i+1,b}(S/I).

#include <map>
#include <vector>

#include "monolab/betti.hpp"
#include "monolab/ideal.hpp"
#include "monolab/linalg.hpp"

namespace taylor {

inline monolab::BettiTable betti_table(const monolab::MonomialIdeal& ideal,
                                       long long characteristic) {
    using monolab::ExponentVector;
    using monolab::IntMatrix;
    using monolab::Monomial;
    const auto& gens = ideal.generators();
    const int m = static_cast<int>(gens.size());
    if (m > 20) throw std::invalid_argument("taylor oracle cap");
    const int n = ideal.vars();

    auto lcm_of = [&](uint32_t subset) {
        ExponentVector e(n, 0);
        for (int k = 0; k < m; ++k)
            if ((subset >> k) & 1u)
                for (int i = 0; i < n; ++i) e[i] = std::max(e[i], gens[k].exponents()[i]);
        return e;
    };

    // group subsets by lcm
    std::map<ExponentVector, std::vector<uint32_t>> strands;
    for (uint32_t s = 1; s < (1u << m); ++s) strands[lcm_of(s)].push_back(s);

    monolab::BettiTable table;
    table.characteristic = characteristic;
    for (const auto& [deg, subsets] : strands) {
        // chain spaces by subset size within this multidegree
        std::map<int, std::vector<uint32_t>> by_size;
        for (uint32_t s : subsets) by_size[__builtin_popcount(s)].push_back(s);
        auto space = [&](int size) -> const std::vector<uint32_t>* {
            auto it = by_size.find(size);
            return it == by_size.end() ? nullptr : &it->second;
        };
        auto boundary = [&](int size) {
            const auto* upper = space(size);
            const auto* lower = space(size - 1);
            IntMatrix mat(lower ? lower->size() : 0,
                          std::vector<long long>(upper ? upper->size() : 0, 0));
            if (!upper || !lower) return mat;
            std::map<uint32_t, int> index;
            for (size_t i = 0; i < lower->size(); ++i) index[(*lower)[i]] = static_cast<int>(i);
            for (size_t j = 0; j < upper->size(); ++j) {
                uint32_t s = (*upper)[j];
                int sign = 1;
                for (int k = 0; k < m; ++k) {
                    if (!((s >> k) & 1u)) continue;
                    uint32_t t = s & ~(1u << k);
                    // coefficient survives the tensor iff lcm is unchanged
                    if (t != 0 && lcm_of(t) == deg) {
                        auto it = index.find(t);
                        if (it != index.end()) mat[it->second][j] = sign;
                    }
                    sign = -sign;
                }
            }
            return mat;
        };
        for (int size = 1; size <= m; ++size) {
            const auto* cur = space(size);
            if (!cur) continue;
            int rk_in = monolab::exact_rank(boundary(size), characteristic);
            int rk_out = monolab::exact_rank(boundary(size + 1), characteristic);
            long long h = static_cast<long long>(cur->size()) - rk_in - rk_out;
            // homological degree `size` of S/I = degree size-1 of I
            if (h > 0) table.entries[{size - 1, deg}] = h;
        }
    }
    return table;
}

}  // namespace taylor
