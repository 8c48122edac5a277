#include "monolab/betti.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "monolab/linalg.hpp"
#include "monolab/report.hpp"

namespace monolab {

namespace {

// Boundary matrix from k-faces to (k-1)-faces with alternating signs; the
// empty face spans chain degree -1.
IntMatrix boundary_matrix(const std::vector<uint32_t>& lower, const std::vector<uint32_t>& upper) {
    std::map<uint32_t, int> index;
    for (size_t i = 0; i < lower.size(); ++i) index[lower[i]] = static_cast<int>(i);
    IntMatrix m(lower.size(), std::vector<long long>(upper.size(), 0));
    for (size_t j = 0; j < upper.size(); ++j) {
        const uint32_t f = upper[j];
        int sign = 1;
        for (int b = 0; b < 32; ++b) {
            if (!((f >> b) & 1u)) continue;
            auto it = index.find(f & ~(1u << b));
            if (it != index.end()) m[it->second][j] = sign;
            sign = -sign;
        }
    }
    return m;
}

}  // namespace

long long BettiTable::rank(int i, const ExponentVector& degree) const {
    auto it = entries.find({i, degree});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::max_homological_index() const {
    int m = -1;
    for (const auto& [key, _] : entries) m = std::max(m, key.first);
    return m;
}

long long BettiTable::total_rank() const {
    long long t = 0;
    for (const auto& [_, r] : entries) t += r;
    return t;
}

nlohmann::json BettiTable::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, r] : entries)
        arr.push_back({{"i", key.first}, {"degree", key.second}, {"rank", r}});
    return nlohmann::json{{"characteristic", characteristic}, {"entries", arr}};
}

SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const ExponentVector& a) {
    if (ideal.is_zero()) throw std::invalid_argument("koszul complex of the zero ideal");
    const int n = ideal.vars();
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("multidegree dimension mismatch");
    std::vector<int> supp;
    for (int i = 0; i < n; ++i)
        if (a[i] > 0) supp.push_back(i);
    std::vector<uint32_t> faces;
    const size_t k = supp.size();
    for (uint32_t pick = 0; pick < (1u << k); ++pick) {
        ExponentVector e(a);
        uint32_t mask = 0;
        for (size_t b = 0; b < k; ++b)
            if ((pick >> b) & 1u) {
                e[supp[b]] -= 1;
                mask |= (1u << supp[b]);
            }
        if (ideal.contains(Monomial(e))) faces.push_back(mask);
    }
    if (faces.empty()) return SimplicialComplex::void_complex(n);
    return SimplicialComplex::from_facets(n, std::move(faces));
}

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& delta,
                                              long long characteristic) {
    const int d = delta.dim();
    if (delta.is_void()) return {};
    std::vector<std::vector<uint32_t>> by_dim(d + 2);  // index k = faces of dim k-1
    for (uint32_t f : delta.faces()) by_dim[std::popcount(f)].push_back(f);
    // ranks of the boundary maps d_k : C_k -> C_{k-1}, k = 0..d (face sizes)
    std::vector<int> bd_rank(d + 3, 0);
    for (int k = 1; k <= d + 1; ++k)
        bd_rank[k] = exact_rank(boundary_matrix(by_dim[k - 1], by_dim[k]), characteristic);
    std::vector<long long> out(d + 2, 0);  // out[i+1] = rank of H~_i
    for (int i = -1; i <= d; ++i) {
        long long faces_i = static_cast<long long>(by_dim[i + 1].size());
        out[i + 1] = faces_i - bd_rank[i + 1] - bd_rank[i + 2];
    }
    return out;
}

long long homology_rank(const SimplicialComplex& delta, int i, long long characteristic) {
    if (delta.is_void()) return 0;
    if (i < -1 || i > delta.dim()) return 0;
    return reduced_homology_ranks(delta, characteristic)[i + 1];
}

std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& ideal) {
    // closure of the generators under pairwise lcm
    std::set<ExponentVector> seen;
    std::vector<ExponentVector> queue;
    for (const auto& g : ideal.generators())
        if (seen.insert(g.exponents()).second) queue.push_back(g.exponents());
    for (size_t q = 0; q < queue.size(); ++q) {
        for (const auto& g : ideal.generators()) {
            ExponentVector e(queue[q]);
            for (int i = 0; i < ideal.vars(); ++i) e[i] = std::max(e[i], g.exponents()[i]);
            if (seen.insert(e).second) queue.push_back(std::move(e));
        }
    }
    return {seen.begin(), seen.end()};
}

BettiTable betti_table(const MonomialIdeal& ideal, long long characteristic, int gen_cap) {
    if (ideal.is_zero()) throw std::invalid_argument("betti table of the zero ideal");
    if (ideal.generator_count() > gen_cap)
        throw cap_exceeded("betti table generator cap exceeded");
    BettiTable table;
    table.characteristic = characteristic;
    for (const auto& b : lcm_lattice(ideal)) {
        SimplicialComplex k = koszul_complex(ideal, b);
        auto ranks = reduced_homology_ranks(k, characteristic);
        for (int i = -1; i + 1 < static_cast<int>(ranks.size()); ++i)
            if (ranks[i + 1] > 0) table.entries[{i + 1, b}] = ranks[i + 1];
    }
    return table;
}

int support_regularity(const BettiTable& table) {
    if (table.entries.empty()) throw std::invalid_argument("empty betti table");
    int best = 0;
    bool any = false;
    for (const auto& [key, r] : table.entries) {
        if (r == 0) continue;
        int supp = static_cast<int>(std::count_if(key.second.begin(), key.second.end(),
                                                  [](int e) { return e > 0; }));
        best = any ? std::max(best, supp - key.first) : supp - key.first;
        any = true;
    }
    return best;
}

int support_regularity(const MonomialIdeal& ideal, long long characteristic) {
    return support_regularity(betti_table(ideal, characteristic));
}

int regularity(const BettiTable& table) {
    if (table.entries.empty()) throw std::invalid_argument("empty betti table");
    int best = 0;
    bool any = false;
    for (const auto& [key, r] : table.entries) {
        if (r == 0) continue;
        int deg = 0;
        for (int e : key.second) deg += e;
        best = any ? std::max(best, deg - key.first) : deg - key.first;
        any = true;
    }
    return best;
}

int regularity(const MonomialIdeal& ideal, long long characteristic) {
    return regularity(betti_table(ideal, characteristic));
}

bool is_support_linear(const MonomialIdeal& ideal, int d, long long characteristic) {
    if (ideal.is_zero()) return false;
    if (!(support_component(ideal, d, SupportMode::exact) == ideal)) return false;
    return support_regularity(ideal, characteristic) == d;
}

bool is_componentwise_support_linear(const MonomialIdeal& ideal, long long characteristic) {
    if (ideal.is_trivial()) return true;
    for (int d = 1; d <= ideal.vars(); ++d) {
        MonomialIdeal comp = support_component(ideal, d, SupportMode::exact);
        if (comp.is_zero()) continue;
        if (!is_support_linear(comp, d, characteristic)) return false;
    }
    return true;
}

MonomialIdeal alexander_dual_ideal(const MonomialIdeal& ideal, const ExponentVector& g) {
    const int n = ideal.vars();
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("g has wrong dimension");
    if (ideal.is_zero()) return MonomialIdeal::unit(n);
    const Monomial xg((ExponentVector(g)));
    for (const auto& u : ideal.generators())
        if (!u.divides(xg))
            throw std::invalid_argument("generator " + u.str() + " does not divide x^g");
    MonomialIdeal dual = MonomialIdeal::unit(n);
    for (const auto& u : ideal.generators()) {
        IrreducibleIdeal irr(gminus(g, u.exponents()));
        dual = ideal_intersection(dual, irr.to_ideal());
    }
    return dual;
}

std::map<int, bool> suppreg_truncation_profile(const MonomialIdeal& ideal,
                                               long long characteristic) {
    std::map<int, bool> out;
    for (int l = 1; l <= ideal.vars(); ++l) {
        MonomialIdeal trunc = support_component(ideal, l, SupportMode::at_least);
        if (trunc.is_zero()) continue;
        out[l] = is_support_linear(trunc, l, characteristic);
    }
    return out;
}

}  // namespace monolab
