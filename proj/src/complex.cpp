#include "monolab/complex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "monolab/report.hpp"

namespace monolab {

namespace {

uint32_t full_mask(int n) { return n == 32 ? ~0u : (1u << n) - 1u; }

bool subset(uint32_t a, uint32_t b) { return (a & ~b) == 0; }

std::vector<uint32_t> maximal_faces(std::vector<uint32_t> fam) {
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    std::vector<uint32_t> out;
    for (uint32_t f : fam) {
        bool dominated = false;
        for (uint32_t g : fam)
            if (f != g && subset(f, g)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(f);
    }
    // canonical: by size, then by mask value
    std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return out;
}

Monomial mask_monomial(int n, uint32_t mask) {
    ExponentVector e(n, 0);
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) e[i] = 1;
    return Monomial(std::move(e));
}

uint32_t support_mask(const Monomial& m) {
    uint32_t mask = 0;
    for (int v : m.support()) mask |= (1u << (v - 1));
    return mask;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int n) { return SimplicialComplex(n, {}); }

SimplicialComplex SimplicialComplex::empty_complex(int n) { return SimplicialComplex(n, {0u}); }

SimplicialComplex SimplicialComplex::simplex(int n) {
    return SimplicialComplex(n, {full_mask(n)});
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<uint32_t> facets) {
    if (n < 0 || n > 31) throw std::invalid_argument("ground set size out of range");
    for (uint32_t f : facets)
        if (!subset(f, full_mask(n))) throw std::invalid_argument("facet outside ground set");
    return SimplicialComplex(n, maximal_faces(std::move(facets)));
}

SimplicialComplex SimplicialComplex::from_vertex_sets(int n,
                                                      const std::vector<std::vector<int>>& sets) {
    std::vector<uint32_t> facets;
    for (const auto& s : sets) {
        uint32_t mask = 0;
        for (int v : s) {
            if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
            mask |= (1u << (v - 1));
        }
        facets.push_back(mask);
    }
    return from_facets(n, std::move(facets));
}

int SimplicialComplex::dim() const {
    if (is_void()) return -2;
    int d = -1;
    for (uint32_t f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (uint32_t f : facets_)
        if (std::popcount(f) != std::popcount(facets_.front())) return false;
    return true;
}

bool SimplicialComplex::contains_face(uint32_t face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](uint32_t f) { return subset(face, f); });
}

std::vector<uint32_t> SimplicialComplex::faces() const {
    if (n_ > kEnumerationCap) throw cap_exceeded("face enumeration cap exceeded");
    std::unordered_set<uint32_t> seen;
    for (uint32_t f : facets_) {
        uint32_t s = f;
        while (true) {  // all subsets of f
            seen.insert(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    std::vector<uint32_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return out;
}

long long SimplicialComplex::face_count() const { return static_cast<long long>(faces().size()); }

std::vector<int> SimplicialComplex::vertices() const {
    uint32_t all = 0;
    for (uint32_t f : facets_) all |= f;
    return to_vertex_list(all);
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return n_ == other.n_ && facets_ == other.facets_;
}

std::vector<int> SimplicialComplex::to_vertex_list(uint32_t face) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if ((face >> i) & 1u) out.push_back(i + 1);
    return out;
}

std::string SimplicialComplex::str() const {
    if (is_void()) return "void";
    std::string out;
    for (size_t k = 0; k < facets_.size(); ++k) {
        if (k) out += ", ";
        out += "{";
        auto vs = to_vertex_list(facets_[k]);
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(vs[i]);
        }
        out += "}";
    }
    return out;
}

SimplicialComplex deletion(const SimplicialComplex& delta, int v) {
    if (v < 1 || v > delta.ground_size()) throw std::invalid_argument("vertex out of range");
    const uint32_t bit = 1u << (v - 1);
    bool present = false;
    for (uint32_t f : delta.facets())
        if (f & bit) present = true;
    if (!present) return delta;
    std::vector<uint32_t> fam;
    for (uint32_t f : delta.facets()) fam.push_back(f & ~bit);
    return SimplicialComplex::from_facets(delta.ground_size(), std::move(fam));
}

SimplicialComplex link(const SimplicialComplex& delta, int v) {
    if (v < 1 || v > delta.ground_size()) throw std::invalid_argument("vertex out of range");
    const uint32_t bit = 1u << (v - 1);
    bool present = false;
    for (uint32_t f : delta.facets())
        if (f & bit) present = true;
    if (!present) return delta;
    std::vector<uint32_t> fam;
    for (uint32_t f : delta.facets())
        if (f & bit) fam.push_back(f & ~bit);
    return SimplicialComplex::from_facets(delta.ground_size(), std::move(fam));
}

SimplicialComplex skeleton(const SimplicialComplex& delta, int r, int s) {
    if (r < 0 || r > s || s > delta.dim())
        throw std::invalid_argument("skeleton requires 0 <= r <= s <= dim");
    std::vector<uint32_t> fam;
    for (uint32_t f : delta.facets()) {
        int size = std::popcount(f);
        if (size < r + 1) continue;
        int keep = std::min(size, s + 1);
        // maximal admissible subfaces of f have exactly `keep` vertices
        std::vector<int> vs = SimplicialComplex::to_vertex_list(f);
        std::function<void(int, int, uint32_t)> rec = [&](int from, int left, uint32_t acc) {
            if (left == 0) {
                fam.push_back(acc);
                return;
            }
            for (int i = from; i <= static_cast<int>(vs.size()) - left; ++i)
                rec(i + 1, left - 1, acc | (1u << (vs[i] - 1)));
        };
        rec(0, keep, 0);
    }
    return SimplicialComplex::from_facets(delta.ground_size(), std::move(fam));
}

SimplicialComplex facet_skeleton(const SimplicialComplex& delta, int i) {
    if (i < 1) throw std::invalid_argument("facet skeleton requires i >= 1");
    SimplicialComplex cur = delta;
    for (int step = 0; step < i; ++step) {
        if (cur.is_void() || cur.facets().front() == 0u)
            throw std::invalid_argument("facet skeleton iterated below {emptyset}");
        std::vector<uint32_t> fam;
        for (uint32_t f : cur.facets())
            for (int v : SimplicialComplex::to_vertex_list(f)) fam.push_back(f & ~(1u << (v - 1)));
        cur = SimplicialComplex::from_facets(cur.ground_size(), std::move(fam));
    }
    return cur;
}

MonomialIdeal dual_ideal(const SimplicialComplex& delta) {
    const int n = delta.ground_size();
    if (delta.is_void()) return MonomialIdeal::zero(n);
    std::vector<Monomial> gens;
    for (uint32_t f : delta.facets()) gens.push_back(mask_monomial(n, full_mask(n) & ~f));
    return MonomialIdeal::from_generators(n, std::move(gens));
}

SimplicialComplex eagon_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw std::invalid_argument("eagon complex needs a squarefree ideal");
    const int n = ideal.vars();
    if (ideal.is_zero()) return SimplicialComplex::void_complex(n);
    std::vector<uint32_t> fam;
    for (const auto& g : ideal.generators()) fam.push_back(full_mask(n) & ~support_mask(g));
    return SimplicialComplex::from_facets(n, std::move(fam));
}

MonomialIdeal stanley_reisner(const SimplicialComplex& delta) {
    const int n = delta.ground_size();
    if (n > SimplicialComplex::kEnumerationCap) throw cap_exceeded("ground set too large");
    std::vector<Monomial> gens;
    for (uint32_t s = 0;; ++s) {
        if (!delta.contains_face(s)) {
            bool minimal = true;
            for (int i = 0; i < n && minimal; ++i)
                if ((s >> i) & 1u)
                    if (!delta.contains_face(s & ~(1u << i))) minimal = false;
            if (minimal) gens.push_back(mask_monomial(n, s));
        }
        if (s == full_mask(n)) break;
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

SimplicialComplex sr_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw std::invalid_argument("stanley-reisner complex needs a squarefree ideal");
    const int n = ideal.vars();
    if (n > SimplicialComplex::kEnumerationCap) throw cap_exceeded("ground set too large");
    std::vector<uint32_t> fam;
    for (uint32_t s = 0;; ++s) {
        bool face = true;
        for (const auto& g : ideal.generators())
            if (subset(support_mask(g), s)) face = false;
        if (face) fam.push_back(s);
        if (s == full_mask(n)) break;
    }
    return SimplicialComplex::from_facets(n, std::move(fam));
}

}  // namespace monolab
