#include "monolab/ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace monolab {

namespace {

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("ideals live in different ambient rings");
}

void for_each_monomial_of_degree(int n, int d, const std::function<void(const Monomial&)>& f) {
    ExponentVector e(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            e[pos] = left;
            f(Monomial(e));
            e[pos] = 0;
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[pos] = k;
            rec(pos + 1, left - k);
        }
        e[pos] = 0;
    };
    if (n == 0) return;
    rec(0, d);
}

void for_each_subset_of_size(const std::vector<int>& items, int k,
                             const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> chosen;
    std::function<void(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(chosen.size()) == k) {
            f(chosen);
            return;
        }
        if (static_cast<int>(items.size() - from) < k - static_cast<int>(chosen.size())) return;
        for (size_t i = from; i < items.size(); ++i) {
            chosen.push_back(items[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    if (k >= 0) rec(0);
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens, bool zero)
    : n_(n), gens_(std::move(gens)), zero_(zero) {}

MonomialIdeal MonomialIdeal::zero(int n) { return MonomialIdeal(n, {}, true); }

MonomialIdeal MonomialIdeal::unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}, false); }

MonomialIdeal MonomialIdeal::maximal(int n) {
    std::vector<Monomial> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(Monomial::variable(n, i));
    return MonomialIdeal(n, std::move(gens), false);
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
    return minimalize(n, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.vars() != n_) throw std::invalid_argument("monomial from a different ambient ring");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    check_same_ring(*this, other);
    if (other.is_zero()) return true;
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

int MonomialIdeal::max_degree() const {
    if (gens_.empty()) throw std::invalid_argument("degree of the zero ideal");
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

int MonomialIdeal::min_degree() const {
    if (gens_.empty()) throw std::invalid_argument("degree of the zero ideal");
    int d = gens_[0].degree();
    for (const auto& g : gens_) d = std::min(d, g.degree());
    return d;
}

int MonomialIdeal::max_support_degree() const {
    if (gens_.empty()) throw std::invalid_argument("support degree of the zero ideal");
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.support_degree());
    return d;
}

int MonomialIdeal::min_support_degree() const {
    if (gens_.empty()) throw std::invalid_argument("support degree of the zero ideal");
    int d = gens_[0].support_degree();
    for (const auto& g : gens_) d = std::min(d, g.support_degree());
    return d;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return n_ == other.n_ && zero_ == other.zero_ && gens_ == other.gens_;
}

std::string MonomialIdeal::str() const {
    if (is_zero()) return "<0>";
    std::string out = "<";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].str();
    }
    return out + ">";
}

bool IrreducibleIdeal::contains(const Monomial& m) const {
    if (m.vars() != vars()) throw std::invalid_argument("monomial from a different ambient ring");
    for (int i = 0; i < vars(); ++i)
        if (a[i] >= 1 && m.exponents()[i] >= a[i]) return true;
    return false;
}

MonomialIdeal IrreducibleIdeal::to_ideal() const {
    std::vector<Monomial> gens;
    for (int i = 0; i < vars(); ++i) {
        if (a[i] >= 1) {
            ExponentVector e(vars(), 0);
            e[i] = a[i];
            gens.emplace_back(std::move(e));
        }
    }
    return MonomialIdeal::from_generators(vars(), std::move(gens));
}

MonomialIdeal minimalize(int n, std::vector<Monomial> monomials) {
    for (const auto& m : monomials)
        if (m.vars() != n) throw std::invalid_argument("mixed ambient rings in generator set");
    std::sort(monomials.begin(), monomials.end(), canonical_less);
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    std::vector<Monomial> kept;
    for (const auto& m : monomials) {
        bool redundant = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& k) { return k.divides(m); });
        if (!redundant) kept.push_back(m);
    }
    if (kept.empty()) return MonomialIdeal::zero(n);
    return MonomialIdeal(n, std::move(kept), false);
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return minimalize(a.vars(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.vars());
    std::vector<Monomial> gens;
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) gens.push_back(u * v);
    return minimalize(a.vars(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.vars());
    std::vector<Monomial> gens;
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) gens.push_back(Monomial::lcm(u, v));
    return minimalize(a.vars(), std::move(gens));
}

MonomialIdeal m_product(const MonomialIdeal& ideal) {
    return ideal_product(ideal, MonomialIdeal::maximal(ideal.vars()));
}

MonomialIdeal ideal_wedge(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> gens;
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) {
            SignedMonomial w = wedge(u, v);
            if (!w.is_zero()) gens.push_back(w.monomial());
        }
    return minimalize(a.vars(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const Monomial& v) {
    if (ideal.is_trivial()) throw std::invalid_argument("colon of a trivial ideal");
    std::vector<Monomial> gens;
    for (const auto& u : ideal.generators()) gens.push_back(u.colon(v));
    return minimalize(ideal.vars(), std::move(gens));
}

MonomialIdeal degree_component(const MonomialIdeal& ideal, int d) {
    if (d < 0) throw std::invalid_argument("degree component requires d >= 0");
    std::vector<Monomial> gens;
    for (const auto& u : ideal.generators()) {
        if (u.degree() > d) continue;
        for_each_monomial_of_degree(ideal.vars(), d - u.degree(),
                                    [&](const Monomial& w) { gens.push_back(u * w); });
    }
    return minimalize(ideal.vars(), std::move(gens));
}

MonomialIdeal support_component(const MonomialIdeal& ideal, int d, SupportMode mode) {
    if (d < 0 || d > ideal.vars())
        throw std::invalid_argument("support component requires 0 <= d <= n");
    if (mode == SupportMode::at_least) {
        std::vector<Monomial> gens;
        for (int k = d; k <= ideal.vars(); ++k) {
            MonomialIdeal comp = support_component(ideal, k, SupportMode::exact);
            gens.insert(gens.end(), comp.generators().begin(), comp.generators().end());
        }
        return minimalize(ideal.vars(), std::move(gens));
    }
    // Minimal monomials of I with support-degree d all arise as u * x^F with
    // F squarefree outside supp(u), since supp(u*h) contains supp(u).
    std::vector<Monomial> gens;
    for (const auto& u : ideal.generators()) {
        int need = d - u.support_degree();
        if (need < 0) continue;
        std::vector<int> free_vars;
        for (int i = 1; i <= ideal.vars(); ++i)
            if (u.exponent(i) == 0) free_vars.push_back(i);
        if (static_cast<int>(free_vars.size()) < need) continue;
        for_each_subset_of_size(free_vars, need, [&](const std::vector<int>& f) {
            Monomial m = u;
            for (int var : f) m = m.times_variable(var);
            gens.push_back(m);
        });
    }
    return minimalize(ideal.vars(), std::move(gens));
}

MonomialIdeal squarefree_part(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    for (const auto& u : ideal.generators())
        if (u.is_squarefree()) gens.push_back(u);
    return minimalize(ideal.vars(), std::move(gens));
}

MonomialIdeal std_form(const MonomialIdeal& j, const IrreducibleIdeal& p) {
    if (j.vars() != p.vars()) throw std::invalid_argument("ideals live in different ambient rings");
    std::vector<Monomial> gens;
    for (const auto& u : j.generators())
        if (!p.contains(u)) gens.push_back(u);
    return minimalize(j.vars(), std::move(gens));
}

}  // namespace monolab
