#include "monolab/exponents.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace monolab {

namespace {

void check_same_ring(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("monomials live in different ambient rings");
}

}  // namespace

Monomial::Monomial(ExponentVector exps) : exps_(std::move(exps)) {
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::one(int n) { return Monomial(ExponentVector(n, 0)); }

Monomial Monomial::variable(int n, int var) {
    if (var < 1 || var > n) throw std::invalid_argument("variable index out of range");
    ExponentVector e(n, 0);
    e[var - 1] = 1;
    return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

int Monomial::support_degree() const {
    return static_cast<int>(std::count_if(exps_.begin(), exps_.end(), [](int e) { return e > 0; }));
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < vars(); ++i)
        if (exps_[i] > 0) s.push_back(i + 1);
    return s;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& m) const {
    check_same_ring(*this, m);
    for (int i = 0; i < vars(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    check_same_ring(*this, m);
    ExponentVector e(exps_);
    for (int i = 0; i < vars(); ++i) e[i] += m.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::times_variable(int var) const {
    ExponentVector e(exps_);
    e.at(var - 1) += 1;
    return Monomial(std::move(e));
}

Monomial Monomial::divide_by(const Monomial& d) const {
    if (!d.divides(*this)) throw std::invalid_argument("inexact monomial division");
    ExponentVector e(exps_);
    for (int i = 0; i < vars(); ++i) e[i] -= d.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::divide_by_variable(int var) const {
    if (exps_.at(var - 1) < 1) throw std::invalid_argument("inexact monomial division");
    ExponentVector e(exps_);
    e[var - 1] -= 1;
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    ExponentVector e(a.exps_);
    for (int i = 0; i < a.vars(); ++i) e[i] = std::min(e[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    ExponentVector e(a.exps_);
    for (int i = 0; i < a.vars(); ++i) e[i] = std::max(e[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& v) const {
    check_same_ring(*this, v);
    ExponentVector e(exps_);
    for (int i = 0; i < vars(); ++i) e[i] = std::max(e[i] - v.exps_[i], 0);
    return Monomial(std::move(e));
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string out;
    for (int i = 0; i < vars(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) { return a.times(b); }

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
    check_same_ring(u, v);
    for (int i = 0; i < u.vars(); ++i) {
        int a = u.exponents()[i], b = v.exponents()[i];
        if (a != b) return a > b ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering shakin_compare(const Monomial& u, const Monomial& v) {
    check_same_ring(u, v);
    int du = u.degree(), dv = v.degree();
    if (du != dv) return du < dv ? std::strong_ordering::less : std::strong_ordering::greater;
    for (int i = u.vars() - 1; i >= 0; --i) {
        int a = u.exponents()[i], b = v.exponents()[i];
        if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return lex_compare(a, b) == std::strong_ordering::greater;
}

SignedMonomial::SignedMonomial(int sign, Monomial m) : sign_(sign), mono_(std::move(m)) {
    if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("sign must be +1 or -1");
}

std::string SignedMonomial::str() const {
    if (is_zero()) return "0";
    return (sign_ < 0 ? "-" : "+") + mono_->str();
}

SignedMonomial wedge(const Monomial& m1, const Monomial& m2) {
    check_same_ring(m1, m2);
    const auto s1 = m1.support();
    const auto s2 = m2.support();
    // Inversions of the concatenated ascending sequences: pairs (i, j) with
    // i from supp(m1), j from supp(m2) and i > j.
    long long inversions = 0;
    for (int i : s1)
        for (int j : s2) {
            if (i == j) return SignedMonomial::zero();
            if (i > j) ++inversions;
        }
    return SignedMonomial(inversions % 2 == 0 ? 1 : -1, m1 * m2);
}

ExponentVector gminus(const ExponentVector& g, const ExponentVector& a) {
    if (g.size() != a.size()) throw std::invalid_argument("gminus: dimension mismatch");
    ExponentVector out(g.size(), 0);
    for (size_t i = 0; i < g.size(); ++i) {
        if (a[i] > g[i]) throw std::invalid_argument("gminus requires a <= g componentwise");
        if (a[i] >= 1) out[i] = g[i] + 1 - a[i];
    }
    return out;
}

}  // namespace monolab
