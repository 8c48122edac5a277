#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace monolab {

/// Exponent vectors in N^n double as monomial exponents and multidegrees.
using ExponentVector = std::vector<int>;

/// A monomial x^a in a fixed ambient ring K[x_1..x_n]. Immutable after
/// construction; the constant 1 is the all-zero vector.
class Monomial {
public:
    explicit Monomial(ExponentVector exps);

    static Monomial one(int n);
    static Monomial variable(int n, int var);  // var is 1-based

    int vars() const { return static_cast<int>(exps_.size()); }
    const ExponentVector& exponents() const { return exps_; }
    int exponent(int var) const { return exps_[var - 1]; }

    int degree() const;
    int support_degree() const;
    std::vector<int> support() const;  // ascending, 1-based

    bool is_one() const;
    bool is_variable() const { return degree() == 1; }
    bool is_squarefree() const;
    bool is_pure_power() const { return support_degree() <= 1; }

    bool divides(const Monomial& m) const;

    Monomial times(const Monomial& m) const;
    Monomial times_variable(int var) const;
    /// Exact division; throws std::invalid_argument if d does not divide.
    Monomial divide_by(const Monomial& d) const;
    Monomial divide_by_variable(int var) const;

    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// The generator of <this> : <v>, i.e. this / gcd(this, v).
    Monomial colon(const Monomial& v) const;

    bool operator==(const Monomial& m) const { return exps_ == m.exps_; }

    std::string str() const;  // canonical x-form, e.g. "x1^2*x2"

private:
    ExponentVector exps_;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Pure lexicographic order with x1 > x2 > ... > xn.
/// greater means u comes lex-first (u "larger" than v).
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);

/// Term order of Shakin: first by total degree, ties broken at the highest
/// index where the exponents differ (smaller exponent there = smaller).
/// less means u is smaller.
std::strong_ordering shakin_compare(const Monomial& u, const Monomial& v);

/// Canonical generator order used inside MonomialIdeal: total degree
/// ascending, then lex descending. Makes all set-valued outputs byte-stable.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Result of a wedge product: either zero or a signed monomial.
class SignedMonomial {
public:
    static SignedMonomial zero() { return SignedMonomial{}; }
    SignedMonomial(int sign, Monomial m);

    bool is_zero() const { return !mono_.has_value(); }
    int sign() const { return sign_; }
    const Monomial& monomial() const { return *mono_; }

    std::string str() const;

private:
    SignedMonomial() = default;
    int sign_ = 0;
    std::optional<Monomial> mono_;
};

/// Wedge product of two monomials: zero when supports intersect, otherwise
/// (-1)^e m1*m2 where e counts inversions in the concatenation of the two
/// ascending support sequences.
SignedMonomial wedge(const Monomial& m1, const Monomial& m2);

/// The vector g\a with i-th coordinate g(i)+1-a(i) when a(i) >= 1, else 0.
/// Requires a <= g componentwise.
ExponentVector gminus(const ExponentVector& g, const ExponentVector& a);

}  // namespace monolab
