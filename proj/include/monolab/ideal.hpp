#pragma once

#include <string>
#include <vector>

#include "monolab/exponents.hpp"

namespace monolab {

/// A monomial ideal given by its unique minimal monomial generating set,
/// stored in canonical order (degree ascending, then lex descending).
/// <0> carries an explicit zero flag; <1> has the single generator 1.
class MonomialIdeal {
public:
    static MonomialIdeal zero(int n);
    static MonomialIdeal unit(int n);
    static MonomialIdeal maximal(int n);  // m = <x1,...,xn>
    /// Minimalizes the given generators; an empty list yields <0>.
    static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);

    int vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return zero_; }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    /// <0> and <1>, the paper's trivial ideals.
    bool is_trivial() const { return is_zero() || is_unit(); }
    bool is_principal() const { return gens_.size() == 1; }
    bool is_squarefree() const;

    /// Membership via divisibility by some minimal generator.
    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;

    int max_degree() const;
    int min_degree() const;
    int max_support_degree() const;
    int min_support_degree() const;

    bool operator==(const MonomialIdeal& other) const;

    std::string str() const;

private:
    MonomialIdeal(int n, std::vector<Monomial> gens, bool zero);
    friend MonomialIdeal minimalize(int n, std::vector<Monomial> monomials);
    int n_ = 0;
    std::vector<Monomial> gens_;
    bool zero_ = true;
};

/// An irreducible monomial ideal m^a = <x_i^{a(i)} : a(i) >= 1>.
/// Entry 0 means the variable is absent (a_i = +infinity in the stability
/// reading).
struct IrreducibleIdeal {
    ExponentVector a;

    explicit IrreducibleIdeal(ExponentVector v) : a(std::move(v)) {}
    static IrreducibleIdeal squares(int n) { return IrreducibleIdeal(ExponentVector(n, 2)); }

    int vars() const { return static_cast<int>(a.size()); }
    bool contains(const Monomial& m) const;
    MonomialIdeal to_ideal() const;
};

/// Antichain reduction: drops every monomial divisible by another one.
MonomialIdeal minimalize(int n, std::vector<Monomial> monomials);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection via lcms of generator pairs.
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// I * m for the graded maximal ideal m.
MonomialIdeal m_product(const MonomialIdeal& ideal);

/// The wedge ideal I ^ J, generated by products of generators with disjoint
/// supports (signs dropped).
MonomialIdeal ideal_wedge(const MonomialIdeal& a, const MonomialIdeal& b);

/// Minimal generating set of I : v. Requires I nontrivial.
MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const Monomial& v);

/// I_d: the ideal generated by all monomials of I of total degree exactly d.
MonomialIdeal degree_component(const MonomialIdeal& ideal, int d);

enum class SupportMode { exact, at_least };

/// I<d> (exact) or I<>=d> (at_least): generated by the monomials of I of
/// support-degree exactly d, resp. the sum of those components for d..n.
MonomialIdeal support_component(const MonomialIdeal& ideal, int d,
                                SupportMode mode = SupportMode::exact);

/// I_*: the ideal generated by the squarefree members of G(I).
MonomialIdeal squarefree_part(const MonomialIdeal& ideal);

/// std_P(J) = <u : u in G(J), u not in P>, the unique minimal K with
/// K + P = J + P.
MonomialIdeal std_form(const MonomialIdeal& j, const IrreducibleIdeal& p);

}  // namespace monolab
