#pragma once

#include <map>
#include <optional>
#include <vector>

#include "monolab/ideal.hpp"
#include "monolab/report.hpp"

namespace monolab {

/// An order of G(I) as a permutation of generator indices (0-based into
/// MonomialIdeal::generators()).
struct GeneratorOrder {
    MonomialIdeal ideal;
    std::vector<int> seq;

    std::vector<Monomial> monomials() const;
    bool is_degree_increasing() const;
    bool is_support_degree_increasing() const;
    nlohmann::json to_json() const;
};

GeneratorOrder identity_order(const MonomialIdeal& ideal);

/// Per pair i < j, a witness (k, d) with k < j, <u_k> : u_j = <x_d> and
/// x_d dividing u_i : u_j. Indexed [j][i]; entries for j >= 1, i < j.
using AdmissibilityCertificate = std::vector<std::vector<std::pair<int, int>>>;

/// Linear-quotient check for a fixed order: every colon ideal by the earlier
/// generators must be generated by variables. Principal and trivial ideals
/// pass trivially.
PropertyReport is_admissible_order(const GeneratorOrder& order);

/// The (k, d) certificate for an admissible order; nullopt when the order is
/// not admissible.
std::optional<AdmissibilityCertificate> admissibility_certificate(const GeneratorOrder& order);

enum class OrderConstraint { none, degree_increasing, support_degree_increasing };

struct SearchOptions {
    int generator_cap = 12;
    long long state_budget = 4'000'000;
};

/// Backtracking search for an admissible order under the given constraint.
/// Deterministic: candidates are tried in canonical generator order, and
/// constrained searches only permute within degree / support-degree blocks.
/// Returns the first order found, or nullopt after exhausting the search
/// space. Throws cap_exceeded beyond the configured caps.
std::optional<GeneratorOrder> find_admissible_order(const MonomialIdeal& ideal,
                                                    OrderConstraint constraint,
                                                    const SearchOptions& opts = {});

/// Popescu-quotient check for a fixed order. Strong mode checks the three
/// conditions (equal supports up to s, irreducible colon ideals past s, and
/// the support-containment ordering); weak mode checks only irreducibility
/// with s = 1.
PropertyReport is_popescu_order(const GeneratorOrder& order, int s, bool weak);

/// Searches for an order with (weak) Popescu quotients.
std::optional<std::pair<GeneratorOrder, int>> find_popescu_order(const MonomialIdeal& ideal,
                                                                 bool weak,
                                                                 const SearchOptions& opts = {});

/// The constructive admissible order of I ^ m built from a support-degree
/// increasing admissible order of I: all products u_i * x_j with j outside
/// supp(u_i) in lexicographic pair order, with (r, s) dropped whenever an
/// earlier pair (i, j), i < r, has u_i x_j dividing u_r x_s.
/// Throws std::invalid_argument when the input order is not admissible and
/// support-degree increasing.
GeneratorOrder wedge_order_construction(const MonomialIdeal& ideal, const GeneratorOrder& order);

enum class ComponentMode { degree, support, support_geq };

/// Linear-quotient reports for every nonzero component in the given mode.
/// Degree mode covers min to max generator degree; support modes cover
/// d = 1..n. Cap overruns surface as unknown for the affected component.
std::map<int, PropertyReport> componentwise_lq(const MonomialIdeal& ideal, ComponentMode mode,
                                               const SearchOptions& opts = {});

/// Pack compatibility: for each support component I<d>, G(I<d-1> ^ m) must
/// consist of minimal generators of I<d> and some admissible order of I<d>
/// must start with exactly that set. When it holds, the detail carries the
/// induced support-degree increasing admissible order of I.
PropertyReport pack_compatibility(const MonomialIdeal& ideal, const SearchOptions& opts = {});

}  // namespace monolab
