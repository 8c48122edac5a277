#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monolab/ideal.hpp"

namespace monolab {

/// An abstract simplicial complex over the ground set [n], stored as the
/// antichain of its facets (vertex subsets as bitmasks, bit i-1 = vertex i).
/// The void complex (no facets) and {emptyset} (one empty facet) are distinct.
class SimplicialComplex {
public:
    static constexpr int kEnumerationCap = 20;

    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_complex(int n);  // {emptyset}
    static SimplicialComplex simplex(int n);        // full simplex on [n]
    /// Keeps the maximal faces of the given family.
    static SimplicialComplex from_facets(int n, std::vector<uint32_t> facets);
    static SimplicialComplex from_vertex_sets(int n, const std::vector<std::vector<int>>& sets);

    int ground_size() const { return n_; }
    const std::vector<uint32_t>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    bool is_void() const { return facets_.empty(); }
    /// dim of the void complex is reported as -2, of {emptyset} as -1.
    int dim() const;
    bool is_pure() const;
    bool is_simplex() const { return facets_.size() <= 1; }

    bool contains_face(uint32_t face) const;
    /// All faces (downward closure), including the empty face for nonvoid
    /// complexes. Throws cap_exceeded past the enumeration cap.
    std::vector<uint32_t> faces() const;
    long long face_count() const;

    std::vector<int> vertices() const;  // vertices lying in some facet

    bool operator==(const SimplicialComplex& other) const;
    std::string str() const;

    static std::vector<int> to_vertex_list(uint32_t face);

private:
    SimplicialComplex(int n, std::vector<uint32_t> facets) : n_(n), facets_(std::move(facets)) {}
    int n_ = 0;
    std::vector<uint32_t> facets_;
};

/// Faces of Delta not containing v, as a complex. For a vertex absent from
/// every facet both the deletion and the link are Delta itself.
SimplicialComplex deletion(const SimplicialComplex& delta, int v);
/// link(v) = {F : v not in F, F + {v} in Delta}.
SimplicialComplex link(const SimplicialComplex& delta, int v);

/// The skeleton Delta^(r,s): faces of dimension <= s lying in a facet of
/// dimension >= r. Requires 0 <= r <= s <= dim(Delta).
SimplicialComplex skeleton(const SimplicialComplex& delta, int r, int s);

/// The i-fold facet skeleton: Delta^[1] is generated by the codimension-one
/// subsets of facets. Throws when iterating below {emptyset}.
SimplicialComplex facet_skeleton(const SimplicialComplex& delta, int i);

/// I_{Delta^vee} = <x^{F^c} : F facet>, the Stanley-Reisner ideal of the
/// Alexander dual. Void maps to <0>, {emptyset} to <x1...xn>.
MonomialIdeal dual_ideal(const SimplicialComplex& delta);

/// Inverse of dual_ideal on squarefree ideals: the Eagon complex.
SimplicialComplex eagon_complex(const MonomialIdeal& ideal);

/// The Stanley-Reisner ideal (minimal nonfaces) and its inverse.
MonomialIdeal stanley_reisner(const SimplicialComplex& delta);
SimplicialComplex sr_complex(const MonomialIdeal& ideal);

}  // namespace monolab
