#ifndef SPECTILE_SYMMETRY_HPP
#define SPECTILE_SYMMETRY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "spectile/polytope.hpp"

namespace spectile {

/// An opposite facet pair with `to = from + tau` as vertex sets.
/// `from` is the facet whose vertex centroid is lexicographically smaller.
struct FacetPair {
    std::size_t from = 0;
    std::size_t to = 0;
    Vec tau;
};

struct MinkowskiResult {
    bool pass = false;
    /// A facet without a parallel partner of equal measure.
    std::optional<std::size_t> witness;
};

struct FacetSymmetryResult {
    bool pass = false;
    std::vector<std::size_t> asymmetric_facets;
};

struct SymmetryReport {
    std::optional<Vec> center;
    bool is_centrally_symmetric = false;
    std::vector<FacetPair> facet_pairs;
    bool facets_centrally_symmetric = false;
    std::vector<std::size_t> asymmetric_facets;
    bool minkowski_pass = false;
    std::optional<std::size_t> minkowski_witness;
};

/// The vertex centroid when 2c - V = V as sets.
std::optional<Vec> center_of_symmetry(const Polytope& p);

/// Every facet has an opposite facet (negated primitive normal) of equal
/// squared measure.
MinkowskiResult minkowski_check(const Polytope& p);

/// Central symmetry of every facet; vacuously true below d = 3.
FacetSymmetryResult facet_symmetry_check(const Polytope& p);

/// One translation per opposite facet pair.  Throws NotSymmetric unless the
/// body and all its facets are centrally symmetric.
std::vector<FacetPair> tau_vectors(const Polytope& p);

SymmetryReport analyze_symmetry(const Polytope& p);

/// Index of the facet whose normal is the negation of facet `f`'s, if any.
std::optional<std::size_t> opposite_facet(const Polytope& p, std::size_t f);

/// Translation carrying the vertex set of facet `src` onto facet `dst`, if one exists.
std::optional<Vec> facet_translation(const Polytope& p, std::size_t src, std::size_t dst);

}  // namespace spectile

#endif  // SPECTILE_SYMMETRY_HPP
