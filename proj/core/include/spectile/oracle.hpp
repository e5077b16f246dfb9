#ifndef SPECTILE_ORACLE_HPP
#define SPECTILE_ORACLE_HPP

// Brute-force reference implementations.  Everything here depends on the
// polytope layer only, so it can cross-check the tiling, Fourier and spectrum
// modules without sharing their code paths.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "spectile/hifloat.hpp"
#include "spectile/polytope.hpp"

namespace spectile::oracle {

using Point3 = std::array<double, 3>;

struct SampleConfig {
    long long count = 1000000;
    std::uint64_t seed = 1;
    Point3 box_lo{};
    Point3 box_hi{};
};

/// Bounding box of the polytope.
SampleConfig bounding_config(const Polytope& p, long long count, std::uint64_t seed);

struct VolumeEstimate {
    double value = 0;
    double stderr_ = 0;
    long long count = 0;
    std::uint64_t seed = 0;
};

VolumeEstimate mc_volume(const Polytope& p, const SampleConfig& cfg);

struct Multiplicity {
    std::map<int, long long> histogram;
    int min = 0;
    int max = 0;
    std::size_t group_elements = 0;
    long long count = 0;
    std::uint64_t seed = 0;
};

/// Samples points of the configured box and counts the translates P + t
/// containing each, t ranging over the group generated by `generators`
/// truncated at |t| <= diam(P) + diam(box).  Throws RankDeficient when the
/// generators do not span R^d.
Multiplicity multiplicity_sample(const Polytope& p, const std::vector<Vec>& generators, const SampleConfig& cfg);

/// Group elements of <generators> with |t|^2 <= radius_squared, by
/// breadth-first search over +/- generator steps.
std::vector<Vec> group_elements(const std::vector<Vec>& generators, const Rational& radius_squared);

/// Fourier transform of the indicator by fan triangulation into simplices
/// and the closed form in vertex exponentials (confluent divided differences
/// at exactly coinciding exponents).
ComplexValue simplex_ft(const Polytope& p, const Vec& xi);

/// Transform of one simplex given by d + 1 vertices.
ComplexValue simplex_ft(const std::vector<Vec>& simplex, const Vec& xi);

/// Vertex-facet incidence isomorphism by backtracking.
bool combinatorially_isomorphic(const Polytope& a, const Polytope& b);

/// Shoelace area of a polygon given in cyclic order.
Rational shoelace_area(const std::vector<Vec>& cycle);

/// Volume as the sum of |det|/d! over the fan simplices.
Rational simplex_volume(const Polytope& p);

/// Fan triangulation from the first vertex.
std::vector<std::vector<Vec>> fan_simplices(const Polytope& p);

}  // namespace spectile::oracle

#endif  // SPECTILE_ORACLE_HPP
