#ifndef SPECTILE_TILING_HPP
#define SPECTILE_TILING_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectile/lattice.hpp"
#include "spectile/polytope.hpp"
#include "spectile/symmetry.hpp"

namespace spectile {

/**
 * The facets containing a translate of one subfacet.
 *
 * In d = 3 the subfacets are edges and `direction` is the edge vector (sign
 * normalised).  In the plane a single pseudo-belt holds every edge.
 */
struct Belt {
    std::size_t representative = 0;
    Vec direction;
    std::vector<std::size_t> facets;  // cyclic order around `direction`
};

enum class FedorovClass {
    Parallelepiped,
    HexagonalPrism,
    RhombicDodecahedron,
    ElongatedDodecahedron,
    TruncatedOctahedron,
};

std::string_view to_string(FedorovClass c);
std::optional<FedorovClass> fedorov_from_string(std::string_view s);

/// Venkov-McMullen conditions.  Condition (i) is always true here since every
/// input is a polytope.
struct VmConditions {
    bool polytope = true;
    bool symmetric = false;
    bool facet_symmetric = false;
    bool belts_4_or_6 = false;
};

struct TilingReport {
    VmConditions vm;
    bool tiles = false;
    /// First failing condition: "", "central-symmetry", "facet-symmetry",
    /// "belt-length-<n>" or "edge-count-<n>".
    std::string reason;
    std::vector<Belt> belts;
    std::optional<Lattice> lattice_T;
    bool packing_verified = false;
    bool covering_verified = false;
    std::optional<FedorovClass> fedorov_class;
    bool is_prism = false;
};

struct PrismWitness {
    std::size_t base = 0;  // facet F'
    std::size_t top = 0;   // facet F = F' + tau
    Vec tau;
};

struct PackingResult {
    bool pass = false;
    std::size_t translates_checked = 0;
    /// First translate with a positive overlap, and that overlap.
    std::optional<Vec> witness;
    Rational overlap = 0;
};

struct CoveringResult {
    enum class Method { Exact, Sampled };
    bool covered = false;
    Method method = Method::Exact;
    /// Multiplicity histogram when sampled (multiplicity -> count).
    std::map<int, long long> histogram;
    std::uint64_t seed = 0;
};

/// Generators tau_F of the group T, their rank, and the lattice they span.
/// T is always discrete here because the generators are rational.
struct TauGroup {
    std::vector<Vec> generators;
    int rank = 0;
    bool discrete = true;
    std::optional<Lattice> lattice;
};

std::vector<Belt> belts(const Polytope& p);
TilingReport venkov_mcmullen(const Polytope& p);
TauGroup tau_group(const Polytope& p);
/// Lattice generated by the tau vectors; requires a Venkov-McMullen tiler.
Lattice lattice_T(const Polytope& p);

PackingResult packing_verify(const Polytope& p, const Lattice& l);

struct CoveringOptions {
    long long samples = 100000;
    std::uint64_t seed = 20240611;
};
CoveringResult covering_verify(const Polytope& p, const Lattice& l, const CoveringOptions& opts = {});

FedorovClass fedorov_classify(const Polytope& p);
std::optional<PrismWitness> is_prism(const Polytope& p);

/// Full tiling report: VM flags, T, exact packing/covering, class and prism flag.
TilingReport analyze_tiling(const Polytope& p);

/// Facet count and sorted belt lengths for each Fedorov class.
struct FedorovSignature {
    FedorovClass cls;
    std::size_t facets;
    std::vector<std::size_t> belt_lengths;
};
const std::vector<FedorovSignature>& fedorov_table();

}  // namespace spectile

#endif  // SPECTILE_TILING_HPP
