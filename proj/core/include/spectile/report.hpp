#ifndef SPECTILE_REPORT_HPP
#define SPECTILE_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectile/polytope.hpp"

namespace spectile {

inline constexpr const char* kReportSchema = "spectile.analysis/1";

/// Library version string.
const char* version();

using Coords = std::vector<std::string>;  // "p/q" per coordinate

struct LatticeRecord {
    std::vector<Coords> basis;  // columns
    std::string covolume;
    friend bool operator==(const LatticeRecord&, const LatticeRecord&) = default;
};

struct FacetPairRecord {
    std::size_t from = 0;
    std::size_t to = 0;
    Coords tau;
    friend bool operator==(const FacetPairRecord&, const FacetPairRecord&) = default;
};

struct BeltRecord {
    Coords direction;
    std::vector<std::size_t> facets;
    std::size_t length = 0;
    friend bool operator==(const BeltRecord&, const BeltRecord&) = default;
};

struct InputSection {
    std::string source;
    int dim = 0;
    std::vector<Coords> vertices;
    std::string volume;
    std::size_t facets = 0;
    std::size_t edges = 0;
    friend bool operator==(const InputSection&, const InputSection&) = default;
};

struct SymmetrySection {
    bool centrally_symmetric = false;
    Coords center;
    bool facets_centrally_symmetric = false;
    std::vector<std::size_t> asymmetric_facets;
    bool minkowski_pass = false;
    long long minkowski_witness = -1;
    std::vector<FacetPairRecord> facet_pairs;
    friend bool operator==(const SymmetrySection&, const SymmetrySection&) = default;
};

struct TilingSection {
    bool applicable = false;
    bool tiles = false;
    std::string reason;
    bool polytope = true;
    bool symmetric = false;
    bool facet_symmetric = false;
    bool belts_4_or_6 = false;
    std::vector<BeltRecord> belts;
    bool has_lattice = false;
    LatticeRecord lattice_T;
    bool packing_verified = false;
    bool covering_verified = false;
    std::string fedorov_class;
    bool is_prism = false;
    friend bool operator==(const TilingSection&, const TilingSection&) = default;
};

struct CoveringOracleSection {
    bool ran = false;
    long long samples = 0;
    std::uint64_t seed = 0;
    int min_multiplicity = 0;
    int max_multiplicity = 0;
    std::map<std::string, long long> histogram;
    friend bool operator==(const CoveringOracleSection&, const CoveringOracleSection&) = default;
};

struct SpectralSection {
    bool applicable = false;
    bool spectral = false;
    std::string reason;
    bool has_spectrum = false;
    LatticeRecord spectrum;
    friend bool operator==(const SpectralSection&, const SpectralSection&) = default;
};

struct VerificationSection {
    bool ran = false;
    double radius = 0;
    std::size_t points = 0;
    double separation = 0;
    double chi_estimate = 0;
    bool orthogonality_pass = false;
    std::size_t orthogonality_frequencies = 0;
    double orthogonality_max = 0;
    double orthogonality_tolerance = 0;
    bool density_ran = false;
    bool density_pass = false;
    double density = 0;
    double density_target = 0;
    std::string density_note;
    bool c2_pass = false;
    double c2_max_deviation = 0;
    double c2_tolerance = 0;
    std::string uniqueness;
    std::size_t uniqueness_checked = 0;
    friend bool operator==(const VerificationSection&, const VerificationSection&) = default;
};

struct SettingsSection {
    double radius = 5;
    double tolerance = 1e-10;
    std::uint64_t seed = 20240611;
    long long samples = 100000;
    unsigned precision_bits = 128;
    friend bool operator==(const SettingsSection&, const SettingsSection&) = default;
};

struct AnalysisReport {
    std::string schema = kReportSchema;
    std::string tool_version;
    InputSection input;
    SymmetrySection symmetry;
    TilingSection tiling;
    CoveringOracleSection covering_oracle;
    SpectralSection spectral;
    VerificationSection verification;
    SettingsSection settings;
    std::map<std::string, double> timings_ms;
    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
    double radius = 5;
    double tolerance = 1e-10;
    std::uint64_t seed = 20240611;
    long long samples = 100000;
};

/// symmetry -> Venkov-McMullen -> T -> spectral verdict -> dual spectrum ->
/// orthogonality, density, C2 and uniqueness on the patch of radius `radius`.
AnalysisReport analyze(const Polytope& p, const std::string& source, const AnalyzeOptions& opts = {});

nlohmann::json report_to_json(const AnalysisReport& r);
/// Throws ParseError on a schema mismatch or missing field.
AnalysisReport report_from_json(const nlohmann::json& j);

}  // namespace spectile

#endif  // SPECTILE_REPORT_HPP
