#include "spectile/report.hpp"

#include <chrono>
#include <cmath>

#include "spectile/error.hpp"
#include "spectile/hifloat.hpp"
#include "spectile/io.hpp"
#include "spectile/oracle.hpp"
#include "spectile/spectrum.hpp"
#include "spectile/symmetry.hpp"
#include "spectile/tiling.hpp"

#ifndef SPECTILE_VERSION
#define SPECTILE_VERSION "0.0.0"
#endif

namespace spectile {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LatticeRecord, basis, covolume)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FacetPairRecord, from, to, tau)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BeltRecord, direction, facets, length)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InputSection, source, dim, vertices, volume, facets, edges)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SymmetrySection, centrally_symmetric, center, facets_centrally_symmetric,
                                   asymmetric_facets, minkowski_pass, minkowski_witness, facet_pairs)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TilingSection, applicable, tiles, reason, polytope, symmetric, facet_symmetric,
                                   belts_4_or_6, belts, has_lattice, lattice_T, packing_verified, covering_verified,
                                   fedorov_class, is_prism)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CoveringOracleSection, ran, samples, seed, min_multiplicity, max_multiplicity,
                                   histogram)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SpectralSection, applicable, spectral, reason, has_spectrum, spectrum)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerificationSection, ran, radius, points, separation, chi_estimate,
                                   orthogonality_pass, orthogonality_frequencies, orthogonality_max,
                                   orthogonality_tolerance, density_ran, density_pass, density, density_target,
                                   density_note, c2_pass, c2_max_deviation, c2_tolerance, uniqueness,
                                   uniqueness_checked)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SettingsSection, radius, tolerance, seed, samples, precision_bits)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AnalysisReport, schema, tool_version, input, symmetry, tiling, covering_oracle,
                                   spectral, verification, settings, timings_ms)

const char* version() { return SPECTILE_VERSION; }

namespace {

Coords coords(const Vec& v) {
    Coords c;
    for (int k = 0; k < v.dim(); ++k) c.push_back(to_string(v[k]));
    return c;
}

LatticeRecord record(const Lattice& l) {
    LatticeRecord r;
    for (const auto& b : l.basis_vectors()) r.basis.push_back(coords(b));
    r.covolume = to_string(l.covolume());
    return r;
}

class Stopwatch {
public:
    explicit Stopwatch(std::map<std::string, double>& sink) : sink_(sink) {}
    void lap(const std::string& name) {
        auto now = std::chrono::steady_clock::now();
        sink_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
    }

private:
    std::map<std::string, double>& sink_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

AnalysisReport analyze(const Polytope& p, const std::string& source, const AnalyzeOptions& opts) {
    AnalysisReport r;
    r.tool_version = version();
    r.settings = SettingsSection{opts.radius, opts.tolerance, opts.seed, opts.samples, precision_bits()};
    Stopwatch clock(r.timings_ms);

    r.input.source = source;
    r.input.dim = p.dim();
    for (const auto& v : p.vertices()) r.input.vertices.push_back(coords(v));
    r.input.volume = to_string(p.volume());
    r.input.facets = p.facets().size();
    r.input.edges = p.edges().size();

    const auto sym = analyze_symmetry(p);
    r.symmetry.centrally_symmetric = sym.is_centrally_symmetric;
    if (sym.center) r.symmetry.center = coords(*sym.center);
    r.symmetry.facets_centrally_symmetric = sym.facets_centrally_symmetric;
    r.symmetry.asymmetric_facets = sym.asymmetric_facets;
    r.symmetry.minkowski_pass = sym.minkowski_pass;
    if (sym.minkowski_witness) r.symmetry.minkowski_witness = static_cast<long long>(*sym.minkowski_witness);
    for (const auto& fp : sym.facet_pairs) r.symmetry.facet_pairs.push_back({fp.from, fp.to, coords(fp.tau)});
    clock.lap("symmetry");

    if (p.dim() != 2 && p.dim() != 3) return r;

    const TilingReport t = analyze_tiling(p);
    r.tiling.applicable = true;
    r.tiling.tiles = t.tiles;
    r.tiling.reason = t.reason;
    r.tiling.polytope = t.vm.polytope;
    r.tiling.symmetric = t.vm.symmetric;
    r.tiling.facet_symmetric = t.vm.facet_symmetric;
    r.tiling.belts_4_or_6 = t.vm.belts_4_or_6;
    for (const auto& b : t.belts) r.tiling.belts.push_back({coords(b.direction), b.facets, b.facets.size()});
    if (t.lattice_T) {
        r.tiling.has_lattice = true;
        r.tiling.lattice_T = record(*t.lattice_T);
    }
    r.tiling.packing_verified = t.packing_verified;
    r.tiling.covering_verified = t.covering_verified;
    if (t.fedorov_class) r.tiling.fedorov_class = std::string(to_string(*t.fedorov_class));
    r.tiling.is_prism = t.is_prism;
    clock.lap("tiling");

    // Non-tilers with a full-rank group T: sample the covering multiplicity.
    if (!t.tiles && t.vm.symmetric && t.vm.facet_symmetric) {
        const TauGroup g = tau_group(p);
        if (g.lattice) {
            auto m = oracle::multiplicity_sample(p, g.generators, oracle::bounding_config(p, opts.samples, opts.seed));
            r.covering_oracle.ran = true;
            r.covering_oracle.samples = m.count;
            r.covering_oracle.seed = m.seed;
            r.covering_oracle.min_multiplicity = m.min;
            r.covering_oracle.max_multiplicity = m.max;
            for (const auto& [k, n] : m.histogram) r.covering_oracle.histogram[std::to_string(k)] = n;
        }
        clock.lap("covering_oracle");
    }

    const SpectralVerdict v = decide_spectral(p);
    r.spectral.applicable = true;
    r.spectral.spectral = v.spectral;
    r.spectral.reason = v.reason;
    if (!v.spectrum) return r;
    r.spectral.has_spectrum = true;
    r.spectral.spectrum = record(*v.spectrum);

    const SpectrumPatch s = patch(*v.spectrum, opts.radius);
    auto& ver = r.verification;
    ver.ran = true;
    ver.radius = opts.radius;
    ver.points = s.points.size();
    ver.separation = s.separation;
    const auto orth = verify_orthogonality(p, s, opts.tolerance);
    ver.orthogonality_pass = orth.pass;
    ver.orthogonality_frequencies = orth.frequencies;
    ver.orthogonality_max = orth.max_abs;
    ver.orthogonality_tolerance = orth.tolerance;
    clock.lap("orthogonality");

    try {
        const auto dens = verify_density(p, s);
        ver.density_ran = true;
        ver.density_pass = dens.pass;
        ver.density = dens.density;
        ver.density_target = dens.target;
    } catch (const Error& e) {
        ver.density_note = e.what();
    }

    std::vector<Vec> taus;
    for (const auto& fp : tau_vectors(p)) taus.push_back(fp.tau);
    const auto c2 = condition_C2_check(s, taus);
    ver.c2_pass = c2.pass;
    ver.c2_max_deviation = c2.max_deviation;
    ver.c2_tolerance = c2.tolerance;

    const auto u = uniqueness_check(p, s);
    ver.uniqueness = to_string(u.outcome);
    ver.uniqueness_checked = u.checked;
    clock.lap("density_c2_uniqueness");

    const double chi = chi_estimate(p).value;
    ver.chi_estimate = std::isfinite(chi) ? chi : -1;  // -1: no zero found
    clock.lap("chi_estimate");
    return r;
}

nlohmann::json report_to_json(const AnalysisReport& r) { return r; }

AnalysisReport report_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("schema", "") != kReportSchema)
        throw Error(ErrorCode::ParseError, "schema: expected \"" + std::string(kReportSchema) + "\"");
    try {
        return j.get<AnalysisReport>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace spectile
