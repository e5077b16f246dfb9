#include "spectile/symmetry.hpp"

#include <algorithm>

namespace spectile {

namespace {

std::vector<Vec> sorted_points(const Polytope& p, const std::vector<std::size_t>& idx) {
    std::vector<Vec> pts;
    pts.reserve(idx.size());
    for (std::size_t i : idx) pts.push_back(p.vertex(i));
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool symmetric_about_centroid(std::vector<Vec> pts) {
    Vec c(pts.front().dim());
    for (const auto& v : pts) c += v;
    c /= Rational(static_cast<long>(pts.size()));
    std::vector<Vec> mirrored;
    mirrored.reserve(pts.size());
    for (const auto& v : pts) mirrored.push_back(c * Rational(2) - v);
    std::sort(pts.begin(), pts.end());
    std::sort(mirrored.begin(), mirrored.end());
    return pts == mirrored;
}

}  // namespace

std::optional<Vec> center_of_symmetry(const Polytope& p) {
    if (!symmetric_about_centroid(p.vertices())) return std::nullopt;
    return p.vertex_centroid();
}

std::optional<std::size_t> opposite_facet(const Polytope& p, std::size_t f) {
    const Vec target = -p.facets()[f].normal;
    for (std::size_t j = 0; j < p.facets().size(); ++j)
        if (p.facets()[j].normal == target) return j;
    return std::nullopt;
}

std::optional<Vec> facet_translation(const Polytope& p, std::size_t src, std::size_t dst) {
    auto a = sorted_points(p, p.facets()[src].vertices);
    auto b = sorted_points(p, p.facets()[dst].vertices);
    if (a.size() != b.size()) return std::nullopt;
    // Translation preserves lexicographic order, so sorted lists align.
    Vec t = b.front() - a.front();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] + t != b[i]) return std::nullopt;
    return t;
}

MinkowskiResult minkowski_check(const Polytope& p) {
    if (p.dim() < 2) return {true, std::nullopt};
    const auto measures = p.facet_measures_squared();
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        auto g = opposite_facet(p, f);
        if (!g || measures[f] != measures[*g]) return {false, f};
    }
    return {true, std::nullopt};
}

FacetSymmetryResult facet_symmetry_check(const Polytope& p) {
    FacetSymmetryResult r{true, {}};
    if (p.dim() < 3) return r;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        if (!symmetric_about_centroid(sorted_points(p, p.facets()[f].vertices))) {
            r.pass = false;
            r.asymmetric_facets.push_back(f);
        }
    }
    return r;
}

std::vector<FacetPair> tau_vectors(const Polytope& p) {
    if (!center_of_symmetry(p)) throw Error(ErrorCode::NotSymmetric, "polytope is not centrally symmetric");
    if (!facet_symmetry_check(p).pass) throw Error(ErrorCode::NotSymmetric, "a facet is not centrally symmetric");
    std::vector<FacetPair> out;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        auto g = opposite_facet(p, f);
        if (!g) throw Error(ErrorCode::NotSymmetric, "facet without opposite facet");
        if (*g < f) continue;
        Vec cf = p.face_centroid({p.dim() - 1, f});
        Vec cg = p.face_centroid({p.dim() - 1, *g});
        std::size_t from = f, to = *g;
        if (cg < cf) std::swap(from, to);
        auto t = facet_translation(p, from, to);
        if (!t) throw Error(ErrorCode::NotSymmetric, "opposite facets are not translates");
        out.push_back(FacetPair{from, to, *t});
    }
    return out;
}

SymmetryReport analyze_symmetry(const Polytope& p) {
    SymmetryReport r;
    r.center = center_of_symmetry(p);
    r.is_centrally_symmetric = r.center.has_value();
    auto fs = facet_symmetry_check(p);
    r.facets_centrally_symmetric = fs.pass;
    r.asymmetric_facets = fs.asymmetric_facets;
    auto mk = minkowski_check(p);
    r.minkowski_pass = mk.pass;
    r.minkowski_witness = mk.witness;
    if (r.is_centrally_symmetric && r.facets_centrally_symmetric) r.facet_pairs = tau_vectors(p);
    return r;
}

}  // namespace spectile
