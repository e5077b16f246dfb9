#include "spectile/tiling.hpp"

#include <algorithm>
#include <map>

#include "spectile/oracle.hpp"

namespace spectile {

std::string_view to_string(FedorovClass c) {
    switch (c) {
        case FedorovClass::Parallelepiped: return "Parallelepiped";
        case FedorovClass::HexagonalPrism: return "HexagonalPrism";
        case FedorovClass::RhombicDodecahedron: return "RhombicDodecahedron";
        case FedorovClass::ElongatedDodecahedron: return "ElongatedDodecahedron";
        case FedorovClass::TruncatedOctahedron: return "TruncatedOctahedron";
    }
    return "Unknown";
}

std::optional<FedorovClass> fedorov_from_string(std::string_view s) {
    for (auto c : {FedorovClass::Parallelepiped, FedorovClass::HexagonalPrism, FedorovClass::RhombicDodecahedron,
                   FedorovClass::ElongatedDodecahedron, FedorovClass::TruncatedOctahedron})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

const std::vector<FedorovSignature>& fedorov_table() {
    static const std::vector<FedorovSignature> table{
        {FedorovClass::Parallelepiped, 6, {4, 4, 4}},
        {FedorovClass::HexagonalPrism, 8, {4, 4, 4, 6}},
        {FedorovClass::RhombicDodecahedron, 12, {6, 6, 6, 6}},
        {FedorovClass::ElongatedDodecahedron, 12, {4, 6, 6, 6, 6}},
        {FedorovClass::TruncatedOctahedron, 14, {6, 6, 6, 6, 6, 6}},
    };
    return table;
}

namespace {

// Sign-normalised so the first nonzero coordinate is positive.
Vec canonical_direction(Vec v) {
    for (int i = 0; i < v.dim(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] < 0) v = -v;
        break;
    }
    return v;
}

// Orders 2D rational vectors by angle in [0, 2 pi).
bool angle_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    auto half = [](const Rational& x, const Rational& y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; };
    int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return ax * by - ay * bx > 0;
}

std::vector<std::size_t> cyclic_order(const Polytope& p, std::vector<std::size_t> facets, const Vec& axis) {
    Vec u, v;
    if (p.dim() == 2) {
        u = Vec{1, 0};
        v = Vec{0, 1};
    } else {
        for (int k = 0; k < 3; ++k) {
            u = cross(axis, Vec::unit(3, k));
            if (!u.is_zero()) break;
        }
        v = cross(axis, u);
    }
    std::sort(facets.begin(), facets.end(), [&](std::size_t a, std::size_t b) {
        const Vec& na = p.facets()[a].normal;
        const Vec& nb = p.facets()[b].normal;
        return angle_less(dot(na, u), dot(na, v), dot(nb, u), dot(nb, v));
    });
    return facets;
}

bool belt_length_ok(std::size_t n) { return n == 4 || n == 6; }

}  // namespace

std::vector<Belt> belts(const Polytope& p) {
    if (p.dim() != 2 && p.dim() != 3) throw Error(ErrorCode::PreconditionFailed, "belts need d = 2 or 3");
    if (!center_of_symmetry(p)) throw Error(ErrorCode::PreconditionFailed, "belts need a centrally symmetric body");
    if (!facet_symmetry_check(p).pass) throw Error(ErrorCode::PreconditionFailed, "belts need centrally symmetric facets");

    std::vector<Belt> out;
    if (p.dim() == 2) {
        std::vector<std::size_t> all(p.facets().size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        out.push_back(Belt{0, Vec(2), cyclic_order(p, all, Vec(2))});
        return out;
    }

    // Edges are translates of one another iff their edge vectors agree up to sign.
    std::map<Vec, std::vector<std::size_t>> classes;
    for (std::size_t e = 0; e < p.edges().size(); ++e) {
        const Edge& ed = p.edges()[e];
        classes[canonical_direction(p.vertex(ed.b) - p.vertex(ed.a))].push_back(e);
    }
    for (const auto& [dir, edge_ids] : classes) {
        std::vector<std::size_t> fs;
        for (std::size_t e : edge_ids) fs.insert(fs.end(), p.edges()[e].facets.begin(), p.edges()[e].facets.end());
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        out.push_back(Belt{edge_ids.front(), dir, cyclic_order(p, fs, dir)});
    }
    return out;
}

TilingReport venkov_mcmullen(const Polytope& p) {
    if (p.dim() != 2 && p.dim() != 3) throw Error(ErrorCode::UnsupportedDimension, "tiling decisions need d = 2 or 3");
    TilingReport r;
    r.vm.polytope = true;
    r.vm.symmetric = center_of_symmetry(p).has_value();
    r.vm.facet_symmetric = facet_symmetry_check(p).pass;
    if (!r.vm.symmetric) {
        r.reason = "central-symmetry";
    } else if (!r.vm.facet_symmetric) {
        r.reason = "facet-symmetry";
    } else {
        r.belts = belts(p);
        if (p.dim() == 2) {
            const std::size_t n = p.facets().size();
            r.vm.belts_4_or_6 = belt_length_ok(n);
            if (!r.vm.belts_4_or_6) r.reason = "edge-count-" + std::to_string(n);
        } else {
            r.vm.belts_4_or_6 = true;
            for (const auto& b : r.belts)
                if (!belt_length_ok(b.facets.size())) {
                    r.vm.belts_4_or_6 = false;
                    r.reason = "belt-length-" + std::to_string(b.facets.size());
                    break;
                }
        }
    }
    r.tiles = r.vm.polytope && r.vm.symmetric && r.vm.facet_symmetric && r.vm.belts_4_or_6;
    return r;
}

TauGroup tau_group(const Polytope& p) {
    TauGroup g;
    if (!center_of_symmetry(p) || !facet_symmetry_check(p).pass) return g;
    for (const auto& pair : tau_vectors(p)) g.generators.push_back(pair.tau);
    std::vector<Vec> span{Vec(p.dim())};
    span.insert(span.end(), g.generators.begin(), g.generators.end());
    g.rank = affine_dimension(span);
    if (g.rank == p.dim()) g.lattice = Lattice::from_generators(g.generators);
    return g;
}

Lattice lattice_T(const Polytope& p) {
    if (!venkov_mcmullen(p).tiles) throw Error(ErrorCode::PreconditionFailed, "T is only built for translational tiles");
    auto g = tau_group(p);
    if (!g.lattice) throw Error(ErrorCode::NotALattice, "tau vectors have rank " + std::to_string(g.rank));
    return *g.lattice;
}

PackingResult packing_verify(const Polytope& p, const Lattice& l) {
    if (l.dim() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "lattice dimension");
    PackingResult r;
    r.pass = true;
    const auto base = p.halfspaces();
    for (const Vec& t : l.nonzero_points_strictly_inside(p.diameter_squared())) {
        // P cap (P + t) and P cap (P - t) are translates; check one of each pair.
        if (t < Vec(p.dim())) continue;
        ++r.translates_checked;
        std::vector<Halfspace> shifted;
        for (const auto& h : base) shifted.push_back(Halfspace{h.normal, h.offset + dot(h.normal, t)});
        auto overlap = clip(p, shifted);
        if (overlap) {
            r.pass = false;
            r.witness = t;
            r.overlap = overlap->volume();
            break;
        }
    }
    return r;
}

CoveringResult covering_verify(const Polytope& p, const Lattice& l, const CoveringOptions& opts) {
    CoveringResult r;
    const Rational vol = p.volume();
    if (l.covolume() == vol) {
        // Equal density: covering iff the translates do not overlap.
        r.covered = packing_verify(p, l).pass;
        return r;
    }
    if (l.covolume() > vol) {
        r.covered = false;  // density |P| / covol < 1
        return r;
    }
    r.method = CoveringResult::Method::Sampled;
    r.seed = opts.seed;
    auto m = oracle::multiplicity_sample(p, l.basis_vectors(), oracle::bounding_config(p, opts.samples, opts.seed));
    r.histogram = m.histogram;
    r.covered = m.min >= 1;
    return r;
}

FedorovClass fedorov_classify(const Polytope& p) {
    if (p.dim() != 3) throw Error(ErrorCode::NotATiler, "Fedorov classes are three-dimensional");
    auto vm = venkov_mcmullen(p);
    if (!vm.tiles) throw Error(ErrorCode::NotATiler, "fails condition: " + vm.reason);
    std::vector<std::size_t> lengths;
    for (const auto& b : vm.belts) lengths.push_back(b.facets.size());
    std::sort(lengths.begin(), lengths.end());
    for (const auto& sig : fedorov_table())
        if (sig.facets == p.facets().size() && sig.belt_lengths == lengths) return sig.cls;
    throw Error(ErrorCode::PreconditionFailed, "tiler with unmatched belt signature");
}

std::optional<PrismWitness> is_prism(const Polytope& p) {
    if (p.dim() < 2) return std::nullopt;
    const Rational vol = p.volume();
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        auto g = opposite_facet(p, f);
        if (!g || *g < f) continue;
        auto t = facet_translation(p, *g, f);
        if (!t) continue;
        std::vector<Vec> pts;
        for (std::size_t i : p.facets()[f].vertices) pts.push_back(p.vertex(i));
        for (std::size_t i : p.facets()[*g].vertices) pts.push_back(p.vertex(i));
        if (Polytope::from_vertices(std::move(pts)).volume() == vol) return PrismWitness{*g, f, *t};
    }
    return std::nullopt;
}

TilingReport analyze_tiling(const Polytope& p) {
    TilingReport r = venkov_mcmullen(p);
    r.is_prism = is_prism(p).has_value();
    if (!r.tiles) return r;
    r.lattice_T = lattice_T(p);
    r.packing_verified = packing_verify(p, *r.lattice_T).pass;
    r.covering_verified = r.packing_verified && r.lattice_T->covolume() == p.volume();
    if (p.dim() == 3) r.fedorov_class = fedorov_classify(p);
    return r;
}

}  // namespace spectile
