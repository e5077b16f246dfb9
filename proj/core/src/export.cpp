#include "spectile/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "spectile/error.hpp"

namespace spectile {

namespace {

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#9c755f"};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x == 0 ? 0.0 : x);
    return buf;
}

std::vector<TileCopy> copies_or_self(const Polytope& p, const std::optional<Lattice>& l, std::size_t copies) {
    if (!l) return {TileCopy{Vec(p.dim()), 0}};
    if (l->dim() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "lattice dimension");
    return tile_copies(*l, copies);
}

}  // namespace

std::vector<TileCopy> tile_copies(const Lattice& l, std::size_t copies) {
    if (copies == 0) return {};
    Rational r2 = 1;
    for (const auto& b : l.basis_vectors()) r2 = std::max(r2, b.norm2());
    std::vector<Vec> pts;
    while ((pts = l.points_in_ball(r2)).size() < copies) r2 *= 4;
    std::stable_sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) { return a.norm2() < b.norm2(); });
    pts.resize(copies);
    std::vector<TileCopy> out;
    for (const auto& t : pts) {
        auto c = l.coordinates(t);
        int parity = 0;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] % 2 != 0) parity |= 1 << k;
        out.push_back(TileCopy{t, parity});
    }
    return out;
}

std::string export_svg(const Polytope& p, const std::optional<Lattice>& l, std::size_t copies) {
    if (p.dim() != 2) throw Error(ErrorCode::FormatDimensionMismatch, "svg export needs a polygon");
    const auto tiles = copies_or_self(p, l, copies);

    // Boundary cycle: walk edges from the lowest vertex.
    std::vector<std::size_t> cycle{0};
    std::vector<bool> used(p.edges().size());
    while (cycle.size() < p.vertices().size()) {
        for (std::size_t e = 0; e < p.edges().size(); ++e) {
            if (used[e]) continue;
            const auto& ed = p.edges()[e];
            if (ed.a == cycle.back() || ed.b == cycle.back()) {
                used[e] = true;
                cycle.push_back(ed.a == cycle.back() ? ed.b : ed.a);
                break;
            }
        }
    }

    double lo[2] = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    double hi[2] = {-lo[0], -lo[1]};
    for (const auto& t : tiles)
        for (const auto& v : p.vertices()) {
            auto x = (v + t.shift).to_double();
            for (int k = 0; k < 2; ++k) {
                lo[k] = std::min(lo[k], x[k]);
                hi[k] = std::max(hi[k], x[k]);
            }
        }
    const double scale = 40;
    const double w = (hi[0] - lo[0]) * scale, h = (hi[1] - lo[1]) * scale;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 "
       << fmt(w) << " " << fmt(h) << "\">\n";
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        os << "  <polygon data-tile=\"" << i << "\" data-parity=\"" << tiles[i].parity << "\" fill=\""
           << kPalette[tiles[i].parity % 8] << "\" stroke=\"#222222\" stroke-width=\"0.5\" points=\"";
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            auto x = (p.vertex(cycle[k]) + tiles[i].shift).to_double();
            os << (k ? " " : "") << fmt((x[0] - lo[0]) * scale) << "," << fmt((hi[1] - x[1]) * scale);
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string export_obj(const Polytope& p, const std::optional<Lattice>& l, std::size_t copies) {
    if (p.dim() != 3) throw Error(ErrorCode::FormatDimensionMismatch, "obj export needs a solid");
    const auto tiles = copies_or_self(p, l, copies);
    std::ostringstream os;
    os << "# spectile " << tiles.size() << " tile(s), " << p.vertices().size() << " vertices each\n";
    const std::size_t nv = p.vertices().size();
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        os << "g tile_" << i << "\nusemtl parity_" << tiles[i].parity << "\n";
        for (const auto& v : p.vertices()) {
            auto x = (v + tiles[i].shift).to_double();
            os << "v " << fmt(x[0]) << " " << fmt(x[1]) << " " << fmt(x[2]) << "\n";
        }
        for (const auto& f : p.facets()) {
            os << "f";
            for (std::size_t vi : f.vertices) os << " " << i * nv + vi + 1;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace spectile
