#include <doctest.h>

#include <regex>
#include <sstream>

#include "spectile/catalog.hpp"
#include "spectile/export.hpp"
#include "spectile/oracle.hpp"
#include "spectile/tiling.hpp"
#include "support.hpp"

using namespace spectile;
using spectile::test::q;

namespace {

using Pt = std::array<double, 2>;
using Poly = std::vector<Pt>;

std::vector<Poly> svg_polygons(const std::string& svg) {
    std::vector<Poly> out;
    std::regex poly_re(R"re(points="([^"]*)")re");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly_re); it != std::sregex_iterator(); ++it) {
        Poly p;
        std::istringstream ss((*it)[1].str());
        std::string pair;
        while (ss >> pair) {
            auto comma = pair.find(',');
            p.push_back({std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
        }
        out.push_back(p);
    }
    return out;
}

// Signed distance to the boundary of a convex polygon; positive inside.
double inside_margin(const Poly& p, const Pt& x) {
    double area2 = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Pt& a = p[i];
        const Pt& b = p[(i + 1) % p.size()];
        area2 += a[0] * b[1] - a[1] * b[0];
    }
    double orient = area2 > 0 ? 1 : -1;
    double margin = 1e300;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Pt& a = p[i];
        const Pt& b = p[(i + 1) % p.size()];
        double cr = (b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]);
        margin = std::min(margin, orient * cr / std::hypot(b[0] - a[0], b[1] - a[1]));
    }
    return margin;
}

}  // namespace

TEST_CASE("hexagon tiling svg covers without gaps or overlaps") {
    auto hex = catalog::hexagon();
    auto svg = export_svg(hex, lattice_T(hex), 25);
    auto polys = svg_polygons(svg);
    REQUIRE(polys.size() == 25);
    CHECK(svg.find("data-parity=") != std::string::npos);

    Pt c{0, 0};
    for (const auto& v : polys[0]) {
        c[0] += v[0] / static_cast<double>(polys[0].size());
        c[1] += v[1] / static_cast<double>(polys[0].size());
    }
    // Rasterise the disk of radius 2 units (80 px) around the central tile at 1 px.
    const double pixel_tol = 0.5;
    long long covered = 0, ambiguous = 0;
    for (int i = -80; i <= 80; ++i)
        for (int j = -80; j <= 80; ++j) {
            if (i * i + j * j > 80 * 80) continue;
            Pt x{c[0] + i + 0.5, c[1] + j + 0.5};
            int hits = 0;
            bool near_edge = false;
            for (const auto& p : polys) {
                double m = inside_margin(p, x);
                if (std::abs(m) < pixel_tol) near_edge = true;
                if (m > 0) ++hits;
            }
            if (near_edge) {
                ++ambiguous;
                continue;
            }
            CHECK(hits == 1);
            ++covered;
        }
    CHECK(covered > 10 * ambiguous);
}

TEST_CASE("cube obj with 27 boxes") {
    auto obj = export_obj(catalog::cube(), Lattice::integer(3), 27);
    std::istringstream in(obj);
    std::string line;
    std::size_t groups = 0, faces = 0, verts = 0;
    std::set<std::string> materials;
    while (std::getline(in, line)) {
        if (line.rfind("g ", 0) == 0) ++groups;
        if (line.rfind("f ", 0) == 0) ++faces;
        if (line.rfind("v ", 0) == 0) ++verts;
        if (line.rfind("usemtl ", 0) == 0) materials.insert(line);
    }
    CHECK(groups == 27);
    CHECK(faces == 27 * 6);
    CHECK(verts == 27 * 8);
    CHECK(materials.size() == 8);
}

TEST_CASE("truncated octahedron copies do not overlap") {
    auto to = catalog::truncated_octahedron();
    auto l = lattice_T(to);
    auto copies = tile_copies(l, 27);
    REQUIRE(copies.size() == 27);
    CHECK(copies[0].shift.is_zero());
    // Over the bounding box of the central tile every point lies in exactly one copy.
    auto cfg = oracle::bounding_config(to, 20000, 99);
    auto m = oracle::multiplicity_sample(to, l.basis_vectors(), cfg);
    CHECK(m.min == 1);
    CHECK(m.max == 1);
    CHECK(!export_obj(to, l, 27).empty());
}

TEST_CASE("format dimension checks") {
    CHECK_THROWS_AS(export_svg(catalog::cube()), Error);
    CHECK_THROWS_AS(export_obj(catalog::hexagon()), Error);
    CHECK(export_svg(catalog::hexagon()) == export_svg(catalog::hexagon()));
}
