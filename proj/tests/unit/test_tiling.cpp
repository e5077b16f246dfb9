#include <doctest.h>

#include "spectile/catalog.hpp"
#include "spectile/oracle.hpp"
#include "spectile/tiling.hpp"
#include "support.hpp"

using namespace spectile;
using spectile::test::q;

namespace {

std::vector<std::size_t> belt_lengths(const Polytope& p) {
    std::vector<std::size_t> out;
    for (const auto& b : belts(p)) out.push_back(b.facets.size());
    std::sort(out.begin(), out.end());
    return out;
}

Matrix scaled_identity(const Rational& s) {
    Matrix m = Matrix::identity(3);
    for (int i = 0; i < 3; ++i) m(i, i) = s;
    return m;
}

}  // namespace

TEST_CASE("belts") {
    CHECK(belt_lengths(catalog::cube()) == std::vector<std::size_t>{4, 4, 4});
    CHECK(belt_lengths(catalog::truncated_octahedron()) == std::vector<std::size_t>(6, 6));
    CHECK(belt_lengths(catalog::rhombic_dodecahedron()) == std::vector<std::size_t>(4, 6));
    CHECK(belt_lengths(catalog::elongated_dodecahedron()) == std::vector<std::size_t>{4, 6, 6, 6, 6});
    CHECK(belt_lengths(catalog::hexagonal_prism()) == std::vector<std::size_t>{4, 4, 4, 6});
    CHECK(belt_lengths(catalog::rhombic_icosahedron()) == std::vector<std::size_t>(5, 8));
}

TEST_CASE("belt facets are cyclic neighbours") {
    auto p = catalog::truncated_octahedron();
    for (const auto& b : belts(p)) {
        for (std::size_t i = 0; i < b.facets.size(); ++i) {
            const auto& f = p.facets()[b.facets[i]];
            const auto& g = p.facets()[b.facets[(i + 1) % b.facets.size()]];
            std::size_t shared = 0;
            for (auto e : f.edges) shared += std::count(g.edges.begin(), g.edges.end(), e);
            CHECK(shared == 1);
            CHECK(dot(f.normal, b.direction) == 0);
        }
    }
}

TEST_CASE("venkov-mcmullen") {
    auto t = venkov_mcmullen(catalog::triangle());
    CHECK_FALSE(t.tiles);
    CHECK(t.reason == "central-symmetry");
    CHECK(venkov_mcmullen(catalog::hexagon()).tiles);
    auto ri = venkov_mcmullen(catalog::rhombic_icosahedron());
    CHECK_FALSE(ri.tiles);
    CHECK(ri.vm.symmetric);
    CHECK(ri.vm.facet_symmetric);
    CHECK_FALSE(ri.vm.belts_4_or_6);
    CHECK(ri.reason == "belt-length-8");
    auto tp = venkov_mcmullen(catalog::prism(catalog::triangle(), q(1)));
    CHECK(tp.reason == "central-symmetry");
    auto octagon = catalog::zonotope({Vec{q(1), q(0)}, Vec{q(0), q(1)}, Vec{q(1), q(1)}, Vec{q(1), q(-1)}});
    auto o = venkov_mcmullen(octagon);
    CHECK_FALSE(o.tiles);
    CHECK(o.reason == "edge-count-8");
}

TEST_CASE("lattice T") {
    auto c = lattice_T(catalog::cube());
    CHECK(c == Lattice::integer(3));
    CHECK(c.covolume() == 1);
    auto h = lattice_T(catalog::hexagon());
    CHECK(h.basis() == Matrix::from_columns({Vec{q(1), q(1)}, Vec{q(0), q(3)}}));
    CHECK(lattice_T(catalog::truncated_octahedron()).covolume() == 32);
    CHECK_THROWS_AS(lattice_T(catalog::triangle()), Error);
}

TEST_CASE("packing") {
    auto cube = catalog::cube();
    CHECK(packing_verify(cube, Lattice::integer(3)).pass);
    auto half = packing_verify(cube, Lattice::from_basis(scaled_identity(q(1, 2))));
    CHECK_FALSE(half.pass);
    REQUIRE(half.witness.has_value());
    CHECK(half.overlap > 0);
    auto tr = packing_verify(cube, Lattice::from_basis(Matrix::from_columns(
                                       {Vec{q(1, 2), q(0), q(0)}, Vec{q(0), q(1), q(0)}, Vec{q(0), q(0), q(1)}})));
    CHECK_FALSE(tr.pass);
    CHECK(tr.overlap == q(1, 2));
    auto hex = catalog::hexagon();
    CHECK(packing_verify(hex, lattice_T(hex)).pass);
}

TEST_CASE("covering") {
    auto hex = catalog::hexagon();
    auto l = lattice_T(hex);
    CHECK(covering_verify(hex, l).covered);
    CHECK(l.covolume() == hex.volume());
    CHECK_FALSE(covering_verify(catalog::cube(), Lattice::from_basis(scaled_identity(q(2)))).covered);

    auto ri = catalog::rhombic_icosahedron();
    auto g = tau_group(ri);
    REQUIRE(g.lattice.has_value());
    auto r = covering_verify(ri, *g.lattice, CoveringOptions{100000, 20240611});
    CHECK(r.covered);
    CHECK(r.method == CoveringResult::Method::Sampled);
    CHECK(r.seed == 20240611);
}

TEST_CASE("fedorov classes") {
    CHECK(fedorov_classify(catalog::cube()) == FedorovClass::Parallelepiped);
    CHECK(fedorov_classify(catalog::hexagonal_prism()) == FedorovClass::HexagonalPrism);
    CHECK(fedorov_classify(catalog::rhombic_dodecahedron()) == FedorovClass::RhombicDodecahedron);
    CHECK(fedorov_classify(catalog::elongated_dodecahedron()) == FedorovClass::ElongatedDodecahedron);
    CHECK(fedorov_classify(catalog::truncated_octahedron()) == FedorovClass::TruncatedOctahedron);
    CHECK_THROWS_AS(fedorov_classify(catalog::rhombic_icosahedron()), Error);
    for (auto c : {FedorovClass::Parallelepiped, FedorovClass::TruncatedOctahedron})
        CHECK(fedorov_from_string(to_string(c)) == c);
}

TEST_CASE("fedorov table against independent constructions") {
    // Rhombic dodecahedron from its 14 vertices, truncated octahedron from halfspaces.
    std::vector<Vec> rd;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1}) rd.push_back(Vec{q(a), q(b), q(c)});
    for (int i = 0; i < 3; ++i)
        for (int s : {-2, 2}) {
            Vec v(3);
            v[i] = s;
            rd.push_back(v);
        }
    CHECK(oracle::combinatorially_isomorphic(Polytope::from_vertices(rd), catalog::rhombic_dodecahedron()));
    CHECK(fedorov_classify(Polytope::from_vertices(rd)) == FedorovClass::RhombicDodecahedron);
}

TEST_CASE("prisms") {
    auto hp = catalog::hexagonal_prism();
    auto w = is_prism(hp);
    REQUIRE(w.has_value());
    CHECK(hp.facets()[w->base].vertices.size() == 6);
    CHECK(hp.facets()[w->top].vertices.size() == 6);
    CHECK_FALSE(is_prism(catalog::truncated_octahedron()).has_value());
    CHECK(is_prism(catalog::cube()).has_value());
    CHECK_FALSE(is_prism(catalog::hexagon()).has_value());
    CHECK(is_prism(catalog::square()).has_value());
}

TEST_CASE("analyze_tiling on every catalog tiler") {
    for (const auto& e : catalog::entries()) {
        auto p = e.make();
        if (p.dim() < 2) continue;
        auto r = analyze_tiling(p);
        CHECK_MESSAGE(r.tiles == e.tiler, e.name);
        if (!e.tiler) {
            CHECK_MESSAGE(r.reason == e.witness, e.name);
            continue;
        }
        CHECK_MESSAGE(r.packing_verified, e.name);
        CHECK_MESSAGE(r.covering_verified, e.name);
        CHECK_MESSAGE(r.lattice_T->covolume() == p.volume(), e.name);
        if (e.fedorov) CHECK_MESSAGE(r.fedorov_class == e.fedorov, e.name);
    }
}
