#include <doctest.h>

#include "spectile/catalog.hpp"
#include "spectile/spectrum.hpp"
#include "spectile/symmetry.hpp"
#include "spectile/tiling.hpp"
#include "support.hpp"

using namespace spectile;
using spectile::test::q;

TEST_CASE("catalog volumes and combinatorics") {
    struct Row {
        const char* name;
        Rational volume;
        std::size_t v, f, e;
    };
    const Row rows[] = {
        {"cube", q(1), 8, 6, 12},
        {"hexagonal-prism", q(3), 12, 8, 18},
        {"rhombic-dodecahedron", q(16), 14, 12, 24},
        {"elongated-dodecahedron", q(24), 18, 12, 28},
        {"truncated-octahedron", q(32), 24, 14, 36},
        {"rhombic-icosahedron", q(17), 22, 20, 40},
    };
    for (const auto& r : rows) {
        auto p = catalog::make(r.name);
        CHECK_MESSAGE(p.volume() == r.volume, r.name);
        CHECK_MESSAGE(p.vertices().size() == r.v, r.name);
        CHECK_MESSAGE(p.facets().size() == r.f, r.name);
        CHECK_MESSAGE(p.edges().size() == r.e, r.name);
        CHECK_MESSAGE(r.v - r.e + r.f == 2, r.name);
    }
    CHECK(catalog::hexagon().volume() == 3);
    CHECK(catalog::triangle().volume() == q(1, 2));
    CHECK(catalog::interval().volume() == 1);
}

TEST_CASE("catalog entries are consistent") {
    for (const auto& e : catalog::entries()) {
        auto p = e.make();
        CHECK(catalog::find(e.name) == &e);
        if (p.dim() < 2) continue;
        auto vm = venkov_mcmullen(p);
        CHECK_MESSAGE(vm.tiles == e.tiler, e.name);
        if (!e.tiler) CHECK_MESSAGE(vm.reason == e.witness, e.name);
        if (center_of_symmetry(p)) CHECK_MESSAGE(center_of_symmetry(p)->is_zero(), e.name);
    }
    CHECK(catalog::find("nonesuch") == nullptr);
    CHECK_THROWS_AS(catalog::make("nonesuch"), Error);
}

TEST_CASE("constructors") {
    auto p = catalog::prism(catalog::square(), q(2));
    CHECK(p.volume() == 2);
    CHECK(p.dim() == 3);
    Matrix a{{q(1), q(1)}, {q(0), q(2)}};
    CHECK(catalog::parallelepiped(a).volume() == 2);
    auto z = catalog::zonotope({Vec{q(1), q(0)}, Vec{q(0), q(1)}});
    CHECK(z == catalog::square());
}
