#include <doctest.h>

#include "spectile/lattice.hpp"
#include "spectile/spectrum.hpp"
#include "support.hpp"

using namespace spectile;
using spectile::test::q;

TEST_CASE("hermite normal form of the hexagon tau vectors") {
    auto l = Lattice::from_generators({Vec{q(1), q(1)}, Vec{q(-1), q(2)}, Vec{q(2), q(-1)}});
    CHECK(l.basis() == Matrix::from_columns({Vec{q(1), q(1)}, Vec{q(0), q(3)}}));
    CHECK(l.covolume() == 3);
}

TEST_CASE("generators with redundancy") {
    auto l = Lattice::from_generators({Vec{q(2), q(0)}, Vec{q(0), q(2)}, Vec{q(1), q(1)}, Vec{q(4), q(6)}});
    CHECK(l.covolume() == 2);
    CHECK(l.contains(Vec{q(3), q(1)}));
    CHECK_FALSE(l.contains(Vec{q(1), q(0)}));
    CHECK_THROWS_AS(Lattice::from_generators({Vec{q(1), q(1)}, Vec{q(2), q(2)}}), Error);
}

TEST_CASE("rational generators") {
    auto l = Lattice::from_generators({Vec{q(1, 2), q(0)}, Vec{q(0), q(1, 3)}});
    CHECK(l.covolume() == q(1, 6));
    CHECK(l.contains(Vec{q(3, 2), q(-2, 3)}));
}

TEST_CASE("dual lattices") {
    CHECK(dual_lattice(Lattice::integer(3)) == Lattice::integer(3));

    const auto& fx = spectile::test::derived()["hexagon_dual_basis"];
    auto hex = Lattice::from_basis(Matrix::from_columns({Vec{q(1), q(1)}, Vec{q(0), q(3)}}));
    auto d = dual_lattice(hex);
    CHECK(d.covolume() == q(1, 3));
    for (const auto& col : fx) {
        Vec v{parse_rational(col[0].get<std::string>()), parse_rational(col[1].get<std::string>())};
        CHECK(d.contains(v));
    }
    Lattice oracle = Lattice::from_generators(
        {Vec{parse_rational(fx[0][0].get<std::string>()), parse_rational(fx[0][1].get<std::string>())},
         Vec{parse_rational(fx[1][0].get<std::string>()), parse_rational(fx[1][1].get<std::string>())}});
    CHECK(oracle == d);

    Matrix box{{q(2), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
    Matrix half{{q(1, 2), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
    CHECK(dual_lattice(Lattice::from_basis(box)) == Lattice::from_basis(half));
}

TEST_CASE("dual pairing is integral") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = spectile::test::random_invertible(rng, 3);
        auto l = Lattice::from_basis(a);
        auto d = dual_lattice(l);
        for (const auto& x : l.basis_vectors())
            for (const auto& y : d.basis_vectors()) CHECK(frac(dot(x, y)) == 0);
        CHECK(l.covolume() * d.covolume() == 1);
    }
}

TEST_CASE("points in a ball") {
    CHECK(Lattice::integer(2).points_in_ball(q(9, 4)).size() == 9);
    CHECK(Lattice::integer(3).points_in_ball(q(1)).size() == 7);
    CHECK(Lattice::integer(2).nonzero_points_strictly_inside(q(2)).size() == 4);
}

TEST_CASE("coordinates") {
    auto l = Lattice::from_basis(Matrix::from_columns({Vec{q(1), q(1)}, Vec{q(0), q(3)}}));
    auto c = l.coordinates(Vec{q(2), q(5)});
    CHECK(c == std::vector<Integer>{2, 1});
    CHECK_THROWS_AS(l.coordinates(Vec{q(1), q(0)}), Error);
}
