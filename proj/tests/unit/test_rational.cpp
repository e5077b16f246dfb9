#include <doctest.h>

#include "spectile/hifloat.hpp"
#include "spectile/rational.hpp"
#include "support.hpp"

using namespace spectile;
using spectile::test::q;

TEST_CASE("parse and print") {
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-4") == q(-4));
    CHECK(parse_rational("0.125") == q(1, 8));
    CHECK(parse_rational("010") == q(10));
    CHECK(parse_rational("007/0010") == q(7, 10));
    CHECK(parse_rational("-0.0625") == q(-1, 16));
    CHECK(parse_rational("2.5e-1") == q(1, 4));
    CHECK(to_string(q(-2, 4)) == "-1/2");
    CHECK(to_string(q(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("floor and frac") {
    CHECK(floor(q(-1, 3)) == -1);
    CHECK(frac(q(-1, 3)) == q(2, 3));
    CHECK(frac(q(7, 2)) == q(1, 2));
    CHECK(sign(q(-5, 7)) == -1);
}

TEST_CASE("double conversions") {
    CHECK(rational_from_double(0.75) == q(3, 4));
    CHECK(snap_rational(0.3333333333, 1000) == q(1, 3));
}

TEST_CASE("vector algebra") {
    Vec a{q(1), q(2), q(2)};
    CHECK(a.norm2() == 9);
    CHECK(cross(Vec{q(1), q(0), q(0)}, Vec{q(0), q(1), q(0)}) == Vec{q(0), q(0), q(1)});
    CHECK(primitive_direction(Vec{q(2, 3), q(-4, 3)}) == Vec{q(1), q(-2)});
}

TEST_CASE("matrix inverse and determinant") {
    Matrix m{{q(1), q(0)}, {q(1), q(3)}};
    CHECK(m.determinant() == 3);
    CHECK(m * m.inverse() == Matrix::identity(2));
}

TEST_CASE("unit phase") {
    auto z = unit_phase(q(1, 4));  // exp(-pi i / 2) = -i
    CHECK(std::abs(z.re.convert_to<double>()) < 1e-30);
    CHECK(z.im.convert_to<double>() == doctest::Approx(-1.0).epsilon(1e-15));
    auto w = unit_phase(q(5, 4));
    CHECK(std::abs((w.im - z.im).convert_to<double>()) < 1e-30);
}
