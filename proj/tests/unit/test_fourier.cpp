#include <doctest.h>

#include <cmath>
#include <complex>

#include "spectile/catalog.hpp"
#include "spectile/fourier.hpp"
#include "spectile/oracle.hpp"
#include "spectile/spectrum.hpp"
#include "spectile/tiling.hpp"
#include "support.hpp"

using namespace spectile;
using spectile::test::q;

namespace {

std::size_t facet_with_normal(const Polytope& p, const Vec& n) {
    for (std::size_t f = 0; f < p.facets().size(); ++f)
        if (p.facets()[f].normal == n) return f;
    FAIL("no facet with the requested normal");
    return 0;
}

double dist(const ComplexValue& a, const ComplexValue& b) { return (a - b).abs(); }

Polytope standard_truncated_octahedron() {
    Matrix m = Matrix::identity(3);
    m(0, 0) = q(1, 4);
    return catalog::truncated_octahedron().apply(AffineMap::linear(m));
}

Polytope diamond() {
    return Polytope::from_vertices({Vec{q(1), q(0)}, Vec{q(0), q(1)}, Vec{q(-1), q(0)}, Vec{q(0), q(-1)}});
}

std::vector<Rational> ladder() {
    std::vector<Rational> out;
    for (const auto& s : spectile::test::derived()["cone_xi1"]) out.push_back(parse_rational(s.get<std::string>()));
    return out;
}

}  // namespace

TEST_CASE("interval is a sinc") {
    auto p = catalog::interval();
    for (auto t : {q(1, 3), q(5, 7), q(-9, 4), q(13, 2)}) {
        double x = t.convert_to<double>();
        auto v = ft_indicator(p, Vec{t});
        CHECK(v.re.convert_to<double>() == doctest::Approx(std::sin(M_PI * x) / (M_PI * x)).epsilon(1e-14));
        CHECK(std::abs(v.im.convert_to<double>()) < 1e-30);
    }
    CHECK(ft_indicator(p, Vec{q(1)}).abs() <= 1e-15);
}

TEST_CASE("cube zeros") {
    CHECK(ft_indicator(catalog::cube(), Vec{q(1), q(2), q(3)}).abs() <= 1e-30);
    CHECK(ft_zero(catalog::cube(), Vec{q(1), q(0), q(0)}));
    CHECK_FALSE(ft_zero(catalog::cube(), Vec{q(1, 2), q(0), q(0)}));
    CHECK(ft_indicator(catalog::cube(), Vec{q(1, 2), q(0), q(0)}).abs() == doctest::Approx(2 / M_PI).epsilon(1e-15));
    CHECK_THROWS_AS(ft_zero(catalog::cube(), Vec(3)), Error);
}

TEST_CASE("hexagon against the simplex oracle") {
    auto h = catalog::hexagon();
    Vec xi{q(1, 3), q(1, 3)};
    CHECK(dist(ft_indicator(h, xi), oracle::simplex_ft(h, xi)) <= 1e-12);
}

TEST_CASE("square against the frozen oracle value") {
    const auto& fx = spectile::test::derived()["square_ft_1_3_1_5"];
    auto v = ft_indicator(catalog::square(), Vec{q(1, 3), q(1, 5)}).to_complex();
    CHECK(std::abs(v - std::complex<double>(fx[0].get<double>(), fx[1].get<double>())) <= 1e-12);
}

TEST_CASE("zero frequency gives the volume") {
    auto v = ft_indicator(catalog::truncated_octahedron(), Vec(3));
    CHECK(v.re.convert_to<double>() == doctest::Approx(32.0).epsilon(1e-15));
}

TEST_CASE("surface transforms") {
    auto c = catalog::cube();
    std::size_t f = facet_with_normal(c, Vec{q(1), q(0), q(0)});
    for (auto t : {q(1, 3), q(2), q(-7, 5)}) {
        auto v = ft_surface(c, f, Vec{t, q(0), q(0)});
        CHECK(dist(v, unit_phase(t / 2)) <= 1e-15);
    }
    CHECK(ft_surface(c, f, Vec{q(0), q(1), q(0)}).abs() <= 1e-30);

    auto h = catalog::hexagon();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Vec xi = spectile::test::random_vec(rng, 2, -4, 4, 7);
        if (xi.is_zero()) continue;
        for (std::size_t e = 0; e < h.facets().size(); ++e) {
            const auto& fv = h.facets()[e].vertices;
            Vec a = h.vertex(fv[0]), b = h.vertex(fv[1]);
            auto ad = a.to_double(), bd = b.to_double(), x = xi.to_double();
            double len = std::hypot(bd[0] - ad[0], bd[1] - ad[1]);
            double m0 = (ad[0] + bd[0]) / 2, m1 = (ad[1] + bd[1]) / 2;
            double s = (x[0] * (bd[0] - ad[0]) + x[1] * (bd[1] - ad[1]));  // <xi, u> len
            double sinc = s == 0 ? 1 : std::sin(M_PI * s) / (M_PI * s);
            auto expect = std::polar(len * sinc, -2 * M_PI * (x[0] * m0 + x[1] * m1));
            CHECK(std::abs(ft_surface(h, e, xi).to_complex() - expect) <= 1e-12);
        }
    }
}

TEST_CASE("face transforms of vertices and the body") {
    auto c = catalog::cube();
    Vec xi{q(1, 3), q(2, 7), q(-1, 5)};
    CHECK(dist(ft_face(c, {3, 0}, xi), ft_indicator(c, xi)) <= 1e-30);
    CHECK(dist(ft_face(c, {0, 0}, xi), unit_phase(dot(xi, c.vertex(0)))) <= 1e-30);
}

TEST_CASE("hexagon transform vanishes on its dual lattice") {
    auto h = catalog::hexagon();
    auto dual = dual_lattice(lattice_T(h));
    for (const auto& x : dual.nonzero_points_strictly_inside(q(10))) {
        CHECK(ft_zero(h, x));
        CHECK(oracle::simplex_ft(h, x).abs() <= 1e-10 * 3);
    }
}

TEST_CASE("plan matches the free functions") {
    auto p = catalog::elongated_dodecahedron();
    FourierPlan plan(p);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        Vec xi = spectile::test::random_vec(rng, 3, -3, 3, 5);
        CHECK(dist(plan.indicator(xi), ft_indicator(p, xi)) <= 1e-30);
        CHECK(dist(plan.surface(2, xi), ft_surface(p, 2, xi)) <= 1e-30);
    }
}

TEST_CASE("frequency snapping") {
    CHECK(snap_frequency({0.5, 1.0 / 3}) == (Vec{q(1, 2), q(1, 3)}));
    // Best approximation with denominator <= 10^6, not the truncated decimal.
    Vec s = snap_frequency({0.1234567});
    CHECK(denominator(s[0]) <= kFrequencySnapDenominator);
    CHECK(std::abs(s[0].convert_to<double>() - 0.1234567) <= std::abs(123457.0 / 1000000 - 0.1234567));
}

TEST_CASE("decay bound") {
    std::mt19937_64 rng(1);
    std::vector<Vec> samples;
    while (samples.size() < 1000) {
        Vec xi = spectile::test::random_vec(rng, 3, -10, 10, 100);
        if (!xi.is_zero()) samples.push_back(xi);
    }
    auto cube = decay_bound_check(catalog::cube(), samples);
    CHECK(cube.pass);
    CHECK(cube.samples == 1000);
    CHECK(cube.worst_ratio <= 1);
    CHECK(decay_bound_check(catalog::truncated_octahedron(), samples).pass);
    CHECK(surface_measure_upper(catalog::cube()) == doctest::Approx(6));

    std::vector<Vec> ts;
    for (int k = 1; k <= 50; ++k) ts.push_back(Vec{q(k, 7)});
    CHECK(decay_bound_check(catalog::interval(), ts).pass);
}

TEST_CASE("facet bound") {
    auto c = catalog::cube();
    std::size_t f = facet_with_normal(c, Vec{q(0), q(0), q(1)});
    CHECK(std::isinf(facet_decay_bound(c, f, Vec{q(0), q(0), q(3)})));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        Vec xi = spectile::test::random_vec(rng, 3, -6, 6, 9);
        if (xi[0] == 0 && xi[1] == 0) continue;
        CHECK(ft_surface(c, f, xi).abs() <= facet_decay_bound(c, f, xi) * (1 + 1e-12));
    }
}

TEST_CASE("divergence identity") {
    std::mt19937_64 rng(9);
    for (auto p : {catalog::truncated_octahedron(), catalog::hexagon(), catalog::triangle()}) {
        for (int i = 0; i < 10; ++i) {
            Vec xi = spectile::test::random_vec(rng, p.dim(), -5, 5, 11);
            if (xi.is_zero()) continue;
            CHECK(divergence_identity_residual(p, xi) <= 1e-10);
        }
    }
}

TEST_CASE("leading asymptotics of the cube have no remainder") {
    auto sq = catalog::square();
    auto r = asymptotic_cone_check(catalog::cube(), sq, q(1, 10),
                                   {q(13, 3), q(25, 3), q(49, 3), q(97, 3)});
    CHECK(r.samples.size() == 4 * 25);
    CHECK(r.max_scaled <= 1e-20);
}

TEST_CASE("leading asymptotics match the frozen oracle residuals") {
    const auto& fx = spectile::test::derived();
    auto to = asymptotic_cone_check(standard_truncated_octahedron(), diamond(), q(1, 10), ladder());
    for (std::size_t i = 0; i < to.max_scaled_by_xi1.size(); ++i) {
        double expect = fx["cone_truncated_octahedron"][i].get<double>();
        CHECK(to.max_scaled_by_xi1[i] == doctest::Approx(expect).epsilon(1e-9));
    }
    auto hp = asymptotic_cone_check(catalog::hexagonal_prism(), catalog::hexagon(), q(1, 10), ladder());
    for (double v : hp.max_scaled_by_xi1) CHECK(v <= 1e-20);
}

TEST_CASE("cone check preconditions") {
    CHECK_THROWS_AS(asymptotic_cone_check(catalog::truncated_octahedron(), diamond(), q(1, 10), {q(5)}), Error);
    CHECK_THROWS_AS(asymptotic_cone_check(catalog::cube(), catalog::hexagon(), q(1, 10), {q(5)}), Error);
}
