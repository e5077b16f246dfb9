#include "spectile/catalog.hpp"

#include <algorithm>

#include "spectile/error.hpp"

namespace spectile::catalog {

namespace {

Polytope box(int d) {
    std::vector<Vec> gens;
    for (int k = 0; k < d; ++k) gens.push_back(Vec::unit(d, k));
    return Polytope::zonotope(gens);
}

std::vector<Vec> cube_diagonals() { return {Vec{1, 1, 1}, Vec{1, -1, -1}, Vec{-1, 1, -1}, Vec{-1, -1, 1}}; }

}  // namespace

Polytope interval() { return box(1); }
Polytope square() { return box(2); }
Polytope cube() { return box(3); }
Polytope hexagon() { return Polytope::zonotope({Vec{1, 0}, Vec{0, 1}, Vec{1, -1}}); }
Polytope triangle() { return Polytope::from_vertices({Vec{0, 0}, Vec{1, 0}, Vec{0, 1}}); }

Polytope parallelepiped(const Matrix& a) { return box(a.dim()).apply(AffineMap::linear(a)); }

Polytope prism(const Polytope& base, const Rational& height) {
    if (height <= 0) throw Error(ErrorCode::PreconditionFailed, "prism height must be positive");
    const int d = base.dim() + 1;
    if (d > Vec::kMaxDim) throw Error(ErrorCode::UnsupportedDimension, "prism over a solid");
    std::vector<Vec> pts;
    for (const auto& v : base.vertices())
        for (const Rational& x : {Rational(-height / 2), Rational(height / 2)}) {
            Vec p(d);
            p[0] = x;
            for (int k = 1; k < d; ++k) p[k] = v[k - 1];
            pts.push_back(p);
        }
    return Polytope::from_vertices(std::move(pts));
}

Polytope hexagonal_prism() { return prism(hexagon(), 1); }
Polytope rhombic_dodecahedron() { return Polytope::zonotope(cube_diagonals()); }

Polytope elongated_dodecahedron() {
    auto g = cube_diagonals();
    g.push_back(Vec{0, 0, 1});
    return Polytope::zonotope(g);
}

Polytope truncated_octahedron() {
    std::vector<Vec> pts;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    Vec v(3);
                    v[a] = s1;
                    v[b] = 2 * s2;
                    pts.push_back(v);
                }
        }
    return Polytope::from_vertices(std::move(pts));
}

Polytope rhombic_icosahedron() {
    return Polytope::zonotope({Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}, Vec{1, 1, 1}, Vec{1, 2, 4}});
}

Polytope zonotope(const std::vector<Vec>& generators) { return Polytope::zonotope(generators); }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table{
        {"interval", "[-1/2, 1/2]", true, "", std::nullopt, &interval},
        {"square", "[-1/2, 1/2]^2", true, "", std::nullopt, &square},
        {"hexagon", "zonotope of (1,0), (0,1), (1,-1); area 3", true, "", std::nullopt, &hexagon},
        {"triangle", "(0,0), (1,0), (0,1)", false, "central-symmetry", std::nullopt, &triangle},
        {"cube", "[-1/2, 1/2]^3", true, "", FedorovClass::Parallelepiped, &cube},
        {"hexagonal-prism", "[-1/2, 1/2] x hexagon", true, "", FedorovClass::HexagonalPrism, &hexagonal_prism},
        {"rhombic-dodecahedron", "zonotope of the four cube diagonals", true, "", FedorovClass::RhombicDodecahedron,
         &rhombic_dodecahedron},
        {"elongated-dodecahedron", "cube diagonals and (0,0,1)", true, "", FedorovClass::ElongatedDodecahedron,
         &elongated_dodecahedron},
        {"truncated-octahedron", "permutations of (0, +-1, +-2)", true, "", FedorovClass::TruncatedOctahedron,
         &truncated_octahedron},
        {"rhombic-icosahedron", "zonotope of e1, e2, e3, (1,1,1), (1,2,4)", false, "belt-length-8", std::nullopt,
         &rhombic_icosahedron},
    };
    return table;
}

const Entry* find(std::string_view name) {
    for (const auto& e : entries())
        if (e.name == name) return &e;
    return nullptr;
}

Polytope make(std::string_view name) {
    const Entry* e = find(name);
    if (!e) throw Error(ErrorCode::ParseError, "unknown catalog shape '" + std::string(name) + "'");
    return e->make();
}

}  // namespace spectile::catalog
