#ifndef SPECTILE_CATALOG_HPP
#define SPECTILE_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectile/polytope.hpp"
#include "spectile/tiling.hpp"

namespace spectile::catalog {

// Canonical coordinates.  Symmetric shapes are centred at the origin; the
// prism axis is the first coordinate.

Polytope interval();                 // [-1/2, 1/2]
Polytope square();                   // [-1/2, 1/2]^2
Polytope cube();                     // [-1/2, 1/2]^3
Polytope hexagon();                  // zonotope of (1,0), (0,1), (1,-1); area 3
Polytope triangle();                 // (0,0), (1,0), (0,1)
Polytope parallelepiped(const Matrix& a);  // A [-1/2, 1/2]^d
Polytope prism(const Polytope& base, const Rational& height);  // [-h/2, h/2] x base
Polytope hexagonal_prism();          // prism(hexagon, 1)
Polytope rhombic_dodecahedron();     // zonotope of the four cube diagonals; volume 16
Polytope elongated_dodecahedron();   // the four diagonals and e_3; volume 24
Polytope truncated_octahedron();     // permutations of (0, +-1, +-2); volume 32
Polytope rhombic_icosahedron();      // zonotope of e_1, e_2, e_3, (1,1,1), (1,2,4)
Polytope zonotope(const std::vector<Vec>& generators);

struct Entry {
    std::string name;
    std::string description;
    bool tiler = false;
    /// Documented first failing condition for non-tilers.
    std::string witness;
    std::optional<FedorovClass> fedorov;
    Polytope (*make)();
};

const std::vector<Entry>& entries();
const Entry* find(std::string_view name);
/// Throws ParseError for unknown names.
Polytope make(std::string_view name);

}  // namespace spectile::catalog

#endif  // SPECTILE_CATALOG_HPP
