#ifndef SPECTILE_IO_HPP
#define SPECTILE_IO_HPP

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectile/lattice.hpp"
#include "spectile/polytope.hpp"
#include "spectile/spectrum.hpp"

namespace spectile::io {

using Json = nlohmann::json;

/// Rationals serialise as "p/q" strings; JSON numbers are accepted on input
/// and read exactly from their decimal text.
Json to_json(const Rational& q);
Json to_json(const Vec& v);
Json to_json(const Lattice& l);  // {"basis": columns, "covolume"}
Rational rational_from_json(const Json& j, const std::string& field);
Vec vec_from_json(const Json& j, const std::string& field);

/**
 * Polytope documents:
 *   {"format": "vertices",   "vertices":   [["1/2", "0"], ...]}
 *   {"format": "halfspaces", "halfspaces": [{"normal": [...], "offset": "1/2"}, ...]}
 *   {"format": "zonotope",   "generators": [[...], ...]}
 * Errors are ParseError with the offending field path.
 */
Polytope polytope_from_json(const Json& j);
Json polytope_to_json(const Polytope& p);

/// Parses JSON text; syntax errors report line and column.
Json parse_json(std::string_view text);

/// "catalog:<name>", a path to a JSON file, or an inline JSON document.
Polytope load_polytope(const std::string& source);

/// "1/3,1/5,0" or a JSON array.
Vec parse_frequency(std::string_view text);

/// One point per line, coordinates as decimals or "p/q"; an optional header
/// line of non-numeric names is skipped.  Decimal input marks the patch inexact.
SpectrumPatch read_patch_csv(std::istream& in, double window_radius = 0);
void write_patch_csv(std::ostream& out, const SpectrumPatch& s);

std::string read_file(const std::string& path);

}  // namespace spectile::io

#endif  // SPECTILE_IO_HPP
