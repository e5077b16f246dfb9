#ifndef SPECTILE_EXPORT_HPP
#define SPECTILE_EXPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectile/lattice.hpp"
#include "spectile/polytope.hpp"

namespace spectile {

struct TileCopy {
    Vec shift;
    /// Parity class of the lattice coordinates: sum_k (c_k mod 2) 2^k.
    int parity = 0;
};

/// The `copies` lattice points closest to the origin (ties broken
/// lexicographically), with their parity classes.
std::vector<TileCopy> tile_copies(const Lattice& l, std::size_t copies);

/// SVG of the polygon, or of its translates when a lattice is given.
/// Throws FormatDimensionMismatch unless d = 2.
std::string export_svg(const Polytope& p, const std::optional<Lattice>& l = std::nullopt, std::size_t copies = 1);

/// Wavefront OBJ, one group per translate with a parity material.
/// Throws FormatDimensionMismatch unless d = 3.
std::string export_obj(const Polytope& p, const std::optional<Lattice>& l = std::nullopt, std::size_t copies = 1);

}  // namespace spectile

#endif  // SPECTILE_EXPORT_HPP
