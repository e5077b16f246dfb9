#ifndef SPECTILE_LATTICE_HPP
#define SPECTILE_LATTICE_HPP

#include <vector>

#include "spectile/rational.hpp"

namespace spectile {

/**
 * Full-rank lattice in Q^d, d <= 3.
 *
 * The basis is stored in canonical form: with D the least common denominator
 * of the lattice, the columns of D * basis are the lower-triangular column
 * Hermite normal form of D * L.  Two lattices are equal iff their canonical
 * bases are.
 */
class Lattice {
public:
    /// Group generated by rational vectors.  Throws NotALattice when the
    /// generators have rank below the ambient dimension.
    static Lattice from_generators(const std::vector<Vec>& generators);
    static Lattice from_basis(const Matrix& basis);
    static Lattice integer(int dim);

    int dim() const { return basis_.dim(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vec> basis_vectors() const;
    Rational covolume() const { return covolume_; }

    /// Exact membership.
    bool contains(const Vec& x) const;
    /// Integer coordinates of x in the canonical basis (x must be a member).
    std::vector<Integer> coordinates(const Vec& x) const;

    /// Image A(L).
    Lattice transformed(const Matrix& a) const;

    /// All lattice points with |x|^2 <= radius_squared, in lexicographic order.
    std::vector<Vec> points_in_ball(const Rational& radius_squared) const;
    /// Nonzero lattice points with |x|^2 < radius_squared.
    std::vector<Vec> nonzero_points_strictly_inside(const Rational& radius_squared) const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

private:
    explicit Lattice(Matrix basis);

    Matrix basis_;
    Matrix inverse_;
    Rational covolume_;
};

/// Lower-triangular column Hermite normal form of an integer d x m generator
/// matrix (columns are generators).  Returns the d nonzero columns; throws
/// NotALattice when the rank is below d.
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> columns, int dim);

}  // namespace spectile

#endif  // SPECTILE_LATTICE_HPP
