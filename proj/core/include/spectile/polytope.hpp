#ifndef SPECTILE_POLYTOPE_HPP
#define SPECTILE_POLYTOPE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "spectile/rational.hpp"

namespace spectile {

/// Closed halfspace {x : <normal, x> <= offset}.
struct Halfspace {
    Vec normal;
    Rational offset;
};

/// A face addressed by its dimension and its index in the per-dimension list.
struct FaceId {
    int dim = 0;
    std::size_t index = 0;

    friend bool operator==(const FaceId&, const FaceId&) = default;
};

struct Facet {
    /// d = 3: boundary cycle, counter-clockwise seen from outside.
    /// d = 2: the two endpoints.  d = 1: the single vertex.
    std::vector<std::size_t> vertices;
    /// d = 3 only: edge ids in the same cyclic order as `vertices`
    /// (edge k joins vertices[k] and vertices[k+1]).
    std::vector<std::size_t> edges;
    /// Primitive integer outward normal; <normal, v> <= offset on the body.
    Vec normal;
    Rational offset;
};

struct Edge {
    std::size_t a = 0;  // a < b
    std::size_t b = 0;
    /// The facets containing this edge (two in d = 3, the edge itself in d = 2).
    std::vector<std::size_t> facets;
};

/**
 * Face lattice of a full-dimensional convex polytope in dimension 1 to 3.
 *
 * Faces are vertex-index sets into the polytope's canonical (lexicographically
 * sorted) vertex list.  In the plane the edges are the facets, and
 * `edges[i]` is `facets[i]`.
 */
struct FaceLattice {
    std::vector<Facet> facets;
    std::vector<Edge> edges;

    /// Number of k-faces for 0 <= k < d.
    std::size_t count(int k, int dim, std::size_t vertex_count) const;
};

struct AffineMap {
    Matrix matrix;
    Vec shift;

    static AffineMap linear(Matrix m);
    Vec operator()(const Vec& x) const { return matrix * x + shift; }
};

/**
 * Exact convex polytope with rational vertices.
 *
 * Immutable after construction: the vertex list holds the extreme points only,
 * sorted lexicographically, and the face lattice is built eagerly.
 */
class Polytope {
public:
    static Polytope from_vertices(std::vector<Vec> points);
    static Polytope from_halfspaces(const std::vector<Halfspace>& halfspaces);
    /// Minkowski sum of the centred segments [-g/2, g/2].
    static Polytope zonotope(const std::vector<Vec>& generators);

    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const Vec& vertex(std::size_t i) const { return vertices_[i]; }
    const FaceLattice& faces() const { return *faces_; }
    const std::vector<Facet>& facets() const { return faces_->facets; }
    const std::vector<Edge>& edges() const { return faces_->edges; }

    std::vector<Halfspace> halfspaces() const;

    /// Exact d-volume.
    Rational volume() const;
    /// Squared k-volume of a face with k >= 1; for k = d this is volume()^2.
    Rational face_measure_squared(FaceId face) const;
    /// Total squared-measure list of the facets, in facet order.
    std::vector<Rational> facet_measures_squared() const;

    Vec vertex_centroid() const;
    /// Centroid of the vertex set of one face.
    Vec face_centroid(FaceId face) const;
    std::vector<std::size_t> face_vertices(FaceId face) const;
    Rational diameter_squared() const;

    /// Closed-set membership.
    bool contains(const Vec& x) const;

    Polytope apply(const AffineMap& map) const;
    Polytope translate(const Vec& shift) const;

    friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }

private:
    Polytope(int dim, std::vector<Vec> vertices, std::shared_ptr<const FaceLattice> faces)
        : dim_(dim), vertices_(std::move(vertices)), faces_(std::move(faces)) {}

    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::shared_ptr<const FaceLattice> faces_;
};

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(const std::vector<Vec>& points);

/**
 * Intersection of a polytope with a list of halfspaces by successive exact
 * clipping.  Returns nothing when the result is empty or not full-dimensional.
 */
std::optional<Polytope> clip(const Polytope& p, const std::vector<Halfspace>& halfspaces);

/// Exact volume of the intersection of two polytopes of equal dimension.
Rational intersection_volume(const Polytope& a, const Polytope& b);

}  // namespace spectile

#endif  // SPECTILE_POLYTOPE_HPP
