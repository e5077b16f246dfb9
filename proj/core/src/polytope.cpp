#include "spectile/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace spectile {

std::size_t FaceLattice::count(int k, int dim, std::size_t vertex_count) const {
    if (k == 0) return vertex_count;
    if (k == dim - 1) return facets.size();
    if (k == 1) return edges.size();
    return 0;
}

AffineMap AffineMap::linear(Matrix m) {
    Vec zero(m.dim());
    return AffineMap{std::move(m), std::move(zero)};
}

int affine_dimension(const std::vector<Vec>& points) {
    if (points.empty()) return -1;
    const int d = points.front().dim();
    std::vector<Vec> rows;
    rows.reserve(points.size());
    for (std::size_t i = 1; i < points.size(); ++i) rows.push_back(points[i] - points[0]);
    int rank = 0;
    for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r][col] != 0) { piv = r; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
        const Vec& p = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / p[col];
            rows[r] -= p * f;
        }
        ++rank;
    }
    return rank;
}

namespace {

struct Plane {
    Vec normal;  // primitive integer
    Rational offset;
};

Plane make_plane(const Vec& normal, const Vec& through) {
    Vec n = primitive_direction(normal);
    Rational off = dot(n, through);
    return Plane{std::move(n), std::move(off)};
}

Rational cross2(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    return ax * by - ay * bx;
}

/// Strictly convex hull of planar points, counter-clockwise, as indices into `xy`.
std::vector<std::size_t> monotone_chain(const std::vector<std::pair<Rational, Rational>>& xy,
                                        std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return xy[a] < xy[b]; });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return xy[a] == xy[b]; }),
              idx.end());
    if (idx.size() < 3) return idx;
    auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
        return cross2(xy[a].first - xy[o].first, xy[a].second - xy[o].second, xy[b].first - xy[o].first,
                      xy[b].second - xy[o].second);
    };
    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], idx[i]) <= 0) --k;
        hull[k++] = idx[i];
    }
    for (std::size_t i = idx.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && turn(hull[k - 2], hull[k - 1], idx[i - 1]) <= 0) --k;
        hull[k++] = idx[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

/// Boundary cycle of coplanar 3D points, counter-clockwise seen from `normal`.
std::vector<std::size_t> polygon_cycle(const std::vector<Vec>& pts, const std::vector<std::size_t>& members,
                                       const Vec& normal) {
    int drop = 0;
    for (int k = 1; k < 3; ++k)
        if (abs(normal[k]) > abs(normal[drop])) drop = k;
    const int u = (drop + 1) % 3;
    const int v = (drop + 2) % 3;
    std::vector<std::pair<Rational, Rational>> xy(pts.size());
    for (std::size_t i : members) xy[i] = {pts[i][u], pts[i][v]};
    std::vector<std::size_t> cyc = monotone_chain(xy, members);
    if (normal[drop] < 0) std::reverse(cyc.begin(), cyc.end());
    return cyc;
}

Rational orient(const Vec& p, const Vec& q, const Vec& c, const Vec& r) { return dot(cross(q - p, c - p), r - p); }

/// Rotates a supporting plane about the line pq until it becomes a facet plane.
/// Points on `support` are excluded from the rotation candidates.
Plane wrap(const std::vector<Vec>& pts, const Vec& p, const Vec& q, const Plane& support) {
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (dot(support.normal, pts[i]) != support.offset) cand.push_back(i);
    if (cand.empty()) throw Error(ErrorCode::NotFullDimensional, "point set is planar");
    const Vec axis = q - p;
    for (int sgn : {1, -1}) {
        std::size_t c = cand.front();
        for (std::size_t r : cand)
            if (sgn * sign(orient(p, q, pts[c], pts[r])) > 0) c = r;
        Vec n = cross(axis, pts[c] - p);
        if (sgn < 0) n = -n;
        bool ok = true;
        for (const Vec& x : pts)
            if (dot(n, x - p) > 0) { ok = false; break; }
        if (ok) return make_plane(n, p);
    }
    throw Error(ErrorCode::PreconditionFailed, "hull wrapping found no supporting plane");
}

struct RawFacet {
    Plane plane;
    std::vector<std::size_t> cycle;  // indices into the input points
};

std::vector<RawFacet> hull3(const std::vector<Vec>& pts) {
    auto contact_of = [&](const Plane& pl) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(pl.normal, pts[i]) == pl.offset) c.push_back(i);
        return c;
    };
    auto points_of = [&](const std::vector<std::size_t>& idx) {
        std::vector<Vec> out;
        for (std::size_t i : idx) out.push_back(pts[i]);
        return out;
    };

    // Initial facet: start from the face minimising x and wrap until 2-dimensional.
    const Vec a = *std::min_element(pts.begin(), pts.end());
    Plane plane = make_plane(Vec{-1, 0, 0}, a);
    for (int guard = 0;; ++guard) {
        if (guard > 3) throw Error(ErrorCode::PreconditionFailed, "hull initialisation did not converge");
        auto contact = contact_of(plane);
        auto cpts = points_of(contact);
        int dim = affine_dimension(cpts);
        if (dim == 2) break;
        if (dim == 1) {
            auto [lo, hi] = std::minmax_element(cpts.begin(), cpts.end());
            plane = wrap(pts, *lo, *hi, plane);
        } else {
            Vec w(3);
            for (int k = 0; k < 3 && w.is_zero(); ++k) w = cross(plane.normal, Vec::unit(3, k));
            plane = wrap(pts, cpts.front(), cpts.front() + w, plane);
        }
    }

    std::vector<RawFacet> facets;
    std::map<Vec, std::size_t> by_normal;
    std::map<std::pair<std::size_t, std::size_t>, int> edge_uses;
    std::deque<std::size_t> queue;

    auto add_facet = [&](const Plane& pl) -> std::size_t {
        if (auto it = by_normal.find(pl.normal); it != by_normal.end()) return it->second;
        auto contact = contact_of(pl);
        RawFacet f{pl, polygon_cycle(pts, contact, pl.normal)};
        for (std::size_t i = 0; i < f.cycle.size(); ++i) {
            std::size_t u = f.cycle[i], v = f.cycle[(i + 1) % f.cycle.size()];
            ++edge_uses[{std::min(u, v), std::max(u, v)}];
        }
        facets.push_back(std::move(f));
        by_normal.emplace(pl.normal, facets.size() - 1);
        queue.push_back(facets.size() - 1);
        return facets.size() - 1;
    };

    add_facet(plane);
    while (!queue.empty()) {
        std::size_t fi = queue.front();
        queue.pop_front();
        const std::vector<std::size_t> cycle = facets[fi].cycle;
        const Plane pl = facets[fi].plane;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            std::size_t u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            if (edge_uses[{std::min(u, v), std::max(u, v)}] >= 2) continue;
            add_facet(wrap(pts, pts[u], pts[v], pl));
        }
    }
    return facets;
}

std::shared_ptr<FaceLattice> build_lattice_3d(const std::vector<Vec>& pts, std::vector<RawFacet> raw,
                                              std::vector<Vec>& vertices_out) {
    std::set<std::size_t> used;
    for (const auto& f : raw) used.insert(f.cycle.begin(), f.cycle.end());
    std::vector<std::size_t> order(used.begin(), used.end());
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pts[x] < pts[y]; });
    std::map<std::size_t, std::size_t> remap;
    vertices_out.clear();
    for (std::size_t i = 0; i < order.size(); ++i) {
        remap[order[i]] = i;
        vertices_out.push_back(pts[order[i]]);
    }
    std::sort(raw.begin(), raw.end(), [](const RawFacet& x, const RawFacet& y) { return x.plane.normal < y.plane.normal; });

    auto lat = std::make_shared<FaceLattice>();
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> edge_facets;
    for (std::size_t fi = 0; fi < raw.size(); ++fi) {
        Facet f;
        f.normal = raw[fi].plane.normal;
        f.offset = raw[fi].plane.offset;
        for (std::size_t i : raw[fi].cycle) f.vertices.push_back(remap.at(i));
        std::rotate(f.vertices.begin(), std::min_element(f.vertices.begin(), f.vertices.end()), f.vertices.end());
        for (std::size_t i = 0; i < f.vertices.size(); ++i) {
            std::size_t u = f.vertices[i], v = f.vertices[(i + 1) % f.vertices.size()];
            edge_facets[{std::min(u, v), std::max(u, v)}].push_back(fi);
        }
        lat->facets.push_back(std::move(f));
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
    for (auto& [key, fs] : edge_facets) {
        edge_index[key] = lat->edges.size();
        lat->edges.push_back(Edge{key.first, key.second, fs});
    }
    for (auto& f : lat->facets)
        for (std::size_t i = 0; i < f.vertices.size(); ++i) {
            std::size_t u = f.vertices[i], v = f.vertices[(i + 1) % f.vertices.size()];
            f.edges.push_back(edge_index.at({std::min(u, v), std::max(u, v)}));
        }
    return lat;
}

std::shared_ptr<FaceLattice> build_lattice_2d(const std::vector<Vec>& pts, std::vector<Vec>& vertices_out) {
    std::vector<std::pair<Rational, Rational>> xy;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        xy.emplace_back(pts[i][0], pts[i][1]);
        idx.push_back(i);
    }
    std::vector<std::size_t> cyc = monotone_chain(xy, idx);
    std::vector<std::size_t> order = cyc;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pts[x] < pts[y]; });
    std::map<std::size_t, std::size_t> remap;
    vertices_out.clear();
    for (std::size_t i = 0; i < order.size(); ++i) {
        remap[order[i]] = i;
        vertices_out.push_back(pts[order[i]]);
    }
    std::vector<Facet> facets;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Vec& p = pts[cyc[i]];
        const Vec& q = pts[cyc[(i + 1) % cyc.size()]];
        Vec d = q - p;
        Vec n = primitive_direction(Vec{d[1], -d[0]});
        Facet f;
        std::size_t a = remap.at(cyc[i]), b = remap.at(cyc[(i + 1) % cyc.size()]);
        f.vertices = {std::min(a, b), std::max(a, b)};
        f.offset = dot(n, p);
        f.normal = std::move(n);
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(), [](const Facet& x, const Facet& y) { return x.normal < y.normal; });
    auto lat = std::make_shared<FaceLattice>();
    for (std::size_t i = 0; i < facets.size(); ++i)
        lat->edges.push_back(Edge{facets[i].vertices[0], facets[i].vertices[1], {i}});
    lat->facets = std::move(facets);
    return lat;
}

std::shared_ptr<FaceLattice> build_lattice_1d(const std::vector<Vec>& pts, std::vector<Vec>& vertices_out) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    vertices_out = {*lo, *hi};
    auto lat = std::make_shared<FaceLattice>();
    lat->facets.push_back(Facet{{0}, {}, Vec{-1}, -(*lo)[0]});
    lat->facets.push_back(Facet{{1}, {}, Vec{1}, (*hi)[0]});
    return lat;
}

}  // namespace

Polytope Polytope::from_vertices(std::vector<Vec> points) {
    if (points.empty()) throw Error(ErrorCode::NotFullDimensional, "no points");
    const int d = points.front().dim();
    if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "dimension " + std::to_string(d));
    for (const auto& p : points)
        if (p.dim() != d) throw Error(ErrorCode::DimensionMismatch, "points of mixed dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (static_cast<int>(points.size()) < d + 1 || affine_dimension(points) < d)
        throw Error(ErrorCode::NotFullDimensional, "affine hull has dimension < " + std::to_string(d));

    std::vector<Vec> verts;
    std::shared_ptr<FaceLattice> lat;
    switch (d) {
        case 1: lat = build_lattice_1d(points, verts); break;
        case 2: lat = build_lattice_2d(points, verts); break;
        default: lat = build_lattice_3d(points, hull3(points), verts); break;
    }
    return Polytope(d, std::move(verts), std::move(lat));
}

Polytope Polytope::from_halfspaces(const std::vector<Halfspace>& halfspaces) {
    if (halfspaces.empty()) throw Error(ErrorCode::Unbounded, "no halfspaces");
    const int d = halfspaces.front().normal.dim();
    if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "dimension " + std::to_string(d));
    std::vector<Halfspace> hs;
    for (const auto& h : halfspaces) {
        if (h.normal.dim() != d) throw Error(ErrorCode::DimensionMismatch, "halfspaces of mixed dimension");
        if (h.normal.is_zero()) {
            if (h.offset < 0) throw Error(ErrorCode::Empty, "halfspace 0 <= negative");
            continue;
        }
        hs.push_back(h);
    }

    // Bounded iff the normals positively span R^d, i.e. the origin is interior
    // to their convex hull.
    {
        std::vector<Vec> normals;
        for (const auto& h : hs) normals.push_back(h.normal);
        std::sort(normals.begin(), normals.end());
        normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
        if (static_cast<int>(normals.size()) < d + 1 || affine_dimension(normals) < d)
            throw Error(ErrorCode::Unbounded, "normals do not positively span space");
        Polytope cone = from_vertices(normals);
        for (const auto& f : cone.facets())
            if (f.offset <= 0) throw Error(ErrorCode::Unbounded, "normals do not positively span space");
    }

    // Vertex enumeration over all d-subsets of constraints.
    std::vector<Vec> verts;
    const std::size_t m = hs.size();
    std::vector<std::size_t> pick(static_cast<std::size_t>(d));
    auto feasible = [&](const Vec& x) {
        for (const auto& h : hs)
            if (dot(h.normal, x) > h.offset) return false;
        return true;
    };
    auto try_subset = [&] {
        Matrix a(d);
        Vec b(d);
        for (int r = 0; r < d; ++r) {
            const Halfspace& h = hs[pick[static_cast<std::size_t>(r)]];
            for (int c = 0; c < d; ++c) a(r, c) = h.normal[c];
            b[r] = h.offset;
        }
        if (a.determinant() == 0) return;
        Vec x = a.inverse() * b;
        if (feasible(x)) verts.push_back(std::move(x));
    };
    // lexicographic d-combinations
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) pick[i] = i;
    if (m >= static_cast<std::size_t>(d)) {
        while (true) {
            try_subset();
            int k = d - 1;
            while (k >= 0 && pick[static_cast<std::size_t>(k)] == m - static_cast<std::size_t>(d) + static_cast<std::size_t>(k)) --k;
            if (k < 0) break;
            ++pick[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < d; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    if (verts.empty()) throw Error(ErrorCode::Empty, "halfspace intersection is empty");
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (affine_dimension(verts) < d) throw Error(ErrorCode::NotFullDimensional, "halfspace intersection is flat");
    return from_vertices(std::move(verts));
}

Polytope Polytope::zonotope(const std::vector<Vec>& generators) {
    if (generators.empty()) throw Error(ErrorCode::NotFullDimensional, "no generators");
    const int d = generators.front().dim();
    std::vector<Vec> gens;
    for (const auto& g : generators) {
        if (g.dim() != d) throw Error(ErrorCode::DimensionMismatch, "generators of mixed dimension");
        if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.size() > 16) throw Error(ErrorCode::PreconditionFailed, "too many generators");
    std::vector<Vec> pts{Vec(d)};
    for (const auto& g : gens) {
        Vec half = g / Rational(2);
        std::vector<Vec> next;
        next.reserve(pts.size() * 2);
        for (const auto& p : pts) {
            next.push_back(p + half);
            next.push_back(p - half);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        // Keep only the current hull's vertices once the sum is full-dimensional.
        if (static_cast<int>(next.size()) > d && affine_dimension(next) == d && next.size() > 16)
            next = from_vertices(std::move(next)).vertices();
        pts = std::move(next);
    }
    return from_vertices(std::move(pts));
}

std::vector<Halfspace> Polytope::halfspaces() const {
    std::vector<Halfspace> out;
    for (const auto& f : facets()) out.push_back(Halfspace{f.normal, f.offset});
    return out;
}

Rational Polytope::volume() const {
    const Vec& p = vertices_.front();
    if (dim_ == 1) return vertices_[1][0] - vertices_[0][0];
    Rational total = 0;
    for (const auto& f : facets()) {
        if (std::find(f.vertices.begin(), f.vertices.end(), 0) != f.vertices.end()) continue;
        if (dim_ == 2) {
            Vec a = vertices_[f.vertices[0]] - p, b = vertices_[f.vertices[1]] - p;
            total += abs(a[0] * b[1] - a[1] * b[0]);
        } else {
            const Vec& c0 = vertices_[f.vertices[0]];
            for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i)
                total += abs(dot(cross(c0 - p, vertices_[f.vertices[i]] - p), vertices_[f.vertices[i + 1]] - p));
        }
    }
    return dim_ == 2 ? total / 2 : total / 6;
}

std::vector<std::size_t> Polytope::face_vertices(FaceId face) const {
    if (face.dim == dim_) {
        std::vector<std::size_t> all(vertices_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }
    if (face.dim == dim_ - 1) return facets().at(face.index).vertices;
    if (face.dim == 1) {
        const Edge& e = edges().at(face.index);
        return {e.a, e.b};
    }
    if (face.dim == 0) return {face.index};
    throw Error(ErrorCode::PreconditionFailed, "no face of dimension " + std::to_string(face.dim));
}

Rational Polytope::face_measure_squared(FaceId face) const {
    if (face.dim <= 0) throw Error(ErrorCode::ZeroDimensionalFace, "vertices have no measure");
    if (face.dim == dim_) {
        Rational v = volume();
        return v * v;
    }
    if (face.dim == 1) {
        const auto vs = face_vertices(face);
        return (vertices_[vs[1]] - vertices_[vs[0]]).norm2();
    }
    if (face.dim == 2 && dim_ == 3) {
        // Vector area of a planar polygon: the triangle contributions are
        // parallel, so summing before squaring is exact.
        const Facet& f = facets().at(face.index);
        Vec area(3);
        for (std::size_t i = 0; i < f.vertices.size(); ++i)
            area += cross(vertices_[f.vertices[i]], vertices_[f.vertices[(i + 1) % f.vertices.size()]]);
        return area.norm2() / 4;
    }
    throw Error(ErrorCode::PreconditionFailed, "no face of dimension " + std::to_string(face.dim));
}

std::vector<Rational> Polytope::facet_measures_squared() const {
    std::vector<Rational> out;
    if (dim_ == 1) {
        out.assign(2, Rational(1));
        return out;
    }
    for (std::size_t i = 0; i < facets().size(); ++i) out.push_back(face_measure_squared({dim_ - 1, i}));
    return out;
}

Vec Polytope::vertex_centroid() const {
    Vec c(dim_);
    for (const auto& v : vertices_) c += v;
    return c / Rational(static_cast<long>(vertices_.size()));
}

Vec Polytope::face_centroid(FaceId face) const {
    const auto vs = face_vertices(face);
    Vec c(dim_);
    for (std::size_t i : vs) c += vertices_[i];
    return c / Rational(static_cast<long>(vs.size()));
}

Rational Polytope::diameter_squared() const {
    Rational best = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j) best = std::max(best, (vertices_[i] - vertices_[j]).norm2());
    return best;
}

bool Polytope::contains(const Vec& x) const {
    for (const auto& f : facets())
        if (dot(f.normal, x) > f.offset) return false;
    return true;
}

Polytope Polytope::apply(const AffineMap& map) const {
    if (map.matrix.dim() != dim_ || map.shift.dim() != dim_)
        throw Error(ErrorCode::DimensionMismatch, "affine map dimension");
    if (map.matrix.determinant() == 0) throw Error(ErrorCode::SingularMap, "affine map is singular");
    std::vector<Vec> image;
    image.reserve(vertices_.size());
    for (const auto& v : vertices_) image.push_back(map(v));
    return from_vertices(std::move(image));
}

Polytope Polytope::translate(const Vec& shift) const { return apply(AffineMap{Matrix::identity(dim_), shift}); }

// ---------------------------------------------------------------------------
// Clipping

namespace {

int normal_rank(const std::vector<Halfspace>& hs, const std::vector<std::size_t>& ids, int d) {
    std::vector<Vec> ns;
    for (std::size_t i : ids) ns.push_back(hs[i].normal);
    ns.push_back(Vec(d));  // origin, so the affine rank equals the linear rank
    std::rotate(ns.rbegin(), ns.rbegin() + 1, ns.rend());
    return affine_dimension(ns);
}

}  // namespace

std::optional<Polytope> clip(const Polytope& p, const std::vector<Halfspace>& extra) {
    const int d = p.dim();
    std::vector<Halfspace> hs = p.halfspaces();
    struct Node {
        Vec x;
        std::vector<std::size_t> tight;  // sorted
    };
    std::vector<Node> nodes;
    for (const auto& v : p.vertices()) {
        Node n{v, {}};
        for (std::size_t i = 0; i < hs.size(); ++i)
            if (dot(hs[i].normal, v) == hs[i].offset) n.tight.push_back(i);
        nodes.push_back(std::move(n));
    }
    for (const auto& h : extra) {
        if (h.normal.dim() != d) throw Error(ErrorCode::DimensionMismatch, "clip halfspace dimension");
        const std::size_t hi = hs.size();
        hs.push_back(h);
        std::vector<Rational> val;
        bool any_in = false, any_out = false;
        for (const auto& n : nodes) {
            val.push_back(dot(h.normal, n.x) - h.offset);
            any_in = any_in || val.back() < 0;
            any_out = any_out || val.back() > 0;
        }
        if (!any_in) return std::nullopt;
        std::vector<Node> next;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (val[i] > 0) continue;
            Node n = nodes[i];
            if (val[i] == 0) n.tight.push_back(hi);
            next.push_back(std::move(n));
        }
        if (any_out) {
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                if (val[i] >= 0) continue;
                for (std::size_t j = 0; j < nodes.size(); ++j) {
                    if (val[j] <= 0) continue;
                    std::vector<std::size_t> common;
                    std::set_intersection(nodes[i].tight.begin(), nodes[i].tight.end(), nodes[j].tight.begin(),
                                          nodes[j].tight.end(), std::back_inserter(common));
                    if (normal_rank(hs, common, d) != d - 1) continue;
                    Rational t = val[i] / (val[i] - val[j]);
                    Node n{nodes[i].x + (nodes[j].x - nodes[i].x) * t, common};
                    n.tight.push_back(hi);
                    next.push_back(std::move(n));
                }
            }
        }
        nodes = std::move(next);
    }
    std::vector<Vec> pts;
    for (const auto& n : nodes) pts.push_back(n.x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (affine_dimension(pts) < d) return std::nullopt;
    return Polytope::from_vertices(std::move(pts));
}

Rational intersection_volume(const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "intersection of different dimensions");
    auto c = clip(a, b.halfspaces());
    return c ? c->volume() : Rational(0);
}

}  // namespace spectile
