#include "spectile/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace spectile {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

void axpy_column(std::vector<Integer>& dst, const Integer& q, const std::vector<Integer>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

}  // namespace

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> cols, int dim) {
    const std::size_t d = static_cast<std::size_t>(dim);
    for (std::size_t row = 0; row < d; ++row) {
        // Euclid across the columns row..m-1 until a single nonzero entry remains.
        while (true) {
            std::size_t best = cols.size();
            for (std::size_t j = row; j < cols.size(); ++j) {
                if (cols[j][row] == 0) continue;
                if (best == cols.size() || boost::multiprecision::abs(cols[j][row]) < boost::multiprecision::abs(cols[best][row]))
                    best = j;
            }
            if (best == cols.size()) throw Error(ErrorCode::NotALattice, "generators do not span full rank");
            std::swap(cols[row], cols[best]);
            bool done = true;
            for (std::size_t j = row + 1; j < cols.size(); ++j) {
                if (cols[j][row] == 0) continue;
                axpy_column(cols[j], floor_div(cols[j][row], cols[row][row]), cols[row]);
                if (cols[j][row] != 0) done = false;
            }
            if (done) break;
        }
        if (cols[row][row] < 0)
            for (auto& x : cols[row]) x = -x;
        for (std::size_t j = 0; j < row; ++j) axpy_column(cols[j], floor_div(cols[j][row], cols[row][row]), cols[row]);
    }
    cols.resize(d);
    return cols;
}

Lattice::Lattice(Matrix basis) : basis_(std::move(basis)) {
    Rational det = basis_.determinant();
    if (det == 0) throw Error(ErrorCode::NotALattice, "singular basis");
    covolume_ = abs(det);
    inverse_ = basis_.inverse();
}

Lattice Lattice::from_generators(const std::vector<Vec>& generators) {
    if (generators.empty()) throw Error(ErrorCode::NotALattice, "no generators");
    const int d = generators.front().dim();
    Integer den = 1;
    for (const auto& g : generators) {
        if (g.dim() != d) throw Error(ErrorCode::DimensionMismatch, "generators of mixed dimension");
        for (int i = 0; i < d; ++i) den = lcm(den, denominator(g[i]));
    }
    std::vector<std::vector<Integer>> cols;
    for (const auto& g : generators) {
        std::vector<Integer> c(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = numerator(g[i] * Rational(den));
        cols.push_back(std::move(c));
    }
    auto hnf = hermite_normal_form(std::move(cols), d);
    Matrix b(d);
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) b(r, c) = Rational(hnf[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)], den);
    return Lattice(std::move(b));
}

Lattice Lattice::from_basis(const Matrix& basis) {
    std::vector<Vec> cols;
    for (int c = 0; c < basis.dim(); ++c) cols.push_back(basis.column(c));
    if (basis.determinant() == 0) throw Error(ErrorCode::NotALattice, "singular basis");
    return from_generators(cols);
}

Lattice Lattice::integer(int dim) { return from_basis(Matrix::identity(dim)); }

std::vector<Vec> Lattice::basis_vectors() const {
    std::vector<Vec> out;
    for (int c = 0; c < dim(); ++c) out.push_back(basis_.column(c));
    return out;
}

bool Lattice::contains(const Vec& x) const {
    Vec c = inverse_ * x;
    for (int i = 0; i < dim(); ++i)
        if (denominator(c[i]) != 1) return false;
    return true;
}

std::vector<Integer> Lattice::coordinates(const Vec& x) const {
    Vec c = inverse_ * x;
    std::vector<Integer> out;
    for (int i = 0; i < dim(); ++i) {
        if (denominator(c[i]) != 1) throw Error(ErrorCode::PreconditionFailed, "point is not in the lattice");
        out.push_back(numerator(c[i]));
    }
    return out;
}

Lattice Lattice::transformed(const Matrix& a) const { return from_basis(a * basis_); }

std::vector<Vec> Lattice::points_in_ball(const Rational& radius_squared) const {
    const int d = dim();
    const double r = std::sqrt(std::max(0.0, radius_squared.convert_to<double>()));
    // |c_i| = |<row_i(B^-1), x>| <= |row_i(B^-1)| * R
    std::vector<long long> bound(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        double n = std::sqrt(inverse_.row(i).norm2().convert_to<double>());
        bound[static_cast<std::size_t>(i)] = static_cast<long long>(std::floor(n * r * (1.0 + 1e-12))) + 1;
    }
    std::vector<Vec> out;
    std::vector<long long> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = -bound[static_cast<std::size_t>(i)];
    const auto cols = basis_vectors();
    while (true) {
        Vec x(d);
        for (int i = 0; i < d; ++i)
            if (c[static_cast<std::size_t>(i)] != 0) x += cols[static_cast<std::size_t>(i)] * Rational(c[static_cast<std::size_t>(i)]);
        if (x.norm2() <= radius_squared) out.push_back(std::move(x));
        int k = 0;
        while (k < d && ++c[static_cast<std::size_t>(k)] > bound[static_cast<std::size_t>(k)]) {
            c[static_cast<std::size_t>(k)] = -bound[static_cast<std::size_t>(k)];
            ++k;
        }
        if (k == d) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> Lattice::nonzero_points_strictly_inside(const Rational& radius_squared) const {
    std::vector<Vec> out;
    for (auto& x : points_in_ball(radius_squared))
        if (!x.is_zero() && x.norm2() < radius_squared) out.push_back(std::move(x));
    return out;
}

}  // namespace spectile
