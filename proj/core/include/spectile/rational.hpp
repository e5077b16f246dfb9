#ifndef SPECTILE_RATIONAL_HPP
#define SPECTILE_RATIONAL_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "spectile/error.hpp"

namespace spectile {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p", "p/q", or a finite decimal such as "-1.25" or "3e-2" exactly.
Rational parse_rational(std::string_view text);

/// Always "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& q);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

/// Best rational approximation with denominator at most `max_den`
/// (continued fractions).
Rational snap_rational(double x, long long max_den);

Integer floor(const Rational& q);
Rational frac(const Rational& q);  // q - floor(q), in [0, 1)
Rational abs(const Rational& q);
int sign(const Rational& q);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/**
 * Exact vector with 1 to 3 rational coordinates.
 *
 * Points and displacement vectors share this type; the dimension travels with
 * the value and every binary operation checks it.
 */
class Vec {
public:
    static constexpr int kMaxDim = 3;

    Vec() = default;
    explicit Vec(int dim);
    Vec(std::initializer_list<Rational> coords);
    explicit Vec(const std::vector<Rational>& coords);

    static Vec unit(int dim, int axis);

    int dim() const { return dim_; }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(const Rational& s);
    Vec& operator/=(const Rational& s);

    bool is_zero() const;
    Rational norm2() const;

    std::array<double, kMaxDim> to_double() const;

    friend bool operator==(const Vec& a, const Vec& b);
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
    /// Lexicographic order; the canonical vertex order of every polytope.
    friend bool operator<(const Vec& a, const Vec& b);

private:
    std::array<Rational, kMaxDim> c_{};
    int dim_ = 0;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(Vec a, const Rational& s);
Vec operator*(const Rational& s, Vec a);
Vec operator/(Vec a, const Rational& s);

Rational dot(const Vec& a, const Vec& b);
Vec cross(const Vec& a, const Vec& b);

/// Scales to the primitive integer vector with the same direction.
Vec primitive_direction(const Vec& v);

std::ostream& operator<<(std::ostream& os, const Vec& v);

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept;
};

/// Square d x d rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int dim);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(int dim);
    /// Columns given as vectors.
    static Matrix from_columns(const std::vector<Vec>& cols);

    int dim() const { return dim_; }
    const Rational& operator()(int r, int c) const { return a_[idx(r, c)]; }
    Rational& operator()(int r, int c) { return a_[idx(r, c)]; }

    Vec column(int c) const;
    Vec row(int r) const;
    Matrix transpose() const;
    Rational determinant() const;
    /// Throws SingularMap when the determinant vanishes.
    Matrix inverse() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r * dim_ + c); }
    std::vector<Rational> a_;
    int dim_ = 0;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);

}  // namespace spectile

#endif  // SPECTILE_RATIONAL_HPP
