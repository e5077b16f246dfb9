#include "spectile/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace spectile {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotFullDimensional: return "NotFullDimensional";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::Unbounded: return "Unbounded";
        case ErrorCode::Empty: return "Empty";
        case ErrorCode::SingularMap: return "SingularMap";
        case ErrorCode::ZeroDimensionalFace: return "ZeroDimensionalFace";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NotALattice: return "NotALattice";
        case ErrorCode::NotATiler: return "NotATiler";
        case ErrorCode::ZeroFrequency: return "ZeroFrequency";
        case ErrorCode::NotStandardPosition: return "NotStandardPosition";
        case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorCode::WindowTooSmall: return "WindowTooSmall";
        case ErrorCode::ThetaOutOfRange: return "ThetaOutOfRange";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::FormatDimensionMismatch: return "FormatDimensionMismatch";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Base-10 digits to an integer; leading zeros would otherwise select octal.
Integer from_digits(std::string_view s) {
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    return Integer{std::string(s)};
}

Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "'");
    Integer v = from_digits(s);
    return neg ? Integer(-v) : v;
}

Integer pow10(long e) {
    Integer r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

Rational parse_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es[0] == '-' || es[0] == '+')) {
            eneg = es[0] == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6)
            throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(s) + "'");
        exponent = std::stol(std::string(es));
        if (eneg) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw Error(ErrorCode::ParseError, "bad decimal '" + std::string(s) + "'");
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "'");
        digits = std::string(s);
    }
    Rational v{from_digits(digits)};
    if (exponent > 0) v *= Rational(pow10(exponent));
    if (exponent < 0) v /= Rational(pow10(-exponent));
    return neg ? Rational(-v) : v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer p = parse_integer(trim(text.substr(0, slash)));
        Integer q = parse_integer(trim(text.substr(slash + 1)));
        if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        return Rational(p, q);
    }
    if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
    return Rational(parse_integer(text));
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw Error(ErrorCode::ParseError, "non-finite value");
    int exp = 0;
    double m = std::frexp(x, &exp);
    // 53 bits of mantissa fit exactly into a long long after scaling.
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r{Integer(mant)};
    Integer two_pow = 1;
    for (int i = 0; i < std::abs(exp); ++i) two_pow *= 2;
    if (exp >= 0) r *= Rational(two_pow);
    else r /= Rational(two_pow);
    return r;
}

Rational snap_rational(double x, long long max_den) {
    if (!std::isfinite(x)) throw Error(ErrorCode::ParseError, "non-finite value");
    // Continued-fraction convergents of the exact value of x.
    Rational exact = rational_from_double(x);
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Rational rem = exact;
    Rational best = Rational(floor(exact));
    for (int iter = 0; iter < 64; ++iter) {
        Integer a = floor(rem);
        Integer h2 = a * h1 + h0;
        Integer k2 = a * k1 + k0;
        if (k2 > max_den) break;
        best = Rational(h2, k2);
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        Rational f = rem - Rational(a);
        if (f == 0) break;
        rem = 1 / f;
    }
    return best;
}

Integer floor(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer r = n / d;  // truncates toward zero
    if (n < 0 && r * d != n) r -= 1;
    return r;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    Integer g = gcd(a, b);
    Integer r = a / g * b;
    return r < 0 ? Integer(-r) : r;
}

// ---------------------------------------------------------------------------
// Vec

Vec::Vec(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim) throw Error(ErrorCode::UnsupportedDimension, "dimension " + std::to_string(dim));
}

Vec::Vec(std::initializer_list<Rational> coords) : Vec(static_cast<int>(coords.size())) {
    int i = 0;
    for (const auto& c : coords) c_[static_cast<std::size_t>(i++)] = c;
}

Vec::Vec(const std::vector<Rational>& coords) : Vec(static_cast<int>(coords.size())) {
    for (int i = 0; i < dim_; ++i) (*this)[i] = coords[static_cast<std::size_t>(i)];
}

Vec Vec::unit(int dim, int axis) {
    Vec v(dim);
    v[axis] = 1;
    return v;
}

static void check_dims(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim())
        throw Error(ErrorCode::DimensionMismatch,
                    "vectors of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}

Vec& Vec::operator+=(const Vec& o) {
    check_dims(*this, o);
    for (int i = 0; i < dim_; ++i) (*this)[i] += o[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    check_dims(*this, o);
    for (int i = 0; i < dim_; ++i) (*this)[i] -= o[i];
    return *this;
}

Vec& Vec::operator*=(const Rational& s) {
    for (int i = 0; i < dim_; ++i) (*this)[i] *= s;
    return *this;
}

Vec& Vec::operator/=(const Rational& s) {
    for (int i = 0; i < dim_; ++i) (*this)[i] /= s;
    return *this;
}

bool Vec::is_zero() const {
    for (int i = 0; i < dim_; ++i)
        if ((*this)[i] != 0) return false;
    return true;
}

Rational Vec::norm2() const { return dot(*this, *this); }

std::array<double, Vec::kMaxDim> Vec::to_double() const {
    std::array<double, kMaxDim> out{};
    for (int i = 0; i < dim_; ++i) out[static_cast<std::size_t>(i)] = (*this)[i].convert_to<double>();
    return out;
}

bool operator==(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool operator<(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    for (int i = 0; i < a.dim_; ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator-(Vec a) {
    for (int i = 0; i < a.dim(); ++i) a[i] = -a[i];
    return a;
}
Vec operator*(Vec a, const Rational& s) { return a *= s; }
Vec operator*(const Rational& s, Vec a) { return a *= s; }
Vec operator/(Vec a, const Rational& s) { return a /= s; }

Rational dot(const Vec& a, const Vec& b) {
    check_dims(a, b);
    Rational s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Vec cross(const Vec& a, const Vec& b) {
    if (a.dim() != 3 || b.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "cross product needs 3-vectors");
    return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec primitive_direction(const Vec& v) {
    if (v.is_zero()) return v;
    Integer den = 1;
    for (int i = 0; i < v.dim(); ++i) den = lcm(den, denominator(v[i]));
    Integer g = 0;
    std::array<Integer, Vec::kMaxDim> ints;
    for (int i = 0; i < v.dim(); ++i) {
        Rational s = v[i] * Rational(den);
        ints[static_cast<std::size_t>(i)] = numerator(s);
        g = gcd(g, numerator(s));
    }
    if (g < 0) g = -g;
    Vec out(v.dim());
    for (int i = 0; i < v.dim(); ++i) out[i] = Rational(ints[static_cast<std::size_t>(i)] / g);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << '(';
    for (int i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << to_string(v[i]);
    return os << ')';
}

std::size_t VecHash::operator()(const Vec& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.dim());
    for (int i = 0; i < v.dim(); ++i) {
        // mpz limbs are cheap to hash through their low bits.
        auto n = numerator(v[i]);
        auto d = denominator(v[i]);
        std::size_t hn = static_cast<std::size_t>(mpz_get_si(n.backend().data()));
        std::size_t hd = static_cast<std::size_t>(mpz_get_si(d.backend().data()));
        h ^= hn + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= hd + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(int dim) : a_(static_cast<std::size_t>(dim * dim)), dim_(dim) {
    if (dim < 1 || dim > Vec::kMaxDim) throw Error(ErrorCode::UnsupportedDimension, "matrix dimension " + std::to_string(dim));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) : Matrix(static_cast<int>(rows.size())) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
        int c = 0;
        for (const auto& x : row) (*this)(r, c++) = x;
        ++r;
    }
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
    Matrix m(static_cast<int>(cols.size()));
    for (int c = 0; c < m.dim_; ++c) {
        const Vec& v = cols[static_cast<std::size_t>(c)];
        if (v.dim() != m.dim_) throw Error(ErrorCode::DimensionMismatch, "column dimension");
        for (int r = 0; r < m.dim_; ++r) m(r, c) = v[r];
    }
    return m;
}

Vec Matrix::column(int c) const {
    Vec v(dim_);
    for (int r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vec Matrix::row(int r) const {
    Vec v(dim_);
    for (int c = 0; c < dim_; ++c) v[c] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Rational Matrix::determinant() const {
    Matrix m = *this;
    Rational det = 1;
    for (int col = 0; col < dim_; ++col) {
        int piv = -1;
        for (int r = col; r < dim_; ++r)
            if (m(r, col) != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int c = 0; c < dim_; ++c) std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < dim_; ++r) {
            Rational f = m(r, col) / m(col, col);
            if (f == 0) continue;
            for (int c = col; c < dim_; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    Matrix m = *this;
    Matrix inv = identity(dim_);
    for (int col = 0; col < dim_; ++col) {
        int piv = -1;
        for (int r = col; r < dim_; ++r)
            if (m(r, col) != 0) { piv = r; break; }
        if (piv < 0) throw Error(ErrorCode::SingularMap, "matrix is singular");
        if (piv != col)
            for (int c = 0; c < dim_; ++c) {
                std::swap(m(piv, c), m(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        Rational p = m(col, col);
        for (int c = 0; c < dim_; ++c) {
            m(col, c) /= p;
            inv(col, c) /= p;
        }
        for (int r = 0; r < dim_; ++r) {
            if (r == col || m(r, col) == 0) continue;
            Rational f = m(r, col);
            for (int c = 0; c < dim_; ++c) {
                m(r, c) -= f * m(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

bool operator==(const Matrix& a, const Matrix& b) { return a.dim_ == b.dim_ && a.a_ == b.a_; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix m(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) {
            Rational s = 0;
            for (int k = 0; k < a.dim(); ++k) s += a(r, k) * b(k, c);
            m(r, c) = s;
        }
    return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.dim() != v.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    Vec out(v.dim());
    for (int r = 0; r < a.dim(); ++r) {
        Rational s = 0;
        for (int k = 0; k < a.dim(); ++k) s += a(r, k) * v[k];
        out[r] = s;
    }
    return out;
}

}  // namespace spectile
