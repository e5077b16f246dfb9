#include "spectile/hifloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

namespace spectile {

unsigned precision_bits() {
    static const unsigned bits = [] {
        unsigned b = 128;
        if (const char* env = std::getenv("SPECTILE_PRECISION_BITS")) {
            try {
                b = static_cast<unsigned>(std::stoul(env));
            } catch (...) {
                b = 128;
            }
        }
        return std::clamp(b, 64u, 4096u);
    }();
    return bits;
}

void ensure_precision() {
    static std::once_flag once;
    std::call_once(once, [] {
        // mpfr_float's default precision is given in decimal digits.
        auto digits = static_cast<unsigned>(std::ceil(precision_bits() * 0.30102999566398120));
        HighFloat::default_precision(digits);
    });
}

HighFloat to_high(const Rational& q) {
    ensure_precision();
    HighFloat x;
    mpfr_set_q(x.backend().data(), q.backend().data(), MPFR_RNDN);
    return x;
}

HighFloat high_pi() {
    ensure_precision();
    HighFloat x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

HighFloat high_sqrt(const Rational& q) { return boost::multiprecision::sqrt(to_high(q)); }

double working_epsilon() { return std::ldexp(1.0, -static_cast<int>(precision_bits()) + 1); }

double ComplexValue::abs() const {
    HighFloat m = boost::multiprecision::sqrt(re * re + im * im);
    return m.convert_to<double>();
}

std::complex<double> ComplexValue::to_complex() const { return {re.convert_to<double>(), im.convert_to<double>()}; }

ComplexValue& ComplexValue::operator+=(const ComplexValue& o) {
    re += o.re;
    im += o.im;
    err_bound += o.err_bound;
    return *this;
}

ComplexValue& ComplexValue::operator-=(const ComplexValue& o) {
    re -= o.re;
    im -= o.im;
    err_bound += o.err_bound;
    return *this;
}

ComplexValue operator+(ComplexValue a, const ComplexValue& b) { return a += b; }
ComplexValue operator-(ComplexValue a, const ComplexValue& b) { return a -= b; }

ComplexValue operator*(const ComplexValue& a, const ComplexValue& b) {
    ComplexValue r;
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    r.err_bound = a.err_bound * b.abs() + b.err_bound * a.abs() + a.err_bound * b.err_bound;
    return r;
}

ComplexValue operator*(const ComplexValue& a, const HighFloat& s) {
    ComplexValue r;
    r.re = a.re * s;
    r.im = a.im * s;
    double sa = std::fabs(s.convert_to<double>());
    r.err_bound = a.err_bound * sa + 2.0 * working_epsilon() * a.abs() * sa;
    return r;
}

ComplexValue conj(ComplexValue a) {
    a.im = -a.im;
    return a;
}

namespace {

struct PhaseKeyHash {
    std::size_t operator()(const std::pair<long long, long long>& k) const noexcept {
        return std::hash<long long>()(k.first) * 1000003u ^ std::hash<long long>()(k.second);
    }
};

}  // namespace

ComplexValue unit_phase(const Rational& t) {
    static thread_local HighFloat two_pi = 2 * high_pi();
    static thread_local std::unordered_map<std::pair<long long, long long>, ComplexValue, PhaseKeyHash> cache;
    const Rational f = frac(t);
    const auto& num = boost::multiprecision::numerator(f);
    const auto& den = boost::multiprecision::denominator(f);
    const bool cacheable = mpz_fits_slong_p(num.backend().data()) && mpz_fits_slong_p(den.backend().data());
    std::pair<long long, long long> key;
    if (cacheable) {
        key = {mpz_get_si(num.backend().data()), mpz_get_si(den.backend().data())};
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    HighFloat angle = two_pi * to_high(f);
    ComplexValue r;
    mpfr_sin_cos(r.im.backend().data(), r.re.backend().data(), angle.backend().data(), MPFR_RNDN);
    r.im = -r.im;
    r.err_bound = 8.0 * working_epsilon();
    if (cacheable) {
        if (cache.size() >= (1u << 16)) cache.clear();
        cache.emplace(key, r);
    }
    return r;
}

}  // namespace spectile
