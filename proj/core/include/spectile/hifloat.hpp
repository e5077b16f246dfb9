#ifndef SPECTILE_HIFLOAT_HPP
#define SPECTILE_HIFLOAT_HPP

#include <complex>

#include <boost/multiprecision/mpfr.hpp>

#include "spectile/rational.hpp"

namespace spectile {

using HighFloat = boost::multiprecision::mpfr_float;

/// Working precision for phase evaluation, from SPECTILE_PRECISION_BITS
/// (default 128, clamped to [64, 4096]).
unsigned precision_bits();

/// Applies precision_bits() as the mpfr default; idempotent and cheap.
void ensure_precision();

HighFloat to_high(const Rational& q);
HighFloat high_pi();
HighFloat high_sqrt(const Rational& q);

/// Complex number in working precision with an a-posteriori absolute error
/// bound covering rounding in phase evaluation and accumulation.
struct ComplexValue {
    HighFloat re = 0;
    HighFloat im = 0;
    double err_bound = 0.0;

    double abs() const;
    std::complex<double> to_complex() const;

    ComplexValue& operator+=(const ComplexValue& o);
    ComplexValue& operator-=(const ComplexValue& o);
};

ComplexValue operator+(ComplexValue a, const ComplexValue& b);
ComplexValue operator-(ComplexValue a, const ComplexValue& b);
ComplexValue operator*(const ComplexValue& a, const ComplexValue& b);
ComplexValue operator*(const ComplexValue& a, const HighFloat& s);
ComplexValue conj(ComplexValue a);

/// e^{-2 pi i t}, with t reduced modulo 1 exactly before any rounding.
ComplexValue unit_phase(const Rational& t);

/// Unit roundoff of the working precision.
double working_epsilon();

}  // namespace spectile

#endif  // SPECTILE_HIFLOAT_HPP
