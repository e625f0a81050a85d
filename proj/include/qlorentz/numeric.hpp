#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qlorentz {

/// Evaluation context: real deformation parameter q > 1, working precision
/// in decimal digits, and comparison tolerance.
struct NumericContext {
    double q = 1.5;
    int precision = 30;
    double tolerance = 1e-12;

    NumericContext() = default;
    NumericContext(double q_, int digits = 30, double tol = 1e-12)
        : q(q_), precision(digits), tolerance(tol) {
        if (q <= 1.0) throw std::domain_error("NumericContext requires q > 1");
        if (tol <= 0.0) throw std::domain_error("NumericContext requires tolerance > 0");
    }
    unsigned long bits() const { return static_cast<unsigned long>(precision * 3.33) + 64; }
};

/// Arbitrary-precision complex number on GMP floats.
struct NComplex {
    mpf_class re, im;

    NComplex() : re(0), im(0) {}
    explicit NComplex(unsigned long prec) : re(0, prec), im(0, prec) {}
    NComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

    friend NComplex operator+(const NComplex& a, const NComplex& b) {
        return {mpf_class(a.re + b.re), mpf_class(a.im + b.im)};
    }
    friend NComplex operator-(const NComplex& a, const NComplex& b) {
        return {mpf_class(a.re - b.re), mpf_class(a.im - b.im)};
    }
    friend NComplex operator-(const NComplex& a) { return {mpf_class(-a.re), mpf_class(-a.im)}; }
    friend NComplex operator*(const NComplex& a, const NComplex& b) {
        return {mpf_class(a.re * b.re - a.im * b.im), mpf_class(a.re * b.im + a.im * b.re)};
    }
    NComplex& operator+=(const NComplex& b) { re += b.re; im += b.im; return *this; }
    NComplex& operator-=(const NComplex& b) { re -= b.re; im -= b.im; return *this; }
    NComplex& operator*=(const NComplex& b) { *this = *this * b; return *this; }

    double abs() const {
        mpf_class m = re * re + im * im;
        return std::sqrt(m.get_d());
    }
    std::complex<double> to_double() const { return {re.get_d(), im.get_d()}; }
};

} // namespace qlorentz
