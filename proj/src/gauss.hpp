#pragma once

#include <complex>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace cd4 {

using Rational = mpq_class;

/// Gaussian rational a + b*i with exact arbitrary-precision components.
/// mpq_class keeps every component in lowest terms with positive denominator,
/// so equality is plain component equality.
class GaussRational {
public:
    GaussRational() : re_(0), im_(0) {}
    GaussRational(long n) : re_(n), im_(0) {}
    GaussRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational imaginary_unit() { return GaussRational(Rational(0), Rational(1)); }
    static GaussRational from_fraction(long num, long den) {
        if (den == 0) throw DomainError("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return GaussRational(q);
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational j = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(j);
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    /// Squared modulus re^2 + im^2 (a plain rational).
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational conj() const { return GaussRational(re_, -im_); }

    GaussRational inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        Rational n = norm();
        return GaussRational(re_ / n, -im_ / n);
    }

    GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    GaussRational pow(unsigned long e) const {
        GaussRational acc(1), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Exact square root over Q(i) when one exists.
    std::optional<GaussRational> sqrt() const;

    double to_double() const {
        if (!is_real()) throw DomainError("complex value where real expected");
        return re_.get_d();
    }
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    std::string str() const;
};

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

} // namespace cd4
