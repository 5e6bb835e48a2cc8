#pragma once

#include <string>

#include "finv/errors.hpp"
#include "finv/rational.hpp"

namespace finv {

/**
 * Element of the quadratic extension Q(s) with s^2 = -3, stored as
 * re + im*s with exact rational components.  The norm form is
 * (a + b s)(a - b s) = a^2 + 3 b^2, so the type is a field and division is
 * exact away from zero.
 */
struct QuadExt {
    Rational re;
    Rational im;

    QuadExt() : re(0), im(0) {}
    QuadExt(int v) : re(v), im(0) {}                       // NOLINT(google-explicit-constructor)
    QuadExt(const Rational& r) : re(r), im(0) {}           // NOLINT(google-explicit-constructor)
    QuadExt(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    /// The generator s itself.
    static QuadExt s() { return QuadExt(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }

    QuadExt conj() const { return QuadExt(re, -im); }

    /// Field norm re^2 + 3 im^2 (non-negative rational, zero only at zero).
    Rational norm() const { return re * re + 3 * im * im; }

    QuadExt operator-() const { return QuadExt(-re, -im); }

    QuadExt& operator+=(const QuadExt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        // (a + b s)(c + d s) = (ac - 3bd) + (ad + bc) s
        Rational a = re, b = im;
        re = a * o.re - 3 * b * o.im;
        im = a * o.im + b * o.re;
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) {
        if (o.is_zero()) throw InvalidInputError("QuadExt: division by zero");
        QuadExt num = *this * o.conj();
        Rational n = o.norm();
        re = num.re / n;
        im = num.im / n;
        return *this;
    }

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
};

/** Render as "re", "im*s", or "re + im*s" (exact fractions). */
std::string to_string(const QuadExt& x);

}  // namespace finv
