#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finv/errors.hpp"
#include "finv/quadext.hpp"
#include "finv/rational.hpp"

namespace finv {

/**
 * Truncated q-expansion: coefficients of q^0 .. q^(P-1), known modulo q^P.
 *
 * Every binary operation truncates to the minimum precision of its operands,
 * so a precision bound, once lost, is never silently re-invented.
 * Coefficients C are exact (Rational or QuadExt).
 */
template <typename C>
class Series {
  public:
    /// Zero series at the given precision (P >= 1).
    explicit Series(int precision) : c_(checked(precision)) {}

    static Series constant(const C& value, int precision) {
        Series s(precision);
        s.c_[0] = value;
        return s;
    }

    /// value * q^power (coefficients beyond the precision are dropped).
    static Series monomial(const C& value, int power, int precision) {
        Series s(precision);
        if (power < 0) throw InvalidInputError("Series: negative q-power");
        if (power < precision) s.c_[power] = value;
        return s;
    }

    int precision() const { return static_cast<int>(c_.size()); }

    const C& coeff(int j) const {
        if (j < 0 || j >= precision())
            throw InvalidInputError("Series: coefficient index " + std::to_string(j) +
                                    " out of range for precision " +
                                    std::to_string(precision()));
        return c_[j];
    }

    void set_coeff(int j, C value) {
        if (j < 0 || j >= precision())
            throw InvalidInputError("Series: coefficient index out of range");
        c_[j] = std::move(value);
    }

    bool is_zero() const {
        for (const C& c : c_)
            if (!(c == C{})) return false;
        return true;
    }

    Series truncated(int precision) const {
        if (precision > this->precision())
            throw InvalidInputError("Series: cannot truncate upward");
        Series out(precision);
        for (int j = 0; j < precision; ++j) out.c_[j] = c_[j];
        return out;
    }

    /// Substitute q -> q^t (t >= 1); precision is preserved.
    Series substituted_qpow(int t) const {
        if (t < 1) throw InvalidInputError("substituted_qpow: t must be >= 1");
        Series out(precision());
        for (int j = 0; j * t < precision(); ++j) out.c_[j * t] = c_[j];
        return out;
    }

    Series operator-() const {
        Series out(precision());
        for (int j = 0; j < precision(); ++j) out.c_[j] = -c_[j];
        return out;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series out(std::min(a.precision(), b.precision()));
        for (int j = 0; j < out.precision(); ++j) out.c_[j] = a.c_[j] + b.c_[j];
        return out;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series out(std::min(a.precision(), b.precision()));
        for (int j = 0; j < out.precision(); ++j) out.c_[j] = a.c_[j] - b.c_[j];
        return out;
    }

    /// Cauchy product, truncated to the minimum precision.
    friend Series operator*(const Series& a, const Series& b) {
        Series out(std::min(a.precision(), b.precision()));
        for (int i = 0; i < out.precision(); ++i) {
            if (a.c_[i] == C{}) continue;
            for (int j = 0; i + j < out.precision(); ++j) {
                if (b.c_[j] == C{}) continue;
                out.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return out;
    }

    friend Series operator*(const C& scalar, const Series& s) {
        Series out(s.precision());
        for (int j = 0; j < out.precision(); ++j) out.c_[j] = scalar * s.c_[j];
        return out;
    }
    friend Series operator*(const Series& s, const C& scalar) { return scalar * s; }

    friend Series operator/(const Series& s, const C& scalar) {
        if (scalar == C{}) throw InvalidInputError("Series: division by zero scalar");
        Series out(s.precision());
        for (int j = 0; j < out.precision(); ++j) out.c_[j] = s.c_[j] / scalar;
        return out;
    }

    Series pow(unsigned e) const {
        Series result = constant(C(1), precision());
        Series base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  private:
    static int checked(int precision) {
        if (precision < 1)
            throw InvalidInputError("Series: precision must be positive, got " +
                                    std::to_string(precision));
        return precision;
    }

    std::vector<C> c_;
};

using QSeries = Series<Rational>;
using XSeries = Series<QuadExt>;

/**
 * Rational linear combination sum_i c_i * s_i, truncated to the minimum
 * precision over the terms.  An empty combination is rejected (its precision
 * would be unbounded).
 */
QSeries linear_combine(const std::vector<std::pair<Rational, QSeries>>& terms);

/**
 * True iff every coefficient's denominator is a power of N (N = 2 or 3),
 * i.e. the truncation lies in Z[1/N][[q]].
 */
bool is_N_integral(const QSeries& s, int N);

/// Integrality over the quadratic extension is not part of the congruence
/// trace; calling this is an unsupported-domain error.
bool is_N_integral(const XSeries& s, int N);

/// Embed a rational series into the quadratic-extension domain.
XSeries widen(const QSeries& s);

/// "c0 + c1*q + c2*q^2 + ... + O(q^P)" with exact coefficients.
std::string to_expansion_string(const QSeries& s);
std::string to_expansion_string(const XSeries& s);

}  // namespace finv
