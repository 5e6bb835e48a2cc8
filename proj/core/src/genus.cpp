#include "finv/genus.hpp"

#include "finv/bernoulli.hpp"
#include "finv/errors.hpp"

namespace finv {

namespace {

void check_levels(const C2Series& a, const C2Series& b) {
    if (a.level != b.level)
        throw InvalidInputError("C2Series: mixed levels in arithmetic");
}

int checked_deg(int deg) {
    if (deg < 0) throw InvalidInputError("c2-degree must be >= 0");
    return deg;
}

/// G_{2n}(tau) - 3^{2n-1} G_{2n}(3 tau), the level-3 average that drives the
/// exponential form of the genus.
QSeries g_star(int weight, int prec) {
    QSeries g = eisenstein_G(weight, prec);
    return g - g.substituted_qpow(3) * Rational(pow_ui(Int(3), weight - 1));
}

}  // namespace

C2Series operator+(const C2Series& a, const C2Series& b) {
    check_levels(a, b);
    C2Series out{a.level, std::min(a.prec, b.prec), {}};
    int deg = std::min(a.deg(), b.deg());
    out.coeff.reserve(deg + 1);
    for (int k = 0; k <= deg; ++k) out.coeff.push_back(a.coeff[k] + b.coeff[k]);
    return out;
}

C2Series operator*(const C2Series& a, const C2Series& b) {
    check_levels(a, b);
    C2Series out{a.level, std::min(a.prec, b.prec), {}};
    int deg = std::min(a.deg(), b.deg());
    out.coeff.assign(deg + 1, QSeries(out.prec));
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j)
            out.coeff[i + j] = out.coeff[i + j] + a.coeff[i] * b.coeff[j];
    return out;
}

C2Series operator*(const Rational& c, const C2Series& s) {
    C2Series out{s.level, s.prec, {}};
    out.coeff.reserve(s.coeff.size());
    for (const QSeries& q : s.coeff) out.coeff.push_back(q * c);
    return out;
}

C2Series ell_closed(Level level, int deg, int prec) {
    checked_deg(deg);
    C2Series out{level, prec, {}};
    out.coeff.reserve(deg + 1);
    out.coeff.push_back(QSeries::constant(1, prec));
    if (deg >= 1) {
        ModularForm lead = level == Level::three
                               ? ModularForm::monomial(level, 2, 0, Rational(-1, 4))
                               : ModularForm::monomial(level, 1, 0, Rational(-2, 3));
        out.coeff.push_back(lead.expand(prec));
    }
    for (int k = 2; k <= deg; ++k) {
        Rational c = Rational(2) / Rational(factorial(2 * k - 2));
        if (k % 2 != 0) c = -c;
        out.coeff.push_back(eisenstein_G(2 * k, prec) * c);
    }
    return out;
}

std::vector<Rational> ell_const(Level level, int deg) {
    checked_deg(deg);
    std::vector<Rational> out;
    out.reserve(deg + 1);
    out.emplace_back(1);
    if (deg >= 1)
        out.push_back(level == Level::three ? Rational(-1, 4) : Rational(-1, 6));
    for (int k = 2; k <= deg; ++k) {
        Rational c = -bernoulli(2 * k) / Rational(4 * k) * 2 / Rational(factorial(2 * k - 2));
        if (k % 2 != 0) c = -c;
        out.push_back(c);
    }
    return out;
}

C2Series ell_oracle_level3(int deg, int prec) {
    checked_deg(deg);
    C2Series x{Level::three, prec, {}};
    x.coeff.assign(deg + 1, QSeries(prec));
    for (int n = 1; n <= deg; ++n) {
        Rational c = Rational(6) / Rational(factorial(2 * n));
        if (n % 2 != 0) c = -c;
        x.coeff[n] = g_star(2 * n, prec) * c;
    }

    C2Series result{Level::three, prec, {}};
    result.coeff.assign(deg + 1, QSeries(prec));
    result.coeff[0] = QSeries::constant(1, prec);
    C2Series term = result;
    for (int i = 1; i <= deg; ++i) {
        term = Rational(1, i) * (term * x);
        result = result + term;
    }
    return result;
}

std::vector<XSeries> char_series_level3(int xdeg, int prec) {
    if (xdeg < 0) throw InvalidInputError("x-degree must be >= 0");
    if (xdeg > 4)
        throw UnsupportedDegreeError(
            "characteristic series is normalized only through x^4 (two odd "
            "data points); requested x^" +
            std::to_string(xdeg));

    std::vector<XSeries> a(xdeg + 1, XSeries(prec));
    if (xdeg >= 1)
        a[1] = widen(level_generator(Level::three, GeneratorName::e1, prec)) *
               QuadExt(0, Rational(1, 6));
    if (xdeg >= 2) a[2] = widen(g_star(2, prec)) * QuadExt(Rational(3, 2));
    if (xdeg >= 3)
        a[3] = widen(level_generator(Level::three, GeneratorName::e3, prec)) *
               QuadExt(0, Rational(-1, 54));
    if (xdeg >= 4) a[4] = widen(g_star(4, prec)) * QuadExt(Rational(1, 8));

    auto polymul = [&](const std::vector<XSeries>& u, const std::vector<XSeries>& v) {
        std::vector<XSeries> w(xdeg + 1, XSeries(prec));
        for (int i = 0; i <= xdeg; ++i)
            for (int j = 0; i + j <= xdeg; ++j) w[i + j] = w[i + j] + u[i] * v[j];
        return w;
    };

    std::vector<XSeries> result(xdeg + 1, XSeries(prec));
    result[0] = XSeries::constant(QuadExt(1), prec);
    std::vector<XSeries> term = result;
    for (int i = 1; i <= xdeg; ++i) {
        term = polymul(term, a);
        for (XSeries& s : term) s = s / QuadExt(i);
        for (int j = 0; j <= xdeg; ++j) result[j] = result[j] + term[j];
    }
    return result;
}

std::vector<Rational> todd_series(int deg) {
    checked_deg(deg);
    std::vector<Rational> out;
    out.reserve(deg + 1);
    out.emplace_back(1);
    for (int k = 1; k <= deg; ++k) {
        Rational t = bernoulli(2 * k) / Rational(2 * k) / Rational(factorial(2 * k - 2));
        if (k % 2 == 0) t = -t;
        out.push_back(t);
    }
    return out;
}

}  // namespace finv
