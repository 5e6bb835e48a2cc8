#include "finv/series.hpp"

#include <sstream>

namespace finv {

QSeries linear_combine(const std::vector<std::pair<Rational, QSeries>>& terms) {
    if (terms.empty())
        throw InvalidInputError("linear_combine: empty combination has no precision");
    int prec = terms.front().second.precision();
    for (const auto& [c, s] : terms) prec = std::min(prec, s.precision());
    QSeries out(prec);
    for (const auto& [c, s] : terms) out = out + c * s.truncated(prec);
    return out;
}

bool is_N_integral(const QSeries& s, int N) {
    if (N != 2 && N != 3)
        throw InvalidInputError("is_N_integral: N must be 2 or 3, got " + std::to_string(N));
    for (int j = 0; j < s.precision(); ++j)
        if (!has_denominator_power_of(s.coeff(j), static_cast<unsigned>(N))) return false;
    return true;
}

bool is_N_integral(const XSeries&, int) {
    throw UnsupportedDomainError(
        "is_N_integral: integrality is only traced over rational coefficients");
}

XSeries widen(const QSeries& s) {
    XSeries out(s.precision());
    for (int j = 0; j < s.precision(); ++j) out.set_coeff(j, QuadExt(s.coeff(j)));
    return out;
}

namespace {

// Shared pretty-printer: needs per-domain "is one / sign / render" hooks.
template <typename C>
std::string render(const Series<C>& s, bool (*is_one)(const C&),
                   bool (*is_negative)(const C&), std::string (*str)(const C&),
                   C (*negate)(const C&)) {
    std::ostringstream out;
    bool first = true;
    for (int j = 0; j < s.precision(); ++j) {
        C c = s.coeff(j);
        if (c == C{}) continue;
        bool neg = is_negative(c);
        if (first) {
            if (neg) {
                out << "-";
                c = negate(c);
            }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) c = negate(c);
        }
        if (j == 0) {
            out << str(c);
        } else {
            if (!is_one(c)) out << str(c) << "*";
            out << "q";
            if (j > 1) out << "^" << j;
        }
        first = false;
    }
    if (first) out << "0";
    out << " + O(q^" << s.precision() << ")";
    return out.str();
}

bool q_is_one(const Rational& c) { return c == 1; }
bool q_is_negative(const Rational& c) { return c < 0; }
std::string q_str(const Rational& c) { return to_fraction_string(c); }
Rational q_negate(const Rational& c) { return -c; }

bool x_is_one(const QuadExt& c) { return c == QuadExt(1); }
// A mixed element has no useful sign; only pull the minus out of purely
// rational or purely imaginary coefficients.
bool x_is_negative(const QuadExt& c) {
    if (c.im == 0) return c.re < 0;
    if (c.re == 0) return c.im < 0;
    return false;
}
std::string x_str(const QuadExt& c) {
    if (c.re != 0 && c.im != 0) return "(" + to_string(c) + ")";
    return to_string(c);
}
QuadExt x_negate(const QuadExt& c) { return -c; }

}  // namespace

std::string to_expansion_string(const QSeries& s) {
    return render<Rational>(s, q_is_one, q_is_negative, q_str, q_negate);
}

std::string to_expansion_string(const XSeries& s) {
    return render<QuadExt>(s, x_is_one, x_is_negative, x_str, x_negate);
}

}  // namespace finv
