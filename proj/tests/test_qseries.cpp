#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finv/errors.hpp"
#include "finv/series.hpp"

using finv::QSeries;
using finv::QuadExt;
using finv::Rational;
using finv::XSeries;

namespace {

QSeries from_list(std::initializer_list<Rational> coeffs) {
    QSeries s(static_cast<int>(coeffs.size()));
    int j = 0;
    for (const Rational& c : coeffs) s.set_coeff(j++, c);
    return s;
}

}  // namespace

TEST_CASE("construction and coefficient access") {
    QSeries z(4);
    CHECK(z.precision() == 4);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(QSeries(0), finv::InvalidInputError);

    QSeries c = QSeries::constant(Rational(1, 3), 5);
    CHECK(c.coeff(0) == Rational(1, 3));
    CHECK(c.coeff(4) == 0);
    CHECK_THROWS_AS(c.coeff(5), finv::InvalidInputError);
    CHECK_THROWS_AS(c.coeff(-1), finv::InvalidInputError);

    QSeries m = QSeries::monomial(Rational(7), 2, 4);
    CHECK(m.coeff(2) == 7);
    CHECK_FALSE(m.is_zero());
    CHECK(QSeries::monomial(Rational(7), 9, 4).is_zero());  // beyond truncation
    CHECK_THROWS_AS(QSeries::monomial(Rational(1), -1, 4), finv::InvalidInputError);
}

TEST_CASE("binary operations truncate to the minimum precision") {
    QSeries a = from_list({1, 2, 3, 4, 5});
    QSeries b = from_list({1, 1, 1});
    CHECK((a + b).precision() == 3);
    CHECK((a - b).precision() == 3);
    CHECK((a * b).precision() == 3);
    CHECK((a + b) == from_list({2, 3, 4}));
    CHECK((a * b) == from_list({1, 3, 6}));

    CHECK(a.truncated(2) == from_list({1, 2}));
    CHECK_THROWS_AS(b.truncated(5), finv::InvalidInputError);
}

TEST_CASE("products, powers and scalars") {
    QSeries one_plus_q = from_list({1, 1, 0, 0});
    QSeries one_minus_q = from_list({1, -1, 0, 0});
    CHECK(one_plus_q * one_minus_q == from_list({1, 0, -1, 0}));
    CHECK(one_plus_q.pow(2) == from_list({1, 2, 1, 0}));
    CHECK(one_plus_q.pow(0) == QSeries::constant(1, 4));
    CHECK(one_plus_q.pow(3).coeff(3) == 1);

    CHECK(Rational(1, 2) * from_list({2, 4}) == from_list({1, 2}));
    CHECK(from_list({2, 4}) / Rational(2) == from_list({1, 2}));
    CHECK_THROWS_AS(from_list({1}) / Rational(0), finv::InvalidInputError);
    CHECK(-from_list({1, -2}) == from_list({-1, 2}));
}

TEST_CASE("q-power substitution keeps the precision bound") {
    QSeries s = from_list({1, 2, 3});
    QSeries cubed(5);
    cubed.set_coeff(0, 1);
    cubed.set_coeff(3, 2);
    QSeries widened = from_list({1, 2, 3, 0, 0});
    CHECK(widened.substituted_qpow(3) == cubed);
    CHECK(s.substituted_qpow(1) == s);
    CHECK_THROWS_AS(s.substituted_qpow(0), finv::InvalidInputError);
}

TEST_CASE("linear combinations") {
    QSeries a = from_list({1, 1, 0});
    QSeries b = from_list({2, 0, 0, 0});
    QSeries got = finv::linear_combine({{Rational(2), a}, {Rational(-1), b}});
    CHECK(got == from_list({0, 2, 0}));
    CHECK_THROWS_AS(finv::linear_combine({}), finv::InvalidInputError);
}

TEST_CASE("N-integrality of the coefficient denominators") {
    CHECK(finv::is_N_integral(from_list({1, Rational(1, 3), Rational(5, 9)}), 3));
    CHECK_FALSE(finv::is_N_integral(from_list({1, Rational(1, 3), Rational(5, 9)}), 2));
    CHECK_FALSE(finv::is_N_integral(from_list({Rational(1, 240)}), 3));
    CHECK_THROWS_AS(finv::is_N_integral(from_list({1}), 5), finv::InvalidInputError);

    XSeries x(3);
    CHECK_THROWS_AS(finv::is_N_integral(x, 3), finv::UnsupportedDomainError);
}

TEST_CASE("widening into the quadratic extension") {
    QSeries s = from_list({1, Rational(-1, 2), 3});
    XSeries w = finv::widen(s);
    CHECK(w.precision() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(w.coeff(j).re == s.coeff(j));
        CHECK(w.coeff(j).im == 0);
    }
    XSeries sq = w * XSeries::constant(QuadExt::s(), 3);
    CHECK(sq.coeff(1) == QuadExt(Rational(0), Rational(-1, 2)));
}

TEST_CASE("expansion rendering") {
    CHECK(finv::to_expansion_string(from_list({1, 6, 0, 6})) ==
          "1 + 6*q + 6*q^3 + O(q^4)");
    CHECK(finv::to_expansion_string(from_list({Rational(-1, 24), 1})) ==
          "-1/24 + q + O(q^2)");
    CHECK(finv::to_expansion_string(QSeries(3)) == "0 + O(q^3)");
    CHECK(finv::to_expansion_string(finv::widen(from_list({0, 1})) *
                                    XSeries::constant(QuadExt::s(), 2)) ==
          "s*q + O(q^2)");
}
