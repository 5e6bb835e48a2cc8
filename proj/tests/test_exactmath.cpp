#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "finv/bernoulli.hpp"
#include "finv/errors.hpp"
#include "finv/quadext.hpp"
#include "finv/rational.hpp"

using finv::Int;
using finv::QuadExt;
using finv::Rational;

namespace {

// Independent oracle: the binomial-sum recurrence
//   sum_{j=0}^{m} C(m+1, j) B_j = 0  (m >= 1),  B_0 = 1,
// deliberately a different algorithm than the library's transform.
std::vector<Rational> oracle_bernoulli(unsigned count) {
    std::vector<Rational> b{Rational(1)};
    for (unsigned m = 1; m < count; ++m) {
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(finv::binomial(m + 1, j)) * b[j];
        b.push_back(-acc / Rational(m + 1));
    }
    return b;
}

// B_m(x) = sum_k C(m, k) B_k x^{m-k}, evaluated from the oracle values.
Rational oracle_bernoulli_poly(unsigned m, const Rational& x,
                               const std::vector<Rational>& b) {
    Rational acc(0);
    Rational xpow(1);
    for (int k = static_cast<int>(m); k >= 0; --k) {
        acc += Rational(finv::binomial(m, static_cast<unsigned long>(k))) * b[k] * xpow;
        xpow *= x;
    }
    return acc;
}

bool tiny_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("factorial, binomial and integer powers") {
    CHECK(finv::factorial(0) == 1);
    CHECK(finv::factorial(5) == 120);
    CHECK(finv::factorial(12) == Int("479001600"));
    CHECK(finv::binomial(6, 3) == 20);
    CHECK(finv::binomial(6, 0) == 1);
    CHECK(finv::binomial(4, 7) == 0);
    CHECK(finv::pow_ui(Int(3), 0) == 1);
    CHECK(finv::pow_ui(Int(-2), 5) == -32);
    CHECK(finv::pow_ui(Int(10), 9) == Int("1000000000"));
}

TEST_CASE("base-free parts and power-of-base predicates") {
    CHECK(finv::base_free_part(Int(24), 2) == 3);
    CHECK(finv::base_free_part(Int(-54), 3) == 2);
    CHECK(finv::base_free_part(Int(7), 2) == 7);
    CHECK(finv::base_free_part(Int(0), 5) == 0);
    CHECK(finv::base_free_part(Int(81), 3) == 1);

    CHECK(finv::is_power_of(Int(1), 3));
    CHECK(finv::is_power_of(Int(27), 3));
    CHECK(finv::is_power_of(Int(64), 2));
    CHECK_FALSE(finv::is_power_of(Int(12), 3));
    CHECK_FALSE(finv::is_power_of(Int(-3), 3));
    CHECK_FALSE(finv::is_power_of(Int(0), 2));

    CHECK(finv::has_denominator_power_of(Rational(5, 9), 3));
    CHECK(finv::has_denominator_power_of(Rational(4), 2));
    CHECK(finv::has_denominator_power_of(Rational(-7, 8), 2));
    CHECK_FALSE(finv::has_denominator_power_of(Rational(1, 6), 3));
    CHECK_FALSE(finv::has_denominator_power_of(Rational(1, 240), 3));
}

TEST_CASE("rational parsing and rendering") {
    CHECK(finv::parse_rational("7") == Rational(7));
    CHECK(finv::parse_rational("-3/6") == Rational(-1, 2));
    CHECK(finv::parse_rational("239/240") == Rational(239, 240));
    CHECK_THROWS_AS(finv::parse_rational("1/0"), finv::InvalidInputError);
    CHECK_THROWS_AS(finv::parse_rational("abc"), finv::InvalidInputError);
    CHECK_THROWS_AS(finv::parse_rational(""), finv::InvalidInputError);

    CHECK(finv::to_fraction_string(Rational(-1, 2)) == "-1/2");
    CHECK(finv::to_fraction_string(Rational(5)) == "5");
    CHECK(finv::parse_rational(finv::to_fraction_string(Rational(22, -8))) ==
          Rational(-11, 4));
}

TEST_CASE("representatives modulo 1") {
    CHECK(finv::reduced_mod1(Rational(-1, 240)) == Rational(239, 240));
    CHECK(finv::reduced_mod1(Rational(7, 3)) == Rational(1, 3));
    CHECK(finv::reduced_mod1(Rational(2)) == Rational(0));
    CHECK(finv::reduced_mod1(Rational(239, 240) + 5) == Rational(239, 240));
}

TEST_CASE("Bernoulli numbers match the frozen values") {
    CHECK(finv::bernoulli(2) == Rational(1, 6));
    CHECK(finv::bernoulli(4) == Rational(-1, 30));
    CHECK(finv::bernoulli(12) == Rational(-691, 2730));
    CHECK_THROWS_AS(finv::bernoulli(3), finv::InvalidInputError);
    CHECK_THROWS_AS(finv::bernoulli(0), finv::InvalidInputError);
}

TEST_CASE("Bernoulli numbers agree with the binomial-recurrence oracle") {
    std::vector<Rational> b = oracle_bernoulli(32);
    for (unsigned m = 2; m <= 30; m += 2) CHECK(finv::bernoulli(m) == b[m]);
    CHECK(finv::detail::bernoulli_any(0) == Rational(1));
    CHECK(finv::detail::bernoulli_any(1) == Rational(-1, 2));
    for (unsigned m = 3; m <= 15; m += 2) CHECK(finv::detail::bernoulli_any(m) == 0);
}

TEST_CASE("von Staudt-Clausen pins every Bernoulli denominator") {
    for (unsigned m = 2; m <= 30; m += 2) {
        Int expected(1);
        for (unsigned p = 2; p <= m + 1; ++p)
            if (tiny_prime(p) && m % (p - 1) == 0) expected *= p;
        CHECK(Rational(finv::bernoulli(m)).get_den() == expected);
    }
}

TEST_CASE("Bernoulli polynomial values at 1/3") {
    CHECK(finv::bernoulli_poly_third(1) == Rational(-1, 6));
    CHECK(finv::bernoulli_poly_third(3) == Rational(1, 27));
    CHECK(finv::bernoulli_poly_third(5) == Rational(-5, 243));
    CHECK_THROWS_AS(finv::bernoulli_poly_third(2), finv::InvalidInputError);
    CHECK_THROWS_AS(finv::bernoulli_poly_third(0), finv::InvalidInputError);

    std::vector<Rational> b = oracle_bernoulli(16);
    for (unsigned m = 1; m <= 13; m += 2)
        CHECK(finv::bernoulli_poly_third(m) ==
              oracle_bernoulli_poly(m, Rational(1, 3), b));
}

TEST_CASE("quadratic extension arithmetic with s^2 = -3") {
    QuadExt s = QuadExt::s();
    CHECK(s * s == QuadExt(-3));
    CHECK((QuadExt(1) + s) * (QuadExt(1) - s) == QuadExt(4));
    CHECK(s.conj() == -s);
    CHECK(s.norm() == Rational(3));
    CHECK(QuadExt(Rational(1, 2), Rational(-1, 3)).norm() ==
          Rational(1, 4) + Rational(1, 3));

    QuadExt a(Rational(2, 3), Rational(-5, 7));
    QuadExt b(Rational(-1, 2), Rational(4));
    CHECK(a / b * b == a);
    CHECK((a / a) == QuadExt(1));
    CHECK_THROWS_AS(a / QuadExt(0), finv::InvalidInputError);

    CHECK(finv::to_string(QuadExt(0)) == "0");
    CHECK(finv::to_string(s) == "s");
    CHECK(finv::to_string(QuadExt(Rational(1, 2), Rational(-1, 6))) == "1/2 - 1/6*s");
}
