#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finv/errors.hpp"
#include "finv/modforms.hpp"

using finv::GeneratorName;
using finv::Level;
using finv::ModularForm;
using finv::QSeries;
using finv::Rational;

namespace {

QSeries from_list(std::initializer_list<Rational> coeffs) {
    QSeries s(static_cast<int>(coeffs.size()));
    int j = 0;
    for (const Rational& c : coeffs) s.set_coeff(j++, c);
    return s;
}

}  // namespace

TEST_CASE("level plumbing") {
    CHECK(finv::level_from_int(2) == Level::two);
    CHECK(finv::level_from_int(3) == Level::three);
    CHECK_THROWS_AS(finv::level_from_int(5), finv::InvalidInputError);
    CHECK(finv::level_to_int(Level::three) == 3);

    CHECK(finv::generator_from_string("E1") == GeneratorName::e1);
    CHECK(finv::generator_from_string("epsilon") == GeneratorName::epsilon);
    CHECK_THROWS_AS(finv::generator_from_string("E2"), finv::InvalidInputError);
}

TEST_CASE("ring generator expansions match the frozen heads") {
    CHECK(finv::level_generator(Level::three, GeneratorName::e1, 5) ==
          from_list({1, 6, 0, 6, 6}));
    CHECK(finv::level_generator(Level::three, GeneratorName::e3, 5) ==
          from_list({1, -9, 27, -9, -117}));
    CHECK(finv::level_generator(Level::two, GeneratorName::delta4, 4) ==
          from_list({1, 24, 24, 96}));
    CHECK(finv::level_generator(Level::two, GeneratorName::epsilon, 5) ==
          from_list({0, 1, 8, 28, 64}));

    // Generators only exist at their own level.
    CHECK_THROWS_AS(finv::level_generator(Level::two, GeneratorName::e1, 4),
                    finv::InvalidInputError);
    CHECK_THROWS_AS(finv::level_generator(Level::three, GeneratorName::delta4, 4),
                    finv::InvalidInputError);
}

TEST_CASE("Eisenstein series carry the right constants and divisor sums") {
    QSeries g2 = finv::eisenstein_G(2, 6);
    CHECK(g2.coeff(0) == Rational(-1, 24));
    CHECK(g2.coeff(1) == 1);
    CHECK(g2.coeff(4) == 7);  // sigma_1(4)

    QSeries g4 = finv::eisenstein_G(4, 6);
    CHECK(g4.coeff(0) == Rational(1, 240));
    CHECK(g4.coeff(2) == 9);    // sigma_3(2)
    CHECK(g4.coeff(4) == 73);   // sigma_3(4)

    CHECK(finv::eisenstein_G(6, 4).coeff(0) == Rational(-1, 504));

    CHECK_THROWS_AS(finv::eisenstein_G(3, 8), finv::InvalidInputError);
    CHECK_THROWS_AS(finv::eisenstein_G(0, 8), finv::InvalidInputError);

    QSeries e4 = finv::eisenstein_E(4, 4);
    CHECK(e4 == from_list({1, 240, 2160, 6720}));
    CHECK(finv::eisenstein_E(6, 3) == from_list({1, -504, -16632}));
    CHECK(finv::eisenstein_E(2, 3) == from_list({1, -24, -72}));
}

TEST_CASE("the weight-1 generator squares to a theta-like expansion") {
    QSeries e1 = finv::level_generator(Level::three, GeneratorName::e1, 16);
    QSeries sq = e1 * e1;
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.coeff(1) == 12);
    CHECK(sq.coeff(2) == 36);
    CHECK(sq.coeff(3) == 12);

    // E1^2 = 12 (G_2(q) - 3 G_2(q^3)).
    QSeries g2 = finv::eisenstein_G(2, 16);
    QSeries rhs = (g2 - g2.substituted_qpow(3) * Rational(3)) * Rational(12);
    CHECK(sq == rhs);
}

TEST_CASE("monomial bases are ordered and weight-filtered") {
    auto b4 = finv::monomial_basis(4, Level::three);
    REQUIRE(b4.size() == 2);
    CHECK(b4[0].terms().begin()->first == ModularForm::Key{4, 0});
    CHECK(b4[1].terms().begin()->first == ModularForm::Key{1, 1});

    auto b6 = finv::monomial_basis(6, Level::three);
    REQUIRE(b6.size() == 3);
    CHECK(b6[2].terms().begin()->first == ModularForm::Key{0, 2});

    CHECK(finv::monomial_basis(5, Level::two).empty());
    auto c4 = finv::monomial_basis(4, Level::two);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].terms().begin()->first == ModularForm::Key{2, 0});
    CHECK(c4[1].terms().begin()->first == ModularForm::Key{0, 1});

    auto b0 = finv::monomial_basis(0, Level::three);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == ModularForm::constant(Level::three, 1));
    CHECK_THROWS_AS(finv::monomial_basis(-2, Level::three), finv::InvalidInputError);
}

TEST_CASE("graded forms expand, split and multiply") {
    // delta itself is the monomial generator: constant term 1/4.
    ModularForm delta = ModularForm::monomial(Level::two, 1, 0);
    QSeries d = delta.expand(4);
    CHECK(d == from_list({Rational(1, 4), 6, 6, 24}));

    ModularForm f = ModularForm::monomial(Level::three, 2, 0, Rational(3)) +
                    ModularForm::constant(Level::three, Rational(-1, 2));
    CHECK(f.max_weight() == 2);
    CHECK_FALSE(f.is_homogeneous());
    int w = -1;
    CHECK(f.weight_part(2).is_homogeneous(&w));
    CHECK(w == 2);
    CHECK(f.weights() == std::vector<int>{0, 2});
    CHECK(f.expand(3).coeff(0) == Rational(5, 2));  // 3*1 - 1/2

    ModularForm e1 = ModularForm::monomial(Level::three, 1, 0);
    CHECK(e1.pow(2) == e1 * e1);
    CHECK((e1 * e1).monomial_weight({2, 0}) == 2);
    CHECK(finv::monomial_name(Level::three, 4, 0) == "E1^4");
    CHECK(finv::monomial_name(Level::three, 1, 1) == "E1*E3");
    CHECK(finv::monomial_name(Level::two, 2, 0) == "delta^2");
    CHECK(finv::monomial_name(Level::two, 0, 0) == "1");
    CHECK(finv::to_string(ModularForm::monomial(Level::three, 4, 0, 9) -
                          ModularForm::monomial(Level::three, 1, 1, 8)) ==
          "9*E1^4 - 8*E1*E3");
}

TEST_CASE("level-1 forms embed exactly into the generator ring") {
    QSeries e4 = finv::eisenstein_E(4, 24);
    ModularForm f = finv::embed_level1(e4, 4, Level::three, 20);
    REQUIRE(f.terms().size() == 2);
    CHECK(f.terms().at({4, 0}) == 9);
    CHECK(f.terms().at({1, 1}) == -8);
    CHECK(f.expand(20) == e4.truncated(20));

    // Round trip at level two and for weight 6.
    QSeries e6 = finv::eisenstein_E(6, 24);
    ModularForm g = finv::embed_level1(e6, 6, Level::three, 22);
    CHECK(g.expand(22) == e6.truncated(22));
    ModularForm h = finv::embed_level1(e4, 4, Level::two, 20);
    CHECK(h.expand(20) == e4.truncated(20));

    // G_2 is not modular, and the solver notices.
    CHECK_THROWS_AS(finv::embed_level1(finv::eisenstein_G(2, 24), 2, Level::three, 16),
                    finv::NotAModularFormError);

    // Precision guards: the margin and the target's own precision.
    CHECK_THROWS_AS(finv::embed_level1(e4, 4, Level::three, 10),
                    finv::InsufficientPrecisionError);
    CHECK_THROWS_AS(finv::embed_level1(finv::eisenstein_E(4, 10), 4, Level::three, 16),
                    finv::InsufficientPrecisionError);
}

TEST_CASE("fault injection corrupts one generator and is reversible") {
    QSeries clean = finv::level_generator(Level::three, GeneratorName::e3, 5);
    CHECK(clean.coeff(1) == -9);

    finv::testing::set_e3_corruption(true);
    CHECK(finv::testing::e3_corruption_enabled());
    QSeries bad = finv::level_generator(Level::three, GeneratorName::e3, 5);
    CHECK(bad.coeff(1) != -9);
    // An embed against the corrupted basis cannot reproduce a true form.
    CHECK_THROWS_AS(
        finv::embed_level1(finv::eisenstein_E(4, 24), 4, Level::three, 20),
        finv::NotAModularFormError);
    finv::testing::set_e3_corruption(false);

    CHECK(finv::level_generator(Level::three, GeneratorName::e3, 5) == clean);
}
