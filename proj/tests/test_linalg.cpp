#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finv/linalg.hpp"

using finv::Int;
using finv::Rational;
using namespace finv::linalg;

namespace {

// Multiply a coefficient row against the original rows; used to validate the
// bookkeeping transforms returned by rref and hnf.
std::vector<Rational> combine(const std::vector<Rational>& coeffs, const QMatrix& rows) {
    std::vector<Rational> out(rows.front().size(), Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += coeffs[j] * rows[j][c];
    return out;
}

std::vector<Rational> zcombine(const std::vector<Int>& coeffs, const ZMatrix& rows) {
    std::vector<Rational> out(rows.front().size(), Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (std::size_t c = 0; c < out.size(); ++c)
            out[c] += Rational(coeffs[j]) * Rational(rows[j][c]);
    return out;
}

}  // namespace

TEST_CASE("reduced row echelon form") {
    QMatrix rows = {{1, 2}, {2, 4}};
    Rref r = rref(rows);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0] == std::vector<Rational>{1, 2});
    CHECK(r.pivot_cols == std::vector<int>{0});
    CHECK(combine(r.transform[0], rows) == r.rows[0]);

    QMatrix m = {{Rational(1, 2), 1, 0}, {1, 0, 1}, {0, 1, Rational(-1, 3)}};
    Rref e = rref(m);
    REQUIRE(e.rows.size() == 3);
    CHECK(e.pivot_cols == std::vector<int>{0, 1, 2});
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        CHECK(e.rows[i][i] == 1);  // normalized pivots on the diagonal
        CHECK(combine(e.transform[i], m) == e.rows[i]);
    }

    CHECK(rref({{0, 0}, {0, 0}}).rows.empty());
}

TEST_CASE("Hermite normal form of integer row lattices") {
    CHECK(hnf({{4}, {6}}) == ZMatrix{{2}});
    CHECK(hnf({{2, 0}, {0, 2}, {1, 1}}) == ZMatrix{{1, 1}, {0, 2}});
    CHECK(hnf({{0, 0}, {0, 0}}).empty());
    CHECK(hnf({{-3, 1}}) == ZMatrix{{3, -1}});

    // Above-pivot entries are reduced into [0, pivot).
    ZMatrix h = hnf({{1, 7}, {0, 3}});
    CHECK(h == ZMatrix{{1, 1}, {0, 3}});
}

TEST_CASE("HNF transform reconstructs its echelon rows") {
    ZMatrix rows = {{6, 4, 2}, {2, 8, 4}, {10, 2, 6}};
    HnfTransform t = hnf_with_transform(rows);
    CHECK(t.h == hnf(rows));
    REQUIRE(t.transform.size() == t.h.size());
    for (std::size_t i = 0; i < t.h.size(); ++i) {
        std::vector<Rational> want(t.h[i].begin(), t.h[i].end());
        CHECK(zcombine(t.transform[i], rows) == want);
    }
}

TEST_CASE("solving against an echelon lattice basis") {
    ZMatrix h = {{1, 1}, {0, 2}};
    auto x = solve_row_echelon(h, {3, 5});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Rational>{3, 1});

    auto half = solve_row_echelon(h, {1, 2});
    REQUIRE(half.has_value());
    CHECK(*half == std::vector<Rational>{1, Rational(1, 2)});

    CHECK_FALSE(solve_row_echelon({{1, 2}}, {1, 3}).has_value());
}

TEST_CASE("exact column solves classify their outcome") {
    // Unique: invertible 2x2.
    SolveOutcome u = solve_exact({{1, 0}, {1, 1}}, {3, 5});
    CHECK(u.status == SolveStatus::unique);
    CHECK(u.solution == std::vector<Rational>{-2, 5});

    // Underdetermined: dependent columns, consistent target.
    SolveOutcome d = solve_exact({{1, 2}, {2, 4}}, {3, 6});
    CHECK(d.status == SolveStatus::underdetermined);

    // Inconsistent: target outside the span.
    SolveOutcome i = solve_exact({{1, 2}}, {1, 3});
    CHECK(i.status == SolveStatus::inconsistent);
}
